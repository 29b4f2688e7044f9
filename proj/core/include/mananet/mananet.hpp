#pragma once

#include "mananet/dot.hpp"
#include "mananet/dsl.hpp"
#include "mananet/equivalence.hpp"
#include "mananet/error.hpp"
#include "mananet/execution.hpp"
#include "mananet/functor.hpp"
#include "mananet/json_io.hpp"
#include "mananet/law_report.hpp"
#include "mananet/mana_external.hpp"
#include "mananet/mana_internal.hpp"
#include "mananet/multiset.hpp"
#include "mananet/net.hpp"
#include "mananet/random.hpp"
#include "mananet/reach.hpp"
#include "mananet/symbol.hpp"
