#pragma once

#include <string_view>

#include "mananet/json_io.hpp"

namespace mananet {

/// Parses the line-oriented reaction format:
///
///     # ATP hydrolysis
///     hydrolysis: ATP + H2O -> ADP + Pi
///     u: A + B -> C mana: consume 1
///     u3: X -> Y mana: consume 1, produce {u3:1}
///     marking: 2 ATP + H2O
///     pool: u=2, u3=1
///
/// Places are declared by use. Either side of a reaction may be empty.
/// When any reaction carries a `mana:` clause the document gets a policy,
/// and reactions without one default to consume 1, produce nothing.
/// Errors are ParseError with 1-based line and column.
NetDocument parse_reaction_dsl(std::string_view text);

/// Picks the parser by content: JSON if the first non-blank byte is `{`.
NetDocument parse_document(std::string_view text);

}  // namespace mananet
