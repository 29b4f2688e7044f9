#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "mananet/symbol.hpp"

namespace mananet {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A place or transition name that the net does not declare.
class UnknownSymbolError : public Error {
 public:
  UnknownSymbolError(std::string_view what_kind, Symbol s)
      : Error("unknown " + std::string(what_kind) + " '" + s.str() + "'"), symbol_(s) {}
  Symbol symbol() const { return symbol_; }

 private:
  Symbol symbol_;
};

/// A firing was attempted in a marking that does not cover its inputs.
/// `step()` is set when the failure happened while replaying a trace.
class NotEnabledError : public Error {
 public:
  NotEnabledError(Symbol transition, std::optional<std::size_t> step = std::nullopt);
  Symbol transition() const { return transition_; }
  std::optional<std::size_t> step() const { return step_; }

 private:
  Symbol transition_;
  std::optional<std::size_t> step_;
};

/// A net transformation was asked for something it cannot build.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace mananet
