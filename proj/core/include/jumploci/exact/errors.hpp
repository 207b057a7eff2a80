#pragma once

#include <stdexcept>
#include <string>

namespace jl {

// Malformed input documents (bad JSON shape, wrong field types).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Mathematical hypotheses of an operation are violated by otherwise
// well-formed input. Other std::invalid_argument throws are treated alike.
struct HypothesisError : std::invalid_argument {
  explicit HypothesisError(const std::string& what) : std::invalid_argument(what) {}
};

// An identity that must hold by construction failed.
struct InvariantError : std::logic_error {
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace jl
