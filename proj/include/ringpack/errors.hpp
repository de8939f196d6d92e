#pragma once

#include <stdexcept>

namespace ringpack {

// Malformed input text (CSV rows, JSON documents).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structurally well-formed input whose values break a documented invariant.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ringpack
