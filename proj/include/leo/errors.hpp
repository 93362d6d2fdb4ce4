#pragma once

#include <stdexcept>
#include <string>

namespace leo {

// Error taxonomy shared by the C++ core and the C API layer.
enum class errc {
  invalid_argument,  // malformed input (bad prime, mismatched fields, ...)
  precision,         // not enough known digits or coefficients to answer
  domain,            // outside the mathematical domain (pole, non-unit, ...)
  hypothesis,        // a checked hypothesis of a theorem-level routine fails
  incomplete,        // no certified answer within the configured bounds
  internal           // invariant breach; indicates a bug, not bad input
};

class error : public std::runtime_error {
 public:
  error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  errc kind() const noexcept { return kind_; }

 private:
  errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& what) { throw error(kind, what); }

}  // namespace leo
