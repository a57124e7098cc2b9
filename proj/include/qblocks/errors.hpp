#pragma once

#include <stdexcept>
#include <string>

namespace qblocks {

// A precondition of a domain operation was violated (bad weight, wrong
// atypicality, non-dominant input, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text or JSON input.
class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace qblocks
