// Copyright (c) the simbound authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SIMBOUND_ERRORS_HPP
#define SIMBOUND_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace simbound {

// Parameter combination does not describe a valid probability law
// (joint triple outside the feasible region, negatively correlated
// coupling, similarity below the independence level, ...).
class infeasible_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed input data; carries the 1-based line number of the offence.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& msg, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace simbound

#endif
