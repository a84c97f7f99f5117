#pragma once

#include <stdexcept>
#include <string>

#include "maxatom/core.hpp"

namespace maxatom {

/// Bad input text; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Instance text:
///   maxatom 1
///   vars <n>
///   atom <i> <j> <k> <r>     # max(x_i, x_j) + r >= x_k
/// '#' starts a comment, blank lines are skipped, offsets are decimals or p/q.
AtomSystem parse_instance(const std::string& text);

/// Canonical re-emission: sorted atoms, reduced fraction offsets. Parsing the
/// result reproduces the system byte-for-byte on the next emission.
std::string emit_instance(const AtomSystem& system);

/// Solution text: "status sat" followed by one "x<i> <value>" line per
/// variable (value a rational or -inf), or just "status trivial".
Assignment parse_solution(const std::string& text, int nvars);

std::string emit_solution(bool sat, const Assignment& a);

}  // namespace maxatom
