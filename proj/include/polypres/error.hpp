#pragma once

#include <stdexcept>
#include <string>

namespace polypres {

enum class Errc {
  // field tower construction
  composite_characteristic,
  not_prime_power,
  size_bound,
  // element arithmetic
  division_by_zero,
  tower_mismatch,
  // plane queries
  same_point,
  same_line,
  axiom_violation,
  // bijections
  characteristic_three,
  plane_mismatch,
  not_bijective,
  not_certified,
  // search
  budget_exceeded,
  search_exhausted,
  // words
  bad_alphabet,
  bad_prefix,
  proper_power,
  cyclic_power,
  same_letter,
  // presentations and complexes
  stale_input,
  unchecked_presentation,
  bad_vertex,
  disconnected,
  // i/o
  io_error,
  parse_error,
  // should never escape the library
  internal_inconsistency,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

} // namespace polypres
