#include "polypres/error.hpp"
#include "polypres/hash.hpp"

namespace polypres {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::composite_characteristic: return "CompositeCharacteristic";
    case Errc::not_prime_power: return "NotPrimePower";
    case Errc::size_bound: return "SizeBound";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::tower_mismatch: return "TowerMismatch";
    case Errc::same_point: return "SamePoint";
    case Errc::same_line: return "SameLine";
    case Errc::axiom_violation: return "AxiomViolation";
    case Errc::characteristic_three: return "CharacteristicThree";
    case Errc::plane_mismatch: return "PlaneMismatch";
    case Errc::not_bijective: return "NotBijective";
    case Errc::not_certified: return "NotCertified";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::search_exhausted: return "SearchExhausted";
    case Errc::bad_alphabet: return "BadAlphabet";
    case Errc::bad_prefix: return "BadPrefix";
    case Errc::proper_power: return "ProperPower";
    case Errc::cyclic_power: return "CyclicPower";
    case Errc::same_letter: return "SameLetter";
    case Errc::stale_input: return "StaleInput";
    case Errc::unchecked_presentation: return "UncheckedPresentation";
    case Errc::bad_vertex: return "BadVertex";
    case Errc::disconnected: return "Disconnected";
    case Errc::io_error: return "IoError";
    case Errc::parse_error: return "ParseError";
    case Errc::internal_inconsistency: return "InternalInconsistency";
  }
  return "UnknownError";
}

std::string hash_hex(uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[h & 0xf];
    h >>= 4;
  }
  return s;
}

uint64_t parse_hash_hex(const std::string& s) {
  if (s.size() != 16) fail(Errc::parse_error, "bad hash literal: " + s);
  uint64_t h = 0;
  for (char ch : s) {
    h <<= 4;
    if (ch >= '0' && ch <= '9') h |= static_cast<uint64_t>(ch - '0');
    else if (ch >= 'a' && ch <= 'f') h |= static_cast<uint64_t>(ch - 'a' + 10);
    else fail(Errc::parse_error, "bad hash literal: " + s);
  }
  return h;
}

} // namespace polypres
