#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "polypres/error.hpp"

namespace polypres {

class FieldTower;

// Element of K = F_{q^3}: three coordinates over F_q in the power basis of
// the tower's cubic modulus. F_q scalars are integer encodings 0..q-1
// (base-p digits of the coefficient vector over F_p).
class FieldElement {
public:
  FieldElement() = default;

  const FieldTower* tower() const { return tower_; }
  const std::array<uint8_t, 3>& coeffs() const { return c_; }

  // c0 + c1*q + c2*q^2; total order used for canonical representatives
  int enc() const;

  bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0; }
  bool in_base_field() const { return c_[1] == 0 && c_[2] == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

private:
  friend class FieldTower;
  FieldElement(const FieldTower* tw, std::array<uint8_t, 3> c)
      : tower_(tw), c_(c) {}

  const FieldTower* tower_ = nullptr;
  std::array<uint8_t, 3> c_{0, 0, 0};
};

// Monic polynomial over F_q: x^degree + sum coeffs[i] x^i.
struct MinimalPolynomial {
  std::vector<uint8_t> coeffs; // low-to-high, leading 1 implied
  int degree() const { return static_cast<int>(coeffs.size()); }
  bool operator==(const MinimalPolynomial&) const = default;
};

// F_p subset F_q subset K = F_{q^3}. Moduli are the first irreducible monic
// polynomials of the required degrees in increasing integer encoding
// (coefficients low-to-high), so towers are identical across runs.
class FieldTower {
public:
  FieldTower(int char_p, int base_degree_e);

  FieldTower(const FieldTower&) = delete;
  FieldTower& operator=(const FieldTower&) = delete;

  int characteristic() const { return p_; }
  int base_degree() const { return e_; }
  int q() const { return q_; }
  int order_k() const { return big_q_; } // Q = q^3

  // full coefficient list over F_p, low-to-high, including the leading 1
  const std::vector<uint8_t>& base_modulus() const { return base_mod_; }
  // m0, m1, m2 of x^3 + m2 x^2 + m1 x + m0 over F_q
  const std::array<uint8_t, 3>& ext_modulus() const { return ext_mod_; }

  // scalar arithmetic in F_q (encodings 0..q-1)
  uint8_t sc_add(uint8_t a, uint8_t b) const { return add_[idx(a, b)]; }
  uint8_t sc_mul(uint8_t a, uint8_t b) const { return mul_[idx(a, b)]; }
  uint8_t sc_neg(uint8_t a) const { return neg_[a]; }
  uint8_t sc_sub(uint8_t a, uint8_t b) const { return add_[idx(a, neg_[b])]; }
  uint8_t sc_inv(uint8_t a) const; // division_by_zero on 0

  FieldElement element(uint8_t c0, uint8_t c1, uint8_t c2) const;
  FieldElement from_enc(int enc) const;
  FieldElement zero() const { return element(0, 0, 0); }
  FieldElement one() const { return element(1, 0, 0); }
  FieldElement scalar(uint8_t a) const { return element(a, 0, 0); }
  FieldElement gen() const { return element(0, 1, 0); } // power-basis generator

  FieldElement add(const FieldElement&, const FieldElement&) const;
  FieldElement sub(const FieldElement&, const FieldElement&) const;
  FieldElement mul(const FieldElement&, const FieldElement&) const;
  FieldElement neg(const FieldElement&) const;
  FieldElement inv(const FieldElement&) const; // division_by_zero on 0
  FieldElement pow(const FieldElement&, uint64_t n) const;

  FieldElement frobenius(const FieldElement& g) const; // g^q
  // Tr(g) = g + g^q + g^{q^2}, always a scalar; returned as its F_q encoding
  uint8_t trace(const FieldElement& g) const;

  MinimalPolynomial minimal_poly(const FieldElement& g) const;
  FieldElement eval(const MinimalPolynomial& m, const FieldElement& g) const;

private:
  static size_t idx(uint8_t a, uint8_t b) { return a * 16u + b; }
  void check_same(const FieldElement&, const FieldElement&) const;

  int p_ = 0, e_ = 0, q_ = 0, big_q_ = 0;
  std::vector<uint8_t> base_mod_;
  std::array<uint8_t, 3> ext_mod_{0, 0, 0};
  std::array<uint8_t, 256> add_{}, mul_{};
  std::array<uint8_t, 16> neg_{}, inv_{};
  std::array<std::array<uint8_t, 3>, 2> red_{}; // u^3, u^4 reduced
};

std::string to_string(const FieldElement&);

} // namespace polypres
