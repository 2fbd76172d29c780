#include "polypres/gf.hpp"

#include <algorithm>

namespace polypres {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// dense coefficient vectors over F_p, low-to-high, no trailing zeros enforced
using Poly = std::vector<int>;

Poly poly_mod(Poly num, const Poly& den, int p) {
  int dd = static_cast<int>(den.size()) - 1;
  while (static_cast<int>(num.size()) - 1 >= dd) {
    int dn = static_cast<int>(num.size()) - 1;
    if (num[dn] == 0) {
      num.pop_back();
      continue;
    }
    // den is monic, so the factor is just the leading coefficient
    int f = num[dn];
    for (int i = 0; i <= dd; ++i) {
      int& c = num[dn - dd + i];
      c = ((c - f * den[i]) % p + p) % p;
    }
    num.pop_back();
  }
  return num;
}

bool is_zero(const Poly& a) {
  return std::all_of(a.begin(), a.end(), [](int c) { return c == 0; });
}

// trial division by every monic polynomial of degree 1..deg/2
bool irreducible_over_fp(const Poly& f, int p) {
  int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long enc = 0; enc < count; ++enc) {
      Poly g(d + 1, 0);
      long long e = enc;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<int>(e % p);
        e /= p;
      }
      g[d] = 1;
      if (is_zero(poly_mod(f, g, p))) return false;
    }
  }
  return true;
}

std::vector<uint8_t> first_irreducible(int deg, int p) {
  long long count = 1;
  for (int i = 0; i < deg; ++i) count *= p;
  for (long long enc = 0; enc < count; ++enc) {
    Poly f(deg + 1, 0);
    long long e = enc;
    for (int i = 0; i < deg; ++i) {
      f[i] = static_cast<int>(e % p);
      e /= p;
    }
    f[deg] = 1;
    if (irreducible_over_fp(f, p)) {
      std::vector<uint8_t> out(f.begin(), f.end());
      return out;
    }
  }
  fail(Errc::internal_inconsistency,
       "no irreducible polynomial of degree " + std::to_string(deg) +
           " over F_" + std::to_string(p));
}

} // namespace

FieldTower::FieldTower(int char_p, int base_degree_e) {
  if (!is_prime(char_p))
    fail(Errc::composite_characteristic,
         std::to_string(char_p) + " is not prime");
  if (base_degree_e < 1)
    fail(Errc::size_bound, "base degree must be positive");

  long long q = 1;
  for (int i = 0; i < base_degree_e; ++i) {
    q *= char_p;
    if (q > 16)
      fail(Errc::size_bound, "q = " + std::to_string(char_p) + "^" +
                                 std::to_string(base_degree_e) +
                                 " exceeds the desk-scale cap of 16");
  }

  p_ = char_p;
  e_ = base_degree_e;
  q_ = static_cast<int>(q);
  big_q_ = q_ * q_ * q_;
  base_mod_ = first_irreducible(e_, p_);

  // F_q scalar tables from base-p digit vectors reduced mod base_mod_
  auto dec = [&](uint8_t a) {
    Poly c(e_);
    int v = a;
    for (int i = 0; i < e_; ++i) {
      c[i] = v % p_;
      v /= p_;
    }
    return c;
  };
  auto enc_of = [&](const Poly& c) {
    int v = 0;
    for (int i = e_ - 1; i >= 0; --i) v = v * p_ + (i < (int)c.size() ? c[i] : 0);
    return static_cast<uint8_t>(v);
  };
  Poly basef(base_mod_.begin(), base_mod_.end());
  for (int a = 0; a < q_; ++a) {
    Poly da = dec(static_cast<uint8_t>(a));
    Poly na(e_);
    for (int i = 0; i < e_; ++i) na[i] = (p_ - da[i]) % p_;
    neg_[a] = enc_of(na);
    for (int b = 0; b < q_; ++b) {
      Poly db = dec(static_cast<uint8_t>(b));
      Poly s(e_);
      for (int i = 0; i < e_; ++i) s[i] = (da[i] + db[i]) % p_;
      add_[idx(a, b)] = enc_of(s);
      Poly prod(2 * e_ - 1, 0);
      for (int i = 0; i < e_; ++i)
        for (int j = 0; j < e_; ++j)
          prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      mul_[idx(a, b)] = enc_of(poly_mod(prod, basef, p_));
    }
  }
  inv_[0] = 0;
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[idx(a, b)] == 1) {
        inv_[a] = static_cast<uint8_t>(b);
        break;
      }

  // cubic modulus over F_q: first root-free monic cubic by encoding
  bool found = false;
  for (int enc = 0; enc < q_ * q_ * q_ && !found; ++enc) {
    std::array<uint8_t, 3> m = {static_cast<uint8_t>(enc % q_),
                                static_cast<uint8_t>((enc / q_) % q_),
                                static_cast<uint8_t>((enc / (q_ * q_)) % q_)};
    bool rootfree = true;
    for (int g = 0; g < q_ && rootfree; ++g) {
      uint8_t g2 = sc_mul((uint8_t)g, (uint8_t)g);
      uint8_t v = sc_mul(g2, (uint8_t)g);
      v = sc_add(v, sc_mul(m[2], g2));
      v = sc_add(v, sc_mul(m[1], (uint8_t)g));
      v = sc_add(v, m[0]);
      if (v == 0) rootfree = false;
    }
    if (rootfree) {
      ext_mod_ = m;
      found = true;
    }
  }
  if (!found)
    fail(Errc::internal_inconsistency, "no irreducible cubic over F_q");

  // u^3 = -(m2 u^2 + m1 u + m0), u^4 = u * u^3
  for (int i = 0; i < 3; ++i) red_[0][i] = sc_neg(ext_mod_[i]);
  red_[1] = {sc_mul(red_[0][2], red_[0][0]),
             sc_add(red_[0][0], sc_mul(red_[0][2], red_[0][1])),
             sc_add(red_[0][1], sc_mul(red_[0][2], red_[0][2]))};
}

uint8_t FieldTower::sc_inv(uint8_t a) const {
  if (a == 0) fail(Errc::division_by_zero, "scalar inverse of 0");
  return inv_[a];
}

FieldElement FieldTower::element(uint8_t c0, uint8_t c1, uint8_t c2) const {
  if (c0 >= q_ || c1 >= q_ || c2 >= q_)
    fail(Errc::internal_inconsistency, "coefficient out of range");
  return FieldElement(this, {c0, c1, c2});
}

FieldElement FieldTower::from_enc(int enc) const {
  if (enc < 0 || enc >= big_q_)
    fail(Errc::internal_inconsistency, "encoding out of range");
  return element(static_cast<uint8_t>(enc % q_),
                 static_cast<uint8_t>((enc / q_) % q_),
                 static_cast<uint8_t>(enc / (q_ * q_)));
}

void FieldTower::check_same(const FieldElement& a, const FieldElement& b) const {
  if (a.tower() != this || b.tower() != this)
    fail(Errc::tower_mismatch, "elements of different towers");
}

FieldElement FieldTower::add(const FieldElement& a, const FieldElement& b) const {
  check_same(a, b);
  return FieldElement(this, {sc_add(a.c_[0], b.c_[0]), sc_add(a.c_[1], b.c_[1]),
                             sc_add(a.c_[2], b.c_[2])});
}

FieldElement FieldTower::sub(const FieldElement& a, const FieldElement& b) const {
  return add(a, neg(b));
}

FieldElement FieldTower::neg(const FieldElement& a) const {
  check_same(a, a);
  return FieldElement(this,
                      {sc_neg(a.c_[0]), sc_neg(a.c_[1]), sc_neg(a.c_[2])});
}

FieldElement FieldTower::mul(const FieldElement& a, const FieldElement& b) const {
  check_same(a, b);
  uint8_t prod[5] = {0, 0, 0, 0, 0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      prod[i + j] = sc_add(prod[i + j], sc_mul(a.c_[i], b.c_[j]));
  std::array<uint8_t, 3> r = {prod[0], prod[1], prod[2]};
  for (int d = 0; d < 2; ++d) {
    uint8_t c = prod[3 + d];
    if (c == 0) continue;
    for (int i = 0; i < 3; ++i) r[i] = sc_add(r[i], sc_mul(c, red_[d][i]));
  }
  return FieldElement(this, r);
}

FieldElement FieldTower::pow(const FieldElement& a, uint64_t n) const {
  check_same(a, a);
  FieldElement r = one();
  FieldElement base = a;
  while (n > 0) {
    if (n & 1) r = mul(r, base);
    base = mul(base, base);
    n >>= 1;
  }
  return r;
}

FieldElement FieldTower::inv(const FieldElement& a) const {
  check_same(a, a);
  if (a.is_zero()) fail(Errc::division_by_zero, "inverse of 0 in K");
  return pow(a, static_cast<uint64_t>(big_q_) - 2);
}

FieldElement FieldTower::frobenius(const FieldElement& a) const {
  return pow(a, static_cast<uint64_t>(q_));
}

uint8_t FieldTower::trace(const FieldElement& g) const {
  check_same(g, g);
  FieldElement gq = frobenius(g);
  FieldElement t = add(add(g, gq), frobenius(gq));
  if (!t.in_base_field())
    fail(Errc::internal_inconsistency, "trace left the base field");
  return t.coeffs()[0];
}

FieldElement FieldTower::eval(const MinimalPolynomial& m,
                              const FieldElement& g) const {
  FieldElement acc = one(); // leading coefficient
  for (int i = m.degree() - 1; i >= 0; --i)
    acc = add(mul(acc, g), scalar(m.coeffs[i]));
  return acc;
}

MinimalPolynomial FieldTower::minimal_poly(const FieldElement& g) const {
  check_same(g, g);
  // powers 1, g, g^2, g^3 as rows; first linear dependency gives the degree
  std::vector<std::array<uint8_t, 3>> pw;
  FieldElement cur = one();
  for (int d = 0; d <= 3; ++d) {
    pw.push_back(cur.coeffs());
    cur = mul(cur, g);
  }
  for (int d = 1; d <= 3; ++d) {
    // solve sum_{i<d} c_i g^i = -g^d by elimination over F_q
    std::vector<std::vector<uint8_t>> m(3, std::vector<uint8_t>(d + 1, 0));
    for (int row = 0; row < 3; ++row) {
      for (int col = 0; col < d; ++col) m[row][col] = pw[col][row];
      m[row][d] = sc_neg(pw[d][row]);
    }
    int rank = 0;
    std::vector<int> pivot_col(3, -1);
    for (int col = 0; col < d && rank < 3; ++col) {
      int sel = -1;
      for (int row = rank; row < 3; ++row)
        if (m[row][col] != 0) {
          sel = row;
          break;
        }
      if (sel < 0) continue;
      std::swap(m[sel], m[rank]);
      uint8_t iv = sc_inv(m[rank][col]);
      for (int c = col; c <= d; ++c) m[rank][c] = sc_mul(m[rank][c], iv);
      for (int row = 0; row < 3; ++row) {
        if (row == rank || m[row][col] == 0) continue;
        uint8_t f = m[row][col];
        for (int c = col; c <= d; ++c)
          m[row][c] = sc_sub(m[row][c], sc_mul(f, m[rank][c]));
      }
      pivot_col[rank] = col;
      ++rank;
    }
    bool consistent = true;
    for (int row = rank; row < 3; ++row)
      if (m[row][d] != 0) consistent = false;
    if (!consistent) continue;
    MinimalPolynomial out;
    out.coeffs.assign(d, 0);
    for (int r = 0; r < rank; ++r) out.coeffs[pivot_col[r]] = m[r][d];
    if (d == 2)
      fail(Errc::internal_inconsistency,
           "degree-2 dependency in a cubic extension");
    if (!eval(out, g).is_zero())
      fail(Errc::internal_inconsistency, "minimal polynomial does not vanish");
    return out;
  }
  fail(Errc::internal_inconsistency, "no dependency among 1, g, g^2, g^3");
}

int FieldElement::enc() const {
  if (!tower_) return 0;
  int q = tower_->q();
  return c_[0] + c_[1] * q + c_[2] * q * q;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  return tower_->add(*this, o);
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  return tower_->sub(*this, o);
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  return tower_->mul(*this, o);
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  return tower_->mul(*this, tower_->inv(o));
}
FieldElement FieldElement::operator-() const { return tower_->neg(*this); }

bool FieldElement::operator==(const FieldElement& o) const {
  if (tower_ != o.tower_)
    fail(Errc::tower_mismatch, "comparing elements of different towers");
  return c_ == o.c_;
}

std::string to_string(const FieldElement& g) {
  const auto& c = g.coeffs();
  return "g" + std::to_string(g.enc()) + "=(" + std::to_string(c[0]) + "," +
         std::to_string(c[1]) + "," + std::to_string(c[2]) + ")";
}

} // namespace polypres
