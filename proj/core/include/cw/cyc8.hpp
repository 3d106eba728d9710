#ifndef CW_CYC8_HPP
#define CW_CYC8_HPP

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cw::cyc {

struct OverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

// Element of Z[zeta_8, 1/2]: (n0 + n1*z + n2*z^2 + n3*z^3) / 2^den2 with
// z^4 = -1. Normalized so that den2 = 0 or some ni is odd. This ring
// contains every entry of the Clifford-Weil generator matrices
// (i = z^2, sqrt(2) = z - z^3) and is closed under their products, so
// group closure and Molien char-poly work stay in fixed-size values.
struct Cyc8 {
  std::array<std::int64_t, 4> n{0, 0, 0, 0};
  int den2 = 0;

  Cyc8() = default;
  explicit Cyc8(std::int64_t v) : n{v, 0, 0, 0} {}
  Cyc8(std::array<std::int64_t, 4> nn, int d) : n(nn), den2(d) { normalize(); }

  static Cyc8 zero() { return Cyc8(); }
  static Cyc8 one() { return Cyc8(1); }
  static Cyc8 zeta() { return Cyc8({0, 1, 0, 0}, 0); }
  static Cyc8 i() { return Cyc8({0, 0, 1, 0}, 0); }
  static Cyc8 sqrt2() { return Cyc8({0, 1, 0, -1}, 0); }
  static Cyc8 inv_sqrt2() { return Cyc8({0, 1, 0, -1}, 1); }
  // i^k for any integer k.
  static Cyc8 i_pow(int k);
  // 2^(-e/2) for e >= 0.
  static Cyc8 half_pow_sqrt(int e);

  void normalize();
  bool is_zero() const { return !n[0] && !n[1] && !n[2] && !n[3]; }
  bool is_rational() const { return !n[1] && !n[2] && !n[3]; }
  mpq_class to_mpq() const;

  Cyc8 operator+(const Cyc8& o) const;
  Cyc8 operator-(const Cyc8& o) const;
  Cyc8 operator-() const;
  Cyc8 operator*(const Cyc8& o) const;
  bool operator==(const Cyc8& o) const = default;

  // Complex conjugation: zeta -> zeta^{-1} = -zeta^3.
  Cyc8 conj() const;

  std::string str() const;
};

// Element of Q(zeta_8) with exact rational coordinates; used where
// polynomial coefficients meet cyclotomic scalars.
struct CycQ {
  std::array<mpq_class, 4> c{};

  CycQ() = default;
  CycQ(int v) { c[0] = v; }
  explicit CycQ(const mpq_class& v) { c[0] = v; }
  explicit CycQ(const Cyc8& v);

  bool is_zero() const;
  bool is_rational() const { return c[1] == 0 && c[2] == 0 && c[3] == 0; }

  CycQ operator+(const CycQ& o) const;
  CycQ operator-(const CycQ& o) const;
  CycQ operator*(const CycQ& o) const;
  bool operator==(const CycQ& o) const { return c == o.c; }
};

}  // namespace cw::cyc

#endif
