#include "cw/cyc8.hpp"

#include <sstream>

namespace cw::cyc {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("cyc8 add");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("cyc8 sub");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("cyc8 mul");
  return r;
}

std::int64_t checked_shl(std::int64_t a, int s) {
  if (a == 0) return 0;
  if (s > 62) throw OverflowError("cyc8 shift");
  std::int64_t r = a << s;
  if (r >> s != a) throw OverflowError("cyc8 shift");
  return r;
}

}  // namespace

void Cyc8::normalize() {
  while (den2 > 0 && !(n[0] & 1) && !(n[1] & 1) && !(n[2] & 1) &&
         !(n[3] & 1)) {
    for (auto& x : n) x >>= 1;
    --den2;
  }
  if (is_zero()) den2 = 0;
}

Cyc8 Cyc8::i_pow(int k) {
  k %= 4;
  if (k < 0) k += 4;
  switch (k) {
    case 0: return one();
    case 1: return i();
    case 2: return Cyc8(-1);
    default: return Cyc8({0, 0, -1, 0}, 0);
  }
}

Cyc8 Cyc8::half_pow_sqrt(int e) {
  // 2^(-e/2): even e is a plain power of 1/2, odd e carries one inv_sqrt2.
  Cyc8 r = (e % 2) ? inv_sqrt2() : one();
  r.den2 += e / 2;
  r.normalize();
  return r;
}

mpq_class Cyc8::to_mpq() const {
  if (!is_rational()) throw std::logic_error("cyc8 value is not rational");
  mpq_class num(n[0]);
  mpq_class den(1);
  mpz_mul_2exp(den.get_num_mpz_t(), den.get_num_mpz_t(), den2);
  return num / den;
}

Cyc8 Cyc8::operator+(const Cyc8& o) const {
  int d = std::max(den2, o.den2);
  Cyc8 r;
  r.den2 = d;
  for (int t = 0; t < 4; ++t)
    r.n[t] = checked_add(checked_shl(n[t], d - den2),
                         checked_shl(o.n[t], d - o.den2));
  r.normalize();
  return r;
}

Cyc8 Cyc8::operator-(const Cyc8& o) const { return *this + (-o); }

Cyc8 Cyc8::operator-() const {
  Cyc8 r = *this;
  for (auto& x : r.n) x = checked_sub(0, x);
  return r;
}

Cyc8 Cyc8::operator*(const Cyc8& o) const {
  // (sum a_s z^s)(sum b_t z^t) with z^4 = -1.
  std::array<std::int64_t, 4> out{0, 0, 0, 0};
  for (int s = 0; s < 4; ++s) {
    if (!n[s]) continue;
    for (int t = 0; t < 4; ++t) {
      if (!o.n[t]) continue;
      std::int64_t p = checked_mul(n[s], o.n[t]);
      int e = s + t;
      if (e >= 4) {
        e -= 4;
        p = checked_sub(0, p);
      }
      out[e] = checked_add(out[e], p);
    }
  }
  Cyc8 r;
  r.n = out;
  r.den2 = den2 + o.den2;
  r.normalize();
  return r;
}

Cyc8 Cyc8::conj() const {
  // z -> z^7 = -z^3: coordinate map (a0,a1,a2,a3) -> (a0,-a3,-a2,-a1).
  Cyc8 r;
  r.n = {n[0], checked_sub(0, n[3]), checked_sub(0, n[2]),
         checked_sub(0, n[1])};
  r.den2 = den2;
  r.normalize();
  return r;
}

std::string Cyc8::str() const {
  std::ostringstream os;
  os << "(" << n[0] << "," << n[1] << "," << n[2] << "," << n[3] << ")/2^"
     << den2;
  return os.str();
}

CycQ::CycQ(const Cyc8& v) {
  mpq_class den(1);
  mpz_mul_2exp(den.get_num_mpz_t(), den.get_num_mpz_t(), v.den2);
  for (int t = 0; t < 4; ++t) {
    c[t] = mpq_class(static_cast<long>(v.n[t])) / den;
    c[t].canonicalize();
  }
}

bool CycQ::is_zero() const {
  return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0;
}

CycQ CycQ::operator+(const CycQ& o) const {
  CycQ r;
  for (int t = 0; t < 4; ++t) r.c[t] = c[t] + o.c[t];
  return r;
}

CycQ CycQ::operator-(const CycQ& o) const {
  CycQ r;
  for (int t = 0; t < 4; ++t) r.c[t] = c[t] - o.c[t];
  return r;
}

CycQ CycQ::operator*(const CycQ& o) const {
  CycQ r;
  for (int s = 0; s < 4; ++s) {
    if (c[s] == 0) continue;
    for (int t = 0; t < 4; ++t) {
      if (o.c[t] == 0) continue;
      mpq_class p = c[s] * o.c[t];
      int e = s + t;
      if (e >= 4) {
        e -= 4;
        p = -p;
      }
      r.c[e] += p;
    }
  }
  return r;
}

}  // namespace cw::cyc
