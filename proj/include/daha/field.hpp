#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace daha {

/// Exact rationals (the default coefficient field for evaluations).
using Rational = mpq_class;

/// Element of the prime field Z/p for a prime p < 2^63.
class ModP {
 public:
  ModP() = default;
  ModP(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}
  static ModP from_int(long long n, std::uint64_t p) {
    long long r = n % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return {static_cast<std::uint64_t>(r), p};
  }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  friend ModP operator+(ModP a, ModP b) {
    a.check(b);
    std::uint64_t s = a.v_ + b.v_;
    if (s >= a.p_ || s < a.v_) s -= a.p_;
    return {s, a.p_};
  }
  friend ModP operator-(ModP a, ModP b) {
    a.check(b);
    return {a.v_ >= b.v_ ? a.v_ - b.v_ : a.p_ - (b.v_ - a.v_), a.p_};
  }
  friend ModP operator-(ModP a) { return {a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_}; }
  friend ModP operator*(ModP a, ModP b) {
    a.check(b);
    return {static_cast<std::uint64_t>(static_cast<unsigned __int128>(a.v_) * b.v_ % a.p_), a.p_};
  }
  ModP& operator+=(ModP b) { return *this = *this + b; }
  ModP& operator-=(ModP b) { return *this = *this - b; }
  ModP& operator*=(ModP b) { return *this = *this * b; }
  friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }
  ModP& operator/=(ModP b) { return *this = *this / b; }
  friend bool operator==(ModP a, ModP b) { return a.v_ == b.v_ && a.p_ == b.p_; }

  ModP pow(std::uint64_t e) const {
    ModP r{1, p_}, b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }
  ModP inverse() const {
    if (v_ == 0) throw std::domain_error("inverse of zero in prime field");
    return pow(p_ - 2);
  }
  std::string str() const { return std::to_string(v_); }

 private:
  void check(const ModP& o) const {
    if (o.p_ != p_) throw std::invalid_argument("prime field elements with different moduli");
  }
  std::uint64_t v_ = 0;
  std::uint64_t p_ = 2;
};

// Uniform field helpers so that templates work over Rational and ModP alike.

inline Rational field_from_int(const Rational&, long long n) { return Rational(static_cast<long>(n)); }
inline ModP field_from_int(const ModP& like, long long n) { return ModP::from_int(n, like.modulus()); }

inline bool field_is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool field_is_zero(const ModP& x) { return x.is_zero(); }

inline Rational field_inverse(const Rational& x) {
  if (sgn(x) == 0) throw std::domain_error("inverse of zero");
  return Rational(1) / x;
}
inline ModP field_inverse(const ModP& x) { return x.inverse(); }

template <class F>
F field_pow(const F& x, long long e) {
  F base = e < 0 ? field_inverse(x) : x;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  F r = field_from_int(x, 1);
  while (k) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

inline std::string field_str(const Rational& x) { return x.get_str(); }
inline std::string field_str(const ModP& x) { return x.str(); }

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime_u64(std::uint64_t n);

}  // namespace daha
