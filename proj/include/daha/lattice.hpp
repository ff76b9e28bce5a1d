#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace daha {

/// Largest supported finite rank (E8).
inline constexpr std::size_t kMaxRank = 8;

/// Fixed-capacity integer vector used for every lattice coordinate in the
/// library. Small enough to copy freely; compares lexicographically.
class IVec {
 public:
  IVec() = default;
  explicit IVec(std::size_t n) : n_(static_cast<std::uint8_t>(check(n))) {}
  IVec(std::initializer_list<int> xs) : n_(static_cast<std::uint8_t>(check(xs.size()))) {
    std::size_t i = 0;
    for (int x : xs) v_[i++] = x;
  }
  explicit IVec(const std::vector<int>& xs) : n_(static_cast<std::uint8_t>(check(xs.size()))) {
    for (std::size_t i = 0; i < xs.size(); ++i) v_[i] = xs[i];
  }

  static IVec unit(std::size_t n, std::size_t i) {
    IVec r(n);
    r.v_[i] = 1;
    return r;
  }

  std::size_t size() const { return n_; }
  int& operator[](std::size_t i) { return v_[i]; }
  int operator[](std::size_t i) const { return v_[i]; }
  const int* begin() const { return v_.data(); }
  const int* end() const { return v_.data() + n_; }

  bool is_zero() const {
    for (std::size_t i = 0; i < n_; ++i)
      if (v_[i] != 0) return false;
    return true;
  }

  std::vector<int> to_vector() const { return {begin(), end()}; }

  IVec& operator+=(const IVec& o) {
    same(o);
    for (std::size_t i = 0; i < n_; ++i) v_[i] += o.v_[i];
    return *this;
  }
  IVec& operator-=(const IVec& o) {
    same(o);
    for (std::size_t i = 0; i < n_; ++i) v_[i] -= o.v_[i];
    return *this;
  }
  IVec& operator*=(int k) {
    for (std::size_t i = 0; i < n_; ++i) v_[i] *= k;
    return *this;
  }
  friend IVec operator+(IVec a, const IVec& b) { return a += b; }
  friend IVec operator-(IVec a, const IVec& b) { return a -= b; }
  friend IVec operator-(IVec a) { return a *= -1; }
  friend IVec operator*(int k, IVec a) { return a *= k; }

  friend bool operator==(const IVec& a, const IVec& b) {
    if (a.n_ != b.n_) return false;
    for (std::size_t i = 0; i < a.n_; ++i)
      if (a.v_[i] != b.v_[i]) return false;
    return true;
  }
  friend std::strong_ordering operator<=>(const IVec& a, const IVec& b) {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    for (std::size_t i = 0; i < a.n_; ++i)
      if (a.v_[i] != b.v_[i]) return a.v_[i] <=> b.v_[i];
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::size_t h = n_;
    for (std::size_t i = 0; i < n_; ++i)
      h = h * 1000003u ^ static_cast<std::size_t>(static_cast<std::uint32_t>(v_[i]));
    return h;
  }

  std::string str() const;

 private:
  static std::size_t check(std::size_t n) {
    if (n > kMaxRank) throw std::invalid_argument("rank exceeds supported maximum of 8");
    return n;
  }
  void same(const IVec& o) const {
    if (o.n_ != n_) throw std::invalid_argument("lattice vectors of different rank");
  }

  std::array<int, kMaxRank> v_{};
  std::uint8_t n_ = 0;
};

/// Dot product of two integer vectors of equal length.
inline long long dot(const IVec& a, const IVec& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
  return s;
}

/// Square integer matrix of size n <= kMaxRank acting on IVec.
class IMat {
 public:
  IMat() = default;
  explicit IMat(std::size_t n) : n_(n), a_(n * n, 0) {}
  static IMat identity(std::size_t n) {
    IMat m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t size() const { return n_; }
  int& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  int operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  IVec operator*(const IVec& x) const {
    IVec y(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      int s = 0;
      for (std::size_t j = 0; j < n_; ++j) s += a_[i * n_ + j] * x[j];
      y[i] = s;
    }
    return y;
  }
  IMat operator*(const IMat& o) const {
    IMat r(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k) {
        int x = a_[i * n_ + k];
        if (x == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) r.a_[i * n_ + j] += x * o.a_[k * n_ + j];
      }
    return r;
  }
  IMat transpose() const {
    IMat r(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }
  friend bool operator==(const IMat&, const IMat&) = default;
  friend auto operator<=>(const IMat&, const IMat&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<int> a_;
};

}  // namespace daha

template <>
struct std::hash<daha::IVec> {
  std::size_t operator()(const daha::IVec& v) const noexcept { return v.hash(); }
};
