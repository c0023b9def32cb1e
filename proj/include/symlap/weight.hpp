#ifndef SYMLAP_WEIGHT_HPP
#define SYMLAP_WEIGHT_HPP

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "symlap/rational.hpp"

namespace symlap {

/// Vector of exact rational coordinates in a fixed orthogonal realization
/// of the weight space. Ordered lexicographically (the canonical total
/// order used for all deterministic output).
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t dim) : c_(dim) {}
  explicit Weight(std::vector<Rat> coords) : c_(std::move(coords)) {}
  Weight(std::initializer_list<Rat> coords) : c_(coords) {}

  std::size_t dim() const { return c_.size(); }
  const Rat& operator[](std::size_t i) const { return c_[i]; }
  Rat& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Rat>& coords() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }

  Weight& operator+=(const Weight& o) {
    check_dim(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    check_dim(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Weight& operator*=(const Rat& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend Weight operator+(Weight a, const Weight& b) { a += b; return a; }
  friend Weight operator-(Weight a, const Weight& b) { a -= b; return a; }
  friend Weight operator*(const Rat& s, Weight v) { v *= s; return v; }
  Weight operator-() const {
    Weight r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend bool operator==(const Weight& a, const Weight& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  friend bool operator<(const Weight& a, const Weight& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (a.c_[i] < b.c_[i]) return true;
      if (b.c_[i] < a.c_[i]) return false;
    }
    return false;
  }

  /// Plain Euclidean dot product of the coordinate vectors.
  friend Rat dot(const Weight& a, const Weight& b) {
    a.check_dim(b);
    Rat s;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a.c_[i] * b.c_[i];
    return s;
  }

  Rat coordinate_sum() const {
    Rat s;
    for (const auto& x : c_) s += x;
    return s;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (const auto& x : c_) h = (h ^ x.hash()) * 1099511628211ULL;
    return h;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ", ";
      s += c_[i].str();
    }
    return s + ")";
  }

 private:
  void check_dim(const Weight& o) const {
    if (c_.size() != o.c_.size())
      throw std::invalid_argument("Weight: dimension mismatch");
  }
  std::vector<Rat> c_;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const { return w.hash(); }
};

}  // namespace symlap

#endif
