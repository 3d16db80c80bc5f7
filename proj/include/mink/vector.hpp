#ifndef MINK_VECTOR_HPP
#define MINK_VECTOR_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "mink/error.hpp"

namespace mink {

/// A point or direction in R^d with finite coordinates.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim, double fill = 0.0) : coords_(dim, fill) {}
  Vector(std::initializer_list<double> values) : coords_(values) {}
  explicit Vector(std::vector<double> values) : coords_(std::move(values)) {}

  static Vector unit(std::size_t dim, std::size_t axis, double sign = 1.0) {
    Vector e(dim);
    e[axis] = sign;
    return e;
  }

  std::size_t dim() const noexcept { return coords_.size(); }
  double& operator[](std::size_t i) { return coords_[i]; }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const noexcept { return coords_; }
  const std::vector<double>& values() const noexcept { return coords_; }

  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  bool is_finite() const {
    return std::all_of(coords_.begin(), coords_.end(), [](double c) { return std::isfinite(c); });
  }

  Vector& operator+=(const Vector& o) {
    check_dim(o);
    for (std::size_t i = 0; i < dim(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  Vector& operator-=(const Vector& o) {
    check_dim(o);
    for (std::size_t i = 0; i < dim(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  Vector& operator*=(double s) {
    for (double& c : coords_) c *= s;
    return *this;
  }

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(double s, Vector a) { return a *= s; }
  friend Vector operator*(Vector a, double s) { return a *= s; }
  friend Vector operator-(Vector a) { return a *= -1.0; }
  friend bool operator==(const Vector&, const Vector&) = default;

  /// Lexicographic order on coordinates.
  friend bool operator<(const Vector& a, const Vector& b) { return a.coords_ < b.coords_; }

 private:
  void check_dim(const Vector& o) const {
    require(o.dim() == dim(), ErrorKind::dimension_mismatch,
            "vectors of length " + std::to_string(dim()) + " and " + std::to_string(o.dim()));
  }

  std::vector<double> coords_;
};

inline double dot(const Vector& a, const Vector& b) {
  require(a.dim() == b.dim(), ErrorKind::dimension_mismatch, "dot product of unequal lengths");
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm(const Vector& a) { return std::sqrt(dot(a, a)); }

inline double max_abs_diff(const Vector& a, const Vector& b) {
  require(a.dim() == b.dim(), ErrorKind::dimension_mismatch, "comparison of unequal lengths");
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline Vector normalized(const Vector& a) {
  const double n = norm(a);
  require(n > 0.0, ErrorKind::invalid_argument, "cannot normalize the zero vector");
  return (1.0 / n) * a;
}

}  // namespace mink

#endif  // MINK_VECTOR_HPP
