#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ybx/perm.hpp"

namespace ybx {

/// An element of the free abelian group on n points.
class IntVec {
 public:
  IntVec() = default;
  explicit IntVec(std::size_t n) : c_(n, 0) {}
  explicit IntVec(std::vector<std::int64_t> coefficients)
      : c_(std::move(coefficients)) {}

  /// coeff * e_y
  static IntVec unit(std::size_t n, Point y, std::int64_t coeff = 1);

  std::size_t size() const { return c_.size(); }
  std::int64_t operator[](std::size_t i) const { return c_[i]; }
  std::int64_t& operator[](std::size_t i) { return c_[i]; }
  const std::vector<std::int64_t>& coefficients() const { return c_; }

  bool is_zero() const;
  std::int64_t norm1() const;

  IntVec& operator+=(const IntVec& o);
  IntVec& operator-=(const IntVec& o);
  friend IntVec operator+(IntVec a, const IntVec& b) { return a += b; }
  friend IntVec operator-(IntVec a, const IntVec& b) { return a -= b; }
  IntVec operator-() const;

  auto operator<=>(const IntVec&) const = default;
  bool operator==(const IntVec&) const = default;

 private:
  std::vector<std::int64_t> c_;
};

/// Coordinate permutation: result[p(y)] = v[y], i.e. the linear extension of
/// y -> p(y).
IntVec permuted(const Perm& p, const IntVec& v);

/// A subgroup of Z^n, held as a row-style Hermite normal form basis: pivots
/// strictly move right, pivot entries are positive, and entries above a
/// pivot lie in [0, pivot).
class Lattice {
 public:
  using Int = boost::multiprecision::cpp_int;

  static Lattice hnf(std::span<const IntVec> rows, std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<std::vector<Int>>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const IntVec& v) const;
  bool contains(const Lattice& sub) const;

  bool operator==(const Lattice& o) const {
    return dim_ == o.dim_ && basis_ == o.basis_;
  }

 private:
  bool contains_row(std::vector<Int> w) const;

  std::size_t dim_ = 0;
  std::vector<std::vector<Int>> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace ybx
