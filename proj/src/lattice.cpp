#include "ybx/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace ybx {

IntVec IntVec::unit(std::size_t n, Point y, std::int64_t coeff) {
  IntVec v(n);
  v.c_.at(y) = coeff;
  return v;
}

bool IntVec::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::int64_t x) { return x == 0; });
}

std::int64_t IntVec::norm1() const {
  std::int64_t s = 0;
  for (std::int64_t x : c_) s += x < 0 ? -x : x;
  return s;
}

IntVec& IntVec::operator+=(const IntVec& o) {
  if (o.size() != size()) throw std::invalid_argument("IntVec size mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

IntVec& IntVec::operator-=(const IntVec& o) {
  if (o.size() != size()) throw std::invalid_argument("IntVec size mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

IntVec IntVec::operator-() const {
  IntVec r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

IntVec permuted(const Perm& p, const IntVec& v) {
  if (p.degree() != v.size()) throw std::invalid_argument("IntVec size mismatch");
  IntVec r(v.size());
  for (Point y = 0; y < v.size(); ++y) r[p(y)] = v[y];
  return r;
}

// ---------------------------------------------------------------------------

namespace {

using Int = Lattice::Int;
using Row = std::vector<Int>;

void axpy(Row& target, const Int& q, const Row& source) {
  for (std::size_t j = 0; j < target.size(); ++j) target[j] -= q * source[j];
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

Lattice Lattice::hnf(std::span<const IntVec> rows, std::size_t dim) {
  std::vector<Row> a;
  a.reserve(rows.size());
  for (const IntVec& v : rows) {
    if (v.size() != dim) throw std::invalid_argument("row has the wrong dimension");
    if (v.is_zero()) continue;
    Row r(dim);
    for (std::size_t j = 0; j < dim; ++j) r[j] = v[j];
    a.push_back(std::move(r));
  }

  Lattice out;
  out.dim_ = dim;
  std::size_t top = 0;
  for (std::size_t col = 0; col < dim && top < a.size(); ++col) {
    // Euclid on the column until a single row below `top` is nonzero there.
    while (true) {
      std::size_t best = a.size();
      for (std::size_t i = top; i < a.size(); ++i) {
        if (a[i][col] == 0) continue;
        if (best == a.size() || abs(a[i][col]) < abs(a[best][col])) best = i;
      }
      if (best == a.size()) break;
      std::swap(a[top], a[best]);
      bool others = false;
      for (std::size_t i = top + 1; i < a.size(); ++i) {
        if (a[i][col] == 0) continue;
        axpy(a[i], a[i][col] / a[top][col], a[top]);
        others = others || a[i][col] != 0;
      }
      if (!others) break;
    }
    if (a[top][col] == 0) continue;
    if (a[top][col] < 0)
      for (auto& x : a[top]) x = -x;
    for (std::size_t i = 0; i < top; ++i) {
      const Int q = floor_div(a[i][col], a[top][col]);
      if (q != 0) axpy(a[i], q, a[top]);
    }
    out.pivots_.push_back(col);
    ++top;
  }
  a.resize(top);
  out.basis_ = std::move(a);
  return out;
}

bool Lattice::contains_row(Row w) const {
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const std::size_t col = pivots_[k];
    const std::size_t prev = k == 0 ? 0 : pivots_[k - 1] + 1;
    for (std::size_t j = prev; j < col; ++j)
      if (w[j] != 0) return false;
    if (w[col] % basis_[k][col] != 0) return false;
    const Int q = w[col] / basis_[k][col];
    if (q != 0) axpy(w, q, basis_[k]);
  }
  return std::all_of(w.begin(), w.end(), [](const Int& x) { return x == 0; });
}

bool Lattice::contains(const IntVec& v) const {
  if (v.size() != dim_) throw std::invalid_argument("vector has the wrong dimension");
  Row w(dim_);
  for (std::size_t j = 0; j < dim_; ++j) w[j] = v[j];
  return contains_row(std::move(w));
}

bool Lattice::contains(const Lattice& sub) const {
  if (sub.dim_ != dim_) return false;
  return std::all_of(sub.basis_.begin(), sub.basis_.end(),
                     [&](const Row& r) { return contains_row(r); });
}

}  // namespace ybx
