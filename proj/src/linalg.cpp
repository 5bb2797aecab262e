#include "glattice/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "glattice/errors.hpp"

namespace glattice {

namespace {

using Row = std::vector<Integer>;
using Rows = std::vector<Row>;

Rows to_rows(const IntMatrix& a) {
  Rows r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) r[i] = a.row_copy(i);
  return r;
}

IntMatrix from_rows(const Rows& r, std::size_t cols, std::size_t count) {
  IntMatrix m(count, cols);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = r[i][j];
  return m;
}

Rows identity_rows(std::size_t n) {
  Rows r(n, Row(n));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
  return r;
}

// dst -= q * src, touching entries from `start` on.
void sub_row(Row& dst, const Integer& q, const Row& src, std::size_t start = 0) {
  for (std::size_t j = start; j < src.size(); ++j)
    if (!src[j].is_zero()) dst[j].submul(q, src[j]);
}

void negate_row(Row& r) {
  for (auto& x : r) x.negate();
}

struct Echelon {
  Rows a, u;
  std::vector<std::size_t> pivots;
  std::size_t cols = 0;
  bool track = false;
};

// Row echelon form by smallest-pivot Euclidean elimination. With
// `reduce_above` the result is the Hermite normal form.
void echelonize(Echelon& e, bool reduce_above) {
  const std::size_t m = e.a.size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < e.cols && r < m; ++c) {
    bool have_pivot = false;
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (e.a[i][c].is_zero()) continue;
        if (best == m || cmp_abs(e.a[i][c], e.a[best][c]) < 0) best = i;
      }
      if (best == m) break;
      have_pivot = true;
      if (best != r) {
        std::swap(e.a[best], e.a[r]);
        if (e.track) std::swap(e.u[best], e.u[r]);
      }
      bool clear = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (e.a[i][c].is_zero()) continue;
        Integer q = floor_div(e.a[i][c], e.a[r][c]);
        sub_row(e.a[i], q, e.a[r], c);
        if (e.track) sub_row(e.u[i], q, e.u[r]);
        if (!e.a[i][c].is_zero()) clear = false;
      }
      if (clear) break;
    }
    if (!have_pivot) continue;
    if (e.a[r][c].sign() < 0) {
      negate_row(e.a[r]);
      if (e.track) negate_row(e.u[r]);
    }
    if (reduce_above) {
      for (std::size_t i = 0; i < r; ++i) {
        if (e.a[i][c].is_zero()) continue;
        Integer q = floor_div(e.a[i][c], e.a[r][c]);
        if (q.is_zero()) continue;
        sub_row(e.a[i], q, e.a[r], c);
        if (e.track) sub_row(e.u[i], q, e.u[r]);
      }
    }
    e.pivots.push_back(c);
    ++r;
  }
}

Echelon run_echelon(const IntMatrix& a, bool track, bool reduce_above) {
  Echelon e;
  e.a = to_rows(a);
  e.cols = a.cols();
  e.track = track;
  if (track) e.u = identity_rows(a.rows());
  echelonize(e, reduce_above);
  return e;
}

struct SnfWork {
  Rows a, u, v;  // v stored row-major; column ops act on it column-wise
  bool track = false;
};

void col_sub(Rows& m, std::size_t dst, const Integer& q, std::size_t src, std::size_t row_from = 0) {
  for (std::size_t i = row_from; i < m.size(); ++i)
    if (!m[i][src].is_zero()) m[i][dst].submul(q, m[i][src]);
}

void col_swap(Rows& m, std::size_t x, std::size_t y) {
  for (auto& r : m) std::swap(r[x], r[y]);
}

void snf_in_place(SnfWork& w, std::size_t rows, std::size_t cols) {
  const std::size_t lim = std::min(rows, cols);
  for (std::size_t t = 0; t < lim; ++t) {
    // Smallest nonzero entry of the trailing block, row-major scan.
    std::size_t bi = rows, bj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (w.a[i][j].is_zero()) continue;
        if (bi == rows || cmp_abs(w.a[i][j], w.a[bi][bj]) < 0) {
          bi = i;
          bj = j;
        }
      }
    if (bi == rows) break;
    for (;;) {
      if (bi != t) {
        std::swap(w.a[bi], w.a[t]);
        if (w.track) std::swap(w.u[bi], w.u[t]);
      }
      if (bj != t) {
        col_swap(w.a, bj, t);
        if (w.track) col_swap(w.v, bj, t);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (w.a[i][t].is_zero()) continue;
        Integer q = floor_div(w.a[i][t], w.a[t][t]);
        sub_row(w.a[i], q, w.a[t], t);
        if (w.track) sub_row(w.u[i], q, w.u[t]);
        if (!w.a[i][t].is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (w.a[t][j].is_zero()) continue;
        Integer q = floor_div(w.a[t][j], w.a[t][t]);
        col_sub(w.a, j, q, t, t);
        if (w.track) col_sub(w.v, j, q, t);
        if (!w.a[t][j].is_zero()) clean = false;
      }
      if (!clean) {
        // Bring the smallest remaining entry of row t / column t to the corner.
        bi = t;
        bj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (!w.a[i][t].is_zero() && cmp_abs(w.a[i][t], w.a[bi][bj]) < 0) {
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!w.a[t][j].is_zero() && cmp_abs(w.a[t][j], w.a[bi][bj]) < 0) {
            bi = t;
            bj = j;
          }
        continue;
      }
      // Divisibility fix-up: fold an offending row into row t.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!divides(w.a[t][t], w.a[i][j])) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t j = t; j < cols; ++j) w.a[t][j] += w.a[bad][j];
      if (w.track)
        for (std::size_t j = 0; j < w.u[t].size(); ++j) w.u[t][j] += w.u[bad][j];
      bi = t;
      bj = t;
    }
    if (w.a[t][t].sign() < 0) {
      negate_row(w.a[t]);
      if (w.track) negate_row(w.u[t]);
    }
  }
}

}  // namespace

// ---------------------------------------------------------------- FinAbGroup

FinAbGroup FinAbGroup::from_orders(std::span<const Integer> orders) {
  FinAbGroup g;
  std::vector<Integer> t;
  for (const auto& o : orders) {
    if (o.is_zero())
      ++g.free_rank_;
    else if (!o.is_unit())
      t.push_back(abs(o));
  }
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      Integer d = gcd(t[i], t[j]);
      Integer l = exact_div(t[i], d) * t[j];
      t[i] = std::move(d);
      t[j] = std::move(l);
    }
  for (auto& x : t)
    if (!x.is_one()) g.factors_.push_back(std::move(x));
  return g;
}

FinAbGroup FinAbGroup::elementary(long p, std::size_t count) {
  return from_orders(std::vector<Integer>(count, Integer(p)));
}

Integer FinAbGroup::order() const {
  if (free_rank_ != 0) throw PreconditionError("order of an infinite abelian group");
  Integer o(1);
  for (const auto& d : factors_) o *= d;
  return o;
}

Integer FinAbGroup::exponent() const { return factors_.empty() ? Integer(1) : factors_.back(); }

bool FinAbGroup::annihilated_by(const Integer& n) const {
  if (free_rank_ != 0) return n.is_zero();
  return divides(exponent(), n);
}

FinAbGroup FinAbGroup::direct_sum(const FinAbGroup& other) const {
  std::vector<Integer> all = factors_;
  all.insert(all.end(), other.factors_.begin(), other.factors_.end());
  all.insert(all.end(), free_rank_ + other.free_rank_, Integer(0));
  return from_orders(all);
}

std::string FinAbGroup::str() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank_ == 1) {
    os << "Z";
    first = false;
  } else if (free_rank_ > 1) {
    os << "Z^" << free_rank_;
    first = false;
  }
  for (const auto& d : factors_) {
    os << (first ? "" : " + ") << "Z/" << d;
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------- normal forms

HnfResult hnf(const IntMatrix& a) {
  Echelon e = run_echelon(a, true, true);
  HnfResult r;
  r.rank = e.pivots.size();
  r.pivot_cols = e.pivots;
  r.h = from_rows(e.a, a.cols(), a.rows());
  r.u = from_rows(e.u, a.rows(), a.rows());
  return r;
}

IntMatrix hnf_basis(const IntMatrix& a) {
  Echelon e = run_echelon(a, false, true);
  return from_rows(e.a, a.cols(), e.pivots.size());
}

SnfResult snf(const IntMatrix& a) {
  SnfWork w;
  w.a = to_rows(a);
  w.u = identity_rows(a.rows());
  w.v = identity_rows(a.cols());
  w.track = true;
  snf_in_place(w, a.rows(), a.cols());
  SnfResult r;
  r.d = from_rows(w.a, a.cols(), a.rows());
  r.u = from_rows(w.u, a.rows(), a.rows());
  r.v = from_rows(w.v, a.cols(), a.cols());
  const std::size_t lim = std::min(a.rows(), a.cols());
  for (std::size_t i = 0; i < lim; ++i) {
    r.diagonal.push_back(r.d(i, i));
    if (!r.d(i, i).is_zero()) ++r.rank;
  }
  return r;
}

std::vector<Integer> elementary_divisors(const IntMatrix& a) {
  const std::size_t lim = std::min(a.rows(), a.cols());
  // Reduce tall inputs to their (square-ish) HNF first; the lattice is the same.
  IntMatrix b = a.rows() > a.cols() ? hnf_basis(a) : a;
  SnfWork w;
  w.a = to_rows(b);
  snf_in_place(w, b.rows(), b.cols());
  std::vector<Integer> d(lim);
  for (std::size_t i = 0; i < std::min(b.rows(), b.cols()); ++i) d[i] = w.a[i][i];
  return d;
}

IntMatrix kernel_basis(const IntMatrix& a) {
  Echelon e = run_echelon(a, true, false);
  const std::size_t m = a.rows();
  const std::size_t r = e.pivots.size();
  Rows k(e.u.begin() + static_cast<std::ptrdiff_t>(r), e.u.end());
  return hnf_basis(from_rows(k, m, m - r));
}

IntMatrix kernel_basis_stacked(const std::vector<IntMatrix>& blocks, std::size_t rows) {
  IntMatrix k = IntMatrix::identity(rows);
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw PreconditionError("kernel_basis_stacked: row count mismatch");
    if (k.rows() == 0) break;
    IntMatrix w = kernel_basis(k * b);
    k = hnf_basis(w * k);
  }
  return k;
}

FinAbGroup cokernel_structure(const IntMatrix& a) {
  std::vector<Integer> orders;
  std::size_t r = 0;
  for (const auto& d : elementary_divisors(a))
    if (!d.is_zero()) {
      orders.push_back(d);
      ++r;
    }
  orders.insert(orders.end(), a.cols() - r, Integer(0));
  return FinAbGroup::from_orders(orders);
}

std::size_t rank(const IntMatrix& a) { return run_echelon(a, false, false).pivots.size(); }

Integer determinant(const IntMatrix& a) {
  if (!a.is_square()) throw PreconditionError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return Integer(1);
  Rows m = to_rows(a);
  Integer prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return Integer(0);
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k];
        t.submul(m[i][k], m[k][j]);
        m[i][j] = exact_div(t, prev);
      }
    }
    prev = m[k][k];
  }
  Integer d = m[n - 1][n - 1];
  if (sign < 0) d.negate();
  return d;
}

bool is_unimodular(const IntMatrix& a) { return a.is_square() && determinant(a).is_unit(); }

IntMatrix inverse_unimodular(const IntMatrix& a) {
  if (!a.is_square()) throw PreconditionError("inverse of a non-square matrix");
  HnfResult r = hnf(a);
  if (!r.h.is_identity()) throw PreconditionError("matrix is not unimodular");
  return r.u;
}

bool is_saturated(const IntMatrix& basis) {
  for (const auto& d : elementary_divisors(basis))
    if (!d.is_zero() && !d.is_one()) return false;
  return true;
}

IntMatrix saturation(const IntMatrix& a) {
  // Orthogonal complement twice.
  IntMatrix perp = kernel_basis(a.transpose());
  return kernel_basis(perp.transpose());
}

// ---------------------------------------------------------------- RowSpace

RowSpace::RowSpace(const IntMatrix& generators) : ambient_(generators.cols()) {
  Echelon e = run_echelon(generators, true, true);
  const std::size_t r = e.pivots.size();
  basis_ = from_rows(e.a, generators.cols(), r);
  transform_ = from_rows(e.u, generators.rows(), r);
  pivots_ = std::move(e.pivots);
}

std::optional<std::vector<Integer>> RowSpace::solve_hnf(std::span<const Integer> y) const {
  if (y.size() != ambient_) throw PreconditionError("RowSpace: vector length mismatch");
  std::vector<Integer> res(y.begin(), y.end());
  std::vector<Integer> coef(basis_.rows());
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    const std::size_t c = pivots_[i];
    for (std::size_t j = (i ? pivots_[i - 1] + 1 : 0); j < c; ++j)
      if (!res[j].is_zero()) return std::nullopt;
    if (res[c].is_zero()) continue;
    if (!divides(basis_(i, c), res[c])) return std::nullopt;
    Integer q = exact_div(res[c], basis_(i, c));
    auto br = basis_.row(i);
    for (std::size_t j = c; j < ambient_; ++j)
      if (!br[j].is_zero()) res[j].submul(q, br[j]);
    coef[i] = std::move(q);
  }
  for (const auto& x : res)
    if (!x.is_zero()) return std::nullopt;
  return coef;
}

std::optional<std::vector<Integer>> RowSpace::solve(std::span<const Integer> y) const {
  auto c = solve_hnf(y);
  if (!c) return std::nullopt;
  return row_times(*c, transform_);
}

bool RowSpace::contains(std::span<const Integer> y) const { return solve_hnf(y).has_value(); }

std::optional<IntMatrix> RowSpace::solve_rows(const IntMatrix& ys) const {
  IntMatrix out(ys.rows(), transform_.cols());
  for (std::size_t i = 0; i < ys.rows(); ++i) {
    auto x = solve(ys.row(i));
    if (!x) return std::nullopt;
    for (std::size_t j = 0; j < x->size(); ++j) out(i, j) = (*x)[j];
  }
  return out;
}

std::optional<IntMatrix> solve_left(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) throw PreconditionError("solve_left: column mismatch");
  return RowSpace(a).solve_rows(b);
}

// ---------------------------------------------------------------- Subquotient

Subquotient::Subquotient(const IntMatrix& numerator_basis, const IntMatrix& denominator_gens)
    : num_(numerator_basis), ambient_(numerator_basis.cols()) {
  const std::size_t r = numerator_basis.rows();
  if (num_.rank() != r) throw PreconditionError("Subquotient: numerator rows are not independent");
  if (denominator_gens.cols() != ambient_) throw PreconditionError("Subquotient: ambient dimension mismatch");
  auto c = num_.solve_rows(denominator_gens);
  if (!c) throw ContainmentError("Subquotient: denominator is not contained in numerator");
  SnfResult s = snf(*c);
  v_ = s.v;
  std::vector<Integer> diag(r);
  for (std::size_t i = 0; i < s.diagonal.size(); ++i) diag[i] = s.diagonal[i];
  offset_ = 0;
  while (offset_ < r && diag[offset_].is_one()) ++offset_;
  IntMatrix new_basis = inverse_unimodular(v_) * numerator_basis;
  lifts_ = new_basis.block(offset_, 0, r - offset_, ambient_);
  orders_.assign(diag.begin() + static_cast<std::ptrdiff_t>(offset_), diag.end());
  group_ = FinAbGroup::from_orders(orders_);
}

std::vector<Integer> Subquotient::coordinates(std::span<const Integer> v) const {
  auto c = num_.solve(v);
  if (!c) throw ContainmentError("Subquotient: element is not in the numerator");
  std::vector<Integer> w = row_times(*c, v_);
  std::vector<Integer> out(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const Integer& x = w[offset_ + i];
    out[i] = orders_[i].is_zero() ? x : floor_mod(x, orders_[i]);
  }
  return out;
}

}  // namespace glattice
