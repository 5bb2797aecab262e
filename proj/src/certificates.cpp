#include "glattice/certificates.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "glattice/errors.hpp"

namespace glattice {

FaithfulnessResult is_faithful(const GLattice& m) {
  const FiniteGroup& g = m.group();
  FaithfulnessResult r;
  // The action kernel is normal, so one representative per class suffices.
  for (const auto& cls : conjugacy_classes(g)) {
    const std::size_t rep = cls.front();
    if (rep == 0) continue;
    if (m.action(rep).is_identity()) {
      r.witness = rep;
      return r;
    }
  }
  r.faithful = true;
  return r;
}

CharacterTable CharacterTable::operator+(const CharacterTable& o) const {
  CharacterTable c = *this;
  for (std::size_t i = 0; i < values.size(); ++i) c.values[i] += o.values.at(i);
  return c;
}

CharacterTable CharacterTable::operator-(const CharacterTable& o) const {
  CharacterTable c = *this;
  for (std::size_t i = 0; i < values.size(); ++i) c.values[i] -= o.values.at(i);
  return c;
}

CharacterTable CharacterTable::scaled(long k) const {
  CharacterTable c = *this;
  for (auto& v : c.values) v *= Integer(k);
  return c;
}

std::string CharacterTable::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i].str();
  os << ')';
  return os.str();
}

CharacterTable rational_character(const GLattice& m) {
  CharacterTable t;
  for (const auto& cls : conjugacy_classes(m.group())) {
    t.class_representatives.push_back(cls.front());
    t.class_sizes.push_back(cls.size());
    IntMatrix a = m.action(cls.front());
    Integer tr = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) tr += a(i, i);
    t.values.push_back(tr);
  }
  return t;
}

bool IsoCertificate::verify() const {
  if (!same_group(source.group(), target.group())) return false;
  if (intertwiner.rows() != source.rank() || intertwiner.cols() != target.rank()) return false;
  if (!is_unimodular(intertwiner)) return false;
  for (std::size_t s = 0; s < source.group().num_generators(); ++s)
    if (source.gen_action(s) * intertwiner != intertwiner * target.gen_action(s)) return false;
  return true;
}

IntMatrix equivariant_hom_basis(const GLattice& a, const GLattice& b) {
  if (!same_group(a.group(), b.group())) throw PreconditionError("Hom basis: lattices over different groups");
  const std::size_t ra = a.rank(), rb = b.rank(), n = ra * rb;
  std::vector<IntMatrix> blocks;
  for (std::size_t s = 0; s < a.group().num_generators(); ++s) {
    const IntMatrix& sa = a.gen_action(s);
    const IntMatrix& sb = b.gen_action(s);
    // x * C = vec(R_a X - X R_b)
    IntMatrix c(n, n);
    for (std::size_t i = 0; i < ra; ++i)
      for (std::size_t j = 0; j < rb; ++j) {
        const std::size_t col = i * rb + j;
        for (std::size_t k = 0; k < ra; ++k)
          if (!sa(i, k).is_zero()) c(k * rb + j, col) += sa(i, k);
        for (std::size_t k = 0; k < rb; ++k)
          if (!sb(k, j).is_zero()) c(i * rb + k, col) -= sb(k, j);
      }
    blocks.push_back(std::move(c));
  }
  if (blocks.empty()) return IntMatrix::identity(n);
  return kernel_basis_stacked(blocks, n);
}

namespace {

double to_double(const Integer& x) { return x.is_small() ? static_cast<double>(x.to_int64()) : x.to_mpz().get_d(); }

// log |det| by partial-pivot LU; -inf when singular.
double log_abs_det(std::vector<double> a, std::size_t n) {
  double acc = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::fabs(a[r * n + c]) > std::fabs(a[p * n + c])) p = r;
    const double piv = a[p * n + c];
    if (std::fabs(piv) < 1e-9) return -INFINITY;
    if (p != c)
      for (std::size_t k = 0; k < n; ++k) std::swap(a[p * n + k], a[c * n + k]);
    acc += std::log(std::fabs(piv));
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a[r * n + c] / piv;
      if (f == 0) continue;
      for (std::size_t k = c; k < n; ++k) a[r * n + k] -= f * a[c * n + k];
    }
  }
  return acc;
}

class Searcher {
 public:
  Searcher(const IntMatrix& basis, const GLattice& a, const GLattice& b)
      : basis_(basis), a_(a), b_(b), n_(a.rank()), d_(basis.rows()) {
    dbl_.resize(d_ * n_ * n_);
    for (std::size_t i = 0; i < d_; ++i)
      for (std::size_t e = 0; e < n_ * n_; ++e) dbl_[i * n_ * n_ + e] = to_double(basis_(i, e));
  }

  // Score is log|det|; +inf when singular. Fills `found` when unimodular.
  double score(const std::vector<long>& c) {
    ++tried_;
    std::vector<double> m(n_ * n_, 0.0);
    for (std::size_t i = 0; i < d_; ++i) {
      if (c[i] == 0) continue;
      const double* row = &dbl_[i * n_ * n_];
      for (std::size_t e = 0; e < n_ * n_; ++e) m[e] += static_cast<double>(c[i]) * row[e];
    }
    double s = log_abs_det(std::move(m), n_);
    if (s == -INFINITY) return INFINITY;
    if (s < 0.5 && !found_) try_exact(c);
    return s;
  }

  bool found() const { return found_.has_value(); }
  std::optional<IsoCertificate>& certificate() { return found_; }
  std::size_t tried() const { return tried_; }

 private:
  void try_exact(const std::vector<long>& c) {
    IntMatrix x(n_, n_);
    for (std::size_t i = 0; i < d_; ++i) {
      if (c[i] == 0) continue;
      Integer ci(c[i]);
      for (std::size_t e = 0; e < n_ * n_; ++e)
        if (!basis_(i, e).is_zero()) x(e / n_, e % n_).addmul(ci, basis_(i, e));
    }
    if (!is_unimodular(x)) return;
    IsoCertificate cert{std::move(x), a_, b_};
    if (!cert.verify()) throw InternalConsistencyError("intertwiner search produced an invalid certificate");
    found_ = std::move(cert);
  }

  const IntMatrix& basis_;
  const GLattice& a_;
  const GLattice& b_;
  std::size_t n_, d_;
  std::vector<double> dbl_;
  std::optional<IsoCertificate> found_;
  std::size_t tried_ = 0;
};

}  // namespace

IsoSearchResult zg_iso_certificate(const GLattice& a, const GLattice& b, const IsoSearchOptions& opt) {
  if (!same_group(a.group(), b.group())) throw PreconditionError("zg_iso_certificate: lattices over different groups");
  IsoSearchResult res;
  if (a.rank() != b.rank()) {
    res.outcome = IsoOutcome::NotIsomorphic;
    res.reason = "rank " + std::to_string(a.rank()) + " != " + std::to_string(b.rank());
    return res;
  }
  CharacterTable ca = rational_character(a), cb = rational_character(b);
  if (!(ca == cb)) {
    res.outcome = IsoOutcome::NotIsomorphic;
    res.reason = "characters " + ca.str() + " != " + cb.str();
    return res;
  }
  IntMatrix basis = equivariant_hom_basis(a, b);
  const std::size_t d = basis.rows();
  res.hom_dimension = d;
  Searcher s(basis, a, b);
  auto finish = [&](const char* how) {
    res.candidates_tried = s.tried();
    if (s.found()) {
      res.outcome = IsoOutcome::Found;
      res.certificate = std::move(s.certificate());
      res.reason = how;
    } else {
      res.outcome = IsoOutcome::NotFound;
      res.reason = "no unimodular intertwiner within the search budget";
    }
    return res;
  };
  if (d == 0) return finish("");
  const long bound = std::max(1, opt.bound);

  // Sparse phase: one or two nonzero coefficients in [-bound, bound].
  std::vector<long> c(d, 0);
  for (std::size_t i = 0; i < d && !s.found(); ++i) {
    c[i] = 1;
    s.score(c);
    c[i] = 0;
  }
  for (std::size_t i = 0; i < d && !s.found(); ++i)
    for (std::size_t j = i + 1; j < d && !s.found(); ++j)
      for (long ci = 1; ci <= bound && !s.found(); ++ci)
        for (long cj = -bound; cj <= bound && !s.found(); ++cj) {
          if (cj == 0) continue;
          c[i] = ci;
          c[j] = cj;
          s.score(c);
          c[i] = c[j] = 0;
        }
  if (s.found()) return finish("sparse enumeration");

  // Full box when it is small.
  double box = std::pow(static_cast<double>(2 * bound + 1), static_cast<double>(d));
  if (box <= 200000) {
    std::vector<long> v(d, -bound);
    while (!s.found()) {
      s.score(v);
      std::size_t k = 0;
      while (k < d && v[k] == bound) v[k++] = -bound;
      if (k == d) break;
      ++v[k];
    }
    if (s.found()) return finish("exhaustive enumeration");
  }

  // Randomized starts followed by greedy descent on log|det|.
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<long> coef(-opt.random_range, opt.random_range);
  for (std::size_t t = 0; t < opt.random_trials && !s.found(); ++t) {
    for (auto& x : c) x = coef(rng);
    double cur = s.score(c);
    for (int step = 0; step < 200 && !s.found() && std::isfinite(cur); ++step) {
      bool improved = false;
      for (std::size_t i = 0; i < d && !s.found(); ++i)
        for (long delta : {-1L, 1L}) {
          c[i] += delta;
          double v = s.score(c);
          if (v < cur - 1e-9) {
            cur = v;
            improved = true;
            break;
          }
          c[i] -= delta;
        }
      if (!improved) break;
    }
  }
  return finish("randomized descent");
}

PermProjectiveReport perm_projective_test(const GLattice& m, const Limits& lim) {
  const FiniteGroup& g = m.group();
  PermProjectiveReport rep;
  std::vector<FiniteGroup> subs;
  if (g.order() <= 48) {
    subs = subgroups(g);
    rep.scope = "all subgroups";
  } else {
    subs = cyclic_subgroups(g);
    rep.scope = "cyclic subgroups";
  }
  for (const auto& h : subs) {
    GroupPtr hp = share(h);
    for (int q : {1, -1}) {
      FinAbGroup v = tate(hp, m, q, lim).value;
      if (!v.is_trivial()) rep.failures.push_back({h.name(), q, v});
    }
    ++rep.subgroups_checked;
  }
  rep.pass = rep.failures.empty();
  return rep;
}

GenericFreenessReport generic_freeness(const LatticeMorphism& f) {
  GLattice a = root_lattice(f.target().group_ptr());
  if (f.target().rank() != a.rank() || f.target().gen_actions() != a.gen_actions())
    throw PreconditionError("generic_freeness: target is not the root lattice A_" + std::to_string(a.rank()));
  GenericFreenessReport r;
  r.surjective = f.is_surjective();
  KernelResult k = kernel_of(f);
  r.kernel_rank = k.lattice.rank();
  FaithfulnessResult fr = is_faithful(k.lattice);
  r.kernel_faithful = fr.faithful;
  r.non_faithful_witness = fr.witness;
  r.pass = r.surjective && r.kernel_faithful;
  return r;
}

}  // namespace glattice
