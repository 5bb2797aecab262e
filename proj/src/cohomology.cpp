#include "glattice/cohomology.hpp"

#include <optional>

#include "glattice/errors.hpp"

namespace glattice {

namespace {

struct Computation {
  std::optional<Subquotient> sq;
  CohomologyMethod method = CohomologyMethod::NormMap;
  GLattice lattice;  // lattice whose cochains the subquotient lives in (shifted for q >= 2)
  int base_degree = 0;
  std::size_t blocks = 0;
  bool on_generators = true;
};

// Dense equation matrices beyond this many entries are refused.
constexpr double kMaxSystemEntries = 2.5e7;

void check_system_size(std::size_t rows, std::size_t cols) {
  if (static_cast<double>(rows) * static_cast<double>(cols) > kMaxSystemEntries)
    throw SizeLimitError("cocycle system: " + std::to_string(rows) + " x " + std::to_string(cols) +
                         " equation matrix is too large");
}

IntMatrix minus_identity(const IntMatrix& a) { return a - IntMatrix::identity(a.rows()); }

Computation compute(const GLattice& m, int q, const Limits& lim);

Computation compute_norm(const GLattice& m, int q) {
  const std::size_t r = m.rank();
  IntMatrix n = m.norm_matrix();
  std::vector<IntMatrix> diffs;
  for (const auto& a : m.gen_actions()) diffs.push_back(minus_identity(a));
  Computation c;
  c.lattice = m;
  c.base_degree = q;
  c.method = CohomologyMethod::NormMap;
  if (q == 0) {
    IntMatrix fixed = diffs.empty() ? IntMatrix::identity(r) : kernel_basis_stacked(diffs, r);
    c.sq.emplace(fixed, n);
  } else {
    IntMatrix kn = kernel_basis(n);
    IntMatrix aug = diffs.empty() ? IntMatrix(0, r) : vstack(diffs, r);
    c.sq.emplace(kn, aug);
  }
  return c;
}

Computation compute_h1(const GLattice& m, const Limits& lim) {
  CocycleSystem sys = cocycle_system(m, lim);
  Computation c;
  c.lattice = m;
  c.base_degree = 1;
  c.method = CohomologyMethod::PresentationCocycles;
  c.blocks = sys.blocks;
  c.on_generators = sys.on_generators;
  IntMatrix z1 = kernel_basis(sys.equations);
  c.sq.emplace(z1, sys.coboundaries);
  return c;
}

Computation compute(const GLattice& m, int q, const Limits& lim) {
  if (q < -1) throw UnsupportedDegreeError("Tate cohomology is only supported in degrees q >= -1");
  if (q <= 0) return compute_norm(m, q);
  if (q == 1) return compute_h1(m, lim);
  Computation c = compute(dimension_shift(m, lim), q - 1, lim);
  c.method = CohomologyMethod::DimensionShift;
  return c;
}

// Ambient chain map induced by F for the computation of degree q.
IntMatrix chain_map(const IntMatrix& f, const FiniteGroup& g, int q, bool on_generators) {
  if (q <= 0) return f;
  if (q == 1) return repeat_diag(f, on_generators ? g.num_generators() : g.order());
  return chain_map(repeat_diag(f, g.order() - 1), g, q - 1, on_generators);
}

std::vector<std::vector<IntMatrix>> witness_of(const Computation& c) {
  std::vector<std::vector<IntMatrix>> w;
  if (c.base_degree != 1 || c.method != CohomologyMethod::PresentationCocycles) return w;
  const GLattice& m = c.lattice;
  const std::size_t r = m.rank();
  const auto& lifts = c.sq->generator_lifts();
  for (std::size_t i = 0; i < lifts.rows(); ++i) {
    std::vector<IntMatrix> vals;
    for (std::size_t j = 0; j < m.group().num_generators(); ++j) {
      std::size_t block = c.on_generators ? j : m.group().generators()[j];
      vals.push_back(lifts.block(i, block * r, 1, r));
    }
    w.push_back(std::move(vals));
  }
  return w;
}

}  // namespace

std::string method_name(CohomologyMethod m) {
  switch (m) {
    case CohomologyMethod::NormMap:
      return "norm-map";
    case CohomologyMethod::PresentationCocycles:
      return "presentation-cocycles";
    case CohomologyMethod::DimensionShift:
      return "dimension-shift";
    case CohomologyMethod::BarOracle:
      return "bar-oracle";
  }
  return "unknown";
}

CocycleSystem cocycle_system(const GLattice& m, const Limits& lim) {
  const FiniteGroup& g = m.group();
  const std::size_t r = m.rank(), k = g.num_generators();
  CocycleSystem sys;
  if (has_presentation(g)) {
    Presentation p = presentation(g);
    if (k * r > lim.max_cocycle_unknowns)
      throw SizeLimitError("cocycle system: " + std::to_string(k * r) + " unknowns exceed the cap " +
                           std::to_string(lim.max_cocycle_unknowns));
    check_system_size(k * r, p.relators.size() * r);
    sys.blocks = k;
    sys.on_generators = true;
    sys.equations = IntMatrix(k * r, p.relators.size() * r);
    std::vector<IntMatrix> inv(k);
    for (std::size_t s = 0; s < k; ++s) inv[s] = inverse_unimodular(m.gen_action(s));
    for (std::size_t rho = 0; rho < p.relators.size(); ++rho) {
      IntMatrix prefix = IntMatrix::identity(r);
      for (const auto& l : p.relators[rho]) {
        IntMatrix coef;
        if (l.exp > 0) {
          coef = prefix;
          prefix = m.gen_action(l.gen) * prefix;
        } else {
          prefix = inv[l.gen] * prefix;
          coef = -prefix;
        }
        for (std::size_t a = 0; a < r; ++a)
          for (std::size_t b = 0; b < r; ++b)
            if (!coef(a, b).is_zero()) sys.equations(l.gen * r + a, rho * r + b) += coef(a, b);
      }
    }
    sys.coboundaries = IntMatrix(r, k * r);
    for (std::size_t s = 0; s < k; ++s) sys.coboundaries.set_block(0, s * r, minus_identity(m.gen_action(s)));
    return sys;
  }
  // Unknowns z(x) for every element.
  const std::size_t n = g.order();
  if (n * r > lim.max_cocycle_unknowns)
    throw SizeLimitError("cocycle system: " + std::to_string(n * r) + " unknowns exceed the cap " +
                         std::to_string(lim.max_cocycle_unknowns));
  const std::size_t neq = n * k + 1;
  check_system_size(n * r, neq * r);
  sys.blocks = n;
  sys.on_generators = false;
  auto acts = m.all_actions();
  sys.equations = IntMatrix(n * r, neq * r);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t si = 0; si < k; ++si) {
      const std::size_t s = g.generators()[si];
      const std::size_t xs = g.mul(x, s);
      const std::size_t col = (x * k + si) * r;
      // z(xs) - z(x) - z(s) R(x) = 0
      for (std::size_t b = 0; b < r; ++b) {
        sys.equations(xs * r + b, col + b) += 1;
        sys.equations(x * r + b, col + b) -= 1;
        for (std::size_t c = 0; c < r; ++c)
          if (!acts[x](b, c).is_zero()) sys.equations(s * r + b, col + c) -= acts[x](b, c);
      }
    }
  for (std::size_t b = 0; b < r; ++b) sys.equations(b, n * k * r + b) = 1;  // z(1) = 0
  sys.coboundaries = IntMatrix(r, n * r);
  for (std::size_t x = 0; x < n; ++x) sys.coboundaries.set_block(0, x * r, minus_identity(acts[x]));
  return sys;
}

GLattice dimension_shift(const GLattice& m, const Limits& lim) {
  const FiniteGroup& g = m.group();
  const std::size_t n = g.order(), r = m.rank();
  const std::size_t rank1 = (n - 1) * r;
  const std::size_t cap = std::min(lim.max_lattice_rank, kMaxLatticeRank);
  if (rank1 > cap)
    throw SizeLimitError("dimension shift: rank " + std::to_string(rank1) + " exceeds " + std::to_string(cap));
  auto acts = m.all_actions();
  // (1, b) == -sum_{x != 1, c} R(x^-1)[b, c] (x, c) in the quotient.
  IntMatrix one_rows(r, rank1);
  for (std::size_t x = 1; x < n; ++x) one_rows.set_block(0, (x - 1) * r, -acts[g.inv(x)]);
  std::vector<IntMatrix> gens;
  for (std::size_t s : g.generators()) {
    IntMatrix a(rank1, rank1);
    for (std::size_t x = 1; x < n; ++x) {
      const std::size_t y = g.mul(s, x);
      for (std::size_t b = 0; b < r; ++b) {
        const std::size_t row = (x - 1) * r + b;
        if (y != 0) {
          a(row, (y - 1) * r + b) = 1;
        } else {
          for (std::size_t c = 0; c < rank1; ++c) a(row, c) = one_rows(b, c);
        }
      }
    }
    gens.push_back(std::move(a));
  }
  return GLattice::trusted(m.group_ptr(), std::move(gens), {}, "shift(" + m.name() + ")");
}

CohomologyReport tate(const GLattice& m, int q, const Limits& lim) {
  Computation c = compute(m, q, lim);
  CohomologyReport rep;
  rep.group = m.group_ptr();
  rep.lattice = m;
  rep.degree = q;
  rep.value = c.sq->group();
  rep.method = c.method;
  rep.witness = witness_of(c);
  if (!rep.value.is_finite() || !rep.value.annihilated_by(Integer(static_cast<long>(m.group().order()))))
    throw InternalConsistencyError("Tate group " + rep.value.str() + " is not killed by the group order");
  return rep;
}

CohomologyReport tate(GroupPtr h, const GLattice& m, int q, const Limits& lim) {
  if (same_group(*h, m.group())) return tate(m, q, lim);
  return tate(restrict_to(m, std::move(h)), q, lim);
}

CohomologyReport ext1(const GLattice& v, const GLattice& w, const Limits& lim) {
  if (!same_group(v.group(), w.group())) throw PreconditionError("ext1: lattices over different groups");
  GLattice h = hom(v, w);
  if (h.rank() > lim.max_lattice_rank) throw SizeLimitError("ext1: Hom lattice rank exceeds the cap");
  CohomologyReport rep = tate(h, 1, lim);
  for (auto& gen : rep.witness)
    for (auto& val : gen) val = reshape(val.row(0), v.rank(), w.rank());
  return rep;
}

InducedMap induced_map(const LatticeMorphism& f, int q, const Limits& lim) {
  if (q < -1 || q > 2) throw UnsupportedDegreeError("induced_map supports q in {-1, 0, 1, 2}");
  Computation cs = compute(f.source(), q, lim);
  Computation ct = compute(f.target(), q, lim);
  IntMatrix phi = chain_map(f.matrix(), f.source().group(), q, cs.on_generators);
  const auto& lifts = cs.sq->generator_lifts();
  InducedMap im;
  im.source = cs.sq->group();
  im.target = ct.sq->group();
  const std::size_t ns = im.source.num_generators(), nt = im.target.num_generators();
  im.matrix = IntMatrix(ns, nt);
  for (std::size_t i = 0; i < ns; ++i) {
    auto img = row_times(lifts.row(i), phi);
    auto coords = ct.sq->coordinates(img);
    for (std::size_t j = 0; j < nt; ++j) im.matrix(i, j) = coords[j];
  }
  IntMatrix dt(nt, nt), ds(ns, ns);
  for (std::size_t j = 0; j < nt; ++j) dt(j, j) = im.target.generator_order(j);
  for (std::size_t i = 0; i < ns; ++i) ds(i, i) = im.source.generator_order(i);
  // Preimage of the target relations, then modulo the source relations.
  IntMatrix k = kernel_basis(vstack({im.matrix, dt}, nt));
  IntMatrix pre = hnf_basis(k.block(0, 0, k.rows(), ns));
  im.kernel = Subquotient(pre, ds).group();
  im.injective = im.kernel.is_trivial();
  im.surjective = cokernel_structure(vstack({im.matrix, dt}, nt)).is_trivial();
  return im;
}

ShapiroReport shapiro_check(GroupPtr g, const GLattice& m, int q, const Limits& lim) {
  if (!is_subgroup(m.group(), *g)) throw ContainmentError("shapiro_check: " + m.group().name() + " is not a subgroup of " + g->name());
  ShapiroReport r;
  r.induced_side = tate(induce(g, m), q, lim).value;
  r.subgroup_side = tate(m, q, lim).value;
  r.pass = r.induced_side == r.subgroup_side;
  return r;
}

CohomologyReport bar_oracle(const GLattice& m, int q) {
  const FiniteGroup& g = m.group();
  const std::size_t n = g.order(), r = m.rank();
  if (q != 1 && q != 2) throw UnsupportedDegreeError("bar_oracle supports q in {1, 2}");
  std::size_t nq = q == 1 ? n : n * n;
  if (n > 8 || nq * r > 5000) throw SizeLimitError("bar_oracle: group or cochain space too large");
  auto acts = m.all_actions();
  // d0: C^0 -> C^1, (d0 m)(g) = g m - m.
  IntMatrix d0(r, n * r);
  for (std::size_t x = 0; x < n; ++x) d0.set_block(0, x * r, minus_identity(acts[x]));
  // d1: C^1 -> C^2, (d1 f)(g,h) = g f(h) - f(gh) + f(g).
  IntMatrix d1(n * r, n * n * r);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t col = (a * n + b) * r;
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t c = 0; c < r; ++c)
          if (!acts[a](i, c).is_zero()) d1(b * r + i, col + c) += acts[a](i, c);
        d1(g.mul(a, b) * r + i, col + i) -= 1;
        d1(a * r + i, col + i) += 1;
      }
    }
  CohomologyReport rep;
  rep.group = m.group_ptr();
  rep.lattice = m;
  rep.degree = q;
  rep.method = CohomologyMethod::BarOracle;
  if (q == 1) {
    rep.value = Subquotient(kernel_basis(d1), d0).group();
    return rep;
  }
  // d2: C^2 -> C^3, (d2 f)(g,h,k) = g f(h,k) - f(gh,k) + f(g,hk) - f(g,h).
  IntMatrix d2(n * n * r, n * n * n * r);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c3 = 0; c3 < n; ++c3) {
        const std::size_t col = ((a * n + b) * n + c3) * r;
        for (std::size_t i = 0; i < r; ++i) {
          for (std::size_t c = 0; c < r; ++c)
            if (!acts[a](i, c).is_zero()) d2((b * n + c3) * r + i, col + c) += acts[a](i, c);
          d2((g.mul(a, b) * n + c3) * r + i, col + i) -= 1;
          d2((a * n + g.mul(b, c3)) * r + i, col + i) += 1;
          d2((a * n + b) * r + i, col + i) -= 1;
        }
      }
  rep.value = Subquotient(kernel_basis(d2), d1).group();
  return rep;
}

}  // namespace glattice
