// Acceptance suite. One line per criterion; run a single criterion with its
// number as the only argument.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "glattice/certificates.hpp"
#include "glattice/cohomology.hpp"
#include "glattice/errors.hpp"
#include "glattice/morphisms.hpp"
#include "glattice/paperlab.hpp"
#include "glattice/sequences.hpp"

using namespace glattice;

namespace {

constexpr std::uint64_t kSeed = 20261015;

// Wall-time budgets in seconds.
constexpr double kBudgetValues = 10;
constexpr double kBudgetFormanekProcesi = 60;
constexpr double kBudgetStablePermutation = 600;
constexpr double kBudgetExt = 600;

// Case counts for the randomized criteria.
constexpr int kOracleCases = 120;
constexpr int kShapiroCases = 40;
constexpr int kMatrixCases = 60;
constexpr int kLatticeCases = 40;
constexpr int kPermutationCases = 30;

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok) failures_.push_back(what);
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    std::ostringstream os;
    os << what << ": got " << got << ", want " << want;
    expect(got == want, os.str());
  }
  bool pass() const { return failures_.empty(); }
  int count() const { return count_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  int count_ = 0;
  std::vector<std::string> failures_;
};

std::ostream& operator<<(std::ostream& os, const FinAbGroup& a) { return os << a.str(); }

FinAbGroup ab(std::initializer_list<long> orders) {
  std::vector<Integer> v(orders.begin(), orders.end());
  return FinAbGroup::from_orders(v);
}

GroupPtr sym(std::size_t n) { return share(symmetric_group(n)); }

// ---------------------------------------------------------------- random lattices

struct Random {
  std::mt19937_64 rng{kSeed};

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }
  long between(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
  template <class T>
  const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }
};

std::vector<GroupPtr> small_groups() {
  std::vector<GroupPtr> out;
  for (const char* spec : {"cyclic(2)", "cyclic(3)", "cyclic(4)", "klein4", "sym(3)", "cyclic(6)",
                           "gens(4; (1 2 3 4), (1 3))", "product(cyclic(2), cyclic(4))",
                           "gens(8; (1 2 5 6)(3 4 7 8), (1 3 5 7)(2 8 6 4))", "cyclic(8)",
                           "product(klein4, cyclic(2))"})
    out.push_back(share(parse_group_spec(spec)));
  return out;
}

// Unimodular matrix from a few elementary row operations.
IntMatrix random_unimodular(Random& r, std::size_t n) {
  IntMatrix p = IntMatrix::identity(n);
  if (n < 2) return r.below(2) ? p : p.scaled(Integer(-1));
  for (int step = 0; step < 4; ++step) {
    std::size_t i = r.below(n), j = r.below(n);
    if (i == j) continue;
    long c = r.between(-2, 2);
    for (std::size_t k = 0; k < n; ++k) p(i, k) += Integer(c) * p(j, k);
  }
  return p;
}

GLattice change_basis(Random& r, const GLattice& m) {
  IntMatrix p = random_unimodular(r, m.rank());
  IntMatrix pi = inverse_unimodular(p);
  std::vector<IntMatrix> gens;
  for (const auto& a : m.gen_actions()) gens.push_back(p * a * pi);
  return GLattice::make(m.group_ptr(), std::move(gens), m.labels(), m.name() + "'");
}

// Rank <= max_rank piece: trivial, sign, coset lattice, augmentation kernel or its dual.
GLattice random_piece(Random& r, const GroupPtr& g, std::size_t max_rank) {
  std::vector<FiniteGroup> subs;
  for (auto& h : subgroups(*g))
    if (g->order() / h.order() <= max_rank + 1) subs.push_back(std::move(h));
  for (int attempt = 0; attempt < 20; ++attempt) {
    switch (r.below(5)) {
      case 0: return trivial_lattice(g);
      case 1: return sign_lattice(g);
      case 2: {
        const FiniteGroup& h = r.pick(subs);
        if (g->order() / h.order() <= max_rank) return coset_lattice(g, h);
        break;
      }
      default: {
        const FiniteGroup& h = r.pick(subs);
        if (h.order() == g->order()) break;
        GLattice k = kernel_of(aug(g, h)).lattice;
        return r.below(2) ? k : dual(k);
      }
    }
  }
  return trivial_lattice(g);
}

GLattice random_lattice(Random& r, const GroupPtr& g, std::size_t max_rank) {
  GLattice m = random_piece(r, g, max_rank);
  if (m.rank() == 1 && r.below(3) == 0) {
    GLattice other = random_piece(r, g, max_rank);
    m = tensor(m, other);
  }
  while (m.rank() < max_rank && r.below(2)) m = direct_sum(m, random_piece(r, g, max_rank - m.rank()));
  return change_basis(r, m);
}

GLattice random_permutation_lattice(Random& r, const GroupPtr& g, std::size_t max_rank) {
  std::vector<FiniteGroup> subs;
  for (auto& h : subgroups(*g))
    if (g->order() / h.order() <= max_rank) subs.push_back(std::move(h));
  GLattice m = coset_lattice(g, r.pick(subs));
  if (r.below(2)) {
    const FiniteGroup& h = r.pick(subs);
    if (m.rank() + g->order() / h.order() <= max_rank) m = direct_sum(m, coset_lattice(g, h));
  }
  return m;
}

IntMatrix random_matrix(Random& r) {
  std::size_t rows = 1 + r.below(6), cols = 1 + r.below(6);
  IntMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = r.below(3) ? Integer(r.between(-9, 9)) : Integer(0);
  if (r.below(4) == 0 && rows > 1)
    for (std::size_t j = 0; j < cols; ++j) a(rows - 1, j) = a(0, j) * Integer(r.between(-3, 3));
  return a;
}

// ---------------------------------------------------------------- criteria

void degree_four_values(Check& c) {
  GroupPtr v = share(klein_four());
  GLattice a3 = restrict_to(root_lattice(sym(4)), v);
  GLattice z = trivial_lattice(v);
  c.equal(tate(a3, 1).value, ab({4}), "H^1(V, A_3)");
  int cyclic = 0;
  std::vector<GroupPtr> order_two;
  for (const auto& h : cyclic_subgroups(*v)) {
    if (h.order() != 2) continue;
    ++cyclic;
    order_two.push_back(share(h));
    c.equal(tate(order_two.back(), a3, 1).value, ab({2}), "H^1(" + h.name() + ", A_3)");
  }
  c.equal(cyclic, 3, "cyclic subgroups of order 2");
  c.equal(tate(a3, -1).value, ab({2, 2}), "H^-1(V, A_3)");
  c.equal(tate(z, 2).value, ab({2, 2}), "H^2(V, Z)");
  GLattice zl = character_lattice(v, {-1, -1});
  c.equal(tate(zl, 1).value, ab({2}), "H^1(V, Z_lambda)");
  c.equal(tate(direct_sum(z, tensor(a3, zl)), 2).value, ab({2, 2, 2}), "H^2(V, Z (+) A_3 (x) Z_lambda)");
  GroupPtr c2 = share(cyclic_group(2));
  c.expect(tate(power(regular_lattice(c2), 2), 2).value.is_trivial(), "H^2(C_2, Z[C_2]^2) = 0");

  std::vector<GLattice> split;
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) split.push_back(character_lattice(v, {s1, s2}));
  for (const auto& h : order_two)
    for (int s : {1, -1}) split.push_back(induce(v, character_lattice(h, {s})));
  c.equal(split.size(), std::size_t{10}, "split lattices");
  for (const auto& l : split)
    c.expect(tate(l, 2).value.annihilated_by(Integer(2)), "2 H^2(V, " + l.name() + ") = 0");
}

void formanek_procesi(Check& c) {
  for (std::size_t n = 3; n <= 7; ++n) {
    const std::string tag = " (n = " + std::to_string(n) + ")";
    GroupPtr g = sym(n);
    LatticeMorphism f = fp_f(g);
    KernelResult k = kernel_of(f);
    c.expect(f.is_surjective(), "f surjective" + tag);
    c.expect(check_exact({k.inclusion, f}).pass(), "sequence exact" + tag);
    c.equal(k.lattice.rank(), n * n + 1, "rank K" + tag);
    c.expect(is_faithful(k.lattice).faithful, "K faithful" + tag);
    if (n <= 5) {
      auto cert = fp_kernel_certificate(g);
      c.expect(cert && cert->verified, "certificate K = U (+) U (+) A(x)A" + tag);
      if (cert) c.expect(IsoCertificate{cert->intertwiner, cert->source, cert->target}.verify(), "recheck" + tag);
    }
  }
}

void stable_permutation(Check& c) {
  for (std::size_t n : {3, 5}) {
    const std::string tag = " (n = " + std::to_string(n) + ")";
    GroupPtr g = sym(n);
    GLattice u = natural_lattice(g), z = trivial_lattice(g);
    GLattice left = direct_sum({sym2(root_lattice(g)), u, z});
    GLattice right = direct_sum({coset_lattice(g, young_subgroup({n - 2, 2})), u, z});
    c.equal(left.rank(), n == 3 ? std::size_t{7} : std::size_t{16}, "rank" + tag);
    IsoSearchResult r = zg_iso_certificate(left, right);
    c.expect(r.outcome == IsoOutcome::Found && r.certificate && r.certificate->verify(), "certificate" + tag);
    if (r.certificate) c.expect(is_unimodular(r.certificate->intertwiner), "unimodular" + tag);
  }
}

void ext_vanishing(Check& c) {
  GroupPtr s4 = sym(4), s5 = sym(5);
  c.expect(ext1(root_lattice(s4), natural_lattice(s4)).value.is_trivial(), "Ext^1(A_3, U_4) = 0");
  c.expect(ext1(root_lattice(s5), natural_lattice(s5)).value.is_trivial(), "Ext^1(A_4, U_5) = 0");
  c.expect(ext1(root_lattice(s5), sym2(root_lattice(s5))).value.is_trivial(), "Ext^1(A_4, Sym^2 A_4) = 0");
  GroupPtr g = share(young_subgroup({3, 2}));
  InducedMap im = induced_map(aug_dual_natural(g), 2);
  c.equal(im.source, ab({2, 2}), "H^2(S_3 x S_2, Z)");
  c.expect(im.injective, "H^2(S_3 x S_2, Z) -> H^2(S_3 x S_2, U_5) injective");
}

void diagram_realization(Check& c) {
  for (int n : {3, 5}) {
    const std::string tag = " (n = " + std::to_string(n) + ")";
    SymSquareRealization s = realize_sym_square_diagram(n);
    c.expect(s.diagram.has_value(), "preimage cocycle found" + tag);
    if (!s.diagram) continue;
    std::size_t ra = static_cast<std::size_t>(n - 1);
    c.equal(s.extension->rank(), ra * (ra - 1) / 2 + ra, "rank L" + tag);
    for (const auto& st : check_diagram(*s.diagram).steps)
      c.expect(st.pass, st.claim + tag + (st.detail.empty() ? "" : ": " + st.detail));
  }
}

void crossed_bounds(Check& c) {
  CrossedBoundResult v = run_crossed_bound("klein4", 4, "(1 2)(3 4);(1 3)(2 4)");
  c.expect(v.report.pass(), "V <= S_4 report passes");
  const BoundEntry* b = v.bound.find("crossed-product");
  c.expect(b && b->value == 5, "V <= S_4 bound 5");
  LatticeMorphism f = crossed_product_map(share(klein_four()), share(klein_four())->generators());
  KernelResult k = kernel_of(f);
  c.equal(k.lattice.rank(), std::size_t{5}, "V kernel rank");
  c.expect(is_faithful(k.lattice).faithful, "V kernel faithful");

  bool refused = false;
  try {
    run_crossed_bound("cyclic(6)", 6, "(1 2 3 4 5 6)");
  } catch (const PreconditionError&) {
    refused = true;
  }
  c.expect(refused, "C_6 regular with r = 1 refused");

  BoundReport b5 = bounds_for(5);
  auto value = [](const BoundReport& r, const char* label) {
    const BoundEntry* e = r.find(label);
    return e ? e->value : -1;
  };
  c.equal(value(b5, "odd-half-product"), 6, "n = 5 odd-half-product");
  c.equal(value(b5, "rowen-odd"), 11, "n = 5 rowen-odd");
  c.equal(value(b5, "n2-minus-2n"), 15, "n = 5 n2-minus-2n");
  c.equal(b5.best_lower, 2, "n = 5 lower");
  BoundReport b4 = bounds_for(4);
  c.equal(b4.best_lower, 4, "n = 4 lower");
  c.equal(b4.best_upper, 5, "n = 4 upper");
  for (long n : {2, 3, 6}) {
    BoundReport r = bounds_for(n);
    c.expect(r.best_lower == 2 && r.best_upper == 2, "n = " + std::to_string(n) + " exact 2");
  }
}

void oracle_equivalence(Check& c) {
  Random r;
  r.rng.seed(kSeed + 7);
  auto groups = small_groups();
  int nontrivial = 0;
  for (int i = 0; i < kOracleCases; ++i) {
    GroupPtr g = r.pick(groups);
    GLattice m = random_lattice(r, g, 3);
    for (int q : {1, 2}) {
      FinAbGroup engine = tate(m, q).value;
      FinAbGroup bar = bar_oracle(m, q).value;
      nontrivial += !engine.is_trivial();
      c.expect(engine == bar, "H^" + std::to_string(q) + "(" + g->name() + ", " + m.name() + "): engine " +
                                  engine.str() + ", bar " + bar.str());
    }
  }
  // Guards against a generator that only produces cohomologically trivial lattices.
  c.expect(nontrivial >= kOracleCases / 2, "nontrivial oracle comparisons: " + std::to_string(nontrivial));
  for (int i = 0; i < kShapiroCases; ++i) {
    GroupPtr g = r.pick(groups);
    auto subs = subgroups(*g);
    GroupPtr h = share(r.pick(subs));
    GLattice m = random_lattice(r, h, 2);
    for (int q : {-1, 0, 1, 2}) {
      ShapiroReport s = shapiro_check(g, m, q);
      c.expect(s.pass, "Shapiro q = " + std::to_string(q) + " for " + h->name() + " <= " + g->name() + ": " +
                           s.induced_side.str() + " vs " + s.subgroup_side.str());
    }
  }
}

void structural_invariants(Check& c) {
  Random r;
  r.rng.seed(kSeed + 8);
  for (int i = 0; i < kMatrixCases; ++i) {
    IntMatrix a = random_matrix(r);
    HnfResult h = hnf(a);
    c.expect(h.u * a == h.h && is_unimodular(h.u), "HNF transform identity");
    SnfResult s = snf(a);
    c.expect(s.u * a * s.v == s.d && is_unimodular(s.u) && is_unimodular(s.v), "SNF transform identity");
    c.equal(s.rank, h.rank, "SNF rank = HNF rank");
    bool chain = true;
    for (std::size_t k = 0; k + 1 < s.rank; ++k) {
      std::int64_t d0 = s.diagonal[k].to_int64(), d1 = s.diagonal[k + 1].to_int64();
      chain = chain && d0 > 0 && d1 % d0 == 0;
    }
    c.expect(chain, "SNF divisibility chain");
  }

  auto groups = small_groups();
  for (int i = 0; i < kLatticeCases; ++i) {
    GroupPtr g = r.pick(groups);
    GLattice m = random_lattice(r, g, 3);
    if (r.below(2)) m = direct_sum(m, random_lattice(r, g, 2));
    const std::size_t n = m.rank();
    c.equal(sym2(m).rank() + ext2(m).rank(), n * n, "rank Sym^2 + rank Lambda^2 for " + m.name());
    for (int q = -1; q <= 3; ++q) {
      FinAbGroup t = tate(m, q).value;
      c.expect(t.is_finite() && t.annihilated_by(Integer(static_cast<long>(g->order()))),
               "H^" + std::to_string(q) + "(" + g->name() + ", " + m.name() + ") = " + t.str() + " killed by |G|");
    }
  }
  groups.push_back(sym(4));
  for (int i = 0; i < kPermutationCases; ++i) {
    GroupPtr g = r.pick(groups);
    GLattice p = random_permutation_lattice(r, g, 6);
    GLattice q = random_permutation_lattice(r, g, 4);
    c.expect(ext1(p, q).value.is_trivial(), "Ext^1(" + p.name() + ", " + q.name() + ") = 0 over " + g->name());
    c.expect(perm_projective_test(p).pass, p.name() + " passes the permutation projective test");
  }
  for (long n : {5, 7}) {
    long lam = static_cast<long>(ext2(root_lattice(sym(static_cast<std::size_t>(n)))).rank());
    c.equal(bounds_for(n).find("odd-half-product")->value, lam, "odd-half-product = rank Lambda^2 A_{n-1}");
  }
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;  // 0: no budget
  std::function<void(Check&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> all = {
      {1, "degree four cohomology values", kBudgetValues, degree_four_values},
      {2, "Formanek-Procesi sequence and kernel certificates", kBudgetFormanekProcesi, formanek_procesi},
      {3, "stable permutation certificates", kBudgetStablePermutation, stable_permutation},
      {4, "Ext vanishing and restriction injectivity", kBudgetExt, ext_vanishing},
      {5, "diagram over Lambda^2 A_{n-1}", 0, diagram_realization},
      {6, "crossed-product and table bounds", 0, crossed_bounds},
      {7, "oracle equivalence", 0, oracle_equivalence},
      {8, "structural invariants", 0, structural_invariants},
  };
  int only = argc > 1 ? std::atoi(argv[1]) : 0;
  bool ok = true;
  for (const auto& cr : all) {
    if (only && cr.id != only) continue;
    Check c;
    auto start = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.budget_s > 0) c.expect(t < cr.budget_s, "wall time within " + std::to_string(cr.budget_s) + " s");
    ok = ok && c.pass();
    std::cout << "criterion " << cr.id << " (" << cr.name << "): " << (c.pass() ? "PASS" : "FAIL") << " ["
              << c.count() << " checks, " << t << " s]\n";
    for (const auto& f : c.failures()) std::cout << "    failed: " << f << '\n';
  }
  return ok ? 0 : 1;
}
