#include "glattice/lattice.hpp"

#include <sstream>

#include "glattice/errors.hpp"

namespace glattice {

namespace {

// Full verification gets expensive for large ranks; above this size the
// constructions below are trusted (they conjugate or restrict valid actions).
constexpr std::size_t kVerifyRankLimit = 200;

IntMatrix perm_matrix(const Perm& p) {
  IntMatrix m(p.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m(i, static_cast<std::size_t>(p[i])) = 1;
  return m;
}

std::vector<std::string> numbered(const std::string& prefix, std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(prefix + std::to_string(i + 1));
  return v;
}

GLattice checked(GroupPtr g, std::vector<IntMatrix> gens, std::vector<std::string> labels, std::string name) {
  std::size_t r = gens.empty() ? labels.size() : gens[0].rows();
  if (r <= kVerifyRankLimit) return GLattice::make(std::move(g), std::move(gens), std::move(labels), std::move(name));
  return GLattice::trusted(std::move(g), std::move(gens), std::move(labels), std::move(name));
}

void check_rank(std::size_t r, const char* what) {
  if (r > kMaxLatticeRank)
    throw SizeLimitError(std::string(what) + ": rank " + std::to_string(r) + " exceeds " + std::to_string(kMaxLatticeRank));
}

void require_same_group(const GLattice& a, const GLattice& b, const char* what) {
  if (!same_group(a.group(), b.group())) throw ExpressionError(std::string(what) + ": lattices over different groups");
}

IntMatrix inverse_action(const GLattice& m, std::size_t gen) { return inverse_unimodular(m.gen_action(gen)); }

}  // namespace

// ---------------------------------------------------------------- GLattice

GLattice GLattice::make(GroupPtr g, std::vector<IntMatrix> gen_actions, std::vector<std::string> labels,
                        std::string name) {
  GLattice m = trusted(std::move(g), std::move(gen_actions), std::move(labels), std::move(name));
  m.verify();
  return m;
}

GLattice GLattice::trusted(GroupPtr g, std::vector<IntMatrix> gen_actions, std::vector<std::string> labels,
                           std::string name) {
  if (!g) throw PreconditionError("GLattice: null group");
  if (gen_actions.size() != g->num_generators())
    throw PreconditionError("GLattice: need one action matrix per generator of " + g->name());
  GLattice m;
  m.group_ = std::move(g);
  m.rank_ = gen_actions.empty() ? labels.size() : gen_actions[0].rows();
  for (const auto& a : gen_actions)
    if (a.rows() != m.rank_ || a.cols() != m.rank_) throw PreconditionError("GLattice: action matrices of unequal size");
  if (labels.size() != m.rank_) labels = numbered("e", m.rank_);
  m.gens_ = std::move(gen_actions);
  m.labels_ = std::move(labels);
  m.name_ = std::move(name);
  return m;
}

void GLattice::verify() const {
  for (const auto& a : gens_)
    if (!abs(determinant(a)).is_one())
      throw InternalConsistencyError("lattice " + name_ + ": action matrix is not unimodular");
  const FiniteGroup& g = *group_;
  if (has_presentation(g)) {
    Presentation p = presentation(g);
    std::vector<IntMatrix> inv(gens_.size());
    for (const auto& rel : p.relators) {
      IntMatrix acc = IntMatrix::identity(rank_);
      for (const auto& l : rel) {
        const IntMatrix* r = &gens_[l.gen];
        if (l.exp < 0) {
          if (inv[l.gen].rows() != rank_) inv[l.gen] = inverse_unimodular(gens_[l.gen]);
          r = &inv[l.gen];
        }
        acc = *r * acc;  // anti-homomorphism: later letters multiply on the left
      }
      if (!acc.is_identity()) throw InternalConsistencyError("lattice " + name_ + ": a relator does not act trivially");
    }
    return;
  }
  // No presentation: check that the BFS-defined map is compatible with every
  // product x * s.
  auto all = all_actions();
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t s = 0; s < gens_.size(); ++s)
      if (all[g.mul(x, g.generators()[s])] != gens_[s] * all[x])
        throw InternalConsistencyError("lattice " + name_ + ": generator matrices do not define an action");
}

IntMatrix GLattice::action(std::size_t x) const {
  IntMatrix acc = IntMatrix::identity(rank_);
  for (const auto& l : group_->word(x)) acc = gens_[l.gen] * acc;
  return acc;
}

std::vector<IntMatrix> GLattice::all_actions() const {
  const FiniteGroup& g = *group_;
  std::vector<IntMatrix> out(g.order());
  out[0] = IntMatrix::identity(rank_);
  for (std::size_t x : g.bfs_order()) {
    if (x == 0) continue;
    out[x] = gens_[g.parent_gen(x)] * out[g.parent(x)];
  }
  return out;
}

IntMatrix GLattice::norm_matrix() const {
  IntMatrix n(rank_, rank_);
  for (const auto& a : all_actions()) n = n + a;
  return n;
}

GLattice GLattice::renamed(std::string name) const {
  GLattice m = *this;
  m.name_ = std::move(name);
  return m;
}

// ---------------------------------------------------------------- morphisms

bool same_group(const FiniteGroup& a, const FiniteGroup& b) {
  if (&a == &b) return true;
  return a.degree() == b.degree() && a.generators() == b.generators() && a.elements() == b.elements();
}

LatticeMorphism LatticeMorphism::trusted(GLattice source, GLattice target, IntMatrix matrix, std::string name) {
  require_same_group(source, target, "morphism");
  if (matrix.rows() != source.rank() || matrix.cols() != target.rank())
    throw PreconditionError("morphism " + name + ": matrix shape does not match source/target ranks");
  LatticeMorphism f;
  f.source_ = std::move(source);
  f.target_ = std::move(target);
  f.matrix_ = std::move(matrix);
  f.name_ = std::move(name);
  return f;
}

LatticeMorphism LatticeMorphism::make(GLattice source, GLattice target, IntMatrix matrix, std::string name) {
  LatticeMorphism f = trusted(std::move(source), std::move(target), std::move(matrix), std::move(name));
  if (!f.intertwines()) throw InternalConsistencyError("morphism " + f.name_ + " is not G-equivariant");
  return f;
}

bool LatticeMorphism::intertwines() const {
  for (std::size_t s = 0; s < source_.gen_actions().size(); ++s)
    if (source_.gen_action(s) * matrix_ != matrix_ * target_.gen_action(s)) return false;
  return true;
}

bool LatticeMorphism::is_injective() const { return rank(matrix_) == source_.rank(); }

bool LatticeMorphism::is_surjective() const {
  if (target_.rank() == 0) return true;
  auto d = elementary_divisors(matrix_);
  std::size_t units = 0;
  for (const auto& x : d)
    if (x.is_one()) ++units;
  return units == target_.rank();
}

LatticeMorphism compose(const LatticeMorphism& f, const LatticeMorphism& g) {
  if (f.target().rank() != g.source().rank() || !same_group(f.target().group(), g.source().group()))
    throw PreconditionError("compose: " + f.name() + " and " + g.name() + " are not composable");
  return LatticeMorphism::trusted(f.source(), g.target(), f.matrix() * g.matrix(), g.name() + "." + f.name());
}

LatticeMorphism identity_morphism(const GLattice& m) {
  return LatticeMorphism::trusted(m, m, IntMatrix::identity(m.rank()), "id");
}

LatticeMorphism zero_morphism(const GLattice& s, const GLattice& t) {
  return LatticeMorphism::trusted(s, t, IntMatrix(s.rank(), t.rank()), "0");
}

// ---------------------------------------------------------------- atoms

GLattice trivial_lattice(GroupPtr g) {
  std::vector<IntMatrix> gens(g->num_generators(), IntMatrix::identity(1));
  return GLattice::trusted(std::move(g), std::move(gens), {"1"}, "Z");
}

GLattice character_lattice(GroupPtr g, const std::vector<int>& signs, std::string name) {
  if (signs.size() != g->num_generators())
    throw ExpressionError("character: need one sign per generator (" + std::to_string(g->num_generators()) + ")");
  std::vector<IntMatrix> gens;
  std::string label;
  for (int s : signs) {
    if (s != 1 && s != -1) throw ExpressionError("character: signs must be +1 or -1");
    gens.push_back(IntMatrix{{Integer(s)}});
    label += s > 0 ? '+' : '-';
  }
  if (name.empty()) name = "Z_{" + label + "}";
  return GLattice::make(std::move(g), std::move(gens), {"1"}, std::move(name));
}

GLattice sign_lattice(GroupPtr g) {
  std::vector<int> signs;
  for (std::size_t s : g->generators()) {
    const Perm& p = g->element(s);
    std::vector<bool> seen(p.size());
    int sign = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
        seen[j] = true;
        ++len;
      }
      if (len % 2 == 0) sign = -sign;
    }
    signs.push_back(sign);
  }
  return character_lattice(std::move(g), signs, "Z_-");
}

GLattice permutation_lattice(GroupPtr g, const std::vector<Perm>& gen_perms, std::string name) {
  std::vector<IntMatrix> gens;
  for (const auto& p : gen_perms) gens.push_back(perm_matrix(p));
  std::size_t n = gen_perms.empty() ? 0 : gen_perms[0].size();
  return checked(std::move(g), std::move(gens), numbered("b", n), std::move(name));
}

GLattice regular_lattice(GroupPtr g) {
  const std::size_t n = g->order();
  check_rank(n, "regular");
  std::vector<IntMatrix> gens;
  for (std::size_t s : g->generators()) {
    IntMatrix m(n, n);
    for (std::size_t x = 0; x < n; ++x) m(x, g->mul(s, x)) = 1;
    gens.push_back(std::move(m));
  }
  std::vector<std::string> labels;
  for (const auto& p : g->elements()) labels.push_back(perm_to_cycles(p));
  return GLattice::trusted(g, std::move(gens), std::move(labels), "Z[" + g->name() + "]");
}

GLattice coset_lattice(GroupPtr g, const FiniteGroup& h) {
  CosetAction ca = coset_action(*g, h);
  std::string name = "Z[" + g->name() + "/" + h.name() + "]";
  GLattice m = permutation_lattice(g, ca.generator_action, name);
  std::vector<std::string> labels;
  for (const auto& c : ca.cosets) labels.push_back(perm_to_cycles(g->element(c[0])) + "H");
  return GLattice::trusted(g, m.gen_actions(), std::move(labels), std::move(name));
}

GLattice natural_lattice(GroupPtr g) {
  std::vector<Perm> perms;
  for (std::size_t s : g->generators()) perms.push_back(g->element(s));
  return permutation_lattice(g, perms, "U" + std::to_string(g->degree()));
}

GLattice root_lattice(GroupPtr g) {
  const std::size_t n = g->degree();
  if (n < 1) throw PreconditionError("root lattice needs degree >= 1");
  std::vector<IntMatrix> gens;
  for (std::size_t s : g->generators()) {
    const Perm& p = g->element(s);
    IntMatrix m(n - 1, n - 1);
    const std::size_t gn = static_cast<std::size_t>(p[n - 1]);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const std::size_t gi = static_cast<std::size_t>(p[i]);
      if (gi != n - 1) m(i, gi) += 1;
      if (gn != n - 1) m(i, gn) -= 1;
    }
    gens.push_back(std::move(m));
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i + 1 < n; ++i) labels.push_back("b" + std::to_string(i + 1) + "-b" + std::to_string(n));
  return checked(std::move(g), std::move(gens), std::move(labels), "A" + std::to_string(n - 1));
}

GLattice augmentation_ideal(GroupPtr g, const FiniteGroup& h) {
  GLattice reg = regular_lattice(g);
  GLattice quo = coset_lattice(g, h);
  CosetAction ca = coset_action(*g, h);
  IntMatrix pi(g->order(), ca.degree());
  for (std::size_t x = 0; x < g->order(); ++x) pi(x, ca.coset_of[x]) = 1;
  auto k = kernel_of(LatticeMorphism::trusted(reg, quo, pi, "pi"));
  return k.lattice.renamed("w(" + h.name() + ")");
}

// ---------------------------------------------------------------- constructions

GLattice direct_sum(const std::vector<GLattice>& parts) {
  if (parts.empty()) throw PreconditionError("direct_sum of nothing");
  std::vector<IntMatrix> gens;
  std::vector<std::string> labels;
  std::string name;
  std::size_t total = 0;
  for (const auto& p : parts) {
    require_same_group(parts[0], p, "direct sum");
    labels.insert(labels.end(), p.labels().begin(), p.labels().end());
    name += (name.empty() ? "" : " (+) ") + p.name();
    total += p.rank();
  }
  check_rank(total, "direct sum");
  for (std::size_t s = 0; s < parts[0].gen_actions().size(); ++s) {
    std::vector<IntMatrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.gen_action(s));
    gens.push_back(block_diag(blocks));
  }
  return GLattice::trusted(parts[0].group_ptr(), std::move(gens), std::move(labels), std::move(name));
}

GLattice direct_sum(const GLattice& a, const GLattice& b) { return direct_sum(std::vector<GLattice>{a, b}); }

GLattice power(const GLattice& a, std::size_t copies) {
  if (copies == 0) throw PreconditionError("power: need at least one copy");
  GLattice s = direct_sum(std::vector<GLattice>(copies, a));
  return s.renamed(a.name() + "^" + std::to_string(copies));
}

GLattice tensor(const GLattice& a, const GLattice& b) {
  require_same_group(a, b, "tensor");
  check_rank(a.rank() * b.rank(), "tensor");
  std::vector<IntMatrix> gens;
  for (std::size_t s = 0; s < a.gen_actions().size(); ++s) gens.push_back(kron(a.gen_action(s), b.gen_action(s)));
  std::vector<std::string> labels;
  for (const auto& x : a.labels())
    for (const auto& y : b.labels()) labels.push_back(x + "*" + y);
  return GLattice::trusted(a.group_ptr(), std::move(gens), std::move(labels), "(" + a.name() + ")(x)(" + b.name() + ")");
}

GLattice sym2(const GLattice& a) {
  const std::size_t r = a.rank();
  check_rank(r * (r + 1) / 2, "sym2");
  std::vector<std::vector<std::size_t>> idx(r, std::vector<std::size_t>(r));
  std::vector<std::string> labels;
  std::size_t c = 0;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) {
      idx[i][j] = idx[j][i] = c++;
      labels.push_back(a.labels()[i] + "." + a.labels()[j]);
    }
  std::vector<IntMatrix> gens;
  for (const auto& R : a.gen_actions()) {
    IntMatrix m(c, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i; j < r; ++j) {
        const std::size_t row = idx[i][j];
        for (std::size_t k = 0; k < r; ++k) {
          if (R(i, k).is_zero() && R(j, k).is_zero()) continue;
          for (std::size_t l = k; l < r; ++l) {
            Integer v = R(i, k) * R(j, l);
            if (k != l) v.addmul(R(i, l), R(j, k));
            if (!v.is_zero()) m(row, idx[k][l]) = std::move(v);
          }
        }
      }
    gens.push_back(std::move(m));
  }
  return GLattice::trusted(a.group_ptr(), std::move(gens), std::move(labels), "Sym2(" + a.name() + ")");
}

GLattice ext2(const GLattice& a) {
  const std::size_t r = a.rank();
  check_rank(r * (r > 0 ? r - 1 : 0) / 2, "ext2");
  std::vector<std::vector<std::size_t>> idx(r, std::vector<std::size_t>(r));
  std::vector<std::string> labels;
  std::size_t c = 0;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      idx[i][j] = c++;
      labels.push_back(a.labels()[i] + "^" + a.labels()[j]);
    }
  std::vector<IntMatrix> gens;
  for (const auto& R : a.gen_actions()) {
    IntMatrix m(c, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k) {
          if (R(i, k).is_zero() && R(j, k).is_zero()) continue;
          for (std::size_t l = k + 1; l < r; ++l) {
            Integer v = R(i, k) * R(j, l);
            v.submul(R(i, l), R(j, k));
            if (!v.is_zero()) m(idx[i][j], idx[k][l]) = std::move(v);
          }
        }
    gens.push_back(std::move(m));
  }
  return GLattice::trusted(a.group_ptr(), std::move(gens), std::move(labels), "Lambda2(" + a.name() + ")");
}

GLattice dual(const GLattice& a) {
  std::vector<IntMatrix> gens;
  for (std::size_t s = 0; s < a.gen_actions().size(); ++s) gens.push_back(inverse_action(a, s).transpose());
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back(l + "'");
  return GLattice::trusted(a.group_ptr(), std::move(gens), std::move(labels), "dual(" + a.name() + ")");
}

GLattice hom(const GLattice& a, const GLattice& b) {
  return tensor(dual(a), b).renamed("Hom(" + a.name() + ", " + b.name() + ")");
}

GLattice restrict_to(const GLattice& a, GroupPtr h) {
  const FiniteGroup& g = a.group();
  embed(*h, g);  // containment check
  std::vector<IntMatrix> gens;
  for (std::size_t s : h->generators()) gens.push_back(a.action(g.index_of(h->element(s))));
  return GLattice::trusted(h, std::move(gens), a.labels(), "Res(" + a.name() + ")");
}

GLattice induce(GroupPtr g, const GLattice& m) {
  const FiniteGroup& h = m.group();
  CosetAction ca = coset_action(*g, h);
  const std::size_t k = ca.degree(), r = m.rank();
  check_rank(k * r, "induce");
  std::vector<IntMatrix> gens;
  for (std::size_t s : g->generators()) {
    IntMatrix big(k * r, k * r);
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t ti = ca.cosets[i][0];
      std::size_t sti = g->mul(s, ti);
      std::size_t j = ca.coset_of[sti];
      std::size_t hx = g->mul(g->inv(ca.cosets[j][0]), sti);
      big.set_block(i * r, j * r, m.action(h.index_of(g->element(hx))));
    }
    gens.push_back(std::move(big));
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i)
    for (const auto& l : m.labels()) labels.push_back("t" + std::to_string(i + 1) + "@" + l);
  return GLattice::trusted(g, std::move(gens), std::move(labels), "Ind(" + m.name() + ")");
}

// ---------------------------------------------------------------- kernels and quotients

KernelResult sublattice(const GLattice& m, const IntMatrix& basis, std::string name) {
  RowSpace rs(basis);
  if (rs.rank() != basis.rows()) throw PreconditionError("sublattice: basis rows are dependent");
  std::vector<IntMatrix> gens;
  for (const auto& R : m.gen_actions()) {
    auto x = rs.solve_rows(basis * R);
    if (!x) throw PreconditionError("sublattice: span is not G-stable");
    gens.push_back(std::move(*x));
  }
  GLattice k = checked(m.group_ptr(), std::move(gens), numbered("k", basis.rows()), std::move(name));
  return {k, LatticeMorphism::trusted(k, m, basis, "incl")};
}

KernelResult kernel_of(const LatticeMorphism& f) {
  IntMatrix k = kernel_basis(f.matrix());
  return sublattice(f.source(), k, "ker(" + f.name() + ")");
}

QuotientResult quotient_by_saturated(const GLattice& m, const IntMatrix& sub) {
  IntMatrix s = hnf_basis(sub);
  const std::size_t k = s.rows(), r = m.rank();
  std::vector<Integer> torsion;
  for (const auto& d : elementary_divisors(s))
    if (!d.is_zero() && !d.is_one()) torsion.push_back(d);
  if (!torsion.empty()) {
    std::ostringstream os;
    os << "quotient: sublattice is not saturated, cokernel torsion invariant factors";
    for (const auto& d : torsion) os << ' ' << d;
    throw PreconditionError(os.str());
  }
  SnfResult sn = snf(s);
  IntMatrix vinv = inverse_unimodular(sn.v);
  std::vector<IntMatrix> gens;
  for (const auto& R : m.gen_actions()) {
    IntMatrix c = vinv * R * sn.v;
    if (!c.block(0, k, k, r - k).is_zero()) throw PreconditionError("quotient: sublattice is not G-stable");
    gens.push_back(c.block(k, k, r - k, r - k));
  }
  GLattice q = checked(m.group_ptr(), std::move(gens), numbered("q", r - k), m.name() + "/sub");
  return {q, LatticeMorphism::trusted(m, q, sn.v.block(0, k, r, r - k), "proj")};
}

QuotientResult cokernel_of(const LatticeMorphism& f) {
  if (!f.is_injective()) throw PreconditionError("cokernel_of: " + f.name() + " is not injective");
  auto q = quotient_by_saturated(f.target(), f.matrix());
  return {q.lattice.renamed("coker(" + f.name() + ")"), q.projection};
}

}  // namespace glattice
