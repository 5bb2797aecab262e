#include "glattice/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "glattice/errors.hpp"

namespace glattice {

namespace {

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : p) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

constexpr std::size_t kTableLimit = 512;

void check_perm(const Perm& p, std::size_t degree) {
  if (p.size() != degree) throw PreconditionError("permutation has wrong degree");
  std::vector<bool> seen(degree);
  for (int x : p) {
    if (x < 0 || static_cast<std::size_t>(x) >= degree || seen[x]) throw PreconditionError("not a permutation");
    seen[x] = true;
  }
}

std::string gens_label(const std::vector<Perm>& gens) {
  std::string s = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? "," : "") + perm_to_cycles(gens[i]);
  return s + ">";
}

using Mask = std::uint64_t;

Mask close_mask(const FiniteGroup& g, Mask gens) {
  Mask result = 1;  // identity
  std::vector<std::size_t> frontier{0}, gl;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (gens >> i & 1) gl.push_back(i);
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t x : frontier)
      for (std::size_t s : gl) {
        std::size_t y = g.mul(x, s);
        if (!(result >> y & 1)) {
          result |= Mask(1) << y;
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  return result;
}

// Small generating set for a subgroup given by its elements (sorted indices).
std::vector<std::size_t> pick_generators(const FiniteGroup& g, const std::vector<std::size_t>& elems) {
  for (std::size_t x : elems)
    if (g.element_order(x) == elems.size() && elems.size() > 1) return {x};
  std::vector<std::size_t> gens;
  std::unordered_set<std::size_t> have{0};
  std::vector<std::size_t> members{0};
  for (std::size_t x : elems) {
    if (have.count(x)) continue;
    gens.push_back(x);
    // Re-close incrementally: multiply everything by all generators until stable.
    std::vector<std::size_t> frontier = members;
    while (!frontier.empty()) {
      std::vector<std::size_t> next;
      for (std::size_t y : frontier)
        for (std::size_t s : gens) {
          std::size_t z = g.mul(y, s);
          if (have.insert(z).second) {
            members.push_back(z);
            next.push_back(z);
          }
        }
      frontier = std::move(next);
    }
  }
  return gens;
}

FiniteGroup subgroup_from_elements(const FiniteGroup& g, const std::vector<std::size_t>& elems) {
  if (elems.size() == g.order()) return g;
  std::vector<std::size_t> gi = pick_generators(g, elems);
  std::vector<Perm> gens;
  for (std::size_t x : gi) gens.push_back(g.element(x));
  return from_generators(g.degree(), gens, elems.size() == 1 ? "1" : gens_label(gens));
}

void sort_subgroups(std::vector<std::pair<std::vector<std::size_t>, FiniteGroup>>& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
}

std::vector<std::size_t> mask_elements(Mask m, std::size_t n) {
  std::vector<std::size_t> e;
  for (std::size_t i = 0; i < n; ++i)
    if (m >> i & 1) e.push_back(i);
  return e;
}

void append_word(std::ostringstream& os, const Word& w) {
  if (w.empty()) {
    os << "1";
    return;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    os << (i ? " " : "") << "g" << (w[i].gen + 1);
    if (w[i].exp != 1) os << "^" << w[i].exp;
  }
}

Word power(std::size_t gen, std::size_t e) { return Word(e, Letter{gen, 1}); }

Word concat(std::initializer_list<Word> parts) {
  Word w;
  for (const auto& p : parts) w.insert(w.end(), p.begin(), p.end());
  return w;
}

// Relators for a shape on abstract generators offset..offset+count-1.
std::size_t shape_relators(const ShapeTag& s, std::size_t offset, std::size_t ngens, std::vector<Word>& out) {
  using K = ShapeTag::Kind;
  switch (s.kind) {
    case K::Trivial:
      for (std::size_t i = 0; i < ngens; ++i) out.push_back({{offset + i, 1}});
      return ngens;
    case K::Cyclic:
      if (ngens != 1) throw InternalConsistencyError("cyclic shape with wrong generator count");
      out.push_back(power(offset, s.n));
      return 1;
    case K::Klein4: {
      if (ngens != 2) throw InternalConsistencyError("Klein four shape with wrong generator count");
      Word a{{offset, 1}}, b{{offset + 1, 1}};
      out.push_back(concat({a, a}));
      out.push_back(concat({b, b}));
      out.push_back(concat({a, b, a, b}));
      return 2;
    }
    case K::Symmetric: {
      std::size_t k = s.n ? s.n - 1 : 0;
      if (ngens != k) throw InternalConsistencyError("symmetric shape with wrong generator count");
      for (std::size_t i = 0; i < k; ++i) out.push_back(power(offset + i, 2));
      for (std::size_t i = 0; i + 1 < k; ++i) {
        Word st{{offset + i, 1}, {offset + i + 1, 1}};
        out.push_back(concat({st, st, st}));
      }
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 2; j < k; ++j) {
          Word st{{offset + i, 1}, {offset + j, 1}};
          out.push_back(concat({st, st}));
        }
      return k;
    }
    case K::Product: {
      std::size_t pos = offset;
      std::vector<std::pair<std::size_t, std::size_t>> ranges;
      for (std::size_t f = 0; f < s.factors.size(); ++f) {
        std::size_t c = shape_relators(s.factors[f], pos, s.factor_gens[f], out);
        ranges.emplace_back(pos, c);
        pos += c;
      }
      if (pos - offset != ngens) throw InternalConsistencyError("product shape with wrong generator count");
      for (std::size_t f = 0; f < ranges.size(); ++f)
        for (std::size_t h = f + 1; h < ranges.size(); ++h)
          for (std::size_t a = ranges[f].first; a < ranges[f].first + ranges[f].second; ++a)
            for (std::size_t b = ranges[h].first; b < ranges[h].first + ranges[h].second; ++b)
              out.push_back({{a, 1}, {b, 1}, {a, -1}, {b, -1}});
      return ngens;
    }
    case K::None:
      break;
  }
  throw UnsupportedPresentationError("no registered presentation for this group");
}

bool shape_supported(const ShapeTag& s) {
  if (s.kind == ShapeTag::Kind::None) return false;
  for (const auto& f : s.factors)
    if (!shape_supported(f)) return false;
  return true;
}

}  // namespace

// ---------------------------------------------------------------- permutations

Perm perm_identity(std::size_t degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_compose(const Perm& p, const Perm& q) {
  Perm r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

bool perm_is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

Perm perm_from_cycles(std::string_view text, std::size_t degree) {
  Perm p = perm_identity(degree);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') throw ExpressionError("cycle notation: expected '(' in '" + std::string(text) + "'");
    ++i;
    std::vector<int> cyc;
    for (;;) {
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw ExpressionError("cycle notation: expected a point in '" + std::string(text) + "'");
      int v = std::stoi(std::string(text.substr(start, i - start)));
      if (v < 1 || static_cast<std::size_t>(v) > degree)
        throw ExpressionError("cycle notation: point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
      if (std::find(cyc.begin(), cyc.end(), v - 1) != cyc.end())
        throw ExpressionError("cycle notation: repeated point " + std::to_string(v));
      cyc.push_back(v - 1);
    }
    Perm c = perm_identity(degree);
    for (std::size_t k = 0; k < cyc.size(); ++k) c[cyc[k]] = cyc[(k + 1) % cyc.size()];
    // Cycles are written left to right and applied right to left.
    p = perm_compose(p, c);
    skip();
  }
  return p;
}

std::string perm_to_cycles(const Perm& p) {
  std::string s;
  std::vector<bool> seen(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    s += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      s += (first ? "" : " ") + std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(p[j]);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

// ---------------------------------------------------------------- FiniteGroup

FiniteGroup make_group(std::size_t degree, std::vector<Perm> gens, std::string name, ShapeTag shape,
                       std::size_t max_order) {
  for (const auto& g : gens) check_perm(g, degree);
  std::vector<Perm> elems{perm_identity(degree)};
  std::vector<std::size_t> parent{0}, pgen{0};
  std::unordered_map<Perm, std::size_t, PermHash> seen{{elems[0], 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Perm y = perm_compose(elems[head], gens[s]);
      if (seen.count(y)) continue;
      if (elems.size() >= max_order)
        throw SizeLimitError("group closure exceeds order limit " + std::to_string(max_order));
      seen.emplace(y, elems.size());
      elems.push_back(std::move(y));
      parent.push_back(head);
      pgen.push_back(s);
    }
  }
  // Sort lexicographically and remap BFS data.
  const std::size_t n = elems.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return elems[a] < elems[b]; });
  std::vector<std::size_t> newpos(n);
  for (std::size_t i = 0; i < n; ++i) newpos[perm[i]] = i;

  FiniteGroup g;
  g.degree_ = degree;
  g.name_ = std::move(name);
  g.shape_ = std::move(shape);
  g.elements_.resize(n);
  g.parent_.resize(n);
  g.parent_gen_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    g.elements_[newpos[i]] = elems[i];
    g.parent_[newpos[i]] = newpos[parent[i]];
    g.parent_gen_[newpos[i]] = pgen[i];
  }
  g.bfs_order_.resize(n);
  for (std::size_t i = 0; i < n; ++i) g.bfs_order_[i] = newpos[i];
  for (const auto& s : gens) g.gens_.push_back(g.index_of(s));
  g.inverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i) g.inverse_[i] = g.index_of(perm_inverse(g.elements_[i]));
  if (n <= kTableLimit) {
    g.table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        g.table_[a * n + b] = static_cast<std::uint32_t>(g.index_of(perm_compose(g.elements_[a], g.elements_[b])));
  }
  return g;
}

std::size_t FiniteGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return npos;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t FiniteGroup::mul(std::size_t a, std::size_t b) const {
  if (!table_.empty()) return table_[a * elements_.size() + b];
  return index_of(perm_compose(elements_[a], elements_[b]));
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
  std::size_t k = 1, x = a;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a : gens_)
    for (std::size_t b : gens_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

Word FiniteGroup::word(std::size_t i) const {
  Word w;
  while (i != 0) {
    w.push_back({parent_gen_[i], 1});
    i = parent_[i];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

std::size_t FiniteGroup::evaluate(const Word& w) const {
  std::size_t x = 0;
  for (const auto& l : w) {
    std::size_t s = gens_.at(l.gen);
    x = mul(x, l.exp > 0 ? s : inverse_[s]);
  }
  return x;
}

FiniteGroup FiniteGroup::renamed(std::string name) const {
  FiniteGroup g = *this;
  g.name_ = std::move(name);
  return g;
}

// ---------------------------------------------------------------- constructors

FiniteGroup symmetric_group(std::size_t n) {
  if (n < 1 || n > 8) throw SizeLimitError("symmetric_group: n must be in 1..8");
  std::vector<Perm> gens;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Perm p = perm_identity(n);
    std::swap(p[i], p[i + 1]);
    gens.push_back(p);
  }
  ShapeTag s;
  s.kind = ShapeTag::Kind::Symmetric;
  s.n = n;
  return make_group(n, gens, "S" + std::to_string(n), s);
}

FiniteGroup cyclic_group(std::size_t m) {
  if (m < 1) throw PreconditionError("cyclic_group: m must be positive");
  if (m > kMaxGroupOrder) throw SizeLimitError("cyclic_group: order too large");
  if (m == 1) return trivial_group(1).renamed("C1");
  Perm p(m);
  for (std::size_t i = 0; i < m; ++i) p[i] = static_cast<int>((i + 1) % m);
  ShapeTag s;
  s.kind = ShapeTag::Kind::Cyclic;
  s.n = m;
  return make_group(m, {p}, "C" + std::to_string(m), s);
}

FiniteGroup klein_four() {
  ShapeTag s;
  s.kind = ShapeTag::Kind::Klein4;
  return make_group(4, {Perm{1, 0, 3, 2}, Perm{2, 3, 0, 1}}, "V", s);
}

FiniteGroup trivial_group(std::size_t degree) {
  ShapeTag s;
  s.kind = ShapeTag::Kind::Trivial;
  return make_group(degree, {}, "1", s);
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t dg = g.degree(), dh = h.degree();
  if (g.order() * h.order() > kMaxGroupOrder) throw SizeLimitError("direct_product: order too large");
  std::vector<Perm> gens;
  for (std::size_t s : g.generators()) {
    Perm p = perm_identity(dg + dh);
    for (std::size_t i = 0; i < dg; ++i) p[i] = g.element(s)[i];
    gens.push_back(p);
  }
  for (std::size_t s : h.generators()) {
    Perm p = perm_identity(dg + dh);
    for (std::size_t i = 0; i < dh; ++i) p[dg + i] = h.element(s)[i] + static_cast<int>(dg);
    gens.push_back(p);
  }
  ShapeTag s;
  s.kind = ShapeTag::Kind::Product;
  s.factors = {g.shape(), h.shape()};
  s.factor_gens = {g.num_generators(), h.num_generators()};
  return make_group(dg + dh, gens, g.name() + "x" + h.name(), s);
}

FiniteGroup from_generators(std::size_t degree, const std::vector<Perm>& gens, std::string name,
                            std::size_t max_order) {
  FiniteGroup g = make_group(degree, gens, name, ShapeTag{}, max_order);
  ShapeTag s;
  if (gens.empty()) {
    s.kind = ShapeTag::Kind::Trivial;
  } else if (gens.size() == 1) {
    s.kind = g.order() == 1 ? ShapeTag::Kind::Trivial : ShapeTag::Kind::Cyclic;
    s.n = g.order();
  } else if (gens.size() == 2 && g.order() == 4) {
    std::size_t a = g.generators()[0], b = g.generators()[1];
    if (a != b && a != 0 && b != 0 && g.mul(a, a) == 0 && g.mul(b, b) == 0 && g.mul(a, b) == g.mul(b, a))
      s.kind = ShapeTag::Kind::Klein4;
  }
  if (s.kind == ShapeTag::Kind::None) return g;
  return make_group(degree, gens, std::move(name), s, max_order);
}

FiniteGroup young_subgroup(const std::vector<std::size_t>& parts) {
  std::size_t degree = std::accumulate(parts.begin(), parts.end(), std::size_t{0});
  std::vector<Perm> gens;
  ShapeTag s;
  s.kind = ShapeTag::Kind::Product;
  std::string name;
  std::size_t start = 0;
  for (std::size_t k : parts) {
    if (k >= 2) {
      for (std::size_t i = start; i + 1 < start + k; ++i) {
        Perm p = perm_identity(degree);
        std::swap(p[i], p[i + 1]);
        gens.push_back(p);
      }
      ShapeTag f;
      f.kind = ShapeTag::Kind::Symmetric;
      f.n = k;
      s.factors.push_back(f);
      s.factor_gens.push_back(k - 1);
      name += (name.empty() ? "S" : "xS") + std::to_string(k);
    }
    start += k;
  }
  if (s.factors.empty()) {
    s = ShapeTag{};
    s.kind = ShapeTag::Kind::Trivial;
    name = "1";
  } else if (s.factors.size() == 1) {
    s = s.factors[0];
  }
  return make_group(degree, gens, name, s);
}

std::vector<std::size_t> embed(const FiniteGroup& sub, const FiniteGroup& parent) {
  if (sub.degree() != parent.degree()) throw ContainmentError("embed: degree mismatch");
  std::vector<std::size_t> idx(sub.order());
  for (std::size_t i = 0; i < sub.order(); ++i) {
    idx[i] = parent.index_of(sub.element(i));
    if (idx[i] == FiniteGroup::npos)
      throw ContainmentError("element " + perm_to_cycles(sub.element(i)) + " of " + sub.name() + " is not in " +
                             parent.name());
  }
  return idx;
}

bool is_subgroup(const FiniteGroup& sub, const FiniteGroup& parent) {
  if (sub.degree() != parent.degree()) return false;
  for (const auto& p : sub.elements())
    if (!parent.contains(p)) return false;
  return true;
}

FiniteGroup subgroup_generated(const FiniteGroup& parent, const std::vector<std::size_t>& gens, std::string name) {
  std::vector<Perm> ps;
  for (std::size_t i : gens) ps.push_back(parent.element(i));
  return from_generators(parent.degree(), ps, std::move(name));
}

FiniteGroup stabilizer(const FiniteGroup& g, std::size_t point) {
  if (point >= g.degree()) throw PreconditionError("stabilizer: point out of range");
  if (g.shape().kind == ShapeTag::Kind::Symmetric && point + 1 == g.degree()) {
    std::vector<std::size_t> parts{g.degree() - 1, 1};
    return young_subgroup(parts);
  }
  std::vector<std::size_t> elems;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (g.element(i)[point] == static_cast<int>(point)) elems.push_back(i);
  return subgroup_from_elements(g, elems).renamed("Stab(" + std::to_string(point + 1) + ")");
}

std::vector<FiniteGroup> subgroups(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n > 48) throw SizeLimitError("subgroups: group order " + std::to_string(n) + " exceeds 48");
  std::vector<Mask> cyclic;
  for (std::size_t x = 0; x < n; ++x) {
    Mask c = close_mask(g, Mask(1) << x);
    if (std::find(cyclic.begin(), cyclic.end(), c) == cyclic.end()) cyclic.push_back(c);
  }
  std::vector<Mask> all = cyclic;
  std::vector<Mask> frontier = cyclic;
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (Mask a : frontier)
      for (Mask c : cyclic) {
        if ((a | c) == a) continue;
        Mask j = close_mask(g, a | c);
        if (std::find(all.begin(), all.end(), j) == all.end()) {
          all.push_back(j);
          next.push_back(j);
        }
      }
    frontier = std::move(next);
  }
  std::vector<std::pair<std::vector<std::size_t>, FiniteGroup>> out;
  for (Mask m : all) {
    auto e = mask_elements(m, n);
    out.emplace_back(e, subgroup_from_elements(g, e));
  }
  sort_subgroups(out);
  std::vector<FiniteGroup> r;
  for (auto& p : out) r.push_back(std::move(p.second));
  return r;
}

std::vector<FiniteGroup> cyclic_subgroups(const FiniteGroup& g) {
  std::vector<std::vector<std::size_t>> seen;
  std::vector<std::pair<std::vector<std::size_t>, FiniteGroup>> out;
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::vector<std::size_t> e{0};
    for (std::size_t y = x; y != 0; y = g.mul(y, x)) e.push_back(y);
    std::sort(e.begin(), e.end());
    if (std::find(seen.begin(), seen.end(), e) != seen.end()) continue;
    seen.push_back(e);
    out.emplace_back(e, subgroup_from_elements(g, e));
  }
  sort_subgroups(out);
  std::vector<FiniteGroup> r;
  for (auto& p : out) r.push_back(std::move(p.second));
  return r;
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<bool> done(g.order());
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t h = 0; h < g.order(); ++h) {
      std::size_t y = g.mul(g.mul(h, x), g.inv(h));
      if (!done[y]) {
        done[y] = true;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

// ---------------------------------------------------------------- presentations

bool has_presentation(const FiniteGroup& g) { return shape_supported(g.shape()); }

Presentation presentation(const FiniteGroup& g) {
  if (!has_presentation(g)) throw UnsupportedPresentationError("no registered presentation for group " + g.name());
  Presentation p;
  p.num_generators = g.num_generators();
  p.realization = g.generators();
  shape_relators(g.shape(), 0, p.num_generators, p.relators);
  for (const auto& r : p.relators)
    if (g.evaluate(r) != 0) throw InternalConsistencyError("relator does not evaluate to the identity in " + g.name());
  if (subgroup_generated(g, p.realization, "").order() != g.order())
    throw InternalConsistencyError("presentation generators do not generate " + g.name());
  return p;
}

std::string Presentation::str() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < num_generators; ++i) os << (i ? "," : "") << "g" << (i + 1);
  os << " | ";
  for (std::size_t i = 0; i < relators.size(); ++i) {
    if (i) os << ", ";
    append_word(os, relators[i]);
  }
  os << ">";
  return os.str();
}

// ---------------------------------------------------------------- cosets

Perm CosetAction::action_of(const FiniteGroup& g, std::size_t x) const {
  Perm p(cosets.size());
  for (std::size_t i = 0; i < cosets.size(); ++i) p[i] = static_cast<int>(coset_of[g.mul(x, cosets[i][0])]);
  return p;
}

CosetAction coset_action(const FiniteGroup& g, const FiniteGroup& h) {
  std::vector<std::size_t> hi = embed(h, g);
  CosetAction ca;
  ca.coset_of.assign(g.order(), FiniteGroup::npos);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (ca.coset_of[x] != FiniteGroup::npos) continue;
    std::vector<std::size_t> c;
    for (std::size_t y : hi) {
      std::size_t z = g.mul(x, y);
      ca.coset_of[z] = ca.cosets.size();
      c.push_back(z);
    }
    std::sort(c.begin(), c.end());
    ca.cosets.push_back(std::move(c));
  }
  for (std::size_t s : g.generators()) ca.generator_action.push_back(ca.action_of(g, s));
  return ca;
}

// ---------------------------------------------------------------- spec parser

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split_top(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == sep && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

std::size_t parse_count(const std::string& s, const std::string& ctx) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ExpressionError(ctx + ": expected a positive integer, got '" + s + "'");
  if (s.size() > 6) throw SizeLimitError(ctx + ": argument too large");
  return static_cast<std::size_t>(std::stoul(s));
}

}  // namespace

FiniteGroup parse_group_spec(std::string_view text, std::size_t max_order) {
  std::string s = trim(text);
  if (s == "klein4" || s == "V") return klein_four();
  if (s == "trivial") return trivial_group(1);
  auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')') throw ExpressionError("unrecognized group spec '" + s + "'");
  std::string head = trim(std::string_view(s).substr(0, open));
  std::string body = s.substr(open + 1, s.size() - open - 2);
  if (head == "sym") return symmetric_group(parse_count(trim(body), "sym"));
  if (head == "cyclic") {
    std::size_t m = parse_count(trim(body), "cyclic");
    if (m > max_order) throw SizeLimitError("cyclic: order exceeds limit");
    return cyclic_group(m);
  }
  if (head == "product") {
    auto parts = split_top(body, ',');
    if (parts.size() < 2) throw ExpressionError("product needs at least two factors");
    FiniteGroup g = parse_group_spec(parts[0], max_order);
    for (std::size_t i = 1; i < parts.size(); ++i) {
      FiniteGroup h = parse_group_spec(parts[i], max_order);
      if (g.order() * h.order() > max_order) throw SizeLimitError("product: order exceeds limit");
      g = direct_product(g, h);
    }
    return g;
  }
  if (head == "gens") {
    auto semi = body.find(';');
    std::size_t degree = parse_count(trim(body.substr(0, semi)), "gens");
    if (degree == 0) throw ExpressionError("gens: degree must be positive");
    std::vector<Perm> gens;
    if (semi != std::string::npos) {
      std::string rest = trim(std::string_view(body).substr(semi + 1));
      if (!rest.empty())
        for (const auto& part : split_top(rest, ',')) gens.push_back(perm_from_cycles(part, degree));
    }
    return from_generators(degree, gens, gens_label(gens), max_order);
  }
  throw ExpressionError("unrecognized group spec '" + s + "'");
}

}  // namespace glattice
