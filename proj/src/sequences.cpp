#include "glattice/sequences.hpp"

#include <sstream>

#include "glattice/certificates.hpp"
#include "glattice/errors.hpp"

namespace glattice {

bool CheckReport::pass() const {
  for (const auto& s : steps)
    if (!s.pass) return false;
  return true;
}

void CheckReport::add(std::string claim, bool ok, std::string detail) {
  steps.push_back({std::move(claim), ok, std::move(detail)});
}

std::string CheckReport::str() const {
  std::ostringstream os;
  for (const auto& s : steps) {
    os << (s.pass ? "[ok] " : "[FAIL] ") << s.claim;
    if (!s.detail.empty()) os << " (" << s.detail << ")";
    os << '\n';
  }
  return os.str();
}

bool same_lattice(const GLattice& a, const GLattice& b) {
  return same_group(a.group(), b.group()) && a.rank() == b.rank() && a.gen_actions() == b.gen_actions();
}

CheckReport check_exact(const std::vector<LatticeMorphism>& seq, Flanks flanks) {
  if (seq.empty()) throw CompositionError("check_exact: empty sequence");
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (!same_lattice(seq[i].target(), seq[i + 1].source()))
      throw CompositionError("check_exact: map " + std::to_string(i + 1) + " does not compose with map " +
                             std::to_string(i + 2));
  CheckReport r;
  if (flanks.left_zero) {
    const auto& f = seq.front();
    r.add("injective at " + f.source().name(), f.is_injective());
  }
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    const auto& f = seq[i];
    const auto& g = seq[i + 1];
    IntMatrix im = hnf_basis(f.matrix());
    IntMatrix ker = kernel_basis(g.matrix());
    bool ok = im == ker;
    std::string detail = "rank image " + std::to_string(im.rows()) + ", rank kernel " + std::to_string(ker.rows());
    if (!ok && im.rows() == ker.rows()) {
      // Same rank: report the index of the image in the kernel when finite.
      auto coords = solve_left(ker, im);
      if (coords) detail += ", image has index " + cokernel_structure(*coords).str() + " in kernel";
    }
    r.add("image = kernel at " + f.target().name(), ok, detail);
  }
  if (flanks.right_zero) {
    const auto& f = seq.back();
    r.add("surjective onto " + f.target().name(), f.is_surjective());
  }
  return r;
}

CheckReport check_diagram(const Diagram& d) {
  auto need = [](bool ok, const char* what) {
    if (!ok) throw DiagramError(std::string("check_diagram: ") + what);
  };
  need(same_lattice(d.top_left.target(), d.top_right.source()), "top row does not compose");
  need(same_lattice(d.bottom_left.target(), d.bottom_right.source()), "bottom row does not compose");
  need(same_lattice(d.left.source(), d.bottom_left.source()), "left vertical source is not K0");
  need(same_lattice(d.left.target(), d.top_left.source()), "left vertical target is not K");
  need(same_lattice(d.middle.source(), d.bottom_left.target()), "middle vertical source is not M0");
  need(same_lattice(d.middle.target(), d.top_left.target()), "middle vertical target is not M");
  need(same_lattice(d.right.source(), d.bottom_right.target()), "right vertical source is not A0");
  need(same_lattice(d.right.target(), d.top_right.target()), "right vertical target is not A");

  CheckReport r;
  CheckReport top = check_exact({d.top_left, d.top_right});
  CheckReport bottom = check_exact({d.bottom_left, d.bottom_right});
  r.add("top row exact", top.pass());
  r.add("bottom row exact", bottom.pass());
  r.add("left square commutes", d.bottom_left.matrix() * d.middle.matrix() == d.left.matrix() * d.top_left.matrix());
  r.add("right square commutes",
        d.bottom_right.matrix() * d.right.matrix() == d.middle.matrix() * d.top_right.matrix());
  r.add("left vertical injective", d.left.is_injective());
  r.add("right vertical is the identity", d.right.matrix().is_identity());
  FaithfulnessResult f = is_faithful(d.left.source());
  r.add("K0 faithful", f.faithful, f.witness ? "acts trivially: " + perm_to_cycles(d.left.source().group().element(*f.witness)) : "");
  return r;
}

}  // namespace glattice
