#include "doctest.h"
#include "glattice/errors.hpp"
#include "glattice/morphisms.hpp"
#include "glattice/paperlab.hpp"
#include "glattice/sequences.hpp"

using namespace glattice;

TEST_CASE("Formanek-Procesi sequence is exact") {
  for (std::size_t n : {3, 4, 5}) {
    LatticeMorphism f = fp_f(share(symmetric_group(n)));
    CheckReport r = check_exact({kernel_of(f).inclusion, f});
    CHECK(r.pass());
    CHECK(r.steps.size() == 3);
  }
}

TEST_CASE("identity maps do not form a short exact sequence") {
  GLattice u = natural_lattice(share(symmetric_group(3)));
  LatticeMorphism id = identity_morphism(u);
  CheckReport r = check_exact({id, id});
  CHECK_FALSE(r.pass());
  REQUIRE(r.steps.size() == 3);
  CHECK(r.steps[0].pass);
  CHECK_FALSE(r.steps[1].pass);
  CHECK(r.steps[2].pass);
}

TEST_CASE("index of the image is reported") {
  GroupPtr c2 = share(cyclic_group(2));
  GLattice z = trivial_lattice(c2);
  LatticeMorphism two = LatticeMorphism::make(z, z, IntMatrix{{2}}, "2");
  LatticeMorphism zero = zero_morphism(z, z);
  CheckReport r = check_exact({two, zero}, Flanks{true, false});
  CHECK_FALSE(r.pass());
  CHECK(r.steps[1].detail.find("Z/2") != std::string::npos);
  CHECK_FALSE(check_exact({two}).pass());
  CHECK(check_exact({two}, Flanks{true, false}).pass());
}

TEST_CASE("sequences must compose") {
  GroupPtr s3 = share(symmetric_group(3));
  LatticeMorphism a = identity_morphism(natural_lattice(s3));
  LatticeMorphism b = identity_morphism(root_lattice(s3));
  CHECK_THROWS_AS(check_exact({a, b}), CompositionError);
  CHECK_THROWS_AS(check_exact({}), CompositionError);
}

TEST_CASE("diagram over Lambda^2 A_4") {
  SymSquareRealization s = realize_sym_square_diagram(5);
  REQUIRE(s.diagram);
  CheckReport r = check_diagram(*s.diagram);
  CHECK(r.pass());
  CHECK(r.steps.size() == 7);
  CHECK(s.extension->rank() == 10);

  Diagram flipped = *s.diagram;
  flipped.middle = LatticeMorphism::make(flipped.middle.source(), flipped.middle.target(), -flipped.middle.matrix(),
                                         "-theta");
  CheckReport f = check_diagram(flipped);
  CHECK_FALSE(f.pass());
  CHECK_FALSE(f.steps[2].pass);
  CHECK_FALSE(f.steps[3].pass);

  Diagram wrong = *s.diagram;
  std::swap(wrong.top_left, wrong.bottom_left);
  CHECK_THROWS_AS(check_diagram(wrong), DiagramError);
}

TEST_CASE("diagram over Lambda^2 A_2 has a non-faithful left corner") {
  SymSquareRealization s = realize_sym_square_diagram(3);
  REQUIRE(s.diagram);
  CheckReport r = check_diagram(*s.diagram);
  CHECK_FALSE(r.pass());
  for (std::size_t i = 0; i + 1 < r.steps.size(); ++i) CHECK(r.steps[i].pass);
  CHECK(r.steps.back().claim == "K0 faithful");
  CHECK_FALSE(r.steps.back().pass);
}
