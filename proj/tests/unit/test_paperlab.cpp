#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "glattice/errors.hpp"
#include "glattice/paperlab.hpp"

using namespace glattice;

TEST_CASE("report json schema") {
  RunReport r;
  r.command = "demo";
  r.inputs = {{"n", "3"}};
  r.expect_eq("one", "label-a", "Z/4", "Z/4");
  r.expect_eq("two", "label-b", "0", "Z/2");
  CHECK_FALSE(r.pass());
  auto j = nlohmann::json::parse(r.to_json());
  CHECK(j["command"] == "demo");
  CHECK(j["inputs"]["n"] == "3");
  REQUIRE(j["steps"].size() == 2);
  for (const char* key : {"claim", "paper_ref", "computed", "expected", "pass"}) CHECK(j["steps"][0].contains(key));
  CHECK(j["steps"][1]["pass"] == false);
  CHECK(j["pass"] == false);
  CHECK(r.render().find("[FAIL] two") != std::string::npos);
}

TEST_CASE("bounds for small n") {
  BoundReport b5 = bounds_for(5);
  CHECK(b5.find("odd-half-product")->value == 6);
  CHECK(b5.find("rowen-odd")->value == 11);
  CHECK(b5.find("n2-minus-2n")->value == 15);
  CHECK(b5.best_lower == 2);
  CHECK(b5.best_upper == 6);
  BoundReport b4 = bounds_for(4);
  CHECK(b4.best_lower == 4);
  CHECK(b4.best_upper == 5);
  CHECK_FALSE(b4.find("crossed-product")->conditional);
  CHECK(b4.find("odd-half-product") == nullptr);
  for (long n : {2, 3, 6}) {
    BoundReport b = bounds_for(n);
    CHECK(b.best_lower == 2);
    CHECK(b.best_upper == 2);
  }
  CHECK(bounds_for(12).find("coprime-combine")->value == bounds_for(4).best_upper + bounds_for(3).best_upper);
  CHECK(bounds_for(8).best_lower == 6);
  CHECK(bounds_for(7).find("crossed-product")->conditional);
  CHECK_THROWS_AS(bounds_for(1), PreconditionError);
  CHECK_THROWS_AS(bounds_table(101), PreconditionError);
}

TEST_CASE("bounds are consistent up to 100") {
  for (const auto& b : bounds_table(100)) {
    CHECK(b.consistent());
    CHECK((b.find("odd-half-product") != nullptr) == (b.n % 2 == 1 && b.n >= 5));
  }
}

TEST_CASE("config loading") {
  const char* path = "glattice_test_config.json";
  {
    std::ofstream(path) << R"({"max_group_order": 500, "iso_search_bound": 3, "seed": 7})";
  }
  Limits lim = load_config(path);
  CHECK(lim.max_group_order == 500);
  CHECK(lim.iso_search_bound == 3);
  CHECK(lim.seed == 7);
  CHECK(lim.max_lattice_rank == Limits{}.max_lattice_rank);
  {
    std::ofstream(path) << R"({"max_rank": 5})";
  }
  CHECK_THROWS_AS(load_config(path), PreconditionError);
  {
    std::ofstream(path) << R"({"seed": -1})";
  }
  CHECK_THROWS_AS(load_config(path), PreconditionError);
  CHECK_THROWS_AS(load_config("does/not/exist.json"), PreconditionError);
}

TEST_CASE("command preconditions") {
  CHECK_THROWS_AS(run_formanek_procesi(2), PreconditionError);
  CHECK_THROWS_AS(run_stable_permutation(4), PreconditionError);
  CHECK_THROWS_AS(run_ext_vanishing(6), PreconditionError);
  CHECK_THROWS_AS(run_sym_square_diagram(7), PreconditionError);
  CHECK_THROWS_AS(run_crossed_bound("cyclic(6)", 6, "(1 2 3 4 5 6)"), PreconditionError);
  CHECK_THROWS_AS(run_crossed_bound("klein4", 5, "(1 2)(3 4)"), PreconditionError);
  CHECK_THROWS_AS(run_crossed_bound("gens(4; (1 2))", 4, "(1 2)"), PreconditionError);
  CHECK_THROWS_AS(run_crossed_bound("klein4", 4, "(1 2)"), ContainmentError);
}

TEST_CASE("crossed bound equals the kernel rank") {
  CrossedBoundResult v = run_crossed_bound("klein4", 4, "(1 2)(3 4);(1 3)(2 4)");
  CHECK(v.report.pass());
  CHECK(v.bound.find("crossed-product")->value == 5);
  CrossedBoundResult s3 = run_crossed_bound("gens(6; (1 2 3)(4 5 6), (1 4)(2 6)(3 5))", 6,
                                            "(1 2 3)(4 5 6);(1 4)(2 6)(3 5)");
  CHECK(s3.report.pass());
  CHECK(s3.bound.best_upper == 7);
  CrossedBoundResult s4 = run_crossed_bound("sym(4)", 4, "(1 2 3 4)");
  CHECK(s4.report.pass());
  CHECK(s4.bound.best_upper == 24 - 4 + 1);
}

TEST_CASE("Formanek-Procesi certificate") {
  for (std::size_t n : {3, 4}) {
    auto c = fp_kernel_certificate(share(symmetric_group(n)));
    REQUIRE(c);
    CHECK(c->verified);
    CHECK(c->intertwiner.rows() == n * n + 1);
  }
}
