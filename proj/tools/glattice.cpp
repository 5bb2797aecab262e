#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "glattice/errors.hpp"
#include "glattice/paperlab.hpp"

namespace {

using namespace glattice;
using ojson = nlohmann::ordered_json;

struct Overrides {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> max_group_order, max_lattice_rank, max_cocycle_unknowns;
  std::optional<int> iso_search_bound;

  Limits limits() const {
    Limits lim = config.empty() ? Limits{} : load_config(config);
    if (seed) lim.seed = *seed;
    if (max_group_order) lim.max_group_order = *max_group_order;
    if (max_lattice_rank) lim.max_lattice_rank = *max_lattice_rank;
    if (max_cocycle_unknowns) lim.max_cocycle_unknowns = *max_cocycle_unknowns;
    if (iso_search_bound) lim.iso_search_bound = *iso_search_bound;
    return lim;
  }
};

int emit(const RunReport& r, bool json) {
  std::cout << (json ? r.to_json() + "\n" : r.render());
  return r.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integral G-lattice computations for degree bounds of division algebras"};
  app.require_subcommand(1);
  bool json = false;
  Overrides ov;
  app.add_flag("--json", json, "Print the report as JSON");
  app.add_option("--seed", ov.seed, "Seed for randomized searches");
  app.add_option("--config", ov.config, "JSON config with size caps")->check(CLI::ExistingFile);
  app.add_option("--max-group-order", ov.max_group_order);
  app.add_option("--max-lattice-rank", ov.max_lattice_rank);
  app.add_option("--max-cocycle-unknowns", ov.max_cocycle_unknowns);
  app.add_option("--iso-search-bound", ov.iso_search_bound);

  int n = 0;
  auto* fp = app.add_subcommand("fp", "Formanek-Procesi sequence for S_n, 3 <= n <= 7");
  fp->add_option("--n", n)->required();
  auto* pll = app.add_subcommand("prop-ll", "Sym^2 A_{n-1} (+) U_n (+) Z is permutation, n in {3, 5}");
  pll->add_option("--n", n)->required();
  auto* ext = app.add_subcommand("ext", "Ext^1 vanishing over S_n, n in {4, 5}");
  ext->add_option("--n", n)->required();
  auto* p31 = app.add_subcommand("prop31", "Diagram over Lambda^2 A_{n-1}, n in {3, 5}");
  p31->add_option("--n", n)->required();
  auto* s6 = app.add_subcommand("section6", "Cohomology checks for the Klein four group");
  std::string group, gens;
  int degree = 0;
  auto* cb = app.add_subcommand("crossed-bound", "Bound r|G| - n + 1 from Z[G]^r -> A_{n-1}");
  cb->add_option("--group", group)->required();
  cb->add_option("--degree", degree)->required();
  cb->add_option("--gens", gens, "Elements in cycle notation separated by ';'")->required();
  long nmax = 20;
  auto* bd = app.add_subcommand("bounds", "Table of known bounds for 2 <= n <= max");
  bd->add_option("--max", nmax);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Limits lim = ov.limits();
    if (*fp) return emit(run_formanek_procesi(n, lim), json);
    if (*pll) return emit(run_stable_permutation(n, lim), json);
    if (*ext) return emit(run_ext_vanishing(n, lim), json);
    if (*p31) return emit(run_sym_square_diagram(n, lim), json);
    if (*s6) return emit(run_degree_four(lim), json);
    if (*cb) {
      CrossedBoundResult res = run_crossed_bound(group, degree, gens, lim);
      if (json) {
        ojson j = ojson::parse(res.report.to_json());
        j["bound"] = ojson::parse(res.bound.to_json());
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << res.report.render() << "bound: " << res.bound.render() << '\n';
      }
      return res.report.pass() ? 0 : 1;
    }
    if (*bd) {
      auto table = bounds_table(nmax);
      bool ok = true;
      for (const auto& r : table) ok = ok && r.consistent();
      if (json) {
        std::cout << bounds_table_json(table) << '\n';
      } else {
        for (const auto& r : table) std::cout << r.render() << '\n';
      }
      return ok ? 0 : 1;
    }
  } catch (const SizeLimitError& e) {
    std::cerr << "size limit: " << e.what() << '\n';
    return 3;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return 2;
  } catch (const ExpressionError& e) {
    std::cerr << "bad input: " << e.what() << '\n';
    return 2;
  } catch (const ContainmentError& e) {
    std::cerr << "bad input: " << e.what() << '\n';
    return 2;
  } catch (const UnsupportedPresentationError& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
