#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "scottmax/errors.hpp"

using namespace scottmax;
using namespace scottmax::cli;

namespace {

int emit(const Report& r, bool json) {
  if (json)
    std::cout << r.to_json().dump(2) << '\n';
  else
    std::cout << r.to_text();
  return exit_code(r.status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Order, openness and diagonalization checks on the domain L"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit a JSON report");

  std::string u, v;
  auto* order = app.add_subcommand("order", "Compare two elements of L");
  order->add_option("u", u, "First element, e.g. x(2,5), s[1,5], t[3|1]")->required();
  order->add_option("v", v, "Second element")->required();

  std::vector<std::string> elems;
  auto* lcheck = app.add_subcommand("l-check", "Classify elements of L");
  lcheck->add_option("elems", elems, "Elements")->required();

  std::string path;
  bool strict = false;
  auto* pverify = app.add_subcommand("poset-verify", "Check that a JSON relation is a partial order");
  pverify->add_option("file", path, "Relation JSON")->required()->check(CLI::ExistingFile);
  pverify->add_flag("--strict", strict, "Check the relation literally, without reflexive-transitive closure");

  std::vector<std::string> subset;
  auto* pgd = app.add_subcommand("poset-gdelta", "G-delta check for Max or a given subset of a finite poset");
  pgd->add_option("file", path, "Poset JSON")->required()->check(CLI::ExistingFile);
  auto* set_opt = pgd->add_option("--set", subset, "Labels of the subset to test");

  int sup_order = 1;
  std::string chain;
  std::vector<std::string> sup_elems;
  auto* sup = app.add_subcommand("sup", "Supremum in the two-chain poset");
  sup->add_option("--order", sup_order, "1 = plain order, 2 = xw joined below yw")->check(CLI::IsMember({1, 2}));
  auto* chain_opt = sup->add_option("--chain", chain, "Include the whole finite chain x or y")
                        ->check(CLI::IsMember({"x", "y"}));
  sup->add_option("elems", sup_elems, "Extra members such as x3, yw");

  DiagOptions dopt;
  dopt.budget = default_budget();
  std::string out;
  bool no_cover = false;
  auto* diag = app.add_subcommand("diag", "Diagonalize against a family of Scott opens");
  diag->add_option("family", dopt.family, "'canonical' or a family JSON file")->required();
  diag->add_option("--depth", dopt.depth, "Number of levels")->check(CLI::PositiveNumber);
  diag->add_option("--budget", dopt.budget, "Index tests per level (default SCOTTMAX_BUDGET or 10000)")
      ->check(CLI::PositiveNumber);
  auto* out_opt = diag->add_option("--out", out, "Write the certificate here");
  diag->add_flag("--no-cover-check", no_cover, "Skip the check that every U_k contains Max(L)");

  std::string cert_path, cert_family = "canonical";
  auto* cverify = app.add_subcommand("cert-verify", "Re-check a diagonalization certificate");
  cverify->add_option("cert", cert_path, "Certificate JSON")->required()->check(CLI::ExistingFile);
  cverify->add_option("--family", cert_family, "'canonical' or a family JSON file");

  std::string scope;
  SuiteOptions sopt;
  auto* suites = app.add_subcommand("suites", "Run invariant suites");
  suites->add_option("scope", scope, "seq, L, finite or all")
      ->required()
      ->check(CLI::IsMember({"seq", "L", "finite", "all"}));
  suites->add_option("--b", sopt.bound, "Truncation entry bound")->check(CLI::PositiveNumber);
  suites->add_option("--depth", sopt.depth, "Truncation sequence length")->check(CLI::PositiveNumber);
  suites->add_option("--max-elems", sopt.max_elems, "Largest finite poset size")->check(CLI::Range(1, 5));
  suites->add_option("--random", sopt.random_cases, "Randomized cases per check");
  suites->add_option("--seed", sopt.seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*order) return emit(run_order(u, v), json);
    if (*lcheck) return emit(run_l_check(elems), json);
    if (*pverify) return emit(run_poset_verify(path, strict), json);
    if (*pgd) return emit(run_poset_gdelta(path, *set_opt ? std::optional(subset) : std::nullopt), json);
    if (*sup) return emit(run_sup(sup_order, *chain_opt ? std::optional(chain) : std::nullopt, sup_elems), json);
    if (*diag) {
      if (*out_opt) dopt.out = out;
      dopt.check_cover = !no_cover;
      return emit(run_diag(dopt), json);
    }
    if (*cverify) return emit(run_cert_verify(cert_path, cert_family), json);
    if (*suites) return emit(run_suites(scope, sopt), json);
  } catch (const scottmax::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IndeterminateError& e) {
    std::cerr << "indeterminate: " << e.what() << '\n';
    return kExitIndeterminate;
  } catch (const VariantError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
