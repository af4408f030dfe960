#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "folidx/catalog.hpp"
#include "folidx/errors.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitMismatch = 3;

std::optional<std::filesystem::path> catalog_override(const std::string& flag_value) {
  if (!flag_value.empty()) return std::filesystem::path(flag_value);
  if (const char* env = std::getenv("FOLIDX_CATALOG_DIR")) return std::filesystem::path(env);
  return std::nullopt;
}

std::string betti_str(const folidx::BettiVector& b) {
  std::string s = "(";
  for (size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
  return s + ")";
}

int run_euler(const std::string& file) {
  folidx::ExampleDocument doc = folidx::load_example(file);
  folidx::FoliationExample fol = folidx::to_foliation(doc);
  long long chi = folidx::gauss_bonnet(fol);
  std::cout << doc.name << ": basic Euler characteristic = " << chi << "\n";
  for (const folidx::Stratum& s : fol.strata)
    std::cout << "  stratum " << s.name << ": chi(quotient) = "
              << folidx::extended_euler(s.quotient)
              << ", chi(leaf closure) = " << folidx::leaf_closure_euler(s.leaf_closure, s.twist)
              << "\n";
  if (auto oracle = folidx::oracle_betti(doc)) {
    std::cout << "  oracle betti = " << betti_str(*oracle)
              << ", chi = " << folidx::basic_euler(*oracle) << "\n";
    if (folidx::basic_euler(*oracle) != chi) {
      std::cerr << "mismatch between assembly and oracle\n";
      return kExitMismatch;
    }
  }
  return kExitOk;
}

int run_euler_rep(const std::string& file, long long rho_index) {
  folidx::ExampleDocument doc = folidx::load_example(file);
  folidx::FoliationExample fol = folidx::to_foliation(doc);
  long long order = fol.rho_table ? fol.rho_table->group_order
                                  : (doc.suspension ? doc.suspension->group_order : 0);
  if (order < 1) throw folidx::MissingRhoTable("document carries no character data");
  folidx::Character rho = folidx::Character::rho(folidx::FiniteCyclicGroup{order}, rho_index);
  long long chi = folidx::rep_valued_gauss_bonnet(fol, rho);
  std::cout << doc.name << ": chi^rho" << rho.index() << " = " << chi << "\n";
  return kExitOk;
}

int run_eta_lens(long long p, long long m, long long n, bool with_float) {
  folidx::LensDatum datum = folidx::LensDatum::make(p, m, n);
  folidx::LensEta eta = folidx::lens_eta(datum);
  std::cout << "eta(B) = " << eta.boundary.str() << "\n";
  std::cout << "eta(operator) = 2 eta(B) = " << eta.doubled.str() << "\n";
  std::cout << "h = " << eta.h_value << "\n";
  if (with_float) {
    folidx::CotangentPair pair = folidx::cotangent_pair_sum(datum);
    double eta_float = -pair.floating / static_cast<double>(p);
    std::cout.precision(17);
    std::cout << "eta(B) float channel = " << eta_float << "\n";
    std::cout << "|float - exact| = "
              << std::abs(eta_float - eta.boundary.to_double()) << "\n";
  }
  return kExitOk;
}

int run_signature(const std::string& file) {
  folidx::ExampleDocument doc = folidx::load_example(file);
  if (!doc.signature)
    throw folidx::ValidationError("document '" + doc.name + "' has no signature block");
  const folidx::SignatureProblem& problem = *doc.signature;
  folidx::SignatureValue sig = folidx::transverse_signature(problem);
  std::cout << doc.name << ": signature (blowup form) = " << sig.value.str() << "\n";
  if (!sig.integral)
    std::cerr << "warning: signature is not an integer; the inputs are not "
                 "geometrically consistent\n";
  for (const folidx::LensDatum& d : problem.fixed_points)
    std::cout << "  fixed point (m=" << d.m << ", n=" << d.n
              << "): eta(B) = " << folidx::eta_lens_signature(d).str() << "\n";
  if (problem.p1_original) {
    folidx::SignatureValue orig = folidx::transverse_signature_original(problem);
    std::cout << "  signature (original form) = " << orig.value.str() << "\n";
    std::cout << "  blowup defect identity: "
              << (folidx::blowup_defect_check(problem) ? "holds" : "fails") << "\n";
  }
  return kExitOk;
}

int run_verify(bool json_output, bool no_oracle, const std::string& inject,
               const std::string& dir_flag) {
  folidx::VerifyOptions options;
  options.use_oracle = !no_oracle;
  options.inject_fault = inject;
  options.catalog_dir = catalog_override(dir_flag);
  folidx::VerifyReport report = folidx::verify_catalog(options);
  std::cout << (json_output ? folidx::report_json(report) + "\n"
                            : folidx::report_table(report));
  return report.failed == 0 ? kExitOk : kExitMismatch;
}

int run_print_example(const std::string& name, const std::string& dir_flag) {
  auto docs = folidx::active_catalog(catalog_override(dir_flag));
  for (const folidx::ExampleDocument& doc : docs)
    if (doc.name == name) {
      std::cout << folidx::serialize_example(doc) << "\n";
      return kExitOk;
    }
  std::cerr << "no example named '" << name << "'; available:\n";
  for (const folidx::ExampleDocument& doc : docs) std::cerr << "  " << doc.name << "\n";
  return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stratified basic Euler characteristic and lens-space eta calculator"};
  app.require_subcommand(1);

  std::string file;
  std::string name;
  std::string inject;
  std::string dir_flag;
  long long p = 0, m = 0, n = 0, rho_index = 0;
  bool with_float = false, json_output = false, no_oracle = false;

  auto* euler = app.add_subcommand("euler", "assemble the basic Euler characteristic of a file");
  euler->add_option("file", file, "example JSON file")->required();

  auto* euler_rep =
      app.add_subcommand("euler-rep", "representation-valued Euler characteristic");
  euler_rep->add_option("file", file, "example JSON file")->required();
  euler_rep->add_option("--rho", rho_index, "character index")->required();

  auto* eta = app.add_subcommand("eta-lens", "lens-space boundary signature eta invariant");
  eta->add_option("--p", p, "group order")->required();
  eta->add_option("--m", m, "first rotation number")->required();
  eta->add_option("--n", n, "second rotation number")->required();
  eta->add_flag("--float", with_float, "also print the floating cotangent channel");

  auto* signature = app.add_subcommand("signature", "transverse signature of a problem file");
  signature->add_option("file", file, "example JSON file with a signature block")->required();

  auto* verify = app.add_subcommand("verify-catalog",
                                    "evaluate every catalog example on all channels");
  verify->add_flag("--json", json_output, "emit the report as canonical JSON");
  verify->add_flag("--no-oracle", no_oracle, "skip the independent oracle channel");
  verify->add_option("--inject-fault", inject,
                     "perturb the named row's expected value (self-test)");
  verify->add_option("--catalog-dir", dir_flag,
                     "verify the *.json files of this directory instead of the built-ins");

  auto* print = app.add_subcommand("print-example", "print a catalog example as canonical JSON");
  print->add_option("name", name, "example name")->required();
  print->add_option("--catalog-dir", dir_flag, "search this directory instead of the built-ins");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (euler->parsed()) return run_euler(file);
    if (euler_rep->parsed()) return run_euler_rep(file, rho_index);
    if (eta->parsed()) return run_eta_lens(p, m, n, with_float);
    if (signature->parsed()) return run_signature(file);
    if (verify->parsed()) return run_verify(json_output, no_oracle, inject, dir_flag);
    if (print->parsed()) return run_print_example(name, dir_flag);
  } catch (const folidx::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
