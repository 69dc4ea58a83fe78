#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "voganish/report.hpp"
#include "voganish/verify.hpp"

using namespace voganish;

namespace {

uint64_t resolve_seed(uint64_t cli_seed) {
  if (const char* env = std::getenv("VOGANISH_SEED")) return std::strtoull(env, nullptr, 10);
  return cli_seed;
}

int run_verify(const std::string& path, uint64_t seed, bool strict) {
  BundleSet set = load_with_factors(path);
  const ExampleBundle* main = &set.main();
  VerifyOptions opt;
  opt.seed = resolve_seed(seed);
  opt.strict = strict;
  auto results = verify_all(*main, set, opt);
  int failures = 0;
  for (const auto& r : results) {
    std::string status = !r.pass ? "FAIL" : r.warning ? "WARN" : r.info_only ? "INFO" : "PASS";
    if (!r.pass) ++failures;
    if (strict && r.warning) ++failures;
    std::cout << status << "  " << r.name;
    if (!r.detail.empty()) std::cout << "  -- " << r.detail;
    std::cout << "\n";
  }
  std::cout << (failures ? "FAILED" : "OK") << " (" << results.size() << " checks, "
            << failures << " failures)\n";
  return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"voganish: exact geometry of Vogan varieties with packet and endoscopy checks"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string bundle_path;
  uint64_t seed = 1;
  std::string format = "md";
  bool strict = false;
  app.add_option("--bundle", bundle_path, "bundle file (JSON)")->required();
  app.add_option("--seed", seed, "seed for randomized certificates");
  app.add_option("--format", format, "report format: md or csv")->check(CLI::IsMember({"md", "csv"}));
  app.add_flag("--strict", strict, "treat warnings as failures");

  auto* orbits = app.add_subcommand("orbits", "list orbits with dims, duals, component groups");
  auto* dual = app.add_subcommand("dual", "dual orbit of one stratum");
  std::string stratum;
  dual->add_option("stratum", stratum, "stratum name")->required();
  auto* closure = app.add_subcommand("closure", "closure covering relations");
  auto* packets = app.add_subcommand("packets", "ABV-packets per stratum");
  auto* eta = app.add_subcommand("eta", "eta^{NEvs}_{psi,s} for an Arthur parameter");
  std::string psi_name, s_coords;
  eta->add_option("psi", psi_name, "Arthur parameter name")->required();
  eta->add_option("s", s_coords, "element of A_psi as comma-separated exponents")->required();
  auto* verify = app.add_subcommand("verify", "run the full verification suite");
  auto* report = app.add_subcommand("report", "emit a named table");
  std::string table_id;
  report->add_option("table", table_id, "table id, e.g. Evs-SO(7)")->required();
  auto* endo = app.add_subcommand("endoscopy", "evaluate the endoscopic trace identities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (verify->parsed()) return run_verify(bundle_path, seed, strict);

    BundleSet set = load_with_factors(bundle_path);
    const ExampleBundle& b = set.main();
    ReportFormat fmt = format == "csv" ? ReportFormat::Csv : ReportFormat::Markdown;

    if (orbits->parsed()) {
      std::cout << report_table(b, "orbits-" + b.display_name, fmt);
    } else if (dual->parsed()) {
      const StratumData& st = b.stratum(stratum);
      OrbitLabel d = b.geom->dual_orbit(st.ranks, resolve_seed(seed));
      std::string nm = d.key();
      for (const auto& other : b.strata)
        if (other.ranks == d) nm = other.name + " (transposed dual)";
      std::cout << stratum << " -> " << nm << ", eccentricity "
                << st.declared_dim + b.geom->orbit_dimension(d) - b.geom->variety().dim() << "\n";
    } else if (closure->parsed()) {
      std::map<int, std::string> names;
      for (const auto& st : b.strata) names[st.orbit_index] = st.name;
      for (const auto& c : b.geom->covers_with_witnesses(resolve_seed(seed)))
        std::cout << names[c.lower] << " < " << names[c.upper]
                  << (c.witnessed ? "" : "   [no degeneration witness]") << "\n";
    } else if (packets->parsed()) {
      std::cout << report_table(b, "ABV-" + b.display_name, fmt);
    } else if (eta->parsed()) {
      const ArthurParam& psi = b.arthur.at(b.arthur_index.at(psi_name));
      const StratumData& st = b.stratum(psi.stratum);
      GroupElement s;
      std::stringstream ss(s_coords);
      std::string tok;
      while (std::getline(ss, tok, ',')) s.push_back(std::stoi(tok));
      if (s.size() != st.a_mic.orders.size())
        throw std::runtime_error("element needs " + std::to_string(st.a_mic.orders.size()) +
                                 " exponents");
      std::cout << "eta^{NEvs}_{" << psi_name << ",s} = "
                << eta_nevs(b, b.stratum_index.at(psi.stratum), s).str() << "\n";
      std::cout << "eta_{" << psi_name << ",s}       = " << eta_arthur(b, psi, s).str() << "\n";
    } else if (report->parsed()) {
      std::cout << report_table(b, table_id, fmt);
    } else if (endo->parsed()) {
      for (const auto& em : b.endoscopy) {
        std::vector<std::string> problems;
        EmbeddingContext ctx = embed_strata(b, em, set, problems);
        for (const auto& p : problems) std::cout << "PROBLEM " << p << "\n";
        for (const auto& [simple, terms] : em.restriction) {
          (void)terms;
          std::cout << em.name << "  P = " << simple << "\n";
          for (const auto& row : trace_identity_check(ctx, simple))
            std::cout << "  " << row.stratum_desc << ": LHS = " << row.lhs.str()
                      << ", RHS = " << row.rhs.str() << (row.match ? "" : "   MISMATCH") << "\n";
        }
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
