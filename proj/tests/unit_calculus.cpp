#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "voganish/report.hpp"
#include "voganish/verify.hpp"

using namespace voganish;

namespace {
std::string data_path(const std::string& name) {
  return std::string(VOGANISH_DATA_DIR) + "/" + name + ".json";
}
}  // namespace

TEST_CASE("atomic vanishing-cycle rules") {
  LocalSystemDescriptor one;
  // Zero map: identity on classes.
  CHECK(atomic_rphi(RPhiForm::Zero, one).rank == 1);
  CHECK_FALSE(atomic_rphi(RPhiForm::Zero, one).quadratic_monodromy);
  // Smooth: kills local systems.
  CHECK(atomic_rphi(RPhiForm::Smooth, one).zero);
  // Square: constant sheaf on the zero locus with quadratic monodromy.
  auto sq = atomic_rphi(RPhiForm::Square, one);
  CHECK(sq.rank == 1);
  CHECK(sq.quadratic_monodromy);
  CHECK_FALSE(sq.quadratic_system);
  // SquareUnit: quadratic-character system on the unit line.
  auto su = atomic_rphi(RPhiForm::SquareUnit, one);
  CHECK(su.quadratic_system);
  CHECK(su.quadratic_monodromy);
  // QuadSum(2) agrees with composing SquareUnit twice through the external
  // product: characters multiply, shifts add 1 - e.
  auto q2 = atomic_rphi(RPhiForm::QuadSum, one, 2);
  CHECK(q2.shift == -1);
  CHECK_FALSE(q2.quadratic_system);  // product of two quadratic characters
  auto su2 = atomic_rphi(RPhiForm::SquareUnit, atomic_rphi(RPhiForm::SquareUnit, one));
  CHECK(q2.quadratic_system == su2.quadratic_system);
  CHECK(q2.quadratic_monodromy == su2.quadratic_monodromy);
  auto q3 = atomic_rphi(RPhiForm::QuadSum, one, 3);
  CHECK(q3.shift == -2);
  CHECK(q3.quadratic_system);
  // XY: skyscraper with trivial monodromy.
  auto xy = atomic_rphi(RPhiForm::XY, one);
  CHECK(xy.rank == 1);
  CHECK_FALSE(xy.quadratic_monodromy);
  CHECK_THROWS(atomic_rphi(RPhiForm::QuadSum, one, 0));
}

TEST_CASE("tensor of micro K-classes is associative up to reindexing") {
  MicroKClass a, b, c;
  a.terms = {{Character{{1}}, 0, 1}, {Character{{0}}, 1, 2}};
  b.terms = {{Character{{1, 0}}, 2, 1}};
  c.terms = {{Character{{0}}, 0, 3}, {Character{{1}}, 1, 1}};
  auto left = tensor_micro(tensor_micro(a, b), c);
  auto right = tensor_micro(a, tensor_micro(b, c));
  CHECK(left.terms.size() == right.terms.size());
  for (size_t k = 0; k < left.terms.size(); ++k) {
    CHECK(left.terms[k].chi.exps == right.terms[k].chi.exps);
    CHECK(left.terms[k].coeff == right.terms[k].coeff);
    CHECK(left.terms[k].shift == right.terms[k].shift);
  }
}

TEST_CASE("tensoring with a zero-variety table leaves a table unchanged") {
  // The trivial factor has the one-term class of the trivial character of the
  // trivial group, which is the tensor unit.
  MicroKClass unit;
  unit.terms = {{Character{{}}, 0, 1}};
  MicroKClass a;
  a.terms = {{Character{{1, 1}}, 1, 2}, {Character{{0, 1}}, 0, 1}};
  a.normalize();
  auto prod = tensor_micro(a, unit);
  CHECK(prod.terms.size() == a.terms.size());
  for (size_t k = 0; k < a.terms.size(); ++k) {
    CHECK(prod.terms[k].chi.exps == a.terms[k].chi.exps);
    CHECK(prod.terms[k].coeff == a.terms[k].coeff);
    CHECK(prod.terms[k].shift == a.terms[k].shift);
  }
}

TEST_CASE("thom-sebastiani product reproduces the SO(3)xSO(3) table") {
  BundleSet set = load_with_factors(data_path("so5_singular"));
  const ExampleBundle& b = set.get("so5_singular");
  std::vector<std::string> problems;
  EmbeddingContext ctx = embed_strata(b, b.endoscopy.at(0), set, problems);
  REQUIRE(problems.empty());
  const ExampleBundle& so3 = set.get("so3");
  // Ev'(IC(E) box IC(E)) has the (-,-) character on all four product strata.
  int e = so3.find_simple("IC(E_Cy)");
  for (const auto& es : ctx.strata) {
    MicroKClass cls = product_nevs(ctx, es, {e, e});
    REQUIRE(cls.terms.size() == 1);
    CHECK(cls.terms[0].chi.exps == std::vector<int>{1, 1});
  }
  // Ev'(IC(1) box IC(1)) is supported on the product base stratum only.
  int one = so3.find_simple("IC(1_C0)");
  for (const auto& es : ctx.strata) {
    MicroKClass cls = product_nevs(ctx, es, {one, one});
    bool base = es.decl->factor_orbits[0] == "C0" && es.decl->factor_orbits[1] == "C0";
    CHECK(cls.zero() == !base);
  }
}

TEST_CASE("bundle round trip: load after emit reproduces the bundle") {
  for (const char* name : {"so3", "so5_regular", "so5_singular", "so7", "pgl4", "sl2", "u1"}) {
    ExampleBundle b = load_bundle(data_path(name));
    std::string emitted = emit_bundle(b);
    auto tmp = std::filesystem::temp_directory_path() / (std::string("vg_rt_") + name + ".json");
    {
      std::ofstream out(tmp);
      out << emitted;
    }
    ExampleBundle b2 = load_bundle(tmp.string());
    CHECK(emit_bundle(b2) == emitted);  // emit-load is stable
    CHECK(b2.simples.size() == b.simples.size());
    CHECK(b2.m_rep == b.m_rep);
    CHECK(b2.aubert == b.aubert);
    for (size_t s = 0; s < b.simples.size(); ++s)
      for (int c = 0; c < b.num_strata(); ++c) {
        auto x = b.evs[s][c], y = b2.evs[s][c];
        x.normalize();
        y.normalize();
        CHECK(x.terms.size() == y.terms.size());
      }
    std::filesystem::remove(tmp);
  }
}

TEST_CASE("reports are byte-stable and cover the documented ids") {
  ExampleBundle b = load_bundle(data_path("so3"));
  for (const auto& id : known_table_ids(b)) {
    std::string a = report_table(b, id, ReportFormat::Markdown);
    std::string c = report_table(b, id, ReportFormat::Markdown);
    CHECK(a == c);
    CHECK_FALSE(a.empty());
    std::string csv = report_table(b, id, ReportFormat::Csv);
    CHECK_FALSE(csv.empty());
  }
  CHECK_THROWS(report_table(b, "nonsense-SO(3)", ReportFormat::Markdown));
  // The Evs table of the SO(3) bundle is the full 3-simple, 2-stratum
  // character table.
  std::string evs = report_table(b, "Evs-SO(3)", ReportFormat::Csv);
  CHECK(evs.find("IC(E_Cy)") != std::string::npos);
  // The NEvs report recomputes the normalization from the Ev entries.
  std::string nevs = report_table(b, "NEvs-SO(3)", ReportFormat::Csv);
  CHECK_FALSE(nevs.empty());
}

TEST_CASE("truncated bundle file fails with a line-numbered parse error") {
  auto tmp = std::filesystem::temp_directory_path() / "vg_truncated.json";
  {
    std::ifstream in(data_path("so3"));
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::ofstream out(tmp);
    out << text.substr(0, text.size() / 2);
  }
  try {
    load_bundle(tmp.string());
    CHECK(false);
  } catch (const std::exception& e) {
    CHECK(std::string(e.what()).find("line") != std::string::npos);
  }
  std::filesystem::remove(tmp);
}

TEST_CASE("inadmissible labels are rejected with the violated inequality") {
  GroupInstance spec;
  spec.name = "chain";
  spec.dims = {2, 2};
  Geometry g(spec);
  OrbitLabel bad;
  bad.r = {{3}};
  CHECK_THROWS_WITH_AS(g.representative(bad), doctest::Contains("inadmissible"),
                       std::runtime_error);
  OrbitLabel bad2;
  bad2.r = {{1, 2}};  // composite rank exceeding a factor rank
  try {
    g.representative(bad2);
    CHECK(false);
  } catch (const std::exception& e) {
    CHECK(std::string(e.what()).find("requires") != std::string::npos);
  }
}

TEST_CASE("strongly regular pairs are certified and deterministic") {
  GroupInstance spec;
  spec.name = "so7";
  spec.family = Family::Sp;
  spec.dims = {1, 2};
  spec.end = EndFactor::Sym2;
  Geometry g(spec);
  for (const auto& o : g.orbits()) {
    Point a = g.strongly_regular_covector(o.label, 17);
    Point b = g.strongly_regular_covector(o.label, 17);
    CHECK(a == b);
    CHECK(g.pair_orbit_dim(o.representative, a) == g.variety().dim());
    CHECK(g.is_conormal(o.representative, a));
    CHECK(g.pairing(o.representative, a).is_zero());
  }
}

TEST_CASE("verify is deterministic for a fixed bundle and seed") {
  BundleSet set = load_with_factors(data_path("so5_regular"));
  VerifyOptions opt;
  opt.seed = 7;
  auto r1 = verify_all(set.get("so5_regular"), set, opt);
  auto r2 = verify_all(set.get("so5_regular"), set, opt);
  REQUIRE(r1.size() == r2.size());
  for (size_t k = 0; k < r1.size(); ++k) {
    CHECK(r1[k].name == r2[k].name);
    CHECK(r1[k].pass == r2[k].pass);
  }
}

TEST_CASE("schema version mismatch is rejected") {
  auto tmp = std::filesystem::temp_directory_path() / "vg_schema.json";
  {
    std::ifstream in(data_path("u1"));
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto pos = text.find("\"schema_version\": 1");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 19, "\"schema_version\": 9");
    std::ofstream out(tmp);
    out << text;
  }
  CHECK_THROWS_WITH_AS(load_bundle(tmp.string()), doctest::Contains("schema"),
                       std::runtime_error);
  std::filesystem::remove(tmp);
}

TEST_CASE("component groups refuse instances outside the supported catalog") {
  GroupInstance spec;
  spec.name = "big_chain";
  spec.dims = {3, 3, 3};
  Geometry g(spec);
  const Orbit& o = g.orbit(g.zero_orbit());
  CHECK_THROWS_WITH_AS(ComponentGroupEngine(g, o.representative, nullptr),
                       doctest::Contains("catalog"), std::runtime_error);
}

TEST_CASE("genericity failure is loud, never silently wrong") {
  GroupInstance spec;
  spec.name = "so5r";
  spec.family = Family::Sp;
  spec.dims = {1, 1};
  spec.end = EndFactor::Sym2;
  Geometry g(spec);
  const Orbit& zero = g.orbit(g.zero_orbit());
  CHECK_THROWS_WITH_AS(g.strongly_regular_covector(zero.label, 1, 0),
                       doctest::Contains("retry budget"), std::runtime_error);
}

TEST_CASE("closure order is a partial order matching rank dominance") {
  GroupInstance spec;
  spec.name = "chain";
  spec.dims = {2, 1, 2};
  Geometry g(spec);
  int n = g.num_orbits();
  for (int a = 0; a < n; ++a) {
    CHECK(g.closure_leq(g.orbit(a).label, g.orbit(a).label));
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      bool ab = g.closure_leq(g.orbit(a).label, g.orbit(b).label);
      bool ba = g.closure_leq(g.orbit(b).label, g.orbit(a).label);
      bool both = ab && ba;
      CHECK_FALSE(both);
      for (int c = 0; c < n; ++c)
        if (ab && g.closure_leq(g.orbit(b).label, g.orbit(c).label))
          CHECK(g.closure_leq(g.orbit(a).label, g.orbit(c).label));
    }
  }
  // Zero orbit below everything, everything below the open orbit.
  for (int a = 0; a < n; ++a) {
    CHECK(g.closure_leq(g.orbit(g.zero_orbit()).label, g.orbit(a).label));
    CHECK(g.closure_leq(g.orbit(a).label, g.orbit(g.open_orbit()).label));
  }
}

TEST_CASE("the PGL(4) table is the degree-two lift of the SO(3) table") {
  // The reduced instance underlying the PGL(4) bundle is the SO(3) variety;
  // forgetting the extra center (exponents mod 2, mu_4 -> mu_2) must send
  // every Ev entry onto the corresponding SO(3) entry.
  ExampleBundle pgl4 = load_bundle(data_path("pgl4"));
  ExampleBundle so3 = load_bundle(data_path("so3"));
  auto reduce_simple = [&](int s) {
    const SimpleSheaf& sh = pgl4.simples[s];
    std::string stratum = pgl4.strata[sh.stratum].name;
    bool order4 = sh.local_system == "+i" || sh.local_system == "-i";
    if (stratum == "C0") return so3.find_simple("IC(1_C0)");
    return so3.find_simple(order4 ? "IC(E_Cy)" : "IC(1_Cy)");
  };
  for (size_t s = 0; s < pgl4.simples.size(); ++s) {
    int rs = reduce_simple(static_cast<int>(s));
    for (int c = 0; c < pgl4.num_strata(); ++c) {
      MicroKClass lifted = pgl4.evs[s][c];
      for (auto& t : lifted.terms)
        for (size_t k = 0; k < t.chi.exps.size(); ++k) t.chi.exps[k] %= 2;
      lifted.normalize();
      MicroKClass want = so3.evs[rs][c];
      want.normalize();
      REQUIRE(lifted.terms.size() == want.terms.size());
      for (size_t k = 0; k < want.terms.size(); ++k) {
        CHECK(lifted.terms[k].chi.exps == want.terms[k].chi.exps);
        CHECK(lifted.terms[k].coeff == want.terms[k].coeff);
      }
    }
  }
}

TEST_CASE("the SO(5)xSO(3) product table carries the restriction checks") {
  // Independent recomputation of the product-side entries used by the ambient
  // trace identity: each constituent of the curated restriction classes has
  // the character forced by the factor tables.
  BundleSet set = load_with_factors(data_path("so7"));
  const ExampleBundle& b = set.get("so7");
  std::vector<std::string> problems;
  EmbeddingContext ctx = embed_strata(b, b.endoscopy.at(0), set, problems);
  REQUIRE(problems.empty());
  const ExampleBundle& so5 = set.get("so5_regular");
  const ExampleBundle& so3 = set.get("so3");
  int lux = so5.find_simple("IC(L_Cux)");
  int ey = so3.find_simple("IC(E_Cy)");
  for (const auto& es : ctx.strata) {
    MicroKClass cls = product_nevs(ctx, es, {lux, ey});
    const std::string& f0 = es.decl->factor_orbits[0];
    const std::string& f1 = es.decl->factor_orbits[1];
    bool supported = (f0 == "Cu" || f0 == "Cux") && (f1 == "C0" || f1 == "Cy");
    CHECK(cls.zero() == !supported);
    if (supported) {
      REQUIRE(cls.terms.size() == 1);
      CHECK(cls.terms[0].chi.exps == std::vector<int>{1, 1});  // (-,-)
    }
  }
}
