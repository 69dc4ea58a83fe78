#include "voganish/bundle.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>

namespace voganish {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw std::runtime_error("bundle " + where + ": " + what);
}

QI parse_qi(const json& j) {
  if (j.is_number_integer()) return QI(static_cast<long>(j.get<long>()));
  return QI::parse(j.get<std::string>());
}

std::vector<QI> parse_coords(const json& j) {
  std::vector<QI> out;
  for (const auto& e : j) out.push_back(parse_qi(e));
  return out;
}

FiniteAbelianGroup parse_group(const json& j) {
  FiniteAbelianGroup g;
  for (const auto& gen : j) {
    g.generator_names.push_back(gen.at("name").get<std::string>());
    g.orders.push_back(gen.at("order").get<int>());
    std::vector<long> pat;
    if (gen.contains("pattern"))
      for (const auto& e : gen.at("pattern")) pat.push_back(e.get<long>());
    g.witnesses.push_back(std::move(pat));
  }
  return g;
}

Character parse_char(const json& j, const FiniteAbelianGroup& g, const std::string& where) {
  Character c;
  for (const auto& e : j) c.exps.push_back(e.get<int>());
  if (c.exps.size() != g.orders.size()) fail(where, "character exponent count mismatch");
  for (size_t k = 0; k < c.exps.size(); ++k)
    if (c.exps[k] < 0 || c.exps[k] >= g.orders[k]) fail(where, "character exponent out of range");
  return c;
}

GroupElement parse_elem(const json& j, const FiniteAbelianGroup& g, const std::string& where) {
  GroupElement e;
  for (const auto& x : j) e.push_back(x.get<int>());
  if (e.size() != g.orders.size()) fail(where, "group element coordinate count mismatch");
  return e;
}

}  // namespace

const StratumData& ExampleBundle::stratum(const std::string& n) const {
  auto it = stratum_index.find(n);
  if (it == stratum_index.end()) fail(name, "unknown stratum '" + n + "'");
  return strata[it->second];
}

int ExampleBundle::kottwitz(const std::string& form) const {
  for (const auto& f : instance.pure_forms)
    if (f.label == form) return f.kottwitz_sign;
  fail(name, "unknown pure form '" + form + "'");
}

int ExampleBundle::find_simple(const std::string& n) const {
  auto it = simple_index.find(n);
  if (it == simple_index.end()) fail(name, "unknown simple '" + n + "'");
  return it->second;
}

int ExampleBundle::simple_of_rep(const std::string& rep, const std::string& form) const {
  for (size_t k = 0; k < simples.size(); ++k)
    if (simple_rep[k] == rep && simple_form[k] == form) return static_cast<int>(k);
  fail(name, "no simple for representation (" + rep + ", " + form + ")");
}

Character ExampleBundle::twist_char(int stratum_idx) const {
  // T_C = Evs_C IC(1_C); the diagonal entry of the trivial system's IC.
  const StratumData& st = strata[stratum_idx];
  for (size_t s = 0; s < simples.size(); ++s) {
    if (simples[s].stratum != stratum_idx) continue;
    auto it = st.local_systems.find(simples[s].local_system);
    if (it == st.local_systems.end()) continue;
    bool trivial = true;
    for (int e : it->second.exps) trivial &= e == 0;
    if (!trivial) continue;
    const MicroKClass& entry = evs[s][stratum_idx];
    if (entry.terms.size() != 1 || entry.terms[0].coeff != 1)
      fail(name, "twist at " + st.name + " is not rank one");
    return entry.terms[0].chi;
  }
  fail(name, "no diagonal Evs entry to define the twist at " + st.name);
}

MicroKClass ExampleBundle::nevs_entry(int simple, int stratum_idx) const {
  const StratumData& st = strata[stratum_idx];
  Character t = twist_char(stratum_idx);
  // Inverse of a character: negate exponents mod orders.
  Character tinv = t;
  for (size_t k = 0; k < tinv.exps.size(); ++k)
    tinv.exps[k] = (st.a_mic.orders[k] - tinv.exps[k]) % st.a_mic.orders[k];
  return evs[simple][stratum_idx].twisted_by(st.a_mic, tinv);
}

long ExampleBundle::dim_supp(int simple) const {
  return strata[simples[simple].stratum].declared_dim;
}

const ExampleBundle& BundleSet::get(const std::string& n) const {
  auto it = by_name.find(n);
  if (it == by_name.end()) throw std::runtime_error("bundle set: missing bundle '" + n + "'");
  return it->second;
}

std::string default_data_dir() {
#ifdef VOGANISH_DATA_DIR
  return VOGANISH_DATA_DIR;
#else
  return "data";
#endif
}

ExampleBundle load_bundle(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open bundle file " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    size_t line = 1;
    for (size_t k = 0; k + 1 < e.byte && k < text.size(); ++k)
      if (text[k] == '\n') ++line;
    throw std::runtime_error("bundle " + path + ": parse error at line " +
                             std::to_string(line) + ": " + e.what());
  }

  ExampleBundle b;
  b.schema_version = j.at("schema_version").get<int>();
  if (b.schema_version != 1)
    fail(path, "unsupported schema version " + std::to_string(b.schema_version));
  b.name = j.at("name").get<std::string>();
  b.display_name = j.value("display_name", b.name);
  b.description = j.value("description", "");

  const json& ji = j.at("instance");
  GroupInstance& gi = b.instance;
  gi.name = b.name;
  std::string fam = ji.at("family").get<std::string>();
  if (fam == "GL") gi.family = Family::GL;
  else if (fam == "Sp") gi.family = Family::Sp;
  else if (fam == "EvenO") gi.family = Family::EvenO;
  else if (fam == "OddO-dual") gi.family = Family::OddODual;
  else fail(b.name, "unknown family " + fam);
  for (const auto& d : ji.at("dims")) gi.dims.push_back(d.get<int>());
  std::string endf = ji.value("end_factor", "none");
  gi.end = endf == "sym2" ? EndFactor::Sym2 : endf == "alt2" ? EndFactor::Alt2 : EndFactor::None;
  gi.defining_rank = ji.value("defining_rank", 0);
  if (ji.contains("constraints"))
    for (const auto& c : ji.at("constraints")) {
      TorusConstraint tc;
      for (const auto& e : c.at("exps")) tc.exps.push_back(e.get<long>());
      tc.order = c.at("order").get<long>();
      gi.constraints.push_back(tc);
    }
  if (ji.contains("component_group_override") && !ji.at("component_group_override").is_null()) {
    GroupInstance::ComponentOverride ov;
    for (const auto& o : ji.at("component_group_override").at("orders")) ov.orders.push_back(o.get<int>());
    for (const auto& n : ji.at("component_group_override").at("names"))
      ov.generator_names.push_back(n.get<std::string>());
    gi.h_component_group = ov;
  }
  for (const auto& f : j.at("pure_forms"))
    gi.pure_forms.push_back({f.at("label").get<std::string>(), f.at("kottwitz").get<int>()});

  b.geom = std::make_shared<Geometry>(gi);
  const Geometry& geo = *b.geom;

  for (const auto& js : j.at("strata")) {
    StratumData st;
    st.name = js.at("name").get<std::string>();
    for (const auto& row : js.at("ranks")) {
      st.ranks.r.emplace_back();
      for (const auto& e : row) st.ranks.r.back().push_back(e.get<int>());
    }
    st.ranks.canonical_name = st.name;
    st.declared_dim = js.at("dim").get<int>();
    st.dual_name = js.at("dual").get<std::string>();
    st.declared_ecc = js.at("eccentricity").get<int>();
    if (js.contains("covers"))
      for (const auto& c : js.at("covers")) st.covers.push_back(c.get<std::string>());
    st.base_x = geo.unflatten(parse_coords(js.at("base_x")), false);
    st.base_xi = geo.unflatten(parse_coords(js.at("base_xi")), true);
    st.a_group = parse_group(js.at("a_group"));
    st.a_mic = parse_group(js.at("a_mic"));
    for (auto it = js.at("local_systems").begin(); it != js.at("local_systems").end(); ++it)
      st.local_systems[it.key()] = parse_char(it.value(), st.a_group, b.name + "/" + st.name);
    for (auto it = js.at("mic_local_systems").begin(); it != js.at("mic_local_systems").end(); ++it)
      st.mic_systems[it.key()] = parse_char(it.value(), st.a_mic, b.name + "/" + st.name);
    if (js.contains("hat_mic_gen_map"))
      for (const auto& e : js.at("hat_mic_gen_map")) st.hat_mic_gen_map.push_back(e.get<int>());
    else
      for (size_t k = 0; k < st.a_mic.orders.size(); ++k)
        st.hat_mic_gen_map.push_back(static_cast<int>(k));
    st.orbit_index = geo.orbit_index(st.ranks);  // throws on inadmissible label
    b.stratum_index[st.name] = static_cast<int>(b.strata.size());
    b.strata.push_back(std::move(st));
  }
  if (static_cast<int>(b.strata.size()) != geo.num_orbits())
    fail(b.name, "bundle lists " + std::to_string(b.strata.size()) + " strata but the variety has " +
                     std::to_string(geo.num_orbits()) + " orbits");

  for (const auto& s : j.at("simples")) {
    SimpleSheaf sh;
    sh.name = s.at("name").get<std::string>();
    std::string stn = s.at("stratum").get<std::string>();
    if (!b.stratum_index.count(stn)) fail(b.name, "simple " + sh.name + " on unknown stratum " + stn);
    sh.stratum = b.stratum_index[stn];
    sh.local_system = s.at("local_system").get<std::string>();
    if (!b.strata[sh.stratum].local_systems.count(sh.local_system))
      fail(b.name, "simple " + sh.name + " references unknown local system " + sh.local_system);
    b.simple_index[sh.name] = static_cast<int>(b.simples.size());
    b.simples.push_back(sh);
    b.simple_rep.push_back(s.at("rep").get<std::string>());
    b.simple_form.push_back(s.at("form").get<std::string>());
    b.simple_cuspidal.push_back(s.value("cuspidal", ""));
    b.kottwitz(b.simple_form.back());  // validates the form label
  }
  // Simple count must equal the total number of named local systems.
  {
    size_t total = 0;
    for (const auto& st : b.strata) total += st.local_systems.size();
    if (total != b.simples.size())
      fail(b.name, "simples do not exhaust the named local systems");
  }

  b.evs.assign(b.simples.size(), std::vector<MicroKClass>(b.strata.size()));
  for (auto it = j.at("evs").begin(); it != j.at("evs").end(); ++it) {
    int sidx = b.find_simple(it.key());
    for (auto st = it.value().begin(); st != it.value().end(); ++st) {
      if (!b.stratum_index.count(st.key()))
        fail(b.name, "evs entry for unknown stratum " + st.key());
      int cidx = b.stratum_index[st.key()];
      MicroKClass cls;
      for (const auto& term : st.value()) {
        std::string ls = term.at("ls").get<std::string>();
        auto mit = b.strata[cidx].mic_systems.find(ls);
        if (mit == b.strata[cidx].mic_systems.end())
          fail(b.name, "evs entry references unknown micro system " + ls + " at " + st.key());
        MicroTerm t;
        t.chi = mit->second;
        t.shift = term.value("shift", 0);
        t.coeff = term.value("coeff", 1);
        cls.terms.push_back(t);
      }
      cls.normalize();
      b.evs[sidx][cidx] = std::move(cls);
    }
  }

  for (auto it = j.at("hat").begin(); it != j.at("hat").end(); ++it) {
    b.find_simple(it.key());
    b.find_simple(it.value().get<std::string>());
    b.hat_simple[it.key()] = it.value().get<std::string>();
  }
  if (b.hat_simple.size() != b.simples.size()) fail(b.name, "hat table incomplete");

  auto parse_matrix = [&](const json& jm, const char* what) {
    std::vector<std::vector<long>> m;
    for (const auto& row : jm) {
      m.emplace_back();
      for (const auto& e : row) m.back().push_back(e.get<long>());
      if (m.back().size() != b.simples.size()) fail(b.name, std::string(what) + " width mismatch");
    }
    if (m.size() != b.simples.size()) fail(b.name, std::string(what) + " height mismatch");
    return m;
  };
  b.m_rep = parse_matrix(j.at("m_rep"), "m_rep");
  b.m_geo_prime = parse_matrix(j.at("m_geo_prime"), "m_geo_prime");
  // Unitriangularity under the simples order.
  for (size_t i = 0; i < b.simples.size(); ++i) {
    if (b.m_geo_prime[i][i] != 1 || b.m_rep[i][i] != 1)
      fail(b.name, "multiplicity matrices must be unitriangular with unit diagonal");
    for (size_t jj = 0; jj < b.simples.size(); ++jj) {
      if (b.m_geo_prime[i][jj] < 0 || b.m_rep[i][jj] < 0)
        fail(b.name, "multiplicity matrices must be nonnegative");
    }
  }

  if (j.contains("arthur"))
    for (const auto& ja : j.at("arthur")) {
      ArthurParam ap;
      ap.name = ja.at("name").get<std::string>();
      ap.stratum = ja.at("stratum").get<std::string>();
      const StratumData& st = b.stratum(ap.stratum);
      ap.s_psi = parse_elem(ja.at("s_psi"), st.a_mic, b.name + "/" + ap.name);
      for (const auto& m : ja.at("packet")) {
        ArthurParam::Member mem;
        mem.rep = m.at("rep").get<std::string>();
        mem.form = m.at("form").get<std::string>();
        mem.pairing = parse_char(m.at("character"), st.a_mic, b.name + "/" + ap.name);
        b.simple_of_rep(mem.rep, mem.form);  // must resolve
        ap.packet.push_back(std::move(mem));
      }
      ap.aubert_partner = ja.at("aubert_partner").get<std::string>();
      if (ja.contains("hat_gen_map"))
        for (const auto& e : ja.at("hat_gen_map")) ap.hat_gen_map.push_back(e.get<int>());
      else
        for (size_t k = 0; k < st.a_mic.orders.size(); ++k) ap.hat_gen_map.push_back(static_cast<int>(k));
      b.arthur_index[ap.name] = static_cast<int>(b.arthur.size());
      b.arthur.push_back(std::move(ap));
    }
  for (const auto& ap : b.arthur)
    if (!b.arthur_index.count(ap.aubert_partner))
      fail(b.name, "arthur parameter " + ap.name + " has unknown aubert partner");

  if (j.contains("aubert"))
    for (auto it = j.at("aubert").begin(); it != j.at("aubert").end(); ++it)
      b.aubert[it.key()] = it.value().get<std::string>();
  if (j.contains("non_arthur_strata"))
    for (const auto& s : j.at("non_arthur_strata")) {
      b.stratum(s.get<std::string>());
      b.non_arthur_strata.push_back(s.get<std::string>());
    }

  if (j.contains("endoscopy"))
    for (const auto& je : j.at("endoscopy")) {
      EndoscopicEmbedding em;
      em.name = je.at("name").get<std::string>();
      em.s_note = je.value("s_note", "");
      if (je.contains("s_pattern"))
        for (const auto& e : je.at("s_pattern")) em.s_pattern.push_back(e.get<long>());
      for (const auto& f : je.at("factors")) em.factor_bundles.push_back(f.get<std::string>());
      for (const auto& fm : je.at("coord_map")) {
        em.coord_map.emplace_back();
        for (const auto& pr : fm)
          em.coord_map.back().emplace_back(pr.at(0).get<int>(), parse_qi(pr.at(1)));
      }
      if (em.coord_map.size() != em.factor_bundles.size())
        fail(b.name, "endoscopy " + em.name + ": coord_map per factor required");
      for (const auto& js2 : je.at("strata")) {
        EndoscopicStratum es;
        for (const auto& fo : js2.at("factors")) es.factor_orbits.push_back(fo.get<std::string>());
        es.ambient = js2.at("ambient").get<std::string>();
        b.stratum(es.ambient);
        es.lifts = js2.at("lifts").get<bool>();
        if (es.lifts) {
          es.a_s_ambient = parse_elem(js2.at("a_s_ambient"), b.stratum(es.ambient).a_mic,
                                      b.name + "/" + em.name);
          for (const auto& af : js2.at("a_s_factors")) {
            GroupElement e;
            for (const auto& x : af) e.push_back(x.get<int>());
            es.a_s_factors.push_back(std::move(e));
          }
        }
        if (js2.contains("transport"))
          for (const auto& blk : js2.at("transport")) {
            int d = static_cast<int>(blk.size());
            Mat m(d, d);
            for (int r = 0; r < d; ++r)
              for (int c = 0; c < d; ++c) m.at(r, c) = parse_qi(blk.at(r).at(c));
            es.transport.push_back(std::move(m));
          }
        em.strata.push_back(std::move(es));
      }
      if (je.contains("restriction"))
        for (auto it = je.at("restriction").begin(); it != je.at("restriction").end(); ++it) {
          b.find_simple(it.key());
          std::vector<RestrictionTerm> terms;
          for (const auto& t : it.value()) {
            RestrictionTerm rt;
            for (const auto& fsn : t.at("factors")) rt.factor_simples.push_back(fsn.get<std::string>());
            rt.shift = t.value("shift", 0);
            terms.push_back(std::move(rt));
          }
          em.restriction[it.key()] = std::move(terms);
        }
      b.endoscopy.push_back(std::move(em));
    }

  return b;
}


namespace {

json qi_json(const QI& q) {
  if (q.is_rational() && q.re.get_den() == 1 &&
      q.re.get_num() >= -(1 << 30) && q.re.get_num() <= (1 << 30))
    return json(static_cast<long>(q.re.get_num().get_si()));
  return json(q.str());
}

json group_json(const FiniteAbelianGroup& g) {
  json out = json::array();
  for (int k = 0; k < g.num_generators(); ++k) {
    json gen;
    gen["name"] = g.generator_names[k];
    gen["order"] = g.orders[k];
    if (!g.witnesses[k].empty()) gen["pattern"] = g.witnesses[k];
    out.push_back(gen);
  }
  return out;
}

}  // namespace

std::string emit_bundle(const ExampleBundle& b) {
  json j;
  j["schema_version"] = b.schema_version;
  j["name"] = b.name;
  j["display_name"] = b.display_name;
  j["description"] = b.description;
  json ji;
  switch (b.instance.family) {
    case Family::GL: ji["family"] = "GL"; break;
    case Family::Sp: ji["family"] = "Sp"; break;
    case Family::EvenO: ji["family"] = "EvenO"; break;
    case Family::OddODual: ji["family"] = "OddO-dual"; break;
  }
  ji["dims"] = b.instance.dims;
  ji["end_factor"] = b.instance.end == EndFactor::Sym2   ? "sym2"
                     : b.instance.end == EndFactor::Alt2 ? "alt2"
                                                         : "none";
  ji["defining_rank"] = b.instance.defining_rank;
  ji["constraints"] = json::array();
  for (const auto& c : b.instance.constraints)
    ji["constraints"].push_back({{"exps", c.exps}, {"order", c.order}});
  if (b.instance.h_component_group) {
    ji["component_group_override"] = {{"orders", b.instance.h_component_group->orders},
                                      {"names", b.instance.h_component_group->generator_names}};
  }
  j["instance"] = ji;
  j["pure_forms"] = json::array();
  for (const auto& f : b.instance.pure_forms)
    j["pure_forms"].push_back({{"label", f.label}, {"kottwitz", f.kottwitz_sign}});
  j["strata"] = json::array();
  for (const auto& st : b.strata) {
    json js;
    js["name"] = st.name;
    js["ranks"] = st.ranks.r;
    js["dim"] = st.declared_dim;
    js["dual"] = st.dual_name;
    js["eccentricity"] = st.declared_ecc;
    js["covers"] = st.covers;
    json bx = json::array(), bxi = json::array();
    for (const auto& q : b.geom->flatten(st.base_x, false)) bx.push_back(qi_json(q));
    for (const auto& q : b.geom->flatten(st.base_xi, true)) bxi.push_back(qi_json(q));
    js["base_x"] = bx;
    js["base_xi"] = bxi;
    js["a_group"] = group_json(st.a_group);
    js["a_mic"] = group_json(st.a_mic);
    js["hat_mic_gen_map"] = st.hat_mic_gen_map;
    json ls, ms;
    for (const auto& [n, c] : st.local_systems) ls[n] = c.exps;
    for (const auto& [n, c] : st.mic_systems) ms[n] = c.exps;
    js["local_systems"] = ls.is_null() ? json::object() : ls;
    js["mic_local_systems"] = ms.is_null() ? json::object() : ms;
    j["strata"].push_back(js);
  }
  j["simples"] = json::array();
  for (size_t k = 0; k < b.simples.size(); ++k)
    j["simples"].push_back({{"name", b.simples[k].name},
                            {"stratum", b.strata[b.simples[k].stratum].name},
                            {"local_system", b.simples[k].local_system},
                            {"rep", b.simple_rep[k]},
                            {"form", b.simple_form[k]},
                            {"cuspidal", b.simple_cuspidal[k]}});
  json evs = json::object();
  for (size_t s = 0; s < b.simples.size(); ++s) {
    json per = json::object();
    for (size_t c = 0; c < b.strata.size(); ++c) {
      if (b.evs[s][c].zero()) continue;
      json terms = json::array();
      for (const auto& t : b.evs[s][c].terms) {
        std::string nm;
        for (const auto& [n, chi] : b.strata[c].mic_systems)
          if (chi.exps == t.chi.exps) nm = n;
        terms.push_back({{"ls", nm}, {"shift", t.shift}, {"coeff", t.coeff}});
      }
      per[b.strata[c].name] = terms;
    }
    evs[b.simples[s].name] = per;
  }
  j["evs"] = evs;
  j["hat"] = b.hat_simple;
  j["m_rep"] = b.m_rep;
  j["m_geo_prime"] = b.m_geo_prime;
  j["arthur"] = json::array();
  for (const auto& ap : b.arthur) {
    json ja;
    ja["name"] = ap.name;
    ja["stratum"] = ap.stratum;
    ja["s_psi"] = ap.s_psi;
    ja["packet"] = json::array();
    for (const auto& m : ap.packet)
      ja["packet"].push_back({{"rep", m.rep}, {"form", m.form}, {"character", m.pairing.exps}});
    ja["aubert_partner"] = ap.aubert_partner;
    ja["hat_gen_map"] = ap.hat_gen_map;
    j["arthur"].push_back(ja);
  }
  j["aubert"] = b.aubert;
  j["non_arthur_strata"] = b.non_arthur_strata;
  j["endoscopy"] = json::array();
  for (const auto& em : b.endoscopy) {
    json je;
    je["name"] = em.name;
    je["s_note"] = em.s_note;
    if (!em.s_pattern.empty()) je["s_pattern"] = em.s_pattern;
    je["factors"] = em.factor_bundles;
    je["coord_map"] = json::array();
    for (const auto& fm : em.coord_map) {
      json per = json::array();
      for (const auto& [idx, scale] : fm) per.push_back(json::array({idx, qi_json(scale)}));
      je["coord_map"].push_back(per);
    }
    je["strata"] = json::array();
    for (const auto& es : em.strata) {
      json js;
      js["factors"] = es.factor_orbits;
      js["ambient"] = es.ambient;
      js["lifts"] = es.lifts;
      if (es.lifts) {
        js["a_s_ambient"] = es.a_s_ambient;
        js["a_s_factors"] = es.a_s_factors;
      }
      if (!es.transport.empty()) {
        json blocks = json::array();
        for (const auto& m : es.transport) {
          json rows = json::array();
          for (int r = 0; r < m.rows(); ++r) {
            json row = json::array();
            for (int c = 0; c < m.cols(); ++c) row.push_back(qi_json(m.at(r, c)));
            rows.push_back(row);
          }
          blocks.push_back(rows);
        }
        js["transport"] = blocks;
      }
      je["strata"].push_back(js);
    }
    json rest = json::object();
    for (const auto& [simple, terms] : em.restriction) {
      json jt = json::array();
      for (const auto& t : terms)
        jt.push_back({{"factors", t.factor_simples}, {"shift", t.shift}});
      rest[simple] = jt;
    }
    je["restriction"] = rest;
    j["endoscopy"].push_back(je);
  }
  return j.dump(1);
}

BundleSet load_with_factors(const std::string& path) {
  BundleSet set;
  ExampleBundle main = load_bundle(path);
  set.main_name = main.name;
  fs::path dir = fs::path(path).parent_path();
  std::vector<std::string> wanted;
  for (const auto& em : main.endoscopy)
    for (const auto& f : em.factor_bundles) wanted.push_back(f);
  std::string mname = main.name;
  set.by_name.emplace(mname, std::move(main));
  for (const auto& w : wanted) {
    if (set.by_name.count(w)) continue;
    fs::path cand = dir / (w + ".json");
    if (!fs::exists(cand)) cand = fs::path(default_data_dir()) / (w + ".json");
    if (!fs::exists(cand))
      throw std::runtime_error("cannot locate factor bundle '" + w + "' near " + path);
    set.by_name.emplace(w, load_bundle(cand.string()));
  }
  return set;
}

}  // namespace voganish
