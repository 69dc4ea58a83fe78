#include "voganish/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace voganish {

namespace {

struct Runner {
  std::vector<CheckResult> out;
  void check(const std::string& name, bool pass, const std::string& detail = "") {
    out.push_back({name, pass, false, false, detail});
  }
  void info(const std::string& name, const std::string& detail) {
    out.push_back({name, true, true, false, detail});
  }
  void warn(const std::string& name, bool clean, const std::string& detail) {
    out.push_back({name, true, false, !clean, detail});
  }
};

// Pullback of an A_C character along A^mic -> A_C; the projection sends each
// microlocal generator to its class in A_C.
Character pullback_to_mic(const StratumData& st, const Character& l,
                          const std::vector<GroupElement>& proj_x) {
  Character out;
  for (size_t k = 0; k < st.a_mic.orders.size(); ++k) {
    QI v = l.value_at(st.a_group, proj_x[k]);
    int o = st.a_mic.orders[k];
    int e = -1;
    for (int cand = 0; cand < o; ++cand) {
      long unit = 4 / o;
      if (v == QI::i_pow(unit * cand)) {
        e = cand;
        break;
      }
    }
    if (e < 0) throw std::runtime_error("pullback: character value is not an order-" +
                                        std::to_string(o) + " root of unity");
    out.exps.push_back(e);
  }
  return out;
}

bool generate_whole(const FiniteAbelianGroup& g, const std::vector<GroupElement>& gens) {
  std::set<GroupElement> span;
  std::vector<GroupElement> frontier = {GroupElement(g.orders.size(), 0)};
  span.insert(frontier[0]);
  while (!frontier.empty()) {
    GroupElement e = frontier.back();
    frontier.pop_back();
    for (const auto& gen : gens) {
      GroupElement f = mul_elements(g, e, gen);
      if (span.insert(f).second) frontier.push_back(f);
    }
  }
  return static_cast<long>(span.size()) == g.size();
}

}  // namespace

bool all_passed(const std::vector<CheckResult>& results, bool strict) {
  for (const auto& r : results) {
    if (!r.pass) return false;
    if (strict && r.warning) return false;
  }
  return true;
}

std::vector<CheckResult> verify_all(const ExampleBundle& b, const BundleSet& set,
                                    const VerifyOptions& opt) {
  Runner R;
  const Geometry& geo = *b.geom;
  const bool zero_dim = geo.variety().dim() == 0;
  const bool overridden = b.instance.h_component_group.has_value();

  // ---- geometry reproduction ----------------------------------------------
  R.check(b.name + ".geometry.orbit_count",
          geo.num_orbits() == static_cast<int>(b.strata.size()),
          "recomputed " + std::to_string(geo.num_orbits()) + " orbits");
  std::map<int, std::string> orbit_to_name;
  for (const auto& st : b.strata) orbit_to_name[st.orbit_index] = st.name;
  for (const auto& st : b.strata) {
    bool ok = true;
    std::string why;
    int dim = geo.orbit_dimension(st.ranks);
    if (dim != st.declared_dim) {
      ok = false;
      why += "dim " + std::to_string(dim) + " != " + std::to_string(st.declared_dim) + "; ";
    }
    if (geo.variety().dim() > 0) {
      OrbitLabel dual = geo.dual_orbit(st.ranks, opt.seed);
      const StratumData& dual_st = b.stratum(st.dual_name);
      if (!(dual == dual_st.ranks)) {
        ok = false;
        why += "dual mismatch; ";
      }
      int ecc = dim + geo.orbit_dimension(dual) - geo.variety().dim();
      if (ecc != st.declared_ecc) {
        ok = false;
        why += "eccentricity " + std::to_string(ecc) + " != " + std::to_string(st.declared_ecc) +
               "; ";
      }
      if (ecc < 0) {
        ok = false;
        why += "negative eccentricity; ";
      }
    } else {
      if (st.declared_ecc != 0 || st.dual_name != st.name) {
        ok = false;
        why += "zero-dimensional variety must be self-dual with eccentricity 0; ";
      }
    }
    // The declared base point must realize the declared rank invariants.
    if (!(geo.label_of(st.base_x) == st.ranks)) {
      ok = false;
      why += "base point realizes the wrong rank invariants; ";
    }
    R.check(b.name + ".geometry.stratum." + st.name, ok, why);
  }
  {
    // Closure Hasse diagram: computed covers (with witnesses) vs declared.
    auto covers = geo.covers_with_witnesses(opt.seed);
    std::set<std::pair<std::string, std::string>> computed, declared;
    int unwitnessed = 0;
    for (const auto& c : covers) {
      computed.insert({orbit_to_name[c.lower], orbit_to_name[c.upper]});
      if (!c.witnessed) ++unwitnessed;
    }
    for (const auto& st : b.strata)
      for (const auto& low : st.covers) declared.insert({low, st.name});
    R.check(b.name + ".geometry.closure_hasse", computed == declared,
            std::to_string(computed.size()) + " covering relations");
    R.warn(b.name + ".geometry.closure_witnesses", unwitnessed == 0,
           unwitnessed == 0 ? "" : std::to_string(unwitnessed) + " covers lack a witness");
  }
  if (opt.with_oracle && b.instance.constraints.empty() && geo.variety().dim() > 0 &&
      geo.variety().dim() <= 9) {
    auto census = geo.fq_orbit_census(3);
    bool ok = census.size() == static_cast<size_t>(geo.num_orbits());
    for (const auto& st : b.strata) ok = ok && census.count(st.ranks.key()) == 1;
    R.check(b.name + ".geometry.fq_oracle", ok,
            "F_3 census found " + std::to_string(census.size()) + " orbits");
  }

  // ---- component groups ----------------------------------------------------
  // Per stratum: base pair certification, presented groups, projections, and
  // the engine's own seeded strongly regular pair.
  std::vector<std::vector<GroupElement>> proj_x_all(b.strata.size());
  for (size_t si = 0; si < b.strata.size(); ++si) {
    const StratumData& st = b.strata[si];
    bool ok = true;
    std::string why;
    try {
      if (!geo.is_conormal(st.base_x, st.base_xi)) {
        ok = false;
        why += "base covector is not conormal; ";
      }
      if (geo.variety().dim() > 0 &&
          geo.pair_orbit_dim(st.base_x, st.base_xi) != geo.variety().dim()) {
        ok = false;
        why += "base pair is not strongly regular; ";
      }
      if (overridden && zero_dim) {
        // Dataset-supplied pi_0(H_lambda); groups are declared, projections are
        // the identity.
        const auto& ov = *b.instance.h_component_group;
        bool same = st.a_group.orders == ov.orders && st.a_mic.orders == ov.orders;
        if (!same) {
          ok = false;
          why += "override group mismatch; ";
        }
        for (size_t k = 0; k < st.a_mic.orders.size(); ++k) {
          GroupElement e(st.a_group.orders.size(), 0);
          if (k < e.size()) e[k] = 1;
          proj_x_all[si].push_back(e);
        }
      } else {
        ComponentGroupEngine ex(geo, st.base_x, nullptr);
        FiniteAbelianGroup px =
            ex.presented_by(st.a_group.witnesses, st.a_group.orders, st.a_group.generator_names);
        ComponentGroupEngine ep(geo, st.base_x, &st.base_xi);
        FiniteAbelianGroup pm =
            ep.presented_by(st.a_mic.witnesses, st.a_mic.orders, st.a_mic.generator_names);
        // Projection to A_x: class of each microlocal generator pattern.
        std::vector<GroupElement> images;
        for (const auto& w : st.a_mic.witnesses) images.push_back(ex.element_in_presentation(px, w));
        proj_x_all[si] = images;
        if (!generate_whole(st.a_group, images)) {
          ok = false;
          why += "A_pair -> A_x not surjective; ";
        }
        // Projection to A_xi: the stabilizer of the covector alone.
        Point zero = Point::zero_of(geo.variety(), false);
        ComponentGroupEngine exi(geo, zero, &st.base_xi);
        std::set<GroupElement> span;
        std::vector<GroupElement> gens;
        for (const auto& w : st.a_mic.witnesses) gens.push_back(exi.class_of_pattern(w));
        // Surjectivity: the classes generate the computed group.
        std::vector<GroupElement> frontier = {GroupElement(exi.internal_orders().size(), 0)};
        span.insert(frontier[0]);
        while (!frontier.empty()) {
          GroupElement e = frontier.back();
          frontier.pop_back();
          for (const auto& g : gens) {
            GroupElement f2 = e;
            for (size_t t = 0; t < f2.size(); ++t)
              f2[t] = (f2[t] + g[t]) % exi.internal_orders()[t];
            if (span.insert(f2).second) frontier.push_back(f2);
          }
        }
        if (static_cast<long>(span.size()) != exi.size()) {
          ok = false;
          why += "A_pair -> A_xi not surjective; ";
        }
        // The library's own certified pair must exist for every stratum.
        geo.strongly_regular_covector(st.ranks, opt.seed);
      }
    } catch (const std::exception& e) {
      ok = false;
      why += e.what();
    }
    R.check(b.name + ".groups." + st.name, ok, why);
  }

  // ---- calculus laws --------------------------------------------------------
  {
    bool support_ok = true, twist_ok = true, diag_ok = true;
    std::string why_s, why_t, why_d;
    for (size_t s = 0; s < b.simples.size(); ++s) {
      int supp = b.simples[s].stratum;
      for (size_t c = 0; c < b.strata.size(); ++c) {
        if (b.evs[s][c].zero()) continue;
        if (!geo.closure_leq(b.strata[c].ranks, b.strata[supp].ranks)) {
          support_ok = false;
          why_s = b.simples[s].name + " has a nonzero entry off its support at " +
                  b.strata[c].name;
        }
        for (const auto& t : b.evs[s][c].terms)
          if (t.coeff < 0) {
            support_ok = false;
            why_s = b.simples[s].name + " has a negative coefficient at " + b.strata[c].name;
          }
      }
    }
    for (size_t c = 0; c < b.strata.size(); ++c) {
      try {
        b.twist_char(static_cast<int>(c));
      } catch (const std::exception& e) {
        twist_ok = false;
        why_t = e.what();
      }
    }
    for (size_t s = 0; s < b.simples.size(); ++s) {
      int c = b.simples[s].stratum;
      const StratumData& st = b.strata[c];
      if (proj_x_all[c].size() != st.a_mic.orders.size()) {
        diag_ok = false;
        why_d = "projection maps unavailable at " + st.name;
        continue;
      }
      MicroKClass n = b.nevs_entry(static_cast<int>(s), c);
      Character l = st.local_systems.at(b.simples[s].local_system);
      Character want = pullback_to_mic(st, l, proj_x_all[c]);
      bool here = n.terms.size() == 1 && n.terms[0].coeff == 1 && n.terms[0].shift == 0 &&
                  n.terms[0].chi.exps == want.exps;
      if (!here) {
        diag_ok = false;
        why_d = "NEvs diagonal law fails for " + b.simples[s].name;
      }
    }
    R.check(b.name + ".laws.support", support_ok, why_s);
    R.check(b.name + ".laws.twist_rank_one", twist_ok, why_t);
    R.check(b.name + ".laws.diagonal", diag_ok, why_d);
  }

  // ---- Fourier transform / hat ----------------------------------------------
  {
    bool invol = true, nevft = true, cusp = true;
    std::string why_i, why_n, why_c;
    for (const auto& [p, q] : b.hat_simple) {
      if (b.hat_simple.at(q) != p) {
        invol = false;
        why_i = "hat(hat(" + p + ")) != " + p;
      }
      int sp = b.find_simple(p), sq = b.find_simple(q);
      if (b.simple_cuspidal[sp] != b.simple_cuspidal[sq]) {
        cusp = false;
        why_c = p + " and its transform lie in different cuspidal blocks";
      }
    }
    // a_* pNEv_C = pEv_{C*} Ft, stated via the hat table:
    // NEvs_C(P) = Evs_{hat C}(hat P) with generators matched in order.
    for (size_t s = 0; s < b.simples.size() && nevft; ++s)
      for (size_t c = 0; c < b.strata.size() && nevft; ++c) {
        const StratumData& st = b.strata[c];
        int hc = b.stratum_index.at(st.dual_name);
        int hs = b.find_simple(b.hat_simple.at(b.simples[s].name));
        MicroKClass lhs = b.nevs_entry(static_cast<int>(s), static_cast<int>(c));
        MicroKClass rhs = b.evs_entry(hs, hc);
        if (b.strata[hc].a_mic.orders != st.a_mic.orders) {
          nevft = false;
          why_n = "microlocal groups at " + st.name + " and " + st.dual_name + " differ";
          break;
        }
        // Translate the dual-side characters through the declared generator
        // correspondence before comparing.
        for (auto& t : rhs.terms) {
          std::vector<int> mapped(t.chi.exps.size(), 0);
          for (size_t k = 0; k < t.chi.exps.size(); ++k)
            mapped[k] = t.chi.exps[st.hat_mic_gen_map[k]];
          t.chi.exps = std::move(mapped);
        }
        lhs.normalize();
        rhs.normalize();
        bool eq = lhs.terms.size() == rhs.terms.size();
        for (size_t k = 0; eq && k < lhs.terms.size(); ++k)
          eq = lhs.terms[k].chi.exps == rhs.terms[k].chi.exps &&
               lhs.terms[k].coeff == rhs.terms[k].coeff &&
               (lhs.terms[k].shift - rhs.terms[k].shift) % 2 == 0;
        if (!eq) {
          nevft = false;
          why_n = "NEvs_" + st.name + "(" + b.simples[s].name + ") != Evs_" + st.dual_name +
                  "(hat)";
        }
      }
    R.check(b.name + ".fourier.involution", invol, why_i);
    R.check(b.name + ".fourier.cuspidal_blocks", cusp, why_c);
    R.check(b.name + ".fourier.nevft", nevft, why_n);
    // Arthur sheaf Fourier law: hat(A_C) = A_{hat C}.
    bool asheaf = true;
    std::string why_a;
    for (size_t c = 0; c < b.strata.size(); ++c) {
      int hc = b.stratum_index.at(b.strata[c].dual_name);
      auto ac = arthur_sheaf(b, static_cast<int>(c)).all();
      auto ahc = arthur_sheaf(b, hc).all();
      std::map<int, long> hat_ac;
      for (auto& [s2, r2] : ac) hat_ac[b.find_simple(b.hat_simple.at(b.simples[s2].name))] += r2;
      if (hat_ac != ahc) {
        asheaf = false;
        why_a = "Ft A_" + b.strata[c].name + " != A_" + b.strata[c].dual_name;
      }
    }
    R.check(b.name + ".fourier.arthur_sheaf", asheaf, why_a);
  }

  // ---- Kazhdan-Lusztig -------------------------------------------------------
  {
    std::string mism;
    bool ok = kl_transpose_check(b, mism);
    // m'_geo must be supported on closure-comparable pairs.
    for (size_t i = 0; i < b.simples.size() && ok; ++i)
      for (size_t j2 = 0; j2 < b.simples.size(); ++j2) {
        if (b.m_geo_prime[i][j2] == 0) continue;
        if (!geo.closure_leq(b.strata[b.simples[j2].stratum].ranks,
                             b.strata[b.simples[i].stratum].ranks)) {
          ok = false;
          mism = "m'_geo entry off the closure order at (" + b.simples[i].name + ", " +
                 b.simples[j2].name + ")";
        }
      }
    R.check(b.name + ".kl.transpose", ok, mism);
  }

  // ---- Arthur comparison -----------------------------------------------------
  for (const auto& psi : b.arthur) {
    const StratumData& st = b.stratum(psi.stratum);
    int cidx = b.stratum_index.at(psi.stratum);
    // Packet equality.
    std::set<std::pair<std::string, std::string>> arthur_packet;
    for (const auto& m : psi.packet) arthur_packet.insert({m.rep, m.form});
    bool pk = arthur_packet == abv_packet(b, cidx);
    R.check(b.name + ".arthur.packet." + psi.name, pk,
            pk ? "" : "pure Arthur packet differs from the ABV-packet");
    // eta_{psi,s} = eta^{NEvs}_{psi,s} for every s.
    bool eta_ok = true;
    std::string why;
    for (const auto& s : all_elements(st.a_mic)) {
      VirtualRep lhs = eta_arthur(b, psi, s);
      VirtualRep rhs = eta_nevs(b, cidx, s);
      if (!(lhs == rhs)) {
        eta_ok = false;
        std::ostringstream os;
        os << psi.name << " at s=(";
        for (size_t k = 0; k < s.size(); ++k) os << (k ? "," : "") << s[k];
        os << "): arthur " << lhs.str() << " vs nevs " << rhs.str();
        why = os.str();
        break;
      }
    }
    R.check(b.name + ".arthur.eta." + psi.name, eta_ok, why);
    // At s = 1 the trace version must agree with the rank version.
    {
      GroupElement one(st.a_mic.orders.size(), 0);
      VirtualRep tr = eta_nevs(b, cidx, one);
      VirtualRep rk;
      for (size_t s2 = 0; s2 < b.simples.size(); ++s2) {
        long r = b.nevs_entry(static_cast<int>(s2), cidx).rank();
        if (r == 0) continue;
        long parity = (st.declared_dim - b.dim_supp(static_cast<int>(s2))) % 2;
        rk.add(b.simple_rep[s2], b.simple_form[s2],
               QI(b.kottwitz(b.simple_form[s2])) * QI(parity == 0 ? r : -r));
      }
      R.check(b.name + ".arthur.eta_identity_is_rank." + psi.name, tr == rk);
    }
  }
  for (const auto& sn : b.non_arthur_strata)
    R.info(b.name + ".arthur.no_comparand." + sn,
           "ABV-packet without an Arthur comparand (reported only)");

  // ---- Aubert / twisting -----------------------------------------------------
  {
    // P(hat pi) = hat(P(pi)) through the Vogan bijection.
    bool ok = true;
    std::string why;
    for (const auto& [from, to] : b.aubert) {
      auto bar = from.find('|');
      auto bar2 = to.find('|');
      if (bar == std::string::npos || bar2 == std::string::npos) {
        ok = false;
        why = "malformed aubert entry " + from;
        break;
      }
      int sp = b.simple_of_rep(from.substr(0, bar), from.substr(bar + 1));
      int sq = b.simple_of_rep(to.substr(0, bar2), to.substr(bar2 + 1));
      if (b.hat_simple.at(b.simples[sp].name) != b.simples[sq].name) {
        ok = false;
        why = "Aubert dual of " + from + " does not match the Fourier transform";
      }
    }
    R.check(b.name + ".aubert.matches_fourier", ok, why);
  }
  for (const auto& psi : b.arthur) {
    const StratumData& st = b.stratum(psi.stratum);
    const ArthurParam& psihat = b.arthur[b.arthur_index.at(psi.aubert_partner)];
    const StratumData& sthat = b.stratum(psihat.stratum);
    Character twist = b.twist_char(b.stratum_index.at(psi.stratum));
    bool ok = true;
    std::string why;
    if (sthat.a_mic.orders != st.a_mic.orders) {
      ok = false;
      why = "A_psi and A_psihat have different shapes";
    }
    auto hat_elem = [&](const GroupElement& s) {
      GroupElement out(s.size(), 0);
      for (size_t k = 0; k < s.size(); ++k) out[psi.hat_gen_map[k]] = s[k];
      return out;
    };
    for (const auto& m : psi.packet) {
      if (!ok) break;
      auto it = b.aubert.find(m.rep + "|" + m.form);
      if (it == b.aubert.end()) {
        ok = false;
        why = "no Aubert image for " + m.rep;
        break;
      }
      auto bar = it->second.find('|');
      std::string hrep = it->second.substr(0, bar), hform = it->second.substr(bar + 1);
      const ArthurParam::Member* hm = nullptr;
      for (const auto& cand : psihat.packet)
        if (cand.rep == hrep && cand.form == hform) hm = &cand;
      if (!hm) {
        ok = false;
        why = "Aubert image of " + m.rep + " missing from the partner packet";
        break;
      }
      for (const auto& s : all_elements(st.a_mic)) {
        QI lhs = hm->pairing.value_at(sthat.a_mic, hat_elem(s));
        QI rhs = twist.value_at(st.a_mic, s) * m.pairing.value_at(st.a_mic, s);
        if (lhs != rhs) {
          ok = false;
          why = "twisting character mismatch at " + m.rep;
          break;
        }
      }
    }
    R.check(b.name + ".twisting." + psi.name, ok, why);
  }

  // ---- pairing consistency ---------------------------------------------------
  {
    bool ok = true;
    for (size_t c = 0; c < b.strata.size() && ok; ++c) {
      GroupElement one(b.strata[c].a_mic.orders.size(), 0);
      VirtualRep eta = eta_nevs(b, static_cast<int>(c), one);
      for (size_t s = 0; s < b.simples.size() && ok; ++s) {
        // <eta_C, P> = (-1)^{dim C} rank Evs_C(P).
        QI coeff;
        auto it = eta.coeff.find({b.simple_rep[s], b.simple_form[s]});
        if (it != eta.coeff.end()) coeff = it->second;
        long suppdim = b.dim_supp(static_cast<int>(s));
        QI pairing = coeff * QI(b.kottwitz(b.simple_form[s])) * QI(suppdim % 2 == 0 ? 1 : -1);
        long want = b.evs[s][c].rank();
        QI target = QI(b.strata[c].declared_dim % 2 == 0 ? want : -want);
        ok = pairing == target;
      }
    }
    R.check(b.name + ".pairing.consistency", ok);
  }

  // ---- endoscopy -------------------------------------------------------------
  for (const auto& em : b.endoscopy) {
    std::vector<std::string> problems;
    EmbeddingContext ctx = embed_strata(b, em, set, problems);
    R.check(b.name + ".endoscopy.embed." + em.name, problems.empty(),
            problems.empty() ? "" : problems.front());
    for (const auto& [simple, terms] : em.restriction) {
      (void)terms;
      bool ok = true;
      std::string why;
      try {
        for (const auto& row : trace_identity_check(ctx, simple)) {
          if (!row.match) {
            ok = false;
            why = "LHS " + row.lhs.str() + " != RHS " + row.rhs.str() + " at " + row.stratum_desc;
            break;
          }
        }
      } catch (const std::exception& e) {
        ok = false;
        why = e.what();
      }
      R.check(b.name + ".endoscopy.trace." + em.name + "." + simple, ok, why);
    }
  }

  return R.out;
}

}  // namespace voganish
