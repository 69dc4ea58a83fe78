#include "voganish/endoscopy.hpp"

#include <sstream>

namespace voganish {

namespace {

std::string join_names(const std::vector<std::string>& v) {
  std::string s;
  for (size_t k = 0; k < v.size(); ++k) s += (k ? "x" : "") + v[k];
  return s;
}

}  // namespace

EmbeddingContext embed_strata(const ExampleBundle& ambient, const EndoscopicEmbedding& decl,
                              const BundleSet& set, std::vector<std::string>& problems) {
  EmbeddingContext ctx;
  ctx.ambient = &ambient;
  ctx.decl = &decl;
  for (const auto& f : decl.factor_bundles) ctx.factors.push_back(&set.get(f));

  const Geometry& geo = *ambient.geom;
  auto embed_point = [&](const std::vector<std::vector<QI>>& factor_flats, bool dual) {
    std::vector<QI> amb(geo.variety().dim(), QI());
    for (size_t f = 0; f < factor_flats.size(); ++f)
      for (size_t k = 0; k < factor_flats[f].size(); ++k) {
        if (k >= decl.coord_map[f].size()) {
          problems.push_back(decl.name + ": coord_map for factor " + std::to_string(f) +
                             " shorter than the factor variety");
          continue;
        }
        auto [idx, scale] = decl.coord_map[f][k];
        amb[idx] += scale * factor_flats[f][k];
      }
    return geo.unflatten(amb, dual);
  };

  for (const auto& es_decl : decl.strata) {
    EmbeddedStratum es;
    es.decl = &es_decl;
    if (es_decl.factor_orbits.size() != ctx.factors.size()) {
      problems.push_back(decl.name + ": factor orbit count mismatch");
      continue;
    }
    std::vector<std::vector<QI>> xs, xis;
    for (size_t f = 0; f < ctx.factors.size(); ++f) {
      const StratumData& fst = ctx.factors[f]->stratum(es_decl.factor_orbits[f]);
      es.factor_strata.push_back(ctx.factors[f]->stratum_index.at(fst.name));
      xs.push_back(ctx.factors[f]->geom->flatten(fst.base_x, false));
      xis.push_back(ctx.factors[f]->geom->flatten(fst.base_xi, true));
    }
    es.x_emb = embed_point(xs, false);
    es.xi_emb = embed_point(xis, true);
    es.ambient_stratum = ambient.stratum_index.at(es_decl.ambient);
    const StratumData& amb_st = ambient.strata[es.ambient_stratum];

    // Declared ambient stratum must match the rank invariants of the embedded
    // base point.
    if (!(geo.label_of(es.x_emb) == amb_st.ranks))
      problems.push_back(decl.name + "/" + join_names(es_decl.factor_orbits) +
                         ": embedded point lies in orbit [" + geo.label_of(es.x_emb).key() +
                         "], not in " + es_decl.ambient);
    if (!geo.is_conormal(es.x_emb, es.xi_emb))
      problems.push_back(decl.name + "/" + join_names(es_decl.factor_orbits) +
                         ": embedded pair is not conormal");
    // Lift detection by the rank invariants of the embedded covector: the pair
    // is regular iff the covector lies in the dual orbit of C.
    OrbitLabel dual_of_amb = ambient.stratum(amb_st.dual_name).ranks;
    es.lifts_computed = geo.label_of_dual(es.xi_emb) == dual_of_amb;
    if (es.lifts_computed != es_decl.lifts)
      problems.push_back(decl.name + "/" + join_names(es_decl.factor_orbits) +
                         ": declared lifts=" + (es_decl.lifts ? "true" : "false") +
                         " but the embedded covector says otherwise");

    if (!decl.s_pattern.empty()) {
      // s must fix the embedded pair exactly.
      if (!(geo.act_pattern(decl.s_pattern, es.x_emb, false) == es.x_emb) ||
          !(geo.act_pattern(decl.s_pattern, es.xi_emb, true) == es.xi_emb))
        problems.push_back(decl.name + "/" + join_names(es_decl.factor_orbits) +
                           ": s does not stabilize the embedded pair");
    }
    if (es_decl.lifts && !decl.s_pattern.empty()) {
      // Validate the declared ambient class of s whenever the embedded pair is
      // (a transport of) the ambient base pair; otherwise the trace identity
      // itself is the validating check.
      Point tx = es.x_emb, txi = es.xi_emb;
      std::vector<long> pattern = decl.s_pattern;
      if (!es_decl.transport.empty()) {
        tx = geo.act(es_decl.transport, es.x_emb, false);
        txi = geo.act(es_decl.transport, es.xi_emb, true);
        // h s h^{-1} must again be a diagonal pattern; conjugate and read off.
        std::vector<Mat> smats;
        for (int b = 0; b < geo.variety().spec().blocks(); ++b) {
          int d = geo.variety().spec().dims[b];
          Mat m(d, d);
          for (int j = 0; j < d; ++j)
            m.at(j, j) = QI::i_pow(decl.s_pattern[geo.variety().torus_index(b, j)]);
          smats.push_back(std::move(m));
        }
        bool diag_ok = true;
        std::vector<long> conj_pattern(geo.variety().torus_rank(), 0);
        for (int b = 0; b < geo.variety().spec().blocks(); ++b) {
          Mat conj = es_decl.transport[b] * smats[b] * es_decl.transport[b].inverse();
          int d = conj.rows();
          for (int rr = 0; rr < d; ++rr)
            for (int cc = 0; cc < d; ++cc)
              if (rr != cc && !conj.at(rr, cc).is_zero()) diag_ok = false;
          for (int j = 0; j < d && diag_ok; ++j) {
            QI v = conj.at(j, j);
            long e = -1;
            for (long k = 0; k < 4; ++k)
              if (v == QI::i_pow(k)) e = k;
            if (e < 0) diag_ok = false;
            else conj_pattern[geo.variety().torus_index(b, j)] = e;
          }
        }
        if (!diag_ok) {
          problems.push_back(decl.name + "/" + join_names(es_decl.factor_orbits) +
                             ": transported s is not a torsion diagonal");
        } else {
          pattern = conj_pattern;
        }
      }
      if (tx == amb_st.base_x && txi == amb_st.base_xi) {
        ComponentGroupEngine eng(geo, amb_st.base_x, &amb_st.base_xi);
        FiniteAbelianGroup pres = eng.presented_by(amb_st.a_mic.witnesses, amb_st.a_mic.orders,
                                                   amb_st.a_mic.generator_names);
        GroupElement cls = eng.element_in_presentation(pres, pattern);
        if (cls != es_decl.a_s_ambient)
          problems.push_back(decl.name + "/" + join_names(es_decl.factor_orbits) +
                             ": declared ambient class of s disagrees with the computed class");
      }
    }
    ctx.strata.push_back(std::move(es));
  }
  return ctx;
}

FiniteAbelianGroup product_group(const EmbeddingContext& ctx, const EmbeddedStratum& es) {
  FiniteAbelianGroup g;
  for (size_t f = 0; f < ctx.factors.size(); ++f) {
    const auto& fg = ctx.factors[f]->strata[es.factor_strata[f]].a_mic;
    for (size_t k = 0; k < fg.orders.size(); ++k) {
      g.orders.push_back(fg.orders[k]);
      g.generator_names.push_back(ctx.decl->factor_bundles[f] + "." + fg.generator_names[k]);
      g.witnesses.push_back({});
    }
  }
  return g;
}

MicroKClass product_nevs(const EmbeddingContext& ctx, const EmbeddedStratum& es,
                         const std::vector<int>& factor_simples) {
  // Thom-Sebastiani: tensor the factor NEvs entries over the product group.
  MicroKClass acc;
  acc.terms.push_back({Character{{}}, 0, 1});
  for (size_t f = 0; f < ctx.factors.size(); ++f)
    acc = tensor_micro(acc, ctx.factors[f]->nevs_entry(factor_simples[f], es.factor_strata[f]));
  return acc;
}

std::vector<TraceRow> trace_identity_check(const EmbeddingContext& ctx,
                                           const std::string& ambient_simple) {
  const ExampleBundle& amb = *ctx.ambient;
  auto rit = ctx.decl->restriction.find(ambient_simple);
  if (rit == ctx.decl->restriction.end())
    throw std::runtime_error(ctx.decl->name + ": simple " + ambient_simple +
                             " missing from the restriction table");
  int ps = amb.find_simple(ambient_simple);

  std::vector<TraceRow> rows;
  for (const auto& es : ctx.strata) {
    if (!es.decl->lifts) continue;
    TraceRow row;
    row.stratum_desc = join_names(es.decl->factor_orbits);
    row.lifts = true;

    FiniteAbelianGroup pg = product_group(ctx, es);
    GroupElement a_s;
    for (const auto& part : es.decl->a_s_factors)
      for (int e : part) a_s.push_back(e);

    long dim_cprime = 0;
    for (size_t f = 0; f < ctx.factors.size(); ++f)
      dim_cprime += ctx.factors[f]->strata[es.factor_strata[f]].declared_dim;

    QI lhs;
    for (const auto& term : rit->second) {
      std::vector<int> fsimples;
      for (size_t f = 0; f < ctx.factors.size(); ++f)
        fsimples.push_back(ctx.factors[f]->find_simple(term.factor_simples[f]));
      MicroKClass cls = product_nevs(ctx, es, fsimples);
      QI tr = cls.trace(pg, a_s);
      lhs += tr * QI(term.shift % 2 == 0 ? 1 : -1);
    }
    lhs *= QI(dim_cprime % 2 == 0 ? 1 : -1);
    row.lhs = lhs;

    const StratumData& amb_st = amb.strata[es.ambient_stratum];
    MicroKClass acls = amb.nevs_entry(ps, es.ambient_stratum);
    QI rhs = acls.trace(amb_st.a_mic, es.decl->a_s_ambient);
    rhs *= QI(amb_st.declared_dim % 2 == 0 ? 1 : -1);
    row.rhs = rhs;
    row.match = row.lhs == row.rhs;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace voganish
