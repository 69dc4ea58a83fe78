#pragma once

#include "voganish/packets.hpp"

namespace voganish {

// Resolved per-stratum embedding data for one endoscopic datum.
struct EmbeddedStratum {
  const EndoscopicStratum* decl = nullptr;
  std::vector<int> factor_strata;  // stratum index within each factor bundle
  int ambient_stratum = -1;
  Point x_emb, xi_emb;  // ambient coordinates of the product base pair
  bool lifts_computed = false;
};

struct EmbeddingContext {
  const ExampleBundle* ambient = nullptr;
  const EndoscopicEmbedding* decl = nullptr;
  std::vector<const ExampleBundle*> factors;
  std::vector<EmbeddedStratum> strata;
};

// Builds the stratum map C' -> C with lift flags and validates every declared
// fact against the geometry (labels, conormality, regularity via the rank
// invariants of the embedded covector, s-stabilization, transports).
EmbeddingContext embed_strata(const ExampleBundle& ambient, const EndoscopicEmbedding& decl,
                              const BundleSet& set, std::vector<std::string>& problems);

// Product (Thom-Sebastiani) group and NEvs entry at a product stratum.
FiniteAbelianGroup product_group(const EmbeddingContext& ctx, const EmbeddedStratum& es);
MicroKClass product_nevs(const EmbeddingContext& ctx, const EmbeddedStratum& es,
                         const std::vector<int>& factor_simples);

struct TraceRow {
  std::string stratum_desc;
  bool lifts = false;
  QI lhs, rhs;
  bool match = true;
};

// Both sides of the endoscopic trace identity for one ambient simple,
// evaluated on every lifting stratum.
std::vector<TraceRow> trace_identity_check(const EmbeddingContext& ctx,
                                           const std::string& ambient_simple);

}  // namespace voganish
