#pragma once

#include <memory>

#include "voganish/evtable.hpp"

namespace voganish {

struct StratumData {
  std::string name;
  OrbitLabel ranks;
  int declared_dim = -1;
  std::string dual_name;  // hat orbit (the dual orbit transposed back to V)
  int declared_ecc = -1;
  std::vector<std::string> covers;  // strata covered by this one in the closure order
  Point base_x, base_xi;
  FiniteAbelianGroup a_group, a_mic;
  std::map<std::string, Character> local_systems;  // A_C characters by name
  std::map<std::string, Character> mic_systems;    // A^mic_C characters by name
  // Generator correspondence A^mic_{hat C} -> A^mic_C used by the
  // Fourier-vanishing-cycles comparison (identity unless the transpose
  // conjugation permutes the named generators).
  std::vector<int> hat_mic_gen_map;
  int orbit_index = -1;
};

struct ArthurParam {
  std::string name;
  std::string stratum;
  GroupElement s_psi;
  struct Member {
    std::string rep, form;
    Character pairing;  // <.,pi>_psi as a character of A_psi
  };
  std::vector<Member> packet;
  std::string aubert_partner;
  std::vector<int> hat_gen_map;  // generator i of A_psi -> generator of A_psihat
};

struct EndoscopicStratum {
  std::vector<std::string> factor_orbits;
  std::string ambient;
  bool lifts = false;
  GroupElement a_s_ambient;
  std::vector<GroupElement> a_s_factors;
  std::vector<Mat> transport;  // optional h with h.(embedded pair) = base pair
};

struct RestrictionTerm {
  std::vector<std::string> factor_simples;
  int shift = 0;
};

struct EndoscopicEmbedding {
  std::string name;
  std::string s_note;
  std::vector<long> s_pattern;  // ambient torus exponents of s (empty on V = 0)
  std::vector<std::string> factor_bundles;
  // Per factor: flat factor V-coordinate -> (flat ambient V-coordinate, scale).
  std::vector<std::vector<std::pair<int, QI>>> coord_map;
  std::vector<EndoscopicStratum> strata;
  std::map<std::string, std::vector<RestrictionTerm>> restriction;
};

struct ExampleBundle {
  std::string name, display_name, description;
  int schema_version = 0;
  GroupInstance instance;
  std::shared_ptr<Geometry> geom;
  std::vector<StratumData> strata;
  std::map<std::string, int> stratum_index;
  std::vector<SimpleSheaf> simples;
  std::vector<std::string> simple_rep, simple_form, simple_cuspidal;
  std::map<std::string, int> simple_index;
  std::vector<std::vector<MicroKClass>> evs;  // [simple][stratum]
  std::map<std::string, std::string> hat_simple;
  std::vector<std::vector<long>> m_rep, m_geo_prime;
  std::vector<ArthurParam> arthur;
  std::map<std::string, int> arthur_index;
  std::map<std::string, std::string> aubert;  // "rep|form" -> "rep|form"
  std::vector<std::string> non_arthur_strata;
  std::vector<EndoscopicEmbedding> endoscopy;

  const StratumData& stratum(const std::string& n) const;
  const StratumData& stratum(int idx) const { return strata.at(idx); }
  int num_strata() const { return static_cast<int>(strata.size()); }
  int kottwitz(const std::string& form) const;
  int find_simple(const std::string& n) const;
  // Name of the simple attached to a representation (rep, form).
  int simple_of_rep(const std::string& rep, const std::string& form) const;

  Character twist_char(int stratum_idx) const;  // T_C = Evs_C(IC(1_C))
  MicroKClass evs_entry(int simple, int stratum_idx) const { return evs[simple][stratum_idx]; }
  MicroKClass nevs_entry(int simple, int stratum_idx) const;
  long dim_supp(int simple) const;
  // Pullback of the A_C character of a simple supported on C to A^mic_C along
  // the bundle-map projection (needs computed projections; see verify).
};

struct BundleSet {
  std::map<std::string, ExampleBundle> by_name;
  std::string main_name;  // the bundle named by the loaded file
  const ExampleBundle& get(const std::string& n) const;
  const ExampleBundle& main() const { return get(main_name); }
};

ExampleBundle load_bundle(const std::string& path);
// Serializes a bundle back to the schema; load(emit(load(f))) reproduces the
// same in-memory bundle (round-trip stability).
std::string emit_bundle(const ExampleBundle& b);
// Loads an endoscopic factor bundle by name, looking in the directory of the
// ambient bundle file (and the built-in data directory).
BundleSet load_with_factors(const std::string& path);

std::string default_data_dir();

}  // namespace voganish
