#pragma once

#include <set>

#include "voganish/bundle.hpp"

namespace voganish {

// Integer (or Gaussian-integer) combination of representations of pure forms.
struct VirtualRep {
  std::map<std::pair<std::string, std::string>, QI> coeff;

  void add(const std::string& rep, const std::string& form, const QI& c) {
    auto key = std::make_pair(rep, form);
    coeff[key] += c;
    if (coeff[key].is_zero()) coeff.erase(key);
  }
  bool operator==(const VirtualRep& o) const { return coeff == o.coeff; }
  std::string str() const;
};

std::set<std::pair<std::string, std::string>> abv_packet(const ExampleBundle& b, int stratum);

// Arthur sheaf A_C: simple -> rank Evs_C, split into packet part (supported on
// C) and coronal part.
struct ArthurSheaf {
  std::map<int, long> packet, coronal;
  std::map<int, long> all() const {
    auto m = packet;
    for (auto& [k, v] : coronal) m[k] += v;
    return m;
  }
};
ArthurSheaf arthur_sheaf(const ExampleBundle& b, int stratum);

// eta^{NEvs}_{C,s}: the geometric virtual representation.
VirtualRep eta_nevs(const ExampleBundle& b, int stratum, const GroupElement& a_s);
// eta_{psi,s} from the Arthur dataset: sum e(delta) <s s_psi, pi> [(pi,delta)].
VirtualRep eta_arthur(const ExampleBundle& b, const ArthurParam& psi, const GroupElement& s);

// All elements of a finite abelian group.
std::vector<GroupElement> all_elements(const FiniteAbelianGroup& g);
GroupElement mul_elements(const FiniteAbelianGroup& g, const GroupElement& a,
                          const GroupElement& b);

bool kl_transpose_check(const ExampleBundle& b, std::string& first_mismatch);

}  // namespace voganish
