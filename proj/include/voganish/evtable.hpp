#pragma once

#include <map>
#include <string>
#include <vector>

#include "voganish/agroup.hpp"

namespace voganish {

// A simple equivariant perverse sheaf IC(C, L): stratum index plus the index
// of L among the named characters of A_C.
struct SimpleSheaf {
  int stratum = -1;
  std::string local_system;
  std::string name;
};

// One term of a micro K-class at a fixed stratum: a character of A^mic_C with
// an integer shift; traces weight a term by coeff * (-1)^shift.
struct MicroTerm {
  Character chi;
  int shift = 0;
  long coeff = 1;
};

struct MicroKClass {
  std::vector<MicroTerm> terms;

  bool zero() const { return terms.empty(); }
  long rank() const {
    long r = 0;
    for (const auto& t : terms) r += t.coeff;
    return r;
  }
  QI trace(const FiniteAbelianGroup& g, const GroupElement& a) const {
    QI s;
    for (const auto& t : terms) {
      QI v = t.chi.value_at(g, a);
      long signed_coeff = (t.shift % 2 == 0) ? t.coeff : -t.coeff;
      s += v * QI(signed_coeff);
    }
    return s;
  }
  // Multiplies every term's character by chi (used for twist normalization).
  MicroKClass twisted_by(const FiniteAbelianGroup& g, const Character& chi) const {
    MicroKClass out = *this;
    for (auto& t : out.terms)
      for (size_t k = 0; k < t.chi.exps.size(); ++k)
        t.chi.exps[k] = (t.chi.exps[k] + chi.exps[k]) % g.orders[k];
    return out;
  }
  void normalize() {
    std::map<std::pair<std::vector<int>, int>, long> acc;
    for (const auto& t : terms) acc[{t.chi.exps, t.shift}] += t.coeff;
    terms.clear();
    for (auto& [key, c] : acc)
      if (c != 0) terms.push_back({Character{key.first}, key.second, c});
  }
};

// Integer-coefficient formal sum of simples with shifts.
struct KClass {
  // (simple index, shift) -> coefficient
  std::map<std::pair<int, int>, long> terms;

  void add(int simple, int shift, long coeff) {
    auto key = std::make_pair(simple, shift);
    terms[key] += coeff;
    if (terms[key] == 0) terms.erase(key);
  }
};

// The atomic vanishing-cycles rules on local-system descriptors. A descriptor
// is a rank-one system with a quadratic-monodromy flag and an integer shift;
// outputs live on the zero locus / unit line / skyscraper per rule.
enum class RPhiForm { Zero, Smooth, Square, SquareUnit, QuadSum, XY };

struct LocalSystemDescriptor {
  long rank = 1;
  bool quadratic_monodromy = false;  // monodromy character is the quadratic one
  bool quadratic_system = false;     // the system itself is a quadratic-character system
  int shift = 0;
  bool zero = false;

  static LocalSystemDescriptor zero_class() {
    LocalSystemDescriptor d;
    d.zero = true;
    d.rank = 0;
    return d;
  }
};

LocalSystemDescriptor atomic_rphi(RPhiForm form, const LocalSystemDescriptor& input, int e = 0);

// External tensor product of micro K-classes over the concatenated group
// (the Thom-Sebastiani rule at the level of table entries).
inline MicroKClass tensor_micro(const MicroKClass& a, const MicroKClass& b) {
  MicroKClass out;
  for (const auto& x : a.terms)
    for (const auto& y : b.terms) {
      MicroTerm t;
      t.chi.exps = x.chi.exps;
      for (int ee : y.chi.exps) t.chi.exps.push_back(ee);
      t.shift = x.shift + y.shift;
      t.coeff = x.coeff * y.coeff;
      out.terms.push_back(std::move(t));
    }
  out.normalize();
  return out;
}

}  // namespace voganish
