#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "voganish/instance.hpp"

namespace voganish {

// Rank invariants of the unfolded chain: r[i][j] = rank(M_i ... M_j) for the
// unfolded matrix list (chain maps, end factor, mirrored transposes). Orbits
// are exactly these arrays for the instances in scope.
struct OrbitLabel {
  std::vector<std::vector<int>> r;  // r[i][j - i] for j >= i
  std::string canonical_name;       // bundle-supplied display name when known

  bool operator==(const OrbitLabel& o) const { return r == o.r; }
  bool operator<(const OrbitLabel& o) const { return r < o.r; }
  std::string key() const;
};

struct Orbit {
  OrbitLabel label;
  Point representative;
  int dim = -1;
  int index = -1;  // position in the enumerated list, sorted by (dim, key)
};

class Geometry {
 public:
  explicit Geometry(GroupInstance spec);

  const Variety& variety() const { return v_; }
  const std::vector<Orbit>& orbits() const { return orbits_; }
  const Orbit& orbit(int idx) const { return orbits_.at(idx); }
  int num_orbits() const { return static_cast<int>(orbits_.size()); }

  // --- point algebra -------------------------------------------------------
  OrbitLabel label_of(const Point& x) const;
  OrbitLabel label_of_dual(const Point& xi) const;  // label of the transposed point in V
  // Derivative of the H-action: rows indexed by V-coordinates, columns by a
  // basis of Lie(H) respecting the constraints (traceless along constrained
  // characters is not needed for orbit dims: constraints cut finite covers).
  Mat action_matrix(const Point& x) const;
  Mat dual_action_matrix(const Point& xi) const;
  std::vector<QI> flatten(const Point& x, bool dual) const;
  Point unflatten(const std::vector<QI>& coords, bool dual) const;
  // <x, xi> = sum tr(u_i u'_i) + tr(X X').
  QI pairing(const Point& x, const Point& xi) const;
  // h . x for block-diagonal h (one invertible matrix per block).
  Point act(const std::vector<Mat>& h, const Point& x, bool dual) const;

  // --- orbit operations ----------------------------------------------------
  int orbit_index(const OrbitLabel& l) const;
  Point representative(const OrbitLabel& l) const;
  int orbit_dimension(const OrbitLabel& l) const;
  bool closure_leq(const OrbitLabel& a, const OrbitLabel& b) const;
  // Covering pairs of the closure order with a degeneration-witness flag.
  struct Cover {
    int lower, upper;
    bool witnessed;
  };
  std::vector<Cover> covers_with_witnesses(uint64_t seed) const;

  int open_orbit() const { return open_idx_; }
  int zero_orbit() const { return zero_idx_; }

  // --- conormal geometry ---------------------------------------------------
  // Exact basis of { xi in V* : xi  annihilates T_x(Hx) } (= [x,xi] = 0).
  std::vector<Point> conormal_fiber(const Point& x) const;
  bool is_conormal(const Point& x, const Point& xi) const;
  // Action of the diagonal torsion element diag(i^{a_t}).
  Point act_pattern(const std::vector<long>& a, const Point& p, bool dual) const;
  int pair_orbit_dim(const Point& x, const Point& xi) const;
  // Seeded certified generic covector; throws after the retry budget.
  Point strongly_regular_covector(const OrbitLabel& l, uint64_t seed, int budget = 64) const;
  // Label (in V, via transposition) of the Pyasetskii dual orbit.
  OrbitLabel dual_orbit(const OrbitLabel& l, uint64_t seed) const;
  int eccentricity(const OrbitLabel& l, uint64_t seed) const;

  // --- finite-field oracle -------------------------------------------------
  // Exhaustive H(F_q)-orbit census of V(F_q): list of (rank-array key, orbit size).
  std::map<std::string, long> fq_orbit_census(int q) const;
  long fq_point_count(const OrbitLabel& l, int q) const;

 private:
  void enumerate();
  std::vector<Mat> unfold(const Point& x) const;
  Mat restrict_h_columns(const Mat& out) const;

  Variety v_;
  std::vector<Orbit> orbits_;
  std::map<std::string, int> index_;
  int open_idx_ = -1, zero_idx_ = -1;
};

// Deterministic splitmix64; the only randomness source in the library.
struct Rng {
  uint64_t s;
  explicit Rng(uint64_t seed) : s(seed) {}
  uint64_t next() {
    s += 0x9e3779b97f4a7c15ULL;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  long range(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
};

}  // namespace voganish
