#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "voganish/matrix.hpp"

namespace voganish {

enum class Family { GL, Sp, EvenO, OddODual };
enum class EndFactor { None, Sym2, Alt2 };

// A multiplicative condition cutting H out of the full block torus/group:
// the character prod_i det(h_i)^{exps[i]} has the given finite order on H
// (order 1 means the character is identically 1 on H).
struct TorusConstraint {
  std::vector<long> exps;  // one exponent per block
  long order = 1;
};

struct PureForm {
  std::string label;
  int kottwitz_sign = 1;
};

// A split classical dual-group datum in folded quiver coordinates:
// eigenspaces E_1..E_l with dims d_1..d_l, chain maps u_i : E_{i+1} -> E_i,
// and for self-dual families an end factor X on E_l (symmetric or alternating).
// H = prod GL(d_i), possibly cut down by torus constraints (ramified cases).
struct GroupInstance {
  std::string name;
  Family family = Family::GL;
  std::vector<int> dims;  // folded dims d_1..d_l, all positive
  EndFactor end = EndFactor::None;
  int defining_rank = 0;  // rank of the defining representation (consistency check)
  std::vector<TorusConstraint> constraints;
  std::vector<PureForm> pure_forms;
  // Present when lambda is ramified and the dataset supplies pi_0(H_lambda)
  // directly (V = 0 instances); generator orders with display names.
  struct ComponentOverride {
    std::vector<int> orders;
    std::vector<std::string> generator_names;
  };
  std::optional<ComponentOverride> h_component_group;

  int blocks() const { return static_cast<int>(dims.size()); }
  bool self_dual() const { return end != EndFactor::None; }

  void validate() const {
    if (dims.empty()) throw std::runtime_error(name + ": instance needs at least one eigenspace");
    for (int d : dims)
      if (d <= 0) throw std::runtime_error(name + ": graded dims must be positive");
    if (family == Family::GL && end != EndFactor::None)
      throw std::runtime_error(name + ": GL family admits no symmetric end factor");
    int unfolded = std::accumulate(dims.begin(), dims.end(), 0);
    if (self_dual()) unfolded *= 2;
    if (defining_rank != 0 && unfolded != defining_rank)
      throw std::runtime_error(name + ": graded dims sum " + std::to_string(unfolded) +
                               " differs from defining rank " + std::to_string(defining_rank));
    for (const auto& c : constraints)
      if (static_cast<int>(c.exps.size()) != blocks())
        throw std::runtime_error(name + ": constraint exponent count mismatch");
  }
};

// Fixed coordinate layout for V: chain factors then the optional end factor.
// Coordinates are matrix entries listed row-major factor by factor; the same
// layout indexes V* (with dual factor shapes).
class Variety {
 public:
  explicit Variety(GroupInstance spec) : spec_(std::move(spec)) {
    spec_.validate();
    const auto& d = spec_.dims;
    int l = spec_.blocks();
    for (int i = 0; i + 1 < l; ++i) factor_shape_.emplace_back(d[i], d[i + 1]);
    if (spec_.self_dual()) factor_shape_.emplace_back(d[l - 1], d[l - 1]);
    dim_v_ = 0;
    for (int f = 0; f < num_factors(); ++f) {
      offsets_.push_back(dim_v_);
      dim_v_ += factor_dim(f);
    }
    torus_rank_ = std::accumulate(d.begin(), d.end(), 0);
    h_dim_ = 0;
    for (int di : d) h_dim_ += di * di;
  }

  const GroupInstance& spec() const { return spec_; }
  int dim() const { return dim_v_; }
  int h_dim() const { return h_dim_; }
  int torus_rank() const { return torus_rank_; }
  int num_factors() const { return static_cast<int>(factor_shape_.size()); }
  bool factor_is_end(int f) const { return spec_.self_dual() && f == num_factors() - 1; }
  std::pair<int, int> factor_shape(int f) const { return factor_shape_[f]; }

  // Independent coordinates of one factor: full matrix for chain factors, the
  // (skew-)triangle for the end factor.
  int factor_dim(int f) const {
    auto [r, c] = factor_shape_[f];
    if (!factor_is_end(f)) return r * c;
    return spec_.end == EndFactor::Sym2 ? r * (r + 1) / 2 : r * (r - 1) / 2;
  }

  // Torus coordinate index of basis vector j of block b.
  int torus_index(int b, int j) const {
    int idx = 0;
    for (int k = 0; k < b; ++k) idx += spec_.dims[k];
    return idx + j;
  }

  // Block of a torus coordinate.
  int torus_block(int t) const {
    for (int b = 0, acc = 0; b < spec_.blocks(); ++b) {
      acc += spec_.dims[b];
      if (t < acc) return b;
    }
    throw std::logic_error("torus index out of range");
  }

 private:
  GroupInstance spec_;
  std::vector<std::pair<int, int>> factor_shape_;
  std::vector<int> offsets_;
  int dim_v_ = 0, h_dim_ = 0, torus_rank_ = 0;
};

// A point of V (or of V*): one matrix per factor. Chain factor i of a V-point
// is d_i x d_{i+1}; of a V*-point it is d_{i+1} x d_i. The end factor matrix is
// square and (skew-)symmetric on both sides.
struct Point {
  std::vector<Mat> m;

  static Point zero_of(const Variety& v, bool dual) {
    Point p;
    for (int f = 0; f < v.num_factors(); ++f) {
      auto [r, c] = v.factor_shape(f);
      if (dual && !v.factor_is_end(f)) std::swap(r, c);
      p.m.emplace_back(r, c);
    }
    return p;
  }

  bool is_zero() const {
    for (const auto& x : m)
      if (!x.is_zero()) return false;
    return true;
  }

  bool operator==(const Point& o) const { return m == o.m; }
};

}  // namespace voganish
