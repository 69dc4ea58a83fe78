#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "voganish/geometry.hpp"

namespace voganish {

// Finite abelian group presented by named generators with orders in {2, 4}.
// Elements and characters are exponent tuples with respect to the generators.
struct FiniteAbelianGroup {
  std::vector<int> orders;
  std::vector<std::string> generator_names;
  // Exponent pattern per generator: the diagonal torus element diag(i^{a_t})
  // realizing it (empty for dataset-override groups on zero-dimensional V).
  std::vector<std::vector<long>> witnesses;

  int num_generators() const { return static_cast<int>(orders.size()); }
  long size() const {
    long s = 1;
    for (int o : orders) s *= o;
    return s;
  }
  bool trivial() const { return orders.empty(); }
};

using GroupElement = std::vector<int>;  // exponents mod orders

struct Character {
  std::vector<int> exps;  // functional exponents mod orders
  QI value_at(const FiniteAbelianGroup& g, const GroupElement& e) const {
    long num = 0;  // total exponent of the primitive 4th root
    for (size_t k = 0; k < exps.size(); ++k) {
      long unit = 4 / g.orders[k];
      num += unit * static_cast<long>(exps[k]) * e[k];
    }
    return QI::i_pow(num);
  }
};

// pi_0 of the stabilizer of x (and optionally xi) computed by mu_4-torsion
// capture in the diagonal torus with certified connectivity. Supported for
// the catalog (GL chains, the six example families); anything that fails a
// certificate throws "unsupported".
class ComponentGroupEngine {
 public:
  ComponentGroupEngine(const Geometry& g, const Point& x, const Point* xi);

  // Classes of diagonal patterns; throws when the pattern does not stabilize.
  GroupElement class_of_pattern(const std::vector<long>& a) const;
  bool pattern_stabilizes(const std::vector<long>& a) const;

  // The computed group in an internal basis.
  const std::vector<int>& internal_orders() const { return internal_orders_; }
  const std::vector<std::vector<long>>& internal_witnesses() const { return internal_witnesses_; }
  long size() const {
    long s = 1;
    for (int o : internal_orders_) s *= o;
    return s;
  }

  // Validates that the named generators (patterns + orders) present the same
  // group and returns the presentation with class lookup wired to it.
  FiniteAbelianGroup presented_by(const std::vector<std::vector<long>>& patterns,
                                  const std::vector<int>& orders,
                                  const std::vector<std::string>& names) const;
  // Element of a presented group corresponding to a diagonal pattern.
  GroupElement element_in_presentation(const FiniteAbelianGroup& pres,
                                       const std::vector<long>& pattern) const;

 private:
  std::vector<int> reduce(const std::vector<long>& a) const;  // coords in internal basis

  const Geometry& geo_;
  int m_;                                   // torus rank
  std::vector<std::vector<long>> weights_;  // active coordinate weights
  std::vector<std::vector<long>> gprime_;   // internal basis rows (m of them)
  std::vector<long> dvals_;                 // elementary divisors per basis row
  std::vector<int> internal_orders_;        // divisors > 1
  std::vector<int> internal_pos_;           // positions of nontrivial divisors
  std::vector<std::vector<long>> internal_witnesses_;
  Mat gprime_inv_num_;  // inverse transpose data for coordinate solves
};

std::vector<Character> all_characters(const FiniteAbelianGroup& g);

}  // namespace voganish
