#include "voganish/evtable.hpp"

#include <stdexcept>

namespace voganish {

// The six Grothendieck-level vanishing-cycle rules. Inputs and outputs are
// rank-one descriptors with a quadratic monodromy flag; composite monodromy is
// the product of flags, tracked as a parity.
LocalSystemDescriptor atomic_rphi(RPhiForm form, const LocalSystemDescriptor& input, int e) {
  if (input.zero) return LocalSystemDescriptor::zero_class();
  LocalSystemDescriptor out = input;
  switch (form) {
    case RPhiForm::Zero:
      // RPhi_0 F = F, monodromy untouched.
      return out;
    case RPhiForm::Smooth:
      // RPhi_g L = 0 for g smooth on a local system.
      return LocalSystemDescriptor::zero_class();
    case RPhiForm::Square:
      // RPhi_{g^2} 1 = 1_{g=0} with quadratic monodromy.
      out.quadratic_monodromy = !out.quadratic_monodromy;
      return out;
    case RPhiForm::SquareUnit:
      // RPhi_{x^2 u} 1 = quadratic-character system on the unit line,
      // quadratic monodromy from sqrt(x).
      out.quadratic_system = !out.quadratic_system;
      out.quadratic_monodromy = !out.quadratic_monodromy;
      return out;
    case RPhiForm::QuadSum:
      // RPhi_{sum u_i x_i^2} 1: product-of-quadratic-characters system with
      // shift 1 - e; parity of e drives the character and monodromy product.
      if (e < 1) throw std::invalid_argument("atomic_rphi: QuadSum needs e >= 1");
      out.shift += 1 - e;
      if (e % 2) {
        out.quadratic_system = !out.quadratic_system;
        out.quadratic_monodromy = !out.quadratic_monodromy;
      }
      return out;
    case RPhiForm::XY:
      // RPhi_{xy} 1 = skyscraper with trivial monodromy.
      out.quadratic_system = false;
      out.quadratic_monodromy = false;
      return out;
  }
  throw std::invalid_argument("atomic_rphi: unknown normal form");
}

}  // namespace voganish
