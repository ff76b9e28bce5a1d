#pragma once

#include <stdexcept>
#include <vector>

#include "daha/field.hpp"
#include "daha/root_data.hpp"

namespace daha {

/// A point (h, zeta) of the torus T~ x C^*_qua, stored dually as the values of
/// the character lattice basis: h(omega_i) for the finite fundamental
/// weights, tau = h(delta), h(omega_0), and the dilatation value zeta = t(h).
template <class F>
struct TorusChar {
  std::vector<F> omega;
  F tau;
  F omega0;
  F zeta;

  /// h(lambda) for lambda in X~, extended multiplicatively.
  F value(const AffineWeight& lambda) const {
    if (lambda.fin.size() != omega.size()) throw DatumMismatch("character and weight of different rank");
    F r = field_pow(tau, lambda.delta);
    r *= field_pow(omega0, lambda.omega0);
    for (std::size_t i = 0; i < omega.size(); ++i)
      if (lambda.fin[i] != 0) r *= field_pow(omega[i], lambda.fin[i]);
    return r;
  }

  /// Equality on the lattice basis (hence as characters).
  friend bool operator==(const TorusChar& a, const TorusChar& b) {
    return a.omega == b.omega && a.tau == b.tau && a.omega0 == b.omega0 && a.zeta == b.zeta;
  }
};

}  // namespace daha
