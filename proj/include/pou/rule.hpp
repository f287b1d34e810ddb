#pragma once

#include <string>

#include "pou/errors.hpp"
#include "pou/rational.hpp"

namespace pou {

// How the adversary may inflate a player's observed cost ratio. kappa is the
// largest good/bad ratio at which a switch is still permitted:
//   OneSided    kappa = 1 + eps      (only one of the two counts perturbed)
//   TwoSided    kappa = (1 + eps)^2  (both counts perturbed; the default)
//   HalfDegree  kappa = 1 + 2*eps
enum class Variant { OneSided, TwoSided, HalfDegree };

std::string variant_name(Variant v);
Variant variant_from_name(const std::string& name);

struct UncertaintyRule {
  Rational eps;
  Variant variant = Variant::TwoSided;

  Rational kappa() const {
    const long long p = eps.num, q = eps.den;
    switch (variant) {
      case Variant::OneSided:
        return {q + p, q};
      case Variant::HalfDegree:
        return {q + 2 * p, q};
      case Variant::TwoSided:
      default:
        return {(q + p) * (q + p), q * q};
    }
  }

  // kappa - 1, the effective inflation actually governing the dynamics.
  Rational eps_hat() const { return kappa() - Rational::from_int(1); }
};

inline UncertaintyRule make_rule(const Rational& eps, Variant v) {
  if (!eps.is_positive()) throw ParseError("eps must be positive, got " + eps.str());
  return UncertaintyRule{eps, v};
}

}  // namespace pou
