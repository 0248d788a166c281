#pragma once

#include "cutcert/bigint.hpp"
#include "cutcert/laurent.hpp"

namespace cutcert {

/// Class of a univariate Laurent polynomial modulo J^2, where J = (t-1):
/// the pair (p(1), p'(1)).
struct JetAtOne {
  Int value;
  Int slope;

  friend bool operator==(const JetAtOne&, const JetAtOne&) = default;

  friend JetAtOne operator+(const JetAtOne& a, const JetAtOne& b) {
    return {a.value + b.value, a.slope + b.slope};
  }

  friend JetAtOne operator*(const JetAtOne& a, const JetAtOne& b) {
    return {a.value * b.value, a.value * b.slope + b.value * a.slope};
  }

  JetAtOne operator-() const { return {-value, -slope}; }

  bool in_augmentation_ideal() const { return value == 0; }
  bool in_J_squared() const { return value == 0 && slope == 0; }
};

inline JetAtOne jet_at_one(const LaurentPoly& p) {
  if (p.arity() != 1) throw Error(Errc::arity_mismatch, "jet_at_one requires arity 1");
  return {p.evaluate_at_one(), p.derivative_at_one()};
}

}  // namespace cutcert
