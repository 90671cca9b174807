#pragma once

// Sections of TM + T*M over the flat torus with the skew bracket, the
// symmetric pairing, the anchor onto vector fields, and the associated
// torsion.  The bracket fails Jacobi by exactly D of the torsion, which is
// what the homotopy machinery elsewhere in the library consumes.

#include "shlie/torus.hpp"

namespace shlie {

// A section (X, xi) of the generalized tangent bundle.
struct GSection {
  VectorField X;
  OneForm xi;
  bool is_zero() const { return X.is_zero() && xi.is_zero(); }
  friend GSection operator+(const GSection& a, const GSection& b) {
    return GSection{a.X + b.X, a.xi + b.xi};
  }
  friend GSection operator-(const GSection& a, const GSection& b) {
    return GSection{a.X - b.X, a.xi - b.xi};
  }
  friend GSection operator*(const Rat& c, const GSection& a) {
    return GSection{c * a.X, c * a.xi};
  }
  friend GSection operator*(const TrigPoly& f, const GSection& a) {
    return GSection{f * a.X, f * a.xi};
  }
  friend bool operator==(const GSection& a, const GSection& b) {
    return a.X == b.X && a.xi == b.xi;
  }
};

// [(X, xi), (Y, eta)] =
//   ([X, Y], L_X eta - L_Y xi - (1/2) d(i_X eta - i_Y xi))
GSection courant_bracket(const GSection& a, const GSection& b);

// <(X, xi), (Y, eta)> = (1/2)(i_X eta + i_Y xi)
TrigPoly courant_pair(const GSection& a, const GSection& b);

// Anchor: the vector-field component.
VectorField rho(const GSection& a);

// D f = (0, d f); satisfies <D f, e> = (1/2) rho(e) f.
GSection courant_D(const TrigPoly& f);

// T(e1, e2, e3) = (1/3)(<[e1,e2], e3> + <[e2,e3], e1> + <[e3,e1], e2>)
TrigPoly courant_T(const GSection& a, const GSection& b, const GSection& c);

}  // namespace shlie
