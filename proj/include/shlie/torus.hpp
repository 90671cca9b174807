#pragma once

// Exact trigonometric calculus on the flat two-torus.  Functions are finite
// rational combinations of cos(kx + ly) and sin(kx + ly); products reduce to
// the same span, so differential-geometric operators (d, curl, Lie
// derivatives, vector-field brackets) stay closed and every identity can be
// tested by exact coefficient comparison.

#include <map>
#include <string>
#include <utility>

#include "shlie/rational.hpp"

namespace shlie {

// A frequency vector (k, l), stored in canonical lex-positive form:
// either (0, 0), or k > 0, or k == 0 and l > 0.
struct Freq {
  int k = 0;
  int l = 0;
  friend bool operator<(const Freq& a, const Freq& b) {
    return a.k != b.k ? a.k < b.k : a.l < b.l;
  }
  friend bool operator==(const Freq& a, const Freq& b) {
    return a.k == b.k && a.l == b.l;
  }
};

// Finite sum  sum_{(k,l)} c_{kl} cos(kx+ly) + s_{kl} sin(kx+ly)  with
// rational coefficients, keyed by canonical frequencies.  The (0,0) term
// carries no sine component.
struct TrigPoly {
  // freq -> (cosine coefficient, sine coefficient); no all-zero entries.
  std::map<Freq, std::pair<Rat, Rat>> terms;

  static TrigPoly constant(const Rat& c);
  static TrigPoly coskl(int k, int l, const Rat& c);
  static TrigPoly sinkl(int k, int l, const Rat& c);

  // Adds c*cos((k,l)) + s*sin((k,l)), folding non-canonical frequencies
  // (cosine is even, sine is odd) and dropping zero entries.
  void add_term(int k, int l, const Rat& c, const Rat& s);

  bool is_zero() const { return terms.empty(); }

  TrigPoly dx() const;  // partial derivative in x
  TrigPoly dy() const;  // partial derivative in y
  Rat mean() const;     // average over the torus = constant-term cosine part

  std::string str() const;

  friend TrigPoly operator+(const TrigPoly& a, const TrigPoly& b);
  friend TrigPoly operator-(const TrigPoly& a, const TrigPoly& b);
  friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b);
  friend TrigPoly operator*(const Rat& c, const TrigPoly& a);
  friend TrigPoly operator-(const TrigPoly& a);
  friend bool operator==(const TrigPoly& a, const TrigPoly& b) {
    return a.terms == b.terms;
  }
  friend bool operator!=(const TrigPoly& a, const TrigPoly& b) {
    return !(a == b);
  }
};

// One-form P dx + Q dy.
struct OneForm {
  TrigPoly P;
  TrigPoly Q;
  bool is_zero() const { return P.is_zero() && Q.is_zero(); }
  bool closed() const;
  friend OneForm operator+(const OneForm& a, const OneForm& b);
  friend OneForm operator-(const OneForm& a, const OneForm& b);
  friend OneForm operator*(const Rat& c, const OneForm& a);
  friend OneForm operator*(const TrigPoly& f, const OneForm& a);
  friend bool operator==(const OneForm& a, const OneForm& b) {
    return a.P == b.P && a.Q == b.Q;
  }
  friend bool operator!=(const OneForm& a, const OneForm& b) {
    return !(a == b);
  }
};

// Vector field A d/dx + B d/dy.
struct VectorField {
  TrigPoly A;
  TrigPoly B;
  bool is_zero() const { return A.is_zero() && B.is_zero(); }
  friend VectorField operator+(const VectorField& a, const VectorField& b);
  friend VectorField operator-(const VectorField& a, const VectorField& b);
  friend VectorField operator*(const Rat& c, const VectorField& a);
  friend VectorField operator*(const TrigPoly& f, const VectorField& a);
  friend bool operator==(const VectorField& a, const VectorField& b) {
    return a.A == b.A && a.B == b.B;
  }
};

// Exterior derivative of a function: d f = f_x dx + f_y dy.
OneForm d(const TrigPoly& f);

// Coefficient of dx^dy in d(P dx + Q dy): curl = Q_x - P_y.
TrigPoly curl(const OneForm& a);

// Directional derivative V(f) = A f_x + B f_y.
TrigPoly apply(const VectorField& v, const TrigPoly& f);

// Interior product i_V (P dx + Q dy) = A P + B Q.
TrigPoly interior(const VectorField& v, const OneForm& a);

// Lie bracket of vector fields, componentwise [V, W] = V(W) - W(V).
VectorField vf_bracket(const VectorField& v, const VectorField& w);

// Lie derivative of a one-form via Cartan's formula
// L_V a = d(i_V a) + i_V(da), with da = curl(a) dx^dy.
OneForm lie_form(const VectorField& v, const OneForm& a);

}  // namespace shlie
