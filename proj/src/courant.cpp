#include "shlie/courant.hpp"

namespace shlie {

GSection courant_bracket(const GSection& a, const GSection& b) {
  TrigPoly corr = interior(a.X, b.xi) - interior(b.X, a.xi);
  OneForm form =
      lie_form(a.X, b.xi) - lie_form(b.X, a.xi) - Rat(1, 2) * d(corr);
  return GSection{vf_bracket(a.X, b.X), form};
}

TrigPoly courant_pair(const GSection& a, const GSection& b) {
  return Rat(1, 2) * (interior(a.X, b.xi) + interior(b.X, a.xi));
}

VectorField rho(const GSection& a) { return a.X; }

GSection courant_D(const TrigPoly& f) { return GSection{VectorField{}, d(f)}; }

TrigPoly courant_T(const GSection& a, const GSection& b, const GSection& c) {
  return Rat(1, 3) * (courant_pair(courant_bracket(a, b), c) +
                      courant_pair(courant_bracket(b, c), a) +
                      courant_pair(courant_bracket(c, a), b));
}

}  // namespace shlie
