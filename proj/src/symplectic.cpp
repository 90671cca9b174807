#include "shlie/symplectic.hpp"

#include "shlie/errors.hpp"

namespace shlie {

VectorField sharp(const OneForm& a) { return VectorField{a.Q, -(a.P)}; }

TrigPoly poisson_fn(const TrigPoly& f, const TrigPoly& g) {
  return f.dx() * g.dy() - f.dy() * g.dx();
}

static void require_closed(const OneForm& a, const char* who) {
  if (!a.closed())
    throw NotClosed(std::string(who) + " requires a closed one-form; curl = " +
                    curl(a).str());
}

OneForm poisson_form(const OneForm& a, const OneForm& b) {
  require_closed(a, "poisson_form");
  require_closed(b, "poisson_form");
  VectorField as = sharp(a);
  VectorField bs = sharp(b);
  // i_{a^#} i_{b^#} (dx^dy) = i_{a^#} (A_b dy - B_b dx)
  TrigPoly inner = interior(as, OneForm{-(bs.B), bs.A});
  return lie_form(bs, a) - lie_form(as, b) + d(inner);
}

std::pair<Rat, Rat> harmonic_part(const OneForm& a) {
  require_closed(a, "harmonic_part");
  // Derivatives have no constant term, so the means of the components are
  // exactly the harmonic coefficients.
  return {a.P.mean(), a.Q.mean()};
}

TrigPoly symplectic_s(const OneForm& a) {
  require_closed(a, "symplectic_s");
  // Solve d f0 = a - harm(a) mode by mode.  At frequency (k,l) != (0,0)
  // the cosine/sine pairs of (f0_x, f0_y) are (s k, -c k) and (s l, -c l),
  // so with N = k^2 + l^2:
  //   c = -(k P_sin + l Q_sin)/N,   s = (k P_cos + l Q_cos)/N.
  // Closedness makes the two component equations consistent.
  TrigPoly f0;
  auto collect = [&](const TrigPoly& comp, bool is_q) {
    for (const auto& [fr, cs] : comp.terms) {
      if (fr.k == 0 && fr.l == 0) continue;
      Rat n(static_cast<long>(fr.k) * fr.k + static_cast<long>(fr.l) * fr.l);
      Rat w(is_q ? fr.l : fr.k);
      f0.add_term(fr.k, fr.l, -(w * cs.second) / n, (w * cs.first) / n);
    }
  };
  collect(a.P, false);
  collect(a.Q, true);
  return -(f0);
}

Rat symplectic_s1(const TrigPoly& f) { return -(f.mean()); }

TrigPoly sympl_l2_mixed(const TrigPoly& f, const OneForm& b) {
  return apply(sharp(b), f);
}

}  // namespace shlie
