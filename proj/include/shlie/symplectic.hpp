#pragma once

// The torus with area form dx^dy as a symplectic surface: musical
// isomorphism, Poisson brackets of functions and of closed one-forms, and
// the splitting operators that select zero-mean primitives.  Everything is
// exact; operators that require closed input throw NotClosed otherwise.

#include <utility>

#include "shlie/torus.hpp"

namespace shlie {

// Index-raising against dx^dy: (P dx + Q dy)^# = Q d/dx - P d/dy,
// the unique field with i_{a^#}(dx^dy) = a.
VectorField sharp(const OneForm& a);

// {f, g} = f_x g_y - f_y g_x, the derivative of f along (dg)^#.
TrigPoly poisson_fn(const TrigPoly& f, const TrigPoly& g);

// Bracket of closed one-forms:
// {a, b} = L_{b^#} a - L_{a^#} b + d( i_{a^#} i_{b^#} (dx^dy) ).
// Throws NotClosed if either argument has nonzero curl.
OneForm poisson_form(const OneForm& a, const OneForm& b);

// Constant coefficients (h1, h2) with a - (h1 dx + h2 dy) exact.
// Throws NotClosed on non-closed input.
std::pair<Rat, Rat> harmonic_part(const OneForm& a);

// Splitting map into functions: for closed a = harm + d f0 with f0 of zero
// mean, returns -f0.  Throws NotClosed on non-closed input.
TrigPoly symplectic_s(const OneForm& a);

// Splitting map into constants: -mean(f).
Rat symplectic_s1(const TrigPoly& f);

// Mixed-degree binary bracket of the transferred structure:
// the derivative of f along b^#.
TrigPoly sympl_l2_mixed(const TrigPoly& f, const OneForm& b);

}  // namespace shlie
