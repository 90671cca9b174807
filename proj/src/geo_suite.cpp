#include "shlie/geo_suite.hpp"

#include <algorithm>
#include <numeric>

#include "shlie/errors.hpp"
#include "shlie/multilinear.hpp"

namespace shlie {

namespace {

// Stable-sorts elements by degree in place and returns the graded sign of
// the sorting permutation (plain parity times the degree-inversion sign),
// so that formulas written for ascending degree apply to any order.
int sort_by_degree(std::vector<GeoElt>& v) {
  const int n = static_cast<int>(v.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return v[a].degree < v[b].degree; });
  std::vector<int> degs(n);
  for (int i = 0; i < n; ++i) degs[i] = v[i].degree;
  int sign = perm_parity(idx) * koszul_sign(idx, degs);
  std::vector<GeoElt> sorted;
  sorted.reserve(n);
  for (int i = 0; i < n; ++i) sorted.push_back(v[idx[i]]);
  v = std::move(sorted);
  return sign;
}

GeoElt scale_payload(int sign, GeoElt e) {
  if (sign >= 0) return e;
  e.scalar = -e.scalar;
  e.fn = -(e.fn);
  e.form = Rat(-1) * e.form;
  e.sec = Rat(-1) * e.sec;
  return e;
}

void add_scaled(GeoElt& acc, const GeoElt& v, int sign) {
  if (v.is_zero()) return;
  if (acc.degree != v.degree)
    throw Error("internal: accumulating defect terms of unequal degree " +
                std::to_string(acc.degree) + " and " +
                std::to_string(v.degree));
  GeoElt w = scale_payload(sign, v);
  acc.scalar = acc.scalar + w.scalar;
  acc.fn = acc.fn + w.fn;
  acc.form = acc.form + w.form;
  acc.sec = acc.sec + w.sec;
}

GeoMap zero_map(int arity) {
  return [arity](const std::vector<GeoElt>& a) {
    int t = 0;
    for (const auto& x : a) t += x.degree;
    GeoElt out;
    out.degree = t + arity - 2;
    return out;
  };
}

}  // namespace

GeoMaps symplectic_maps() {
  GeoMaps m;
  m.max_arity = 5;
  m.l.assign(6, GeoMap());
  m.l[1] = [](const std::vector<GeoElt>& a) {
    const GeoElt& x = a[0];
    GeoElt out;
    out.degree = x.degree - 1;
    if (x.degree == 1)
      out.form = d(x.fn);
    else if (x.degree == 2)
      out.fn = TrigPoly::constant(x.scalar);
    return out;
  };
  m.l[2] = [](const std::vector<GeoElt>& a) {
    std::vector<GeoElt> v = a;
    int sg = sort_by_degree(v);
    GeoElt out;
    out.degree = v[0].degree + v[1].degree;
    if (v[0].degree == 0 && v[1].degree == 0)
      out.form = poisson_form(v[0].form, v[1].form);
    else if (v[0].degree == 0 && v[1].degree == 1)
      // Ascending order puts the one-form first; the bracket is defined
      // with the function first, so a plain flip enters.
      out.fn = -(sympl_l2_mixed(v[1].fn, v[0].form));
    return scale_payload(sg, out);
  };
  for (int k = 3; k <= 5; ++k) m.l[k] = zero_map(k);
  return m;
}

GeoMaps courant_maps() {
  GeoMaps m;
  m.max_arity = 5;
  m.l.assign(6, GeoMap());
  m.l[1] = [](const std::vector<GeoElt>& a) {
    const GeoElt& x = a[0];
    GeoElt out;
    out.degree = x.degree - 1;
    if (x.degree == 1)
      out.sec = courant_D(x.fn);
    else if (x.degree == 2)
      out.fn = TrigPoly::constant(x.scalar);
    return out;
  };
  m.l[2] = [](const std::vector<GeoElt>& a) {
    std::vector<GeoElt> v = a;
    int sg = sort_by_degree(v);
    GeoElt out;
    out.degree = v[0].degree + v[1].degree;
    if (v[0].degree == 0 && v[1].degree == 0)
      out.sec = courant_bracket(v[0].sec, v[1].sec);
    else if (v[0].degree == 0 && v[1].degree == 1)
      out.fn = courant_pair(v[0].sec, courant_D(v[1].fn));
    return scale_payload(sg, out);
  };
  m.l[3] = [](const std::vector<GeoElt>& a) {
    std::vector<GeoElt> v = a;
    int sg = sort_by_degree(v);
    GeoElt out;
    out.degree = v[0].degree + v[1].degree + v[2].degree + 1;
    if (v[0].degree == 0 && v[1].degree == 0 && v[2].degree == 0)
      out.fn = -(courant_T(v[0].sec, v[1].sec, v[2].sec));
    return scale_payload(sg, out);
  };
  m.l[4] = zero_map(4);
  m.l[5] = zero_map(5);
  return m;
}

GeoElt geo_defect(const GeoMaps& maps, const std::vector<GeoElt>& args) {
  const int n = static_cast<int>(args.size());
  std::vector<int> degs(n);
  int total = 0;
  for (int i = 0; i < n; ++i) {
    degs[i] = args[i].degree;
    total += degs[i];
  }
  GeoElt out;
  out.degree = total + n - 3;
  for (int i = 1; i <= n; ++i) {
    int j = n + 1 - i;
    if (i > maps.max_arity || j > maps.max_arity) continue;
    int rs = relation_sign(i, j);
    for (const auto& u : unshuffles(i, n - i)) {
      int ks = koszul_sign(u.perm, degs);
      std::vector<GeoElt> block, rest;
      block.reserve(i);
      rest.reserve(n - i);
      for (int k = 0; k < n; ++k)
        (k < i ? block : rest).push_back(args[u.perm[k]]);
      GeoElt inner = maps.l[i](block);
      std::vector<GeoElt> outer_args;
      outer_args.reserve(j);
      outer_args.push_back(std::move(inner));
      for (auto& r : rest) outer_args.push_back(std::move(r));
      GeoElt term = maps.l[j](outer_args);
      add_scaled(out, term, rs * u.parity * ks);
    }
  }
  return out;
}

TrigPoly random_trig(SplitMix64& rng, int max_freq) {
  TrigPoly f;
  for (int k = 0; k <= max_freq; ++k)
    for (int l = -max_freq; l <= max_freq; ++l) {
      if (k == 0 && l < 0) continue;
      if (rng.below(3) != 0) continue;
      long c = rng.range(-3, 3);
      long s = (k == 0 && l == 0) ? 0 : rng.range(-3, 3);
      if (c) f = f + TrigPoly::coskl(k, l, Rat(c));
      if (s) f = f + TrigPoly::sinkl(k, l, Rat(s));
    }
  return f;
}

OneForm random_closed_one_form(SplitMix64& rng, int max_freq) {
  OneForm h{TrigPoly::constant(Rat(rng.range(-2, 2))),
            TrigPoly::constant(Rat(rng.range(-2, 2)))};
  return h + d(random_trig(rng, max_freq));
}

GSection random_gsection(SplitMix64& rng, int max_freq) {
  return GSection{
      VectorField{random_trig(rng, max_freq), random_trig(rng, max_freq)},
      OneForm{random_trig(rng, max_freq), random_trig(rng, max_freq)}};
}

namespace {

// Degree tuples exercised for the bracket relations, arities 1 through 4.
const std::vector<std::vector<int>> kRelationCombos = {
    {1},          {2},          {0, 0},       {0, 1},       {1, 1},
    {0, 2},       {1, 2},       {2, 2},       {0, 0, 0},    {0, 0, 1},
    {0, 1, 1},    {0, 0, 2},    {1, 1, 1},    {0, 1, 2},    {0, 0, 0, 0},
    {0, 0, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 2}};

struct SuiteRecorder {
  GeoReport rep;
  GeoCheck& line(const std::string& name) {
    for (auto& c : rep.checks)
      if (c.name == name) return c;
    rep.checks.push_back(GeoCheck{name, 0, {}});
    return rep.checks.back();
  }
  void record(const std::string& name, int sample, bool ok) {
    GeoCheck& c = line(name);
    ++c.checked;
    if (!ok) c.failed.push_back(sample);
  }
};

std::string combo_name(const std::vector<int>& combo) {
  std::string name = "relation_n" + std::to_string(combo.size()) + "_deg";
  for (int d : combo) name += std::to_string(d);
  return name;
}

}  // namespace

GeoReport verify_example_structures(const std::string& which, int samples,
                                    std::uint64_t seed, int max_freq) {
  if (which != "symplectic" && which != "courant")
    throw SchemaError("$.which", "unknown example \"" + which +
                                     "\"; expected \"courant\" or "
                                     "\"symplectic\"");
  SuiteRecorder rec;
  rec.rep.which = which;
  rec.rep.samples = samples;
  rec.rep.seed = seed;
  rec.rep.max_freq = max_freq;
  SplitMix64 rng(seed);

  GeoMaps maps = which == "symplectic" ? symplectic_maps() : courant_maps();
  auto draw_elt = [&](int deg) {
    GeoElt e;
    e.degree = deg;
    if (deg == 0) {
      if (which == "symplectic")
        e.form = random_closed_one_form(rng, max_freq);
      else
        e.sec = random_gsection(rng, max_freq);
    } else if (deg == 1) {
      e.fn = random_trig(rng, max_freq);
    } else {
      e.scalar = Rat(rng.range(-4, 4));
    }
    return e;
  };

  for (int t = 0; t < samples; ++t) {
    if (which == "symplectic") {
      TrigPoly f = random_trig(rng, max_freq);
      TrigPoly g = random_trig(rng, max_freq);
      OneForm a = random_closed_one_form(rng, max_freq);
      OneForm b = random_closed_one_form(rng, max_freq);
      OneForm c = random_closed_one_form(rng, max_freq);
      Rat k(rng.range(-4, 4));

      OneForm any{random_trig(rng, max_freq), random_trig(rng, max_freq)};
      VectorField sh = sharp(any);
      rec.record("sharp_inverts_area_form", t,
                 OneForm{-(sh.B), sh.A} == any);

      rec.record("fn_bracket_hamiltonian", t,
                 poisson_fn(f, g) == apply(sharp(d(g)), f) &&
                     poisson_fn(f, f).is_zero());

      OneForm ab = poisson_form(a, b);
      rec.record("form_bracket_closed_exact", t,
                 ab.closed() && ab == d(interior(sharp(b), a)));

      OneForm jac = poisson_form(ab, c) +
                    poisson_form(poisson_form(b, c), a) +
                    poisson_form(poisson_form(c, a), b);
      rec.record("form_bracket_jacobi", t, jac.is_zero());

      rec.record("exact_forms_compat", t,
                 poisson_form(d(f), d(g)) == d(poisson_fn(f, g)));

      auto [ha, hb] = harmonic_part(a);
      OneForm harm{TrigPoly::constant(ha), TrigPoly::constant(hb)};
      TrigPoly sa = symplectic_s(a);
      rec.record("splitting_reconstruction", t,
                 harm + d(-(sa)) == a && sa.mean() == Rat(0));

      bool h0 = (harm - a) == d(sa);
      TrigPoly mid = TrigPoly::constant(symplectic_s1(f)) + symplectic_s(d(f));
      bool h1 = mid == -(f);
      bool h2 = symplectic_s1(TrigPoly::constant(k)) == -k;
      rec.record("homotopy_identity", t, h0 && h1 && h2);

      TrigPoly direct = sympl_l2_mixed(f, b);
      rec.record("mixed_bracket_chain_map", t,
                 d(direct) == poisson_form(d(f), b));
      TrigPoly via_s = -(symplectic_s(poisson_form(d(f), b)));
      rec.record("mixed_bracket_via_splitting", t,
                 via_s == direct - TrigPoly::constant(direct.mean()) &&
                     d(via_s) == d(direct));
    } else {
      GSection e1 = random_gsection(rng, max_freq);
      GSection e2 = random_gsection(rng, max_freq);
      GSection e3 = random_gsection(rng, max_freq);
      TrigPoly f = random_trig(rng, max_freq);

      GSection jac = courant_bracket(courant_bracket(e1, e2), e3) +
                     courant_bracket(courant_bracket(e2, e3), e1) +
                     courant_bracket(courant_bracket(e3, e1), e2);
      rec.record("axiom_jacobiator_torsion", t,
                 jac == courant_D(courant_T(e1, e2, e3)));

      rec.record("axiom_anchor_homomorphism", t,
                 rho(courant_bracket(e1, e2)) ==
                     vf_bracket(rho(e1), rho(e2)));

      GSection lf = courant_bracket(e1, f * e2);
      GSection rf = f * courant_bracket(e1, e2) + apply(rho(e1), f) * e2 -
                    courant_pair(e1, e2) * courant_D(f);
      rec.record("axiom_leibniz_pairing", t, lf == rf);

      rec.record("axiom_anchor_kills_D", t, rho(courant_D(f)).is_zero());

      TrigPoly l5 = apply(rho(e1), courant_pair(e2, e3));
      GSection c2 = courant_bracket(e1, e2) + courant_D(courant_pair(e1, e2));
      GSection c3 = courant_bracket(e1, e3) + courant_D(courant_pair(e1, e3));
      TrigPoly r5 = courant_pair(c2, e3) + courant_pair(e2, c3);
      rec.record("axiom_pairing_invariance", t, l5 == r5);

      rec.record("pair_with_D", t,
                 courant_pair(courant_D(f), e1) ==
                     Rat(1, 2) * apply(rho(e1), f));
      rec.record("bracket_with_D", t,
                 courant_bracket(courant_D(f), e1) ==
                     Rat(-1, 2) * courant_D(apply(rho(e1), f)));
      rec.record("torsion_with_D", t,
                 courant_T(courant_D(f), e2, e3) ==
                     Rat(1, 4) * apply(vf_bracket(rho(e2), rho(e3)), f));
    }

    for (const auto& combo : kRelationCombos) {
      std::vector<GeoElt> args;
      args.reserve(combo.size());
      for (int dg : combo) args.push_back(draw_elt(dg));
      rec.record(combo_name(combo), t, geo_defect(maps, args).is_zero());
    }
  }
  return rec.rep;
}

}  // namespace shlie
