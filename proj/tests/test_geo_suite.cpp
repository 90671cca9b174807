#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "shlie/geo_suite.hpp"

#include "shlie/errors.hpp"
#include "shlie/json_io.hpp"

using namespace shlie;

namespace {

GeoElt elt_form(const OneForm& a) {
  GeoElt e;
  e.degree = 0;
  e.form = a;
  return e;
}
GeoElt elt_sec(const GSection& s) {
  GeoElt e;
  e.degree = 0;
  e.sec = s;
  return e;
}
GeoElt elt_fn(const TrigPoly& f) {
  GeoElt e;
  e.degree = 1;
  e.fn = f;
  return e;
}
GeoElt elt_const(const Rat& k) {
  GeoElt e;
  e.degree = 2;
  e.scalar = k;
  return e;
}

}  // namespace

TEST_CASE("defect evaluator degree bookkeeping") {
  SplitMix64 rng(301);
  GeoMaps maps = courant_maps();
  GeoElt e = elt_sec(random_gsection(rng, 2));
  GeoElt f = elt_fn(random_trig(rng, 2));

  GeoElt d2 = geo_defect(maps, {e, f});
  CHECK(d2.degree == 0);
  GeoElt d3 = geo_defect(maps, {e, elt_sec(random_gsection(rng, 2)), f});
  CHECK(d3.degree == 1);
}

TEST_CASE("ternary defect without the ternary bracket is exactly D of T") {
  // Removing l3 from the family must leave the Jacobiator, which the
  // axioms say equals D T.  This pins the evaluator's sign conventions
  // against an independently computed value.
  SplitMix64 rng(302);
  GeoMaps crippled = courant_maps();
  crippled.l[3] = [](const std::vector<GeoElt>& a) {
    int t = 0;
    for (const auto& x : a) t += x.degree;
    GeoElt out;
    out.degree = t + 1;
    return out;
  };
  for (int t = 0; t < 5; ++t) {
    GSection e1 = random_gsection(rng, 2);
    GSection e2 = random_gsection(rng, 2);
    GSection e3 = random_gsection(rng, 2);
    GeoElt d3 = geo_defect(crippled, {elt_sec(e1), elt_sec(e2), elt_sec(e3)});
    CHECK(d3.degree == 0);
    CHECK(d3.sec == courant_D(courant_T(e1, e2, e3)));
    // ... and with the full family the defect vanishes.
    GeoMaps full = courant_maps();
    CHECK(geo_defect(full, {elt_sec(e1), elt_sec(e2), elt_sec(e3)}).is_zero());
  }
}

TEST_CASE("a wrong sign in the mixed bracket is detected") {
  GeoMaps bad = symplectic_maps();
  GeoMap good_l2 = bad.l[2];
  bad.l[2] = [good_l2](const std::vector<GeoElt>& a) {
    GeoElt out = good_l2(a);
    if (out.degree == 1) {
      out.fn = -(out.fn);  // flip only the mixed-degree case
    }
    return out;
  };
  SplitMix64 rng(303);
  OneForm alpha = random_closed_one_form(rng, 2);
  TrigPoly f = random_trig(rng, 2);
  GeoElt d2 = geo_defect(bad, {elt_form(alpha), elt_fn(f)});
  CHECK(!d2.is_zero());
  GeoMaps good = symplectic_maps();
  CHECK(geo_defect(good, {elt_form(alpha), elt_fn(f)}).is_zero());
}

TEST_CASE("defects vanish on random draws for both examples") {
  SplitMix64 rng(304);
  GeoMaps sym = symplectic_maps();
  GeoMaps cou = courant_maps();
  for (int t = 0; t < 4; ++t) {
    GeoElt a = elt_form(random_closed_one_form(rng, 2));
    GeoElt b = elt_form(random_closed_one_form(rng, 2));
    GeoElt c = elt_form(random_closed_one_form(rng, 2));
    GeoElt f = elt_fn(random_trig(rng, 2));
    GeoElt g = elt_fn(random_trig(rng, 2));
    GeoElt k = elt_const(Rat(rng.range(-4, 4)));
    CHECK(geo_defect(sym, {a, b, c}).is_zero());
    CHECK(geo_defect(sym, {a, b, f}).is_zero());
    CHECK(geo_defect(sym, {a, f, g}).is_zero());
    CHECK(geo_defect(sym, {a, b, k}).is_zero());
    CHECK(geo_defect(sym, {f, k}).is_zero());
    CHECK(geo_defect(sym, {a, b, c, f}).is_zero());

    GeoElt e1 = elt_sec(random_gsection(rng, 2));
    GeoElt e2 = elt_sec(random_gsection(rng, 2));
    GeoElt e3 = elt_sec(random_gsection(rng, 2));
    GeoElt e4 = elt_sec(random_gsection(rng, 2));
    CHECK(geo_defect(cou, {e1, e2, e3}).is_zero());
    CHECK(geo_defect(cou, {e1, e2, f}).is_zero());
    CHECK(geo_defect(cou, {e1, e2, e3, e4}).is_zero());
    CHECK(geo_defect(cou, {e1, e2, e3, f}).is_zero());
    CHECK(geo_defect(cou, {e1, f, k}).is_zero());
  }
}

TEST_CASE("example suites pass and are deterministic") {
  GeoReport sym = verify_example_structures("symplectic", 20, 7, 2);
  CHECK(sym.pass());
  CHECK(sym.which == "symplectic");
  CHECK(!sym.checks.empty());
  for (const auto& c : sym.checks) {
    CAPTURE(c.name);
    CHECK(c.checked == 20);
    CHECK(c.failed.empty());
  }
  // Relation lines cover every arity up to 4.
  for (int n = 1; n <= 4; ++n) {
    bool found = false;
    for (const auto& c : sym.checks)
      found = found || c.name.rfind("relation_n" + std::to_string(n), 0) == 0;
    CHECK(found);
  }

  GeoReport cou = verify_example_structures("courant", 15, 11, 2);
  CHECK(cou.pass());
  for (const auto& c : cou.checks) {
    CAPTURE(c.name);
    CHECK(c.checked == 15);
  }
  bool has_axioms = false;
  for (const auto& c : cou.checks)
    has_axioms = has_axioms || c.name.rfind("axiom_", 0) == 0;
  CHECK(has_axioms);

  // Byte-level determinism of the serialized report.
  GeoReport sym2 = verify_example_structures("symplectic", 20, 7, 2);
  CHECK(geo_report_to_json(sym).dump() == geo_report_to_json(sym2).dump());

  CHECK_THROWS_AS(verify_example_structures("mystery", 5, 1, 2), SchemaError);
}

TEST_CASE("report serialization shape") {
  GeoReport rep = verify_example_structures("courant", 3, 5, 1);
  Json j = geo_report_to_json(rep);
  CHECK(j.at("which") == "courant");
  CHECK(j.at("samples") == 3);
  CHECK(j.at("seed") == 5);
  CHECK(j.at("max_freq") == 1);
  CHECK(j.at("pass") == true);
  CHECK(j.at("checks").is_object());
  for (const auto& [name, entry] : j.at("checks").items()) {
    CHECK(entry.at("checked") == 3);
    CHECK(entry.at("failed").is_array());
    CHECK(entry.at("failed").empty());
    CHECK(entry.at("pass") == true);
  }
}
