#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "shlie/multilinear.hpp"
#include "shlie/rng.hpp"

#include <algorithm>

using namespace shlie;

static Vec vec(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Independent sign computation: bubble-sort the permutation to the identity,
// multiplying (-1) * (-1)^{deg(a)deg(b)} for every adjacent swap of values a, b.
static std::pair<int, int> signs_by_adjacent_swaps(std::vector<int> perm,
                                                   const std::vector<int>& degrees) {
  int parity = 1, koszul = 1;
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t t = 0; t + 1 < perm.size(); ++t) {
      if (perm[t] > perm[t + 1]) {
        int a = perm[t], b = perm[t + 1];
        parity = -parity;
        if ((degrees[static_cast<size_t>(a)] * degrees[static_cast<size_t>(b)]) % 2 != 0)
          koszul = -koszul;
        std::swap(perm[t], perm[t + 1]);
        moved = true;
      }
    }
  }
  return {parity, koszul};
}

TEST_CASE("permutation parity and graded sign against adjacent-swap oracle") {
  SplitMix64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng.below(6));
    std::vector<int> perm(static_cast<size_t>(n));
    for (int t = 0; t < n; ++t) perm[static_cast<size_t>(t)] = t;
    for (int t = n - 1; t > 0; --t)
      std::swap(perm[static_cast<size_t>(t)],
                perm[static_cast<size_t>(rng.below(static_cast<uint64_t>(t + 1)))]);
    std::vector<int> degrees(static_cast<size_t>(n));
    for (auto& d : degrees) d = static_cast<int>(rng.below(4));
    auto [p, k] = signs_by_adjacent_swaps(perm, degrees);
    CHECK(perm_parity(perm) == p);
    CHECK(koszul_sign(perm, degrees) == k);
  }
  // Swapping two odd symbols costs nothing beyond the plain parity... check one by hand:
  CHECK(koszul_sign({1, 0}, {1, 1}) == -1);
  CHECK(koszul_sign({1, 0}, {1, 0}) == 1);
  CHECK(koszul_sign({1, 0}, {2, 3}) == 1);  // even*odd product is even
}

TEST_CASE("unshuffle enumeration") {
  auto u21 = unshuffles(2, 1);
  REQUIRE(u21.size() == 3);
  CHECK(u21[0].perm == std::vector<int>{0, 1, 2});
  CHECK(u21[0].parity == 1);
  CHECK(u21[1].perm == std::vector<int>{0, 2, 1});
  CHECK(u21[1].parity == -1);
  CHECK(u21[2].perm == std::vector<int>{1, 2, 0});
  CHECK(u21[2].parity == 1);

  auto u22 = unshuffles(2, 2);
  CHECK(u22.size() == 6);
  for (const auto& u : u22) {
    CHECK(u.perm[0] < u.perm[1]);  // increasing inside each block
    CHECK(u.perm[2] < u.perm[3]);
    std::vector<int> got = u.perm;
    std::sort(got.begin(), got.end());
    CHECK(got == std::vector<int>{0, 1, 2, 3});
    auto [p, k] = signs_by_adjacent_swaps(u.perm, {0, 0, 0, 0});
    (void)k;
    CHECK(u.parity == p);
  }

  auto u10 = unshuffles(1, 0);
  REQUIRE(u10.size() == 1);
  CHECK(u10[0].perm == std::vector<int>{0});
  CHECK(u10[0].parity == 1);
}

TEST_CASE("packed keys reject out-of-range degrees and indices") {
  CHECK_THROWS_AS(pack_key(64, 0), DegreeOverflow);
  CHECK_THROWS_AS(pack_key(0, 1024), DegreeOverflow);
  CHECK(pack_key(0, 0) == 0);
  CHECK(pack_key(1, 2) == (1 << 10 | 2));
}

// The 2-dim complex with one generator upstairs: dims {2, 1}, l1 f1 = e2.
static std::vector<int> lie2_dims() { return {2, 1}; }

static SkewGradedMap lie2_l1() {
  SkewGradedMap l1(1, -1, lie2_dims());
  l1.add_basis({{1, 0}}, vec({0, 1}));
  return l1;
}

// Degree-0 bracket [e1, e2] = e2 plus its degree-(0,1) extension l2(e1, f1) = f1.
static SkewGradedMap lie2_l2(bool with_degree_one) {
  SkewGradedMap l2(2, 0, lie2_dims());
  l2.add_basis({{0, 0}, {0, 1}}, vec({0, 1}));
  if (with_degree_one) l2.add_basis({{0, 0}, {1, 0}}, vec({1}));
  return l2;
}

TEST_CASE("skew evaluation on basis tuples") {
  SkewGradedMap l2 = lie2_l2(true);
  CHECK(l2.eval_basis({{0, 0}, {0, 1}}).coeffs == vec({0, 1}));
  // Swap of two even arguments flips the sign.
  CHECK(l2.eval_basis({{0, 1}, {0, 0}}).coeffs == vec({0, -1}));
  // Repeated even argument vanishes.
  CHECK(l2.eval_basis({{0, 1}, {0, 1}}).is_zero());
  // Even/odd swap also flips (the graded correction is trivial here).
  CHECK(l2.eval_basis({{1, 0}, {0, 0}}).coeffs == vec({-1}));
  // Unset tuples are zero, and out-of-range target degrees are forced zero.
  CHECK(l2.eval_basis({{0, 0}, {0, 0}}).is_zero());
  CHECK(l2.eval_basis({{1, 0}, {1, 0}}).is_zero());
  CHECK(l2.support().count({0, 0}) == 1);
  CHECK(l2.support().count({0, 1}) == 1);
  CHECK(l2.support().size() == 2);
}

TEST_CASE("odd arguments are symmetric and repeats are allowed") {
  // dims {1, 2}: two odd generators mapping into one even dimension via an
  // arity-2 bracket of degree -2 (so the target of (1,1) lands in degree 0).
  SkewGradedMap m(2, -2, {1, 2});
  m.add_basis({{1, 0}, {1, 1}}, vec({5}));
  m.add_basis({{1, 0}, {1, 0}}, vec({7}));
  CHECK(m.eval_basis({{1, 1}, {1, 0}}).coeffs == vec({5}));  // + sign: odd/odd swap
  CHECK(m.eval_basis({{1, 0}, {1, 0}}).coeffs == vec({7}));  // diagonal value kept
}

TEST_CASE("multilinearity over element combinations") {
  SkewGradedMap l2 = lie2_l2(true);
  Elt x{0, vec({2, 3})};   // 2 e1 + 3 e2
  Elt y{0, vec({-1, 4})};  // -e1 + 4 e2
  Elt r = l2.eval({x, y});
  // l2(x, y) = (2*4 - 3*(-1)) [e1,e2] = 11 e2.
  CHECK(r.degree == 0);
  CHECK(r.coeffs == vec({0, 11}));
  Elt f{1, vec({6})};
  Elt rf = l2.eval({x, f});
  CHECK(rf.degree == 1);
  CHECK(rf.coeffs == vec({12}));  // 2 * 6 * l2(e1, f1)
}

TEST_CASE("random skew map respects every permutation sign") {
  std::vector<int> dims = {2, 2, 1};
  SkewGradedMap m(3, -1, dims);
  SplitMix64 rng(9);
  // Populate a few canonical tuples with random values.
  std::vector<std::vector<BasisArg>> keys = {
      {{0, 0}, {0, 1}, {1, 0}}, {{0, 0}, {1, 0}, {1, 1}}, {{0, 1}, {1, 0}, {2, 0}},
      {{1, 0}, {1, 1}, {2, 0}}, {{0, 0}, {0, 1}, {2, 0}}};
  for (const auto& k : keys) {
    int total = k[0].degree + k[1].degree + k[2].degree - 1;
    int dim_out = (total >= 0 && total < 3) ? dims[static_cast<size_t>(total)] : 0;
    if (dim_out == 0) continue;
    Vec v(static_cast<size_t>(dim_out));
    for (auto& c : v) c = Rat(rng.range(-5, 5));
    m.add_basis(k, v);
  }
  for (int trial = 0; trial < 100; ++trial) {
    const auto& k = keys[rng.below(keys.size())];
    std::vector<int> perm = {0, 1, 2};
    for (int t = 2; t > 0; --t)
      std::swap(perm[static_cast<size_t>(t)],
                perm[static_cast<size_t>(rng.below(static_cast<uint64_t>(t + 1)))]);
    std::vector<BasisArg> shuffled(3);
    std::vector<int> degrees(3);
    for (int t = 0; t < 3; ++t) degrees[static_cast<size_t>(t)] = k[static_cast<size_t>(t)].degree;
    for (int t = 0; t < 3; ++t) shuffled[static_cast<size_t>(t)] = k[static_cast<size_t>(perm[static_cast<size_t>(t)])];
    auto [p, ks] = signs_by_adjacent_swaps(perm, degrees);
    Elt base = m.eval_basis(k);
    Elt got = m.eval_basis(shuffled);
    REQUIRE(got.degree == base.degree);
    Elt expect = base;
    for (auto& c : expect.coeffs) c = c * Rat(p * ks);
    CHECK(got.coeffs == expect.coeffs);
  }
}

TEST_CASE("composition through unshuffles reproduces the graded chain rule") {
  SkewGradedMap l1 = lie2_l1();
  SkewGradedMap l2 = lie2_l2(true);
  // (l2 after l1)(f1, e1) = l2(l1 f1, e1) - l2(l1 e1, f1) = l2(e2, e1) = -e2.
  Elt f1{1, vec({1})};
  Elt e1{0, vec({1, 0})};
  Elt r = compose_unshuffled(l2, l1, {f1, e1});
  CHECK(r.degree == 0);
  CHECK(r.coeffs == vec({0, -1}));
  // Same composition in the other argument order picks up the odd/even swap.
  Elt r2 = compose_unshuffled(l2, l1, {e1, f1});
  CHECK(r2.coeffs == vec({0, 1}));
  // (l1 after l2)(e1, f1) = l1(f1) = e2.
  Elt r3 = compose_unshuffled(l1, l2, {e1, f1});
  CHECK(r3.coeffs == vec({0, 1}));
}

// The 4-dim bracket with a Jacobi defect: mu(e1,e2)=e3, mu(e2,e3)=e4, mu(e1,e4)=e4.
static SkewGradedMap perturbed4_mu() {
  SkewGradedMap mu(2, 0, {4, 2});
  mu.add_basis({{0, 0}, {0, 1}}, vec({0, 0, 1, 0}));
  mu.add_basis({{0, 1}, {0, 2}}, vec({0, 0, 0, 1}));
  mu.add_basis({{0, 0}, {0, 3}}, vec({0, 0, 0, 1}));
  return mu;
}

TEST_CASE("the double-bracket composition is the Jacobi defect") {
  SkewGradedMap mu = perturbed4_mu();
  auto basis0 = [](int i) {
    Elt e{0, Vec(4)};
    e.coeffs[static_cast<size_t>(i)] = Rat(1);
    return e;
  };
  // [[e1,e2],e3] - [[e1,e3],e2] + [[e2,e3],e1] = 0 - 0 + mu(e4, e1) = -e4.
  Elt j = compose_unshuffled(mu, mu, {basis0(0), basis0(1), basis0(2)});
  CHECK(j.coeffs == vec({0, 0, 0, -1}));
  // Triples meeting e4 close up: [[e1,e2],e4] - [[e1,e4],e2] + [[e2,e4],e1]
  //   = mu(e3,e4) - mu(e4,e2) + 0 = 0.
  Elt j2 = compose_unshuffled(mu, mu, {basis0(0), basis0(1), basis0(3)});
  CHECK(j2.is_zero());
}

TEST_CASE("a genuine Lie bracket has zero double-bracket composition") {
  // h, e, f with [h,e] = 2e, [h,f] = -2f, [e,f] = h.
  SkewGradedMap b(2, 0, {3});
  b.add_basis({{0, 0}, {0, 1}}, vec({0, 2, 0}));
  b.add_basis({{0, 0}, {0, 2}}, vec({0, 0, -2}));
  b.add_basis({{0, 1}, {0, 2}}, vec({1, 0, 0}));
  auto basis0 = [](int i) {
    Elt e{0, Vec(3)};
    e.coeffs[static_cast<size_t>(i)] = Rat(1);
    return e;
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        CHECK(compose_unshuffled(b, b, {basis0(i), basis0(j), basis0(k)}).is_zero());
}

TEST_CASE("relation signs by arity split") {
  CHECK(relation_sign(1, 2) == -1);
  CHECK(relation_sign(2, 1) == 1);
  CHECK(relation_sign(1, 3) == 1);
  CHECK(relation_sign(2, 2) == 1);
  CHECK(relation_sign(3, 1) == 1);
  CHECK(relation_sign(1, 4) == -1);
  CHECK(relation_sign(2, 3) == 1);
  CHECK(relation_sign(3, 2) == -1);
  CHECK(relation_sign(4, 1) == 1);
  for (int i = 1; i <= 5; ++i) CHECK(relation_sign(i, 6 - i) == 1);
}

TEST_CASE("two-argument defect vanishes exactly when the bracket is a chain map") {
  std::vector<const SkewGradedMap*> maps(3, nullptr);
  SkewGradedMap l1 = lie2_l1();
  SkewGradedMap good = lie2_l2(true);
  maps[1] = &l1;
  maps[2] = &good;
  for (int d1 = 0; d1 <= 1; ++d1)
    for (int i1 = 0; i1 < (d1 == 0 ? 2 : 1); ++i1)
      for (int d2 = 0; d2 <= 1; ++d2)
        for (int i2 = 0; i2 < (d2 == 0 ? 2 : 1); ++i2) {
          Elt a{d1, Vec(d1 == 0 ? 2 : 1)};
          a.coeffs[static_cast<size_t>(i1)] = Rat(1);
          Elt b{d2, Vec(d2 == 0 ? 2 : 1)};
          b.coeffs[static_cast<size_t>(i2)] = Rat(1);
          CHECK(linfty_defect(maps, {a, b}).is_zero());
        }
  // Flipping the sign of the degree-(0,1) value breaks it, with the defect
  // landing on the expected coordinate.
  SkewGradedMap bad = lie2_l2(false);
  bad.add_basis({{0, 0}, {1, 0}}, vec({-1}));
  maps[2] = &bad;
  Elt e1{0, vec({1, 0})};
  Elt f1{1, vec({1})};
  Elt d = linfty_defect(maps, {e1, f1});
  CHECK(!d.is_zero());
  CHECK(d.degree == 0);
  CHECK(d.coeffs == vec({0, -2}));  // -e2 from each of the two compositions
}

TEST_CASE("differential map built from a complex") {
  ChainComplex cc;
  cc.dims = {2, 1};
  cc.diff.push_back(Matrix::zero(0, 2));
  Matrix d1 = Matrix::zero(2, 1);
  d1.at(1, 0) = Rat(1);
  cc.diff.push_back(d1);
  SkewGradedMap l1 = differential_map(cc);
  CHECK(l1.arity == 1);
  CHECK(l1.map_degree == -1);
  CHECK(l1.eval_basis({{1, 0}}).coeffs == vec({0, 1}));
  CHECK(l1.eval_basis({{0, 0}}).is_zero());
}
