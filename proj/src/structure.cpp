#include "shlie/structure.hpp"

#include <algorithm>
#include <set>

namespace shlie {

namespace {

BasisArg unpack(uint16_t key) {
  return BasisArg{key >> 10, key & 1023};
}

std::vector<BasisArg> unpack_tuple(const std::vector<uint16_t>& key) {
  std::vector<BasisArg> out;
  out.reserve(key.size());
  for (uint16_t k : key) out.push_back(unpack(k));
  return out;
}

// Sorted degree tuples of length n with the given sum, over degrees whose
// space is nonzero.
void multidegrees_rec(const std::vector<int>& dims, int n, int sum,
                      int min_deg, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
  int open = n - static_cast<int>(cur.size());
  if (open == 0) {
    if (sum == 0) out.push_back(cur);
    return;
  }
  for (int d = min_deg; d < static_cast<int>(dims.size()); ++d) {
    if (d * open > sum) break;
    if (dims[static_cast<size_t>(d)] == 0) continue;
    cur.push_back(d);
    multidegrees_rec(dims, n, sum - d, d, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> multidegrees(const std::vector<int>& dims, int n,
                                           int sum) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  multidegrees_rec(dims, n, sum, 0, cur, out);
  return out;
}

// Visits every canonical basis tuple of the multidegree: indices strictly
// increase across equal even degrees and weakly increase across equal odd
// degrees.
template <typename F>
void basis_tuples_rec(const std::vector<int>& dims,
                      const std::vector<int>& md, size_t pos,
                      std::vector<BasisArg>& cur, F&& fn) {
  if (pos == md.size()) {
    fn(cur);
    return;
  }
  const int d = md[pos];
  int start = 0;
  if (pos > 0 && md[pos - 1] == d)
    start = cur[pos - 1].index + (d % 2 == 0 ? 1 : 0);
  for (int idx = start; idx < dims[static_cast<size_t>(d)]; ++idx) {
    cur[pos] = BasisArg{d, idx};
    basis_tuples_rec(dims, md, pos + 1, cur, fn);
  }
}

template <typename F>
void for_each_basis_tuple(const std::vector<int>& dims,
                          const std::vector<int>& md, F&& fn) {
  std::vector<BasisArg> cur(md.size());
  basis_tuples_rec(dims, md, 0, cur, fn);
}

// Could the (inner arity i, outer arity j) term be nonzero anywhere on this
// degree tuple?  True iff some size-i sub-multiset lies in the inner
// support and the induced outer degree tuple lies in the outer support.
bool split_active(const std::vector<int>& md, const SkewGradedMap& inner,
                  const SkewGradedMap& outer, int i) {
  const int n = static_cast<int>(md.size());
  std::vector<int> pick(static_cast<size_t>(i));
  for (int t = 0; t < i; ++t) pick[static_cast<size_t>(t)] = t;
  while (true) {
    std::vector<int> sub, rest;
    {
      std::vector<bool> used(static_cast<size_t>(n), false);
      int s = 0;
      for (int p : pick) {
        sub.push_back(md[static_cast<size_t>(p)]);
        used[static_cast<size_t>(p)] = true;
        s += md[static_cast<size_t>(p)];
      }
      if (inner.support().count(sub) != 0) {
        const int t = s + inner.map_degree;
        if (t >= 0) {
          rest.push_back(t);
          for (int q = 0; q < n; ++q)
            if (!used[static_cast<size_t>(q)]) rest.push_back(md[static_cast<size_t>(q)]);
          std::sort(rest.begin(), rest.end());
          if (outer.support().count(rest) != 0) return true;
        }
      }
    }
    int t = i - 1;
    while (t >= 0 && pick[static_cast<size_t>(t)] == n - i + t) --t;
    if (t < 0) break;
    ++pick[static_cast<size_t>(t)];
    for (int r = t + 1; r < i; ++r)
      pick[static_cast<size_t>(r)] = pick[static_cast<size_t>(r - 1)] + 1;
  }
  return false;
}

std::vector<Elt> tuple_elts(const std::vector<int>& dims,
                            const std::vector<BasisArg>& args) {
  std::vector<Elt> out;
  out.reserve(args.size());
  for (const BasisArg& a : args) out.push_back(basis_elt(dims, a.degree, a.index));
  return out;
}

std::string tuple_str(const std::vector<BasisArg>& args) {
  std::string s = "(";
  for (size_t t = 0; t < args.size(); ++t) {
    if (t) s += ", ";
    s += std::to_string(args[t].degree) + ":" + std::to_string(args[t].index);
  }
  return s + ")";
}

}  // namespace

void Instance::validate() const {
  cx.validate();
  if (l2tilde.arity != 2 || l2tilde.map_degree != 0)
    throw SpecInvalid("seed bracket must be a degree-0 map of arity 2");
  if (l2tilde.dims != cx.dims)
    throw SpecInvalid("seed bracket dimensions disagree with the complex");
  for (const auto& md : l2tilde.support())
    if (md != std::vector<int>{0, 0})
      throw SpecInvalid("seed bracket must be supported on degree (0,0) only");
}

ConditionsReport check_conditions(const Instance& inst, const HomologyData& h) {
  ConditionsReport rep;
  const Subspace& B = h.boundaries[0];
  const int n0 = inst.cx.dim(0);
  for (int c = 0; c < n0; ++c) {
    Elt ce = basis_elt(inst.cx.dims, 0, c);
    for (int bi = 0; bi < B.basis.rows; ++bi) {
      Elt be{0, B.basis.row(bi)};
      Elt v = inst.l2tilde.eval({ce, be});
      ++rep.checked_pairs;
      if (!B.contains(v.coeffs))
        rep.fails_i.push_back({c, bi, v.coeffs});
    }
  }
  for (int i = 0; i < n0; ++i)
    for (int j = i + 1; j < n0; ++j)
      for (int t = j + 1; t < n0; ++t) {
        Elt J = compose_unshuffled(
            inst.l2tilde, inst.l2tilde,
            {basis_elt(inst.cx.dims, 0, i), basis_elt(inst.cx.dims, 0, j),
             basis_elt(inst.cx.dims, 0, t)});
        ++rep.checked_triples;
        if (!B.contains(J.coeffs))
          rep.fails_ii.push_back({{i, j, t}, J.coeffs});
        else if (!J.is_zero())
          rep.nontrivial_jacobiator.push_back({{i, j, t}, J.coeffs});
      }
  return rep;
}

std::vector<const SkewGradedMap*> ShLieStructure::family() const {
  std::vector<const SkewGradedMap*> f(maps.size(), nullptr);
  for (size_t a = 1; a < maps.size(); ++a) f[a] = &maps[a];
  return f;
}

ExtendResult extend(const Instance& inst, const ContractionData& k,
                    int max_arity) {
  if (max_arity < 2) throw SpecInvalid("max arity must be at least 2");
  inst.validate();
  const std::vector<int>& dims = inst.cx.dims;
  const int top = inst.cx.max_degree();
  const HomologyData& h = k.h;
  for (int n = 1; n <= top; ++n)
    if (h.h_dim[static_cast<size_t>(n)] != 0)
      throw NotAcyclic(n, "homology is nonzero in degree " + std::to_string(n));

  ExtendResult res;
  res.conditions = check_conditions(inst, h);
  if (!res.conditions.pass()) {
    std::string msg = "seed bracket fails its compatibility conditions";
    if (!res.conditions.fails_i.empty())
      msg += " (pairing basis " +
             std::to_string(res.conditions.fails_i[0].cycle_index) +
             " with boundary " +
             std::to_string(res.conditions.fails_i[0].boundary_index) +
             " leaves the boundaries)";
    else
      msg += " (triple sum leaves the boundaries)";
    throw ConditionsFailed(msg);
  }

  ShLieStructure& S = res.structure;
  S.cx = inst.cx;
  S.max_arity = max_arity;
  S.maps.resize(static_cast<size_t>(max_arity) + 1);
  S.maps[1] = differential_map(inst.cx);
  for (int a = 2; a <= max_arity; ++a)
    S.maps[static_cast<size_t>(a)] = SkewGradedMap(a, a - 2, dims);
  for (const auto& [key, value] : inst.l2tilde.table())
    S.maps[2].add_basis(unpack_tuple(key), value);

  for (int n = 2; n <= max_arity; ++n) {
    SkewGradedMap& ln = S.maps[static_cast<size_t>(n)];
    // Targets run up to one past the top: those tuples store nothing but
    // their summed term must still be a boundary (necessarily zero there).
    const int max_dtot = top + 3 - n;
    for (int dtot = 0; dtot <= max_dtot; ++dtot) {
      if (n == 2 && dtot == 0) continue;  // the seed itself
      const int target = dtot + n - 2;
      for (const std::vector<int>& md : multidegrees(dims, n, dtot)) {
        bool active = false;
        for (int i = 1; i < n && !active; ++i)
          active = split_active(md, S.map(i), S.map(n + 1 - i), i);
        if (!active) continue;

        for_each_basis_tuple(dims, md, [&](const std::vector<BasisArg>& args) {
          std::vector<Elt> elts = tuple_elts(dims, args);
          Elt B = zero_elt(dims, target - 1);
          for (int i = 1; i < n; ++i) {
            const int j = n + 1 - i;
            Elt term = compose_unshuffled(S.map(j), S.map(i), elts);
            if (i == 1 && dtot == 0 && !term.is_zero())
              throw Error(
                  "internal: differential term is nonzero on a degree-0 tuple");
            add_scaled(B, Rat(relation_sign(i, j)), term);
          }
          if (!h.boundaries[static_cast<size_t>(target - 1)].contains(B.coeffs)) {
            std::vector<int> witness;
            for (const BasisArg& a : args)
              witness.push_back((a.degree << 16) | a.index);
            throw BoundaryClaimViolated(
                n, md, witness,
                "summed term at arity " + std::to_string(n) + ", tuple " +
                    tuple_str(args) + " is not a boundary in degree " +
                    std::to_string(target - 1));
          }
          if (target <= top) {
            Vec val = k.s[static_cast<size_t>(target - 1)].apply(B.coeffs);
            if (!is_zero(val)) ln.add_basis(args, val);
          }
        });
        res.boundary_checks.push_back({n, md, true});
      }
    }
  }
  return res;
}

VerifyReport verify_structure(const ShLieStructure& S) {
  VerifyReport rep;
  const std::vector<int>& dims = S.cx.dims;
  const int max_arity = S.max_arity;
  auto has = [&](int a) { return a >= 1 && a <= max_arity; };

  // Vanishing claims on the stored supports.
  rep.vanishing.l2_high = true;
  if (has(2))
    for (const auto& md : S.map(2).support())
      if (md[0] + md[1] >= 2) rep.vanishing.l2_high = false;
  rep.vanishing.l3_pos = true;
  rep.vanishing.l3_nonzero_at_zero = false;
  if (has(3))
    for (const auto& md : S.map(3).support()) {
      if (md == std::vector<int>{0, 0, 0})
        rep.vanishing.l3_nonzero_at_zero = true;
      else
        rep.vanishing.l3_pos = false;
    }
  rep.vanishing.l4 = !has(4) || S.map(4).is_zero();
  rep.vanishing.l5 = !has(5) || S.map(5).is_zero();
  for (int a = max_arity + 1; a <= 5; ++a)
    rep.defects.warnings.push_back(
        "arity " + std::to_string(a) + " not built (max arity " +
        std::to_string(max_arity) + "): relation and vanishing unchecked");

  std::vector<const SkewGradedMap*> family = S.family();
  const size_t witness_cap = 10;
  for (int n = 1; n <= max_arity; ++n) {
    Rat worst;
    // Any total degree can in principle carry a nonzero term; the support
    // check below prunes degree tuples where every term is forced zero.
    const int max_sum = S.cx.max_degree() * n;
    for (int dtot = 0; dtot <= max_sum; ++dtot)
      for (const std::vector<int>& md : multidegrees(dims, n, dtot)) {
        bool active = false;
        for (int i = 1; i <= n && !active; ++i) {
          const int j = n + 1 - i;
          if (!has(i) || !has(j)) continue;
          active = split_active(md, S.map(i), S.map(j), i);
        }
        if (!active) continue;
        for_each_basis_tuple(dims, md, [&](const std::vector<BasisArg>& args) {
          Elt d = linfty_defect(family, tuple_elts(dims, args));
          Rat m = max_abs(d.coeffs);
          if (m > worst) worst = m;
          if (!d.is_zero() && rep.defects.witnesses.size() < witness_cap)
            rep.defects.witnesses.push_back({n, args, d});
        });
      }
    rep.defects.max_by_arity[n] = worst;
  }

  bool defects_zero = true;
  for (const auto& [a, m] : rep.defects.max_by_arity)
    if (!m.is_zero()) defects_zero = false;
  rep.pass = rep.vanishing.l2_high && rep.vanishing.l3_pos && rep.vanishing.l4 &&
             rep.vanishing.l5 && defects_zero;
  return rep;
}

Instance truncate(const Instance& inst) {
  if (inst.cx.dims.size() < 2)
    throw SpecInvalid("need degrees 0 and 1 to rebuild the tail");
  const int n0 = inst.cx.dim(0);
  const int n1 = inst.cx.dim(1);
  Subspace ker = kernel_basis(inst.cx.diff_at(1));
  Matrix incl = Matrix::zero(n1, ker.dim());
  for (int r = 0; r < ker.basis.rows; ++r) incl.set_column(r, ker.basis.row(r));

  Instance out;
  out.cx.dims = {n0, n1, ker.dim()};
  out.cx.diff = {Matrix::zero(0, n0), inst.cx.diff_at(1), std::move(incl)};
  out.cx.validate();
  out.l2tilde = SkewGradedMap(2, 0, out.cx.dims);
  for (const auto& [key, value] : inst.l2tilde.table())
    out.l2tilde.add_basis(unpack_tuple(key), value);
  return out;
}

}  // namespace shlie
