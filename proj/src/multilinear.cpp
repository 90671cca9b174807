#include "shlie/multilinear.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace shlie {

Elt zero_elt(const std::vector<int>& dims, int degree) {
  int d = (degree >= 0 && degree < static_cast<int>(dims.size()))
              ? dims[static_cast<size_t>(degree)]
              : 0;
  return Elt{degree, Vec(static_cast<size_t>(d))};
}

Elt basis_elt(const std::vector<int>& dims, int degree, int index) {
  Elt e = zero_elt(dims, degree);
  e.coeffs.at(static_cast<size_t>(index)) = Rat(1);
  return e;
}

void add_scaled(Elt& acc, const Rat& c, const Elt& x) {
  assert(acc.degree == x.degree);
  assert(acc.coeffs.size() == x.coeffs.size());
  if (c.is_zero()) return;
  for (size_t t = 0; t < acc.coeffs.size(); ++t) acc.coeffs[t] += c * x.coeffs[t];
}

int perm_parity(const std::vector<int>& perm) {
  int sign = 1;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

int koszul_sign(const std::vector<int>& perm, const std::vector<int>& degrees) {
  assert(perm.size() == degrees.size());
  int sign = 1;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j] &&
          (degrees[static_cast<size_t>(perm[i])] *
           degrees[static_cast<size_t>(perm[j])]) % 2 != 0)
        sign = -sign;
  return sign;
}

std::vector<Unshuffle> unshuffles(int i, int j) {
  assert(i >= 0 && j >= 0);
  const int n = i + j;
  std::vector<Unshuffle> out;
  std::vector<int> pick(static_cast<size_t>(i));
  for (int t = 0; t < i; ++t) pick[static_cast<size_t>(t)] = t;
  while (true) {
    Unshuffle u;
    u.perm.reserve(static_cast<size_t>(n));
    std::vector<bool> used(static_cast<size_t>(n), false);
    int moves = 0;
    for (int t = 0; t < i; ++t) {
      u.perm.push_back(pick[static_cast<size_t>(t)]);
      used[static_cast<size_t>(pick[static_cast<size_t>(t)])] = true;
      moves += pick[static_cast<size_t>(t)] - t;  // positions jumped over
    }
    for (int v = 0; v < n; ++v)
      if (!used[static_cast<size_t>(v)]) u.perm.push_back(v);
    u.parity = (moves % 2 == 0) ? 1 : -1;
    out.push_back(std::move(u));
    // Next lexicographic i-subset of {0..n-1}.
    int t = i - 1;
    while (t >= 0 && pick[static_cast<size_t>(t)] == n - i + t) --t;
    if (t < 0) break;
    ++pick[static_cast<size_t>(t)];
    for (int r = t + 1; r < i; ++r)
      pick[static_cast<size_t>(r)] = pick[static_cast<size_t>(r - 1)] + 1;
  }
  return out;
}

uint16_t pack_key(int degree, int index) {
  if (degree < 0 || degree >= 64 || index < 0 || index >= 1024)
    throw DegreeOverflow("basis slot (degree " + std::to_string(degree) +
                         ", index " + std::to_string(index) +
                         ") exceeds the packed-key range");
  return static_cast<uint16_t>((degree << 10) | index);
}

namespace {

// Sorts args by (degree, index) and returns the reordering sign
// (parity * graded correction), or 0 when an even-degree slot repeats.
int canonicalize(std::vector<BasisArg>& args) {
  int sign = 1;
  // Insertion sort; each adjacent swap contributes -1 * (-1)^{ab}.
  for (size_t i = 1; i < args.size(); ++i)
    for (size_t t = i; t > 0; --t) {
      const BasisArg& lo = args[t - 1];
      const BasisArg& hi = args[t];
      if (lo.degree < hi.degree ||
          (lo.degree == hi.degree && lo.index <= hi.index))
        break;
      sign = -sign;
      if ((lo.degree * hi.degree) % 2 != 0) sign = -sign;
      std::swap(args[t - 1], args[t]);
    }
  for (size_t t = 1; t < args.size(); ++t)
    if (args[t] == args[t - 1] && args[t].degree % 2 == 0) return 0;
  return sign;
}

std::vector<uint16_t> key_of(const std::vector<BasisArg>& sorted_args) {
  std::vector<uint16_t> key;
  key.reserve(sorted_args.size());
  for (const BasisArg& a : sorted_args) key.push_back(pack_key(a.degree, a.index));
  return key;
}

}  // namespace

int SkewGradedMap::out_degree(const std::vector<BasisArg>& args) const {
  int d = map_degree;
  for (const BasisArg& a : args) d += a.degree;
  return d;
}

void SkewGradedMap::add_basis(const std::vector<BasisArg>& args, const Vec& value) {
  if (static_cast<int>(args.size()) != arity)
    throw std::invalid_argument("tuple size does not match the map arity");
  std::vector<BasisArg> sorted = args;
  int sign = canonicalize(sorted);
  if (sign == 0)
    throw std::invalid_argument("tuple repeats an even-degree basis vector");
  const int target = out_degree(sorted);
  if (static_cast<int>(value.size()) != dim(target))
    throw std::invalid_argument("value has the wrong dimension for degree " +
                                std::to_string(target));
  if (shlie::is_zero(value)) return;
  std::vector<uint16_t> key = key_of(sorted);
  Vec& slot = values_.try_emplace(std::move(key), Vec(value.size())).first->second;
  for (size_t t = 0; t < value.size(); ++t)
    slot[t] += Rat(sign) * value[t];
  if (shlie::is_zero(slot)) {
    values_.erase(key_of(sorted));
    // Rebuild the support set: another entry may still cover this tuple.
    populated_.clear();
    for (const auto& [k, v] : values_) {
      std::vector<int> md;
      md.reserve(k.size());
      for (uint16_t p : k) md.push_back(p >> 10);
      populated_.insert(std::move(md));
    }
    return;
  }
  std::vector<int> md;
  md.reserve(sorted.size());
  for (const BasisArg& a : sorted) md.push_back(a.degree);
  populated_.insert(std::move(md));
}

Elt SkewGradedMap::eval_basis(const std::vector<BasisArg>& args) const {
  assert(static_cast<int>(args.size()) == arity);
  std::vector<BasisArg> sorted = args;
  int sign = canonicalize(sorted);
  Elt out = zero_elt(dims, out_degree(sorted));
  if (sign == 0) return out;
  auto it = values_.find(key_of(sorted));
  if (it == values_.end()) return out;
  for (size_t t = 0; t < it->second.size(); ++t)
    out.coeffs[t] = Rat(sign) * it->second[t];
  return out;
}

Elt SkewGradedMap::eval(const std::vector<Elt>& args) const {
  assert(static_cast<int>(args.size()) == arity);
  int target = map_degree;
  std::vector<int> md;
  md.reserve(args.size());
  for (const Elt& a : args) {
    target += a.degree;
    md.push_back(a.degree);
  }
  Elt acc = zero_elt(dims, target);
  if (acc.coeffs.empty()) return acc;
  std::sort(md.begin(), md.end());
  if (populated_.find(md) == populated_.end()) return acc;

  std::vector<BasisArg> slot(args.size());
  Rat coeff;
  // Depth-first expansion over nonzero coordinates of each argument.
  auto expand = [&](auto&& self, size_t pos, const Rat& c) -> void {
    if (pos == args.size()) {
      Elt term = eval_basis(slot);
      add_scaled(acc, c, term);
      return;
    }
    const Elt& a = args[pos];
    for (size_t t = 0; t < a.coeffs.size(); ++t) {
      if (a.coeffs[t].is_zero()) continue;
      slot[pos] = BasisArg{a.degree, static_cast<int>(t)};
      self(self, pos + 1, c * a.coeffs[t]);
    }
  };
  expand(expand, 0, Rat(1));
  return acc;
}

SkewGradedMap differential_map(const ChainComplex& cc) {
  SkewGradedMap l1(1, -1, cc.dims);
  for (int n = 1; n <= cc.max_degree(); ++n) {
    const Matrix d = cc.diff_at(n);
    for (int c = 0; c < d.cols; ++c) l1.add_basis({{n, c}}, d.column(c));
  }
  return l1;
}

Elt compose_unshuffled(const SkewGradedMap& outer, const SkewGradedMap& inner,
                       const std::vector<Elt>& args) {
  const int i = inner.arity;
  const int j = outer.arity;
  const int n = static_cast<int>(args.size());
  assert(n == i + j - 1);

  std::vector<int> degrees(args.size());
  int total = 0;
  for (size_t t = 0; t < args.size(); ++t) {
    degrees[t] = args[t].degree;
    total += args[t].degree;
  }
  Elt acc = zero_elt(outer.dims, total + inner.map_degree + outer.map_degree);
  if (acc.coeffs.empty()) return acc;

  std::vector<Elt> inner_args(static_cast<size_t>(i));
  std::vector<Elt> outer_args(static_cast<size_t>(j));
  for (const Unshuffle& u : unshuffles(i, n - i)) {
    // Prune: the inner block's degree tuple must meet the inner support.
    std::vector<int> inner_md(static_cast<size_t>(i));
    for (int t = 0; t < i; ++t)
      inner_md[static_cast<size_t>(t)] = degrees[static_cast<size_t>(u.perm[static_cast<size_t>(t)])];
    std::sort(inner_md.begin(), inner_md.end());
    if (inner.support().find(inner_md) == inner.support().end()) continue;

    int sign = u.parity * koszul_sign(u.perm, degrees);
    for (int t = 0; t < i; ++t)
      inner_args[static_cast<size_t>(t)] = args[static_cast<size_t>(u.perm[static_cast<size_t>(t)])];
    Elt mid = inner.eval(inner_args);
    if (mid.is_zero()) continue;
    outer_args[0] = std::move(mid);
    for (int t = i; t < n; ++t)
      outer_args[static_cast<size_t>(t - i + 1)] = args[static_cast<size_t>(u.perm[static_cast<size_t>(t)])];
    add_scaled(acc, Rat(sign), outer.eval(outer_args));
  }
  return acc;
}

int relation_sign(int inner_arity, int outer_arity) {
  return (inner_arity * (outer_arity - 1)) % 2 == 0 ? 1 : -1;
}

Elt linfty_defect(const std::vector<const SkewGradedMap*>& maps_by_arity,
                  const std::vector<Elt>& args) {
  const int n = static_cast<int>(args.size());
  const std::vector<int>* dims = nullptr;
  for (const SkewGradedMap* m : maps_by_arity)
    if (m != nullptr) {
      dims = &m->dims;
      break;
    }
  assert(dims != nullptr && "need at least one map to know the grading");
  int total = 0;
  for (const Elt& a : args) total += a.degree;
  Elt acc = zero_elt(*dims, total + n - 3);

  auto map_at = [&](int a) -> const SkewGradedMap* {
    return (a >= 1 && a < static_cast<int>(maps_by_arity.size()))
               ? maps_by_arity[static_cast<size_t>(a)]
               : nullptr;
  };
  for (int i = 1; i <= n; ++i) {
    const int j = n + 1 - i;
    const SkewGradedMap* li = map_at(i);
    const SkewGradedMap* lj = map_at(j);
    if (li == nullptr || lj == nullptr || li->is_zero() || lj->is_zero())
      continue;
    assert(li->arity == i && lj->arity == j);
    Elt term = compose_unshuffled(*lj, *li, args);
    if (!acc.coeffs.empty())
      add_scaled(acc, Rat(relation_sign(i, j)), term);
  }
  return acc;
}

}  // namespace shlie
