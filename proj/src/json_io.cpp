#include "shlie/json_io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "shlie/errors.hpp"
#include "shlie/multilinear.hpp"

namespace shlie {

namespace {

std::string join_path(const std::string& base, const std::string& key) {
  return base + "." + key;
}

std::string index_path(const std::string& base, size_t i) {
  return base + "[" + std::to_string(i) + "]";
}

int to_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer())
    throw SchemaError(path, "expected an integer");
  return j.get<int>();
}

bool to_bool_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

int key_to_int(const std::string& key, const std::string& path) {
  if (!to_bool_digits(key))
    throw SchemaError(path, "expected a decimal-string key");
  return std::stoi(key);
}

Rat to_rat(const Json& j, const std::string& path) {
  if (!j.is_string())
    throw SchemaError(path, "expected a rational string \"p\" or \"p/q\"");
  try {
    return Rat::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(path, e.what());
  }
}

Vec to_vec(const Json& j, int expected_len, const std::string& path) {
  if (!j.is_array())
    throw SchemaError(path, "expected an array of rational strings");
  if (static_cast<int>(j.size()) != expected_len)
    throw SchemaError(path, "expected " + std::to_string(expected_len) +
                                " entries, found " + std::to_string(j.size()));
  Vec v;
  for (size_t i = 0; i < j.size(); ++i)
    v.push_back(to_rat(j[i], index_path(path, i)));
  return v;
}

Json vec_to_json(const Vec& v) {
  Json out = Json::array();
  for (const Rat& r : v) out.push_back(r.str());
  return out;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows; ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols; ++c) row.push_back(m.at(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

void require_object(const Json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
}

const Json& require_key(const Json& j, const std::string& key,
                        const std::string& path) {
  auto it = j.find(key);
  if (it == j.end())
    throw SchemaError(path, "missing required key \"" + key + "\"");
  return *it;
}

void reject_unknown_keys(const Json& j, const std::set<std::string>& known,
                         const std::string& path) {
  for (const auto& [key, value] : j.items())
    if (known.find(key) == known.end())
      throw SchemaError(join_path(path, key), "unknown key \"" + key + "\"");
}

Json parse_bytes(const std::string& bytes) {
  try {
    return Json::parse(bytes);
  } catch (const Json::parse_error& e) {
    throw SchemaError("$", e.what());
  }
}

}  // namespace

Json complex_to_json(const ChainComplex& cc) {
  Json dims = Json::object();
  for (int n = 0; n <= cc.max_degree(); ++n)
    dims[std::to_string(n)] = cc.dim(n);
  Json diff = Json::object();
  for (int n = 1; n <= cc.max_degree(); ++n)
    diff[std::to_string(n)] = matrix_to_json(cc.diff[static_cast<size_t>(n)]);
  return Json{{"dims", dims}, {"diff", diff}};
}

ChainComplex complex_from_json(const Json& j, const std::string& path) {
  require_object(j, path);
  const Json& jdims = require_key(j, "dims", path);
  require_object(jdims, join_path(path, "dims"));
  const Json& jdiff = require_key(j, "diff", path);
  require_object(jdiff, join_path(path, "diff"));

  int top = 0;
  std::map<int, int> dim_by_degree;
  for (const auto& [key, value] : jdims.items()) {
    std::string p = join_path(join_path(path, "dims"), key);
    int n = key_to_int(key, p);
    int d = to_int(value, p);
    if (d < 0) throw SchemaError(p, "dimension is negative");
    dim_by_degree[n] = d;
    top = std::max(top, n);
  }
  for (const auto& [key, value] : jdiff.items())
    top = std::max(top,
                   key_to_int(key, join_path(join_path(path, "diff"), key)));

  ChainComplex cc;
  cc.dims.assign(static_cast<size_t>(top) + 1, 0);
  for (const auto& [n, d] : dim_by_degree) cc.dims[static_cast<size_t>(n)] = d;

  cc.diff.assign(static_cast<size_t>(top) + 1, Matrix());
  cc.diff[0] = Matrix::zero(0, cc.dims[0]);
  for (int n = 1; n <= top; ++n)
    cc.diff[static_cast<size_t>(n)] =
        Matrix::zero(cc.dim(n - 1), cc.dim(n));
  for (const auto& [key, value] : jdiff.items()) {
    std::string p = join_path(join_path(path, "diff"), key);
    int n = key_to_int(key, p);
    if (n < 1) throw SchemaError(p, "differential degrees start at 1");
    if (!value.is_array())
      throw SchemaError(p, "expected a row-major array of rows");
    int rows = cc.dim(n - 1), cols = cc.dim(n);
    if (static_cast<int>(value.size()) != rows)
      throw SchemaError(p, "expected " + std::to_string(rows) +
                               " rows, found " + std::to_string(value.size()));
    Matrix m = Matrix::zero(rows, cols);
    for (int r = 0; r < rows; ++r) {
      Vec row = to_vec(value[static_cast<size_t>(r)], cols,
                       index_path(p, static_cast<size_t>(r)));
      for (int c = 0; c < cols; ++c) m.at(r, c) = row[static_cast<size_t>(c)];
    }
    cc.diff[static_cast<size_t>(n)] = m;
  }
  cc.validate();
  return cc;
}

std::string save_instance(const Instance& inst) {
  Json j = complex_to_json(inst.cx);
  Json table = Json::array();
  for (const auto& [key, value] : inst.l2tilde.table()) {
    Json entry;
    entry["i"] = key[0] & 1023;
    entry["j"] = key[1] & 1023;
    entry["value"] = vec_to_json(value);
    table.push_back(entry);
  }
  j["l2tilde"] = table;
  return j.dump(2) + "\n";
}

Instance load_instance(const std::string& bytes) {
  Json j = parse_bytes(bytes);
  require_object(j, "$");
  reject_unknown_keys(j, {"dims", "diff", "l2tilde"}, "$");

  Instance inst;
  inst.cx = complex_from_json(j, "$");
  const Json& table = require_key(j, "l2tilde", "$");
  if (!table.is_array()) throw SchemaError("$.l2tilde", "expected an array");
  inst.l2tilde = SkewGradedMap(2, 0, inst.cx.dims);
  const int n0 = inst.cx.dim(0);
  for (size_t t = 0; t < table.size(); ++t) {
    std::string p = index_path("$.l2tilde", t);
    require_object(table[t], p);
    reject_unknown_keys(table[t], {"i", "j", "value"}, p);
    int i = to_int(require_key(table[t], "i", p), join_path(p, "i"));
    int jj = to_int(require_key(table[t], "j", p), join_path(p, "j"));
    if (i < 0 || jj <= i || jj >= n0)
      throw SchemaError(p, "indices (" + std::to_string(i) + "," +
                               std::to_string(jj) +
                               ") violate 0 <= i < j < " + std::to_string(n0));
    Vec v = to_vec(require_key(table[t], "value", p), n0, join_path(p, "value"));
    inst.l2tilde.add_basis({{0, i}, {0, jj}}, v);
  }
  inst.validate();
  return inst;
}

namespace {

std::string degree_key(const std::vector<uint16_t>& packed) {
  std::string out;
  for (size_t t = 0; t < packed.size(); ++t) {
    if (t) out += ",";
    out += std::to_string(packed[t] >> 10);
  }
  return out;
}

}  // namespace

std::string save_structure(const ShLieStructure& S) {
  Json maps = Json::object();
  for (int a = 2; a <= S.max_arity; ++a) {
    const SkewGradedMap& m = S.map(a);
    if (m.is_zero()) continue;
    Json by_degrees = Json::object();
    for (const auto& [key, value] : m.table()) {
      Json entry;
      Json args = Json::array();
      for (uint16_t k : key) args.push_back(k & 1023);
      entry["args"] = args;
      entry["value"] = vec_to_json(value);
      by_degrees[degree_key(key)].push_back(entry);
    }
    maps[std::to_string(a)] = by_degrees;
  }
  Json j{{"complex", complex_to_json(S.cx)},
         {"max_arity", S.max_arity},
         {"structure", maps}};
  return j.dump(2) + "\n";
}

ShLieStructure load_structure(const std::string& bytes) {
  Json j = parse_bytes(bytes);
  require_object(j, "$");
  for (const char* key : {"complex", "max_arity", "structure"})
    require_key(j, key, "$");
  reject_unknown_keys(j, {"complex", "max_arity", "structure"}, "$");

  ShLieStructure S;
  S.cx = complex_from_json(require_key(j, "complex", "$"), "$.complex");
  S.max_arity = to_int(require_key(j, "max_arity", "$"), "$.max_arity");
  if (S.max_arity < 1)
    throw SchemaError("$.max_arity", "must be at least 1");
  S.maps.assign(static_cast<size_t>(S.max_arity) + 1, SkewGradedMap());
  S.maps[1] = differential_map(S.cx);
  for (int a = 2; a <= S.max_arity; ++a)
    S.maps[static_cast<size_t>(a)] = SkewGradedMap(a, a - 2, S.cx.dims);

  const Json& maps = require_key(j, "structure", "$");
  require_object(maps, "$.structure");
  for (const auto& [akey, by_degrees] : maps.items()) {
    std::string ap = join_path("$.structure", akey);
    int a = key_to_int(akey, ap);
    if (a < 2 || a > S.max_arity)
      throw SchemaError(ap, "arity must lie in [2, max_arity]");
    require_object(by_degrees, ap);
    for (const auto& [dkey, entries] : by_degrees.items()) {
      std::string dp = join_path(ap, dkey);
      // Parse the comma-joined degree tuple.
      std::vector<int> degrees;
      size_t pos = 0;
      while (pos <= dkey.size()) {
        size_t comma = dkey.find(',', pos);
        std::string piece = dkey.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        degrees.push_back(key_to_int(piece, dp));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      if (static_cast<int>(degrees.size()) != a)
        throw SchemaError(dp, "degree tuple length does not match the arity");
      if (!std::is_sorted(degrees.begin(), degrees.end()))
        throw SchemaError(dp, "degree tuple must be ascending");
      if (!entries.is_array())
        throw SchemaError(dp, "expected an array of entries");
      int target = a - 2;
      for (int d : degrees) target += d;
      for (size_t t = 0; t < entries.size(); ++t) {
        std::string ep = index_path(dp, t);
        require_object(entries[t], ep);
        reject_unknown_keys(entries[t], {"args", "value"}, ep);
        const Json& jargs = require_key(entries[t], "args", ep);
        if (!jargs.is_array() || static_cast<int>(jargs.size()) != a)
          throw SchemaError(join_path(ep, "args"),
                            "expected " + std::to_string(a) + " indices");
        std::vector<BasisArg> args;
        for (size_t q = 0; q < jargs.size(); ++q) {
          int idx = to_int(jargs[q], index_path(join_path(ep, "args"), q));
          int deg = degrees[q];
          if (idx < 0 || idx >= S.cx.dim(deg))
            throw SchemaError(index_path(join_path(ep, "args"), q),
                              "index outside degree " + std::to_string(deg));
          args.push_back({deg, idx});
        }
        Vec v = to_vec(require_key(entries[t], "value", ep),
                       S.cx.dim(target), join_path(ep, "value"));
        S.mutable_map(a).add_basis(args, v);
      }
    }
  }
  return S;
}

Json conditions_to_json(const ConditionsReport& rep) {
  Json fi = Json::array();
  for (const auto& w : rep.fails_i)
    fi.push_back(Json{{"cycle_index", w.cycle_index},
                      {"boundary_index", w.boundary_index},
                      {"value", vec_to_json(w.value)}});
  auto triples = [](const std::vector<ConditionsReport::TripleWitness>& ws) {
    Json out = Json::array();
    for (const auto& w : ws)
      out.push_back(Json{{"args", Json::array({w.args[0], w.args[1], w.args[2]})},
                         {"value", vec_to_json(w.value)}});
    return out;
  };
  return Json{{"pass", rep.pass()},
              {"checked_pairs", rep.checked_pairs},
              {"checked_triples", rep.checked_triples},
              {"failures_i", fi},
              {"failures_ii", triples(rep.fails_ii)},
              {"nontrivial_jacobiator", triples(rep.nontrivial_jacobiator)}};
}

namespace {

Json vanishing_to_json(const VanishingReport& t) {
  return Json{{"l2_high", t.l2_high},
              {"l3_pos", t.l3_pos},
              {"l4", t.l4},
              {"l5", t.l5},
              {"l3_nonzero_at_zero", t.l3_nonzero_at_zero}};
}

Json defects_to_json(const DefectSweep& d) {
  Json by_arity = Json::object();
  for (const auto& [arity, worst] : d.max_by_arity)
    by_arity[std::to_string(arity)] = worst.str();
  return by_arity;
}

Json witnesses_to_json(const DefectSweep& d) {
  Json out = Json::array();
  for (const auto& w : d.witnesses) {
    Json args = Json::array();
    for (const BasisArg& a : w.args)
      args.push_back(Json{{"degree", a.degree}, {"index", a.index}});
    out.push_back(Json{{"arity", w.arity},
                       {"args", args},
                       {"defect_degree", w.defect.degree},
                       {"defect", vec_to_json(w.defect.coeffs)}});
  }
  return out;
}

}  // namespace

Json verify_report_to_json(const VerifyReport& rep) {
  return Json{{"vanishing", vanishing_to_json(rep.vanishing)},
              {"max_defect_by_arity", defects_to_json(rep.defects)},
              {"witnesses", witnesses_to_json(rep.defects)},
              {"warnings", rep.defects.warnings},
              {"pass", rep.pass}};
}

Json build_report_to_json(const ExtendResult& er, const VerifyReport& vr) {
  Json checks = Json::array();
  for (const auto& c : er.boundary_checks) {
    Json md = Json::array();
    for (int d : c.multidegree) md.push_back(d);
    checks.push_back(
        Json{{"arity", c.arity}, {"multidegree", md}, {"pass", c.pass}});
  }
  return Json{{"conditions", conditions_to_json(er.conditions)},
              {"boundary_checks", checks},
              {"vanishing", vanishing_to_json(vr.vanishing)},
              {"max_defect_by_arity", defects_to_json(vr.defects)}};
}

Json geo_report_to_json(const GeoReport& rep) {
  Json checks = Json::object();
  for (const auto& c : rep.checks)
    checks[c.name] = Json{
        {"checked", c.checked}, {"failed", c.failed}, {"pass", c.pass()}};
  return Json{{"which", rep.which},     {"samples", rep.samples},
              {"seed", rep.seed},       {"max_freq", rep.max_freq},
              {"checks", checks},       {"pass", rep.pass()}};
}

}  // namespace shlie
