#include "bhh/cli/config.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include "bhh/hopf/catalog.hpp"

namespace bhh {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw ConfigError(what); }

const json& need(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(where + ": missing '" + key + "'");
  return j.at(key);
}

mpz_class to_mpz(const json& v, const std::string& where) {
  if (v.is_number_integer()) return mpz_class(v.get<long>());
  if (v.is_string()) {
    mpz_class z;
    if (z.set_str(v.get<std::string>(), 10) == 0) return z;
  }
  fail(where + ": expected an integer");
}

json from_mpz(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Scalar make_scalar(const FieldSpec& f, const mpz_class& n, const mpz_class& d, const std::string& where) {
  try {
    return Scalar(f, n, d);
  } catch (const Error& e) {
    fail(where + ": " + e.what());
  }
}

// "a", "a/b" or an integer
Scalar parse_scalar(const FieldSpec& f, const json& v, const std::string& where) {
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    auto slash = s.find('/');
    mpz_class n, d = 1;
    if (n.set_str(s.substr(0, slash), 10) != 0 || (slash != std::string::npos && d.set_str(s.substr(slash + 1), 10) != 0))
      fail(where + ": bad scalar '" + s + "'");
    return make_scalar(f, n, d, where);
  }
  return make_scalar(f, to_mpz(v, where), 1, where);
}

std::string scalar_text(const Scalar& s) { return s.str(); }

std::size_t index_in(const json& v, std::size_t bound, const std::string& where) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long>() >= 0)) fail(where + ": expected an index");
  auto i = v.get<std::size_t>();
  if (i >= bound) fail(where + ": index " + std::to_string(i) + " out of range (< " + std::to_string(bound) + ")");
  return i;
}

// [[idx..., num, den], ...] with `arity` indices into the given bounds
Matrix parse_triplets(const FieldSpec& f, const json& j, const std::vector<std::size_t>& bounds, std::size_t rows,
                      std::size_t cols, const std::function<std::pair<std::size_t, std::size_t>(const std::vector<std::size_t>&)>& place,
                      const std::string& where) {
  if (!j.is_array()) fail(where + ": expected an array of triplets");
  std::vector<Triplet> t;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != bounds.size() + 2) fail(where + ": entries need " + std::to_string(bounds.size() + 2) + " fields");
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < bounds.size(); ++k) idx.push_back(index_in(e[k], bounds[k], where));
    auto [r, c] = place(idx);
    t.push_back({r, c, make_scalar(f, to_mpz(e[bounds.size()], where), to_mpz(e[bounds.size() + 1], where), where)});
  }
  // repeated entries add up
  return Matrix::from_triplets(f, rows, cols, std::move(t));
}

Vec parse_vector(const FieldSpec& f, const json& j, std::size_t n, const std::string& where) {
  auto m = parse_triplets(f, j, {n}, n, 1, [](const std::vector<std::size_t>& i) { return std::make_pair(i[0], std::size_t{0}); }, where);
  return m.dense_column(0);
}

// sorted [idx..., num, den] entries of m, with the indices recovered by `unplace`
json dump_triplets(const Matrix& m, const std::function<std::vector<std::size_t>(std::size_t, std::size_t)>& unplace) {
  std::vector<std::pair<std::vector<std::size_t>, Scalar>> entries;
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& e : m.column(c)) entries.push_back({unplace(e.index, c), e.value});
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  json out = json::array();
  for (const auto& [idx, v] : entries) {
    json row = json::array();
    for (auto i : idx) row.push_back(i);
    row.push_back(from_mpz(v.numerator()));
    row.push_back(from_mpz(v.denominator()));
    out.push_back(row);
  }
  return out;
}

json dump_vector(const Vec& v) {
  return dump_triplets(Matrix::column_vector(v), [](std::size_t r, std::size_t) { return std::vector<std::size_t>{r}; });
}

json dump_algebra(const Algebra& a) {
  std::size_t d = a.dim;
  return {{"dim", d},
          {"mult", dump_triplets(a.mult, [d](std::size_t r, std::size_t c) { return std::vector<std::size_t>{c / d, c % d, r}; })},
          {"unit", dump_vector(a.unit)},
          {"labels", a.labels}};
}

std::vector<std::string> parse_labels(const json& j, std::size_t n, const std::string& prefix, const std::string& where) {
  std::vector<std::string> l;
  if (j.contains("labels")) {
    try {
      l = j.at("labels").get<std::vector<std::string>>();
    } catch (const json::exception&) {
      fail(where + ".labels: expected strings");
    }
    if (l.size() != n) fail(where + ".labels: expected " + std::to_string(n));
    return l;
  }
  for (std::size_t i = 0; i < n; ++i) l.push_back(prefix + std::to_string(i));
  return l;
}

Algebra parse_algebra(const FieldSpec& f, const json& j) {
  Algebra a;
  a.field = f;
  a.dim = index_in(need(j, "dim", "algebra"), 1 << 20, "algebra.dim");
  if (a.dim == 0) fail("algebra.dim must be positive");
  std::size_t d = a.dim;
  a.mult = parse_triplets(f, need(j, "mult", "algebra"), {d, d, d}, d, d * d,
                          [d](const std::vector<std::size_t>& i) { return std::make_pair(i[2], i[0] * d + i[1]); }, "algebra.mult");
  a.unit = parse_vector(f, need(j, "unit", "algebra"), d, "algebra.unit");
  a.labels = parse_labels(j, d, "a", "algebra");
  auto rep = check_algebra(a);
  if (!rep.ok()) fail("algebra: " + rep.summary());
  return a;
}

json dump_hopf(const FinHopf& h) {
  std::size_t d = h.dim;
  return {{"dim", d},
          {"mult", dump_triplets(h.mult, [d](std::size_t r, std::size_t c) { return std::vector<std::size_t>{c / d, c % d, r}; })},
          {"unit", dump_vector(h.unit)},
          {"comult", dump_triplets(h.comult, [d](std::size_t r, std::size_t c) { return std::vector<std::size_t>{c, r / d, r % d}; })},
          {"counit", dump_triplets(h.counit, [](std::size_t, std::size_t c) { return std::vector<std::size_t>{c}; })},
          {"antipode", dump_triplets(h.antipode, [](std::size_t r, std::size_t c) { return std::vector<std::size_t>{c, r}; })},
          {"labels", h.labels}};
}

FinHopf parse_hopf(const FieldSpec& f, const json& j) {
  FinHopf h;
  h.field = f;
  h.dim = index_in(need(j, "dim", "hopf"), 1 << 12, "hopf.dim");
  if (h.dim == 0) fail("hopf.dim must be positive");
  std::size_t d = h.dim;
  h.mult = parse_triplets(f, need(j, "mult", "hopf"), {d, d, d}, d, d * d,
                          [d](const std::vector<std::size_t>& i) { return std::make_pair(i[2], i[0] * d + i[1]); }, "hopf.mult");
  h.unit = parse_vector(f, need(j, "unit", "hopf"), d, "hopf.unit");
  h.comult = parse_triplets(f, need(j, "comult", "hopf"), {d, d, d}, d * d, d,
                            [d](const std::vector<std::size_t>& i) { return std::make_pair(i[1] * d + i[2], i[0]); }, "hopf.comult");
  h.counit = parse_triplets(f, need(j, "counit", "hopf"), {d}, 1, d,
                            [](const std::vector<std::size_t>& i) { return std::make_pair(std::size_t{0}, i[0]); }, "hopf.counit");
  h.antipode = parse_triplets(f, need(j, "antipode", "hopf"), {d, d}, d, d,
                              [](const std::vector<std::size_t>& i) { return std::make_pair(i[1], i[0]); }, "hopf.antipode");
  h.labels = parse_labels(j, d, "e", "hopf");
  try {
    h.finalize();
  } catch (const Error& e) {
    fail(std::string("hopf: ") + e.what());
  }
  auto rep = check_hopf_axioms(h);
  if (!rep.ok()) fail("hopf: " + rep.summary());
  return h;
}

std::vector<std::string> parse_names(const json& j, const std::vector<std::string>& known, const std::string& where) {
  if (!j.is_array()) fail(where + ": expected an array of names");
  std::vector<std::string> r;
  for (const auto& v : j) {
    if (!v.is_string()) fail(where + ": expected names");
    auto s = v.get<std::string>();
    if (std::find(known.begin(), known.end(), s) == known.end()) fail(where + ": unknown '" + s + "'");
    r.push_back(s);
  }
  return r;
}

FieldSpec parse_field(const json& j) {
  if (!j.is_string()) fail("field: expected \"Q\" or \"F<p>\"");
  auto s = j.get<std::string>();
  if (s == "Q") return FieldSpec::rationals();
  if (s.size() > 1 && s[0] == 'F' && std::all_of(s.begin() + 1, s.end(), ::isdigit)) {
    auto p = std::stoull(s.substr(1));
    if (!is_prime(p)) fail("field: " + std::to_string(p) + " is not prime");
    return FieldSpec::prime(p);
  }
  fail("field: expected \"Q\" or \"F<p>\", got '" + s + "'");
}

std::size_t parse_count(const json& j, const char* key, std::size_t dflt, std::size_t min) {
  if (!j.contains(key)) return dflt;
  const auto& v = j.at(key);
  if (!v.is_number_integer() || v.get<long>() < static_cast<long>(min))
    fail(std::string(key) + ": expected an integer >= " + std::to_string(min));
  return v.get<std::size_t>();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> s{"structure", "complex",    "relative",   "cup",  "maurer-cartan", "ring",
                                          "comparison", "normalized", "crossed-product", "twist"};
  return s;
}

const std::vector<std::string>& complex_names() {
  static const std::vector<std::string> s{"braided", "relative", "classical", "normalized", "invariant", "crossed"};
  return s;
}

JobConfig parse_config(const json& doc) {
  if (!doc.is_object()) fail("config must be an object");
  static const std::vector<std::string> keys{"name",       "description", "field",  "group",    "hopf",      "algebra", "action",
                                             "twist",      "max_degree",  "max_columns", "seed", "suites", "complexes"};
  for (const auto& [k, v] : doc.items())
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) fail("unknown key '" + k + "'");

  JobConfig c;
  c.name = doc.value("name", std::string("unnamed"));
  c.description = doc.value("description", std::string());
  c.field = parse_field(need(doc, "field", "config"));
  const FieldSpec& f = c.field;

  if (doc.contains("group") == doc.contains("hopf")) fail("config needs exactly one of 'group' and 'hopf'");
  if (doc.contains("group")) {
    const auto& g = doc.at("group");
    try {
      auto table = need(g, "table", "group").get<std::vector<std::vector<std::size_t>>>();
      std::vector<std::string> labels = g.value("labels", std::vector<std::string>{});
      if (!labels.empty() && labels.size() != table.size()) fail("group.labels: wrong length");
      c.group = GroupTable(table, labels);
    } catch (const json::exception& e) {
      fail(std::string("group: ") + e.what());
    } catch (const ConfigError&) {
      throw;
    } catch (const Error& e) {
      fail(std::string("group: ") + e.what());
    }
    c.E = group_algebra(*c.group, f);
  } else {
    c.E = parse_hopf(f, doc.at("hopf"));
  }

  c.A.alg = parse_algebra(f, need(doc, "algebra", "config"));
  std::size_t da = c.A.alg.dim;
  c.A.action = HModule{f, da, {}};
  if (doc.contains("action")) {
    const auto& act = doc.at("action");
    if (!act.is_array() || act.size() != c.E.dim)
      fail("action: expected one matrix per basis element of E (" + std::to_string(c.E.dim) + ")");
    for (std::size_t i = 0; i < act.size(); ++i)
      c.A.action.rho.push_back(parse_triplets(f, act[i], {da, da}, da, da,
                                              [](const std::vector<std::size_t>& x) { return std::make_pair(x[0], x[1]); },
                                              "action[" + std::to_string(i) + "]"));
  } else {
    c.A = trivial_module_algebra(c.E, c.A.alg);
  }
  auto mrep = check_module(c.E, c.A.action);
  if (!mrep.ok()) fail("action: " + mrep.summary());

  if (doc.contains("twist")) {
    if (!c.group) fail("twist: needs a group");
    const auto& t = need(doc.at("twist"), "alpha", "twist");
    std::size_t n = c.group->order();
    if (!t.is_array() || t.size() != n) fail("twist.alpha: expected a " + std::to_string(n) + "x" + std::to_string(n) + " table");
    std::vector<std::vector<Scalar>> alpha;
    for (const auto& row : t) {
      if (!row.is_array() || row.size() != n) fail("twist.alpha: rows must have length " + std::to_string(n));
      alpha.emplace_back();
      for (const auto& v : row) alpha.back().push_back(parse_scalar(f, v, "twist.alpha"));
    }
    c.twist = alpha;
  }

  c.max_degree = parse_count(doc, "max_degree", 4, 1);
  c.max_columns = parse_count(doc, "max_columns", 10000, 1);
  c.seed = parse_count(doc, "seed", 1, 0);
  if (doc.contains("suites")) c.suites = parse_names(doc.at("suites"), suite_names(), "suites");
  if (doc.contains("complexes")) c.complexes = parse_names(doc.at("complexes"), complex_names(), "complexes");
  return c;
}

JobConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot read config '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    fail("config '" + path + "': " + e.what());
  }
  return parse_config(doc);
}

json config_to_json(const JobConfig& c) {
  json j;
  j["name"] = c.name;
  j["description"] = c.description;
  j["field"] = c.field.name();
  if (c.group) {
    j["group"] = {{"table", c.group->table()}, {"labels", c.group->labels()}};
  } else {
    j["hopf"] = dump_hopf(c.E);
  }
  j["algebra"] = dump_algebra(c.A.alg);
  json act = json::array();
  for (const auto& m : c.A.action.rho)
    act.push_back(dump_triplets(m, [](std::size_t r, std::size_t col) { return std::vector<std::size_t>{r, col}; }));
  j["action"] = act;
  if (c.twist) {
    json alpha = json::array();
    for (const auto& row : *c.twist) {
      json r = json::array();
      for (const auto& s : row) r.push_back(scalar_text(s));
      alpha.push_back(r);
    }
    j["twist"] = {{"alpha", alpha}};
  }
  j["max_degree"] = c.max_degree;
  j["max_columns"] = c.max_columns;
  j["seed"] = c.seed;
  j["suites"] = c.suites;
  j["complexes"] = c.complexes;
  return j;
}

std::string pretty_json(const json& j, int indent) {
  auto flat = [](const json& a) {
    return std::all_of(a.begin(), a.end(), [](const json& x) { return x.is_primitive(); });
  };
  std::string pad(indent + 2, ' ');
  if (j.is_object() && !j.empty()) {
    std::string s = "{\n";
    std::size_t k = 0;
    for (const auto& [key, v] : j.items()) {
      s += pad + json(key).dump() + ": " + pretty_json(v, indent + 2);
      s += ++k < j.size() ? ",\n" : "\n";
    }
    return s + std::string(indent, ' ') + "}";
  }
  if (j.is_array() && !j.empty() && !flat(j)) {
    std::string s = "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) s += pad + pretty_json(j[i], indent + 2) + (i + 1 < j.size() ? ",\n" : "\n");
    return s + std::string(indent, ' ') + "]";
  }
  std::string s = j.dump();
  if (j.is_array()) {
    // [1,2] -> [1, 2]
    std::string t;
    bool in_str = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '"' && (i == 0 || s[i - 1] != '\\')) in_str = !in_str;
      t += s[i];
      if (s[i] == ',' && !in_str) t += ' ';
    }
    return t;
  }
  return s;
}

std::string config_hash(const JobConfig& c) { return fnv1a_hex(config_to_json(c).dump()); }

std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

const std::vector<CatalogEntry>& example_catalog() {
  static const std::vector<CatalogEntry> c{
      {"trivial-group", "Q[x]/(x^2) over the trivial group: the classical Hochschild theory"},
      {"dual-numbers-z2", "Q[x]/(x^2) * Z/2 with x -> -x"},
      {"z3-planar", "Q + Q^2 (square zero) * Z/3, rotation of order 3 on Q^2"},
      {"group-algebra-s3", "QS_3 as the algebra k * S_3 in YD over S_3"},
      {"sweedler4", "Sweedler's H_4 as an algebra in YD over itself (non-semisimple)"},
      {"klein-twist", "Q(Z/2 x Z/2) with the alternating bicharacter twist"},
      {"f2-dual-numbers-z2", "F_2[x]/(x^2) * Z/2 with trivial action (modular)"},
  };
  return c;
}

json example_config(const std::string& name) {
  const FieldSpec Q = FieldSpec::rationals();
  JobConfig c;
  c.name = name;
  for (const auto& e : example_catalog())
    if (e.name == name) c.description = e.summary;
  if (c.description.empty()) fail("unknown example '" + name + "'");
  c.field = Q;
  if (name == "trivial-group") {
    c.group = GroupTable::trivial();
    c.A = trivial_module_algebra(group_algebra(*c.group, Q), dual_numbers(Q));
  } else if (name == "dual-numbers-z2") {
    c.group = GroupTable::cyclic(2);
    c.A = dual_numbers_sign(Q);
  } else if (name == "z3-planar") {
    c.group = GroupTable::cyclic(3);
    c.A = z3_planar(Q);
    c.max_degree = 3;  // C^4 has 9^5 columns
  } else if (name == "group-algebra-s3") {
    c.group = GroupTable::symmetric3();
    c.A = trivial_module_algebra(group_algebra(*c.group, Q), ground_algebra(Q));
  } else if (name == "sweedler4") {
    c.E = sweedler4(Q);
    c.A = trivial_module_algebra(c.E, ground_algebra(Q));
  } else if (name == "klein-twist") {
    c.group = GroupTable::product(GroupTable::cyclic(2), GroupTable::cyclic(2));
    c.A = trivial_module_algebra(group_algebra(*c.group, Q), ground_algebra(Q));
    c.twist = klein_bicharacter(Q);
  } else {
    c.field = FieldSpec::prime(2);
    c.group = GroupTable::cyclic(2);
    c.A = trivial_module_algebra(group_algebra(*c.group, c.field), dual_numbers(c.field));
  }
  if (c.group) c.E = group_algebra(*c.group, c.field);
  return config_to_json(c);
}

}  // namespace bhh
