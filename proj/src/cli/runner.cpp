#include "bhh/cli/runner.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "bhh/products/products.hpp"

namespace bhh {

using nlohmann::json;

bool JobReport::ok() const {
  for (const auto& s : suites)
    if (!s.checks.ok()) return false;
  return true;
}

Job make_job(JobConfig config) {
  Job j{std::move(config), nullptr, {}};
  j.dd = std::make_shared<const DrinfeldDouble>(drinfeld_double(j.config.E));
  try {
    j.sp = smash_product(j.dd, j.config.A);
  } catch (const ResourceCap&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(std::string("action: ") + e.what());
  }
  return j;
}

namespace {

std::string label(const Job& job, std::size_t g) {
  const auto& l = job.config.E.labels;
  return g < l.size() ? l[g] : std::to_string(g);
}

// Lazily built complexes shared between suites.
class Context {
 public:
  explicit Context(const Job& job) : job_(job), sp_(job.sp), N_(job.config.max_degree) {}

  std::size_t N() const { return N_; }
  // top degree of the cohomology and of the product checks
  int top() const { return static_cast<int>(N_) - 1; }
  int ptop() const { return std::min(3, top()); }
  bool semisimple() const { return is_semisimple(job_.dd->E) && is_cosemisimple(job_.dd->E); }

  BraidedCochains& cochains() {
    if (!bc_) bc_.emplace(sp_.B, double_generators(*job_.dd), job_.config.max_columns);
    return *bc_;
  }
  CochainProducts& products() {
    if (!pr_) pr_.emplace(cochains());
    return *pr_;
  }
  const Complex& full(std::size_t n) {
    auto it = full_.find(n);
    if (it == full_.end()) it = full_.emplace(n, cochains().complex(n)).first;
    return it->second;
  }
  const EmbeddedComplex& relative(std::size_t n) {
    auto it = rel_.find(n);
    if (it == rel_.end()) it = rel_.emplace(n, relative_cochain_complex(cochains(), full(n), sp_.incl_e)).first;
    return it->second;
  }
  // C(A, B) = Hom(A^{(x)n}, B)
  const Complex& classical(std::size_t n) {
    auto it = cl_.find(n);
    if (it == cl_.end()) {
      cap(sp_.B.dim() * checked_pow(sp_.dim_a, n), "C^" + std::to_string(n) + "(A, B)");
      it = cl_.emplace(n, classical_cochain_complex(sp_.a.alg, restricted_bimodule(sp_.B.alg, sp_.incl_a), n)).first;
    }
    return it->second;
  }
  // C(B, B) with the ordinary Hochschild differential
  const Complex& hochschild(std::size_t n) {
    auto it = hh_.find(n);
    if (it == hh_.end()) {
      cap(checked_pow(sp_.B.dim(), n + 1), "C^" + std::to_string(n) + "(B, B)");
      it = hh_.emplace(n, classical_cochain_complex(sp_.B.alg, regular_classical_bimodule(sp_.B.alg), n)).first;
    }
    return it->second;
  }
  // the braided complex with only E^op acting
  const Complex& eop(std::size_t n) {
    auto it = eop_.find(n);
    if (it == eop_.end()) {
      Complex c = full(n);
      const auto& dd = *job_.dd;
      c.action_elems.clear();
      c.action_eps.clear();
      c.action.clear();
      for (std::size_t i = 0; i < dd.E.dim; ++i) {
        c.action_elems.push_back(dd.from_eop(dd.E.basis(i)));
        c.action_eps.push_back(dd.E.eps(i));
      }
      for (int k = 0; k <= c.hi(); ++k) {
        c.action.emplace_back();
        for (const auto& h : c.action_elems) c.action.back().push_back(cochains().action(k, h));
      }
      it = eop_.emplace(n, std::move(c)).first;
    }
    return it->second;
  }
  const Complex& crossed(std::size_t n) {
    auto it = cr_.find(n);
    if (it == cr_.end()) {
      cap(sp_.B.dim() * checked_pow(sp_.dim_a, n), "C^" + std::to_string(n) + "(A, B)");
      it = cr_.emplace(n, crossed_product_complex(sp_, n)).first;
    }
    return it->second;
  }

 private:
  void cap(std::size_t cols, const std::string& what) const {
    if (cols > job_.config.max_columns)
      throw ResourceCap(what + " has dimension " + std::to_string(cols) + " > " + std::to_string(job_.config.max_columns));
  }
  const Job& job_;
  const SmashProduct& sp_;
  std::size_t N_;
  std::optional<BraidedCochains> bc_;
  std::optional<CochainProducts> pr_;
  std::map<std::size_t, Complex> full_, cl_, hh_, eop_, cr_;
  std::map<std::size_t, EmbeddedComplex> rel_;
};

void add_dims(JobReport& r, const std::string& complex, const std::string& component, int lo,
              const std::vector<std::size_t>& dims) {
  for (std::size_t i = 0; i < dims.size(); ++i) r.dims.push_back({lo + static_cast<int>(i), dims[i], complex, component});
}

std::vector<std::size_t> invariant_counts(const Cohomology& h, int lo, int hi) {
  std::vector<std::size_t> r;
  for (int n = lo; n <= hi; ++n) r.push_back(h.invariant_classes(n).cols());
  return r;
}

Vec random_vec(std::mt19937_64& rng, const FieldSpec& f, std::size_t n) {
  Vec v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(f, static_cast<long>(rng() % 7) - 3);
  return v;
}

json ring_json(const GradedRing& ring, std::size_t max_total) {
  auto strs = [](const Vec& v) {
    json a = json::array();
    for (const auto& s : v) a.push_back(s.str());
    return a;
  };
  json prods = json::array();
  for (const auto& [pq, tab] : ring.structure)
    for (std::size_t i = 0; i < tab.size(); ++i)
      for (std::size_t j = 0; j < tab[i].size(); ++j)
        if (!is_zero(tab[i][j])) prods.push_back({{"p", pq.first}, {"q", pq.second}, {"i", i}, {"j", j}, {"coords", strs(tab[i][j])}});
  return {{"max_total", max_total}, {"dims", ring.dims}, {"unit", strs(ring.unit)}, {"products", prods}};
}

void suite_structure(Context&, const Job& job, SuiteResult& s) {
  s.checks.merge(check_hopf_axioms(job.config.E), "E: ");
  s.checks.merge(check_rmatrix(job.dd->D), "D(E): ");
  s.checks.merge(check_algebra_in_Z(job.sp.B, double_generators(*job.dd)), "B: ");
}

void suite_complex(Context& ctx, const Job&, SuiteResult& s, JobReport& r) {
  const Complex& c = ctx.full(ctx.N());
  s.checks.merge(check_complex(c));
  std::string bad;
  int tmax = std::min(3, ctx.top());
  for (int n = 0; n <= tmax && bad.empty(); ++n)
    if (!(ctx.cochains().transported_differential(n) == sign_scalar(c.field, n + 1) * ctx.cochains().differential(n)))
      bad = "degree " + std::to_string(n);
  s.checks.add("d_c matches the differential carried over from the bar resolution", bad.empty(), bad);
  add_dims(r, "braided", "total", 0, Cohomology(c, 0, ctx.top()).dims());
}

void suite_relative(Context& ctx, const Job& job, SuiteResult& s, JobReport& r) {
  const auto& rel = ctx.relative(ctx.N());
  s.checks.merge(check_complex(rel.complex));
  s.checks.merge(check_chain_map(rel.complex, ctx.full(ctx.N()), rel.embedding, "embedding"));
  const Complex& cl = ctx.classical(ctx.N());
  auto res = restriction_maps(rel, job.sp.incl_a, job.sp.B.dim());
  s.checks.merge(check_restriction_iso(rel, cl, res));
  add_dims(r, "relative", "total", 0, Cohomology(rel.complex, 0, ctx.top()).dims());
  add_dims(r, "classical", "total", 0, Cohomology(cl, 0, ctx.top()).dims());
}

void suite_cup(Context& ctx, const Job&, SuiteResult& s) {
  const auto& rel = ctx.relative(ctx.N());
  s.checks.merge(cup_structure_check(ctx.products(), ctx.ptop(), &rel.embedding));
}

void suite_maurer_cartan(Context& ctx, const Job& job, SuiteResult& s) {
  auto& pr = ctx.products();
  auto& bc = ctx.cochains();
  s.checks.merge(maurer_cartan_check(pr, ctx.ptop()));
  const FieldSpec& f = bc.field();
  std::mt19937_64 rng(job.config.seed);
  int dtop = std::min(2, ctx.top());
  std::string bad;
  for (int t = 0; t < 100; ++t) {
    std::size_t p = rng() % (dtop + 1), q = rng() % (dtop + 1 - p);
    Vec a = random_vec(rng, f, bc.space_dim(p)), b = random_vec(rng, f, bc.space_dim(q));
    if (!commutator_identity_check(pr, p, a, q, b).ok() && bad.empty()) bad = "sample " + std::to_string(t);
  }
  s.checks.add("commutator identity on 100 random cochain pairs", bad.empty(), bad);

  Cohomology h(ctx.full(ctx.N()), 0, dtop);
  auto cocycle = [&](std::size_t n) {
    Vec v = zero_vec(f, bc.space_dim(n));
    for (const auto& rep : h.representatives(n)) axpy(v, Scalar(f, static_cast<long>(rng() % 7) - 3), rep);
    if (n > 0) v = v + bc.differential(n - 1).apply(random_vec(rng, f, bc.space_dim(n - 1)));
    return v;
  };
  bad.clear();
  for (int t = 0; t < 100; ++t) {
    std::size_t p = rng() % (dtop + 1), q = rng() % (dtop + 1 - p);
    Vec a = cocycle(p), b = cocycle(q);
    auto rep = commutator_identity_check(pr, p, a, q, b);
    if (!rep.ok() && bad.empty()) bad = "sample " + std::to_string(t);
    ++s.certificates;
  }
  s.checks.add("commutator witness on 100 random cocycle pairs", bad.empty(), bad);
}

void suite_ring(Context& ctx, const Job&, SuiteResult& s, JobReport& r) {
  auto& pr = ctx.products();
  Cohomology h(ctx.full(ctx.N()), 0, ctx.ptop());
  auto mul = [&](std::size_t p, const Vec& a, std::size_t q, const Vec& b) { return pr.cup(p, a, q, b); };
  auto comm = [&](std::size_t p, const Vec& a, std::size_t q, const Vec& b) {
    return pr.braided_commutator(p, q).apply(kron_vec(a, b));
  };
  auto ring = cohomology_ring(h, mul, ctx.cochains().unit_cochain(), ctx.ptop(), comm);
  s.checks.merge(ring.checks);
  s.certificates = ring.certificates;
  r.ring = ring_json(ring, ctx.ptop());
}

void suite_comparison(Context& ctx, const Job&, SuiteResult& s, JobReport& r) {
  int top = ctx.ptop();
  const auto& rel = ctx.relative(ctx.N());
  Cohomology hr(rel.complex, 0, top);
  Cohomology hc(ctx.eop(ctx.N()), 0, top);
  if (!ctx.semisimple()) {
    s.checks.not_applicable("relative and absolute cohomology agree", "E is not semisimple and cosemisimple");
    s.checks.not_applicable("HH(B) = H_c(B)^E", "E is not semisimple and cosemisimple");
    add_dims(r, "braided", "E-invariant classes", 0, invariant_counts(hc, 0, top));
    return;
  }
  std::string bad;
  for (int n = 0; n <= top && bad.empty(); ++n) {
    Matrix m = induced_map(hr, hc, n, rel.embedding[n]);
    if (m.rows() != m.cols() || rank(m) != m.cols()) bad = "degree " + std::to_string(n);
  }
  s.checks.add("relative and absolute cohomology agree", bad.empty(), bad);
  Cohomology hh(ctx.hochschild(ctx.N()), 0, top);
  bad.clear();
  for (int n = 0; n <= top && bad.empty(); ++n)
    if (hh.dim(n) != hc.invariant_classes(n).cols())
      bad = "degree " + std::to_string(n) + ": " + std::to_string(hh.dim(n)) + " vs " +
            std::to_string(hc.invariant_classes(n).cols());
  s.checks.add("HH(B) = H_c(B)^E", bad.empty(), bad);
  add_dims(r, "hochschild", "total", 0, hh.dims());
  add_dims(r, "braided", "E-invariant classes", 0, invariant_counts(hc, 0, top));
}

void suite_normalized(Context& ctx, const Job& job, SuiteResult& s, JobReport& r) {
  int top = std::min(2, ctx.top());
  const Vec& u = job.sp.B.alg.unit;
  std::size_t d = job.sp.B.dim();
  const Complex& full = ctx.eop(ctx.N());
  Complex norm = normalized_subcomplex(full, u, d);
  auto fd = Cohomology(full, 0, top).dims(), nd = Cohomology(norm, 0, top).dims();
  s.checks.add("normalized braided complex has the same cohomology", fd == nd);
  auto nrel = normalized_subcomplex(ctx.relative(ctx.N()), u, d);
  auto rd = Cohomology(ctx.relative(ctx.N()).complex, 0, top).dims(), nrd = Cohomology(nrel.complex, 0, top).dims();
  s.checks.add("normalized relative complex has the same cohomology", rd == nrd);
  add_dims(r, "normalized", "total", 0, nd);
  auto inv = Cohomology(invariant_subcomplex(norm), 0, top).dims();
  add_dims(r, "normalized", "E-invariant", 0, inv);
  if (!ctx.semisimple()) {
    s.checks.not_applicable("invariant normalized complex computes HH(B)", "E is not semisimple and cosemisimple");
    return;
  }
  auto hh = Cohomology(ctx.hochschild(ctx.N()), 0, top).dims();
  s.checks.add("invariant normalized complex computes HH(B)", inv == hh);
}

void suite_crossed(Context& ctx, const Job& job, SuiteResult& s, JobReport& r) {
  if (!job.config.group) {
    s.checks.not_applicable("G-decomposition", "E is not a group algebra");
    return;
  }
  int top = ctx.ptop();
  Cohomology h(ctx.crossed(ctx.N()), 0, top);
  auto dec = g_decomposition(job.sp, h);
  s.checks.merge(dec.checks);
  std::size_t e = job.config.group->identity();
  for (std::size_t g = 0; g < dec.dims.size(); ++g) {
    add_dims(r, "crossed", "g=" + label(job, g), 0, dec.dims[g]);
    if (g == e) continue;
    s.checks.merge(ideal_annihilation_check(job.sp, h, dec, g, top), "g=" + label(job, g) + ": ");
  }
  s.checks.merge(center_inclusion_check(job.sp, h, top));
}

void suite_twist(Context& ctx, const Job& job, SuiteResult& s) {
  if (!job.config.twist) {
    s.checks.not_applicable("twisted products", "no twist configured");
    return;
  }
  auto J = dual_cocycle(*job.dd, *job.config.twist);
  s.checks.merge(dual_cocycle_check(*job.dd, *job.config.group, J), "J: ");
  auto bj = j_twist_algebra(job.sp.B, J.J);
  s.checks.merge(check_algebra_in_Z(bj), "B_J: ");
  s.checks.merge(twist_product_equality(job.sp, bj, J.J, std::min<std::size_t>(2, ctx.N())));
}

JobReport blank(const Job& job, const std::string& command) {
  JobReport r;
  r.command = command;
  r.name = job.config.name;
  r.config_hash = config_hash(job.config);
  r.field = job.config.field.name();
  r.max_degree = job.config.max_degree;
  return r;
}

template <class F>
void timed(JobReport& r, const std::string& name, F&& f) {
  SuiteResult s;
  s.suite = name;
  auto t0 = std::chrono::steady_clock::now();
  f(s);
  s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.suites.push_back(std::move(s));
}

}  // namespace

JobReport run_verify(const Job& job) {
  if (job.config.max_degree < 2) throw ConfigError("verify needs max_degree >= 2");
  Context ctx(job);
  JobReport r = blank(job, "verify");
  const auto& want = job.config.suites;
  for (const auto& name : suite_names()) {
    if (!want.empty() && std::find(want.begin(), want.end(), name) == want.end()) continue;
    timed(r, name, [&](SuiteResult& s) {
      if (name == "structure") suite_structure(ctx, job, s);
      else if (name == "complex") suite_complex(ctx, job, s, r);
      else if (name == "relative") suite_relative(ctx, job, s, r);
      else if (name == "cup") suite_cup(ctx, job, s);
      else if (name == "maurer-cartan") suite_maurer_cartan(ctx, job, s);
      else if (name == "ring") suite_ring(ctx, job, s, r);
      else if (name == "comparison") suite_comparison(ctx, job, s, r);
      else if (name == "normalized") suite_normalized(ctx, job, s, r);
      else if (name == "crossed-product") suite_crossed(ctx, job, s, r);
      else suite_twist(ctx, job, s);
    });
  }
  return r;
}

JobReport run_compute(const Job& job, const ComputeRequest& req) {
  int hi = req.hi < 0 ? static_cast<int>(job.config.max_degree) - 1 : req.hi;
  if (req.lo < 0 || req.lo > hi) throw ConfigError("degrees: empty or negative range");
  if (hi + 1 > static_cast<int>(job.config.max_degree))
    throw ConfigError("degrees: H^" + std::to_string(hi) + " needs max_degree >= " + std::to_string(hi + 1));
  std::vector<std::string> want = req.complexes;
  if (want.empty()) want = {"braided", "relative", "classical"};
  for (const auto& w : want)
    if (std::find(complex_names().begin(), complex_names().end(), w) == complex_names().end())
      throw ConfigError("unknown complex '" + w + "'");

  JobConfig cfg = job.config;
  Context ctx(job);
  std::size_t n = hi + 1;
  JobReport r = blank(job, "compute");
  auto dims = [&](const Complex& c) {
    auto d = Cohomology(c, 0, hi).dims();
    return std::vector<std::size_t>(d.begin() + req.lo, d.end());
  };
  for (const auto& w : want) {
    timed(r, w, [&](SuiteResult&) {
      if (w == "braided") {
        add_dims(r, w, "total", req.lo, dims(ctx.full(n)));
      } else if (w == "relative") {
        add_dims(r, w, "total", req.lo, dims(ctx.relative(n).complex));
      } else if (w == "classical") {
        add_dims(r, w, "total", req.lo, dims(ctx.classical(n)));
      } else if (w == "normalized") {
        add_dims(r, w, "total", req.lo, dims(normalized_subcomplex(ctx.full(n), job.sp.B.alg.unit, job.sp.B.dim())));
      } else if (w == "invariant") {
        add_dims(r, w, "E-invariant", req.lo, dims(invariant_subcomplex(ctx.eop(n))));
      } else {
        if (!job.config.group) throw ConfigError("complex 'crossed' needs a group");
        Cohomology h(ctx.crossed(n), 0, hi);
        auto dec = g_decomposition(job.sp, h);
        for (std::size_t g = 0; g < dec.dims.size(); ++g)
          add_dims(r, "crossed", "g=" + label(job, g), req.lo,
                   std::vector<std::size_t>(dec.dims[g].begin() + req.lo, dec.dims[g].end()));
      }
    });
  }
  return r;
}

void atomic_write(const std::string& path, const std::string& data) {
  namespace fs = std::filesystem;
  fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  fs::path tmp = p;
  tmp += ".tmp" + std::to_string(std::random_device{}());
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw Error("cannot write '" + tmp.string() + "'");
    out << data;
    if (!out.flush()) throw Error("cannot write '" + tmp.string() + "'");
  }
  fs::rename(tmp, p);
}

JobReport cached_run(const std::string& dir, const std::string& key, const std::function<JobReport()>& fresh) {
  if (dir.empty()) return fresh();
  std::string path = (std::filesystem::path(dir) / (key + ".json")).string();
  if (std::ifstream in(path); in) {
    try {
      JobReport r = report_from_json(json::parse(in));
      r.cache = "hit";
      return r;
    } catch (const std::exception&) {
      // unreadable entries are recomputed and overwritten
    }
  }
  JobReport r = fresh();
  r.cache = "miss";
  atomic_write(path, pretty_json(report_to_json(r)) + "\n");
  return r;
}

json report_to_json(const JobReport& r) {
  json suites = json::array();
  json seconds = json::object();
  for (const auto& s : r.suites) {
    json checks = json::array();
    for (const auto& c : s.checks.checks())
      checks.push_back({{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}});
    suites.push_back({{"suite", s.suite}, {"certificates", s.certificates}, {"checks", checks}});
    seconds[s.suite] = s.seconds;
  }
  json dims = json::array();
  for (const auto& d : r.dims)
    dims.push_back({{"degree", d.degree}, {"dim", d.dim}, {"complex", d.complex}, {"component", d.component}});
  return {{"command", r.command},
          {"name", r.name},
          {"config_hash", r.config_hash},
          {"field", r.field},
          {"max_degree", r.max_degree},
          {"ok", r.ok()},
          {"suites", suites},
          {"dimensions", dims},
          {"ring", r.ring},
          {"run", {{"cache", r.cache}, {"seconds", seconds}}}};
}

JobReport report_from_json(const json& j) {
  try {
    JobReport r;
    r.command = j.at("command").get<std::string>();
    r.name = j.at("name").get<std::string>();
    r.config_hash = j.at("config_hash").get<std::string>();
    r.field = j.at("field").get<std::string>();
    r.max_degree = j.at("max_degree").get<std::size_t>();
    const json* secs = j.contains("run") ? &j.at("run").at("seconds") : nullptr;
    for (const auto& s : j.at("suites")) {
      SuiteResult sr;
      sr.suite = s.at("suite").get<std::string>();
      sr.certificates = s.at("certificates").get<std::size_t>();
      if (secs && secs->contains(sr.suite)) sr.seconds = secs->at(sr.suite).get<double>();
      for (const auto& c : s.at("checks")) {
        auto st = c.at("status").get<std::string>();
        auto name = c.at("name").get<std::string>(), detail = c.at("detail").get<std::string>();
        if (st == status_name(Status::Pass)) sr.checks.add(name, true, detail);
        else if (st == status_name(Status::Fail)) sr.checks.add(name, false, detail);
        else if (st == status_name(Status::NotApplicable)) sr.checks.not_applicable(name, detail);
        else throw ConfigError("report: unknown status '" + st + "'");
      }
      r.suites.push_back(std::move(sr));
    }
    for (const auto& d : j.at("dimensions"))
      r.dims.push_back({d.at("degree").get<int>(), d.at("dim").get<std::size_t>(), d.at("complex").get<std::string>(),
                        d.at("component").get<std::string>()});
    r.ring = j.value("ring", json::object());
    return r;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("report: ") + e.what());
  }
}

std::string export_report(const JobReport& r, const std::string& format) {
  if (format == "json") return pretty_json(report_to_json(r)) + "\n";
  if (format == "csv") {
    std::string s = "degree,dim,complex,component\n";
    for (const auto& d : r.dims)
      s += std::to_string(d.degree) + "," + std::to_string(d.dim) + "," + d.complex + "," + d.component + "\n";
    return s;
  }
  throw ConfigError("unknown format '" + format + "' (json or csv)");
}

std::vector<DimRow> import_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "degree,dim,complex,component") throw ConfigError("csv: missing header");
  std::vector<DimRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ls(line);
    for (std::string x; std::getline(ls, x, ',');) f.push_back(x);
    if (f.size() != 4) throw ConfigError("csv: expected 4 fields in '" + line + "'");
    try {
      rows.push_back({std::stoi(f[0]), static_cast<std::size_t>(std::stoull(f[1])), f[2], f[3]});
    } catch (const std::logic_error&) {
      throw ConfigError("csv: bad number in '" + line + "'");
    }
  }
  return rows;
}

}  // namespace bhh
