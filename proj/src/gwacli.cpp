#include "gwa/gwacli.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace gwa::cli {

using nlohmann::json;

namespace {

std::string kind_name(const ComplexKind& kind) {
  std::string base = kind.variant == Variant::Homology ? "homology" : "cohomology";
  return kind.is_twisted() ? "twisted-" + base : base;
}

DimEntry entry_of(const DimReport& r, const std::string& kind) {
  DimEntry e{kind, to_string(r.source), r.dims, r.agreement, {}};
  for (std::size_t p = 0; p < r.stabilization.size(); ++p) {
    const auto& s = r.stabilization[p];
    e.stabilization.push_back({static_cast<int>(p), s.value, s.stabilized_at_d, s.observations});
  }
  return e;
}

Scalar twist_of(const JobConfig& c) {
  if (c.twist_order < 2) throw std::invalid_argument("twist order must be at least 2");
  Scalar w = Scalar::zeta(c.twist_order).pow(c.twist_power);
  if (w.is_one()) throw std::invalid_argument("twist w = zeta_m^power must differ from 1");
  return w;
}

Schedule schedule_of(const JobConfig& c, int n) {
  Schedule s = Schedule::for_degree(n);
  if (c.d0) s.d0 = *c.d0;
  if (c.step) s.step = *c.step;
  if (c.window) s.window = *c.window;
  if (c.d_max) s.d_max = *c.d_max;
  if (s.d0 < 1 || s.step < 1 || s.window < 2 || s.d_max < s.d0) {
    throw std::invalid_argument("invalid truncation schedule");
  }
  return s;
}

std::vector<ComplexKind> verify_kinds(const JobConfig& c) {
  const std::string& k = c.kind;
  auto twisted = [&](Variant v) { return ComplexKind::twisted(v, twist_of(c)); };
  if (k == "homology") return {ComplexKind::homology()};
  if (k == "cohomology") return {ComplexKind::cohomology()};
  if (k == "twisted-homology") return {twisted(Variant::Homology)};
  if (k == "twisted-cohomology") return {twisted(Variant::Cohomology)};
  if (k == "all") {
    return {ComplexKind::homology(), ComplexKind::cohomology(), twisted(Variant::Homology),
            twisted(Variant::Cohomology)};
  }
  throw std::invalid_argument("unknown kind '" + k + "'");
}

void add_formula(RunReport& rep, const GwaSpec& spec, const ComplexKind& kind, bool with_oracle,
                 const Schedule& schedule, int p_max) {
  DimReport f = formula_dims(spec, kind, p_max);
  if (!with_oracle) {
    rep.results.push_back(entry_of(f, kind_name(kind)));
    return;
  }
  DimReport o = oracle_report(spec, kind, p_max, schedule);
  if (!mark_agreement(f, o)) rep.exit_code = kDisagreement;
  rep.results.push_back(entry_of(f, kind_name(kind)));
  rep.results.push_back(entry_of(o, kind_name(kind)));
}

void run_command(const JobConfig& c, RunReport& rep) {
  static const std::vector<std::string> kCommands = {"hh", "coh", "twisted", "invariants", "group", "verify",
                                                     "selftest"};
  if (std::find(kCommands.begin(), kCommands.end(), c.command) == kCommands.end()) {
    throw std::invalid_argument("unknown command '" + c.command + "'");
  }
  if (c.p_max < 0 || c.p_max > kMaxDegree) {
    throw std::invalid_argument("p-max must be in 0.." + std::to_string(kMaxDegree));
  }
  Poly a = parse_poly(c.a);
  Rational h0 = parse_rational(c.h0);
  if (a.is_constant()) throw HypothesisError("defining polynomial a must be non-constant");
  if (h0 == 0) throw HypothesisError("h0 must be nonzero");
  GwaSpec spec(a, ShiftSigma(Scalar(h0)));
  DegreeInvariants inv = degree_invariants(a);
  rep.n = inv.n;
  rep.d = inv.d;
  Schedule schedule = schedule_of(c, inv.n);

  if (c.command == "hh" || c.command == "coh") {
    ComplexKind kind = c.command == "hh" ? ComplexKind::homology() : ComplexKind::cohomology();
    add_formula(rep, spec, kind, c.oracle, schedule, c.p_max);
    rep.duality_flag = duality_flag(a, spec.sigma);
  } else if (c.command == "twisted") {
    Scalar w = twist_of(c);
    rep.twist = w.to_string();
    for (Variant v : {Variant::Homology, Variant::Cohomology}) {
      add_formula(rep, spec, ComplexKind::twisted(v, w), c.oracle, schedule, c.p_max);
    }
  } else if (c.command == "verify") {
    auto kinds = verify_kinds(c);
    for (const auto& kind : kinds) {
      if (kind.is_twisted()) rep.twist = kind.twist->to_string();
      add_formula(rep, spec, kind, true, schedule, c.p_max);
    }
    rep.duality_flag = duality_flag(a, spec.sigma);
  } else if (c.command == "invariants") {
    if (c.r < 1) throw std::invalid_argument("r must be positive");
    GwaSpec sub = invariant_gwa(spec, c.r);
    rep.invariant_polynomial = sub.a.to_string('H');
    if (c.r <= 6) {
      rep.checks.push_back({"y^r x^r = a~(h/r)", verify_invariant_identity(spec, c.r), ""});
    }
    bool simple = simplicity_check(spec);
    rep.checks.push_back({"simplicity", simple, ""});
    Reflectivity refl = reflectivity(a);
    rep.checks.push_back({"reflective", refl.reflective, refl.rho ? "rho = " + refl.rho->to_string() : ""});
    DimReport hh = hh_dims(sub.a, sub.sigma, c.p_max);
    rep.results.push_back(entry_of(hh, "invariant-homology"));
    if (simple) {
      int expected = c.r * inv.n - 1;
      rep.checks.push_back({"HH_0(A^G) = r n - 1", hh.dims[0] == expected,
                            std::to_string(hh.dims[0]) + " vs " + std::to_string(expected)});
    }
  } else if (c.command == "group") {
    GroupClassData classes = GroupClassData::parse(c.classes);
    DimReport g = group_report(spec, classes, c.p_max);
    rep.checks.push_back({"class counts", true,
                          "a1 = " + std::to_string(classes.a1()) + ", a2 = " + std::to_string(classes.a2())});
    if (g.agreement && !*g.agreement) rep.exit_code = kDisagreement;
    rep.results.push_back(entry_of(g, "group"));
  } else if (c.command == "selftest") {
    rep.checks = property_suite(spec, c.seed, c.samples);
    for (const auto& ch : rep.checks) {
      if (!ch.passed) rep.exit_code = kDisagreement;
    }
  }
}

}  // namespace

RunReport run(const JobConfig& config) {
  auto t0 = std::chrono::steady_clock::now();
  RunReport rep;
  rep.input = config;
  try {
    run_command(config, rep);
  } catch (const HypothesisError& e) {
    rep.exit_code = kHypothesis;
    rep.error = e.what();
  } catch (const StabilizationFailure& e) {
    rep.exit_code = kStabilization;
    rep.error = e.what();
  } catch (const std::invalid_argument& e) {
    rep.exit_code = kInvalidInput;
    rep.error = e.what();
  } catch (const std::exception& e) {
    rep.exit_code = 1;
    rep.error = std::string("internal error: ") + e.what();
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::vector<RunReport> run_sweep(const std::vector<JobConfig>& jobs) {
  std::vector<std::future<RunReport>> futures;
  futures.reserve(jobs.size());
  for (const auto& j : jobs) futures.push_back(std::async(std::launch::async, [j] { return run(j); }));
  std::vector<RunReport> out;
  out.reserve(jobs.size());
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

// ---------------------------------------------------------------------------
// Property suite

std::vector<Check> property_suite(const GwaSpec& spec, unsigned seed, int samples) {
  std::vector<Check> out;
  Algebra A(spec);
  const int n = spec.n();

  for (const auto& kind : {ComplexKind::homology(), ComplexKind::cohomology(),
                           ComplexKind::twisted(Variant::Homology, Scalar(-1)),
                           ComplexKind::twisted(Variant::Cohomology, Scalar::zeta(3))}) {
    bool ok = true;
    std::string detail;
    try {
      build_differentials(spec, kind, 5, 4);
    } catch (const InternalError& e) {
      ok = false;
      detail = e.what();
    }
    out.push_back({"d o d = 0 (" + kind.to_string() + ")", ok, detail});
  }

  out.push_back({"Euler homotopy", euler_homotopy_check(spec, samples, seed), std::to_string(samples) + " samples"});
  int center = center_dim(spec).value;
  out.push_back({"center_dim = 1", center == 1, std::to_string(center)});

  bool identities = true;
  for (int j = 1; j <= 4; ++j) {
    Poly up = Poly::constant(Scalar(1)), down = Poly::constant(Scalar(1));
    for (int k = 1; k <= j; ++k) up *= A.sigma_a(k);
    for (int k = 0; k < j; ++k) down *= A.sigma_a(-k);
    identities = identities && A.multiply(A.power(Element::x(), j), A.power(Element::y(), j)) == Element::poly(up) &&
                 A.multiply(A.power(Element::y(), j), A.power(Element::x(), j)) == Element::poly(down);
  }
  out.push_back({"x^j y^j and y^j x^j products, j <= 4", identities, ""});

  int hh0 = h0_bruteforce(spec).value;
  out.push_back({"HH_0 brute force = n - 1", hh0 == n - 1, std::to_string(hh0)});
  out.push_back({"HH_0 basis 1, ..., h^(n-2) independent",
                 hh0_standard_basis_independent(spec, Schedule::for_degree(n).d0), ""});
  int th0 = twisted_h0_bruteforce(spec, Scalar(-1)).value;
  out.push_back({"twisted H_0 brute force = n", th0 == n, std::to_string(th0)});

  bool exp_ok = true;
  for (int m = 1; m <= 2; ++m) {
    for (const Rational& l : {Rational(1), Rational(3, 2)}) exp_ok = exp_ok && exp_triviality_on_h0(spec, m, Scalar(l), 3);
  }
  out.push_back({"exponential automorphisms trivial on HH_0", exp_ok, ""});

  BezoutD2 b = bezout_d2_test(spec.a, spec.sigma);
  bool squarefree = degree_invariants(spec.a).d == 0;
  out.push_back({"Bezout criterion matches gcd(a, a') = 1", b.epimorphism == squarefree && (!b.epimorphism || b.verified),
                 ""});
  return out;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

template <typename T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> get_opt(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

json config_json(const JobConfig& c) {
  return {{"command", c.command},   {"a", c.a},
          {"h0", c.h0},             {"twist_order", c.twist_order},
          {"twist_power", c.twist_power}, {"r", c.r},
          {"classes", c.classes},   {"kind", c.kind},
          {"oracle", c.oracle},     {"p_max", c.p_max},
          {"d0", opt(c.d0)},        {"step", opt(c.step)},
          {"window", opt(c.window)}, {"d_max", opt(c.d_max)},
          {"seed", c.seed},         {"samples", c.samples}};
}

JobConfig config_of(const json& j) {
  JobConfig c;
  c.command = j.at("command").get<std::string>();
  c.a = j.value("a", c.a);
  c.h0 = j.value("h0", c.h0);
  c.twist_order = j.value("twist_order", c.twist_order);
  c.twist_power = j.value("twist_power", c.twist_power);
  c.r = j.value("r", c.r);
  c.classes = j.value("classes", c.classes);
  c.kind = j.value("kind", c.kind);
  c.oracle = j.value("oracle", c.oracle);
  c.p_max = j.value("p_max", c.p_max);
  c.d0 = get_opt<int>(j, "d0");
  c.step = get_opt<int>(j, "step");
  c.window = get_opt<int>(j, "window");
  c.d_max = get_opt<int>(j, "d_max");
  c.seed = j.value("seed", c.seed);
  c.samples = j.value("samples", c.samples);
  return c;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::string config_to_json(const JobConfig& config) { return config_json(config).dump(2); }

JobConfig config_from_json(const std::string& text) {
  try {
    return config_of(parse_json(text));
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid job configuration: ") + e.what());
  }
}

std::vector<JobConfig> sweep_from_json(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_array()) throw ParseError("sweep file must hold a JSON array of jobs");
  std::vector<JobConfig> out;
  try {
    for (const auto& item : j) out.push_back(config_of(item));
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid job configuration: ") + e.what());
  }
  return out;
}

std::string to_json(const RunReport& r, int indent) {
  json results = json::array();
  for (const auto& e : r.results) {
    json stab = json::array();
    for (const auto& s : e.stabilization) {
      stab.push_back({{"degree", s.degree},
                      {"value", s.value},
                      {"stabilized_at_d", s.stabilized_at_d},
                      {"observations", s.observations}});
    }
    results.push_back({{"kind", e.kind},
                       {"source", e.source},
                       {"dims", e.dims},
                       {"agreement", opt(e.agreement)},
                       {"stabilization", stab}});
  }
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  json j = {{"schema_version", r.schema_version},
            {"input", config_json(r.input)},
            {"n", opt(r.n)},
            {"d", opt(r.d)},
            {"twist", opt(r.twist)},
            {"results", results},
            {"duality_flag", opt(r.duality_flag)},
            {"checks", checks},
            {"invariant_polynomial", opt(r.invariant_polynomial)},
            {"exit_code", r.exit_code},
            {"error", r.error},
            {"seconds", r.seconds}};
  return j.dump(indent);
}

RunReport report_from_json(const std::string& text) {
  json j = parse_json(text);
  try {
    RunReport r;
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != kSchemaVersion) throw ParseError("unsupported schema version");
    r.input = config_of(j.at("input"));
    r.n = get_opt<int>(j, "n");
    r.d = get_opt<int>(j, "d");
    r.twist = get_opt<std::string>(j, "twist");
    for (const auto& e : j.at("results")) {
      DimEntry d;
      d.kind = e.at("kind").get<std::string>();
      d.source = e.at("source").get<std::string>();
      d.dims = e.at("dims").get<std::vector<int>>();
      d.agreement = get_opt<bool>(e, "agreement");
      for (const auto& s : e.at("stabilization")) {
        d.stabilization.push_back({s.at("degree").get<int>(), s.at("value").get<int>(),
                                   s.at("stabilized_at_d").get<int>(),
                                   s.at("observations").get<std::vector<std::pair<int, int>>>()});
      }
      r.results.push_back(std::move(d));
    }
    r.duality_flag = get_opt<bool>(j, "duality_flag");
    for (const auto& c : j.at("checks")) {
      r.checks.push_back({c.at("name").get<std::string>(), c.at("passed").get<bool>(), c.at("detail").get<std::string>()});
    }
    r.invariant_polynomial = get_opt<std::string>(j, "invariant_polynomial");
    r.exit_code = j.at("exit_code").get<int>();
    r.error = j.at("error").get<std::string>();
    r.seconds = j.at("seconds").get<double>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid report: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Text output

namespace {

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string to_csv(const std::vector<RunReport>& reports) {
  std::ostringstream os;
  os << "command,a,h0,twist,kind,source,degree,dim,agreement,exit_code\n";
  for (const auto& r : reports) {
    for (const auto& e : r.results) {
      for (std::size_t p = 0; p < e.dims.size(); ++p) {
        os << r.input.command << ',' << csv_quote(r.input.a) << ',' << csv_quote(r.input.h0) << ','
           << csv_quote(r.twist.value_or("")) << ',' << e.kind << ',' << e.source << ',' << p << ',' << e.dims[p]
           << ',' << (e.agreement ? yes_no(*e.agreement) : "") << ',' << r.exit_code << '\n';
      }
    }
  }
  return os.str();
}

std::string to_table(const RunReport& r) {
  std::ostringstream os;
  os << r.input.command << ": a = " << r.input.a << ", h0 = " << r.input.h0;
  if (r.n) os << ", n = " << *r.n << ", d = " << *r.d;
  if (r.twist) os << ", w = " << *r.twist;
  os << '\n';
  if (r.invariant_polynomial) os << "invariant polynomial: " << *r.invariant_polynomial << '\n';
  if (!r.results.empty()) {
    std::size_t width = 0;
    for (const auto& e : r.results) width = std::max({width, e.dims.size()});
    os << std::left << std::setw(22) << "kind" << std::setw(9) << "source";
    for (std::size_t p = 0; p < width; ++p) os << std::right << std::setw(4) << p;
    os << "  agreement\n";
    for (const auto& e : r.results) {
      os << std::left << std::setw(22) << e.kind << std::setw(9) << e.source;
      for (std::size_t p = 0; p < width; ++p) {
        os << std::right << std::setw(4) << (p < e.dims.size() ? std::to_string(e.dims[p]) : "");
      }
      os << "  " << (e.agreement ? yes_no(*e.agreement) : "-") << '\n';
    }
  }
  if (r.duality_flag) os << "duality: " << yes_no(*r.duality_flag) << '\n';
  for (const auto& c : r.checks) {
    os << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) os << " (" << c.detail << ')';
    os << '\n';
  }
  if (!r.error.empty()) os << "error: " << r.error << '\n';
  os << "exit code " << r.exit_code << ", " << std::fixed << std::setprecision(2) << r.seconds << " s\n";
  return os.str();
}

}  // namespace gwa::cli
