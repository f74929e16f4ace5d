#include "bisp/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace bisp {

using nlohmann::json;

namespace {

Rational rational_field(const json& j, const std::string& what) {
  try {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
  } catch (const std::exception& e) {
    throw InputError("malformed rational in " + what + ": " + e.what());
  }
  throw InputError("malformed rational in " + what + ": expected a \"p/q\" string");
}

int int_field(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw InputError(what + " must be an integer");
  return j.get<int>();
}

const json& require(const json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

ProblemSpec spec_from_json(const json& j) {
  ProblemSpec s;
  s.r = int_field(require(j, "r"), "r");
  if (s.r < 2) throw InputError("r must be at least 2");
  const json& a = j.contains("a") ? j.at("a") : json::array();
  if (!a.is_array()) throw InputError("a must be an array");
  for (std::size_t i = 0; i < a.size(); ++i) s.a.push_back(rational_field(a[i], "a[" + std::to_string(i) + "]"));
  if (static_cast<int>(s.a.size()) != s.r - 2)
    throw InputError("a must have length r-2 = " + std::to_string(s.r - 2) + ", got " + std::to_string(s.a.size()));
  const json& cusps = require(j, "cusps");
  if (!cusps.is_array()) throw InputError("cusps must be an array");
  for (std::size_t i = 0; i < cusps.size(); ++i) {
    const std::string at = "cusps[" + std::to_string(i) + "]";
    s.cusps.push_back({rational_field(require(cusps[i], "lambda"), at + ".lambda"),
                       rational_field(require(cusps[i], "gamma"), at + ".gamma")});
  }
  for (std::size_t i = 0; i < s.cusps.size(); ++i)
    for (std::size_t k = i + 1; k < s.cusps.size(); ++k)
      if (s.cusps[i].lambda == s.cusps[k].lambda) throw InputError("duplicate lambda " + s.cusps[i].lambda.str());
  const int n = static_cast<int>(s.cusps.size());
  s.degree_bound = j.contains("degree_bound") ? int_field(j.at("degree_bound"), "degree_bound") : 2 * n + 2;
  if (s.degree_bound < 0) throw InputError("degree_bound must be non-negative");
  s.series_truncation =
      j.contains("series_truncation") ? int_field(j.at("series_truncation"), "series_truncation") : s.r * n + 10;
  if (s.series_truncation < s.r * n + 2)
    throw InputError("series_truncation must be at least rn+2 = " + std::to_string(s.r * n + 2));
  return s;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

json spec_to_json(const ProblemSpec& s) {
  json a = json::array(), cusps = json::array();
  for (const auto& v : s.a) a.push_back(v.str());
  for (const auto& c : s.cusps) cusps.push_back({{"lambda", c.lambda.str()}, {"gamma", c.gamma.str()}});
  return {{"r", s.r}, {"a", a}, {"cusps", cusps}, {"degree_bound", s.degree_bound}, {"series_truncation", s.series_truncation}};
}

json coeffs_json(const Poly& p) {
  json c = json::array();
  for (const auto& v : p.coeffs()) c.push_back(v.str());
  return c;
}

Poly poly_from_coeffs(const json& j) {
  if (!j.is_array()) throw InputError("polynomial coefficients must be an array");
  std::vector<Rational> c;
  for (const auto& v : j) c.push_back(rational_field(v, "polynomial coefficient"));
  return Poly(std::move(c));
}

json poly_json(const Poly& p, const std::string& var) { return {{"text", p.str(var)}, {"coeffs", coeffs_json(p)}}; }

Poly poly_from_json(const json& j) { return poly_from_coeffs(require(j, "coeffs")); }

json op_json(const DiffOp& op) {
  json c = json::array();
  for (const auto& f : op.coeffs()) c.push_back({{"num", coeffs_json(f.num())}, {"den", coeffs_json(f.den())}});
  return {{"text", op.str()}, {"coeffs", c}};
}

DiffOp op_from_json(const json& j) {
  std::vector<RatFunc> c;
  for (const auto& f : require(j, "coeffs")) c.emplace_back(poly_from_coeffs(require(f, "num")), poly_from_coeffs(require(f, "den")));
  return DiffOp(std::move(c));
}

json cusps_json(const std::vector<Cusp>& cusps) {
  json out = json::array();
  for (const auto& c : cusps) out.push_back({{"lambda", c.lambda.str()}, {"gamma", c.gamma.str()}});
  return out;
}

std::vector<Cusp> cusps_from_json(const json& j) {
  std::vector<Cusp> out;
  for (const auto& c : j) out.push_back({rational_field(require(c, "lambda"), "lambda"), rational_field(require(c, "gamma"), "gamma")});
  return out;
}

json report_to_json(const RunReport& r) {
  json j;
  j["problem"] = spec_to_json(r.spec);
  j["mode"] = to_string(r.mode);
  if (r.construct) {
    const auto& c = *r.construct;
    j["construct"] = {{"kbar", op_json(c.kbar)}, {"flat_kbar", op_json(c.flat_kbar)}, {"tau", poly_json(c.tau, "x")},
                      {"q", poly_json(c.q, "z")},  {"sign", c.sign},                  {"scale", c.scale.str()}};
  }
  if (r.ring) {
    json basis = json::array(), gens = json::array(), comms = json::array();
    for (const auto& p : r.ring->stabilizer.basis) basis.push_back(poly_json(p, "z"));
    for (const auto& g : r.ring->generators) gens.push_back({{"p", poly_json(g.p, "z")}, {"order", g.order()}, {"operator", op_json(g.op)}});
    for (const auto& c : r.ring->commutators) comms.push_back({{"first", c.first}, {"second", c.second}, {"commutes", c.commutes}});
    j["ring"] = {{"stabilizer", {{"degree_bound", r.ring->stabilizer.degree_bound}, {"basis", basis}}},
                 {"generators", gens},
                 {"commutators", comms},
                 {"rank", r.ring->rank}};
  }
  if (r.involution)
    j["involution"] = {{"status", r.involution->status},
                       {"target", cusps_json(r.involution->target)},
                       {"tau_beta", poly_json(r.involution->tau_beta, "x")}};
  json checks = json::array(), errors = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"residual", c.residual}});
  for (const auto& e : r.errors) errors.push_back({{"stage", e.stage}, {"message", e.message}});
  j["checks"] = checks;
  j["errors"] = errors;
  j["pass"] = r.all_pass();
  return j;
}

RunReport report_from_json_value(const json& j) {
  RunReport r;
  r.spec = spec_from_json(require(j, "problem"));
  r.mode = mode_from_string(require(j, "mode").get<std::string>());
  if (j.contains("construct")) {
    const json& c = j.at("construct");
    r.construct = ConstructSection{op_from_json(require(c, "kbar")), op_from_json(require(c, "flat_kbar")),
                                   poly_from_json(require(c, "tau")), poly_from_json(require(c, "q")),
                                   int_field(require(c, "sign"), "sign"), rational_field(require(c, "scale"), "scale")};
  }
  if (j.contains("ring")) {
    const json& g = j.at("ring");
    RingSection ring;
    const json& st = require(g, "stabilizer");
    ring.stabilizer.degree_bound = int_field(require(st, "degree_bound"), "degree_bound");
    for (const auto& p : require(st, "basis")) ring.stabilizer.basis.push_back(poly_from_json(p));
    for (const auto& gen : require(g, "generators"))
      ring.generators.push_back({poly_from_json(require(gen, "p")), op_from_json(require(gen, "operator"))});
    for (const auto& c : require(g, "commutators"))
      ring.commutators.push_back({int_field(require(c, "first"), "first"), int_field(require(c, "second"), "second"),
                                  require(c, "commutes").get<bool>()});
    ring.rank = int_field(require(g, "rank"), "rank");
    r.ring = std::move(ring);
  }
  if (j.contains("involution")) {
    const json& inv = j.at("involution");
    r.involution = InvolutionSection{require(inv, "status").get<std::string>(), cusps_from_json(require(inv, "target")),
                                     poly_from_json(require(inv, "tau_beta"))};
  }
  for (const auto& c : require(j, "checks"))
    r.checks.push_back({require(c, "name").get<std::string>(), require(c, "pass").get<bool>(), require(c, "residual").get<std::string>()});
  for (const auto& e : require(j, "errors"))
    r.errors.push_back({require(e, "stage").get<std::string>(), require(e, "message").get<std::string>()});
  return r;
}

std::string cusps_text(const std::vector<Cusp>& cusps) {
  std::string s = "{";
  for (const auto& c : cusps) {
    if (s.size() > 1) s += ", ";
    s += "(" + c.lambda.str() + ", " + c.gamma.str() + ")";
  }
  return s + "}";
}

std::string commutator_label(const std::vector<RingGenerator>& gens, const CommutatorCheck& c) {
  const auto name = [&gens](int i) {
    return i >= 0 && i < static_cast<int>(gens.size()) ? "L[" + gens[static_cast<std::size_t>(i)].p.str("z") + "]"
                                                        : "L#" + std::to_string(i);
  };
  return "[" + name(c.first) + ", " + name(c.second) + "]";
}

std::string report_text(const RunReport& r) {
  std::ostringstream os;
  const auto& s = r.spec;
  os << "problem: r = " << s.r << ", a = [";
  for (std::size_t i = 0; i < s.a.size(); ++i) os << (i ? ", " : "") << s.a[i];
  os << "], cusps (lambda, gamma) = " << cusps_text(s.cusps) << ", degree bound " << s.degree_bound
     << ", series truncation " << s.series_truncation << "\n";
  os << "mode: " << to_string(r.mode) << "\n";
  if (r.construct) {
    const auto& c = *r.construct;
    os << "Kbar = " << c.kbar.str() << "\n";
    os << "flat Kbar = " << c.flat_kbar.str() << "\n";
    os << "tau = " << c.tau.str("x") << "\n";
    os << "q = " << c.q.str("z") << "\n";
    os << "normalization = " << c.scale << "\n";
  }
  if (r.ring) {
    os << "stabilizer basis (degree <= " << r.ring->stabilizer.degree_bound << "):";
    for (std::size_t i = 0; i < r.ring->stabilizer.basis.size(); ++i)
      os << (i ? ", " : " ") << r.ring->stabilizer.basis[i].str("z");
    os << "\n";
    for (const auto& g : r.ring->generators) os << "L[" << g.p.str("z") << "] (order " << g.order() << ") = " << g.op.str() << "\n";
    for (const auto& c : r.ring->commutators)
      os << commutator_label(r.ring->generators, c) << (c.commutes ? " = 0" : " != 0") << "\n";
    os << "rank = " << r.ring->rank << "\n";
  }
  if (r.involution) {
    os << "beta: " << r.involution->status;
    if (r.involution->status == "computed")
      os << ", target cusps " << cusps_text(r.involution->target) << ", tau^beta = " << r.involution->tau_beta.str("x");
    os << "\n";
  }
  for (const auto& c : r.checks) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.pass) os << ": residual " << c.residual;
    os << "\n";
  }
  for (const auto& e : r.errors) os << "[ERROR] " << e.stage << ": " << e.message << "\n";
  os << "result: " << (r.all_pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

CheckResult check(std::string name, bool pass, std::string residual) {
  return {std::move(name), pass, pass ? "0" : std::move(residual)};
}

}  // namespace

ProblemSpec parse_problem(const std::string& text) { return spec_from_json(parse_json(text)); }

std::vector<ProblemSpec> parse_problems(const std::string& text) {
  const json j = parse_json(text);
  std::vector<ProblemSpec> out;
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      try {
        out.push_back(spec_from_json(j[i]));
      } catch (const InputError& e) {
        throw InputError("problem " + std::to_string(i) + ": " + e.what());
      }
    }
  } else {
    out.push_back(spec_from_json(j));
  }
  return out;
}

AiryVacuum vacuum_of(const ProblemSpec& spec) { return AiryVacuum(spec.r, spec.a); }
CuspDivisor divisor_of(const ProblemSpec& spec) { return CuspDivisor(spec.cusps); }

std::string to_string(Mode m) {
  switch (m) {
    case Mode::construct: return "construct";
    case Mode::ring: return "ring";
    case Mode::involute: return "involute";
    case Mode::verify_all: return "verify-all";
  }
  return "construct";
}

Mode mode_from_string(const std::string& s) {
  for (Mode m : {Mode::construct, Mode::ring, Mode::involute, Mode::verify_all})
    if (to_string(m) == s) return m;
  throw InputError("unknown mode \"" + s + "\"");
}

Format format_from_string(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  throw InputError("unknown format \"" + s + "\" (expected text or json)");
}

bool RunReport::all_pass() const {
  return errors.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

RunReport run_pipeline(const ProblemSpec& spec, Mode mode) {
  RunReport rep;
  rep.spec = spec;
  rep.mode = mode;
  auto stage = [&rep](const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      rep.errors.push_back({name, e.what()});
    }
  };
  std::optional<AiryVacuum> l0;
  std::optional<CuspDivisor> c;
  stage("input", [&] {
    l0 = vacuum_of(spec);
    c = divisor_of(spec);
  });
  if (!l0 || !c) return rep;
  const int n = c->n(), r = l0->r(), big_n = r * n;
  const bool all = mode == Mode::verify_all;

  std::optional<KbarResult> kb;
  stage("construct", [&] {
    kb = build_kbar(*l0, *c);
    rep.construct = ConstructSection{kb->kbar, kb->flat_kbar, kb->tau, kb->q, kb->sign, kb->scale};
    rep.checks.push_back(check("Kbar has order N = rn", kb->kbar.order() == big_n,
                               "order " + std::to_string(kb->kbar.order()) + ", expected " + std::to_string(big_n)));
    rep.checks.push_back(check("Kbar has polynomial coefficients", kb->kbar.is_polynomial(), kb->kbar.str()));
    rep.checks.push_back(check("tau is monic of degree n", kb->tau.degree() == n && kb->tau.lead().is_one(), kb->tau.str()));
    const bool flat_poly = kb->flat_kbar.order() == big_n && kb->flat_kbar.is_polynomial();
    const int flat_x = flat_poly ? airy_coordinates(diffop_to_weyl(kb->flat_kbar), *l0).degree(0) : -1;
    rep.checks.push_back(check("flat Kbar has order N and x-degree <= n over Q[D, L0]", flat_poly && flat_x <= n,
                               flat_poly ? "x-degree " + std::to_string(flat_x) : kb->flat_kbar.str()));
    const Rational vr = c->vandermonde().pow(r);
    rep.checks.push_back(check("normalization = +-V^r", kb->scale == vr || kb->scale == -vr,
                               kb->scale.str() + " vs V^r = " + vr.str()));
  });
  auto need_kbar = [&kb](const char* what) {
    if (!kb) throw std::runtime_error(std::string("skipped: ") + what + " requires the construction");
  };

  if (mode == Mode::ring || all) {
    stage("ring", [&] {
      RingSection ring;
      ring.stabilizer = stabilizer_closed(*c, spec.degree_bound);
      rep.ring = ring;
      need_kbar("ring");
      const BispectralRing br = build_ring(*l0, *c, *kb, spec.degree_bound);
      ring.generators = br.generators;
      ring.commutators = br.commutators;
      ring.rank = br.rank();
      rep.ring = ring;
      for (const auto& g : br.generators) {
        const int expect = r * g.p.degree();
        const bool ok = g.op.order() == expect && g.op.is_monic() && g.op.coeff(expect - 1).is_zero();
        rep.checks.push_back(check("L[" + g.p.str("z") + "] monic of order " + std::to_string(expect) + " with zero subleading term",
                                   ok, g.op.str()));
      }
      for (const auto& cm : br.commutators) {
        std::string residual;
        if (!cm.commutes)
          residual = commutator(br.generators[static_cast<std::size_t>(cm.first)].op,
                                br.generators[static_cast<std::size_t>(cm.second)].op).str();
        rep.checks.push_back(check(commutator_label(br.generators, cm) + " = 0",
                                   cm.commutes, residual));
      }
      int degree_gcd = 0;
      for (const auto& g : br.generators) degree_gcd = std::gcd(degree_gcd, g.p.degree());
      // A low degree bound can leave only generators whose degrees share a factor.
      if (degree_gcd == 1)
        rep.checks.push_back(check("ring rank = r", br.rank() == r, "gcd of orders is " + std::to_string(br.rank())));
    });
  }

  if (mode == Mode::involute || all) {
    stage("involution", [&] {
      need_kbar("involution");
      const InvolutionReport inv = verify_involution(*l0, *c, *kb);
      if (!inv.precondition_ok) rep.checks.push_back(check("tau has distinct roots", false, inv.precondition_error));
      rep.involution = InvolutionSection{to_string(inv.status), inv.target.cusps(), inv.tau_beta};
      for (const auto& ch : inv.checks) rep.checks.push_back({ch.name, ch.pass, ch.residual});
    });
  }

  if (all) {
    stage("series oracle", [&] {
      need_kbar("series oracle");
      const SeriesOracleResult oracle = kbar_series_oracle(*l0, *c, spec.series_truncation);
      const OracleComparison cmp = compare_with_oracle(kb->kbar, oracle);
      rep.checks.push_back(check("Kbar agrees with the truncated series Wronskian through x^" +
                                     std::to_string(oracle.guaranteed_degree()),
                                 cmp.match, cmp.detail));
    });
    stage("stabilizer", [&] {
      need_kbar("stabilizer");
      const StabilizerBasis closed = stabilizer_closed(*c, spec.degree_bound);
      const StabilizerBasis generic = stabilizer_generic(kb->kbar, l0->as_diffop(), spec.degree_bound);
      rep.checks.push_back(check("stabilizer of Kbar equals the closed form", generic == closed,
                                 "dimension " + std::to_string(generic.basis.size()) + " vs " + std::to_string(closed.basis.size())));
      if (spec.degree_bound >= 2 * n) {
        const StabilizerBasis flat = stabilizer_generic(kb->flat_kbar, l0->as_diffop(), spec.degree_bound);
        rep.checks.push_back(check("stabilizer of flat Kbar has dimension >= 2", flat.basis.size() >= 2,
                                   "dimension " + std::to_string(flat.basis.size())));
      }
    });
    stage("true rank", [&] {
      need_kbar("true rank");
      const DiffOp q_op = truerank_witness(kb->kbar, *l0, *c);
      const DiffOp lhs = normalize_monic(kb->kbar) * q_op;
      const DiffOp rhs = darboux_conjugate(kb->kbar, *l0, kb->q.pow(2));
      rep.checks.push_back(check("q^2(L0) = Q K and K Q = L[q^2]", lhs == rhs, (lhs - rhs).str()));
    });
    stage("eigenfunction symmetry", [&] {
      need_kbar("eigenfunction symmetry");
      if (!is_squarefree(kb->tau)) return;
      const BetaResult beta = compute_beta(*l0, *c, *kb);
      if (beta.status != BetaStatus::computed) return;
      const SymmetryReport sym =
          eigenfunction_symmetry_check(*l0, kb->kbar, kb->q, kb->flat_kbar, beta.kbar_beta, beta.target.q());
      for (const auto& ch : sym.checks) rep.checks.push_back({"symmetry: " + ch.name, ch.pass, ch.residual});
    });
  }
  return rep;
}

std::string emit_report(const RunReport& report, Format format) {
  if (format == Format::json) return report_to_json(report).dump(2) + "\n";
  return report_text(report);
}

std::string emit_reports(const std::vector<RunReport>& reports, Format format) {
  if (format == Format::json) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    return arr.dump(2) + "\n";
  }
  std::string out;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i) out += "\n";
    out += report_text(reports[i]);
  }
  return out;
}

RunReport report_from_json(const std::string& text) {
  try {
    return report_from_json_value(parse_json(text));
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace bisp
