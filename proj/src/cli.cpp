//  Copyright 2026 The Quantopia Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "quantopia/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "quantopia/flat.hpp"
#include "quantopia/interval_lab.hpp"
#include "quantopia/io.hpp"
#include "quantopia/qtop.hpp"
#include "quantopia/quantale.hpp"
#include "quantopia/report.hpp"
#include "quantopia/sober.hpp"
#include "quantopia/suites.hpp"

namespace quantopia {
namespace {

namespace fs = std::filesystem;

/// Parsed flags shared by every command.
struct Flags {
  std::string quantale;
  std::string space;
  std::string order;
  std::string tnorm;
  std::string check;
  std::string module;
  std::string psi;
  std::string out_file;
  std::string input;
  std::string suite;
  std::optional<std::size_t> grid;
  std::optional<double> tolerance;
  std::optional<std::uint64_t> cap;
  std::optional<double> x;
  std::optional<double> bound;
  bool json = false;
  bool timing = false;
  bool list = false;
};

/// Instances and run parameters resolved from the flags.
class Context {
 public:
  explicit Context(const Flags& f) : flags(f) {
    if (f.cap) {
      limits.enumeration_cap = *f.cap;
    } else if (const char* env = std::getenv("QUANTOPIA_CAP")) {
      try {
        limits.enumeration_cap = std::stoull(env);
      } catch (const std::exception&) {
        throw StructuralError(std::string("QUANTOPIA_CAP is not a number: ") + env);
      }
    }
    if (limits.enumeration_cap == 0) throw StructuralError("the enumeration cap must be positive");
    if (f.grid) {
      if (*f.grid < 2) throw StructuralError("--grid needs at least 2 points");
      grid.points = *f.grid;
    }
    if (f.tolerance) {
      if (!(*f.tolerance > 0.0)) throw StructuralError("--tolerance must be positive");
      grid.sup_tolerance = *f.tolerance;
    }
  }

  const Flags& flags;
  Limits limits;
  GridSpec grid;

  QuantalePtr quantale() {
    if (!quantale_) {
      if (flags.quantale.empty()) throw StructuralError("this command needs --quantale");
      quantale_ = resolve_quantale(flags.quantale);
    }
    return quantale_;
  }

  QOrderedSet order() {
    const std::string spec = flags.order.empty() ? "alphaL" : flags.order;
    if (spec == "alphaL") return alpha_L(quantale());
    if (spec == "alphaR") return alpha_R(quantale());
    const fs::path path(spec);
    return qorder_from_json(read_json_file(path), path.parent_path());
  }

  QTopSpace space() {
    if (flags.space.empty()) throw StructuralError("this command needs --space");
    QTopSpace t;
    if (flags.space == "sierpinski") {
      t = sierpinski(quantale());
    } else if (flags.space == "scott") {
      t = scott_topology(order(), limits).space;
    } else {
      const fs::path path(flags.space);
      t = space_from_json(read_json_file(path), path.parent_path(), limits);
    }
    const ValidationReport v = validate_topology(t);
    if (!v.ok()) throw InvalidInstance("not a Q-topology: " + v.summary());
    return t;
  }

  TNorm tnorm() {
    if (flags.tnorm.empty()) throw StructuralError("this command needs --tnorm");
    return resolve_tnorm(flags.tnorm);
  }

  void grid_parameters(RunReport& r) const {
    r.parameters.emplace_back("grid points", std::to_string(grid.points));
    r.parameters.emplace_back("sup tolerance", number(grid.sup_tol()));
    r.parameters.emplace_back("closed-form tolerance", number(grid.closed_tolerance));
  }

  void cap_parameter(RunReport& r) const {
    r.parameters.emplace_back("enumeration cap", std::to_string(limits.enumeration_cap));
  }

  static std::string number(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
  }

 private:
  QuantalePtr quantale_;
};

void add_instance(RunReport& r, const std::string& role, const std::string& label, const Json& j) {
  r.instances.push_back({role, label, digest(j)});
}

std::string join_names(const std::vector<std::string>& xs, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

std::string render_on(const FiniteQuantale& q, const std::vector<std::string>& carrier,
                      const QFun& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) {
    s += (i ? ", " : "") + carrier[i] + ": " + q.name(f[i]);
  }
  return s + "}";
}

// -- validate ---------------------------------------------------------------------------

/// One check per listed axiom, then (with extras) any unlisted violations.
void report_validation(RunReport& r, const ValidationReport& v,
                       const std::vector<std::string>& axioms, bool extras = true) {
  for (const auto& a : axioms) {
    const Violation* bad = v.find(a);
    if (bad) {
      r.add(a, false, bad->detail,
            bad->witness.empty() ? std::nullopt : std::optional(join_names(bad->witness)));
    } else {
      r.add(a, true);
    }
  }
  for (const auto& bad : v.violations) {
    if (extras && std::find(axioms.begin(), axioms.end(), bad.axiom) == axioms.end()) {
      r.add(bad.axiom, false, bad.detail,
            bad.witness.empty() ? std::nullopt : std::optional(join_names(bad.witness)));
    }
  }
}

void require_structure(const ValidationReport& v) {
  if (!v.structural.empty()) throw StructuralError(join_names(v.structural, "; "));
}

void validate_table(RunReport& r, const QuantaleTable& t) {
  const ValidationReport v = validate_quantale(t);
  require_structure(v);
  const std::vector<std::string> order_axioms = {"reflexive", "antisymmetric", "transitive",
                                                 "bottom",    "top",           "join",
                                                 "meet"};
  report_validation(r, v, order_axioms, false);
  const bool lattice = std::none_of(order_axioms.begin(), order_axioms.end(),
                                    [&](const std::string& a) { return v.find(a) != nullptr; });
  std::vector<std::string> rest = {"commutative", "associative", "unit"};
  if (lattice) {
    rest.push_back("zero");
    rest.push_back("distributive");
  }
  ValidationReport tail;
  for (const auto& bad : v.violations) {
    if (std::find(order_axioms.begin(), order_axioms.end(), bad.axiom) == order_axioms.end()) {
      tail.violations.push_back(bad);
    }
  }
  report_validation(r, tail, rest);
  if (!lattice) {
    r.checks.back().info.emplace_back("note", "zero and distributive need a complete lattice");
  }
}

RunReport cmd_validate(Context& ctx) {
  RunReport r;
  const std::string& in = ctx.flags.input;
  r.command = "validate " + in;
  if (QuantalePtr q = builtin_quantale(in)) {
    add_instance(r, "quantale", q->label(), quantale_to_json(*q));
    validate_table(r, q->table());
    return r;
  }
  const Json j = read_json_file(in);
  const fs::path base = fs::path(in).parent_path();
  if (!j.is_object()) throw StructuralError("expected a JSON object");
  if (j.contains("elements")) {
    add_instance(r, "quantale", fs::path(in).stem().string(), j);
    validate_table(r, quantale_table_from_json(j));
  } else if (j.contains("pieces")) {
    const TNorm t = tnorm_from_json(j, fs::path(in).stem().string());
    add_instance(r, "tnorm", t.label(), tnorm_to_json(t));
    r.add("pieces", true);
  } else if (j.contains("order")) {
    const RawQOrder raw = raw_qorder_from_json(j, base);
    add_instance(r, "qorder", fs::path(in).stem().string(), j);
    const ValidationReport v = validate_qorder(*raw.quantale, raw.carrier, raw.order);
    require_structure(v);
    report_validation(r, v, {"reflexive", "transitive"});
  } else if (j.contains("opens") || j.contains("subbasis")) {
    const QTopSpace t = space_from_json(j, base, ctx.limits);
    add_instance(r, "space", fs::path(in).stem().string(), j);
    const ValidationReport v = validate_topology(t);
    require_structure(v);
    report_validation(r, v, {"O1", "O2", "O3", "O4"});
  } else {
    throw StructuralError("cannot tell what kind of instance this file holds");
  }
  return r;
}

// -- finite commands --------------------------------------------------------------------

RunReport cmd_props(Context& ctx) {
  RunReport r;
  const QuantalePtr q = ctx.quantale();
  r.command = "props";
  add_instance(r, "quantale", q->label(), quantale_to_json(*q));
  const QuantaleProperties p = quantale_properties(*q);
  std::vector<std::string> idem;
  for (Elem e : p.idempotents) idem.push_back(q->name(e));
  CheckResult c;
  c.name = "quantale";
  c.info = {{"elements", join_names(q->names())},
            {"bottom", q->name(q->bottom())},
            {"top", q->name(q->top())},
            {"unit", q->name(q->unit())},
            {"integral", p.is_integral ? "yes" : "no"},
            {"frame", p.is_frame ? "yes" : "no"},
            {"chain", is_chain(*q) ? "yes" : "no"},
            {"idempotents", join_names(idem)}};
  r.add(std::move(c));
  return r;
}

void add_order_instance(RunReport& r, Context& ctx, const QOrderedSet& x) {
  const std::string label = ctx.flags.order.empty() ? "alphaL" : ctx.flags.order;
  add_instance(r, "qorder", label + "(" + x.quantale().label() + ")", qorder_to_json(x));
}

std::string point_or_none(const QOrderedSet& x, std::optional<Point> p) {
  return p ? x.name(*p) : "none";
}

RunReport cmd_flat_ideals(Context& ctx) {
  RunReport r;
  r.command = "flat-ideals";
  const QOrderedSet x = ctx.order();
  add_order_instance(r, ctx, x);
  ctx.cap_parameter(r);
  const FlatIdealSet fx = flat_ideals(x, ctx.limits);
  CheckResult list;
  list.name = "flat-ideals";
  list.info.emplace_back("count", std::to_string(fx.ideals.size()));
  for (std::size_t i = 0; i < fx.ideals.size(); ++i) {
    list.info.emplace_back("ideal " + std::to_string(i),
                           render_on(x.quantale(), x.carrier(), fx.ideals[i]) + " sup " +
                               point_or_none(x, weight_sup(x, fx.ideals[i])));
  }
  r.add(std::move(list));
  std::optional<std::string> missing;
  for (Point a = 0; a < x.size() && !missing; ++a) {
    if (!fx.index_of(yoneda(x, a))) missing = x.name(a);
  }
  r.add("representables-flat", !missing, missing ? "X(-,a) is not flat" : "", missing);
  return r;
}

std::string matrix_rows(const QOrderedSet& x, const Matrix<Elem>& w, std::size_t a) {
  std::vector<std::string> row;
  for (Point b = 0; b < x.size(); ++b) row.push_back(x.quantale().name(w(a, b)));
  return join_names(row, " ");
}

RunReport cmd_waybelow(Context& ctx) {
  RunReport r;
  r.command = "waybelow";
  const QOrderedSet x = ctx.order();
  add_order_instance(r, ctx, x);
  ctx.cap_parameter(r);
  const Matrix<Elem> w = way_below(x, ctx.limits);
  CheckResult c;
  c.name = "way-below";
  for (Point a = 0; a < x.size(); ++a) c.info.emplace_back("w(" + x.name(a) + ",-)", matrix_rows(x, w, a));
  r.add(std::move(c));
  auto bad = way_below_properties(x, w);
  std::vector<std::string> pts;
  if (bad) {
    for (Point p : bad->points) pts.push_back(x.name(p));
  }
  r.add("way-below-properties", !bad, bad ? bad->property : "",
        bad ? std::optional(join_names(pts)) : std::nullopt);
  return r;
}

void add_fdomain_check(RunReport& r, const QOrderedSet& x, const FDomainCertificate& cert) {
  CheckResult c;
  c.name = "f-domain";
  c.pass = cert.holds;
  c.reason = cert.reason;
  if (cert.point) c.witness = x.name(*cert.point);
  c.info.emplace_back("separated", cert.separated ? "yes" : "no");
  c.info.emplace_back("F-cocomplete", cert.f_cocomplete ? "yes" : "no");
  r.add(std::move(c));
}

RunReport cmd_fdomain(Context& ctx) {
  RunReport r;
  r.command = "fdomain";
  const QOrderedSet x = ctx.order();
  add_order_instance(r, ctx, x);
  ctx.cap_parameter(r);
  add_fdomain_check(r, x, is_f_domain(x, ctx.limits));
  return r;
}

void add_sober_check(RunReport& r, const QTopSpace& t, const Limits& limits) {
  const SobrietyCertificate cert = eta(t, limits);
  CheckResult c;
  c.name = "sober";
  c.pass = cert.verdict == SobrietyVerdict::sober;
  c.info.emplace_back("verdict", to_string(cert.verdict));
  c.info.emplace_back("module points", std::to_string(cert.module_points.size()));
  if (cert.pair) {
    c.witness = t.carrier[cert.pair->first] + "," + t.carrier[cert.pair->second];
    c.reason = "two points with the same open neighbourhoods";
  }
  if (cert.missing) {
    c.witness = render(*t.quantale, *cert.missing);
    c.reason = "a point of O(X) that no carrier point realizes";
  }
  r.add(std::move(c));
}

void add_space_instance(RunReport& r, const std::string& label, const QTopSpace& t) {
  add_instance(r, "space", label + "(" + t.quantale->label() + ")", space_to_json(t));
}

RunReport cmd_scott(Context& ctx) {
  RunReport r;
  r.command = "scott";
  const QOrderedSet x = ctx.order();
  add_order_instance(r, ctx, x);
  ctx.cap_parameter(r);
  const FDomainCertificate cert = is_f_domain(x, ctx.limits);
  const ScottSpace s = scott_topology(x, ctx.limits);
  CheckResult top;
  const ValidationReport v = validate_topology(s.space);
  top.name = "topology";
  top.pass = v.ok();
  if (!v.ok()) top.reason = v.summary();
  top.info.emplace_back("opens", std::to_string(s.space.opens.size()));
  top.info.emplace_back("F-domain", cert.holds ? "yes" : "no (" + cert.reason + ")");
  r.add(std::move(top));
  const std::string& check = ctx.flags.check;
  if (check == "sober") {
    add_sober_check(r, s.space, ctx.limits);
  } else if (check == "t0") {
    r.add("t0", is_t0(s.space), is_t0(s.space) ? "" : "two points share all opens");
  } else if (check == "f-domain") {
    add_fdomain_check(r, x, cert);
  } else if (!check.empty() && check != "none") {
    throw StructuralError("unknown --check \"" + check + "\" (sober, t0, f-domain, none)");
  }
  return r;
}

RunReport cmd_sober(Context& ctx) {
  RunReport r;
  r.command = "sober";
  const QTopSpace t = ctx.space();
  add_space_instance(r, ctx.flags.space, t);
  ctx.cap_parameter(r);
  add_sober_check(r, t, ctx.limits);
  return r;
}

RunReport cmd_sobrify(Context& ctx) {
  RunReport r;
  r.command = "sobrify";
  const QTopSpace t = ctx.space();
  add_space_instance(r, ctx.flags.space, t);
  ctx.cap_parameter(r);
  const Sobrification s = sobrify(t, ctx.limits);
  const ValidationReport v = validate_topology(s.space);
  r.add("sobrification-valid", v.ok(), v.ok() ? "" : v.summary());
  const bool sober_out = is_sober(s.space, ctx.limits);
  r.add("sobrification-sober", sober_out, sober_out ? "" : "the sobrification is not sober");
  const bool cont = is_continuous(t, s.space, s.eta);
  r.add("eta-continuous", cont, cont ? "" : "eta is not continuous");
  const bool sober_in = is_sober(t, ctx.limits);
  const bool homeo = is_homeomorphism(t, s.space, s.eta);
  CheckResult c;
  c.name = "eta-homeomorphism-iff-sober";
  c.pass = homeo == sober_in;
  c.info.emplace_back("input sober", sober_in ? "yes" : "no");
  c.info.emplace_back("eta homeomorphism", homeo ? "yes" : "no");
  for (std::size_t k = 0; k < s.points.size(); ++k) {
    c.info.emplace_back(s.space.carrier[k], render(*t.quantale, s.points[k]));
  }
  r.add(std::move(c));
  if (!ctx.flags.out_file.empty()) {
    std::ofstream os(ctx.flags.out_file);
    if (!os) throw StructuralError("cannot write " + ctx.flags.out_file);
    os << space_to_json(s.space).dump(2) << "\n";
  }
  return r;
}

RunReport cmd_spatial(Context& ctx) {
  RunReport r;
  r.command = "spatial";
  QModule m;
  const std::string& spec = ctx.flags.module;
  if (!spec.empty()) {
    if (spec == "diamond") {
      m = diamond_module();
    } else if (spec == "self") {
      m = self_module(ctx.quantale());
    } else if (spec.rfind("power:", 0) == 0) {
      m = power_module(ctx.quantale(), std::stoul(spec.substr(6)), ctx.limits);
    } else {
      throw StructuralError("unknown --module \"" + spec + "\" (diamond, self, power:<n>)");
    }
    r.instances.push_back({"module", spec, fnv1a_hex(spec)});
  } else {
    const QTopSpace t = ctx.space();
    add_space_instance(r, ctx.flags.space, t);
    m = open_set_module(t);
  }
  ctx.cap_parameter(r);
  const SpatialityReport s = spatiality(m, ctx.limits);
  CheckResult c;
  c.name = "spatial";
  c.pass = s.spatial;
  c.reason = s.reason;
  c.info.emplace_back("points", std::to_string(s.point_count));
  r.add(std::move(c));
  return r;
}

// -- t-norm commands --------------------------------------------------------------------

/// rep:<a>, const:<v>, cx:<c>, jump:<a> (t -> t => a), or a file of sampled values.
IntervalWeight parse_psi(Context& ctx, const TNorm& t, IntervalOrder order) {
  const std::string& spec = ctx.flags.psi;
  if (spec.empty()) throw StructuralError("this command needs --psi");
  auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  auto value = [&]() {
    if (colon == std::string::npos) throw StructuralError("--psi " + kind + " needs a value");
    try {
      return std::stod(spec.substr(colon + 1));
    } catch (const std::exception&) {
      throw StructuralError("--psi value is not a number: " + spec);
    }
  };
  if (kind == "rep") return IntervalWeight::representable(t, value(), Variance::coweight, order);
  if (kind == "const") {
    const double v = value();
    return IntervalWeight::formula(t, [v](double) { return v; }, Variance::coweight, order,
                                   "const " + Context::number(v));
  }
  if (kind == "cx") return counterexample_open(t, value());
  if (kind == "jump") {
    const double a = value();
    return IntervalWeight::formula(t, [t, a](double s) { return t.implication(s, a); },
                                   Variance::coweight, order, "t->" + Context::number(a));
  }
  if (kind == "id") {
    return IntervalWeight::formula(t, [](double s) { return s; }, Variance::coweight, order, "id");
  }
  const Json j = read_json_file(spec);
  const Json& vals = j.is_object() && j.contains("values") ? j["values"] : j;
  std::vector<double> samples;
  try {
    samples = vals.get<std::vector<double>>();
  } catch (const std::exception&) {
    throw StructuralError("sampled psi must be an array of numbers");
  }
  if (samples.size() != ctx.grid.points) {
    throw StructuralError("sampled psi has " + std::to_string(samples.size()) +
                          " values; the grid has " + std::to_string(ctx.grid.points));
  }
  return IntervalWeight::sampled(t, std::move(samples), Variance::coweight, order);
}

void add_tnorm_instance(RunReport& r, const TNorm& t) {
  add_instance(r, "tnorm", t.label(), tnorm_to_json(t));
}

RunReport cmd_tnorm_d(Context& ctx) {
  RunReport r;
  const TNorm t = ctx.tnorm();
  const double x = ctx.flags.x.value_or(0.5);
  r.command = "tnorm d";
  add_tnorm_instance(r, t);
  ctx.grid_parameters(r);
  r.parameters.emplace_back("x", Context::number(x));
  const IntervalWeight d = d_ideal(t, x);
  const double defect = weight_defect(d, ctx.grid);
  CheckResult w;
  w.name = "weight";
  w.pass = defect <= ctx.grid.closed_tolerance;
  w.tolerance = ctx.grid.closed_tolerance;
  w.info.emplace_back("defect", Context::number(defect));
  if (!w.pass) w.reason = "d(x) breaks the weight inequality";
  r.add(std::move(w));
  CheckResult v;
  v.name = "values";
  v.pass = d(0.0) == 1.0 || x == 0.0;
  const std::size_t step = std::max<std::size_t>(1, (ctx.grid.points - 1) / 10);
  for (std::size_t i = 0; i < ctx.grid.points; i += step) {
    v.info.emplace_back("d(" + Context::number(x) + ")(" + Context::number(ctx.grid.at(i)) + ")",
                        Context::number(d(ctx.grid.at(i))));
  }
  if (!v.pass) v.reason = "d(x)(0) must be 1";
  r.add(std::move(v));
  return r;
}

RunReport cmd_tnorm_scott_open(Context& ctx) {
  RunReport r;
  const TNorm t = ctx.tnorm();
  r.command = "tnorm scott-open";
  add_tnorm_instance(r, t);
  ctx.grid_parameters(r);
  const IntervalWeight psi = parse_psi(ctx, t, IntervalOrder::alpha_L);
  r.parameters.emplace_back("psi", psi.label());
  const GridVerdict g = scott_open_alphaL(t, psi, ctx.grid);
  CheckResult c;
  c.name = "scott-open";
  c.pass = g.holds;
  c.tolerance = ctx.grid.sup_tol();
  if (g.witness) c.witness = Context::number(*g.witness);
  c.reason = g.detail;
  r.add(std::move(c));
  return r;
}

RunReport cmd_tnorm_domain(Context& ctx) {
  RunReport r;
  const TNorm t = ctx.tnorm();
  r.command = "tnorm domain-cond";
  add_tnorm_instance(r, t);
  const bool dc = domain_condition(t);
  CheckResult c;
  c.name = "domain-condition";
  c.pass = dc;
  if (!dc) {
    for (const auto& p : t.pieces()) {
      if (p.kind == PieceKind::lukasiewicz && p.lo != 0.0) {
        c.witness = "[" + Context::number(p.lo) + "," + Context::number(p.hi) + "]";
        c.reason = "a Lukasiewicz piece starts above 0";
        break;
      }
    }
  }
  r.add(std::move(c));
  const QuantalePtr q = finite_skeleton(t);
  add_instance(r, "finite model", q->label(), quantale_to_json(*q));
  const bool fin = is_f_domain(alpha_L(q), ctx.limits).holds;
  r.add("finite-model-agrees", fin == dc,
        fin == dc ? "" : "the finite model gives the opposite verdict");
  return r;
}

RunReport cmd_tnorm_sierpinski(Context& ctx) {
  RunReport r;
  const TNorm t = ctx.tnorm();
  r.command = "tnorm sierpinski-eq";
  add_tnorm_instance(r, t);
  const bool eq = sierpinski_equals_scott(t);
  r.add("sierpinski-equals-scott", eq, eq ? "" : "T has a non-idempotent element");
  if (eq) {
    const QuantalePtr q = finite_skeleton(t);
    add_instance(r, "finite model", q->label(), quantale_to_json(*q));
    const bool same = scott_topology(alpha_L(q), ctx.limits).space.opens == sierpinski(q).opens;
    r.add("finite-model-agrees", same, same ? "" : "Scott and Sierpinski opens differ on the finite model");
  }
  return r;
}

RunReport cmd_tnorm_alphaR(Context& ctx) {
  RunReport r;
  const TNorm t = ctx.tnorm();
  r.command = "tnorm alphaR";
  add_tnorm_instance(r, t);
  const bool ar = alphaR_f_domain(t);
  r.add("alphaR-f-domain", ar, ar ? "" : "T is not Archimedean");
  const QuantalePtr q = finite_skeleton(t);
  add_instance(r, "finite model", q->label(), quantale_to_json(*q));
  const bool fin = is_f_domain(alpha_R(q), ctx.limits).holds;
  r.add("finite-model-agrees", fin == ar, fin == ar ? "" : "the finite model gives the opposite verdict");
  if (!ctx.flags.psi.empty()) {
    ctx.grid_parameters(r);
    const IntervalWeight psi = parse_psi(ctx, t, IntervalOrder::alpha_R);
    r.parameters.emplace_back("psi", psi.label());
    const AlphaRReport a = alphaR_coweight_checks(t, psi, ctx.flags.bound, ctx.grid);
    CheckResult c;
    c.name = "coweight-conditions";
    c.pass = a.ok();
    c.tolerance = ctx.grid.sup_tol();
    if (a.witness) c.witness = Context::number(*a.witness);
    if (a.b) c.info.emplace_back("idempotent bound", Context::number(*a.b));
    if (!a.fl_i) c.reason = "psi(x) <= x- without psi(x) = psi(1)";
    else if (!a.fl_ii) c.reason = "idempotent x with psi(x) >= x but psi(1) < x";
    else if (!a.open_bound) c.reason = "non-constant psi exceeds the idempotent bound";
    r.add(std::move(c));
  }
  return r;
}

// -- suites -----------------------------------------------------------------------------

RunReport cmd_suite(Context& ctx, std::ostream& out) {
  if (ctx.flags.list || ctx.flags.suite.empty()) {
    for (const auto& s : suite_catalog()) out << s.number << "  " << s.name << "  " << s.title << "\n";
    RunReport r;
    r.command = "suite --list";
    return r;
  }
  SuiteOptions opt;
  opt.limits = ctx.limits;
  opt.grid = ctx.grid;
  if (ctx.flags.suite == "all") {
    RunReport r;
    r.command = "suite all";
    for (const auto& s : suite_catalog()) {
      RunReport one = run_suite(s.name, opt);
      for (auto c : one.checks) {
        c.name = s.name + ": " + c.name;
        r.checks.push_back(std::move(c));
      }
      for (const auto& p : one.parameters) {
        if (std::find(r.parameters.begin(), r.parameters.end(), p) == r.parameters.end()) {
          r.parameters.push_back(p);
        }
      }
    }
    return r;
  }
  if (!find_suite(ctx.flags.suite)) {
    throw StructuralError("unknown suite \"" + ctx.flags.suite + "\"; try suite --list");
  }
  return run_suite(ctx.flags.suite, opt);
}

/// Options whose value is the next token, used to find the command word.
bool takes_value(const std::string& opt) {
  static const std::set<std::string> valued = {
      "--quantale", "--space", "--order", "--tnorm",  "--grid", "--tolerance", "--cap",
      "--check",    "--module", "--psi",  "--out",    "--x",    "--bound"};
  return valued.count(opt) == 1;
}

std::optional<std::string> command_word(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.rfind("-", 0) != 0) return a;
    if (a.find('=') == std::string::npos && takes_value(a)) ++i;
  }
  return std::nullopt;
}

const std::set<std::string>& command_names() {
  static const std::set<std::string> names = {"validate", "props",   "flat-ideals", "waybelow",
                                              "fdomain",  "scott",   "sober",       "sobrify",
                                              "spatial",  "tnorm",   "suite"};
  return names;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (auto word = command_word(args); word && command_names().count(*word) == 0) {
    err << "unknown command: " << *word << "\n";
    return kExitInputError;
  }

  Flags f;
  CLI::App app{"Quantopia: finite quantales, Q-orders, flat ideals and Q-topologies", "quantopia"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--quantale", f.quantale, "built-in name (bool, godel<n>, mv<n>) or JSON file");
  app.add_option("--space", f.space, "sierpinski, scott (of --order) or JSON file");
  app.add_option("--order", f.order, "alphaL, alphaR or JSON file");
  app.add_option("--tnorm", f.tnorm, "built-in t-norm name or JSON file");
  app.add_option("--grid", f.grid, "grid points on [0,1] (default 101)");
  app.add_option("--tolerance", f.tolerance, "tolerance for sampled suprema (default 1.5/grid)");
  app.add_option("--cap", f.cap, "enumeration cap on |Q|^|X| (default 1000000, or QUANTOPIA_CAP)");
  app.add_flag("--json", f.json, "emit the report as JSON");
  app.add_flag("--timing", f.timing, "include run times in the report");

  std::map<std::string, std::function<RunReport(Context&)>> handlers;
  auto sub = [&](const std::string& name, const std::string& help,
                 std::function<RunReport(Context&)> fn, CLI::App* parent = nullptr) {
    CLI::App* s = (parent ? parent : &app)->add_subcommand(name, help);
    handlers[(parent ? parent->get_name() + " " : std::string()) + name] = std::move(fn);
    return s;
  };

  sub("validate", "check the axioms of a quantale, Q-order, space or t-norm file", cmd_validate)
      ->add_option("input", f.input, "file or built-in quantale name")
      ->required();
  sub("props", "basic properties of a quantale", cmd_props);
  sub("flat-ideals", "flat ideals of a Q-ordered set", cmd_flat_ideals);
  sub("waybelow", "the way-below relation and its basic properties", cmd_waybelow);
  sub("fdomain", "decide whether a Q-ordered set is an F-domain", cmd_fdomain);
  sub("scott", "the Scott Q-topology of a Q-ordered set", cmd_scott)
      ->add_option("--check", f.check, "sober, t0, f-domain or none");
  sub("sober", "decide sobriety of a Q-topological space", cmd_sober);
  sub("sobrify", "sobrification of a space and the map eta", cmd_sobrify)
      ->add_option("--out", f.out_file, "write the sobrified space as JSON");
  sub("spatial", "decide spatiality of a Q-module", cmd_spatial)
      ->add_option("--module", f.module, "diamond, self or power:<n> instead of O(--space)");

  CLI::App* tn = app.add_subcommand("tnorm", "analytics for continuous t-norms on [0,1]");
  tn->require_subcommand(1);
  sub("d", "the smallest flat ideal d(x)", cmd_tnorm_d, tn)->add_option("--x", f.x, "the point x");
  sub("scott-open", "Scott-openness of a coweight of ([0,1], alpha_L)", cmd_tnorm_scott_open, tn)
      ->add_option("--psi", f.psi, "rep:<a>, const:<v>, cx:<c>, jump:<a>, id, or a file of samples");
  sub("domain-cond", "whether ([0,1], alpha_L) is an F-domain", cmd_tnorm_domain, tn);
  sub("sierpinski-eq", "whether the Scott and Sierpinski topologies agree", cmd_tnorm_sierpinski, tn);
  CLI::App* ar = sub("alphaR", "whether ([0,1], alpha_R) is an F-domain", cmd_tnorm_alphaR, tn);
  ar->add_option("--psi", f.psi, "optional coweight of ([0,1], alpha_R) to test");
  ar->add_option("--bound", f.bound, "idempotent bound b for the coweight test");

  CLI::App* suite = app.add_subcommand("suite", "run a named verification suite");
  suite->add_option("name", f.suite, "suite name or number, or all");
  suite->add_flag("--list", f.list, "list the suites");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    Context ctx(f);
    Stopwatch clock;
    RunReport report;
    if (suite->parsed()) {
      report = cmd_suite(ctx, out);
      if (f.list || f.suite.empty()) return kExitPass;
    } else {
      std::string key;
      for (const CLI::App* s : app.get_subcommands()) {
        key = s->get_name();
        for (const CLI::App* v : s->get_subcommands()) key += " " + v->get_name();
      }
      report = handlers.at(key)(ctx);
    }
    if (f.timing) report.parameters.emplace_back("total runtime ms", Context::number(clock.ms()));
    if (f.json) {
      out << report.to_json(f.timing).dump(2) << "\n";
    } else {
      out << report.to_text(f.timing);
    }
    return report.pass() ? kExitPass : kExitCheckFailed;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const StructuralError& e) {
    err << "structural error: " << e.what() << "\n";
  } catch (const InvalidInstance& e) {
    err << "invalid instance: " << e.what() << "\n";
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
  }
  return kExitInputError;
}

}  // namespace quantopia
