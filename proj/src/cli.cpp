#include "realknot/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <map>
#include <optional>
#include <sstream>

#include "realknot/curvefile.hpp"
#include "realknot/error.hpp"
#include "realknot/sphere.hpp"
#include "realknot/writhe.hpp"

namespace realknot {
namespace {

using json = nlohmann::ordered_json;

struct Check {
  std::string name;
  std::string status;  // "pass", "fail" or "info"
  json value;
};

struct Report {
  explicit Report(std::string cmd) : command(std::move(cmd)) {}

  std::string command;
  std::vector<Check> checks;
  json certificates = json::object();
  std::optional<CurveFile> curve;
  std::string summary;

  void info(const std::string& name, json v) { checks.push_back({name, "info", std::move(v)}); }
  void test(const std::string& name, bool ok, json v) { checks.push_back({name, ok ? "pass" : "fail", std::move(v)}); }
  void test(const std::string& name, bool ok) { test(name, ok, ok); }
};

std::string text_of(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + text_of(v[i]);
    return s;
  }
  return v.dump();
}

json rat_json(const Rat& r) { return to_string(r); }

json vec_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json matrix_json(const Matrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vec_json(m.row(i)));
  return a;
}

std::string pair_str(std::pair<int, int> p) { return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")"; }

std::string point_str(const Vec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ":" : "") + to_string(v[i]);
  return s + "]";
}

Vec parse_vec(const std::string& text) {
  Vec out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    out.push_back(parse_rat(item));
  }
  return out;
}

std::string plural(int n, const std::string& word) { return std::to_string(n) + " " + word + (n == 1 ? "" : "s"); }

class Runner {
 public:
  Runner(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  bool json_mode = false;

  RationalCurve load(const std::string& path) {
    CurveFile f;
    if (path == "-") {
      if (stdin_used_) throw ParseError("standard input can only be read once");
      stdin_used_ = true;
      f = parse_curve_file(in_);
    } else {
      f = read_curve_file(path);
    }
    return to_curve(f);
  }

  void emit(const Report& r, double ms) {
    if (json_mode) {
      json doc;
      doc["command"] = r.command;
      doc["summary"] = r.summary;
      json checks = json::array();
      for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"status", c.status}, {"value", c.value}});
      doc["checks"] = checks;
      doc["certificates"] = r.certificates;
      if (r.curve) doc["curve"] = format_curve_file(*r.curve);
      doc["timing"] = {{"elapsed_ms", ms}};
      out_ << doc.dump(2) << "\n";
      return;
    }
    // Curve-producing commands keep stdout a valid curve file; the report rides along as comments.
    std::string prefix = r.curve ? "# " : "";
    for (const auto& c : r.checks) {
      out_ << prefix << c.name << ": " << text_of(c.value);
      if (c.status != "info") out_ << " [" << c.status << "]";
      out_ << "\n";
    }
    if (!r.summary.empty()) out_ << prefix << r.summary << "\n";
    if (r.curve) out_ << format_curve_file(*r.curve);
  }

 private:
  std::istream& in_;
  std::ostream& out_;
  bool stdin_used_ = false;
};

void add_curve_facts(Report& r, const RationalCurve& c) {
  r.info("ambient", c.ambient == Ambient::P3 ? "P3" : "P4");
  r.info("degree", c.degree());
  if (c.ambient == Ambient::P4) r.info("on-sphere", c.on_sphere);
}

std::string singular_summary(const NonsingularCertificate& cert) {
  std::map<DoublePoint::Kind, int> counts;
  for (const auto& p : cert.double_points) ++counts[p.kind];
  std::vector<std::string> parts;
  if (counts[DoublePoint::Kind::RealCrossing]) parts.push_back(plural(counts[DoublePoint::Kind::RealCrossing], "real double point"));
  if (counts[DoublePoint::Kind::Solitary]) parts.push_back(plural(counts[DoublePoint::Kind::Solitary], "solitary double point"));
  if (counts[DoublePoint::Kind::ComplexPair])
    parts.push_back(plural(counts[DoublePoint::Kind::ComplexPair], "non-real double point"));
  if (!cert.cusps.empty()) parts.push_back(plural(static_cast<int>(cert.cusps.size()), "cusp"));
  if (parts.empty()) parts.push_back("not an immersion");
  std::string s = "singular: ";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + parts[i];
  return s;
}

Report cmd_verify(Runner& run, const std::string& path) {
  RationalCurve c = run.load(path);
  Report r("verify");
  add_curve_facts(r, c);
  NonsingularCertificate cert = is_nonsingular_knot(c);
  r.test("immersion", cert.immersion);
  r.info("double-points", static_cast<int>(cert.double_points.size()));
  r.info("cusps", static_cast<int>(cert.cusps.size()));
  r.test("nonsingular", cert.nonsingular);
  json dps = json::array(), cusps = json::array(), res = json::array();
  for (const auto& p : cert.double_points) dps.push_back(describe(p));
  for (const auto& p : cert.cusps) cusps.push_back(describe(p));
  for (const auto& [name, v] : cert.resultants) res.push_back({{"name", name}, {"value", to_string(v)}});
  r.certificates = {{"eliminant_degree", cert.eliminant_degree}, {"double_points", dps}, {"cusps", cusps}, {"resultants", res}};
  r.summary = cert.nonsingular ? "nonsingular" : singular_summary(cert);
  return r;
}

Report cmd_writhe(Runner& run, const std::string& path, int centers) {
  RationalCurve c = run.load(path);
  Report r("writhe");
  add_curve_facts(r, c);
  WritheResult w = encomplexed_writhe(c, centers);
  r.info("samples", w.samples);
  r.test("center-independent", true, static_cast<int>(w.samples.size()));
  r.info("real-crossings", w.real_crossings);
  r.info("solitary-crossings", w.solitary);
  r.certificates = {{"writhe", w.writhe}, {"samples", w.samples}};
  r.summary = "writhe: " + std::to_string(w.writhe);
  return r;
}

ProjectionFrame frame_from(const std::string& center) {
  return center.empty() ? standard_frame() : make_frame(parse_vec(center));
}

void add_trace(Report& r, const InfinityTrace& t) {
  r.info("trace-degree", t.degree);
  r.info("trace-real", t.real_count());
  r.info("trace-pairs", t.pair_count());
  r.test("trace-on-empty-conic", t.all_on_conic(), std::to_string(t.on_conic) + "/" + std::to_string(t.degree));
  if (t.conic_witness) {
    Inertia in = signature(*t.conic_witness);
    r.test("conic-definite", is_definite(*t.conic_witness), "(" + std::to_string(in.pos) + "," + std::to_string(in.neg) + "," + std::to_string(in.zero) + ")");
  }
}

Report cmd_project(Runner& run, const std::string& path, const std::string& center) {
  RationalCurve c = run.load(path);
  Report r("project");
  ProjectionFrame f = frame_from(center);
  Projection p = project(c, f);
  r.info("center", point_str(f.center));
  r.info("center-multiplicity", p.center_multiplicity);
  r.info("degree", p.curve.degree());
  add_trace(r, p.trace);
  r.certificates = {{"transform", matrix_json(f.transform)}};
  r.curve = from_curve(p.curve, {{"source", path}, {"center", point_str(f.center)}});
  return r;
}

LiftMode parse_mode(const std::string& s) {
  if (s == "auto") return LiftMode::Auto;
  if (s == "preserve") return LiftMode::Preserve;
  if (s == "point") return LiftMode::Point;
  if (s == "double-point") return LiftMode::DoublePoint;
  throw ParseError("unknown lift mode: " + s);
}

Report cmd_lift(Runner& run, const std::string& path, const std::string& mode, const std::string& center) {
  RationalCurve c = run.load(path);
  Report r("lift");
  ProjectionFrame f = frame_from(center);
  LiftMode m = parse_mode(mode);
  RationalCurve k = lift(c, m, f);
  r.info("mode", to_string(m));
  r.info("input-degree", c.degree());
  r.info("degree", k.degree());
  r.test("on-sphere", k.on_sphere);
  r.curve = from_curve(k, {{"source", path}, {"lift_mode", to_string(m)}});
  return r;
}

Report cmd_join(Runner& run, const std::string& p1, const std::string& p2, const std::string& eps, int max_halvings) {
  RationalCurve a = run.load(p1), b = run.load(p2);
  if (a.ambient != b.ambient) throw MathError(ErrorKind::DimensionMismatch, "inputs live in different spaces");
  Report r("join");
  Rat e = parse_rat(eps);
  JoinResult j;
  if (a.ambient == Ambient::P3) {
    Vec m = unique_common_point(a, b);
    r.info("meeting-point", point_str(m));
    j = join_curves(a, b, m, e, max_halvings);
  } else {
    j = join_on_sphere(a, b, e, max_halvings);
  }
  r.info("epsilon", to_string(j.epsilon));
  r.info("halvings", j.halvings);
  r.info("degree", j.curve.degree());
  NonsingularCertificate cert = is_nonsingular_knot(j.curve);
  r.test("nonsingular", cert.nonsingular);
  r.curve = from_curve(j.curve, {{"source", p1 + " " + p2}, {"epsilon", to_string(j.epsilon)}});
  return r;
}

Report cmd_bidegree(Runner& run, const std::string& path) {
  RationalCurve c = run.load(path);
  Report r("bidegree");
  add_curve_facts(r, c);
  BiDegreeSplit b = bidegree_split(c);
  r.info("complex-bidegree", pair_str(b.complex_bidegree));
  r.info("real-bidegree", pair_str(b.real_bidegree));
  r.info("orbit-normal-form", pair_str(b.orbit_normal_form));
  r.test("not-22", !b.singular_flag);
  r.certificates = {{"q0", to_string(b.q0)}, {"q1", to_string(b.q1)}, {"q2", to_string(b.q2)}, {"q3", to_string(b.q3)}};
  return r;
}

Report cmd_quadric(Runner& run, const std::string& path) {
  RationalCurve c = run.load(path);
  Report r("quadric");
  add_curve_facts(r, c);
  auto basis = quadric_through_curve(c);
  r.info("dimension", static_cast<int>(basis.size()));
  json forms = json::array(), types = json::array();
  for (const auto& q : basis) {
    forms.push_back(q.str());
    if (c.ambient == Ambient::P3) types.push_back(to_string(classify_quadric(q)));
  }
  if (c.ambient == Ambient::P3) {
    r.info("basis-types", types);
    // a quadric vanishing at 2d + 1 points of the curve contains it
    std::vector<ProjPoint> pts;
    for (int k = 0; k <= 2 * c.degree(); ++k) {
      auto v = c.eval(GaussRat(Rat(k - c.degree())), GaussRat(Rat(1)));
      pts.emplace_back(v);
    }
    auto sphere = sphere_through(pts);
    r.test("on-sphere-type-quadric", sphere.has_value());
    if (sphere) r.certificates["sphere"] = sphere->str();
  } else {
    r.test("on-sphere", on_quadric(c, sphere_form()));
  }
  r.certificates["basis"] = forms;
  return r;
}

Report cmd_torus(int degree, int m, const std::string& radii) {
  Report r("torus-knot");
  Vec rr = parse_vec(radii);
  if (rr.size() != 2) throw ParseError("--radii takes two rationals a,b");
  RationalCurve c = torus_knot(degree, m, {rr[0], rr[1]});
  r.info("degree", c.degree());
  r.info("m", m);
  r.curve = from_curve(c, {{"name", "torus_" + std::to_string(degree) + "_" + std::to_string(m)},
                           {"radii", to_string(rr[0]) + "," + to_string(rr[1])}});
  return r;
}

Report cmd_jacobian(Runner& run, const std::string& path, const std::string& samples, const std::string& chart) {
  RationalCurve c = run.load(path);
  Report r("jacobian");
  add_curve_facts(r, c);
  std::vector<Rat> pts = samples.empty() ? default_samples() : parse_vec(samples);
  Chart ch;
  if (!chart.empty()) {
    Vec v = parse_vec(chart);
    if (v.size() != 2 || v[0].get_den() != 1 || v[1].get_den() != 1) throw ParseError("--chart takes two integers coord,index");
    ch.coord = static_cast<int>(v[0].get_num().get_si());
    ch.index = static_cast<int>(v[1].get_num().get_si());
  }
  int rank = jacobian_rank(c, pts, ch);
  r.info("samples", static_cast<int>(pts.size()));
  r.certificates = {{"rank", rank}};
  r.summary = "rank: " + std::to_string(rank);
  return r;
}

Report cmd_link(Runner& run, const std::string& p1, const std::string& p2) {
  RationalCurve a = run.load(p1), b = run.load(p2);
  Report r("link");
  int lk = linking_number(a, b);
  r.certificates = {{"linking_number", lk}};
  r.summary = "linking number: " + std::to_string(lk);
  return r;
}

Report cmd_double_points(Runner& run, const std::string& path) {
  RationalCurve c = run.load(path);
  Report r("double-points");
  add_curve_facts(r, c);
  auto pts = double_points(c);
  json list = json::array();
  for (const auto& p : pts) list.push_back(describe(p));
  r.info("count", static_cast<int>(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i) r.info("point " + std::to_string(i + 1), describe(pts[i]));
  r.certificates = {{"double_points", list}};
  return r;
}

Report cmd_retract(Runner& run, const std::string& path) {
  RationalCurve c = run.load(path);
  if (c.ambient != Ambient::P3) throw MathError(ErrorKind::DimensionMismatch, "retract works on curves in RP^3");
  Report r("retract");
  auto factors = quadratic_factors(affine(c.coords[0]));
  if (factors.empty()) throw MathError(ErrorKind::NoQuadraticFactor, "x0 has no rational quadratic factor with non-real roots");
  const Poly& q = factors.front();
  Rat disc = q.coeff(1) * q.coeff(1) - 4 * q.coeff(0);
  QuadExt x = make_quad(-q.coeff(1) / 2, Rat(1, 2), disc);
  auto z = c.eval(x, QuadExt(Rat(1)));
  Vec u, v;
  Rat d = x.radicand;
  for (std::size_t i = 1; i < 4; ++i) {
    u.push_back(z[i].a);
    v.push_back(z[i].b);
    if (sgn(z[i].b) != 0) d = z[i].radicand;
  }
  QuadraticForm target = standard_empty_conic();
  RetractTransform t = retract_to_conic(u, v, d, target);
  r.info("factor", q.str());
  r.info("trace-point", "[0:" + to_string(z[1]) + ":" + to_string(z[2]) + ":" + to_string(z[3]) + "]");
  r.info("delta", to_string(t.delta));
  r.info("theta", point_str(t.theta));
  r.info("rational", t.is_rational());
  r.test("maps-onto-conic", retract_maps_onto(t, u, v, d, target));
  r.certificates = {{"rational_part", matrix_json(t.rational)}, {"radical_part", matrix_json(t.radical)}, {"delta", rat_json(t.delta)}};
  return r;
}

struct CorpusRow {
  std::string file, ambient, degree, status, writhe, roundtrip;
};

CorpusRow corpus_row(const std::filesystem::path& p) {
  CorpusRow row{p.filename().string(), "-", "-", "-", "-", "-"};
  try {
    RationalCurve c = to_curve(read_curve_file(p.string()));
    row.ambient = c.ambient == Ambient::P3 ? "P3" : (c.on_sphere ? "S3" : "P4");
    row.degree = std::to_string(c.degree());
    NonsingularCertificate cert = is_nonsingular_knot(c);
    row.status = cert.nonsingular ? "nonsingular" : singular_summary(cert).substr(10);
    try {
      WritheResult w = encomplexed_writhe(c, 3);
      row.writhe = std::to_string(w.writhe);
    } catch (const MathError& e) {
      row.writhe = to_string(e.kind());
    }
    if (c.ambient == Ambient::P3 || c.on_sphere) {
      RoundTrip rt = round_trip(c);
      row.roundtrip = rt.ok && (c.ambient == Ambient::P3 || rt.trace_on_conic) ? "ok" : "FAILED";
    }
  } catch (const std::exception& e) {
    row.status = "error";
    row.writhe = e.what();
  }
  return row;
}

Report cmd_corpus(const std::string& dir) {
  Report r("corpus-run");
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".curve") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  json rows = json::array();
  std::ostringstream table;
  table << std::left << std::setw(20) << "file" << std::setw(8) << "space" << std::setw(8) << "degree" << std::setw(34) << "status"
        << std::setw(24) << "writhe" << "round-trip\n";
  for (const auto& f : files) {
    CorpusRow row = corpus_row(f);
    rows.push_back({{"file", row.file}, {"space", row.ambient}, {"degree", row.degree}, {"status", row.status},
                    {"writhe", row.writhe}, {"roundtrip", row.roundtrip}});
    table << std::setw(20) << row.file << std::setw(8) << row.ambient << std::setw(8) << row.degree << std::setw(34) << row.status
          << std::setw(24) << row.writhe << row.roundtrip << "\n";
  }
  r.info("files", static_cast<int>(files.size()));
  r.certificates = {{"rows", rows}};
  r.summary = table.str();
  if (!r.summary.empty() && r.summary.back() == '\n') r.summary.pop_back();
  return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with real rational knots", "realknot"};
  app.require_subcommand(1);
  Runner run(in, out);
  app.add_flag("--json", run.json_mode, "Emit the report as JSON");

  std::function<Report()> action;
  std::string path, path2, center, mode = "auto", eps = "1/2", radii = "3/5,4/5", samples, chart;
  int centers = 3, max_halvings = 20, degree = 0, m = 0;

  auto* verify = app.add_subcommand("verify", "Certify nonsingularity (no double points, immersion)");
  verify->add_option("path", path, "Curve file or - for stdin")->required();
  verify->callback([&] { action = [&] { return cmd_verify(run, path); }; });

  auto* writhe = app.add_subcommand("writhe", "Encomplexed writhe of a nonsingular curve");
  writhe->add_option("path", path)->required();
  writhe->add_option("--centers", centers, "Independent projections that must agree")->check(CLI::Range(1, 16));
  writhe->callback([&] { action = [&] { return cmd_writhe(run, path, centers); }; });

  auto* proj = app.add_subcommand("project", "Stereographic projection of a sphere curve to RP^3");
  proj->add_option("path", path)->required();
  proj->add_option("--center", center, "Sphere point x0,...,x4 (default north pole)");
  proj->callback([&] { action = [&] { return cmd_project(run, path, center); }; });

  auto* lft = app.add_subcommand("lift", "Inverse stereographic projection to the sphere");
  lft->add_option("path", path)->required();
  lft->add_option("--mode", mode, "auto | preserve | point | double-point");
  lft->add_option("--center", center, "Sphere point x0,...,x4 (default north pole)");
  lft->callback([&] { action = [&] { return cmd_lift(run, path, mode, center); }; });

  auto* join = app.add_subcommand("join", "Join two curves meeting once into one knot");
  join->add_option("path1", path)->required();
  join->add_option("path2", path2)->required();
  join->add_option("--epsilon", eps, "Initial scale of the second curve");
  join->add_option("--max-halvings", max_halvings)->check(CLI::Range(0, 200));
  join->callback([&] { action = [&] { return cmd_join(run, path, path2, eps, max_halvings); }; });

  auto* bideg = app.add_subcommand("bidegree", "Bi-degree of a quartic on the quadric x0x3 = x1x2");
  bideg->add_option("path", path)->required();
  bideg->callback([&] { action = [&] { return cmd_bidegree(run, path); }; });

  auto* quad = app.add_subcommand("quadric", "Quadrics containing the curve");
  quad->add_option("path", path)->required();
  quad->callback([&] { action = [&] { return cmd_quadric(run, path); }; });

  auto* torus = app.add_subcommand("torus-knot", "Rational torus knot on the sphere");
  torus->add_option("--degree", degree)->required();
  torus->add_option("--m", m)->required();
  torus->add_option("--radii", radii, "a,b with a^2 + b^2 = 1");
  torus->callback([&] { action = [&] { return cmd_torus(degree, m, radii); }; });

  auto* jac = app.add_subcommand("jacobian", "Rank of the curve-space Jacobian at sample points");
  jac->add_option("path", path)->required();
  jac->add_option("--samples", samples, "Comma-separated rational parameters");
  jac->add_option("--chart", chart, "coord,index of the coefficient fixed to 1");
  jac->callback([&] { action = [&] { return cmd_jacobian(run, path, samples, chart); }; });

  auto* link = app.add_subcommand("link", "Linking number of two disjoint curves");
  link->add_option("path1", path)->required();
  link->add_option("path2", path2)->required();
  link->callback([&] { action = [&] { return cmd_link(run, path, path2); }; });

  auto* dps = app.add_subcommand("double-points", "List double points with kinds and images");
  dps->add_option("path", path)->required();
  dps->callback([&] { action = [&] { return cmd_double_points(run, path); }; });

  auto* retract = app.add_subcommand("retract", "Move a non-real trace point onto the empty conic");
  retract->add_option("path", path)->required();
  retract->callback([&] { action = [&] { return cmd_retract(run, path); }; });

  auto* corpus = app.add_subcommand("corpus-run", "Verify every .curve file in a directory");
  corpus->add_option("dir", path)->required()->check(CLI::ExistingDirectory);
  corpus->callback([&] { action = [&] { return cmd_corpus(path); }; });

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    auto t0 = std::chrono::steady_clock::now();
    Report r = action();
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    run.emit(r, ms);
    return kExitOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const MathError& e) {
    err << "math error: " << e.what() << "\n";
    return kExitMath;
  } catch (const InternalError& e) {
    err << "internal error (bug): " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error (bug): " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace realknot
