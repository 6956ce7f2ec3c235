// One PASS/FAIL line per acceptance criterion.
//
// Exit status is 0 when every criterion passes, except criteria listed in
// kExpectedFailures, which must fail (and still print FAIL with the measured values).
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "realknot/cli.hpp"
#include "realknot/curvefile.hpp"
#include "support.hpp"

using namespace realknot;
using fixtures::R;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Criterion 2 asks for |writhe| = 2 on the degree-4 torus knot. The projection of a
// rational space quartic is a plane rational quartic with three nodes; conjugate pairs
// of non-real nodes come in twos, so real plus solitary crossings is odd and the
// writhe is odd. The computed value is reported as is.
const std::map<int, std::string> kExpectedFailures = {
    {2, "writhe of a degree-4 knot is odd (three nodes in every plane projection)"},
};

std::vector<std::filesystem::path> corpus_files() {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(REALKNOT_CORPUS_DIR))
    if (e.path().extension() == ".curve") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  return files;
}

RationalCurve from_cli(const std::vector<std::string>& args) {
  std::istringstream in;
  std::ostringstream out, err;
  if (run_cli(args, in, out, err) != 0) throw std::runtime_error("cli failed: " + err.str());
  std::istringstream text(out.str());
  return to_curve(parse_curve_file(text));
}

std::string yn(bool b) { return b ? "yes" : "no"; }

Outcome c1() {
  RationalCurve k = from_cli({"torus-knot", "--degree", "2", "--m", "1"});
  bool ns = is_nonsingular_knot(k).nonsingular;
  int w = encomplexed_writhe(k).writhe;
  return {ns && k.on_sphere && w == 0, "nonsingular " + yn(ns) + ", on-sphere " + yn(k.on_sphere) + ", writhe " + std::to_string(w)};
}

Outcome c2() {
  RationalCurve k = from_cli({"torus-knot", "--degree", "4", "--m", "1"});
  bool ns = is_nonsingular_knot(k).nonsingular;
  int w = encomplexed_writhe(k).writhe;
  int mw = encomplexed_writhe(apply_transform(k, mirror_transform())).writhe;
  bool ok = ns && std::abs(w) == 2 && mw == -w;
  return {ok, "nonsingular " + yn(ns) + ", writhe " + std::to_string(w) + " (|w| = 2 required), mirror " + std::to_string(mw) +
                  " (opposite " + yn(mw == -w) + ")"};
}

Outcome c3() {
  RationalCurve k = from_cli({"torus-knot", "--degree", "6", "--m", "2"});
  bool ns = is_nonsingular_knot(k).nonsingular;
  int w = encomplexed_writhe(k).writhe;
  int w61 = encomplexed_writhe(from_cli({"torus-knot", "--degree", "6", "--m", "1"})).writhe;
  bool ok = ns && std::abs(w) == 4 && (w61 == 0 || std::abs(w61) == 2);
  return {ok, "(6,2) nonsingular " + yn(ns) + ", writhe " + std::to_string(w) + "; (6,1) writhe " + std::to_string(w61)};
}

Outcome c4() {
  int knots = 0;
  bool ok = true;
  std::string bad;
  for (const auto& f : corpus_files()) {
    RationalCurve c = to_curve(read_curve_file(f.string()));
    WritheResult w;
    try {
      w = encomplexed_writhe(c, 3);
    } catch (const MathError& e) {
      if (e.kind() == ErrorKind::Singular) continue;
      throw;
    } catch (const InternalError& e) {
      ok = false;
      bad += " " + f.filename().string();
      continue;
    }
    ++knots;
    std::set<int> distinct(w.samples.begin(), w.samples.end());
    if (w.samples.size() != 3 || distinct.size() != 1) {
      ok = false;
      bad += " " + f.filename().string();
    }
  }
  return {ok && knots > 0, std::to_string(knots) + " corpus knots, 3 centers each" + (bad.empty() ? "" : "; disagree:" + bad)};
}

Outcome c5() {
  auto walls = fixtures::wall_coords();
  bool ok = true;
  std::string detail;
  for (std::size_t i = 0; i < walls.size(); ++i) {
    auto pts = double_points(curve_from(walls[i], Ambient::P3));
    bool one = pts.size() == 1;
    ok = ok && one;
    if (!one) {
      detail += "wall " + std::to_string(i + 1) + ": " + std::to_string(pts.size()) + " points; ";
      continue;
    }
    const DoublePoint& p = pts[0];
    if (i < 4) {
      ok = ok && p.kind == DoublePoint::Kind::RealCrossing;
      continue;
    }
    bool solitary = p.kind == DoublePoint::Kind::Solitary && p.exact_params && p.exact_image;
    if (solitary) {
      // {[1:i], [1:-i]} written as [s:t] = [-+i : 1]
      for (const auto& st : *p.exact_params)
        solitary = solitary && st[1] == QuadExt(R(1)) && st[0].a == 0 && abs(st[0].b) == 1 && st[0].radicand == -1;
      const auto& img = *p.exact_image;
      solitary = solitary && img[0].is_zero() && img[1].is_zero() && img[2].is_zero() && img[3] == QuadExt(R(1));
    }
    ok = ok && solitary;
    detail += "fifth: " + describe(p);
  }
  return {ok, "4 real crossings; " + detail};
}

Outcome c6() {
  RationalCurve c = fixtures::class4_curve();
  BiDegreeSplit b = bidegree_split(c);
  bool segre = c.coords[0] * c.coords[3] == c.coords[1] * c.coords[2];
  bool ok = b.complex_bidegree == std::pair{1, 3} && segre;
  fixtures::Rng rng(1001);
  int twotwo = 0;
  for (int i = 0; i < 100; ++i)
    if (bidegree_split(fixtures::random_segre_quartic(rng)).complex_bidegree == std::pair{2, 2}) ++twotwo;
  ok = ok && twotwo == 0;
  return {ok, "class4 complex (" + std::to_string(b.complex_bidegree.first) + "," + std::to_string(b.complex_bidegree.second) +
                  "), x0x3 = x1x2 " + yn(segre) + "; random (2,2) splits: " + std::to_string(twotwo) + "/100"};
}

Outcome c7() {
  fixtures::Rng rng(1002);
  int good = 0, n = 0;
  while (n < 200) {
    int d = static_cast<int>(rng.integer(1, 6)), k = static_cast<int>(rng.integer(0, 3));
    Form p0 = rng.form(d), p1 = rng.form(d);
    Rat res = resultant(p0, p1);
    if (sgn(res) == 0) continue;
    ++n;
    Rat expect = res;
    for (int j = 0; j <= k; ++j) expect *= p1[d];  // coefficient of t^d
    Rat got = augmented_sylvester_det(p0, p1, k);
    if (got == expect || got == -expect) ++good;
  }
  return {good == 200, std::to_string(good) + "/200 exact"};
}

Outcome c8() {
  int r61 = jacobian_rank(torus_knot(6, 1)), r62 = jacobian_rank(torus_knot(6, 2));
  return {r61 == 13 && r62 == 13, "rank (6,1) " + std::to_string(r61) + ", (6,2) " + std::to_string(r62)};
}

Outcome c9() {
  int n = 0, ok_count = 0, sphere = 0, traces = 0;
  bool definite = is_definite(standard_empty_conic());
  for (const auto& f : corpus_files()) {
    RationalCurve c = to_curve(read_curve_file(f.string()));
    if (c.ambient == Ambient::P4 && !c.on_sphere) continue;
    ++n;
    RoundTrip rt = round_trip(c);
    if (rt.ok) ++ok_count;
    if (c.on_sphere) {
      ++sphere;
      if (rt.trace_on_conic) ++traces;
    }
  }
  bool ok = ok_count == n && traces == sphere && definite;
  return {ok, std::to_string(ok_count) + "/" + std::to_string(n) + " round trips, " + std::to_string(traces) + "/" +
                  std::to_string(sphere) + " sphere traces on the empty conic (definite " + yn(definite) + ")"};
}

Outcome c10() {
  fixtures::Rng rng(1003);
  int circles = 0, ellipses = 0;
  for (int i = 0; i < 50; ++i) {
    if (is_circle_image(fixtures::random_circle(rng))) ++circles;
    if (!is_circle_image(fixtures::random_ellipse(rng))) ++ellipses;
  }
  return {circles == 50 && ellipses == 50, std::to_string(circles) + "/50 circles accepted, " + std::to_string(ellipses) + "/50 ellipses rejected"};
}

// Infinity points of a curve whose x0 splits into rational quadratics with non-real roots,
// both conjugates, each scaled so its first nonzero coordinate is 1.
std::vector<std::vector<QuadExt>> trace_points(const RationalCurve& c) {
  std::vector<std::vector<QuadExt>> out;
  Poly x0 = affine(c.coords[0]);
  if (x0.degree() != c.degree()) throw std::runtime_error("trace at [1:0]");
  int covered = 0;
  for (const Poly& q : quadratic_factors(x0)) {
    Poly rest = x0;
    while ((rest % q).is_zero()) {
      rest = rest / q;
      covered += 2;
    }
    Rat disc = q.coeff(1) * q.coeff(1) - 4 * q.coeff(0);
    for (int sgn_root : {1, -1}) {
      QuadExt x = make_quad(-q.coeff(1) / 2, Rat(sgn_root, 2), disc);
      auto p = c.eval(x, QuadExt(R(1)));
      QuadExt lead;
      for (const auto& v : p)
        if (!v.is_zero()) {
          lead = v;
          break;
        }
      for (auto& v : p) v = v / lead;
      out.push_back(p);
    }
  }
  if (covered != x0.degree()) throw std::runtime_error("x0 does not split into quadratics");
  return out;
}

bool same_multiset(std::vector<std::vector<QuadExt>> a, std::vector<std::vector<QuadExt>> b) {
  if (a.size() != b.size()) return false;
  for (const auto& p : a) {
    auto it = std::find(b.begin(), b.end(), p);
    if (it == b.end()) return false;
    b.erase(it);
  }
  return true;
}

Outcome c11() {
  std::vector<std::pair<RationalCurve, RationalCurve>> pairs;
  pairs.emplace_back(to_curve(read_curve_file(std::string(REALKNOT_CORPUS_DIR) + "/join_a.curve")),
                     to_curve(read_curve_file(std::string(REALKNOT_CORPUS_DIR) + "/join_b.curve")));
  fixtures::Rng rng(1004);
  while (pairs.size() < 6) {
    Vec p = rng.point3();
    try {
      RationalCurve a = circle_through(p, rng.point3(), rng.point3()), b = circle_through(p, rng.point3(), rng.point3());
      unique_common_point(a, b);
      pairs.emplace_back(a, b);
    } catch (const MathError&) {
    }
  }
  int good = 0, max_h = 0;
  for (const auto& [a, b] : pairs) {
    JoinResult j = join_curves(a, b, unique_common_point(a, b));
    max_h = std::max(max_h, j.halvings);
    bool ns = is_nonsingular_knot(j.curve).nonsingular;
    auto ta = trace_points(a), tb = trace_points(b);
    ta.insert(ta.end(), tb.begin(), tb.end());
    bool traces = same_multiset(trace_points(j.curve), ta);
    if (ns && j.curve.degree() == 4 && j.halvings <= 20 && traces) ++good;
  }
  return {good == static_cast<int>(pairs.size()), std::to_string(good) + "/" + std::to_string(pairs.size()) +
                                                      " joins certified with exact trace union, max halvings " + std::to_string(max_h)};
}

Outcome c12() {
  fixtures::Rng rng(1005);
  int found = 0;
  for (int i = 0; i < 20; ++i) {
    auto [c1, c2] = fixtures::circles_meeting_twice(rng);
    std::vector<ProjPoint> pts;
    for (const auto* c : {&c1, &c2})
      for (int k = -3; k <= 3; ++k) pts.emplace_back(c->eval(GaussRat(R(k)), GaussRat(R(1))));
    auto s = sphere_through(pts);
    if (s && classify_quadric(*s) == QuadricType::Sphere) ++found;
  }
  return {found == 20, std::to_string(found) + "/20 pairs on a sphere-type quadric"};
}

Outcome c13() {
  RationalCurve ha = to_curve(read_curve_file(std::string(REALKNOT_CORPUS_DIR) + "/hopf_a.curve"));
  RationalCurve hb = to_curve(read_curve_file(std::string(REALKNOT_CORPUS_DIR) + "/hopf_b.curve"));
  RationalCurve ua = to_curve(read_curve_file(std::string(REALKNOT_CORPUS_DIR) + "/unlinked_a.curve"));
  RationalCurve ub = to_curve(read_curve_file(std::string(REALKNOT_CORPUS_DIR) + "/unlinked_b.curve"));
  int hopf = linking_number(ha, hb), sep = linking_number(ua, ub);
  return {std::abs(hopf) == 1 && sep == 0, "Hopf " + std::to_string(hopf) + ", separated " + std::to_string(sep)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    double budget_s;  // 0 means no time bound
    std::function<Outcome()> run;
  };
  std::vector<Criterion> all = {{1, 1, c1},  {2, 10, c2},  {3, 60, c3},  {4, 0, c4},   {5, 30, c5},  {6, 0, c6},  {7, 30, c7},
                                {8, 0, c8},  {9, 0, c9},   {10, 0, c10}, {11, 0, c11}, {12, 0, c12}, {13, 0, c13}};
  int unexpected = 0;
  for (const auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0 && s >= c.budget_s) {
      o.pass = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget";
    }
    std::ostringstream line;
    line << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail;
    line.precision(2);
    line << std::fixed << " [" << s << " s]";
    auto xf = kExpectedFailures.find(c.id);
    if (xf != kExpectedFailures.end()) {
      line << "  (expected failure: " << xf->second << ")";
      if (o.pass) ++unexpected;
    } else if (!o.pass) {
      ++unexpected;
    }
    std::cout << line.str() << std::endl;
  }
  return unexpected == 0 ? 0 : 1;
}
