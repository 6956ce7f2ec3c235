#include "realknot/curvefile.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "realknot/error.hpp"

namespace realknot {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& v, int line) {
  try {
    std::size_t pos = 0;
    int x = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line) + ": expected an integer, got '" + v + "'");
  }
}

}  // namespace

CurveFile parse_curve_file(std::istream& in) {
  CurveFile f;
  bool have_ambient = false, have_degree = false;
  std::map<int, std::vector<Rat>> rows;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw.substr(0, raw.find('#')));
    if (s.empty()) continue;
    auto eq = s.find('=');
    if (eq == std::string::npos) throw ParseError("line " + std::to_string(line) + ": expected key = value");
    std::string key = trim(s.substr(0, eq)), value = trim(s.substr(eq + 1));
    if (key == "ambient") {
      if (value == "P3") f.ambient = Ambient::P3;
      else if (value == "P4") f.ambient = Ambient::P4;
      else throw ParseError("line " + std::to_string(line) + ": ambient must be P3 or P4");
      have_ambient = true;
    } else if (key == "sphere") {
      if (value != "true" && value != "false") throw ParseError("line " + std::to_string(line) + ": sphere must be true or false");
      f.sphere_claim = value == "true";
    } else if (key == "degree") {
      f.degree = parse_int(value, line);
      if (f.degree < 0) throw ParseError("line " + std::to_string(line) + ": negative degree");
      have_degree = true;
    } else if (key.size() > 1 && key[0] == 'x') {
      int idx = parse_int(key.substr(1), line);
      if (rows.count(idx) != 0) throw ParseError("line " + std::to_string(line) + ": duplicate " + key);
      std::istringstream vs(value);
      std::vector<Rat> r;
      std::string tok;
      while (vs >> tok) {
        try {
          r.push_back(parse_rat(tok));
        } catch (const ParseError& e) {
          throw ParseError("line " + std::to_string(line) + ": " + e.what());
        }
      }
      rows[idx] = std::move(r);
    } else if (key.rfind("meta.", 0) == 0) {
      f.metadata[key.substr(5)] = value;
    } else {
      throw ParseError("line " + std::to_string(line) + ": unknown key '" + key + "'");
    }
  }
  if (!have_ambient) throw ParseError("missing ambient");
  if (!have_degree) throw ParseError("missing degree");
  int n = ambient_dim(f.ambient) + 1;
  for (int i = 0; i < n; ++i) {
    auto it = rows.find(i);
    if (it == rows.end()) throw ParseError("missing coordinate x" + std::to_string(i));
    if (static_cast<int>(it->second.size()) != f.degree + 1)
      throw ParseError("x" + std::to_string(i) + " needs " + std::to_string(f.degree + 1) + " coefficients");
    f.coeffs.push_back(it->second);
  }
  if (static_cast<int>(rows.size()) != n) throw ParseError("too many coordinates for the ambient space");
  return f;
}

CurveFile read_curve_file(const std::string& path) {
  if (path == "-") return parse_curve_file(std::cin);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_curve_file(in);
}

std::string format_curve_file(const CurveFile& f) {
  std::ostringstream os;
  os << "ambient = " << (f.ambient == Ambient::P3 ? "P3" : "P4") << "\n";
  os << "sphere = " << (f.sphere_claim ? "true" : "false") << "\n";
  os << "degree = " << f.degree << "\n";
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    os << "x" << i << " =";
    for (const auto& c : f.coeffs[i]) os << " " << to_string(c);
    os << "\n";
  }
  for (const auto& [k, v] : f.metadata) os << "meta." << k << " = " << v << "\n";
  return os.str();
}

void write_curve_file(const std::string& path, const CurveFile& f) {
  if (path == "-") {
    std::cout << format_curve_file(f);
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << format_curve_file(f);
}

RationalCurve to_curve(const CurveFile& f) {
  std::vector<Form> coords;
  for (const auto& r : f.coeffs) coords.emplace_back(r);
  RationalCurve c = curve_from(std::move(coords), f.ambient);
  if (f.sphere_claim && !c.on_sphere) throw ParseError("sphere = true but the curve is not on the sphere");
  return c;
}

CurveFile from_curve(const RationalCurve& c, std::map<std::string, std::string> metadata) {
  CurveFile f;
  f.ambient = c.ambient;
  f.sphere_claim = c.on_sphere;
  f.degree = c.degree();
  for (const auto& p : c.coords) f.coeffs.push_back(p.coeffs());
  f.metadata = std::move(metadata);
  return f;
}

}  // namespace realknot
