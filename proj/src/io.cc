// Copyright 2023 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mcube/io.h"

#include <algorithm>
#include <charconv>
#include <climits>
#include <functional>
#include <initializer_list>
#include <set>
#include <sstream>

#include "mcube/error.h"

namespace mcube {

namespace {

void expect_keys(const Json& j, std::initializer_list<const char*> keys,
                 const std::string& what) {
  if (!j.is_object()) throw InvalidInput(what + " must be a JSON object");
  for (const char* k : keys) {
    if (!j.contains(k)) throw InvalidInput(what + " is missing \"" + k + "\"");
  }
  for (const auto& [k, v] : j.items()) {
    if (std::find_if(keys.begin(), keys.end(), [&](const char* s) {
          return k == s;
        }) == keys.end()) {
      throw InvalidInput(what + " has unknown key \"" + k + "\"");
    }
  }
}

const Json& array_of(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InvalidInput(what + " must be an array");
  return j;
}

int to_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw InvalidInput(what + " must be an integer");
  if (j.is_number_unsigned()) {
    auto v = j.get<std::uint64_t>();
    if (v > static_cast<std::uint64_t>(INT_MAX)) {
      throw InvalidInput(what + " is out of range");
    }
    return static_cast<int>(v);
  }
  auto v = j.get<std::int64_t>();
  if (v < INT_MIN || v > INT_MAX) throw InvalidInput(what + " is out of range");
  return static_cast<int>(v);
}

std::vector<int> int_list(const Json& j, const std::string& what) {
  std::vector<int> out;
  for (const Json& v : array_of(j, what)) out.push_back(to_int(v, what));
  return out;
}

std::vector<std::string> string_list(const Json& j, const std::string& what) {
  std::vector<std::string> out;
  for (const Json& v : array_of(j, what)) {
    if (!v.is_string()) throw InvalidInput(what + " entries must be strings");
    out.push_back(v.get<std::string>());
  }
  std::set<std::string> unique(out.begin(), out.end());
  if (unique.size() != out.size()) {
    throw InvalidInput(what + " has repeated labels");
  }
  return out;
}

Width width_from(const Json& j) {
  std::vector<int> w = int_list(j, "width");
  for (int e : w) {
    if (e < 0) throw InvalidInput("width entries must be non-negative");
  }
  return Width(std::move(w));
}

Point point_from(const Json& j, std::size_t d) {
  Point p(int_list(j, "point"));
  if (p.dimension() != d) {
    throw InvalidInput("point " + to_string(p) + " has the wrong dimension");
  }
  return p;
}

BigInt big_from(const Json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? BigInt(j.get<std::uint64_t>())
                                  : BigInt(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    if (s.size() == start ||
        !std::all_of(s.begin() + start, s.end(),
                     [](char c) { return c >= '0' && c <= '9'; })) {
      throw InvalidInput("coefficient \"" + s + "\" is not an integer");
    }
    return BigInt(s);
  }
  throw InvalidInput("coefficient must be an integer or a string");
}

Rational rational_from(const Json& j) {
  if (j.is_number_integer()) return Rational(big_from(j));
  if (!j.is_string()) throw InvalidInput("rational entries must be strings");
  const std::string s = j.get<std::string>();
  const std::size_t slash = s.find('/');
  Json num = s.substr(0, slash);
  if (slash == std::string::npos) return Rational(big_from(num));
  BigInt den = big_from(Json(s.substr(slash + 1)));
  if (den == 0) throw InvalidInput("rational \"" + s + "\" has zero denominator");
  return Rational(big_from(num), den);
}

template <class T>
T set_function_from(const Json& j, const std::string& what) {
  expect_keys(j, {"ground", "rank"}, what);
  std::vector<std::string> ground = string_list(j["ground"], "ground");
  std::vector<int> rank = int_list(j["rank"], "rank");
  return T(std::move(ground), std::move(rank));
}

std::string pad(const std::string& s, std::size_t w) {
  return std::string(w - std::min(w, s.size()), ' ') + s;
}

// Lays out cell(x) for the points of a hypercuboid of dimension at most 3.
std::string render(const Hypercuboid& c,
                   const std::function<std::string(std::size_t)>& cell) {
  const std::size_t d = c.dimension();
  if (d > 3) {
    throw InvalidInput("grid rendering supports at most three dimensions");
  }
  std::size_t w = 1;
  for (std::size_t x = 0; x < c.size(); ++x) w = std::max(w, cell(x).size());
  const Width& r = c.width();
  const int r0 = d > 0 ? r[0] : 0;
  const int r1 = d > 1 ? r[1] : 0;
  const int r2 = d > 2 ? r[2] : 0;
  std::ostringstream out;
  for (int k = 0; k <= r2; ++k) {
    if (d == 3) out << (k > 0 ? "\n" : "") << "R_" << k << "\n";
    for (int row = r1; row >= 0; --row) {
      for (int col = 0; col <= r0; ++col) {
        std::vector<int> coords;
        if (d > 0) coords.push_back(col);
        if (d > 1) coords.push_back(row);
        if (d > 2) coords.push_back(k);
        out << (col > 0 ? " " : "") << pad(cell(c.index(Point(coords))), w);
      }
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(); }

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    int v = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + end;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last) {
      throw InvalidInput("\"" + text + "\" is not a list of integers");
    }
    out.push_back(v);
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

Json serialize(const Width& w) { return Json(w.entries()); }
Json serialize(const Point& p) { return Json(p.coords()); }

Json serialize(const RankTable& t) {
  Json j;
  j["width"] = serialize(t.width());
  j["rank"] = t.values();
  return j;
}

Json serialize(const Matricube& m) { return serialize(m.table()); }

RankTable rank_table_from_json(const Json& j) {
  expect_keys(j, {"width", "rank"}, "matricube");
  Width w = width_from(j["width"]);
  return RankTable(std::move(w), int_list(j["rank"], "rank"));
}

Matricube matricube_from_json(const Json& j) {
  return Matricube(rank_table_from_json(j));
}

Json serialize(const PointSet& s) {
  Json j;
  j["width"] = serialize(s.width());
  Json points = Json::array();
  for (const Point& p : s.points()) points.push_back(serialize(p));
  j["points"] = std::move(points);
  return j;
}

PointSet point_set_from_json(const Json& j) {
  expect_keys(j, {"width", "points"}, "point set");
  Width w = width_from(j["width"]);
  std::vector<Point> points;
  for (const Json& p : array_of(j["points"], "points")) {
    points.push_back(point_from(p, w.dimension()));
  }
  return PointSet(std::move(w), points);
}

Json serialize(const TwoVarPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json coeff;
    if (c >= INT64_MIN && c <= INT64_MAX) {
      coeff = c.convert_to<std::int64_t>();
    } else {
      coeff = c.str();
    }
    terms.push_back(Json::array({e.first, e.second, coeff}));
  }
  Json j;
  j["terms"] = std::move(terms);
  return j;
}

TwoVarPolynomial polynomial_from_json(const Json& j) {
  expect_keys(j, {"terms"}, "polynomial");
  TwoVarPolynomial p;
  for (const Json& t : array_of(j["terms"], "terms")) {
    if (!t.is_array() || t.size() != 3) {
      throw InvalidInput("terms must be [dx, dy, coefficient]");
    }
    const int dx = to_int(t[0], "degree"), dy = to_int(t[1], "degree");
    if (dx < 0 || dy < 0) throw InvalidInput("degrees must be non-negative");
    p += TwoVarPolynomial::monomial(dx, dy, big_from(t[2]));
  }
  return p;
}

Json serialize(const CubicalMatrix& c) {
  Json j;
  Json field;
  if (c.field.kind() == FieldSpec::Kind::kRational) {
    field["kind"] = "rational";
  } else {
    field["kind"] = "prime";
    field["p"] = c.field.p();
  }
  j["field"] = std::move(field);
  j["m"] = c.m;
  Json dirs = Json::array();
  for (const std::vector<Vector>& dir : c.vectors) {
    Json vs = Json::array();
    for (const Vector& v : dir) {
      Json entries = Json::array();
      for (const Rational& e : v) {
        if (c.field.kind() == FieldSpec::Kind::kPrime) {
          entries.push_back(numerator(e).convert_to<std::int64_t>());
        } else {
          entries.push_back(e.str());
        }
      }
      vs.push_back(std::move(entries));
    }
    dirs.push_back(std::move(vs));
  }
  j["vectors"] = std::move(dirs);
  return j;
}

CubicalMatrix cubical_matrix_from_json(const Json& j) {
  expect_keys(j, {"field", "m", "vectors"}, "cubical matrix");
  CubicalMatrix c;
  const Json& f = j["field"];
  if (!f.is_object() || !f.contains("kind") || !f["kind"].is_string()) {
    throw InvalidInput("field must have a \"kind\"");
  }
  if (f["kind"] == "rational") {
    expect_keys(f, {"kind"}, "field");
    c.field = FieldSpec::rational();
  } else if (f["kind"] == "prime") {
    expect_keys(f, {"kind", "p"}, "field");
    const int p = to_int(f["p"], "p");
    if (p < 2) throw InvalidInput("p must be a prime");
    c.field = FieldSpec::prime(static_cast<std::uint64_t>(p));
  } else {
    throw InvalidInput("field kind must be \"rational\" or \"prime\"");
  }
  c.m = to_int(j["m"], "m");
  for (const Json& dir : array_of(j["vectors"], "vectors")) {
    std::vector<Vector> vs;
    for (const Json& v : array_of(dir, "vectors")) {
      Vector vec;
      for (const Json& e : array_of(v, "vector")) {
        if (c.field.kind() == FieldSpec::Kind::kPrime && !e.is_number_integer()) {
          throw InvalidInput("prime field entries must be integers");
        }
        vec.push_back(rational_from(e));
      }
      vs.push_back(std::move(vec));
    }
    c.vectors.push_back(std::move(vs));
  }
  c.check();
  return c;
}

Json serialize(const SetFunction& f) {
  Json j;
  j["ground"] = f.ground();
  j["rank"] = f.ranks();
  return j;
}

Matroid matroid_from_json(const Json& j) {
  return set_function_from<Matroid>(j, "matroid");
}

Polymatroid polymatroid_from_json(const Json& j) {
  return set_function_from<Polymatroid>(j, "polymatroid");
}

Json serialize(const CoherentComplex& cc) {
  Json j;
  j["width"] = serialize(cc.width);
  Json ms = Json::object();
  for (std::size_t x = 0; x < cc.matroids.size(); ++x) {
    ms[std::to_string(x)] = serialize(cc.matroids[x]);
  }
  j["matroids"] = std::move(ms);
  return j;
}

CoherentComplex coherent_from_json(const Json& j) {
  expect_keys(j, {"width", "matroids"}, "coherent complex");
  CoherentComplex cc{width_from(j["width"]), {}};
  const Hypercuboid c(cc.width);
  const Json& ms = j["matroids"];
  if (!ms.is_object() || ms.size() != c.size()) {
    throw InvalidInput("matroids must map each of the " +
                       std::to_string(c.size()) + " point indices");
  }
  for (std::size_t x = 0; x < c.size(); ++x) {
    const std::string key = std::to_string(x);
    if (!ms.contains(key)) throw InvalidInput("no matroid at index " + key);
    cc.matroids.push_back(matroid_from_json(ms[key]));
  }
  return cc;
}

Json serialize(const FlagMatroid& f) {
  Json j;
  j["ground"] = f.ground;
  Json cs = Json::array();
  for (const Matroid& m : f.constituents) cs.push_back(m.ranks());
  j["constituents"] = std::move(cs);
  return j;
}

FlagMatroid flag_matroid_from_json(const Json& j) {
  expect_keys(j, {"ground", "constituents"}, "flag matroid");
  FlagMatroid f{string_list(j["ground"], "ground"), {}};
  for (const Json& c : array_of(j["constituents"], "constituents")) {
    f.constituents.emplace_back(f.ground, int_list(c, "rank"));
  }
  return f;
}

Json serialize(const DotArray& p) {
  Json j;
  j["r"] = p.r();
  j["d"] = p.d();
  Json dots = Json::array();
  for (const Point& x : p.dots()) dots.push_back(serialize(x));
  j["dots"] = std::move(dots);
  return j;
}

DotArray dot_array_from_json(const Json& j) {
  expect_keys(j, {"r", "d", "dots"}, "dot array");
  const int r = to_int(j["r"], "r");
  const int d = to_int(j["d"], "d");
  if (d < 1) throw InvalidInput("d must be positive");
  std::vector<Point> dots;
  for (const Json& p : array_of(j["dots"], "dots")) {
    dots.push_back(point_from(p, static_cast<std::size_t>(d)));
  }
  return DotArray(r, static_cast<std::size_t>(d), dots);
}

std::string render_grid(const RankTable& t) {
  return render(t.cube(), [&](std::size_t x) { return std::to_string(t[x]); });
}

std::string render_grid(const PointSet& s) {
  return render(s.cube(), [&](std::size_t x) {
    return std::string(s.contains_index(x) ? "*" : ".");
  });
}

}  // namespace mcube
