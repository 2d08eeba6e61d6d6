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

#include "mcube/cryptomorph.h"

#include <algorithm>
#include <limits>

#include "mcube/error.h"
#include "mcube/transforms.h"

namespace mcube {

namespace {

Violation make(std::string axiom, std::vector<Point> points,
               std::vector<std::size_t> dirs, std::string detail) {
  return Violation{std::move(axiom), std::move(points), std::move(dirs),
                   std::move(detail)};
}

bool push(ValidationReport& r, Violation v, ReportMode mode) {
  r.violations.push_back(std::move(v));
  return mode == ReportMode::kFirst;
}

// Members of s strictly above a that are minimal among those: the covers of
// a in the induced poset.
std::vector<std::size_t> covers_of(const PointSet& s,
                                   const std::vector<std::size_t>& members,
                                   std::size_t a) {
  const Hypercuboid& c = s.cube();
  std::vector<std::size_t> above;
  for (std::size_t b : members) {
    if (b != a && c.leq(a, b)) above.push_back(b);
  }
  std::vector<std::size_t> out;
  for (std::size_t b : above) {
    bool minimal = true;
    for (std::size_t e : above) {
      if (e != b && c.leq(e, b)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(b);
  }
  return out;
}

// Members of s strictly below a that are maximal among those.
std::vector<std::size_t> cocovers_of(const PointSet& s,
                                     const std::vector<std::size_t>& members,
                                     std::size_t a) {
  const Hypercuboid& c = s.cube();
  std::vector<std::size_t> below;
  for (std::size_t b : members) {
    if (b != a && c.leq(b, a)) below.push_back(b);
  }
  std::vector<std::size_t> out;
  for (std::size_t b : below) {
    bool maximal = true;
    for (std::size_t e : below) {
      if (e != b && c.leq(b, e)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(b);
  }
  return out;
}

bool all_widths_positive(const Width& w) {
  return std::all_of(w.entries().begin(), w.entries().end(),
                     [](int r) { return r > 0; });
}

std::optional<std::size_t> removal_index(const PointSet& j, std::size_t a,
                                         std::size_t i) {
  const Hypercuboid& c = j.cube();
  std::size_t b = a;
  for (int t = c.coord(a, i); t > 0; --t) {
    b -= c.stride(i);
    if (j.contains_index(b)) return b;
  }
  return std::nullopt;
}

std::size_t interval_size(const PointSet& s,
                          const std::vector<std::size_t>& members,
                          std::size_t lo, std::size_t hi) {
  const Hypercuboid& c = s.cube();
  std::size_t n = 0;
  for (std::size_t e : members) {
    if (c.leq(lo, e) && c.leq(e, hi)) ++n;
  }
  return n;
}

}  // namespace

PointSet::PointSet(Width width) : PointSet(Hypercuboid(std::move(width))) {}

PointSet::PointSet(Hypercuboid cube)
    : cube_(std::move(cube)), member_(cube_.size(), 0) {}

PointSet::PointSet(Width width, const std::vector<Point>& points)
    : PointSet(std::move(width)) {
  for (const Point& p : points) insert(p);
}

std::size_t PointSet::size() const {
  return static_cast<std::size_t>(
      std::count(member_.begin(), member_.end(), 1));
}

std::vector<std::size_t> PointSet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < member_.size(); ++k) {
    if (member_[k]) out.push_back(k);
  }
  return out;
}

std::vector<Point> PointSet::points() const {
  std::vector<Point> out;
  for (std::size_t k : indices()) out.push_back(cube_.point(k));
  return out;
}

FlatSet flats_of(const Matricube& m) {
  const Hypercuboid& c = m.cube();
  FlatSet f(c);
  for (std::size_t x = 0; x < c.size(); ++x) {
    bool flat = true;
    for (std::size_t i = 0; i < c.dimension() && flat; ++i) {
      auto y = c.up(x, i);
      flat = !y || m.rank_at(*y) == m.rank_at(x) + 1;
    }
    if (flat) f.insert_index(x);
  }
  return f;
}

ValidationReport validate_flat_axioms(const FlatSet& f, ReportMode mode) {
  ValidationReport r;
  const Hypercuboid& c = f.cube();
  const std::vector<std::size_t> members = f.indices();

  if (!f.contains_index(c.top())) {
    if (push(r, make("F1", {c.point(c.top())}, {}, "top point is not a flat"),
             mode)) {
      return r;
    }
  }

  for (std::size_t p = 0; p < members.size(); ++p) {
    for (std::size_t q = p + 1; q < members.size(); ++q) {
      std::size_t m = c.meet(members[p], members[q]);
      if (!f.contains_index(m)) {
        if (push(r,
                 make("F2", {c.point(members[p]), c.point(members[q])}, {},
                      "meet " + to_string(c.point(m)) + " is not a flat"),
                 mode)) {
          return r;
        }
      }
    }
  }

  for (std::size_t a : members) {
    std::vector<std::size_t> covers = covers_of(f, members, a);
    for (std::size_t i = 0; i < c.dimension(); ++i) {
      auto ai = c.up(a, i);
      if (!ai) continue;
      bool found = std::any_of(covers.begin(), covers.end(), [&](std::size_t b) {
        return c.leq(*ai, b);
      });
      if (!found) {
        if (push(r,
                 make("F3", {c.point(a)}, {i},
                      "no covering flat above " + to_string(c.point(*ai))),
                 mode)) {
          return r;
        }
      }
    }
  }
  return r;
}

bool check_flats_simple(const FlatSet& f) {
  const Hypercuboid& c = f.cube();
  if (!all_widths_positive(c.width())) return false;
  for (std::size_t i = 0; i < c.dimension(); ++i) {
    std::vector<char> hit(static_cast<std::size_t>(c.width()[i]) + 1, 0);
    for (std::size_t x : f.indices()) hit[c.coord(x, i)] = 1;
    if (std::find(hit.begin(), hit.end(), 0) != hit.end()) return false;
  }
  return true;
}

std::optional<Point> closure(const FlatSet& f, const Point& x) {
  const Hypercuboid& c = f.cube();
  std::size_t xi = c.index(x);
  std::optional<std::size_t> best;
  for (std::size_t b : f.indices()) {
    if (!c.leq(xi, b)) continue;
    best = best ? c.meet(*best, b) : b;
  }
  if (!best) return std::nullopt;
  return c.point(*best);
}

Matricube matricube_from_flats(const FlatSet& f) {
  ValidationReport report = validate_flat_axioms(f);
  if (!report.ok()) {
    throw AxiomError("not a flat set: " + report.first().to_string());
  }
  const Hypercuboid& c = f.cube();
  const std::vector<std::size_t> members = f.indices();

  // Canonical order is a linear extension of the partial order, so one pass
  // over the members settles both path lengths.
  constexpr int kUnset = std::numeric_limits<int>::max();
  std::vector<int> shortest(c.size(), kUnset);
  std::vector<int> longest(c.size(), -1);
  std::size_t bottom = members.front();
  for (std::size_t b : members) bottom = c.meet(bottom, b);
  shortest[bottom] = 0;
  longest[bottom] = 0;
  for (std::size_t b : members) {
    if (b == bottom) continue;
    for (std::size_t a : cocovers_of(f, members, b)) {
      if (shortest[a] == kUnset) continue;
      shortest[b] = std::min(shortest[b], shortest[a] + 1);
      longest[b] = std::max(longest[b], longest[a] + 1);
    }
    if (shortest[b] == kUnset || shortest[b] != longest[b]) {
      throw AxiomError("flats poset is not graded at " + to_string(c.point(b)));
    }
  }

  // phi(x) is the meet of the closures one step up when x is not a flat.
  std::vector<std::size_t> phi(c.size());
  std::vector<int> values(c.size());
  for (std::size_t x = c.size(); x-- > 0;) {
    if (f.contains_index(x)) {
      phi[x] = x;
    } else {
      std::optional<std::size_t> acc;
      for (std::size_t i = 0; i < c.dimension(); ++i) {
        auto y = c.up(x, i);
        if (y) acc = acc ? c.meet(*acc, phi[*y]) : phi[*y];
      }
      phi[x] = *acc;
    }
    values[x] = shortest[phi[x]];
  }
  return Matricube(RankTable(c, std::move(values)));
}

PointSet ccir_of(const Matricube& m) {
  FlatSet dual_flats = flats_of(dual(m));
  const Hypercuboid& c = m.cube();
  PointSet out(c);
  for (std::size_t a : dual_flats.indices()) out.insert_index(c.complement(a));
  return out;
}

CircuitSet circuits_of(const Matricube& m) {
  PointSet cc = ccir_of(m);
  const Hypercuboid& c = cc.cube();
  const std::vector<std::size_t> members = cc.indices();
  CircuitSet out(c);
  for (std::size_t a : members) {
    if (a == 0) continue;
    std::size_t j = 0;
    for (std::size_t b : members) {
      if (b != a && c.leq(b, a)) j = c.join(j, b);
    }
    if (j != a) out.insert_index(a);
  }
  return out;
}

PointSet join_closure(const PointSet& s) {
  PointSet out = s;
  const Hypercuboid& c = s.cube();
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::size_t> members = out.indices();
    for (std::size_t p = 0; p < members.size(); ++p) {
      for (std::size_t q = p + 1; q < members.size(); ++q) {
        std::size_t j = c.join(members[p], members[q]);
        if (!out.contains_index(j)) {
          out.insert_index(j);
          changed = true;
        }
      }
    }
  }
  return out;
}

ValidationReport validate_circuit_axioms(const CircuitSet& cs, ReportMode mode) {
  ValidationReport r;
  const Hypercuboid& c = cs.cube();
  const std::vector<std::size_t> members = cs.indices();

  if (cs.contains_index(0)) {
    if (push(r, make("C1", {c.point(0)}, {}, "origin listed as a circuit"),
             mode)) {
      return r;
    }
  }

  for (std::size_t a : members) {
    if (a == 0) continue;
    std::size_t j = 0;
    for (std::size_t b : members) {
      if (b != a && c.leq(b, a)) j = c.join(j, b);
    }
    if (j == a) {
      if (push(r,
               make("C2", {c.point(a)}, {},
                    "join of the members below equals it"),
               mode)) {
        return r;
      }
    }
  }

  PointSet cc = join_closure(cs);
  cc.insert_index(0);
  const std::vector<std::size_t> closed = cc.indices();
  for (std::size_t a : closed) {
    std::vector<std::size_t> below = cocovers_of(cc, closed, a);
    for (std::size_t i = 0; i < c.dimension(); ++i) {
      auto ai = c.down(a, i);
      if (!ai) continue;
      bool found = std::any_of(below.begin(), below.end(), [&](std::size_t b) {
        return c.leq(b, *ai);
      });
      if (!found) {
        if (push(r,
                 make("C3", {c.point(a)}, {i},
                      "no covered element below " + to_string(c.point(*ai))),
                 mode)) {
          return r;
        }
      }
    }
  }
  return r;
}

bool check_circuits_simple(const CircuitSet& cs) {
  const Hypercuboid& c = cs.cube();
  if (!all_widths_positive(c.width())) return false;
  for (std::size_t i = 0; i < c.dimension(); ++i) {
    for (int t = 1; t <= c.width()[i]; ++t) {
      if (cs.contains_index(c.axis_index(i, t))) return false;
    }
  }
  return true;
}

Matricube matricube_from_circuits(const CircuitSet& cs) {
  ValidationReport report = validate_circuit_axioms(cs);
  if (!report.ok()) {
    throw AxiomError("not a circuit set: " + report.first().to_string());
  }
  const Hypercuboid& c = cs.cube();
  PointSet cc = join_closure(cs);
  cc.insert_index(0);
  FlatSet dual_flats(c);
  for (std::size_t a : cc.indices()) dual_flats.insert_index(c.complement(a));
  dual_flats.insert_index(c.top());
  return dual(matricube_from_flats(dual_flats));
}

IndependentSet independents_of(const Matricube& m) {
  const Hypercuboid& c = m.cube();
  IndependentSet out(c);
  for (std::size_t x = 0; x < c.size(); ++x) {
    bool independent = true;
    for (std::size_t i = 0; i < c.dimension() && independent; ++i) {
      auto y = c.down(x, i);
      independent = !y || m.rank_at(*y) == m.rank_at(x) - 1;
    }
    if (independent) out.insert_index(x);
  }
  return out;
}

Point removal(const IndependentSet& j, const Point& a, std::size_t i) {
  const Hypercuboid& c = j.cube();
  if (!j.contains(a)) {
    throw PreconditionError(to_string(a) + " is not in the set");
  }
  if (i >= c.dimension() || a[i] == 0) {
    throw PreconditionError("no removal of direction " + std::to_string(i) +
                            " from " + to_string(a));
  }
  auto b = removal_index(j, c.index(a), i);
  if (!b) {
    throw PreconditionError("removal of direction " + std::to_string(i) +
                            " from " + to_string(a) + " is missing");
  }
  return c.point(*b);
}

Orderability orderability(const IndependentSet& j) {
  const Hypercuboid& c = j.cube();
  Orderability out;
  out.sizes.assign(c.size(), -1);
  for (std::size_t a : j.indices()) {
    int s = -1;
    for (std::size_t i = 0; i < c.dimension(); ++i) {
      if (c.coord(a, i) == 0) continue;
      auto b = removal_index(j, a, i);
      if (!b || (s != -1 && out.sizes[*b] + 1 != s)) {
        out.orderable = false;
        out.witness = c.point(a);
        return out;
      }
      s = out.sizes[*b] + 1;
    }
    out.sizes[a] = s == -1 ? 0 : s;
  }
  return out;
}

bool is_orderable(const IndependentSet& j) { return orderability(j).orderable; }

int size(const IndependentSet& j, const Point& a) {
  if (!j.contains(a)) {
    throw PreconditionError(to_string(a) + " is not in the set");
  }
  Orderability o = orderability(j);
  if (!o.orderable) {
    throw PreconditionError("set is not orderable at " + to_string(*o.witness));
  }
  return o.sizes[j.cube().index(a)];
}

ValidationReport validate_independent_axioms(const IndependentSet& js,
                                             ReportMode mode) {
  ValidationReport r;
  const Hypercuboid& c = js.cube();
  const std::vector<std::size_t> members = js.indices();
  const std::size_t d = c.dimension();

  if (members.empty()) {
    push(r, make("I1", {c.point(0)}, {}, "origin missing"), mode);
    return r;
  }

  bool i1_ok = true;
  for (std::size_t p : members) {
    std::vector<std::optional<std::size_t>> rem(d);
    for (std::size_t i = 0; i < d; ++i) {
      if (c.coord(p, i) == 0) continue;
      rem[i] = removal_index(js, p, i);
      if (!rem[i]) {
        i1_ok = false;
        if (push(r, make("I1", {c.point(p)}, {i}, "removal missing"), mode)) {
          return r;
        }
      }
    }
    for (std::size_t i = 0; i < d; ++i) {
      if (!rem[i]) continue;
      for (std::size_t k = i + 1; k < d; ++k) {
        if (!rem[k]) continue;
        std::size_t q = c.meet(*rem[i], *rem[k]);
        if (!js.contains_index(q)) {
          i1_ok = false;
          if (push(r,
                   make("I1", {c.point(p)}, {i, k},
                        "meet of removals " + to_string(c.point(q)) +
                            " missing"),
                   mode)) {
            return r;
          }
          continue;
        }
        std::size_t ni = interval_size(js, members, q, *rem[i]);
        std::size_t nk = interval_size(js, members, q, *rem[k]);
        if (ni != nk) {
          i1_ok = false;
          if (push(r,
                   make("I1", {c.point(p)}, {i, k},
                        "intervals of sizes " + std::to_string(ni) + " and " +
                            std::to_string(nk)),
                   mode)) {
            return r;
          }
        }
      }
    }
  }

  if (!i1_ok) return r;
  Orderability o = orderability(js);
  if (!o.orderable) {
    // Unreachable when I1 holds; kept as a guard on the lemma.
    push(r, make("I1", {*o.witness}, {}, "not orderable"), mode);
    return r;
  }
  const std::vector<int>& sz = o.sizes;

  for (std::size_t a : members) {
    for (std::size_t b : members) {
      if (a != b && c.leq(a, b) && sz[a] >= sz[b]) {
        if (push(r,
                 make("I2", {c.point(a), c.point(b)}, {},
                      "size does not increase"),
                 mode)) {
          return r;
        }
      }
    }
  }

  for (std::size_t a : members) {
    for (std::size_t b : members) {
      if (sz[a] >= sz[b]) continue;
      std::vector<std::size_t> diff;
      for (std::size_t k = 0; k < d; ++k) {
        if (c.coord(a, k) < c.coord(b, k)) diff.push_back(k);
      }
      if (diff.size() < 2) continue;
      std::size_t top = c.join(a, b);
      bool found = false;
      for (std::size_t e : members) {
        if (sz[e] <= sz[a] || !c.leq(e, top)) continue;
        for (std::size_t k : diff) {
          if (c.coord(e, k) < c.coord(b, k)) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) {
        if (push(r,
                 make("I2", {c.point(a), c.point(b)}, diff,
                      "no augmenting element"),
                 mode)) {
          return r;
        }
      }
    }
  }
  return r;
}

bool check_independents_simple(const IndependentSet& js) {
  const Hypercuboid& c = js.cube();
  if (!all_widths_positive(c.width())) return false;
  for (std::size_t i = 0; i < c.dimension(); ++i) {
    for (int t = 0; t <= c.width()[i]; ++t) {
      if (!js.contains_index(c.axis_index(i, t))) return false;
    }
  }
  return true;
}

Matricube matricube_from_independents(const IndependentSet& js) {
  ValidationReport report = validate_independent_axioms(js);
  if (!report.ok()) {
    throw AxiomError("not an independent set: " + report.first().to_string());
  }
  const Hypercuboid& c = js.cube();
  Orderability o = orderability(js);
  std::vector<int> values(c.size(), 0);
  for (std::size_t x = 0; x < c.size(); ++x) {
    int best = js.contains_index(x) ? o.sizes[x] : 0;
    for (std::size_t i = 0; i < c.dimension(); ++i) {
      auto y = c.down(x, i);
      if (y) best = std::max(best, values[*y]);
    }
    values[x] = best;
  }
  return Matricube(RankTable(c, std::move(values)));
}

}  // namespace mcube
