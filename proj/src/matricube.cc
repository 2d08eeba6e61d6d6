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

#include "mcube/matricube.h"

#include <algorithm>
#include <sstream>

#include "mcube/error.h"

namespace mcube {

namespace {

void guard(const RankTable& f, std::size_t limit, const char* what) {
  if (f.cube().size() > limit) {
    throw SizeLimitError(std::string(what) + ": " +
                         std::to_string(f.cube().size()) +
                         " points exceeds the limit " + std::to_string(limit));
  }
}

std::string join_ints(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  return os.str();
}

// Returns true when the caller should stop scanning.
bool add(ValidationReport& report, Violation v, ReportMode mode) {
  report.violations.push_back(std::move(v));
  return mode == ReportMode::kFirst;
}

}  // namespace

std::string Violation::to_string() const {
  std::ostringstream os;
  os << axiom;
  if (!points.empty()) {
    os << " at";
    for (const Point& p : points) os << ' ' << mcube::to_string(p);
  }
  if (!directions.empty()) os << " directions " << join_ints(directions);
  if (!detail.empty()) os << ": " << detail;
  return os.str();
}

std::string ValidationReport::to_string() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (std::size_t k = 0; k < violations.size(); ++k) {
    if (k) os << '\n';
    os << violations[k].to_string();
  }
  return os.str();
}

RankTable::RankTable(Width width, std::vector<int> values)
    : RankTable(Hypercuboid(std::move(width)), std::move(values)) {}

RankTable::RankTable(Hypercuboid cube, std::vector<int> values)
    : cube_(std::move(cube)), values_(std::move(values)) {
  if (values_.size() != cube_.size()) {
    throw InvalidInput("rank table has " + std::to_string(values_.size()) +
                       " values, width " + to_string(cube_.width()) +
                       " needs " + std::to_string(cube_.size()));
  }
}

Matricube::Matricube(RankTable table) : table_(std::move(table)) {
  ValidationReport report = validate_rank_axioms(table_);
  if (!report.ok()) {
    throw AxiomError("not a matricube: " + report.first().to_string());
  }
}

Matricube::Matricube(Width width, std::vector<int> values)
    : Matricube(RankTable(std::move(width), std::move(values))) {}

Matricube Matricube::assume_valid(RankTable table) {
  Matricube m;
  m.table_ = std::move(table);
  return m;
}

ValidationReport validate_rank_axioms(const RankTable& f, ReportMode mode,
                                      const CheckLimits& limits) {
  guard(f, limits.local_max_points, "validate_rank_axioms");
  ValidationReport report;
  const Hypercuboid& c = f.cube();
  const std::size_t d = c.dimension();

  if (f[0] != 0) {
    if (add(report,
            {"R1", {c.point(0)}, {}, "rank at the origin is " +
                                         std::to_string(f[0])},
            mode)) {
      return report;
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (int t = 1; t <= c.width()[i]; ++t) {
      int step = f[c.axis_index(i, t)] - f[c.axis_index(i, t - 1)];
      if (step != 0 && step != 1) {
        if (add(report,
                {"R1",
                 {axis_point(d, i, t - 1), axis_point(d, i, t)},
                 {i},
                 "axis step of " + std::to_string(step)},
                mode)) {
          return report;
        }
      }
    }
  }

  for (std::size_t x = 0; x < c.size(); ++x) {
    for (std::size_t i = 0; i < d; ++i) {
      auto y = c.up(x, i);
      if (y && f[*y] < f[x]) {
        if (add(report,
                {"R2",
                 {c.point(x), c.point(*y)},
                 {i},
                 "rank decreases from " + std::to_string(f[x]) + " to " +
                     std::to_string(f[*y])},
                mode)) {
          return report;
        }
      }
    }
  }

  for (std::size_t x = 0; x < c.size(); ++x) {
    for (std::size_t i = 0; i < d; ++i) {
      auto xi = c.up(x, i);
      if (!xi) continue;
      for (std::size_t j = i + 1; j < d; ++j) {
        auto xj = c.up(x, j);
        if (!xj) continue;
        std::size_t xij = *xi + c.stride(j);
        if (f[*xi] + f[*xj] < f[xij] + f[x]) {
          if (add(report,
                  {"R3",
                   {c.point(*xj), c.point(*xi)},
                   {i, j},
                   "rank sum " + std::to_string(f[*xi] + f[*xj]) +
                       " below join plus meet " +
                       std::to_string(f[xij] + f[x])},
                  mode)) {
            return report;
          }
        }
      }
    }
  }
  return report;
}

bool is_simple(const Matricube& m) {
  const Hypercuboid& c = m.cube();
  for (std::size_t i = 0; i < c.dimension(); ++i) {
    if (c.width()[i] == 0) return false;
    for (int t = 1; t <= c.width()[i]; ++t) {
      if (m.rank_at(c.axis_index(i, t)) != t) return false;
    }
  }
  return true;
}

ValidationReport check_diamond(const RankTable& f, const CheckLimits& limits) {
  guard(f, limits.local_max_points, "check_diamond");
  ValidationReport report;
  const Hypercuboid& c = f.cube();
  const std::size_t d = c.dimension();
  for (std::size_t x = 0; x < c.size(); ++x) {
    for (std::size_t i = 0; i < d; ++i) {
      auto xi = c.up(x, i);
      if (!xi) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (j == i) continue;
        auto xj = c.up(x, j);
        if (!xj) continue;
        std::size_t xij = *xi + c.stride(j);
        if (f[*xi] - f[x] < f[xij] - f[*xj]) {
          add(report,
              {"diamond", {c.point(x)}, {i, j},
               "increment " + std::to_string(f[*xi] - f[x]) + " below " +
                   std::to_string(f[xij] - f[*xj])},
              ReportMode::kFirst);
          return report;
        }
      }
    }
  }
  return report;
}

ValidationReport check_submodular_bruteforce(const RankTable& f,
                                             const CheckLimits& limits) {
  guard(f, limits.pairwise_max_points, "check_submodular_bruteforce");
  ValidationReport report;
  const Hypercuboid& c = f.cube();
  for (std::size_t a = 0; a < c.size(); ++a) {
    for (std::size_t b = a + 1; b < c.size(); ++b) {
      std::size_t j = c.join(a, b);
      std::size_t m = c.meet(a, b);
      if (f[a] + f[b] < f[j] + f[m]) {
        report.violations.push_back(
            {"submodular", {c.point(a), c.point(b)}, {},
             "rank sum " + std::to_string(f[a] + f[b]) +
                 " below join plus meet " + std::to_string(f[j] + f[m])});
        return report;
      }
    }
  }
  return report;
}

ValidationReport check_multidirectional(const RankTable& f, int n, int k,
                                        const CheckLimits& limits) {
  if (n < 1 || k < 1) {
    throw InvalidInput("check_multidirectional needs n >= 1 and k >= 1");
  }
  guard(f, limits.pairwise_max_points, "check_multidirectional");
  ValidationReport report;
  const Hypercuboid& c = f.cube();
  const std::size_t d = c.dimension();
  if (d >= 8 * sizeof(unsigned long)) {
    throw SizeLimitError("check_multidirectional: too many directions");
  }

  for (unsigned long mask = 1; mask < (1UL << d); ++mask) {
    std::vector<std::size_t> dirs;
    for (std::size_t i = 0; i < d; ++i) {
      if (mask >> i & 1UL) dirs.push_back(i);
    }
    if (dirs.size() > static_cast<std::size_t>(k)) continue;

    // Offsets n_s in [1, n]; smaller supports are covered by smaller masks.
    std::vector<int> offset(dirs.size(), 1);
    while (true) {
      std::size_t shift = 0;
      for (std::size_t s = 0; s < dirs.size(); ++s) {
        shift += static_cast<std::size_t>(offset[s]) * c.stride(dirs[s]);
      }
      for (std::size_t x = 0; x < c.size(); ++x) {
        bool fits = true;
        for (std::size_t s = 0; s < dirs.size() && fits; ++s) {
          fits = c.coord(x, dirs[s]) + offset[s] <= c.width()[dirs[s]];
        }
        if (!fits) continue;
        int lhs = f[x + shift] - f[x];
        for (std::size_t y = x; y < c.size(); ++y) {
          if (!c.leq(x, y)) continue;
          bool fixed = true;
          for (std::size_t s = 0; s < dirs.size() && fixed; ++s) {
            fixed = c.coord(y, dirs[s]) == c.coord(x, dirs[s]);
          }
          if (!fixed) continue;
          int rhs = f[y + shift] - f[y];
          if (lhs < rhs) {
            std::ostringstream os;
            os << "offsets";
            for (int o : offset) os << ' ' << o;
            os << ": increment " << lhs << " below " << rhs;
            report.violations.push_back(
                {"multidirectional", {c.point(x), c.point(y)}, dirs, os.str()});
            return report;
          }
        }
      }
      std::size_t s = 0;
      while (s < offset.size() && offset[s] == n) offset[s++] = 1;
      if (s == offset.size()) break;
      ++offset[s];
    }
  }
  return report;
}

Matricube uniform(const Width& width, int r) {
  if (r < 0 || r > width.l1()) {
    throw InvalidInput("uniform rank " + std::to_string(r) +
                       " outside [0, " + std::to_string(width.l1()) + "]");
  }
  Hypercuboid c(width);
  std::vector<int> values(c.size());
  for (std::size_t x = 0; x < c.size(); ++x) values[x] = std::min(r, c.l1(x));
  return Matricube::assume_valid(RankTable(c, std::move(values)));
}

bool check_dominated_by_uniform(const Matricube& m) {
  const Hypercuboid& c = m.cube();
  for (std::size_t x = 0; x < c.size(); ++x) {
    if (m.rank_at(x) > std::min(m.rank(), c.l1(x))) return false;
  }
  return true;
}

}  // namespace mcube
