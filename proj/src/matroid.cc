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

#include "mcube/matroid.h"

#include <algorithm>
#include <bit>

#include "mcube/error.h"

namespace mcube {

namespace {

bool push(ValidationReport& r, Violation v, ReportMode mode) {
  r.violations.push_back(std::move(v));
  return mode == ReportMode::kFirst;
}

int popcount(std::uint32_t x) { return std::popcount(x); }

std::vector<std::string> direction_labels(const Hypercuboid& c, std::size_t x) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < c.dimension(); ++i) {
    if (c.up(x, i)) out.push_back(std::to_string(i));
  }
  return out;
}

// Position of direction i in the local ground at x.
std::optional<int> local_bit(const Hypercuboid& c, std::size_t x,
                             std::size_t i) {
  if (!c.up(x, i)) return std::nullopt;
  int bit = 0;
  for (std::size_t k = 0; k < i; ++k) bit += c.up(x, k).has_value();
  return bit;
}

}  // namespace

SetFunction::SetFunction(std::vector<std::string> ground, std::vector<int> rank)
    : ground_(std::move(ground)), rank_(std::move(rank)) {
  if (ground_.size() > static_cast<std::size_t>(kMaxSetFunctionElements)) {
    throw SizeLimitError("set functions are limited to " +
                         std::to_string(kMaxSetFunctionElements) + " elements");
  }
  if (rank_.size() != (std::size_t{1} << ground_.size())) {
    throw InvalidInput("rank table has " + std::to_string(rank_.size()) +
                       " entries for " + std::to_string(ground_.size()) +
                       " elements");
  }
}

Point subset_point(std::uint32_t subset, int n) {
  std::vector<int> c(n);
  for (int j = 0; j < n; ++j) c[j] = subset >> j & 1u;
  return Point(std::move(c));
}

ValidationReport validate_matroid(const Matroid& m, ReportMode mode) {
  ValidationReport r;
  const int n = m.size();
  if (m.rank(0) != 0) {
    if (push(r, {"empty set", {subset_point(0, n)}, {}, "nonzero rank"},
             mode)) {
      return r;
    }
  }
  for (std::uint32_t a = 0; a <= m.full(); ++a) {
    for (int e = 0; e < n; ++e) {
      if (a >> e & 1u) continue;
      int step = m.rank(a | 1u << e) - m.rank(a);
      if (step != 0 && step != 1) {
        if (push(r,
                 {"unit step",
                  {subset_point(a, n), subset_point(a | 1u << e, n)},
                  {static_cast<std::size_t>(e)},
                  "step of " + std::to_string(step)},
                 mode)) {
          return r;
        }
      }
    }
  }
  for (std::uint32_t a = 0; a <= m.full(); ++a) {
    for (int e = 0; e < n; ++e) {
      if (a >> e & 1u) continue;
      for (int f = e + 1; f < n; ++f) {
        if (a >> f & 1u) continue;
        std::uint32_t ae = a | 1u << e, af = a | 1u << f;
        if (m.rank(ae) + m.rank(af) < m.rank(ae | af) + m.rank(a)) {
          if (push(r,
                   {"submodular",
                    {subset_point(ae, n), subset_point(af, n)},
                    {static_cast<std::size_t>(e), static_cast<std::size_t>(f)},
                    ""},
                   mode)) {
            return r;
          }
        }
      }
    }
  }
  return r;
}

ValidationReport validate_polymatroid(const Polymatroid& p, ReportMode mode) {
  ValidationReport r;
  const int n = p.size();
  if (p.rank(0) != 0) {
    if (push(r, {"empty set", {subset_point(0, n)}, {}, "nonzero rank"},
             mode)) {
      return r;
    }
  }
  for (std::uint32_t a = 0; a <= p.full(); ++a) {
    for (int e = 0; e < n; ++e) {
      if (a >> e & 1u) continue;
      if (p.rank(a | 1u << e) < p.rank(a)) {
        if (push(r,
                 {"monotone",
                  {subset_point(a, n), subset_point(a | 1u << e, n)},
                  {static_cast<std::size_t>(e)},
                  ""},
                 mode)) {
          return r;
        }
      }
    }
  }
  for (std::uint32_t a = 0; a <= p.full(); ++a) {
    for (int e = 0; e < n; ++e) {
      if (a >> e & 1u) continue;
      for (int f = e + 1; f < n; ++f) {
        if (a >> f & 1u) continue;
        std::uint32_t ae = a | 1u << e, af = a | 1u << f;
        if (p.rank(ae) + p.rank(af) < p.rank(ae | af) + p.rank(a)) {
          if (push(r,
                   {"submodular",
                    {subset_point(ae, n), subset_point(af, n)},
                    {static_cast<std::size_t>(e), static_cast<std::size_t>(f)},
                    ""},
                   mode)) {
            return r;
          }
        }
      }
    }
  }
  return r;
}

Matroid local_matroid(const Matricube& m, const Point& a) {
  const Hypercuboid& c = m.cube();
  const std::size_t x = c.index(a);
  std::vector<std::size_t> dirs;
  for (std::size_t i = 0; i < c.dimension(); ++i) {
    if (c.up(x, i)) dirs.push_back(i);
  }
  std::vector<int> rank(std::size_t{1} << dirs.size());
  for (std::uint32_t s = 0; s < rank.size(); ++s) {
    std::size_t y = x;
    for (std::size_t b = 0; b < dirs.size(); ++b) {
      if (s >> b & 1u) y += c.stride(dirs[b]);
    }
    rank[s] = m.rank_at(y) - m.rank_at(x);
  }
  return Matroid(direction_labels(c, x), std::move(rank));
}

const Matroid& CoherentComplex::at(const Point& a) const {
  return matroids.at(Hypercuboid(width).index(a));
}

CoherentComplex coherent_complex_of(const Matricube& m) {
  CoherentComplex cc{m.width(), {}};
  const Hypercuboid& c = m.cube();
  cc.matroids.reserve(c.size());
  for (std::size_t x = 0; x < c.size(); ++x) {
    cc.matroids.push_back(local_matroid(m, c.point(x)));
  }
  return cc;
}

ValidationReport validate_coherent(const CoherentComplex& cc, ReportMode mode) {
  ValidationReport r;
  Hypercuboid c(cc.width);
  if (cc.matroids.size() != c.size()) {
    throw InvalidInput("complex has " + std::to_string(cc.matroids.size()) +
                       " matroids, width " + to_string(cc.width) + " needs " +
                       std::to_string(c.size()));
  }
  bool shapes_ok = true;
  for (std::size_t x = 0; x < c.size(); ++x) {
    const Matroid& mx = cc.matroids[x];
    if (mx.ground() != direction_labels(c, x)) {
      shapes_ok = false;
      if (push(r, {"ground", {c.point(x)}, {}, "ground set is not I_a"},
               mode)) {
        return r;
      }
      continue;
    }
    ValidationReport mr = validate_matroid(mx);
    if (!mr.ok()) {
      shapes_ok = false;
      if (push(r, {"matroid", {c.point(x)}, {}, mr.first().to_string()},
               mode)) {
        return r;
      }
    }
  }
  if (!shapes_ok) return r;

  for (std::size_t i = 0; i < c.dimension(); ++i) {
    for (int t = 0; t < c.width()[i]; ++t) {
      std::size_t x = c.axis_index(i, t);
      int v = cc.matroids[x].rank(1u << *local_bit(c, x, i));
      if (v > 1) {
        if (push(r,
                 {"CC1", {c.point(x)}, {i},
                  "local rank " + std::to_string(v)},
                 mode)) {
          return r;
        }
      }
    }
  }

  for (std::size_t x = 0; x < c.size(); ++x) {
    const Matroid& ma = cc.matroids[x];
    for (std::size_t i = 0; i < c.dimension(); ++i) {
      auto y = c.up(x, i);
      if (!y) continue;
      const Matroid& mb = cc.matroids[*y];
      const int ib = *local_bit(c, x, i);
      const int base = ma.rank(1u << ib);
      bool equal = true;
      // Every subset of I_a minus i, read in both local grounds.
      for (std::uint32_t s = 0; s <= ma.full() && equal; ++s) {
        if (s >> ib & 1u) continue;
        std::uint32_t sb = 0;
        for (std::size_t k = 0; k < c.dimension(); ++k) {
          auto ka = local_bit(c, x, k);
          if (!ka || k == i || !(s >> *ka & 1u)) continue;
          sb |= 1u << *local_bit(c, *y, k);
        }
        equal = mb.rank(sb) == ma.rank(s | 1u << ib) - base;
      }
      if (!equal) {
        if (push(r,
                 {"CC2", {c.point(x)}, {i},
                  "restriction of the next matroid differs from the "
                  "contraction"},
                 mode)) {
          return r;
        }
      }
    }
  }
  return r;
}

ValidationReport check_path_independence(const CoherentComplex& cc) {
  ValidationReport r;
  Hypercuboid c(cc.width);
  auto rho = [&](std::size_t x, std::size_t i) {
    return cc.matroids[x].rank(1u << *local_bit(c, x, i));
  };
  for (std::size_t x = 0; x < c.size(); ++x) {
    for (std::size_t i = 0; i < c.dimension(); ++i) {
      auto xi = c.up(x, i);
      if (!xi) continue;
      for (std::size_t j = i + 1; j < c.dimension(); ++j) {
        auto xj = c.up(x, j);
        if (!xj) continue;
        if (rho(x, i) + rho(*xi, j) != rho(x, j) + rho(*xj, i)) {
          r.violations.push_back(
              {"path", {c.point(x)}, {i, j}, "square sums differ"});
          return r;
        }
      }
    }
  }
  return r;
}

Matricube matricube_from_coherent(const CoherentComplex& cc) {
  ValidationReport report = validate_coherent(cc);
  if (!report.ok()) {
    throw AxiomError("not a coherent complex: " + report.first().to_string());
  }
  report = check_path_independence(cc);
  if (!report.ok()) {
    throw AxiomError("complex is path dependent: " + report.first().to_string());
  }
  Hypercuboid c(cc.width);
  std::vector<int> values(c.size(), 0);
  for (std::size_t x = 1; x < c.size(); ++x) {
    std::size_t k = c.dimension();
    while (c.coord(x, k - 1) == 0) --k;
    std::size_t prev = *c.down(x, k - 1);
    values[x] = values[prev] +
                cc.matroids[prev].rank(1u << *local_bit(c, prev, k - 1));
  }
  return Matricube(RankTable(c, std::move(values)));
}

Polymatroid natural_polymatroid(const Matricube& m) {
  const Hypercuboid& c = m.cube();
  std::vector<std::string> ground;
  std::vector<std::pair<std::size_t, int>> elems;
  for (std::size_t i = 0; i < c.dimension(); ++i) {
    for (int t = 0; t <= c.width()[i]; ++t) {
      ground.push_back(std::to_string(t) + "_" + std::to_string(i));
      elems.emplace_back(i, t);
    }
  }
  if (ground.size() > static_cast<std::size_t>(kMaxSetFunctionElements)) {
    throw SizeLimitError("natural polymatroid would have " +
                         std::to_string(ground.size()) + " elements");
  }
  std::vector<int> rank(std::size_t{1} << ground.size());
  for (std::uint32_t s = 0; s < rank.size(); ++s) {
    std::vector<int> top(c.dimension(), 0);
    for (std::size_t e = 0; e < elems.size(); ++e) {
      if (s >> e & 1u) {
        top[elems[e].first] = std::max(top[elems[e].first], elems[e].second);
      }
    }
    rank[s] = m.rank(Point(std::move(top)));
  }
  return Polymatroid(std::move(ground), std::move(rank));
}

Matroid natural_matroid(const Polymatroid& p) {
  ValidationReport report = validate_polymatroid(p);
  if (!report.ok()) {
    throw AxiomError("not a polymatroid: " + report.first().to_string());
  }
  const int n = p.size();
  std::vector<std::string> ground;
  std::vector<std::uint32_t> copies(n, 0);
  for (int e = 0; e < n; ++e) {
    const int k = p.rank(1u << e);
    for (int j = 0; j < k; ++j) {
      if (ground.size() >= static_cast<std::size_t>(kMaxNaturalCopies)) {
        throw SizeLimitError("natural matroid would exceed " +
                             std::to_string(kMaxNaturalCopies) + " elements");
      }
      copies[e] |= 1u << ground.size();
      ground.push_back(p.ground()[e] + "#" + std::to_string(j));
    }
  }
  // Only elements whose copies meet Y can lower the minimum for Y.
  std::vector<int> owner(ground.size());
  for (int e = 0; e < n; ++e) {
    for (std::uint32_t c = copies[e]; c != 0; c &= c - 1) {
      owner[std::countr_zero(c)] = e;
    }
  }
  std::vector<int> rank(std::size_t{1} << ground.size());
  for (std::uint32_t y = 0; y < rank.size(); ++y) {
    std::uint32_t support = 0;
    for (std::uint32_t c = y; c != 0; c &= c - 1) {
      support |= 1u << owner[std::countr_zero(c)];
    }
    int best = popcount(y);
    for (std::uint32_t s = support; s != 0; s = (s - 1) & support) {
      std::uint32_t covered = 0;
      for (std::uint32_t b = s; b != 0; b &= b - 1) {
        covered |= copies[std::countr_zero(b)];
      }
      best = std::min(best, p.rank(s) + popcount(y & ~covered));
    }
    rank[y] = best;
  }
  return Matroid(std::move(ground), std::move(rank));
}

ValidationReport validate_flag_matroid(const FlagMatroid& fm, ReportMode mode) {
  ValidationReport r;
  const int n = static_cast<int>(fm.ground.size());
  bool ok = true;
  for (std::size_t j = 0; j < fm.constituents.size(); ++j) {
    const Matroid& m = fm.constituents[j];
    if (m.ground() != fm.ground) {
      ok = false;
      if (push(r, {"ground", {}, {j}, "constituent ground differs"}, mode)) {
        return r;
      }
      continue;
    }
    ValidationReport mr = validate_matroid(m);
    if (!mr.ok()) {
      ok = false;
      if (push(r, {"matroid", {}, {j}, mr.first().to_string()}, mode)) {
        return r;
      }
    }
  }
  if (!ok) return r;

  for (std::size_t j = 0; j + 1 < fm.constituents.size(); ++j) {
    const Matroid& lo = fm.constituents[j];
    const Matroid& hi = fm.constituents[j + 1];
    bool found = false;
    for (std::uint32_t a = 0; a <= lo.full() && !found; ++a) {
      for (int e = 0; e < n && !found; ++e) {
        if (a >> e & 1u) continue;
        std::uint32_t b = a | 1u << e;
        if (hi.rank(b) - hi.rank(a) < lo.rank(b) - lo.rank(a)) {
          found = true;
          if (push(r,
                   {"quotient", {subset_point(a, n), subset_point(b, n)}, {j},
                    "constituent " + std::to_string(j) +
                        " is not a quotient of the next"},
                   mode)) {
            return r;
          }
        }
      }
    }
  }

  for (std::size_t j = 0; j < fm.constituents.size(); ++j) {
    if (fm.constituents[j].rank() != static_cast<int>(j)) {
      if (push(r,
               {"constituent rank", {}, {j},
                "constituent " + std::to_string(j) + " has rank " +
                    std::to_string(fm.constituents[j].rank())},
               mode)) {
        return r;
      }
    }
  }
  return r;
}

int matroid_union_rank(const std::vector<Matroid>& ms, std::uint32_t subset) {
  for (const Matroid& m : ms) {
    if (m.ground() != ms.front().ground()) {
      throw InvalidInput("matroids of a union must share the ground set");
    }
  }
  if (!ms.empty() && (subset & ~ms.front().full()) != 0) {
    throw InvalidInput("subset outside the ground set");
  }
  int best = popcount(subset);
  // Every submask t of the subset, including the empty one.
  for (std::uint32_t t = subset;; t = (t - 1) & subset) {
    int v = popcount(subset & ~t);
    for (const Matroid& m : ms) v += m.rank(t);
    best = std::min(best, v);
    if (t == 0) break;
  }
  return best;
}

Matricube matricube_from_flag_matroids(const std::vector<FlagMatroid>& fms) {
  std::vector<int> width;
  for (const FlagMatroid& fm : fms) {
    if (fm.ground != fms.front().ground) {
      throw InvalidInput("flag matroids must share the ground set");
    }
    if (fm.ground.size() > static_cast<std::size_t>(kMaxFlagGround)) {
      throw SizeLimitError("flag matroid ground sets are limited to " +
                           std::to_string(kMaxFlagGround) + " elements");
    }
    if (fm.constituents.size() < 2) {
      throw InvalidInput("a flag matroid needs constituents M_0 and M_1");
    }
    ValidationReport r = validate_flag_matroid(fm);
    if (!r.ok()) {
      throw AxiomError("invalid flag matroid: " + r.first().to_string());
    }
    width.push_back(static_cast<int>(fm.constituents.size()) - 1);
  }
  Hypercuboid c{Width(std::move(width))};
  const std::uint32_t full =
      fms.empty() ? 0 : fms.front().constituents.front().full();
  std::vector<int> values(c.size());
  std::vector<Matroid> chosen(fms.size());
  for (std::size_t x = 0; x < c.size(); ++x) {
    for (std::size_t i = 0; i < fms.size(); ++i) {
      chosen[i] = fms[i].constituents[c.coord(x, i)];
    }
    values[x] = matroid_union_rank(chosen, full);
  }
  return Matricube(RankTable(c, std::move(values)));
}

}  // namespace mcube
