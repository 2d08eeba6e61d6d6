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

#include "mcube/transforms.h"

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mcube/error.h"

namespace mcube {

namespace {

void require_direction(const Matricube& m, std::size_t i) {
  if (i >= m.dimension()) {
    throw InvalidInput("direction " + std::to_string(i) + " out of range for " +
                       std::to_string(m.dimension()) + " directions");
  }
  if (m.width()[i] == 0) {
    throw PreconditionError("direction " + std::to_string(i) + " has width 0");
  }
}

Width shrink(const Width& w, std::size_t i) {
  std::vector<int> e = w.entries();
  --e[i];
  return Width(std::move(e));
}

}  // namespace

Matricube dual(const Matricube& m) {
  const Hypercuboid& c = m.cube();
  std::vector<int> values(c.size());
  for (std::size_t x = 0; x < c.size(); ++x) {
    values[x] = c.l1(x) + m.rank_at(c.complement(x)) - m.rank();
  }
  return Matricube::assume_valid(RankTable(c, std::move(values)));
}

Matricube deletion(const Matricube& m, std::size_t i) {
  require_direction(m, i);
  Hypercuboid nc(shrink(m.width(), i));
  const Hypercuboid& c = m.cube();
  std::vector<int> values(nc.size());
  for (std::size_t y = 0; y < nc.size(); ++y) {
    values[y] = m.rank_at(c.index(nc.point(y)));
  }
  return Matricube::assume_valid(RankTable(nc, std::move(values)));
}

Matricube contraction(const Matricube& m, std::size_t i) {
  require_direction(m, i);
  Hypercuboid nc(shrink(m.width(), i));
  const Hypercuboid& c = m.cube();
  const int base = m.rank_at(c.axis_index(i, 1));
  std::vector<int> values(nc.size());
  for (std::size_t y = 0; y < nc.size(); ++y) {
    values[y] = m.rank_at(c.index(nc.point(y)) + c.stride(i)) - base;
  }
  return Matricube::assume_valid(RankTable(nc, std::move(values)));
}

std::vector<MinorStep> parse_minor_ops(const std::string& text) {
  std::vector<MinorStep> steps;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto b = tok.find_first_not_of(" \t");
    auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw InvalidInput("empty minor step");
    tok = tok.substr(b, e - b + 1);
    if (tok.size() < 2 || (tok[0] != 'd' && tok[0] != 'c') ||
        tok.find_first_not_of("0123456789", 1) != std::string::npos) {
      throw InvalidInput("bad minor step '" + tok + "'");
    }
    MinorStep s{tok[0] == 'd' ? MinorOp::kDelete : MinorOp::kContract,
                static_cast<std::size_t>(std::stoul(tok.substr(1)))};
    steps.push_back(s);
  }
  return steps;
}

Matricube minor(const Matricube& m, const std::vector<MinorStep>& steps) {
  Matricube out = m;
  for (const MinorStep& s : steps) {
    out = s.op == MinorOp::kDelete ? deletion(out, s.direction)
                                   : contraction(out, s.direction);
  }
  return out;
}

Matricube direct_sum(const Matricube& a, const Matricube& b) {
  std::vector<int> w = a.width().entries();
  w.insert(w.end(), b.width().entries().begin(), b.width().entries().end());
  Hypercuboid c{Width(std::move(w))};
  const std::size_t nb = b.cube().size();
  std::vector<int> values(c.size());
  for (std::size_t x = 0; x < c.size(); ++x) {
    values[x] = a.rank_at(x / nb) + b.rank_at(x % nb);
  }
  return Matricube::assume_valid(RankTable(c, std::move(values)));
}

bool is_loop(const Matricube& m, std::size_t i) {
  require_direction(m, i);
  return m.rank_at(m.cube().axis_index(i, 1)) == 0;
}

bool is_coloop(const Matricube& m, std::size_t i) {
  require_direction(m, i);
  const bool via_dual = is_loop(dual(m), i);
  const bool via_deletion = deletion(m, i).rank() == m.rank() - 1;
  if (via_dual != via_deletion) {
    throw std::logic_error("coloop characterizations disagree");
  }
  return via_dual;
}

TwoVarPolynomial tutte(const Matricube& m) {
  const Hypercuboid& c = m.cube();
  std::map<std::pair<int, int>, long long> counts;
  for (std::size_t x = 0; x < c.size(); ++x) {
    ++counts[{m.rank() - m.rank_at(x), c.l1(x) - m.rank_at(x)}];
  }
  TwoVarPolynomial t;
  for (const auto& [e, n] : counts) {
    t += TwoVarPolynomial::constant(n) *
         TwoVarPolynomial::shifted_monomial(e.first, e.second);
  }
  return t;
}

BasisKind parse_basis_kind(const std::string& tag) {
  if (tag.size() == 1 && tag[0] >= 'a' && tag[0] <= 'f') {
    return static_cast<BasisKind>(tag[0] - 'a');
  }
  throw InvalidInput("basis kind must be one of a..f, got '" + tag + "'");
}

PointSet basis_candidates(const Matricube& m, BasisKind kind) {
  const Hypercuboid& c = m.cube();
  const std::size_t d = c.dimension();
  IndependentSet ind = independents_of(m);
  const std::vector<std::size_t> members = ind.indices();
  PointSet out(c);

  switch (kind) {
    case BasisKind::kA:
      for (std::size_t a : members) {
        bool maximal = true;
        for (std::size_t b : members) {
          if (b != a && c.leq(a, b)) {
            maximal = false;
            break;
          }
        }
        if (maximal) out.insert_index(a);
      }
      break;
    case BasisKind::kB:
      for (std::size_t a : members) {
        if (m.rank_at(a) == m.rank()) out.insert_index(a);
      }
      break;
    case BasisKind::kC:
      for (std::size_t a : members) {
        bool local_max = true;
        for (std::size_t i = 0; i < d && local_max; ++i) {
          auto y = c.up(a, i);
          local_max = !y || !ind.contains_index(*y);
        }
        if (local_max) out.insert_index(a);
      }
      break;
    case BasisKind::kD:
      for (std::size_t a : members) {
        bool saturated = true;
        for (std::size_t i = 0; i < d && saturated; ++i) {
          auto y = c.up(a, i);
          saturated = !y || m.rank_at(*y) == m.rank_at(a);
        }
        if (saturated) out.insert_index(a);
      }
      break;
    case BasisKind::kE: {
      PointSet removals(c);
      for (std::size_t b : members) {
        for (std::size_t i = 0; i < d; ++i) {
          if (c.coord(b, i) == 0) continue;
          removals.insert(removal(ind, c.point(b), i));
        }
      }
      for (std::size_t a : members) {
        if (!removals.contains_index(a)) out.insert_index(a);
      }
      break;
    }
    case BasisKind::kF: {
      Matricube dm = dual(m);
      for (std::size_t a : members) {
        if (m.rank_at(a) + dm.rank_at(c.complement(a)) == c.width().l1()) {
          out.insert_index(a);
        }
      }
      break;
    }
  }
  return out;
}

}  // namespace mcube
