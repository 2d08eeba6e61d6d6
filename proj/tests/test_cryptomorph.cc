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

#include <random>

#include "doctest.h"
#include "mcube/cryptomorph.h"
#include "mcube/enumerate.h"
#include "mcube/error.h"
#include "mcube/transforms.h"
#include "support/fixtures.h"
#include "support/oracles.h"

namespace mcube {
namespace {

const std::vector<Width> kSmallWidths = {Width{1, 1}, Width{2, 1}, Width{1, 1, 1},
                                         Width{2, 2}};

TEST_CASE("flats of the (4,3) example") {
  Matricube m = testing::simple_43();
  FlatSet f = flats_of(m);
  CHECK(f.points() == std::vector<Point>{{0, 0}, {0, 1}, {1, 0}, {2, 2},
                                         {2, 3}, {3, 2}, {3, 3}, {4, 2},
                                         {4, 3}});
  CHECK(validate_flat_axioms(f).ok());
  CHECK(check_flats_simple(f));
  CHECK(matricube_from_flats(f) == m);
  CHECK(closure(f, Point{2, 0}) == Point{2, 2});
  CHECK(closure(f, Point{0, 1}) == Point{0, 1});
}

TEST_CASE("flats of the (5,4) example") {
  FlatSet f = flats_of(testing::flats_54());
  CHECK(f.points() == std::vector<Point>{{0, 0}, {0, 1}, {0, 2}, {0, 3},
                                         {1, 0}, {1, 1}, {1, 2}, {1, 4},
                                         {2, 0}, {3, 1}, {4, 2}, {4, 4},
                                         {5, 2}, {5, 4}});
}

TEST_CASE("flat axioms on small sets") {
  FlatSet all(Width{1, 1}, Hypercuboid(Width{1, 1}).points());
  CHECK(flats_of(uniform(Width{1, 1}, 2)) == all);

  FlatSet top_only(Width{1, 1}, {{1, 1}});
  CHECK(validate_flat_axioms(top_only).ok());
  CHECK_FALSE(check_flats_simple(top_only));

  FlatSet holed = flats_of(testing::simple_43());
  holed.erase(Point{0, 0});
  ValidationReport r = validate_flat_axioms(holed);
  REQUIRE_FALSE(r.ok());
  CHECK(r.first().axiom == "F2");
  CHECK(r.first().points == std::vector<Point>{{0, 1}, {1, 0}});
  CHECK_THROWS_AS(matricube_from_flats(holed), AxiomError);

  FlatSet no_top(Width{1, 1}, {{0, 0}});
  CHECK(validate_flat_axioms(no_top).first().axiom == "F1");

  FlatSet gap(Width{2}, {Point{0}, Point{2}});
  ValidationReport g = validate_flat_axioms(gap);
  CHECK(g.ok());
  FlatSet gap2(Width{2, 1}, {{0, 0}, {2, 1}});
  CHECK(validate_flat_axioms(gap2).ok());

  FlatSet every(Width{2, 2}, Hypercuboid(Width{2, 2}).points());
  CHECK(matricube_from_flats(every) == uniform(Width{2, 2}, 4));

  FlatSet ends(Width{1, 1}, {{0, 0}, {1, 1}});
  CHECK(matricube_from_flats(ends).values() == std::vector<int>{0, 1, 1, 1});
}

TEST_CASE("circuits of the (5,4) example") {
  Matricube m = testing::circuits_54();
  CircuitSet c = circuits_of(m);
  CHECK(c.points() == std::vector<Point>{{1, 1}, {2, 4}, {3, 2}});
  PointSet cc = ccir_of(m);
  CHECK(cc.points() ==
        std::vector<Point>{{0, 0}, {1, 1}, {2, 4}, {3, 2}, {3, 4}});
  CHECK(join_closure(c).contains(Point{3, 4}));
  CHECK(validate_circuit_axioms(c).ok());
  CHECK(check_circuits_simple(c));
  CHECK(matricube_from_circuits(c) == m);
  // Circuits of a matricube may be comparable.
  CHECK(leq(Point{1, 1}, Point{3, 2}));
  CHECK(leq(Point{1, 1}, Point{2, 4}));
  CHECK_FALSE(leq(Point{3, 2}, Point{2, 4}));
}

TEST_CASE("circuit axioms on small sets") {
  CHECK(circuits_of(uniform(Width{2, 2}, 4)).empty());

  CircuitSet reducible(Width{1, 1}, {{1, 0}, {0, 1}, {1, 1}});
  ValidationReport r = validate_circuit_axioms(reducible);
  REQUIRE_FALSE(r.ok());
  CHECK(r.first().axiom == "C2");
  CHECK(r.first().points == std::vector<Point>{{1, 1}});

  CircuitSet origin(Width{1, 1}, {{0, 0}});
  CHECK(validate_circuit_axioms(origin).first().axiom == "C1");

  CircuitSet axis(Width{2, 1}, {{2, 0}});
  CHECK_FALSE(check_circuits_simple(axis));

  CircuitSet none(Width{1, 1});
  CHECK(matricube_from_circuits(none) == uniform(Width{1, 1}, 2));
  CircuitSet diag(Width{1, 1}, {{1, 1}});
  CHECK(matricube_from_circuits(diag).values() == std::vector<int>{0, 1, 1, 1});
}

TEST_CASE("independents of the (4,3) example") {
  Matricube m = testing::simple_43();
  IndependentSet j = independents_of(m);
  CHECK(j.points() == std::vector<Point>{{0, 0}, {0, 1}, {0, 2}, {0, 3},
                                         {1, 0}, {1, 1}, {2, 0}, {3, 0},
                                         {3, 3}, {4, 0}, {4, 3}});
  CHECK(j.contains(meet(Point{1, 1}, Point{0, 3})));
  CHECK(removal(j, Point{4, 3}, 1) == Point{4, 0});
  CHECK(removal(j, Point{4, 3}, 0) == Point{3, 3});
  CHECK(size(j, Point{4, 3}) == 5);
  CHECK(size(j, Point{0, 0}) == 0);
  CHECK(is_orderable(j));
  CHECK(validate_independent_axioms(j).ok());
  CHECK(check_independents_simple(j));
  CHECK(matricube_from_independents(j) == m);
  CHECK_THROWS_AS(removal(j, Point{2, 2}, 0), PreconditionError);
  CHECK_THROWS_AS(removal(j, Point{0, 3}, 0), PreconditionError);
}

TEST_CASE("independents of the (2,2) and (5,4) examples") {
  CHECK(independents_of(testing::same_maximal_a()).size() == 9);
  CHECK(independents_of(testing::same_maximal_b()).points() ==
        std::vector<Point>{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {2, 0}, {2, 2}});
  CHECK(independents_of(testing::unequal_maximal()).points() ==
        std::vector<Point>{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0},
                           {2, 1}});
  CHECK(independents_of(testing::circuits_54()).points() ==
        std::vector<Point>{{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 0},
                           {2, 0}, {2, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 3},
                           {5, 0}, {5, 3}});
  CHECK(independents_of(testing::flats_54()).points() ==
        std::vector<Point>{{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 0},
                           {1, 1}, {1, 2}, {1, 3}, {2, 0}, {2, 1}, {2, 2},
                           {2, 3}, {3, 0}, {4, 0}, {5, 0}, {5, 3}});

  for (const Matricube& m : {testing::same_maximal_a(), testing::same_maximal_b()}) {
    CHECK(matricube_from_independents(independents_of(m)) == m);
  }
  CHECK_FALSE(testing::same_maximal_a() == testing::same_maximal_b());
}

TEST_CASE("independent axioms on small sets") {
  IndependentSet gap(Width{1, 1}, {{0, 0}, {1, 1}});
  ValidationReport r = validate_independent_axioms(gap);
  REQUIRE_FALSE(r.ok());
  CHECK(r.first().axiom == "I1");
  CHECK(r.first().points == std::vector<Point>{{1, 1}});
  CHECK(r.first().directions == std::vector<std::size_t>{0});
  CHECK_FALSE(is_orderable(gap));

  IndependentSet origin(Width{1, 1}, {{0, 0}});
  CHECK(matricube_from_independents(origin).values() ==
        std::vector<int>{0, 0, 0, 0});
  CHECK_FALSE(check_independents_simple(origin));

  CHECK_FALSE(validate_independent_axioms(IndependentSet(Width{1})).ok());
}

bool has_i1(const ValidationReport& r) {
  for (const Violation& v : r.violations) {
    if (v.axiom == "I1") return true;
  }
  return false;
}

TEST_CASE("I1 agrees with orderability on random subsets") {
  std::mt19937_64 rng(7);
  Width w{2, 2};
  Hypercuboid c(w);
  int orderable = 0;
  for (int round = 0; round < 1000; ++round) {
    IndependentSet j(w);
    j.insert_index(0);
    for (std::size_t x = 1; x < c.size(); ++x) {
      if (rng() % 2) j.insert_index(x);
    }
    bool i1 = !has_i1(validate_independent_axioms(j, ReportMode::kAll));
    CHECK(i1 == is_orderable(j));
    orderable += i1;
  }
  CHECK(orderable > 0);
  CHECK(orderable < 1000);
}

TEST_CASE("round trips and simpleness on enumerated matricubes") {
  for (const Width& w : kSmallWidths) {
    for (const Matricube& m : enumerate_matricubes(w)) {
      FlatSet f = flats_of(m);
      CircuitSet cs = circuits_of(m);
      IndependentSet j = independents_of(m);

      CHECK(f.points() == oracle::flats(w, m.values()));
      CHECK(j.points() == oracle::independents(w, m.values()));

      CHECK(validate_flat_axioms(f, ReportMode::kAll).ok());
      CHECK(validate_circuit_axioms(cs, ReportMode::kAll).ok());
      CHECK(validate_independent_axioms(j, ReportMode::kAll).ok());

      CHECK(matricube_from_flats(f) == m);
      CHECK(matricube_from_circuits(cs) == m);
      CHECK(matricube_from_independents(j) == m);

      const bool simple = is_simple(m);
      CHECK(check_flats_simple(f) == simple);
      CHECK(check_circuits_simple(cs) == simple);
      CHECK(check_independents_simple(j) == simple);

      for (const Point& a : j.points()) CHECK(size(j, a) == m.rank(a));
    }
  }
}

TEST_CASE("flats lattice: unique F3 element and covers join to covers") {
  for (const Width& w : kSmallWidths) {
    for (const Matricube& m : enumerate_matricubes(w)) {
      FlatSet f = flats_of(m);
      const Hypercuboid& c = f.cube();
      std::vector<std::size_t> fl = f.indices();
      auto covers = [&](std::size_t a, std::size_t b) {
        if (a == b || !c.leq(a, b)) return false;
        for (std::size_t e : fl) {
          if (e != a && e != b && c.leq(a, e) && c.leq(e, b)) return false;
        }
        return true;
      };
      for (std::size_t a : fl) {
        for (std::size_t i = 0; i < c.dimension(); ++i) {
          auto ai = c.up(a, i);
          if (!ai) continue;
          int n = 0;
          for (std::size_t b : fl) n += covers(a, b) && c.leq(*ai, b);
          CHECK(n == 1);
        }
        for (std::size_t b1 : fl) {
          for (std::size_t b2 : fl) {
            if (b1 == b2 || !covers(a, b1) || !covers(a, b2)) continue;
            std::size_t j = c.index(*closure(f, c.point(c.join(b1, b2))));
            CHECK(covers(b1, j));
            CHECK(covers(b2, j));
            CHECK(m.rank_at(j) == m.rank_at(a) + 2);
          }
        }
      }
    }
  }
}

TEST_CASE("independents drop by one per removed direction") {
  for (const Width& w : kSmallWidths) {
    for (const Matricube& m : enumerate_matricubes(w)) {
      const Hypercuboid& c = m.cube();
      const std::size_t d = c.dimension();
      for (const Point& a : independents_of(m).points()) {
        for (unsigned mask = 1; mask < (1u << d); ++mask) {
          Point b = a;
          int k = 0;
          bool ok = true;
          for (std::size_t i = 0; i < d; ++i) {
            if (!(mask >> i & 1u)) continue;
            if (a[i] == 0) ok = false;
            else { --b[i]; ++k; }
          }
          if (ok) CHECK(m.rank(b) == m.rank(a) - k);
        }
      }
    }
  }
}

}  // namespace
}  // namespace mcube
