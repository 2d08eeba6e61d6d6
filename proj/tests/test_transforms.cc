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

#include "doctest.h"
#include "mcube/enumerate.h"
#include "mcube/error.h"
#include "mcube/transforms.h"
#include "support/fixtures.h"
#include "support/oracles.h"

namespace mcube {
namespace {

using testing::grid;

const std::vector<Width> kSmallWidths = {Width{1, 1}, Width{2, 1}, Width{1, 1, 1},
                                         Width{2, 2}};

BigInt evaluate(const TwoVarPolynomial& p, long x, long y) {
  BigInt sum = 0;
  for (const auto& [e, c] : p.terms()) {
    BigInt term = c;
    for (int k = 0; k < e.first; ++k) term *= x;
    for (int k = 0; k < e.second; ++k) term *= y;
    sum += term;
  }
  return sum;
}

TEST_CASE("dual of the worked examples") {
  CHECK(dual(testing::simple_43()).table() == grid(4, 3, {{0, 0, 0, 1, 2},
                                                          {0, 0, 0, 1, 2},
                                                          {1, 1, 1, 2, 2},
                                                          {2, 2, 2, 2, 2}}));
  CHECK(dual(testing::circuits_54()).table() ==
        grid(5, 4, {{0, 0, 0, 1, 2, 3},
                    {1, 1, 1, 2, 2, 3},
                    {1, 1, 1, 2, 2, 3},
                    {2, 2, 2, 2, 2, 3},
                    {3, 3, 3, 3, 3, 3}}));
  CHECK(dual(uniform(Width{1, 1}, 2)).values() == std::vector<int>{0, 0, 0, 0});
}

TEST_CASE("deletion and contraction of the (4,3) example") {
  Matricube m = testing::simple_43();
  CHECK(deletion(m, 1).table() == grid(4, 2, {{0, 1, 2, 3, 4},
                                             {1, 2, 2, 3, 4},
                                             {2, 2, 2, 3, 4}}));
  CHECK(contraction(m, 1).table() == grid(4, 2, {{0, 1, 1, 2, 3},
                                                {1, 1, 1, 2, 3},
                                                {2, 2, 2, 3, 4}}));
  CHECK(is_simple(deletion(m, 1)));
  CHECK_FALSE(is_simple(contraction(m, 1)));

  Matricube c = contraction(uniform(Width{1, 1}, 2), 0);
  CHECK(c.width() == Width{0, 1});
  CHECK(c.values() == std::vector<int>{0, 1});

  CHECK(deletion(uniform(Width{2, 2}, 4), 0) == uniform(Width{1, 2}, 3));
  CHECK(deletion(uniform(Width{2, 2}, 4), 1) == uniform(Width{2, 1}, 3));

  CHECK_THROWS_AS(deletion(c, 0), PreconditionError);
  CHECK_THROWS_AS(contraction(m, 2), InvalidInput);
}

TEST_CASE("minor sequences") {
  Matricube m = testing::simple_43();
  std::vector<MinorStep> steps = parse_minor_ops("d0, c1,d0");
  REQUIRE(steps.size() == 3);
  CHECK(steps[1].op == MinorOp::kContract);
  CHECK(steps[1].direction == 1);
  CHECK(minor(m, steps) == deletion(contraction(deletion(m, 0), 1), 0));
  CHECK(minor(m, {}) == m);
  CHECK_THROWS_AS(parse_minor_ops("x0"), InvalidInput);
  CHECK_THROWS_AS(parse_minor_ops("d"), InvalidInput);
  CHECK_THROWS_AS(parse_minor_ops("d0,,c1"), InvalidInput);
}

TEST_CASE("deletion and contraction in distinct directions commute") {
  for (const Matricube& m : enumerate_matricubes(Width{2, 2})) {
    for (std::size_t i = 0; i < 2; ++i) {
      std::size_t j = 1 - i;
      CHECK(deletion(contraction(m, i), j) == contraction(deletion(m, j), i));
      CHECK(deletion(deletion(m, i), j) == deletion(deletion(m, j), i));
      CHECK(contraction(contraction(m, i), j) ==
            contraction(contraction(m, j), i));
    }
  }
}

TEST_CASE("direct sums") {
  Matricube seg = uniform(Width{1}, 1);
  CHECK(direct_sum(seg, seg) == uniform(Width{1, 1}, 2));
  Matricube m = testing::simple_43();
  Matricube point = uniform(Width{}, 0);
  CHECK(direct_sum(m, point) == m);
  CHECK(direct_sum(point, m) == m);

  std::vector<Matricube> ms = enumerate_matricubes(Width{1, 1});
  std::vector<Matricube> seg2 = enumerate_matricubes(Width{2});
  for (const Matricube& a : ms) {
    for (const Matricube& b : seg2) {
      Matricube s = direct_sum(a, b);
      CHECK(validate_rank_axioms(s.table()).ok());
      CHECK(s.rank(Point{1, 0, 2}) == a.rank(Point{1, 0}) + b.rank(Point{2}));
    }
  }
}

TEST_CASE("loops and coloops") {
  Matricube zero(Width{1, 1}, {0, 0, 0, 0});
  CHECK(is_loop(zero, 0));
  CHECK_FALSE(is_coloop(zero, 0));
  Matricube u = uniform(Width{1, 1}, 2);
  CHECK(is_coloop(u, 0));
  CHECK(is_coloop(u, 1));
  CHECK_FALSE(is_loop(u, 0));
  CHECK_THROWS_AS(is_loop(contraction(u, 0), 0), PreconditionError);

  for (const Matricube& m : enumerate_matricubes(Width{2, 2})) {
    for (std::size_t i = 0; i < 2; ++i) {
      CHECK(is_coloop(m, i) == (deletion(m, i).rank() == m.rank() - 1));
      CHECK(is_coloop(m, i) == is_loop(dual(m), i));
    }
  }
}

TEST_CASE("polynomial text form") {
  TwoVarPolynomial p = TwoVarPolynomial::monomial(2, 0) +
                       TwoVarPolynomial::monomial(1, 1, -2) +
                       TwoVarPolynomial::monomial(0, 2) +
                       TwoVarPolynomial::constant(1);
  CHECK(p.to_string() == "x^2 - 2*x*y + y^2 + 1");
  CHECK(TwoVarPolynomial().to_string() == "0");
  CHECK(TwoVarPolynomial::monomial(0, 1, -1).to_string() == "-y");
  CHECK(TwoVarPolynomial::shifted_monomial(1, 1).to_string() ==
        "x*y - x - y + 1");
  CHECK((p + TwoVarPolynomial::monomial(1, 1, 2)).to_string() ==
        "x^2 + y^2 + 1");
  CHECK(binomial(10, 3) == 120);
}

TEST_CASE("tutte polynomials") {
  Matricube u = uniform(Width{1, 1}, 2);
  CHECK(tutte(u) == TwoVarPolynomial::monomial(2, 0));
  CHECK(tutte(u).to_string() == "x^2");
  CHECK(tutte(dual(u)).to_string() == "y^2");

  for (const Width& w : kSmallWidths) {
    for (const Matricube& m : enumerate_matricubes(w)) {
      TwoVarPolynomial t = tutte(m);
      CHECK(tutte(dual(m)) == t.swapped());
      for (long x : {-2, 0, 3}) {
        for (long y : {-1, 2, 5}) {
          CHECK(evaluate(t, x, y) == oracle::tutte_at(w, m.values(), x, y));
        }
      }
    }
  }

  std::vector<Matricube> ms = enumerate_matricubes(Width{1, 1});
  for (const Matricube& a : ms) {
    for (const Matricube& b : ms) {
      CHECK(tutte(direct_sum(a, b)) == tutte(a) * tutte(b));
    }
  }
}

TEST_CASE("dual identities on enumerated matricubes") {
  for (const Width& w : kSmallWidths) {
    for (const Matricube& m : enumerate_matricubes(w)) {
      Matricube d = dual(m);
      CHECK(d.values() == oracle::dual(w, m.values()));
      CHECK(validate_rank_axioms(d.table()).ok());
      CHECK(dual(d) == m);
      CHECK(d.rank() == w.l1() - m.rank());
      for (std::size_t x = 0; x < m.cube().size(); ++x) {
        CHECK(m.rank_at(x) + d.rank_at(m.cube().complement(x)) <= w.l1());
      }
      for (std::size_t i = 0; i < w.dimension(); ++i) {
        CHECK(validate_rank_axioms(deletion(m, i).table()).ok());
        CHECK(validate_rank_axioms(contraction(m, i).table()).ok());
        if (is_simple(m) && w[i] >= 2) CHECK(is_simple(deletion(m, i)));
      }
    }
  }
}

TEST_CASE("basis candidates of the worked examples") {
  PointSet top(Width{2, 2}, {{2, 2}});
  for (const Matricube& m : {testing::same_maximal_a(), testing::same_maximal_b()}) {
    CHECK(basis_candidates(m, BasisKind::kA) == top);
    CHECK(basis_candidates(m, BasisKind::kE) == top);
  }
  Matricube uneq = testing::unequal_maximal();
  PointSet a = basis_candidates(uneq, BasisKind::kA);
  CHECK(a.points() == std::vector<Point>{{0, 2}, {2, 1}});
  CHECK(uneq.rank(Point{0, 2}) == 2);
  CHECK(uneq.rank(Point{2, 1}) == 3);

  std::vector<Point> c_expected = {{0, 4}, {2, 3}, {5, 0}, {5, 3}};
  CHECK(basis_candidates(testing::circuits_54(), BasisKind::kC).points() ==
        c_expected);
  CHECK(basis_candidates(testing::flats_54(), BasisKind::kC).points() ==
        c_expected);
  CHECK(basis_candidates(testing::circuits_54(), BasisKind::kF).empty());
  CHECK(basis_candidates(testing::flats_54(), BasisKind::kF).empty());

  CHECK(parse_basis_kind("c") == BasisKind::kC);
  CHECK_THROWS_AS(parse_basis_kind("g"), InvalidInput);
}

TEST_CASE("basis kinds c and d coincide") {
  for (const Width& w : kSmallWidths) {
    for (const Matricube& m : enumerate_matricubes(w)) {
      CHECK(basis_candidates(m, BasisKind::kC) ==
            basis_candidates(m, BasisKind::kD));
      PointSet b = basis_candidates(m, BasisKind::kB);
      for (const Point& p : b.points()) CHECK(m.rank(p) == m.rank());
    }
  }
}

}  // namespace
}  // namespace mcube
