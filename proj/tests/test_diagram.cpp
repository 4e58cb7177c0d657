#include <doctest.h>

#include "orbitdiag/diagram.hpp"
#include "support.hpp"

using namespace orbitdiag;
using orbitdiag::test::example_ideal;
using orbitdiag::test::pairs;

TEST_CASE("build_diagram on the n = 7 example") {
  const Diagram d(example_ideal());
  CHECK(d.steps() == 5);
  CHECK(index_of(d) == 5);
  CHECK(max_orbit_dim(d) == 12);
  CHECK(d.crosses() == pairs({{4, 1}, {6, 2}, {7, 3}, {7, 4}, {5, 4}}));

  const std::vector<Pair> xi{{4, 1}, {6, 2}, {7, 3}, {7, 4}, {5, 4}};
  const std::vector<int> p{5, 7, 8, 8, 8};
  const std::vector<PairSet> minus{pairs({{4, 2}, {4, 3}}), pairs({{6, 3}, {6, 5}}),
                                   pairs({{7, 5}}), pairs({{7, 6}}), {}};
  const std::vector<PairSet> plus{pairs({{2, 1}, {3, 1}}), pairs({{3, 2}, {5, 2}}),
                                  pairs({{5, 3}}), pairs({{6, 4}}), {}};
  for (int i = 1; i <= 5; ++i) {
    CAPTURE(i);
    const StepRecord& r = d.step(i);
    CHECK(r.index == i);
    CHECK(r.xi == xi[i - 1]);
    CHECK(r.p == p[i - 1]);
    CHECK(r.minus == minus[i - 1]);
    CHECK(r.plus == plus[i - 1]);
    CHECK(d.cell(r.xi) == Symbol{SymbolKind::Cross, i});
  }
  CHECK(d.cell({7, 2}) == Symbol{SymbolKind::Bullet, 0});
  CHECK(d.cell({3, 2}) == Symbol{SymbolKind::Plus, 2});
  CHECK(d.cell({7, 6}) == Symbol{SymbolKind::Minus, 4});
  CHECK(d.plus_cells().size() == 6);
  CHECK(d.minus_cells().size() == 6);

  CHECK_THROWS_AS(d.step(0), StepOutOfRange);
  CHECK_THROWS_AS(d.step(6), StepOutOfRange);
}

TEST_CASE("unfilled sets") {
  const Diagram d(example_ideal());
  CHECK(b_set(d, 0).size() == 17);
  CHECK(b_set(d, 1) == pairs({{3, 2}, {5, 2}, {6, 2}, {5, 3}, {6, 3}, {7, 3}, {5, 4}, {6, 4},
                              {7, 4}, {6, 5}, {7, 5}, {7, 6}}));
  CHECK(b_set(d, 4) == pairs({{5, 4}}));
  CHECK(b_set(d, 5).empty());
  CHECK_FALSE(d.cell_after({3, 2}, 1).has_value());
  CHECK(d.cell_after({3, 2}, 2) == Symbol{SymbolKind::Plus, 2});
  CHECK(d.cell_after({5, 1}, 0) == Symbol{SymbolKind::Bullet, 0});
}

TEST_CASE("classify_step") {
  const Diagram d(example_ideal());
  using enum StepClass;
  const std::map<Pair, StepClass, Descending> first{
      {{3, 2}, C11}, {{5, 2}, C2}, {{6, 2}, C2}, {{5, 3}, C2}, {{6, 3}, C2}, {{7, 3}, C2},
      {{5, 4}, C3},  {{6, 4}, C3}, {{7, 4}, C3}, {{6, 5}, C4}, {{7, 5}, C4}, {{7, 6}, C4}};
  CHECK(classify_step(d, 1) == first);

  const auto third = classify_step(d, 3);
  CHECK(third.size() == 4);
  CHECK(third.at({7, 4}) == C12b);
  CHECK(third.at({5, 4}) == C11);
  CHECK(third.at({6, 4}) == C12c);
  CHECK(third.at({7, 6}) == C12b);

  CHECK(classify_step(d, 5).empty());
  CHECK(std::string(to_string(C12c)) == "1.2c");
}

TEST_CASE("d_minus") {
  const Diagram d(example_ideal());
  CHECK(d_minus(d, 1) == pairs({{4, 2}, {4, 3}}));
  CHECK(d_minus(d, 2) == pairs({{4, 2}, {4, 3}, {6, 3}, {6, 5}}));
  CHECK(d_minus(d, 3) == pairs({{4, 3}, {6, 3}, {6, 5}, {7, 5}}));
  CHECK(d_minus(d, 4) == pairs({{6, 5}, {7, 5}, {7, 6}}));
  CHECK(d_minus(d, 5) == pairs({{6, 5}, {7, 5}, {7, 6}}));
  for (int i = 1; i <= 5; ++i) CHECK(check_closure(d_minus(d, i), d.ideal()));
}

TEST_CASE("check_closure") {
  const PatternIdeal none = PatternIdeal::empty(3);
  CHECK_FALSE(check_closure(pairs({{2, 1}, {3, 2}}), none));
  CHECK(check_closure(pairs({{2, 1}, {3, 2}, {3, 1}}), none));
  CHECK(check_closure(pairs({{2, 1}, {3, 2}}), PatternIdeal::validate(3, pairs({{3, 1}}))));
  CHECK(check_closure({}, none));
}

TEST_CASE("small and degenerate diagrams") {
  SUBCASE("ut(3)") {
    const Diagram d(PatternIdeal::empty(3));
    CHECK(d.steps() == 1);
    CHECK(d.step(1).xi == Pair{3, 1});
    CHECK(d.step(1).p == 4);
    CHECK(d.cell({3, 2}).kind == SymbolKind::Minus);
    CHECK(d.cell({2, 1}).kind == SymbolKind::Plus);
  }
  SUBCASE("M = A") {
    const Diagram d(PatternIdeal::full(5));
    CHECK(d.steps() == 0);
    CHECK(index_of(d) == 0);
    CHECK(max_orbit_dim(d) == 0);
  }
  SUBCASE("n = 1") {
    const Diagram d(PatternIdeal::empty(1));
    CHECK(d.steps() == 0);
    CHECK(d.cells().empty());
  }
  SUBCASE("abelian quotient") {
    // Only the first subdiagonal survives; all brackets vanish.
    const Diagram d(PatternIdeal::validate(4, pairs({{3, 1}, {4, 1}, {4, 2}})));
    CHECK(index_of(d) == 3);
    CHECK(max_orbit_dim(d) == 0);
  }
}

TEST_CASE("index of ut(n)") {
  for (int n = 1; n <= 10; ++n) {
    const Diagram d(PatternIdeal::empty(n));
    CHECK(index_of(d) == n / 2);
  }
}

TEST_CASE("every diagram is total and has a valid classification") {
  for (int n = 2; n <= 7; ++n)
    for (const PatternIdeal& ideal : enumerate_pattern_ideals(n)) {
      const Diagram d(ideal);
      CHECK(d.cells().size() == all_pairs(n).size());
      for (int i = 1; i <= d.steps(); ++i) CHECK_NOTHROW(classify_step(d, i));
    }
}

TEST_CASE("d_minus need not be closed from n = 7 on") {
  // Smallest ideal where the minus cells below xi_4 are not a subalgebra.
  const PatternIdeal ideal = PatternIdeal::validate(
      7, pairs({{4, 1}, {5, 1}, {6, 1}, {7, 1}, {6, 2}, {7, 2}}));
  const Diagram d(ideal);
  CHECK(d.step(4).xi == Pair{6, 4});
  CHECK(d_minus(d, 4) == pairs({{5, 4}, {7, 5}, {7, 6}}));
  CHECK(d.cell({7, 4}) == Symbol{SymbolKind::Minus, 3});
  CHECK_FALSE(check_closure(d_minus(d, 4), ideal));
  for (int n = 2; n <= 6; ++n)
    for (const PatternIdeal& m : enumerate_pattern_ideals(n)) {
      const Diagram e(m);
      for (int i = 1; i <= e.steps(); ++i) CHECK(check_closure(d_minus(e, i), m));
    }
}
