#include <doctest.h>

#include "orbitdiag/diagram.hpp"
#include "orbitdiag/invariants.hpp"
#include "orbitdiag/oracle.hpp"
#include "support.hpp"

using namespace orbitdiag;
using orbitdiag::test::example_ideal;
using orbitdiag::test::y;

namespace {

// Textbook elimination over Q with pivoting on the first nonzero entry.
int gauss_rank(Matrix m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      const Rational q = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= q * m[rank][j];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

// f([x, y]) from matrix commutators, f paired through the trace.
Matrix commutator_form(const LinearForm& f, const QuotientAlgebra& alg) {
  const int n = alg.n();
  auto unit = [&](const Pair& p) {
    Matrix e(n, std::vector<Rational>(n, Rational(0)));
    e[p.row - 1][p.col - 1] = 1;
    return e;
  };
  auto mul = [&](const Matrix& a, const Matrix& b) {
    Matrix c(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
  };
  const auto& basis = alg.basis();
  Matrix out(basis.size(), std::vector<Rational>(basis.size(), Rational(0)));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Matrix a = mul(unit(basis[i]), unit(basis[j])), b = mul(unit(basis[j]), unit(basis[i]));
      Rational v = 0;
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < r; ++c) {
          const Rational x = a[r][c] - b[r][c];
          if (x != 0 && f.has({r + 1, c + 1})) v += x * f.at({r + 1, c + 1});
        }
      out[i][j] = v;
    }
  return out;
}

Matrix random_matrix(int rows, int cols, int rank, std::uint64_t seed) {
  // Product of random rows x rank and rank x cols matrices.
  const CounterRng rng(seed);
  auto draw = [&](std::uint64_t stream, std::uint64_t i) {
    Rational v(static_cast<long>(rng.uniform(-6, 6, stream, i)),
               static_cast<long>(rng.uniform(1, 4, stream + 10, i)));
    v.canonicalize();
    return v;
  };
  Matrix out(rows, std::vector<Rational>(cols, Rational(0)));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      for (int k = 0; k < rank; ++k)
        out[r][c] += draw(1, r * 64 + k) * draw(2, k * 64 + c);
  return out;
}

}  // namespace

TEST_CASE("skew_form_matrix of ut(3)") {
  const QuotientAlgebra ut3(PatternIdeal::empty(3));  // basis 31, 21, 32
  const LinearForm f(ut3, {{{3, 1}, 5}, {{2, 1}, 2}, {{3, 2}, 7}});
  const SkewMatrix b = skew_form_matrix(f, ut3);
  REQUIRE(b.dim() == 3);
  CHECK(b.entries()[1][2] == -5);
  CHECK(b.entries()[2][1] == 5);
  CHECK(b.entries()[0][1] == 0);
  CHECK(b.entries()[0][2] == 0);
  CHECK(exact_rank(b) == 2);
  CHECK(exact_rank(skew_form_matrix(LinearForm(ut3, {{{2, 1}, 1}}), ut3)) == 0);
  CHECK_THROWS(SkewMatrix(Matrix{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}}));
}

TEST_CASE("skew_form_matrix agrees with matrix commutators") {
  for (int n : {4, 5, 6})
    for (const PatternIdeal& ideal : enumerate_pattern_ideals(n)) {
      const QuotientAlgebra alg(ideal);
      const LinearForm f = random_rational_form(alg, 9, alg.dim() * 31 + n);
      CHECK(skew_form_matrix(f, alg).entries() == commutator_form(f, alg));
    }
}

TEST_CASE("exact_rank agrees with plain elimination") {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const int rows = 1 + static_cast<int>(s % 7), cols = 1 + static_cast<int>((s / 7) % 8);
    const int rank = static_cast<int>(s % 5);
    const Matrix m = random_matrix(rows, cols, rank, s);
    CHECK(exact_rank(m) == gauss_rank(m));
    CHECK(exact_rank(m) <= rank);
  }
  CHECK(exact_rank(Matrix{}) == 0);
  CHECK(exact_rank(Matrix{{Rational(0)}}) == 0);
  CHECK(exact_rank(Matrix{{Rational(1, 3), Rational(2, 3)}, {Rational(1), Rational(2)}}) == 1);
}

TEST_CASE("index_oracle") {
  const IndexEstimate est = index_oracle(example_ideal(), 5, 1000, 1);
  CHECK(est.index == 5);
  CHECK(est.generic_rank == 12);
  CHECK(est.ranks.size() == 5);
  CHECK(index_oracle(example_ideal(), 5, 1000, 1).ranks == est.ranks);

  CHECK(index_oracle(PatternIdeal::empty(4), 3, 100, 0).index == 2);
  CHECK(index_oracle(PatternIdeal::full(4), 3, 100, 0).index == 0);

  // Spot check against the plain route on a few ideals.
  for (const PatternIdeal& ideal : enumerate_pattern_ideals(5)) {
    const QuotientAlgebra alg(ideal);
    const LinearForm f = random_form(alg, 1000, 17);
    CHECK(exact_rank(skew_form_matrix(f, alg)) == gauss_rank(commutator_form(f, alg)));
  }
}

TEST_CASE("jacobian_rank") {
  const QuotientAlgebra ut4(PatternIdeal::empty(4));
  const auto z4 = build_invariants(Diagram(PatternIdeal::empty(4)));
  CHECK(jacobian_rank(z4, random_form(ut4, 1000, 1)) == 2);
  // At f = 0 every partial of degree >= 2 vanishes.
  CHECK(jacobian_rank(z4, LinearForm(ut4, {})) == 1);

  const Diagram d(example_ideal());
  const auto z = build_invariants(d);
  const JacobianResult r = jacobian_rank_with_retry(z, QuotientAlgebra(d.ideal()), 1000, 9);
  CHECK(r.rank == 5);
  CHECK(r.attempts >= 1);

  const std::vector<Polynomial> dependent{y(4, 1), scale(3, y(4, 1))};
  const JacobianResult bad = jacobian_rank_with_retry(dependent, ut4, 1000, 9);
  CHECK(bad.rank == 1);
  CHECK(bad.attempts == 6);
  CHECK(bad.log.size() == 6);
}

TEST_CASE("invariance_oracle") {
  const auto z4 = build_invariants(Diagram(PatternIdeal::empty(4)));
  CHECK(invariance_oracle(z4, PatternIdeal::empty(4), 20, 5));
  const std::vector<Polynomial> moving{y(3, 1)};
  CHECK_FALSE(invariance_oracle(moving, PatternIdeal::empty(4), 20, 5));
  // y31 is invariant once y41 is factored out.
  CHECK(invariance_oracle(moving, PatternIdeal::validate(4, PairSet{{4, 1}}), 20, 5));
}
