#include "orbitdiag/oracle.hpp"

#include <algorithm>

namespace orbitdiag {

SkewMatrix::SkewMatrix(Matrix entries) : entries_(std::move(entries)) {
  const std::size_t n = entries_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (entries_[i].size() != n) throw DimensionMismatch("skew matrix is not square");
    if (entries_[i][i] != 0) throw Error("skew matrix has a nonzero diagonal");
    for (std::size_t j = 0; j < i; ++j)
      if (entries_[i][j] != -entries_[j][i]) throw Error("matrix is not antisymmetric");
  }
}

SkewMatrix skew_form_matrix(const LinearForm& f, const QuotientAlgebra& algebra) {
  const auto& basis = algebra.basis();
  const std::size_t d = basis.size();
  Matrix m(d, std::vector<Rational>(d, Rational(0)));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const SignedTerm t = bracket(basis[a], basis[b], algebra.ideal());
      if (!t.is_zero()) m[a][b] = t.coefficient * f.at(*t.pair);
    }
  return SkewMatrix(std::move(m));
}

int exact_rank(const Matrix& m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m.front().size();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    Integer l = 1;
    for (const Rational& v : m[r]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) {
      Rational scaled = m[r][c] * l;
      a[r][c] = scaled.get_num();
    }
  }
  int rank = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows); ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const std::size_t pr = rank;
    Integer tmp;
    for (std::size_t r = pr + 1; r < rows; ++r) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        tmp = a[pr][c] * a[r][j];
        tmp -= a[r][c] * a[pr][j];
        mpz_divexact(a[r][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a[r][c] = 0;
    }
    prev = a[pr][c];
    ++rank;
  }
  return rank;
}

int exact_rank(const SkewMatrix& m) { return exact_rank(m.entries()); }

IndexEstimate index_oracle(const PatternIdeal& ideal, int trials, int bound,
                           std::uint64_t seed) {
  if (trials < 1) throw Error("index_oracle needs at least one trial");
  const QuotientAlgebra algebra(ideal);
  const CounterRng rng(seed);
  IndexEstimate out;
  for (int trial = 0; trial < trials; ++trial) {
    const LinearForm f = random_form(algebra, bound, rng.bits(0x696e646578ULL, trial));
    out.ranks.push_back(exact_rank(skew_form_matrix(f, algebra)));
    out.generic_rank = std::max(out.generic_rank, out.ranks.back());
  }
  out.index = algebra.dim() - out.generic_rank;
  return out;
}

int jacobian_rank(std::span<const Polynomial> zs, const LinearForm& f) {
  Matrix m;
  for (const Polynomial& z : zs) {
    std::vector<Rational> row;
    for (const auto& [v, value] : f.values()) row.push_back(evaluate(partial_derivative(z, v), f));
    m.push_back(std::move(row));
  }
  return exact_rank(m);
}

JacobianResult jacobian_rank_with_retry(std::span<const Polynomial> zs,
                                        const QuotientAlgebra& algebra, int bound,
                                        std::uint64_t seed, int max_retries) {
  const CounterRng rng(seed);
  JacobianResult out;
  const int want = static_cast<int>(zs.size());
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    ++out.attempts;
    const LinearForm f = random_form(algebra, bound, rng.bits(0x6a6163ULL, attempt));
    out.rank = jacobian_rank(zs, f);
    if (out.rank == want) break;
    out.log.push_back("attempt " + std::to_string(attempt) + ": rank " +
                      std::to_string(out.rank) + " < " + std::to_string(want));
  }
  return out;
}

bool invariance_oracle(std::span<const Polynomial> zs, const PatternIdeal& ideal,
                       int trials, std::uint64_t seed, int bound) {
  if (zs.empty()) return true;
  const QuotientAlgebra algebra(ideal);
  const CounterRng rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    const LinearForm f = random_form(algebra, bound, rng.bits(0x666f726dULL, trial));
    const UnipotentElement g = random_unipotent(ideal.n(), bound, rng.bits(0x67ULL, trial));
    const LinearForm moved = coadjoint_act(g, f, algebra);
    for (const Polynomial& z : zs)
      if (evaluate(z, f) != evaluate(z, moved)) return false;
  }
  return true;
}

}  // namespace orbitdiag
