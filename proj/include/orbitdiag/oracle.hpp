#ifndef ORBITDIAG_ORACLE_HPP
#define ORBITDIAG_ORACLE_HPP

#include "orbitdiag/polynomial.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace orbitdiag {

/// B_f(x, y) = f([x, y]) on the basis of L.  Its rank is the dimension of
/// the coadjoint orbit through f.
class SkewMatrix {
 public:
  explicit SkewMatrix(Matrix entries);

  int dim() const { return static_cast<int>(entries_.size()); }
  const Matrix& entries() const { return entries_; }

 private:
  Matrix entries_;
};

SkewMatrix skew_form_matrix(const LinearForm& f, const QuotientAlgebra& algebra);

// Rank over Q by fraction-free (Bareiss) elimination after clearing row
// denominators.
int exact_rank(const Matrix& m);
int exact_rank(const SkewMatrix& m);

struct IndexEstimate {
  int index = 0;
  int generic_rank = 0;
  std::vector<int> ranks;  // one per trial
};

// Maximal rank of B_f over `trials` random integer forms.
IndexEstimate index_oracle(const PatternIdeal& ideal, int trials, int bound,
                           std::uint64_t seed);

// Rank of [dz_i/dy_eta (f)].
int jacobian_rank(std::span<const Polynomial> zs, const LinearForm& f);

struct JacobianResult {
  int rank = 0;
  int attempts = 0;
  std::vector<std::string> log;  // one line per rank-deficient attempt
};

// Retries with fresh forms while the rank stays below zs.size().
JacobianResult jacobian_rank_with_retry(std::span<const Polynomial> zs,
                                        const QuotientAlgebra& algebra, int bound,
                                        std::uint64_t seed, int max_retries = 5);

// True when every z takes equal values at f and at Ad*_g f for `trials`
// random (g, f).
bool invariance_oracle(std::span<const Polynomial> zs, const PatternIdeal& ideal,
                       int trials, std::uint64_t seed, int bound = 1000);

}  // namespace orbitdiag

#endif  // ORBITDIAG_ORACLE_HPP
