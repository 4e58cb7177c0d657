#ifndef ORBITDIAG_CORE_MODEL_HPP
#define ORBITDIAG_CORE_MODEL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbitdiag {

using Rational = mpq_class;
using Integer = mpz_class;

/*
  A position (row, col) strictly below the diagonal of an n x n matrix.  It
  indexes the root vector y_{row,col} of ut(n), which we identify with the
  elementary matrix E_{row,col}.
*/
struct Pair {
  int row = 0;
  int col = 0;

  friend constexpr auto operator<=>(const Pair&, const Pair&) = default;
};

std::string to_string(const Pair& p);

/*
  The total order on positions: the leftmost column is greatest, and inside a
  column a larger row is greater.  So for n = 4

      (4,1) > (3,1) > (2,1) > (4,2) > (3,2) > (4,3).
*/
constexpr bool order_gt(const Pair& a, const Pair& b) {
  return a.col < b.col || (a.col == b.col && a.row > b.row);
}

// Integer key, strictly increasing as pairs decrease in the order above.  It
// does not depend on n, so polynomials can use it as a variable id.
constexpr std::uint16_t order_key(const Pair& p) {
  return static_cast<std::uint16_t>((p.col << 8) | (255 - p.row));
}
constexpr Pair pair_from_key(std::uint16_t key) {
  return Pair{255 - (key & 0xff), key >> 8};
}

// Comparator sorting pairs descending in the order, greatest first.
struct Descending {
  constexpr bool operator()(const Pair& a, const Pair& b) const {
    return order_gt(a, b);
  }
};

using PairSet = std::set<Pair, Descending>;

// All positions of ut(n), greatest first.
std::vector<Pair> all_pairs(int n);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OutOfRange : public Error {
 public:
  explicit OutOfRange(Pair p);
  Pair pair;
};

class NotAnIdeal : public Error {
 public:
  NotAnIdeal(Pair p, Pair missing);
  Pair pair;
  Pair missing;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/*
  A set M of positions that is closed under moving down and moving left.  The
  span of {y_p : p in M} is then an ideal m of ut(n), and the library works
  with the factor algebra L = ut(n)/m.
*/
class PatternIdeal {
 public:
  // Validating constructor; throws OutOfRange or NotAnIdeal.
  static PatternIdeal validate(int n, std::span<const Pair> pairs);
  static PatternIdeal validate(int n, const PairSet& pairs);
  static PatternIdeal empty(int n);
  static PatternIdeal full(int n);

  int n() const { return n_; }
  const PairSet& members() const { return members_; }
  bool contains(const Pair& p) const { return members_.count(p) != 0; }
  bool in_range(const Pair& p) const {
    return p.row <= n_ && p.col >= 1 && p.row > p.col;
  }

  friend bool operator==(const PatternIdeal&, const PatternIdeal&) = default;

 private:
  PatternIdeal(int n, PairSet members) : n_(n), members_(std::move(members)) {}

  int n_ = 1;
  PairSet members_;
};

class QuotientAlgebra {
 public:
  explicit QuotientAlgebra(PatternIdeal ideal);

  const PatternIdeal& ideal() const { return ideal_; }
  int n() const { return ideal_.n(); }
  // A \ M, greatest first.
  const std::vector<Pair>& basis() const { return basis_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  // Position of p in basis(), or -1 when p is in M.
  int index_of(const Pair& p) const;

 private:
  PatternIdeal ideal_;
  std::vector<Pair> basis_;
  std::map<Pair, int> positions_;
};

/*
  A point f of L*, i.e. a linear form on ut(n) vanishing on m.  The value map
  holds every basis pair of L (absent keys at construction mean 0).
*/
class LinearForm {
 public:
  LinearForm(const QuotientAlgebra& algebra,
             const std::map<Pair, Rational>& values = {});

  int n() const { return n_; }
  const std::map<Pair, Rational, Descending>& values() const { return values_; }
  bool has(const Pair& p) const { return values_.count(p) != 0; }
  // Value at a basis pair; throws std::out_of_range for pairs outside L.
  const Rational& at(const Pair& p) const { return values_.at(p); }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;

 private:
  int n_ = 1;
  std::map<Pair, Rational, Descending> values_;
};

using Matrix = std::vector<std::vector<Rational>>;

/// Lower unitriangular n x n matrix over the rationals, an element of UT(n).
class UnipotentElement {
 public:
  static UnipotentElement identity(int n);
  // Throws Error unless `entries` is lower triangular with unit diagonal.
  explicit UnipotentElement(Matrix entries);

  int n() const { return static_cast<int>(entries_.size()); }
  const Matrix& entries() const { return entries_; }
  // 1-based access, matching the pair convention.
  const Rational& operator()(int row, int col) const {
    return entries_[row - 1][col - 1];
  }

  UnipotentElement inverse() const;
  friend UnipotentElement operator*(const UnipotentElement& a,
                                    const UnipotentElement& b);
  friend bool operator==(const UnipotentElement&,
                         const UnipotentElement&) = default;

 private:
  Matrix entries_;
};

// Result of a bracket of two basis vectors: 0, +y_p or -y_p.
struct SignedTerm {
  int coefficient = 0;
  std::optional<Pair> pair;

  bool is_zero() const { return coefficient == 0; }
  friend bool operator==(const SignedTerm&, const SignedTerm&) = default;
};

// [y_a, y_b] in ut(n), using [E_ij, E_kl] = d_jk E_il - d_li E_kj.
SignedTerm bracket(const Pair& a, const Pair& b);
// Same bracket taken in L: results lying in M become 0.
SignedTerm bracket(const Pair& a, const Pair& b, const PatternIdeal& ideal);

/*
  Coadjoint action of g on f.  The form is realised as the upper triangular
  matrix b with b[j][i] = f(y_ij); the result is P(g b g^-1), P the projection
  onto the strictly upper triangular part, read back as a form.
*/
LinearForm coadjoint_act(const UnipotentElement& g, const LinearForm& f,
                         const QuotientAlgebra& algebra);

// Deterministic, platform independent pseudo-random sampling.  Every value is
// a pure function of (seed, stream, counter).
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t bits(std::uint64_t stream, std::uint64_t counter,
                     std::uint64_t attempt = 0) const;
  // Uniform integer in [lo, hi], unbiased.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi, std::uint64_t stream,
                       std::uint64_t counter) const;
  CounterRng split(std::uint64_t stream) const;

 private:
  std::uint64_t seed_;
};

// Integer coordinates uniform in [-bound, bound], keyed by basis position.
LinearForm random_form(const QuotientAlgebra& algebra, int bound,
                       std::uint64_t seed);
// Integer entries below the diagonal uniform in [-bound, bound].
UnipotentElement random_unipotent(int n, int bound, std::uint64_t seed);
// Entries num/den with num in [-bound, bound] and den in [1, bound].
UnipotentElement random_rational_unipotent(int n, int bound,
                                           std::uint64_t seed);
LinearForm random_rational_form(const QuotientAlgebra& algebra, int bound,
                                std::uint64_t seed);

/*
  Every pattern ideal of ut(n), 1 <= n <= 8, each exactly once.  A pattern
  ideal is fixed by the first M-row p_j of every column j, with
  j+1 <= p_j <= n+1 and p_1 <= p_2 <= ... <= p_{n-1}; the ideals are listed in
  lexicographic order of (p_1, ..., p_{n-1}).
*/
std::vector<PatternIdeal> enumerate_pattern_ideals(int n);

}  // namespace orbitdiag

#endif  // ORBITDIAG_CORE_MODEL_HPP
