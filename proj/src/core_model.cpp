#include "orbitdiag/core_model.hpp"

#include <functional>
#include <sstream>

namespace orbitdiag {

std::string to_string(const Pair& p) {
  return "(" + std::to_string(p.row) + "," + std::to_string(p.col) + ")";
}

std::vector<Pair> all_pairs(int n) {
  std::vector<Pair> out;
  for (int col = 1; col < n; ++col)
    for (int row = n; row > col; --row) out.push_back({row, col});
  return out;
}

OutOfRange::OutOfRange(Pair p)
    : Error("pair " + to_string(p) + " is not strictly lower triangular"),
      pair(p) {}

NotAnIdeal::NotAnIdeal(Pair p, Pair m)
    : Error("not an ideal: " + to_string(p) + " present but " + to_string(m) +
            " missing"),
      pair(p),
      missing(m) {}

PatternIdeal PatternIdeal::validate(int n, const PairSet& pairs) {
  if (n < 1) throw Error("n must be at least 1");
  for (const Pair& p : pairs)
    if (p.col < 1 || p.row > n || p.row <= p.col) throw OutOfRange(p);
  // Closure under one step down and one step left implies full closure.
  for (const Pair& p : pairs) {
    if (p.row + 1 <= n && !pairs.count({p.row + 1, p.col}))
      throw NotAnIdeal(p, {p.row + 1, p.col});
    if (p.col - 1 >= 1 && !pairs.count({p.row, p.col - 1}))
      throw NotAnIdeal(p, {p.row, p.col - 1});
  }
  return PatternIdeal(n, pairs);
}

PatternIdeal PatternIdeal::validate(int n, std::span<const Pair> pairs) {
  return validate(n, PairSet(pairs.begin(), pairs.end()));
}

PatternIdeal PatternIdeal::empty(int n) { return validate(n, PairSet{}); }

PatternIdeal PatternIdeal::full(int n) {
  auto all = all_pairs(n);
  return validate(n, PairSet(all.begin(), all.end()));
}

QuotientAlgebra::QuotientAlgebra(PatternIdeal ideal) : ideal_(std::move(ideal)) {
  for (const Pair& p : all_pairs(ideal_.n()))
    if (!ideal_.contains(p)) {
      positions_[p] = static_cast<int>(basis_.size());
      basis_.push_back(p);
    }
}

int QuotientAlgebra::index_of(const Pair& p) const {
  auto it = positions_.find(p);
  return it == positions_.end() ? -1 : it->second;
}

LinearForm::LinearForm(const QuotientAlgebra& algebra,
                       const std::map<Pair, Rational>& values)
    : n_(algebra.n()) {
  for (const Pair& p : algebra.basis()) values_.emplace(p, Rational(0));
  for (const auto& [p, v] : values) {
    auto it = values_.find(p);
    if (it == values_.end()) {
      if (algebra.ideal().contains(p))
        throw Error("linear form must vanish on the ideal, got value at " +
                    to_string(p));
      throw OutOfRange(p);
    }
    it->second = v;
    it->second.canonicalize();
  }
}

UnipotentElement UnipotentElement::identity(int n) {
  Matrix m(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return UnipotentElement(std::move(m));
}

UnipotentElement::UnipotentElement(Matrix entries) : entries_(std::move(entries)) {
  const std::size_t n = entries_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (entries_[i].size() != n) throw DimensionMismatch("matrix is not square");
    if (entries_[i][i] != 1) throw Error("diagonal entries must equal 1");
    for (std::size_t j = i + 1; j < n; ++j)
      if (entries_[i][j] != 0) throw Error("matrix is not lower triangular");
  }
}

UnipotentElement UnipotentElement::inverse() const {
  // Solve g x = I column by column; g is unit lower triangular.
  const int n = this->n();
  Matrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (int c = 0; c < n; ++c) {
    inv[c][c] = 1;
    for (int r = c + 1; r < n; ++r) {
      Rational s = 0;
      for (int k = c; k < r; ++k) s += entries_[r][k] * inv[k][c];
      inv[r][c] = -s;
    }
  }
  return UnipotentElement(std::move(inv));
}

namespace {

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (b[k][j] != 0) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

}  // namespace

UnipotentElement operator*(const UnipotentElement& a, const UnipotentElement& b) {
  if (a.n() != b.n()) throw DimensionMismatch("group elements of different size");
  return UnipotentElement(multiply(a.entries_, b.entries_));
}

SignedTerm bracket(const Pair& a, const Pair& b) {
  if (a.col == b.row) return {+1, Pair{a.row, b.col}};
  if (b.col == a.row) return {-1, Pair{b.row, a.col}};
  return {};
}

SignedTerm bracket(const Pair& a, const Pair& b, const PatternIdeal& ideal) {
  SignedTerm t = bracket(a, b);
  if (t.pair && ideal.contains(*t.pair)) return {};
  return t;
}

LinearForm coadjoint_act(const UnipotentElement& g, const LinearForm& f,
                         const QuotientAlgebra& algebra) {
  const int n = algebra.n();
  if (g.n() != n || f.n() != n)
    throw DimensionMismatch("group element, form and algebra disagree on n");
  Matrix b(n, std::vector<Rational>(n, Rational(0)));
  for (const auto& [p, v] : f.values()) {
    if (algebra.index_of(p) < 0) throw Error("form is not defined on L");
    b[p.col - 1][p.row - 1] = v;
  }
  Matrix moved = multiply(multiply(g.entries(), b), g.inverse().entries());
  std::map<Pair, Rational> out;
  for (const Pair& p : all_pairs(n)) {
    const Rational& v = moved[p.col - 1][p.row - 1];
    if (algebra.ideal().contains(p)) {
      if (v != 0)
        throw Error("coadjoint action left the annihilator of m at " +
                    to_string(p));
      continue;
    }
    out[p] = v;
  }
  return LinearForm(algebra, out);
}

namespace {

constexpr std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Stream tags, so that forms and group elements never share draws.
constexpr std::uint64_t kFormStream = 0x666f726dULL;
constexpr std::uint64_t kGroupStream = 0x67726f75ULL;
constexpr std::uint64_t kNumStream = 1;
constexpr std::uint64_t kDenStream = 2;

}  // namespace

std::uint64_t CounterRng::bits(std::uint64_t stream, std::uint64_t counter,
                               std::uint64_t attempt) const {
  return splitmix(splitmix(splitmix(seed_ ^ 0x5eedULL) ^ stream) ^ counter) ^
         splitmix(attempt);
}

std::int64_t CounterRng::uniform(std::int64_t lo, std::int64_t hi,
                                 std::uint64_t stream,
                                 std::uint64_t counter) const {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(bits(stream, counter));
  // Reject the top partial bucket.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  for (std::uint64_t attempt = 0;; ++attempt) {
    std::uint64_t x = bits(stream, counter, attempt);
    if (x < limit) return lo + static_cast<std::int64_t>(x % span);
  }
}

CounterRng CounterRng::split(std::uint64_t stream) const {
  return CounterRng(splitmix(seed_ ^ splitmix(stream ^ 0x73706c6974ULL)));
}

LinearForm random_form(const QuotientAlgebra& algebra, int bound,
                       std::uint64_t seed) {
  if (bound < 1) throw Error("bound must be positive");
  CounterRng rng(seed);
  std::map<Pair, Rational> values;
  for (const Pair& p : algebra.basis())
    values[p] = Rational(static_cast<long>(
        rng.uniform(-bound, bound, kFormStream, order_key(p))));
  return LinearForm(algebra, values);
}

LinearForm random_rational_form(const QuotientAlgebra& algebra, int bound,
                                std::uint64_t seed) {
  if (bound < 1) throw Error("bound must be positive");
  CounterRng rng = CounterRng(seed).split(kFormStream);
  std::map<Pair, Rational> values;
  for (const Pair& p : algebra.basis()) {
    Rational v(static_cast<long>(rng.uniform(-bound, bound, kNumStream, order_key(p))),
               static_cast<long>(rng.uniform(1, bound, kDenStream, order_key(p))));
    v.canonicalize();
    values[p] = v;
  }
  return LinearForm(algebra, values);
}

UnipotentElement random_unipotent(int n, int bound, std::uint64_t seed) {
  if (bound < 1) throw Error("bound must be positive");
  CounterRng rng(seed);
  Matrix m = UnipotentElement::identity(n).entries();
  for (const Pair& p : all_pairs(n))
    m[p.row - 1][p.col - 1] = static_cast<long>(
        rng.uniform(-bound, bound, kGroupStream, order_key(p)));
  return UnipotentElement(std::move(m));
}

UnipotentElement random_rational_unipotent(int n, int bound, std::uint64_t seed) {
  if (bound < 1) throw Error("bound must be positive");
  CounterRng rng = CounterRng(seed).split(kGroupStream);
  Matrix m = UnipotentElement::identity(n).entries();
  for (const Pair& p : all_pairs(n)) {
    Rational v(static_cast<long>(rng.uniform(-bound, bound, kNumStream, order_key(p))),
               static_cast<long>(rng.uniform(1, bound, kDenStream, order_key(p))));
    v.canonicalize();
    m[p.row - 1][p.col - 1] = v;
  }
  return UnipotentElement(std::move(m));
}

std::vector<PatternIdeal> enumerate_pattern_ideals(int n) {
  if (n < 1 || n > 8) throw Error("enumerate_pattern_ideals supports 1 <= n <= 8");
  std::vector<PatternIdeal> out;
  std::vector<int> first_row(static_cast<std::size_t>(std::max(n - 1, 0)));
  std::function<void(int, int)> rec = [&](int col, int lower) {
    if (col == n) {
      PairSet members;
      for (int j = 1; j < n; ++j)
        for (int r = first_row[j - 1]; r <= n; ++r) members.insert({r, j});
      out.push_back(PatternIdeal::validate(n, members));
      return;
    }
    for (int p = std::max(lower, col + 1); p <= n + 1; ++p) {
      first_row[col - 1] = p;
      rec(col + 1, p);
    }
  };
  rec(1, 2);
  return out;
}

}  // namespace orbitdiag
