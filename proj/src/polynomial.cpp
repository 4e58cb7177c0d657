#include "orbitdiag/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace orbitdiag {

MissingCoordinate::MissingCoordinate(Pair p)
    : Error("linear form has no coordinate " + to_string(p)), pair(p) {}

SyntaxError::SyntaxError(std::size_t pos, const std::string& what)
    : Error("syntax error at position " + std::to_string(pos) + ": " + what),
      position(pos) {}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(const Pair& p, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) {
    m.factors_.push_back({order_key(p), exponent});
    m.degree_ = exponent;
  }
  return m;
}

std::uint32_t Monomial::exponent(const Pair& p) const {
  const auto key = order_key(p);
  for (const auto& [k, e] : factors_)
    if (k == key) return e;
  return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin(), j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first))
      out.factors_.push_back(*i++);
    else if (i == a.factors_.end() || j->first < i->first)
      out.factors_.push_back(*j++);
    else {
      out.factors_.push_back({i->first, i->second + j->second});
      ++i, ++j;
    }
  }
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

std::optional<Monomial> Monomial::quotient(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto i = a.factors_.begin();
  for (const auto& [key, e] : b.factors_) {
    while (i != a.factors_.end() && i->first < key) out.factors_.push_back(*i++);
    if (i == a.factors_.end() || i->first != key || i->second < e) return std::nullopt;
    if (i->second > e) out.factors_.push_back({key, i->second - e});
    ++i;
  }
  out.factors_.insert(out.factors_.end(), i, a.factors_.end());
  out.degree_ = a.degree_ - b.degree_;
  return out;
}

Monomial Monomial::without_one(const Pair& p) const {
  Monomial out = *this;
  const auto key = order_key(p);
  for (auto it = out.factors_.begin(); it != out.factors_.end(); ++it)
    if (it->first == key) {
      if (--it->second == 0) out.factors_.erase(it);
      --out.degree_;
      return out;
    }
  throw Error("variable " + to_string(p) + " absent from monomial");
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  const std::size_t m = std::min(fa.size(), fb.size());
  for (std::size_t i = 0; i < m; ++i) {
    // The smaller key is the greater variable, present with a positive
    // exponent on that side and absent on the other.
    if (fa[i].first != fb[i].first) return fa[i].first < fb[i].first;
    if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second;
  }
  return fa.size() > fb.size();
}

// -------------------------------------------------------------- Polynomial

// GMP keeps canonical inputs canonical, so coefficients are normalised only
// where they enter.
Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial(), c).first->second.canonicalize();
}

Polynomial Polynomial::variable(const Pair& p) {
  return term(Rational(1), Monomial::variable(p));
}

Polynomial Polynomial::term(const Rational& c, Monomial m) {
  Polynomial out;
  if (c != 0) out.terms_.emplace(std::move(m), c).first->second.canonicalize();
  return out;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::uint32_t Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

std::uint32_t Polynomial::degree_in(const Pair& p) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(p));
  return d;
}

PairSet Polynomial::variables() const {
  PairSet out;
  for (const auto& [m, c] : terms_)
    for (const auto& [key, e] : m.factors()) out.insert(pair_from_key(key));
  return out;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::scale(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  Rational k = c;
  k.canonicalize();
  for (auto& [m, v] : terms_) v *= k;
  return *this;
}

void Polynomial::add_product(const Rational& c, const Monomial& m,
                             const Polynomial& p) {
  if (c == 0) return;
  Rational k = c;
  k.canonicalize();
  for (const auto& [pm, pc] : p.terms_) add_term(m * pm, k * pc);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  const Polynomial& outer = a.size() <= b.size() ? a : b;
  const Polynomial& inner = a.size() <= b.size() ? b : a;
  Polynomial out;
  for (const auto& [m, c] : outer.terms_) out.add_product(c, m, inner);
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial scale(const Rational& c, Polynomial p) { return p.scale(c); }

Polynomial pow(const Polynomial& p, unsigned e) {
  Polynomial result(1), base = p;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZero();
  const auto& [lead_m, lead_c] = b.leading();
  Polynomial rest = a, q;
  while (!rest.is_zero()) {
    const auto& [m, c] = rest.leading();
    auto qm = Monomial::quotient(m, lead_m);
    if (!qm) return std::nullopt;
    const Rational qc = c / lead_c;
    q.add_product(qc, *qm, Polynomial(1));
    rest.add_product(-qc, *qm, b);
  }
  if (q * b != a) throw Error("exact_divide: product check failed");
  return q;
}

Polynomial partial_derivative(const Polynomial& p, const Pair& v) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    const std::uint32_t e = m.exponent(v);
    if (e == 0) continue;
    out.add_product(c * e, m.without_one(v), Polynomial(1));
  }
  return out;
}

Rational evaluate(const Polynomial& p, const LinearForm& f) {
  Rational sum = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational t = c;
    for (const auto& [key, e] : m.factors()) {
      const Pair v = pair_from_key(key);
      if (!f.has(v)) throw MissingCoordinate(v);
      Rational x = f.at(v);
      for (std::uint32_t i = 0; i < e; ++i) t *= x;
    }
    sum += t;
  }
  return sum;
}

Polynomial poisson_bracket(const Polynomial& a, const Polynomial& b,
                           const PatternIdeal& ideal) {
  if (a.is_constant() || b.is_constant()) return {};
  // {a,b} = sum over variables x of a and y of b of da/dx db/dy [x,y].
  const PairSet va = a.variables(), vb = b.variables();
  std::map<Pair, Polynomial> db;
  for (const Pair& y : vb) db.emplace(y, partial_derivative(b, y));
  Polynomial out;
  for (const Pair& x : va) {
    std::optional<Polynomial> da;
    for (const Pair& y : vb) {
      const SignedTerm t = bracket(x, y, ideal);
      if (t.is_zero()) continue;
      if (!da) da = partial_derivative(a, x);
      Polynomial prod = *da * db.at(y);
      out.add_product(Rational(t.coefficient), Monomial::variable(*t.pair), prod);
    }
  }
  return out;
}

// ---------------------------------------------------------------- text form

namespace {

void write_monomial(std::ostream& os, const Monomial& m) {
  std::vector<std::pair<Pair, std::uint32_t>> vars;
  for (const auto& [key, e] : m.factors()) vars.push_back({pair_from_key(key), e});
  std::sort(vars.begin(), vars.end());  // (row, col) ascending
  bool first = true;
  for (const auto& [p, e] : vars) {
    if (!first) os << '*';
    first = false;
    os << "y[" << p.row << ',' << p.col << ']';
    if (e != 1) os << '^' << e;
  }
}

}  // namespace

std::string canonical_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = sgn(c) < 0;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    const Rational mag = abs(c);
    if (m.is_one()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      write_monomial(os, m);
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << canonical_string(p);
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  Polynomial parse() {
    Polynomial out;
    skip();
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    out += scale(Rational(sign), term());
    for (skip(); pos_ < s_.size(); skip()) {
      const char op = s_[pos_];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      out += scale(Rational(op == '-' ? -1 : 1), term());
    }
    return out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_, what); }
  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Integer integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  Monomial factor() {
    skip();
    if (peek() != 'y') fail("expected a variable y[i,j]");
    ++pos_;
    expect('[');
    const long row = integer().get_si();
    expect(',');
    const long col = integer().get_si();
    expect(']');
    if (col < 1 || row <= col || row > 255) fail("variable index out of range");
    unsigned long e = 1;
    skip();
    if (peek() == '^') {
      ++pos_;
      e = integer().get_ui();
      if (e == 0) fail("zero exponent");
    }
    return Monomial::variable({static_cast<int>(row), static_cast<int>(col)},
                              static_cast<std::uint32_t>(e));
  }

  Polynomial term() {
    skip();
    Rational c = 1;
    Monomial m;
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num = integer();
      Integer den = 1;
      skip();
      if (peek() == '/') {
        ++pos_;
        den = integer();
        if (den == 0) fail("zero denominator");
      }
      c = Rational(num, den);
      c.canonicalize();
      skip();
      if (peek() != '*') return Polynomial(c);
      ++pos_;
    }
    while (need_factor) {
      m = m * factor();
      skip();
      need_factor = peek() == '*';
      if (need_factor) ++pos_;
    }
    return Polynomial::term(c, m);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace orbitdiag
