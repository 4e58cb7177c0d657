#ifndef ORBITDIAG_POLYNOMIAL_HPP
#define ORBITDIAG_POLYNOMIAL_HPP

#include "orbitdiag/core_model.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace orbitdiag {

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by the zero polynomial") {}
};

class MissingCoordinate : public Error {
 public:
  explicit MissingCoordinate(Pair p);
  Pair pair;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what);
  std::size_t position;
};

/*
  A monomial in the variables y_p.  Factors are kept sorted by order_key,
  i.e. greatest variable first, with no zero exponents.
*/
class Monomial {
 public:
  using Factor = std::pair<std::uint16_t, std::uint32_t>;  // (order_key, exponent)

  Monomial() = default;
  static Monomial variable(const Pair& p, std::uint32_t exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t exponent(const Pair& p) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // a / b when b divides a.
  static std::optional<Monomial> quotient(const Monomial& a, const Monomial& b);
  // Lowers the exponent of p by one; requires exponent(p) > 0.
  Monomial without_one(const Pair& p) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
  std::uint32_t degree_ = 0;
};

// Graded lexicographic order, variables compared greatest first.  The
// functor answers a > b, so ordered containers list the leading term first.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/*
  A sparse polynomial with exact rational coefficients.  Terms are kept in a
  map ordered leading term first; zero coefficients are never stored, so two
  polynomials are equal iff their term maps are.
*/
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, GrlexGreater>;

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT: constants convert implicitly
  Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT
  static Polynomial variable(const Pair& p);
  static Polynomial term(const Rational& c, Monomial m);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  std::uint32_t total_degree() const;
  std::uint32_t degree_in(const Pair& p) const;
  // Variables occurring, greatest first.
  PairSet variables() const;
  const std::pair<const Monomial, Rational>& leading() const { return *terms_.begin(); }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& scale(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(Polynomial a) { return a.scale(-1); }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // this += c * m * p
  void add_product(const Rational& c, const Monomial& m, const Polynomial& p);

 private:
  void add_term(const Monomial& m, const Rational& c);

  Terms terms_;
};

Polynomial scale(const Rational& c, Polynomial p);
Polynomial pow(const Polynomial& p, unsigned e);

// q with a = q * b, or nullopt.  Throws DivisionByZero when b is zero.
std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b);

Polynomial partial_derivative(const Polynomial& p, const Pair& v);

// Substitutes the coordinates of f; throws MissingCoordinate for variables
// outside the form's algebra.
Rational evaluate(const Polynomial& p, const LinearForm& f);

// The Poisson bracket of S(L) extending {y_a, y_b} = [y_a, y_b] mod m.
Polynomial poisson_bracket(const Polynomial& a, const Polynomial& b,
                           const PatternIdeal& ideal);

// "c*y[i,j]^e*..." terms joined by " + " / " - "; "0" for zero.
std::string canonical_string(const Polynomial& p);
Polynomial parse_polynomial(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace orbitdiag

#endif  // ORBITDIAG_POLYNOMIAL_HPP
