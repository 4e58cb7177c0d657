#ifndef ORBITDIAG_LOCALIZED_HPP
#define ORBITDIAG_LOCALIZED_HPP

#include "orbitdiag/polynomial.hpp"

#include <map>
#include <vector>

namespace orbitdiag {

/*
  The invariants constructed so far, z_1, z_2, ...  Step indices are 1-based
  to match the diagram.  Powers are memoised; a table is therefore not safe
  to share between threads while it is being used.
*/
class ZTable {
 public:
  ZTable() = default;
  explicit ZTable(std::vector<Polynomial> zs) : zs_(std::move(zs)) {}

  int size() const { return static_cast<int>(zs_.size()); }
  const Polynomial& z(int j) const;
  const std::vector<Polynomial>& all() const { return zs_; }
  void push(Polynomial z);

  // prod_j z_j^{e_j}
  Polynomial product(const std::map<int, int>& exponents) const;
  const Polynomial& power(int j, int e) const;

 private:
  std::vector<Polynomial> zs_;
  mutable std::map<std::pair<int, int>, Polynomial> powers_;
};

/*
  numerator / prod_j z_j^{e_j}.  Nothing is ever cancelled, so the same
  rational function can have several representations; use loc_equal to
  compare.
*/
struct LocalizedElement {
  Polynomial numerator;
  std::map<int, int> denominator;  // step j -> exponent, no zero entries

  LocalizedElement() = default;
  LocalizedElement(Polynomial num, std::map<int, int> den = {});

  bool is_zero() const { return numerator.is_zero(); }
  int max_step() const { return denominator.empty() ? 0 : denominator.rbegin()->first; }
};

LocalizedElement loc_add(const LocalizedElement& a, const LocalizedElement& b,
                         const ZTable& zs);
LocalizedElement loc_sub(const LocalizedElement& a, const LocalizedElement& b,
                         const ZTable& zs);
LocalizedElement loc_mul(const LocalizedElement& a, const LocalizedElement& b);
// a / (z_j^e); z_j must already be in the table.
LocalizedElement loc_div_z(const LocalizedElement& a, int j, int e = 1);
// a / b for b a unit of the localisation, i.e. b = z_j * (product of z's)
// with z_j = b.numerator already in the table at index j.
LocalizedElement loc_div_unit(const LocalizedElement& a, const LocalizedElement& b,
                              int j, const ZTable& zs);

bool loc_equal(const LocalizedElement& a, const LocalizedElement& b, const ZTable& zs);

/*
  Poisson bracket in the localisation, by the quotient rule
    {a/u, b/v} = ({a,b} uv - a{u,b} v - b{a,v} u + ab{u,v}) / (uv)^2
  with the brackets of u and v expanded over their z factors.  Terms whose
  z-brackets vanish are dropped, so for central z's this is {a,b}/(uv).
*/
LocalizedElement loc_bracket(const LocalizedElement& a, const LocalizedElement& b,
                             const ZTable& zs, const PatternIdeal& ideal);

std::string to_string(const LocalizedElement& e);

}  // namespace orbitdiag

#endif  // ORBITDIAG_LOCALIZED_HPP
