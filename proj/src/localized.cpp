#include "orbitdiag/localized.hpp"

#include <algorithm>

namespace orbitdiag {

const Polynomial& ZTable::z(int j) const {
  if (j < 1 || j > size())
    throw Error("denominator references unknown invariant z_" + std::to_string(j));
  return zs_[j - 1];
}

void ZTable::push(Polynomial z) {
  if (z.is_zero()) throw DivisionByZero();
  zs_.push_back(std::move(z));
}

const Polynomial& ZTable::power(int j, int e) const {
  auto key = std::make_pair(j, e);
  auto it = powers_.find(key);
  if (it != powers_.end()) return it->second;
  Polynomial p = e == 1 ? z(j) : power(j, e - 1) * z(j);
  return powers_.emplace(key, std::move(p)).first->second;
}

Polynomial ZTable::product(const std::map<int, int>& exponents) const {
  Polynomial out(1);
  for (const auto& [j, e] : exponents)
    if (e > 0) out *= power(j, e);
  return out;
}

LocalizedElement::LocalizedElement(Polynomial num, std::map<int, int> den)
    : numerator(std::move(num)) {
  for (const auto& [j, e] : den) {
    if (e < 0) throw Error("negative denominator exponent");
    if (e > 0) denominator[j] = e;
  }
}

namespace {

std::map<int, int> pointwise_max(const std::map<int, int>& a, const std::map<int, int>& b) {
  std::map<int, int> out = a;
  for (const auto& [j, e] : b) out[j] = std::max(out[j], e);
  return out;
}

std::map<int, int> pointwise_sum(const std::map<int, int>& a, const std::map<int, int>& b) {
  std::map<int, int> out = a;
  for (const auto& [j, e] : b) out[j] += e;
  return out;
}

std::map<int, int> difference(const std::map<int, int>& big, const std::map<int, int>& small) {
  std::map<int, int> out;
  for (const auto& [j, e] : big) {
    auto it = small.find(j);
    const int d = e - (it == small.end() ? 0 : it->second);
    if (d > 0) out[j] = d;
  }
  return out;
}

// a.numerator brought over the denominator `common`, which a's divides.
Polynomial lifted(const LocalizedElement& a, const std::map<int, int>& common,
                  const ZTable& zs) {
  auto extra = difference(common, a.denominator);
  if (extra.empty()) return a.numerator;
  return a.numerator * zs.product(extra);
}

LocalizedElement combine(const LocalizedElement& a, const LocalizedElement& b,
                         const ZTable& zs, int sign) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return LocalizedElement(scale(Rational(sign), b.numerator), b.denominator);
  auto common = pointwise_max(a.denominator, b.denominator);
  Polynomial num = lifted(a, common, zs);
  Polynomial rhs = lifted(b, common, zs);
  if (sign > 0)
    num += rhs;
  else
    num -= rhs;
  return LocalizedElement(std::move(num), std::move(common));
}

}  // namespace

LocalizedElement loc_add(const LocalizedElement& a, const LocalizedElement& b,
                         const ZTable& zs) {
  return combine(a, b, zs, +1);
}

LocalizedElement loc_sub(const LocalizedElement& a, const LocalizedElement& b,
                         const ZTable& zs) {
  return combine(a, b, zs, -1);
}

LocalizedElement loc_mul(const LocalizedElement& a, const LocalizedElement& b) {
  return LocalizedElement(a.numerator * b.numerator,
                          pointwise_sum(a.denominator, b.denominator));
}

LocalizedElement loc_div_z(const LocalizedElement& a, int j, int e) {
  LocalizedElement out = a;
  out.denominator[j] += e;
  return out;
}

LocalizedElement loc_div_unit(const LocalizedElement& a, const LocalizedElement& b,
                              int j, const ZTable& zs) {
  if (b.numerator != zs.z(j))
    throw Error("divisor's numerator is not z_" + std::to_string(j));
  LocalizedElement out(a.numerator * zs.product(b.denominator), a.denominator);
  out.denominator[j] += 1;
  return out;
}

bool loc_equal(const LocalizedElement& a, const LocalizedElement& b, const ZTable& zs) {
  if (a.denominator == b.denominator) return a.numerator == b.numerator;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  auto common = pointwise_max(a.denominator, b.denominator);
  return lifted(a, common, zs) == lifted(b, common, zs);
}

LocalizedElement loc_bracket(const LocalizedElement& a, const LocalizedElement& b,
                             const ZTable& zs, const PatternIdeal& ideal) {
  const auto uv = pointwise_sum(a.denominator, b.denominator);
  LocalizedElement out(poisson_bracket(a.numerator, b.numerator, ideal), uv);
  if (a.is_zero() || b.is_zero()) return LocalizedElement();

  // - sum_j e_j a {z_j, b} / (uv z_j)
  for (const auto& [j, e] : a.denominator) {
    Polynomial zb = poisson_bracket(zs.z(j), b.numerator, ideal);
    if (zb.is_zero()) continue;
    out = loc_sub(out, LocalizedElement(scale(Rational(e), a.numerator * zb),
                                        pointwise_sum(uv, {{j, 1}})),
                  zs);
  }
  // - sum_l f_l b {a, z_l} / (uv z_l)
  for (const auto& [l, f] : b.denominator) {
    Polynomial az = poisson_bracket(a.numerator, zs.z(l), ideal);
    if (az.is_zero()) continue;
    out = loc_sub(out, LocalizedElement(scale(Rational(f), b.numerator * az),
                                        pointwise_sum(uv, {{l, 1}})),
                  zs);
  }
  // + sum_{j,l} e_j f_l ab {z_j, z_l} / (uv z_j z_l)
  for (const auto& [j, e] : a.denominator)
    for (const auto& [l, f] : b.denominator) {
      Polynomial zz = poisson_bracket(zs.z(j), zs.z(l), ideal);
      if (zz.is_zero()) continue;
      auto den = uv;
      den[j] += 1;
      den[l] += 1;
      out = loc_add(out,
                    LocalizedElement(scale(Rational(e * f), a.numerator * b.numerator * zz),
                                     std::move(den)),
                    zs);
    }
  return out;
}

std::string to_string(const LocalizedElement& e) {
  std::string s = "(" + canonical_string(e.numerator) + ")";
  if (e.denominator.empty()) return s;
  s += " / (";
  bool first = true;
  for (const auto& [j, k] : e.denominator) {
    if (!first) s += "*";
    first = false;
    s += "z" + std::to_string(j);
    if (k != 1) s += "^" + std::to_string(k);
  }
  return s + ")";
}

}  // namespace orbitdiag
