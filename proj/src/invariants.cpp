#include "orbitdiag/invariants.hpp"

namespace orbitdiag {

NotTriangular::NotTriangular(std::string c, const std::string& witness)
    : Error("not triangular (" + c + "): " + witness), check(std::move(c)) {}

ThetaState initial_state(const Diagram& d) {
  ThetaState s;
  for (const Pair& p : d.unfilled_after(0))
    s.images.emplace(p, LocalizedElement(Polynomial::variable(p)));
  return s;
}

namespace {

void check_keys(const ThetaState& s, const PairSet& expected) {
  if (s.images.size() != expected.size())
    throw InconsistentState("state " + std::to_string(s.step) + " has " +
                            std::to_string(s.images.size()) + " images, expected " +
                            std::to_string(expected.size()));
  for (const Pair& p : expected)
    if (!s.images.count(p))
      throw InconsistentState("state " + std::to_string(s.step) + " lacks " + to_string(p));
}

class Images {
 public:
  Images(const ThetaState& s, const PatternIdeal& ideal) : s_(s), ideal_(ideal) {}

  const LocalizedElement& operator()(int row, int col) const {
    const Pair p{row, col};
    if (ideal_.contains(p)) return zero_;
    auto it = s_.images.find(p);
    if (it == s_.images.end())
      throw InconsistentState("no image for " + to_string(p) + " at step " +
                              std::to_string(s_.step));
    return it->second;
  }

 private:
  const ThetaState& s_;
  const PatternIdeal& ideal_;
  LocalizedElement zero_;
};

}  // namespace

ThetaState theta_step(const ThetaState& prev, const Diagram& d, int i) {
  if (prev.step != i - 1)
    throw InconsistentState("theta_step " + std::to_string(i) + " applied to state " +
                            std::to_string(prev.step));
  const StepRecord& rec = d.step(i);
  check_keys(prev, d.unfilled_after(i - 1));
  const int k = rec.xi.row, t = rec.xi.col;
  const Images y(prev, d.ideal());
  const PairSet& before = d.unfilled_after(i - 1);

  ThetaState next;
  next.step = i;
  next.zs = prev.zs;
  const LocalizedElement& z = y(k, t);
  next.zs.push(z.numerator);
  const ZTable& zs = next.zs;

  for (const auto& [q, cls] : classify_step(d, i)) {
    const int a = q.row, b = q.col;
    switch (cls) {
      case StepClass::C11: {
        auto corr = loc_div_unit(loc_mul(y(a, t), y(k, b)), z, i, zs);
        next.images.emplace(q, loc_sub(y(a, b), corr, zs));
        break;
      }
      case StepClass::C3: {
        LocalizedElement sum;
        for (int j = t + 1; j < k; ++j)
          if (before.count({j, t})) sum = loc_add(sum, loc_mul(y(a, j), y(j, t)), zs);
        next.images.emplace(q, loc_add(y(a, k), loc_div_unit(sum, z, i, zs), zs));
        break;
      }
      default:
        next.images.emplace(q, y(a, b));
    }
  }
  return next;
}

std::vector<ThetaState> theta_chain(const Diagram& d) {
  std::vector<ThetaState> chain;
  chain.push_back(initial_state(d));
  for (int i = 1; i <= d.steps(); ++i) chain.push_back(theta_step(chain.back(), d, i));
  return chain;
}

std::vector<Polynomial> build_invariants(const Diagram& d) {
  ThetaState s = initial_state(d);
  for (int i = 1; i <= d.steps(); ++i) s = theta_step(s, d, i);
  return s.zs.all();
}

TriangularForm triangular_decompose(const Polynomial& z, const Pair& xi,
                                    std::span<const Polynomial> earlier) {
  if (z.is_zero()) throw NotTriangular("degree", "zero polynomial");
  if (z.degree_in(xi) != 1)
    throw NotTriangular("degree", "degree " + std::to_string(z.degree_in(xi)) + " in y" +
                                      to_string(xi));
  TriangularForm out;
  out.coefficient = partial_derivative(z, xi);
  Polynomial rest = out.coefficient;
  for (int j = static_cast<int>(earlier.size()); j >= 1; --j) {
    const Polynomial& zj = earlier[j - 1];
    if (zj.is_constant()) continue;
    while (rest.total_degree() >= zj.total_degree()) {
      auto q = exact_divide(rest, zj);
      if (!q) break;
      rest = std::move(*q);
      ++out.exponents[j];
    }
  }
  if (!rest.is_constant() || rest.is_zero())
    throw NotTriangular("coefficient", "dz/dy" + to_string(xi) + " leaves cofactor " +
                                           canonical_string(rest));
  out.unit = rest.is_zero() ? Rational(0) : rest.leading().second;
  out.remainder = z - Polynomial::variable(xi) * out.coefficient;
  for (const Pair& v : out.remainder.variables())
    if (!order_gt(v, xi))
      throw NotTriangular("remainder", "variable y" + to_string(v) + " not above y" +
                                           to_string(xi));
  return out;
}

bool verify_centrality(const Polynomial& z, const PatternIdeal& ideal) {
  for (const Pair& p : all_pairs(ideal.n())) {
    if (ideal.contains(p)) continue;
    if (!poisson_bracket(z, Polynomial::variable(p), ideal).is_zero()) return false;
  }
  return true;
}

WeylPairs weyl_pairs(const ThetaState& prev, const Diagram& d, int i) {
  if (prev.step != i - 1)
    throw InconsistentState("weyl_pairs " + std::to_string(i) + " applied to state " +
                            std::to_string(prev.step));
  check_keys(prev, d.unfilled_after(i - 1));
  const StepRecord& rec = d.step(i);
  const Images y(prev, d.ideal());
  const LocalizedElement& z = y(rec.xi.row, rec.xi.col);
  ZTable zs = prev.zs;
  zs.push(z.numerator);
  WeylPairs w;
  w.step = i;
  for (const Pair& m : rec.minus) w.p.emplace(m.col, y(m.row, m.col));
  for (const Pair& m : rec.plus) w.q.emplace(m.row, loc_div_unit(y(m.row, m.col), z, i, zs));
  if (w.p.size() != w.q.size()) throw InconsistentState("unpaired Weyl generators");
  for (const auto& [j, v] : w.p)
    if (!w.q.count(j)) throw InconsistentState("unpaired Weyl generator p_" + std::to_string(j));
  return w;
}

namespace {

class Checker {
 public:
  Checker(RelationReport& r, const ZTable& zs, const PatternIdeal& ideal)
      : r_(r), zs_(zs), ideal_(ideal) {}

  void expect(const LocalizedElement& a, const LocalizedElement& b,
              const LocalizedElement& value, const std::string& what) {
    ++r_.checked;
    if (!r_.ok) return;
    if (!loc_equal(loc_bracket(a, b, zs_, ideal_), value, zs_)) {
      r_.ok = false;
      r_.failure = what;
    }
  }

  void fail(const std::string& what) {
    ++r_.checked;
    if (r_.ok) {
      r_.ok = false;
      r_.failure = what;
    }
  }

 private:
  RelationReport& r_;
  const ZTable& zs_;
  const PatternIdeal& ideal_;
};

}  // namespace

RelationReport verify_relations(const ThetaState& prev, const ThetaState& next,
                                const Diagram& d, int i) {
  RelationReport report;
  report.step = i;
  const PatternIdeal& ideal = d.ideal();
  const PairSet& bi = d.unfilled_after(i);
  check_keys(next, bi);
  const ZTable& zs = next.zs;
  Checker check(report, zs, ideal);
  const LocalizedElement zero;
  const LocalizedElement one(Polynomial(1));

  for (const auto& [p, img] : next.images)
    if (img.max_step() > i)
      check.fail("image of " + to_string(p) + " uses a later invariant");

  // The embedding is a Poisson map.
  for (auto x = bi.begin(); x != bi.end(); ++x)
    for (auto y = std::next(x); y != bi.end(); ++y) {
      const SignedTerm t = bracket(*x, *y);
      const std::string what = "{Y" + to_string(*x) + ", Y" + to_string(*y) + "}";
      if (t.is_zero() || ideal.contains(*t.pair)) {
        check.expect(next.images.at(*x), next.images.at(*y), zero, what + " = 0");
      } else if (!bi.count(*t.pair)) {
        check.fail(what + ": bracket leaves B_" + std::to_string(i));
      } else {
        const LocalizedElement& v = next.images.at(*t.pair);
        check.expect(next.images.at(*x), next.images.at(*y),
                     t.coefficient > 0 ? v : LocalizedElement(-v.numerator, v.denominator),
                     what + " = " + (t.coefficient > 0 ? "+" : "-") + "Y" + to_string(*t.pair));
      }
    }

  const WeylPairs w = weyl_pairs(prev, d, i);
  for (const auto& [a, pa] : w.p)
    for (const auto& [b, qb] : w.q)
      check.expect(pa, qb, a == b ? one : zero,
                   "{p" + std::to_string(a) + ", q" + std::to_string(b) + "}");
  for (auto a = w.p.begin(); a != w.p.end(); ++a)
    for (auto b = std::next(a); b != w.p.end(); ++b)
      check.expect(a->second, b->second, zero,
                   "{p" + std::to_string(a->first) + ", p" + std::to_string(b->first) + "}");
  for (auto a = w.q.begin(); a != w.q.end(); ++a)
    for (auto b = std::next(a); b != w.q.end(); ++b)
      check.expect(a->second, b->second, zero,
                   "{q" + std::to_string(a->first) + ", q" + std::to_string(b->first) + "}");

  const Pair xi = d.step(i).xi;
  const LocalizedElement& z = prev.images.at(xi);
  for (const auto& [j, pj] : w.p) check.expect(z, pj, zero, "{Z, p" + std::to_string(j) + "}");
  for (const auto& [j, qj] : w.q) check.expect(z, qj, zero, "{Z, q" + std::to_string(j) + "}");
  for (const auto& [x, img] : next.images) {
    check.expect(img, z, zero, "{Y" + to_string(x) + ", Z}");
    for (const auto& [j, pj] : w.p)
      check.expect(img, pj, zero, "{Y" + to_string(x) + ", p" + std::to_string(j) + "}");
    for (const auto& [j, qj] : w.q)
      check.expect(img, qj, zero, "{Y" + to_string(x) + ", q" + std::to_string(j) + "}");
  }
  return report;
}

RelationReport verify_relations(const ThetaState& prev, const Diagram& d, int i) {
  return verify_relations(prev, theta_step(prev, d, i), d, i);
}

}  // namespace orbitdiag
