#include "orbitdiag/verify.hpp"

namespace orbitdiag {

std::string describe(const PatternIdeal& ideal) {
  std::string s = std::to_string(ideal.n()) + ":";
  bool first = true;
  for (const Pair& p : ideal.members()) {
    s += first ? " " : "; ";
    first = false;
    s += std::to_string(p.row) + "," + std::to_string(p.col);
  }
  return s;
}

std::uint64_t ideal_seed(std::uint64_t seed, const PatternIdeal& ideal) {
  const CounterRng rng(seed);
  std::uint64_t h = static_cast<std::uint64_t>(ideal.n());
  for (const Pair& p : ideal.members()) h = rng.bits(h, order_key(p));
  return rng.bits(0x696465614cULL, h);
}

namespace {

// First bracket leaving pairs + M, as "[y_a, y_b] = y_c", or "".
std::string closure_witness(const PairSet& pairs, const PatternIdeal& ideal) {
  for (const Pair& a : pairs)
    for (const Pair& b : pairs) {
      const SignedTerm t = bracket(a, b);
      if (!t.is_zero() && !pairs.count(*t.pair) && !ideal.contains(*t.pair))
        return "[y" + to_string(a) + ", y" + to_string(b) + "] = " +
               (t.coefficient < 0 ? "-y" : "y") + to_string(*t.pair);
    }
  return "";
}

}  // namespace

bool check_structure(const Diagram& d, std::vector<std::string>& out) {
  const std::size_t before = out.size();
  auto fail = [&](const std::string& what) { out.push_back(describe(d.ideal()) + ": " + what); };
  const PatternIdeal& ideal = d.ideal();
  const auto all = all_pairs(d.n());
  const int dim = static_cast<int>(all.size() - ideal.members().size());

  if (d.cells().size() != all.size()) fail("diagram is not total on A");
  for (const Pair& p : all) {
    auto it = d.cells().find(p);
    if (it == d.cells().end()) continue;
    const bool bullet = it->second.kind == SymbolKind::Bullet;
    if (bullet != ideal.contains(p)) fail("bullet cells differ from M at " + to_string(p));
    if (bullet != (it->second.step == 0)) fail("bad step number at " + to_string(p));
  }
  const std::size_t parts = ideal.members().size() + d.crosses().size() +
                            d.plus_cells().size() + d.minus_cells().size();
  if (parts != all.size()) fail("M, C+, C-, S do not partition A");
  if (d.steps() > dim) fail("more steps than dim L");
  if (index_of(d) + max_orbit_dim(d) != dim) fail("index + max orbit dim != dim L");
  if (max_orbit_dim(d) % 2 != 0) fail("odd maximal orbit dimension");
  if (d.plus_cells().size() != d.minus_cells().size()) fail("|C+| != |C-|");
  if (!d.unfilled_after(d.steps()).empty()) fail("B_s is not empty");

  for (int i = 0; i <= d.steps(); ++i) {
    PairSet ai = d.unfilled_after(i);
    ai.insert(ideal.members().begin(), ideal.members().end());
    if (!check_closure(ai, ideal))
      fail("A_" + std::to_string(i) + " is not a subalgebra: " + closure_witness(ai, ideal));
  }
  for (int i = 1; i <= d.steps(); ++i) {
    const StepRecord& rec = d.step(i);
    const int k = rec.xi.row, t = rec.xi.col;
    const std::string at = "step " + std::to_string(i) + ": ";
    const PairSet& prev = d.unfilled_after(i - 1);
    if (prev.empty() || *prev.begin() != rec.xi) fail(at + "xi is not the greatest unfilled pair");
    if (i > 1 && !order_gt(d.step(i - 1).xi, rec.xi)) fail(at + "xi chain not decreasing");
    if (rec.plus.size() != rec.minus.size()) fail(at + "|C+_i| != |C-_i|");
    for (const Pair& m : rec.minus)
      if (m.row != k || m.col <= t || m.col >= k || !rec.plus.count({m.col, t}))
        fail(at + "minus " + to_string(m) + " has no partner");
    for (const Pair& q : rec.plus)
      if (q.col != t || q.row <= t || q.row >= k || !rec.minus.count({k, q.row}))
        fail(at + "plus " + to_string(q) + " has no partner");
    for (int a = t + 1; a < k; ++a)
      for (const Pair& partner : {Pair{k, a}, Pair{a, t}}) {
        auto s = d.cell_after(partner, i - 1);
        if (s && (s->kind == SymbolKind::Bullet || s->kind == SymbolKind::Cross))
          fail(at + "partner cell " + to_string(partner) + " already holds a bullet or cross");
      }
    if (rec.p <= k) fail(at + "p <= k");
    for (int r = t + 1; r <= d.n(); ++r)
      if (ideal.contains({r, t}) != (r >= rec.p)) fail(at + "column t is not M exactly from row p");
    if (!check_closure(d_minus(d, i), ideal))
      fail(at + "d-_" + std::to_string(i) + " is not a subalgebra: " +
           closure_witness(d_minus(d, i), ideal));
    try {
      classify_step(d, i);
    } catch (const Error& e) {
      fail(at + e.what());
    }
  }
  return out.size() == before;
}

IdealCheck check_ideal(const PatternIdeal& ideal, const CheckOptions& options) {
  IdealCheck r;
  const Diagram d(ideal);
  const QuotientAlgebra algebra(ideal);
  const std::uint64_t seed = ideal_seed(options.seed, ideal);
  const std::string name = describe(ideal);
  r.n = ideal.n();
  r.dim = algebra.dim();
  r.index = index_of(d);
  r.max_orbit_dim = max_orbit_dim(d);
  r.structure = check_structure(d, r.failures);

  if (options.oracle) {
    const IndexEstimate est = index_oracle(ideal, options.trials, options.bound, seed);
    r.oracle_index = est.index;
    r.oracle_rank = est.generic_rank;
    if (est.index != r.index || est.generic_rank != r.max_orbit_dim) {
      r.oracle_agrees = false;
      r.failures.push_back(name + ": oracle index " + std::to_string(est.index) +
                           " rank " + std::to_string(est.generic_rank) + ", diagram index " +
                           std::to_string(r.index) + " orbit dim " +
                           std::to_string(r.max_orbit_dim));
    }
    for (int rank : est.ranks) {
      if (rank % 2 != 0) {
        r.oracle_agrees = false;
        r.failures.push_back(name + ": odd skew rank " + std::to_string(rank));
      }
      if (rank > r.max_orbit_dim) {
        r.oracle_agrees = false;
        r.failures.push_back(name + ": skew rank above the diagram's orbit dimension");
      }
    }
  }

  if (!options.invariants) return r;
  std::vector<ThetaState> chain;
  try {
    chain = theta_chain(d);
  } catch (const Error& e) {
    r.centrality = r.triangular = false;
    r.failures.push_back(name + ": construction failed: " + e.what());
    return r;
  }
  std::vector<Polynomial> zs = chain.back().zs.all();
  if (options.mutate && !zs.empty())
    zs.back() *= Polynomial::variable(d.step(d.steps()).xi);

  if (static_cast<int>(zs.size()) != r.index) {
    r.triangular = false;
    r.failures.push_back(name + ": number of invariants differs from the index");
  }
  for (std::size_t j = 0; j < zs.size(); ++j) {
    const Pair xi = d.step(static_cast<int>(j) + 1).xi;
    const std::string zname = name + ": z" + std::to_string(j + 1);
    if (!verify_centrality(zs[j], ideal)) {
      r.centrality = false;
      r.failures.push_back(zname + " is not central");
    }
    try {
      triangular_decompose(zs[j], xi, std::span(zs).first(j));
    } catch (const NotTriangular& e) {
      r.triangular = false;
      r.failures.push_back(zname + ": " + e.what());
    }
    for (const Pair& v : zs[j].variables())
      if (order_gt(xi, v)) {
        r.triangular = false;
        r.failures.push_back(zname + " involves y" + to_string(v) + " below xi");
      }
  }

  if (options.relations) {
    for (int i = 1; i <= d.steps(); ++i) {
      try {
        const RelationReport rep = verify_relations(chain[i - 1], chain[i], d, i);
        if (!rep.ok) {
          r.relations = false;
          r.failures.push_back(name + ": step " + std::to_string(i) + ": " + rep.failure);
        }
      } catch (const Error& e) {
        r.relations = false;
        r.failures.push_back(name + ": step " + std::to_string(i) + ": " + e.what());
      }
    }
  }

  if (options.invariance &&
      !invariance_oracle(zs, ideal, options.invariance_trials, seed ^ 0x1a7aULL, options.bound)) {
    r.invariance = false;
    r.failures.push_back(name + ": an invariant moves under the coadjoint action");
  }

  if (options.jacobian && !zs.empty()) {
    const JacobianResult jr =
        jacobian_rank_with_retry(zs, algebra, options.bound, seed ^ 0x7ac0ULL);
    r.jacobian_attempts = jr.attempts;
    for (const std::string& line : jr.log) r.notes.push_back(name + ": jacobian " + line);
    if (jr.rank != static_cast<int>(zs.size())) {
      r.jacobian = false;
      r.failures.push_back(name + ": Jacobian rank " + std::to_string(jr.rank) + " < " +
                           std::to_string(zs.size()));
    }
  }
  return r;
}

}  // namespace orbitdiag
