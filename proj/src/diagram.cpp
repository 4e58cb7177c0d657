#include "orbitdiag/diagram.hpp"

namespace orbitdiag {

StepOutOfRange::StepOutOfRange(int step, int steps)
    : Error("step " + std::to_string(step) + " outside the diagram's " +
            std::to_string(steps) + " steps") {}

Diagram::Diagram(PatternIdeal ideal) : ideal_(std::move(ideal)) {
  const int n = ideal_.n();
  PairSet unfilled;
  for (const Pair& p : all_pairs(n)) {
    if (ideal_.contains(p))
      cells_[p] = {SymbolKind::Bullet, 0};
    else
      unfilled.insert(p);
  }
  unfilled_.push_back(unfilled);

  while (!unfilled.empty()) {
    StepRecord rec;
    rec.index = static_cast<int>(steps_.size()) + 1;
    rec.xi = *unfilled.begin();
    const int k = rec.xi.row, t = rec.xi.col;
    rec.p = n + 1;
    for (int r = k + 1; r <= n; ++r)
      if (ideal_.contains({r, t})) {
        rec.p = r;
        break;
      }

    unfilled.erase(rec.xi);
    cells_[rec.xi] = {SymbolKind::Cross, rec.index};
    for (int a = t + 1; a < k; ++a) {
      const Pair left{k, a}, up{a, t};
      if (unfilled.count(left) && unfilled.count(up)) {
        rec.minus.insert(left);
        rec.plus.insert(up);
      }
    }
    for (const Pair& q : rec.minus) {
      unfilled.erase(q);
      cells_[q] = {SymbolKind::Minus, rec.index};
    }
    for (const Pair& q : rec.plus) {
      unfilled.erase(q);
      cells_[q] = {SymbolKind::Plus, rec.index};
    }
    steps_.push_back(std::move(rec));
    unfilled_.push_back(unfilled);
  }
}

const StepRecord& Diagram::step(int i) const {
  if (i < 1 || i > steps()) throw StepOutOfRange(i, steps());
  return steps_[i - 1];
}

std::optional<Symbol> Diagram::cell_after(const Pair& p, int after) const {
  auto it = cells_.find(p);
  if (it == cells_.end() || it->second.step > after) return std::nullopt;
  return it->second;
}

namespace {

PairSet cells_of(const std::map<Pair, Symbol, Descending>& cells, SymbolKind kind) {
  PairSet out;
  for (const auto& [p, s] : cells)
    if (s.kind == kind) out.insert(p);
  return out;
}

}  // namespace

PairSet Diagram::crosses() const { return cells_of(cells_, SymbolKind::Cross); }
PairSet Diagram::plus_cells() const { return cells_of(cells_, SymbolKind::Plus); }
PairSet Diagram::minus_cells() const { return cells_of(cells_, SymbolKind::Minus); }

const PairSet& Diagram::unfilled_after(int i) const {
  if (i < 0 || i > steps()) throw StepOutOfRange(i, steps());
  return unfilled_[i];
}

int index_of(const Diagram& d) { return d.steps(); }

int max_orbit_dim(const Diagram& d) {
  int count = 0;
  for (const StepRecord& s : d.step_records())
    count += static_cast<int>(s.minus.size() + s.plus.size());
  return count;
}

const PairSet& b_set(const Diagram& d, int i) { return d.unfilled_after(i); }

const char* to_string(StepClass c) {
  switch (c) {
    case StepClass::C11: return "1.1";
    case StepClass::C12a: return "1.2a";
    case StepClass::C12b: return "1.2b";
    case StepClass::C12c: return "1.2c";
    case StepClass::C2: return "2";
    case StepClass::C3: return "3";
    case StepClass::C4: return "4";
  }
  return "?";
}

std::map<Pair, StepClass, Descending> classify_step(const Diagram& d, int i) {
  const StepRecord& rec = d.step(i);
  const int n = d.n(), k = rec.xi.row, t = rec.xi.col, p = rec.p;
  const PairSet& before = d.unfilled_after(i - 1);
  const PairSet& now = d.unfilled_after(i);

  for (int a = k + 1; a < p; ++a)
    if (before.count({a, k}))
      throw Error("pair " + to_string(Pair{a, k}) + " unfilled before step " +
                  std::to_string(i) + " although it lies above p");

  std::map<Pair, StepClass, Descending> out;
  for (const Pair& q : now) {
    const int a = q.row, b = q.col;
    std::vector<StepClass> hits;
    const bool middle_b = t < b && b < k;
    if (a < k && middle_b) {
      if (before.count({a, t}) && before.count({k, b}))
        hits.push_back(StepClass::C11);
      else
        hits.push_back(StepClass::C12c);
    }
    if (a < k && b == t) hits.push_back(StepClass::C12a);
    if (a == k && middle_b) hits.push_back(StepClass::C12b);
    if (k < a && a <= n && middle_b) hits.push_back(StepClass::C2);
    if (p <= a && a <= n && b == k) hits.push_back(StepClass::C3);
    if (k < a && a <= n && b > k) hits.push_back(StepClass::C4);
    if (hits.size() != 1)
      throw Error("pair " + to_string(q) + " of B_" + std::to_string(i) +
                  " falls into " + std::to_string(hits.size()) + " classes");
    out[q] = hits.front();
  }
  return out;
}

PairSet d_minus(const Diagram& d, int i) {
  const Pair xi = d.step(i).xi;
  PairSet out;
  for (int j = 1; j <= i; ++j)
    for (const Pair& q : d.step(j).minus)
      if (order_gt(xi, q)) out.insert(q);
  return out;
}

bool check_closure(const PairSet& pairs, const PatternIdeal& ideal) {
  for (const Pair& a : pairs)
    for (const Pair& b : pairs) {
      const SignedTerm t = bracket(a, b);
      if (t.pair && !pairs.count(*t.pair) && !ideal.contains(*t.pair)) return false;
    }
  return true;
}

}  // namespace orbitdiag
