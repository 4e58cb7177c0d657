#ifndef ORBITDIAG_DIAGRAM_HPP
#define ORBITDIAG_DIAGRAM_HPP

#include "orbitdiag/core_model.hpp"

#include <map>
#include <vector>

namespace orbitdiag {

enum class SymbolKind { Bullet, Cross, Plus, Minus };

// A filled cell.  Bullets are placed at step 0, everything else at the step
// whose cross it belongs to.
struct Symbol {
  SymbolKind kind = SymbolKind::Bullet;
  int step = 0;

  friend bool operator==(const Symbol&, const Symbol&) = default;
};

struct StepRecord {
  int index = 0;
  Pair xi;        // the cross position (k,t)
  PairSet minus;  // (k,a), t < a < k
  PairSet plus;   // (a,t), t < a < k
  int p = 0;      // first M-row of column t, n+1 when the column has none
};

class StepOutOfRange : public Error {
 public:
  StepOutOfRange(int step, int steps);
};

/*
  The filled n x n table.  Step 0 puts a bullet on every position of M.  Each
  later step puts a cross on the greatest unfilled position (k,t) and then,
  for every middle index t < a < k with both (k,a) and (a,t) still unfilled,
  a minus on (k,a) and a plus on (a,t).  The construction stops when nothing
  is left unfilled.

  Besides the final cells the diagram keeps the unfilled sets B_0 .. B_s, so
  that the intermediate tables can be replayed.
*/
class Diagram {
 public:
  explicit Diagram(PatternIdeal ideal);

  const PatternIdeal& ideal() const { return ideal_; }
  int n() const { return ideal_.n(); }
  int steps() const { return static_cast<int>(steps_.size()); }
  const std::vector<StepRecord>& step_records() const { return steps_; }
  // 1-based.
  const StepRecord& step(int i) const;
  const std::map<Pair, Symbol, Descending>& cells() const { return cells_; }
  const Symbol& cell(const Pair& p) const { return cells_.at(p); }

  // Cell as it stood after step `after`, or nullopt when still unfilled.
  std::optional<Symbol> cell_after(const Pair& p, int after) const;

  PairSet crosses() const;      // S
  PairSet plus_cells() const;   // C+
  PairSet minus_cells() const;  // C-

  // B_i, the positions unfilled after step i.
  const PairSet& unfilled_after(int i) const;

 private:
  PatternIdeal ideal_;
  std::map<Pair, Symbol, Descending> cells_;
  std::vector<StepRecord> steps_;
  std::vector<PairSet> unfilled_;
};

inline Diagram build_diagram(const PatternIdeal& ideal) { return Diagram(ideal); }

// The index of L: the number of crosses.
int index_of(const Diagram& d);
// Maximal coadjoint orbit dimension: the number of pluses and minuses.
int max_orbit_dim(const Diagram& d);

const PairSet& b_set(const Diagram& d, int i);

// Classes of the decomposition of B_i relative to xi_i = (k,t).
enum class StepClass { C11, C12a, C12b, C12c, C2, C3, C4 };

const char* to_string(StepClass c);

/*
  Sorts every pair of B_i into its class.  Throws Error when a pair fits no
  class or more than one, or when some (a,k) with k < a < p is still
  unfilled after step i-1; both would contradict the structure the
  construction relies on.
*/
std::map<Pair, StepClass, Descending> classify_step(const Diagram& d, int i);

// Minus positions of steps 1..i lying below xi_i in the order.
PairSet d_minus(const Diagram& d, int i);

// True when the bracket of any two members is zero or lands in pairs + M.
// Brackets are those of ut(n), not of the quotient.
bool check_closure(const PairSet& pairs, const PatternIdeal& ideal);

}  // namespace orbitdiag

#endif  // ORBITDIAG_DIAGRAM_HPP
