#ifndef ORBITDIAG_INVARIANTS_HPP
#define ORBITDIAG_INVARIANTS_HPP

#include "orbitdiag/diagram.hpp"
#include "orbitdiag/localized.hpp"

#include <span>
#include <string>
#include <vector>

namespace orbitdiag {

class InconsistentState : public Error {
 public:
  using Error::Error;
};

class NotTriangular : public Error {
 public:
  NotTriangular(std::string check, const std::string& witness);
  std::string check;
};

/*
  State of the invariant construction after step i.  images[y] is the image
  of the generator y (y in B_i) under the composite embedding
  S(L_i) -> S(L)_Z, a fraction whose denominator is a product of z_1 .. z_i.
*/
struct ThetaState {
  int step = 0;
  std::map<Pair, LocalizedElement, Descending> images;
  ZTable zs;
};

ThetaState initial_state(const Diagram& d);

/*
  One embedding step.  With xi_i = (k,t), Z = Y[(k,t)] and Y the images of
  the previous state, the generators of B_i are sent to

    class 1.1:  Y[a,b] - Y[a,t] Y[k,b] / Z
    class 3:    Y[a,k] + sum_j Y[a,j] Y[j,t] / Z,  t < j < k, (j,t) in B_{i-1}
    otherwise:  Y[a,b]

  and z_i is the numerator of Z.  Generators in M map to 0.
*/
ThetaState theta_step(const ThetaState& prev, const Diagram& d, int i);

// States 0 .. s.
std::vector<ThetaState> theta_chain(const Diagram& d);

// z_1 .. z_s as polynomials in the generators of L.
std::vector<Polynomial> build_invariants(const Diagram& d);

struct TriangularForm {
  std::map<int, int> exponents;  // Q = unit * prod_j z_j^{e_j}
  Rational unit;
  Polynomial coefficient;        // Q = dz/dy_xi
  Polynomial remainder;          // P = z - y_xi Q
};

// Checks z = y_xi Q + P with Q a product of powers of `earlier` (up to a
// nonzero constant) and P in variables greater than xi; throws NotTriangular.
TriangularForm triangular_decompose(const Polynomial& z, const Pair& xi,
                                    std::span<const Polynomial> earlier);

// {z, y} = 0 for every generator y of L.
bool verify_centrality(const Polynomial& z, const PatternIdeal& ideal);

struct WeylPairs {
  int step = 0;
  std::map<int, LocalizedElement> p;  // p_j = Y[(k,j)], (k,j) in C_i^-
  std::map<int, LocalizedElement> q;  // q_j = Y[(j,t)] / Z, (j,t) in C_i^+
};

WeylPairs weyl_pairs(const ThetaState& prev, const Diagram& d, int i);

struct RelationReport {
  int step = 0;
  bool ok = true;
  std::size_t checked = 0;
  std::string failure;  // first counterexample
};

/*
  Verifies at step i, with all fractions compared exactly:
    - the embedding respects brackets: {Y_i[x], Y_i[y]} = Y_i[[x,y]] for
      x, y in B_i (brackets landing in M give 0);
    - the Weyl relations {p_a, q_b} = d_ab, {p, p} = {q, q} = 0;
    - Z, the Weyl generators and the images Y_i are pairwise in involution;
    - denominators of Y_i only involve z_1 .. z_i.
*/
RelationReport verify_relations(const ThetaState& prev, const ThetaState& next,
                                const Diagram& d, int i);
RelationReport verify_relations(const ThetaState& prev, const Diagram& d, int i);

}  // namespace orbitdiag

#endif  // ORBITDIAG_INVARIANTS_HPP
