#ifndef ORBITDIAG_VERIFY_HPP
#define ORBITDIAG_VERIFY_HPP

#include "orbitdiag/diagram.hpp"
#include "orbitdiag/invariants.hpp"
#include "orbitdiag/oracle.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace orbitdiag {

struct CheckOptions {
  int trials = 5;                // oracle trials per ideal
  int bound = 1000;              // coordinate bound for random forms
  std::uint64_t seed = 0;
  bool oracle = true;
  bool invariants = true;        // construct z's, centrality, triangular form
  bool relations = true;         // symbolic relation checks at every step
  bool invariance = true;        // group invariance oracle
  int invariance_trials = 20;
  bool jacobian = true;
  bool mutate = false;           // corrupt the last invariant (exit-code test)
};

// Outcome of all checks on one pattern ideal.  Every flag is true when its
// check passed or was not requested.
struct IdealCheck {
  int n = 0;
  int dim = 0;
  int index = 0;
  int max_orbit_dim = 0;
  int oracle_index = -1;
  int oracle_rank = -1;
  bool structure = true;
  bool oracle_agrees = true;
  bool centrality = true;
  bool triangular = true;
  bool relations = true;
  bool invariance = true;
  bool jacobian = true;
  int jacobian_attempts = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;  // e.g. Jacobian retries

  bool ok() const {
    return structure && oracle_agrees && centrality && triangular && relations &&
           invariance && jacobian;
  }
};

// Structural identities of the diagram; failures are appended to `out`.
bool check_structure(const Diagram& d, std::vector<std::string>& out);

// Seed used for one ideal: a pure function of the base seed and the ideal.
std::uint64_t ideal_seed(std::uint64_t seed, const PatternIdeal& ideal);

IdealCheck check_ideal(const PatternIdeal& ideal, const CheckOptions& options);

std::string describe(const PatternIdeal& ideal);

}  // namespace orbitdiag

#endif  // ORBITDIAG_VERIFY_HPP
