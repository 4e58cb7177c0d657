#ifndef ORBITDIAG_CLI_HPP
#define ORBITDIAG_CLI_HPP

#include "orbitdiag/diagram.hpp"
#include "orbitdiag/verify.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace orbitdiag {

// "n: i,j; i,j; ..."; "n:" alone is the empty ideal.
struct IdealSpec {
  int n = 0;
  std::vector<Pair> pairs;
};

IdealSpec parse_ideal_spec(std::string_view text);  // throws SyntaxError
PatternIdeal to_ideal(const IdealSpec& spec);       // throws NotAnIdeal, OutOfRange

enum class RenderStyle { Ascii, Unicode };

// One line per row, cells separated by single spaces.  With `steps`, the
// table after every step 0 .. s follows the final diagram.
std::string render_diagram(const Diagram& d, RenderStyle style = RenderStyle::Ascii,
                           bool steps = false);
// The table as it stood after step `after`; unfilled cells print like blanks.
std::string render_table(const Diagram& d, int after, RenderStyle style = RenderStyle::Ascii);

struct StepSummary {
  Pair xi;
  int p = 0;
  std::vector<Pair> minus;
  std::vector<Pair> plus;
  friend bool operator==(const StepSummary&, const StepSummary&) = default;
};

struct OracleSummary {
  int index = 0;
  int generic_rank = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  friend bool operator==(const OracleSummary&, const OracleSummary&) = default;
};

struct ResultBundle {
  int n = 0;
  std::vector<Pair> ideal;
  std::vector<Pair> S;
  std::vector<Pair> C_plus;
  std::vector<Pair> C_minus;
  std::vector<StepSummary> steps;
  int index = 0;
  int max_orbit_dim = 0;
  std::vector<std::string> invariants;
  std::optional<OracleSummary> oracle;
  friend bool operator==(const ResultBundle&, const ResultBundle&) = default;
};

ResultBundle make_bundle(const Diagram& d, bool with_invariants = true);
std::string emit_json(const ResultBundle& bundle);
ResultBundle parse_bundle(std::string_view json);  // throws Error

// {"i,j": "num/den", ...}; missing keys mean 0.
LinearForm parse_form(std::string_view json, const QuotientAlgebra& algebra);

/*
  Entry point of the orbitdiag tool.  args excludes the program name.
  Returns 0 on success, 1 when a check fails, 2 on bad input.
*/
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err);

// JSON report of the property suite over every pattern ideal with n <= max_n.
struct VerifyRun {
  std::string report;
  bool ok = true;
};
VerifyRun run_verify(int max_n, const CheckOptions& options, int symbolic_max_n);

}  // namespace orbitdiag

#endif  // ORBITDIAG_CLI_HPP
