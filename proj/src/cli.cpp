#include "orbitdiag/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

namespace orbitdiag {

using ordered_json = nlohmann::ordered_json;

// ------------------------------------------------------------ ideal specs

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view s) : s_(s) {}

  IdealSpec parse() {
    IdealSpec spec;
    spec.n = number();
    skip();
    if (peek() != ':') fail("expected ':' after n");
    ++pos_;
    skip();
    if (pos_ == s_.size()) return spec;
    while (true) {
      const int row = number();
      skip();
      if (peek() != ',') fail("expected ',' inside a pair");
      ++pos_;
      const int col = number();
      spec.pairs.push_back({row, col});
      skip();
      if (pos_ == s_.size()) break;
      if (peek() != ';') fail("expected ';' between pairs");
      ++pos_;
      skip();
      if (pos_ == s_.size()) break;  // trailing ';'
    }
    return spec;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_, what); }
  int number() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 4) fail("number too large");
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

IdealSpec parse_ideal_spec(std::string_view text) { return SpecParser(text).parse(); }

PatternIdeal to_ideal(const IdealSpec& spec) {
  if (spec.n < 1 || spec.n > 255) throw Error("n must lie in [1, 255]");
  return PatternIdeal::validate(spec.n, std::span<const Pair>(spec.pairs));
}

// --------------------------------------------------------------- rendering

namespace {

const char* glyph(const std::optional<Symbol>& s, RenderStyle style) {
  if (!s) return ".";
  const bool u = style == RenderStyle::Unicode;
  switch (s->kind) {
    case SymbolKind::Bullet: return u ? "•" : "*";
    case SymbolKind::Cross: return u ? "⊗" : "X";
    case SymbolKind::Plus: return "+";
    case SymbolKind::Minus: return "-";
  }
  return "?";
}

}  // namespace

std::string render_table(const Diagram& d, int after, RenderStyle style) {
  std::string out;
  for (int row = 1; row <= d.n(); ++row) {
    for (int col = 1; col <= d.n(); ++col) {
      if (col > 1) out += ' ';
      out += col < row ? glyph(d.cell_after({row, col}, after), style) : ".";
    }
    out += '\n';
  }
  return out;
}

std::string render_diagram(const Diagram& d, RenderStyle style, bool steps) {
  std::string out = render_table(d, d.steps(), style);
  if (!steps) return out;
  for (int i = 0; i <= d.steps(); ++i)
    out += "\nstep " + std::to_string(i) + ":\n" + render_table(d, i, style);
  return out;
}

// ----------------------------------------------------------------- bundles

namespace {

std::vector<Pair> sorted(const PairSet& s) { return {s.begin(), s.end()}; }

ordered_json pairs_json(const std::vector<Pair>& ps) {
  ordered_json a = ordered_json::array();
  for (const Pair& p : ps) a.push_back({p.row, p.col});
  return a;
}

std::vector<Pair> pairs_from(const ordered_json& j) {
  std::vector<Pair> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw Error("pair must be [i, j]");
    out.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return out;
}

}  // namespace

ResultBundle make_bundle(const Diagram& d, bool with_invariants) {
  ResultBundle b;
  b.n = d.n();
  b.ideal = sorted(d.ideal().members());
  b.S = sorted(d.crosses());
  b.C_plus = sorted(d.plus_cells());
  b.C_minus = sorted(d.minus_cells());
  for (const StepRecord& s : d.step_records())
    b.steps.push_back({s.xi, s.p, sorted(s.minus), sorted(s.plus)});
  b.index = index_of(d);
  b.max_orbit_dim = max_orbit_dim(d);
  if (with_invariants)
    for (const Polynomial& z : build_invariants(d)) b.invariants.push_back(canonical_string(z));
  return b;
}

std::string emit_json(const ResultBundle& b) {
  ordered_json j;
  j["n"] = b.n;
  j["ideal"] = pairs_json(b.ideal);
  j["S"] = pairs_json(b.S);
  j["C_plus"] = pairs_json(b.C_plus);
  j["C_minus"] = pairs_json(b.C_minus);
  ordered_json steps = ordered_json::array();
  for (const StepSummary& s : b.steps) {
    ordered_json e;
    e["xi"] = {s.xi.row, s.xi.col};
    e["p"] = s.p;
    e["minus"] = pairs_json(s.minus);
    e["plus"] = pairs_json(s.plus);
    steps.push_back(std::move(e));
  }
  j["steps"] = std::move(steps);
  j["index"] = b.index;
  j["max_orbit_dim"] = b.max_orbit_dim;
  j["invariants"] = b.invariants;
  if (b.oracle) {
    ordered_json o;
    o["index"] = b.oracle->index;
    o["generic_rank"] = b.oracle->generic_rank;
    o["trials"] = b.oracle->trials;
    o["seed"] = b.oracle->seed;
    j["oracle"] = std::move(o);
  }
  return j.dump(2) + "\n";
}

ResultBundle parse_bundle(std::string_view text) {
  try {
    const ordered_json j = ordered_json::parse(text);
    ResultBundle b;
    b.n = j.at("n").get<int>();
    b.ideal = pairs_from(j.at("ideal"));
    b.S = pairs_from(j.at("S"));
    b.C_plus = pairs_from(j.at("C_plus"));
    b.C_minus = pairs_from(j.at("C_minus"));
    for (const auto& e : j.at("steps")) {
      StepSummary s;
      const auto& xi = e.at("xi");
      s.xi = {xi.at(0).get<int>(), xi.at(1).get<int>()};
      s.p = e.at("p").get<int>();
      s.minus = pairs_from(e.at("minus"));
      s.plus = pairs_from(e.at("plus"));
      b.steps.push_back(std::move(s));
    }
    b.index = j.at("index").get<int>();
    b.max_orbit_dim = j.at("max_orbit_dim").get<int>();
    b.invariants = j.at("invariants").get<std::vector<std::string>>();
    if (j.contains("oracle")) {
      const auto& o = j.at("oracle");
      b.oracle = OracleSummary{o.at("index").get<int>(), o.at("generic_rank").get<int>(),
                               o.at("trials").get<int>(), o.at("seed").get<std::uint64_t>()};
    }
    return b;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("bad result bundle: ") + e.what());
  }
}

LinearForm parse_form(std::string_view text, const QuotientAlgebra& algebra) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("bad form file: ") + e.what());
  }
  if (!j.is_object()) throw Error("form file must hold a JSON object");
  std::map<Pair, Rational> values;
  for (const auto& [key, value] : j.items()) {
    const IdealSpec spec = parse_ideal_spec("0: " + key);
    if (spec.pairs.size() != 1) throw Error("form key must be \"i,j\", got \"" + key + "\"");
    Rational v;
    if (value.is_string()) {
      if (v.set_str(value.get<std::string>(), 10) != 0)
        throw Error("bad rational \"" + value.get<std::string>() + "\"");
      if (v.get_den() == 0) throw Error("zero denominator in form value");
      v.canonicalize();
    } else if (value.is_number_integer()) {
      v = Rational(Integer(std::to_string(value.get<long long>())));
    } else {
      throw Error("form value for \"" + key + "\" must be a string or an integer");
    }
    values[spec.pairs.front()] = v;
  }
  return LinearForm(algebra, values);
}

// ------------------------------------------------------------------ verify

VerifyRun run_verify(int max_n, const CheckOptions& options, int symbolic_max_n) {
  VerifyRun run;
  ordered_json report;
  report["max_n"] = max_n;
  report["seed"] = options.seed;
  report["trials"] = options.trials;
  report["bound"] = options.bound;
  report["symbolic_max_n"] = symbolic_max_n;
  report["invariance_trials"] = options.invariance_trials;
  report["mutate"] = options.mutate;
  ordered_json results = ordered_json::array();
  std::vector<std::string> failures, notes;

  for (int n = 1; n <= max_n; ++n) {
    CheckOptions opts = options;
    opts.relations = options.relations && n <= symbolic_max_n;
    std::map<int, int> histogram;
    int counts[7] = {};
    int retries = 0, ideals = 0;
    for (const PatternIdeal& ideal : enumerate_pattern_ideals(n)) {
      const IdealCheck c = check_ideal(ideal, opts);
      ++ideals;
      ++histogram[c.index];
      counts[0] += !c.structure;
      counts[1] += !c.oracle_agrees;
      counts[2] += !c.centrality;
      counts[3] += !c.triangular;
      counts[4] += !c.relations;
      counts[5] += !c.invariance;
      counts[6] += !c.jacobian;
      retries += c.jacobian_attempts > 1 ? c.jacobian_attempts - 1 : 0;
      failures.insert(failures.end(), c.failures.begin(), c.failures.end());
      notes.insert(notes.end(), c.notes.begin(), c.notes.end());
      run.ok = run.ok && c.ok();
    }
    ordered_json r;
    r["n"] = n;
    r["ideals"] = ideals;
    r["structure_failures"] = counts[0];
    r["oracle_mismatches"] = counts[1];
    r["centrality_failures"] = counts[2];
    r["triangular_failures"] = counts[3];
    r["relation_failures"] = counts[4];
    r["invariance_failures"] = counts[5];
    r["jacobian_failures"] = counts[6];
    r["jacobian_retries"] = retries;
    r["relations_checked"] = opts.relations;
    ordered_json h = ordered_json::object();
    for (const auto& [index, count] : histogram) h[std::to_string(index)] = count;
    r["index_histogram"] = std::move(h);
    results.push_back(std::move(r));
  }
  report["results"] = std::move(results);
  report["failures"] = failures;
  report["notes"] = notes;
  report["ok"] = run.ok;
  run.report = report.dump(2) + "\n";
  return run;
}

// ---------------------------------------------------------------- dispatch

namespace {

struct InputError : Error {
  using Error::Error;
};

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

PatternIdeal read_ideal(const std::string& arg, std::istream& in) {
  const std::string text = arg == "-" ? read_all(in) : arg;
  return to_ideal(parse_ideal_spec(text));
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot read " + path);
  return read_all(f);
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Diagrams, index and coadjoint invariants of factor algebras of ut(n)"};
  app.name("orbitdiag");
  app.require_subcommand(1);

  std::string ideal_text;
  bool unicode = false, steps = false, json = false;
  auto* diagram = app.add_subcommand("diagram", "Render the diagram");
  diagram->add_option("--ideal", ideal_text, "Ideal as \"n: i,j; i,j\" or - for stdin")->required();
  diagram->add_flag("--unicode", unicode, "Use the symbols ⊗ and •");
  diagram->add_flag("--steps", steps, "Append the table after every step");
  diagram->add_flag("--json", json, "Emit the JSON result bundle instead");

  bool oracle = false;
  int trials = 5, bound = 1000;
  std::uint64_t seed = 0;
  auto* index = app.add_subcommand("index", "Index from the diagram, optionally cross-checked");
  index->add_option("--ideal", ideal_text, "Ideal spec")->required();
  index->add_flag("--oracle", oracle, "Compare with the generic rank of B_f");
  index->add_option("--trials", trials, "Random forms for the oracle")->check(CLI::PositiveNumber);
  index->add_option("--seed", seed, "Random seed");
  index->add_option("--bound", bound, "Coordinate bound")->check(CLI::PositiveNumber);

  bool check = false;
  auto* invariants = app.add_subcommand("invariants", "Print the invariants z_1 .. z_s");
  invariants->add_option("--ideal", ideal_text, "Ideal spec")->required();
  invariants->add_flag("--check", check, "Check centrality and triangular form");

  std::string form_path;
  auto* orbit_dim = app.add_subcommand("orbit-dim", "Orbit dimension at a given form");
  orbit_dim->add_option("--ideal", ideal_text, "Ideal spec")->required();
  orbit_dim->add_option("--form", form_path, "JSON file {\"i,j\": \"num/den\"}")->required();

  int max_n = 5, symbolic_max_n = 5, invariance_trials = 20;
  bool mutate = false;
  auto* verify = app.add_subcommand("verify", "Run the property suite over all pattern ideals");
  verify->add_option("--max-n", max_n, "Largest n")->check(CLI::Range(1, 8));
  verify->add_option("--trials", trials, "Oracle trials per ideal")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "Random seed");
  verify->add_option("--bound", bound, "Coordinate bound")->check(CLI::PositiveNumber);
  verify->add_option("--symbolic-max-n", symbolic_max_n, "Largest n for symbolic relation checks");
  verify->add_option("--invariance-trials", invariance_trials, "Group elements per ideal")
      ->check(CLI::NonNegativeNumber);
  verify->add_flag("--mutate", mutate, "Corrupt the last invariant of every ideal");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*diagram) {
      const Diagram d(read_ideal(ideal_text, in));
      if (json)
        out << emit_json(make_bundle(d));
      else
        out << render_diagram(d, unicode ? RenderStyle::Unicode : RenderStyle::Ascii, steps);
      return 0;
    }
    if (*index) {
      const PatternIdeal ideal = read_ideal(ideal_text, in);
      const Diagram d(ideal);
      out << "index=" << index_of(d);
      int status = 0;
      if (oracle) {
        const IndexEstimate est = index_oracle(ideal, trials, bound, seed);
        out << " oracle=" << est.index << " rank=" << est.generic_rank;
        if (est.index != index_of(d) || est.generic_rank != max_orbit_dim(d)) status = 1;
      }
      out << '\n';
      return status;
    }
    if (*invariants) {
      const PatternIdeal ideal = read_ideal(ideal_text, in);
      const Diagram d(ideal);
      const auto zs = build_invariants(d);
      for (const Polynomial& z : zs) out << canonical_string(z) << '\n';
      if (!check) return 0;
      bool ok = true;
      for (std::size_t j = 0; j < zs.size(); ++j) {
        const std::string name = "z" + std::to_string(j + 1);
        if (!verify_centrality(zs[j], ideal)) {
          ok = false;
          out << "check: " << name << " is not central\n";
        }
        try {
          triangular_decompose(zs[j], d.step(static_cast<int>(j) + 1).xi,
                               std::span(zs).first(j));
        } catch (const NotTriangular& e) {
          ok = false;
          out << "check: " << name << ": " << e.what() << '\n';
        }
      }
      out << (ok ? "check: ok\n" : "check: FAILED\n");
      return ok ? 0 : 1;
    }
    if (*orbit_dim) {
      const PatternIdeal ideal = read_ideal(ideal_text, in);
      const QuotientAlgebra algebra(ideal);
      const LinearForm f = parse_form(read_file(form_path), algebra);
      out << "orbit_dim=" << exact_rank(skew_form_matrix(f, algebra)) << '\n';
      return 0;
    }
    if (*verify) {
      CheckOptions opts;
      opts.trials = trials;
      opts.bound = bound;
      opts.seed = seed;
      opts.invariance_trials = invariance_trials;
      opts.invariance = invariance_trials > 0;
      opts.mutate = mutate;
      const VerifyRun run = run_verify(max_n, opts, symbolic_max_n);
      out << run.report;
      return run.ok ? 0 : 1;
    }
  } catch (const Error& e) {
    // Bad specs, invalid ideals, unreadable or malformed files.
    err << "orbitdiag: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace orbitdiag
