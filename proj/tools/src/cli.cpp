#include "pancake_cli/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "pancake/cycle_census.hpp"
#include "pancake/formula_lab.hpp"
#include "pancake/layer_search.hpp"
#include "pancake/reference_tables.hpp"
#include "pancake/report.hpp"

namespace pancake::cli {
namespace {

/// A failure that maps directly onto an exit code.
struct Failure {
  int code;
  std::string message;
};

[[noreturn]] void fail(int code, std::string message) { throw Failure{code, std::move(message)}; }

int parse_int_arg(std::string_view text, std::string_view what) {
  int v = 0;
  const auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || p != text.data() + text.size()) {
    throw std::invalid_argument("malformed " + std::string(what) + " '" + std::string(text) + "'");
  }
  return v;
}

struct Settings {
  std::string graph;
  std::string n;
  std::string format;
  std::string memory;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::string checkpoint;
  std::string resume;
  std::string output;
  int width = 0;
  int length = 0;
  std::uint64_t node_budget = CensusOptions{}.node_budget;
  std::string which;
  std::string k;
  std::string source = "published";
  std::vector<std::string> perm;
};

std::uint64_t memory_limit(const Settings& s) {
  if (!s.memory.empty()) return parse_byte_size(s.memory);
  if (const char* env = std::getenv("PANCAKE_MEM_LIMIT"); env != nullptr && *env != '\0') {
    try {
      return parse_byte_size(env);
    } catch (const std::invalid_argument& e) {
      fail(kUsage, std::string("PANCAKE_MEM_LIMIT: ") + e.what());
    }
  }
  return kDefaultMemoryLimit;
}

Kind require_kind(const Settings& s) {
  if (s.graph.empty()) fail(kUsage, "--graph is required");
  return parse_kind(s.graph);
}

std::pair<int, int> require_range(const Settings& s) {
  if (s.n.empty()) fail(kUsage, "--n is required");
  return parse_range(s.n);
}

/// Output goes to --output when given, else to the caller's stream.
class Sink {
 public:
  Sink(const Settings& s, std::ostream& fallback) : path_(s.output), fallback_(fallback) {}
  std::ostream& stream() { return path_.empty() ? fallback_ : buffer_; }
  void finish() {
    if (path_.empty()) return;
    std::ofstream f(path_, std::ios::binary | std::ios::trunc);
    f << buffer_.str();
    f.flush();
    if (!f) fail(kIoError, "cannot write " + path_);
  }

 private:
  std::string path_;
  std::ostream& fallback_;
  std::ostringstream buffer_;
};

void check_memory(const GraphKind& g, std::uint64_t limit) {
  const std::uint64_t need = layer_search_memory(g);
  if (need > limit) {
    fail(kUsage, g.name() + " needs " + std::to_string(need) + " bytes for the layer search; memory limit is " +
                     std::to_string(limit));
  }
}

std::vector<LayerProfile> search_range(Kind kind, int lo, int hi, const Settings& s, std::uint64_t limit) {
  std::vector<GraphKind> graphs;
  for (int n = lo; n <= hi; ++n) graphs.push_back(GraphKind::make(kind, n));
  for (const auto& g : graphs) check_memory(g, limit);  // all up front, before any work
  std::vector<LayerProfile> out;
  for (const auto& g : graphs) {
    SearchOptions opts;
    opts.memory_limit = limit;
    opts.workers = s.workers;
    out.push_back(layer_profile(g, opts));
  }
  return out;
}

void write_csv(std::ostream& os, std::span<const LayerProfile> profiles, int min_width) {
  std::size_t width = static_cast<std::size_t>(std::max(min_width, 0));
  for (const auto& p : profiles) width = std::max(width, p.counts.size());
  os << "n";
  for (std::size_t k = 0; k < width; ++k) os << ",k" << k;
  os << "\n";
  for (const auto& p : profiles) {
    os << p.graph.n;
    for (std::size_t k = 0; k < width; ++k) os << ',' << (k < p.counts.size() ? p.counts[k] : 0);
    os << "\n";
  }
}

int cmd_table(const Settings& s, std::ostream& out) {
  const std::uint64_t limit = memory_limit(s);
  if (s.format != "csv" && s.format != "json") fail(kUsage, "--format must be csv or json");
  std::vector<LayerProfile> profiles;
  if (!s.resume.empty()) {
    SearchOptions opts;
    opts.memory_limit = limit;
    opts.workers = s.workers;
    if (!s.checkpoint.empty()) opts.checkpoint_path = s.checkpoint;
    profiles.push_back(resume(s.resume, opts));
  } else {
    const Kind kind = require_kind(s);
    const auto [lo, hi] = require_range(s);
    if (lo < 1) fail(kUsage, "--n must be at least 1");
    if (!s.checkpoint.empty()) {
      if (lo != hi) fail(kUsage, "--checkpoint needs a single n");
      const GraphKind g = GraphKind::make(kind, lo);
      check_memory(g, limit);
      SearchOptions opts;
      opts.memory_limit = limit;
      opts.workers = s.workers;
      opts.checkpoint_path = s.checkpoint;
      profiles.push_back(layer_profile(g, opts));
    } else {
      profiles = search_range(kind, lo, hi, s, limit);
    }
  }
  Sink sink(s, out);
  if (s.format == "json") {
    sink.stream() << to_json(profiles);
  } else {
    write_csv(sink.stream(), profiles, s.width);
  }
  sink.finish();
  return kOk;
}

/// Parses the positional stack, reconciling it with --graph when given.
std::pair<GraphKind, AnyPerm> read_stack(const Settings& s) {
  if (s.perm.empty()) fail(kUsage, "expected a permutation, e.g. 2 1 3 or \"[-2 1]\"");
  std::string text;
  for (const auto& t : s.perm) text += t + " ";
  AnyPerm p = parse_perm(text);
  Kind kind = std::holds_alternative<Perm>(p) ? Kind::Plain : Kind::Burnt;
  if (!s.graph.empty()) {
    const Kind wanted = parse_kind(s.graph);
    if (wanted == Kind::Plain && kind == Kind::Burnt) fail(kUsage, "signed stack given for the plain graph");
    if (wanted == Kind::Burnt && kind == Kind::Plain) {
      const auto& e = std::get<Perm>(p).entries();
      p = SignedPerm::from_entries(std::vector<int>(e.begin(), e.end()));
    }
    kind = wanted;
  }
  const int n = static_cast<int>(std::visit([](const auto& v) { return v.size(); }, p));
  return {GraphKind::make(kind, n), std::move(p)};
}

int cmd_distance(const Settings& s, std::ostream& out) {
  const auto [g, p] = read_stack(s);
  const std::uint64_t limit = memory_limit(s);
  check_memory(g, limit);
  Sink sink(s, out);
  sink.stream() << distance(g, p, limit) << "\n";
  sink.finish();
  return kOk;
}

int cmd_sort(const Settings& s, std::ostream& out) {
  const auto [g, p] = read_stack(s);
  const std::uint64_t limit = memory_limit(s);
  check_memory(g, limit);
  const std::vector<int> flips = sort_sequence(g, p, limit);
  Sink sink(s, out);
  auto& os = sink.stream();
  os << "distance " << flips.size() << "\n";
  os << "flips";
  for (int f : flips) os << ' ' << f;
  os << "\n";
  AnyPerm cur = p;
  os << "   " << format_perm(cur) << "\n";
  for (int f : flips) {
    cur = apply_flip(cur, f);
    os << "r" << f << (f < 10 ? "  " : " ") << format_perm(cur) << "\n";
  }
  sink.finish();
  return kOk;
}

void write_census_text(std::ostream& os, const CensusReport& r) {
  os << "graph " << r.graph.name() << " length " << r.length << "\n";
  os << "cycles through identity " << r.total_cycles_through_identity << "\n";
  for (const auto& [number, tally] : r.per_family) {
    os << "family " << number << " (" << family_by_number(number).label << ") " << tally.count << " cycles;";
    for (const auto& p : tally.instances) os << ' ' << p.to_string() << ';';
    os << "\n";
  }
  os << "unmatched " << r.unmatched.size() << "\n";
  for (const auto& f : r.unmatched) os << "  " << format_labels(f.labels) << "\n";
  if (r.closure_failures > 0) os << "closure failures " << r.closure_failures << "\n";
  os << (r.confirmed() ? "classification confirmed" : "classification VIOLATED") << "\n";
}

int cmd_cycles(const Settings& s, std::ostream& out) {
  const Kind kind = require_kind(s);
  const auto [lo, hi] = require_range(s);
  if (lo != hi) fail(kUsage, "cycles takes a single n");
  if (s.length == 0) fail(kUsage, "--length is required");
  if (s.format != "text" && s.format != "json") fail(kUsage, "--format must be text or json");
  CensusOptions opts;
  opts.workers = s.workers;
  opts.node_budget = s.node_budget;
  const CensusReport report = verify_classification(GraphKind::make(kind, lo), s.length, opts);
  Sink sink(s, out);
  if (s.format == "json") {
    sink.stream() << to_json(report);
  } else {
    write_census_text(sink.stream(), report);
  }
  sink.finish();
  return report.confirmed() ? kOk : kClassificationViolation;
}

/// Published table, or a fresh layer search over the requested rows.
LayerTable data_table(Kind kind, const Settings& s, int lo, int hi) {
  if (s.source == "published") return published_table(kind);
  if (s.source != "bfs") fail(kUsage, "--source must be published or bfs");
  const auto profiles = search_range(kind, lo, hi, s, memory_limit(s));
  return LayerTable::from_profiles(profiles);
}

std::pair<int, int> range_or(const Settings& s, int lo, int hi) { return s.n.empty() ? std::pair{lo, hi} : parse_range(s.n); }

std::string cell(const std::optional<Int>& v) { return v ? to_string(*v) : "-"; }

int check_formula(const FormulaSpec& f, const Settings& s, std::ostream& os, bool json) {
  const Kind kind = f.graph;
  const auto [lo, hi] = range_or(s, 1, published_max_n(kind));
  const CrosscheckReport r = crosscheck(f, data_table(kind, s, lo, hi), lo, hi);
  if (json) {
    os << to_json(r);
  } else {
    os << f.name << " (" << to_string(f.status) << ")\n";
    for (const auto& row : r.rows) {
      os << "  n=" << row.n << " formula " << cell(row.formula) << (row.from_exception ? "*" : "") << " observed "
         << cell(row.observed) << " " << to_string(row.outcome) << "\n";
    }
    os << "  " << r.verdict() << " (" << r.compared() << " compared, " << r.mismatches() << " mismatched)\n";
  }
  if (r.mismatches() == 0) return kOk;
  return f.status == FormulaStatus::Proved ? kClassificationViolation : kConjectureMismatch;
}

int check_identity(std::string_view which, const Settings& s, std::ostream& os, bool json) {
  const bool recurrence = which == "recurrence";
  const Kind kind = recurrence ? Kind::Plain : Kind::Burnt;
  const auto [k_lo, k_hi] = s.k.empty() ? (recurrence ? std::pair{0, 6} : std::pair{1, 11}) : parse_range(s.k);
  const auto [lo, hi] = range_or(s, 1, published_max_n(kind));
  const bool single = !s.k.empty() && !s.n.empty() && k_lo == k_hi && lo == hi;
  const LayerTable table = data_table(kind, s, s.source == "bfs" ? 1 : lo, hi);

  std::vector<IdentityCell> cells;
  for (int k = k_lo; k <= k_hi; ++k) {
    for (int n = lo; n <= hi; ++n) {
      if (recurrence) {
        cells.push_back({k, n, check_binomial_recurrence(k, n, table)});
      } else {
        try {
          cells.push_back({k, n, check_gregory_newton(k, n, table)});
        } catch (const MissingTableData& e) {
          if (single) fail(kUsage, e.what());  // a sweep skips unknown cells
        }
      }
    }
  }
  std::size_t holds = 0, fails = 0, skipped = 0;
  for (const auto& c : cells) {
    if (c.check.verdict == Verdict::Holds) ++holds;
    if (c.check.verdict == Verdict::Fails) ++fails;
    if (c.check.verdict == Verdict::InsufficientData) ++skipped;
  }
  if (json) {
    os << to_json(which, cells);
  } else {
    for (const auto& c : cells) {
      if (c.check.verdict == Verdict::InsufficientData && !single) continue;
      os << which << " k=" << c.k << " n=" << c.n << ": " << to_string(c.check.verdict);
      if (c.check.verdict != Verdict::InsufficientData) {
        os << " (table " << cell(c.check.lhs) << ", sum " << cell(c.check.rhs) << ")";
      } else {
        os << " (" << c.check.detail << ")";
      }
      os << "\n";
    }
    os << which << ": holds in " << holds << ", fails in " << fails << ", " << skipped
       << " cells lack data\n";
  }
  if (fails == 0) return kOk;
  return recurrence ? kClassificationViolation : kConjectureMismatch;
}

int cmd_formulas_check(const Settings& s, std::ostream& out) {
  if (s.which.empty()) fail(kUsage, "--which is required (formula name, recurrence, expansion or all)");
  if (s.format != "text" && s.format != "json") fail(kUsage, "--format must be text or json");
  const bool json = s.format == "json";
  std::string which = s.which;
  std::transform(which.begin(), which.end(), which.begin(), [](unsigned char c) { return std::tolower(c); });
  Sink sink(s, out);
  int code = kOk;
  // A failed proved result outranks a conjecture mismatch.
  const auto merge = [&code](int c) {
    if (code == kClassificationViolation || c == kClassificationViolation) {
      code = kClassificationViolation;
    } else if (c != kOk) {
      code = c;
    }
  };
  // Short aliases used in earlier scripts.
  if (which == "cor62") which = "recurrence";
  if (which == "con63") which = "expansion";
  if (which == "recurrence" || which == "expansion") {
    code = check_identity(which, s, sink.stream(), json);
  } else if (which == "all") {
    for (const auto& f : formula_registry()) merge(check_formula(f, s, sink.stream(), json));
  } else {
    code = check_formula(find_formula(which), s, sink.stream(), json);
  }
  sink.finish();
  return code;
}

int cmd_formulas_fit(const Settings& s, std::ostream& out) {
  const Kind kind = require_kind(s);
  if (s.k.empty()) fail(kUsage, "--k is required");
  const int k = parse_int_arg(s.k, "k");
  const auto [lo, hi] = require_range(s);
  const LayerTable table = data_table(kind, s, lo, hi);
  std::vector<std::pair<int, Int>> points;
  for (int n = lo; n <= hi; ++n) {
    const auto v = table.get(n, k);
    if (!v) fail(kUsage, "no data for k=" + std::to_string(k) + " n=" + std::to_string(n));
    points.emplace_back(n, *v);
  }
  const NewtonPoly poly = fit_newton(points);
  Sink sink(s, out);
  auto& os = sink.stream();
  if (s.format == "json") {
    os << to_json(poly, kind, k);
  } else {
    os << "anchor " << poly.anchor << "\n";
    os << "degree " << poly.degree() << "\n";
    os << "coefficients";
    for (Int c : poly.coefficients) os << ' ' << to_string(c);
    os << "\n";
    os << "p(n) = sum_m c_m * C(n - " << poly.anchor << ", m)\n";
    for (const auto& f : formula_registry()) {
      if (f.graph != kind || f.k != k) continue;
      // Agreement on more than degree + 1 points makes two polynomials identical.
      const int from = std::max(poly.anchor, f.min_n);
      const int to = from + std::max(poly.degree(), f.polynomial.degree()) + 1;
      bool agrees = true;
      for (int n = from; n <= to && agrees; ++n) agrees = poly(n) == f.polynomial(n);
      os << (agrees ? "agrees with " : "differs from ") << f.name << " as a polynomial for n >= " << from << "\n";
    }
  }
  sink.finish();
  return kOk;
}

int cmd_formulas_eval(const Settings& s, std::ostream& out) {
  if (s.which.empty()) fail(kUsage, "--which is required");
  const FormulaSpec& f = find_formula(s.which);
  const auto [lo, hi] = require_range(s);
  Sink sink(s, out);
  for (int n = lo; n <= hi; ++n) {
    const FormulaValue v = eval_formula(f, n);
    sink.stream() << n << ' ' << cell(v.value) << (v.from_exception ? " (tabulated exception)" : "") << "\n";
  }
  sink.finish();
  return kOk;
}

int cmd_formulas_list(std::ostream& out) {
  for (const auto& f : formula_registry()) {
    out << f.name << " k=" << f.k << " " << to_string(f.graph) << " " << to_string(f.status) << " n>=" << f.min_n;
    for (const auto& [n, v] : f.exceptions) out << " [n=" << n << ": " << to_string(v) << "]";
    out << "\n";
  }
  return kOk;
}

constexpr const char* kStackHelp =
    "Stack in one-line notation. Unsigned stacks are bare integers (2 1 3). Signed stacks "
    "must be quoted with brackets (\"[-2 1 3]\") because a bare negative number reads as a flag.";

}  // namespace

std::uint64_t parse_byte_size(std::string_view text) {
  std::size_t digits = 0;
  while (digits < text.size() && std::isdigit(static_cast<unsigned char>(text[digits]))) ++digits;
  if (digits == 0) throw std::invalid_argument("malformed byte size '" + std::string(text) + "'");
  std::uint64_t value = 0;
  const auto [p, ec] = std::from_chars(text.data(), text.data() + digits, value);
  if (ec != std::errc{}) throw std::invalid_argument("byte size out of range '" + std::string(text) + "'");
  std::string unit(text.substr(digits));
  std::transform(unit.begin(), unit.end(), unit.begin(), [](unsigned char c) { return std::tolower(c); });
  static const std::map<std::string, int> shifts = {{"", 0},   {"b", 0},    {"k", 10},  {"kib", 10}, {"m", 20},
                                                    {"mib", 20}, {"g", 30},  {"gib", 30}, {"t", 40},  {"tib", 40}};
  const auto it = shifts.find(unit);
  if (it == shifts.end()) throw std::invalid_argument("unknown size unit '" + std::string(text.substr(digits)) + "'");
  if (it->second > 0 && value > (~std::uint64_t{0} >> it->second)) {
    throw std::invalid_argument("byte size out of range '" + std::string(text) + "'");
  }
  return value << it->second;
}

std::pair<int, int> parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int v = parse_int_arg(text, "value");
    return {v, v};
  }
  const int lo = parse_int_arg(text.substr(0, dots), "range start");
  const int hi = parse_int_arg(text.substr(dots + 2), "range end");
  if (lo > hi) throw std::invalid_argument("empty range '" + std::string(text) + "'");
  return {lo, hi};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Distance layers, cycle census and formula checks for pancake graphs"};
  app.name("pancake");
  app.require_subcommand(1);

  const auto add_graph = [&s](CLI::App* c, bool required) {
    auto* opt = c->add_option("--graph", s.graph, "plain (P_n) or burnt (BP_n)")->check(CLI::IsMember({"plain", "burnt"}));
    if (required) opt->required();
  };
  const auto add_memory = [&s](CLI::App* c) {
    c->add_option("--memory-limit", s.memory, "Byte budget such as 512M or 4G (default: PANCAKE_MEM_LIMIT or 4G)");
  };
  const auto add_output = [&s](CLI::App* c) { c->add_option("--output,-o", s.output, "Write to this file instead of stdout"); };

  auto* table = app.add_subcommand("table", "Layer counts R_k(n) for each n in a range");
  add_graph(table, false);
  table->add_option("--n", s.n, "n or a..b");
  table->add_option("--format", s.format, "csv or json")->default_str("csv");
  add_memory(table);
  table->add_option("--workers", s.workers, "Worker threads")->check(CLI::PositiveNumber);
  table->add_option("--checkpoint", s.checkpoint, "Checkpoint file, rewritten after every layer");
  table->add_option("--resume", s.resume, "Continue from this checkpoint");
  table->add_option("--width", s.width, "Pad CSV rows to at least this many layer columns");
  add_output(table);

  auto* dist = app.add_subcommand("distance", "Flips needed to sort one stack");
  add_graph(dist, false);
  dist->add_option("stack", s.perm, kStackHelp)->required();
  add_memory(dist);
  add_output(dist);

  auto* sort = app.add_subcommand("sort", "An optimal flip sequence and the stacks it passes through");
  add_graph(sort, false);
  sort->add_option("stack", s.perm, kStackHelp)->required();
  add_memory(sort);
  add_output(sort);

  auto* cycles = app.add_subcommand("cycles", "Enumerate cycles through the identity and classify them");
  add_graph(cycles, true);
  cycles->add_option("--n", s.n, "Graph size")->required();
  cycles->add_option("--length", s.length, "Cycle length")->required();
  cycles->add_option("--format", s.format, "text or json")->default_str("text");
  cycles->add_option("--workers", s.workers, "Worker threads")->check(CLI::PositiveNumber);
  cycles->add_option("--node-budget", s.node_budget, "Refuse enumerations estimated above this many DFS paths");
  add_output(cycles);

  auto* formulas = app.add_subcommand("formulas", "Closed forms and identities");
  formulas->require_subcommand(1);
  auto* check = formulas->add_subcommand("check", "Compare a formula or identity with layer counts");
  check->add_option("--which", s.which, "Formula name (r4-plain, r5-burnt, ...), recurrence, expansion or all")->required();
  check->add_option("--k", s.k, "k or a..b (identities only)");
  check->add_option("--n", s.n, "n or a..b (default: every published row)");
  check->add_option("--source", s.source, "published or bfs")->default_str("published");
  check->add_option("--format", s.format, "text or json")->default_str("text");
  add_memory(check);
  check->add_option("--workers", s.workers, "Worker threads for --source bfs")->check(CLI::PositiveNumber);
  add_output(check);

  auto* fit = formulas->add_subcommand("fit", "Newton forward-difference fit of one column");
  add_graph(fit, true);
  fit->add_option("--k", s.k, "Column")->required();
  fit->add_option("--n", s.n, "a..b, consecutive")->required();
  fit->add_option("--source", s.source, "published or bfs")->default_str("published");
  fit->add_option("--format", s.format, "text or json")->default_str("text");
  add_memory(fit);
  add_output(fit);

  auto* eval = formulas->add_subcommand("eval", "Evaluate a registered formula");
  eval->add_option("--which", s.which, "Formula name")->required();
  eval->add_option("--n", s.n, "n or a..b")->required();
  add_output(eval);

  auto* list = formulas->add_subcommand("list", "Show the registered formulas");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    // CLI11 unpacks "[a,b]" into a vector; a leading space keeps a signed stack intact.
    for (auto& a : reversed) {
      if (!a.empty() && a.front() == '[') a.insert(a.begin(), ' ');
    }
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (s.format.empty()) s.format = table->parsed() ? "csv" : "text";

  try {
    if (table->parsed()) return cmd_table(s, out);
    if (dist->parsed()) return cmd_distance(s, out);
    if (sort->parsed()) return cmd_sort(s, out);
    if (cycles->parsed()) return cmd_cycles(s, out);
    if (check->parsed()) return cmd_formulas_check(s, out);
    if (fit->parsed()) return cmd_formulas_fit(s, out);
    if (eval->parsed()) return cmd_formulas_eval(s, out);
    if (list->parsed()) return cmd_formulas_list(out);
  } catch (const Failure& f) {
    err << "pancake: " << f.message << "\n";
    return f.code;
  } catch (const ParseError& e) {
    err << "pancake: " << e.what() << "\n";
    return kUsage;
  } catch (const MemoryLimitError& e) {
    err << "pancake: " << e.what() << "\n";
    return kUsage;
  } catch (const InfeasibleCensus& e) {
    err << "pancake: " << e.what() << "\n";
    return kUsage;
  } catch (const CheckpointError& e) {
    err << "pancake: " << e.what() << "\n";
    return kIoError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "pancake: " << e.what() << "\n";
    return kIoError;
  } catch (const std::ios_base::failure& e) {
    err << "pancake: " << e.what() << "\n";
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "pancake: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "pancake: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace pancake::cli
