#include "pancake/formula_lab.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace pancake {
namespace {

using Coeffs = std::vector<Int>;

// n - a as an ascending-coefficient factor.
Coeffs minus(Int a) { return {-a, 1}; }
const Coeffs kN = {0, 1};

FormulaSpec make(std::string name, int k, Kind graph, FormulaStatus status, int min_n,
                 std::vector<Coeffs> factors, Int denominator, std::map<int, Int> exceptions = {}) {
  FormulaSpec f;
  f.name = std::move(name);
  f.k = k;
  f.graph = graph;
  f.status = status;
  f.min_n = min_n;
  f.exceptions = std::move(exceptions);
  f.polynomial = RationalPolynomial{std::move(factors), denominator};
  return f;
}

std::vector<FormulaSpec> build_registry() {
  using enum FormulaStatus;
  std::vector<FormulaSpec> r;

  // Pancake graph P_n.
  r.push_back(make("R1_plain", 1, Kind::Plain, Proved, 1, {minus(1)}, 1));
  r.push_back(make("R2_plain", 2, Kind::Plain, Proved, 3, {minus(1), minus(2)}, 1));
  // (n-1)(n-2)^2 - 1, expanded.
  r.push_back(make("R3_plain", 3, Kind::Plain, Proved, 3, {{-5, 8, -5, 1}}, 1));
  r.push_back(make("R4_plain", 4, Kind::Plain, Proved, 4, {{-34, 6, 29, -15, 2}}, 2));
  r.push_back(make("R5_plain", 5, Kind::Plain, PublishedElsewhere, 5, {{1590, -1724, 296, 173, -65, 6}}, 6));
  r.push_back(make("R6_plain", 6, Kind::Plain, PublishedElsewhere, 6,
                   {{-58020, 171068, -91400, 10775, 3140, -883, 60}}, 60));
  r.push_back(make("R7_plain", 7, Kind::Plain, PublishedElsewhere, 8,
                   {{-850320, -4550196, 4476344, -1372445, 109275, 21881, -4619, 240}}, 240,
                   {{6, 2}, {7, 1016}}));
  r.push_back(make("R8_plain", 8, Kind::Plain, PublishedElsewhere, 8,
                   {{844945920, -267373812, -561161062, 364661948, -79101715, 4519067, 759857, -122683, 5040}},
                   5040, {{7, 35}}));

  // Burnt pancake graph BP_n.
  r.push_back(make("R1_burnt", 1, Kind::Burnt, Proved, 1, {kN}, 1));
  r.push_back(make("R2_burnt", 2, Kind::Burnt, Proved, 1, {kN, minus(1)}, 1));
  r.push_back(make("R3_burnt", 3, Kind::Burnt, Proved, 1, {kN, minus(1), minus(1)}, 1));
  r.push_back(make("R4_burnt", 4, Kind::Burnt, Proved, 1, {kN, minus(1), minus(1), {-3, 2}}, 2));
  r.push_back(make("R5_burnt_conj", 5, Kind::Burnt, Conjectured, 1, {kN, minus(1), minus(2), {3, -17, 6}}, 6));
  r.push_back(make("R6_burnt_conj", 6, Kind::Burnt, Conjectured, 1,
                   {kN, minus(1), minus(2), {284, 401, -343, 60}}, 60));
  r.push_back(make("R7_burnt_conj", 7, Kind::Burnt, Conjectured, 1,
                   {kN, minus(1), minus(2), minus(3), {5104, 925, -1499, 240}}, 240));
  r.push_back(make("R8_burnt_conj", 8, Kind::Burnt, Conjectured, 1,
                   {kN, minus(1), minus(2), minus(3), {-1027242, 314716, 113415, -52123, 5040}}, 5040));
  r.push_back(make("R9_burnt_conj", 9, Kind::Burnt, Conjectured, 1,
                   {minus(1), minus(2), minus(3), minus(4), {0, -18991470, 6638777, 644746, -444061, 40320}},
                   40320));
  return r;
}

const std::vector<FormulaSpec>& registry() {
  static const std::vector<FormulaSpec> r = build_registry();
  return r;
}

std::string normalized(std::string_view name) {
  std::string out;
  for (char c : name) out.push_back(c == '-' ? '_' : static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

Int eval_factor(const Coeffs& c, Int n) {
  Int acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = checked_add(checked_mul(acc, n), *it);
  return acc;
}

}  // namespace

std::string_view to_string(FormulaStatus s) {
  switch (s) {
    case FormulaStatus::Proved: return "proved";
    case FormulaStatus::Conjectured: return "conjectured";
    case FormulaStatus::PublishedElsewhere: return "published-elsewhere";
  }
  return "?";
}

std::string_view to_string(CellOutcome o) {
  switch (o) {
    case CellOutcome::Equal: return "equal";
    case CellOutcome::Mismatch: return "mismatch";
    case CellOutcome::OutOfValidity: return "out-of-validity";
    case CellOutcome::NoData: return "no-data";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::InsufficientData: return "insufficient-data";
  }
  return "?";
}

Int RationalPolynomial::operator()(Int n) const {
  Int product = 1;
  for (const auto& f : factors) product = checked_mul(product, eval_factor(f, n));
  return exact_div(product, denominator);
}

int RationalPolynomial::degree() const {
  int d = 0;
  for (const auto& f : factors) d += static_cast<int>(f.size()) - 1;
  return d;
}

std::span<const FormulaSpec> formula_registry() { return registry(); }

const FormulaSpec& find_formula(std::string_view name) {
  const std::string key = normalized(name);
  for (const auto& f : registry()) {
    if (normalized(f.name) == key || normalized(f.name) == key + "_conj") return f;
  }
  throw UnknownFormula("unknown formula '" + std::string(name) + "'");
}

FormulaValue eval_formula(const FormulaSpec& f, int n) {
  FormulaValue v;
  v.status = f.status;
  if (auto e = f.exceptions.find(n); e != f.exceptions.end()) {
    v.value = e->second;
    v.from_exception = true;
  } else if (n >= f.min_n) {
    v.value = f.polynomial(n);
  }
  return v;
}

FormulaValue eval_formula(std::string_view name, int n) { return eval_formula(find_formula(name), n); }

// ---------------------------------------------------------------------------

void LayerTable::set_row(int n, std::vector<std::optional<Int>> cells, bool zero_beyond) {
  rows_[n] = Row{std::move(cells), zero_beyond};
}

void LayerTable::set(int n, int k, Int value) {
  auto& row = rows_[n];
  if (static_cast<int>(row.cells.size()) <= k) row.cells.resize(static_cast<std::size_t>(k) + 1);
  row.cells[static_cast<std::size_t>(k)] = value;
}

std::optional<Int> LayerTable::get(int n, int k) const {
  if (k < 0) return std::nullopt;
  const auto it = rows_.find(n);
  if (it == rows_.end()) return std::nullopt;
  const Row& row = it->second;
  if (static_cast<std::size_t>(k) < row.cells.size()) return row.cells[static_cast<std::size_t>(k)];
  if (row.zero_beyond) return Int{0};
  return std::nullopt;
}

std::vector<int> LayerTable::rows() const {
  std::vector<int> out;
  for (const auto& [n, row] : rows_) out.push_back(n);
  return out;
}

int LayerTable::width(int n) const {
  const auto it = rows_.find(n);
  return it == rows_.end() ? -1 : static_cast<int>(it->second.cells.size()) - 1;
}

LayerTable LayerTable::from_profiles(std::span<const LayerProfile> profiles) {
  LayerTable t(profiles.empty() ? Kind::Plain : profiles.front().graph.kind);
  for (const auto& p : profiles) {
    if (p.graph.kind != t.kind()) throw std::invalid_argument("profiles mix plain and burnt graphs");
    std::vector<std::optional<Int>> cells;
    for (auto c : p.counts) cells.emplace_back(static_cast<Int>(c));
    t.set_row(p.graph.n, std::move(cells), p.complete);
  }
  return t;
}

// ---------------------------------------------------------------------------

std::size_t CrosscheckReport::mismatches() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.outcome == CellOutcome::Mismatch; }));
}

std::size_t CrosscheckReport::compared() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const auto& r) {
    return r.outcome == CellOutcome::Equal || r.outcome == CellOutcome::Mismatch;
  }));
}

std::string CrosscheckReport::verdict() const {
  if (mismatches() > 0) return "mismatch";
  if (compared() == 0) return "no-data";
  return status == FormulaStatus::Conjectured ? "consistent" : "verified";
}

CrosscheckReport crosscheck(const FormulaSpec& f, const LayerTable& table, int n_lo, int n_hi) {
  if (table.kind() != f.graph) {
    throw std::invalid_argument("formula " + f.name + " is for " + std::string(to_string(f.graph)) +
                                " graphs but the data is " + std::string(to_string(table.kind())));
  }
  CrosscheckReport report;
  report.formula = f.name;
  report.k = f.k;
  report.graph = f.graph;
  report.status = f.status;
  for (int n : table.rows()) {
    if (n < n_lo || n > n_hi) continue;
    CrosscheckRow row;
    row.n = n;
    row.observed = table.get(n, f.k);
    const FormulaValue v = eval_formula(f, n);
    row.formula = v.value;
    row.from_exception = v.from_exception;
    if (!v.value) {
      row.outcome = CellOutcome::OutOfValidity;
    } else if (!row.observed) {
      row.outcome = CellOutcome::NoData;
    } else {
      row.outcome = *row.observed == *v.value ? CellOutcome::Equal : CellOutcome::Mismatch;
    }
    report.rows.push_back(row);
  }
  return report;
}

CrosscheckReport crosscheck(const FormulaSpec& f, std::span<const LayerProfile> profiles) {
  for (const auto& p : profiles) {
    if (p.graph.kind != f.graph) {
      throw std::invalid_argument("profile for " + p.graph.name() + " cannot check " + f.name);
    }
  }
  LayerTable t(f.graph);
  if (!profiles.empty()) t = LayerTable::from_profiles(profiles);
  return crosscheck(f, t);
}

// ---------------------------------------------------------------------------

Int NewtonPoly::operator()(Int n) const {
  Int acc = 0;
  for (std::size_t m = 0; m < coefficients.size(); ++m) {
    acc = checked_add(acc, checked_mul(coefficients[m], binomial(n - anchor, static_cast<int>(m))));
  }
  return acc;
}

NewtonPoly fit_newton(std::span<const std::pair<int, Int>> values) {
  if (values.size() < 2) throw NewtonFitError("need at least two points to fit");
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i].first != values[i - 1].first + 1) {
      throw NewtonFitError("fit needs consecutive n; got " + std::to_string(values[i - 1].first) + " then " +
                           std::to_string(values[i].first));
    }
  }
  // Rows of the forward-difference table; row d holds the d-th differences.
  std::vector<std::vector<Int>> table;
  std::vector<Int> row;
  for (const auto& [n, v] : values) row.push_back(v);
  table.push_back(row);
  while (table.back().size() >= 2) {
    const auto& prev = table.back();
    const bool constant = std::all_of(prev.begin(), prev.end(), [&](Int x) { return x == prev.front(); });
    if (constant) break;
    std::vector<Int> next;
    for (std::size_t i = 1; i < prev.size(); ++i) next.push_back(checked_sub(prev[i], prev[i - 1]));
    table.push_back(std::move(next));
  }
  const auto& last = table.back();
  const bool constant = last.size() >= 2 && std::all_of(last.begin(), last.end(), [&](Int x) { return x == last.front(); });
  if (!constant) {
    throw NewtonFitError("differences do not stabilise within " + std::to_string(values.size()) + " points");
  }
  NewtonPoly p;
  p.anchor = values.front().first;
  for (const auto& r : table) p.coefficients.push_back(r.front());
  // A zero top difference means the polynomial is of lower degree (only possible for the zero sequence).
  while (p.coefficients.size() > 1 && p.coefficients.back() == 0) p.coefficients.pop_back();
  return p;
}

// ---------------------------------------------------------------------------

IdentityCheck check_binomial_recurrence(int k, int n, const LayerTable& table) {
  if (k < 0 || k > 6) {
    throw std::invalid_argument("the binomial recurrence is only established for 0 <= k <= 6 (got k = " +
                                std::to_string(k) + ")");
  }
  IdentityCheck check;
  check.lhs = table.get(n, k);
  if (!check.lhs) {
    check.detail = "R_" + std::to_string(k) + "(" + std::to_string(n) + ") missing";
    return check;
  }
  Int sum = 0;
  for (int i = 1; i <= k + 1; ++i) {
    const auto term = table.get(n - i, k);
    if (n - i < 1 || !term) {
      check.detail = "R_" + std::to_string(k) + "(" + std::to_string(n - i) + ") missing";
      return check;
    }
    if (*term <= 0) {
      check.detail = "R_" + std::to_string(k) + "(" + std::to_string(n - i) + ") = " + to_string(*term) +
                     " violates positivity";
      return check;
    }
    const Int signed_coeff = (i % 2 == 1 ? 1 : -1) * binomial(k + 1, i);
    sum = checked_add(sum, checked_mul(signed_coeff, *term));
  }
  check.rhs = sum;
  check.verdict = sum == *check.lhs ? Verdict::Holds : Verdict::Fails;
  return check;
}

IdentityCheck check_gregory_newton(int k, int n, const LayerTable& table) {
  if (k < 1 || n < 1) throw std::invalid_argument("identity requires k, n >= 1");
  IdentityCheck check;
  check.lhs = table.get(n, k);
  if (!check.lhs) {
    throw MissingTableData("R^B_" + std::to_string(k) + "(" + std::to_string(n) + ") not in table");
  }
  Int sum = 0;
  // C(n, i + j) vanishes once j > n, so only the bases up to min(n, k) take part.
  for (int j = 1; j <= std::min(k, n); ++j) {
    const auto base = table.get(j, k);
    if (!base) throw MissingTableData("base value R^B_" + std::to_string(k) + "(" + std::to_string(j) + ") not in table");
    Int coeff = 0;
    for (int i = 0; i <= k - j; ++i) {
      const Int term = checked_mul(binomial(i + j, i), binomial(n, i + j));
      coeff = i % 2 == 0 ? checked_add(coeff, term) : checked_sub(coeff, term);
    }
    sum = checked_add(sum, checked_mul(coeff, *base));
  }
  check.rhs = sum;
  check.verdict = sum == *check.lhs ? Verdict::Holds : Verdict::Fails;
  return check;
}

}  // namespace pancake
