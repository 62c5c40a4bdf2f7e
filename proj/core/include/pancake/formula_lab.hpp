#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pancake/cayley.hpp"
#include "pancake/exact_int.hpp"
#include "pancake/layer_search.hpp"

namespace pancake {

enum class FormulaStatus { Proved, Conjectured, PublishedElsewhere };

std::string_view to_string(FormulaStatus s);

/// Polynomial in n stored as a product of integer factors over one denominator.
/// Factor coefficients are in ascending powers of n.
struct RationalPolynomial {
  std::vector<std::vector<Int>> factors;
  Int denominator = 1;

  /// Throws std::domain_error if the denominator does not divide the product exactly.
  Int operator()(Int n) const;
  int degree() const;
};

struct FormulaSpec {
  std::string name;
  int k = 0;
  Kind graph = Kind::Plain;
  FormulaStatus status = FormulaStatus::Proved;
  int min_n = 1;
  std::map<int, Int> exceptions;
  RationalPolynomial polynomial;
};

/// All registered formulas, in a fixed order.
std::span<const FormulaSpec> formula_registry();

class UnknownFormula : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Case-insensitive lookup; '-' and '_' are interchangeable and a missing
/// "_conj" suffix is tolerated ("r5-burnt" finds R5_burnt_conj).
const FormulaSpec& find_formula(std::string_view name);

struct FormulaValue {
  /// Empty when n lies below the validity range and no exception is stored.
  std::optional<Int> value;
  bool from_exception = false;
  FormulaStatus status = FormulaStatus::Proved;

  bool out_of_validity() const { return !value.has_value(); }
};

FormulaValue eval_formula(const FormulaSpec& f, int n);
FormulaValue eval_formula(std::string_view name, int n);

/// Sparse (n, k) -> count table. Cells can be unknown.
class LayerTable {
 public:
  LayerTable() = default;
  explicit LayerTable(Kind kind) : kind_(kind) {}

  Kind kind() const { return kind_; }

  /// Stores a row; when `zero_beyond` is set, cells past the row read as 0.
  void set_row(int n, std::vector<std::optional<Int>> cells, bool zero_beyond);
  void set(int n, int k, Int value);

  std::optional<Int> get(int n, int k) const;
  std::vector<int> rows() const;
  /// Largest k stored explicitly in row n (-1 if the row is absent).
  int width(int n) const;

  static LayerTable from_profiles(std::span<const LayerProfile> profiles);

 private:
  struct Row {
    std::vector<std::optional<Int>> cells;
    bool zero_beyond = false;
  };
  Kind kind_ = Kind::Plain;
  std::map<int, Row> rows_;
};

enum class CellOutcome { Equal, Mismatch, OutOfValidity, NoData };
std::string_view to_string(CellOutcome o);

struct CrosscheckRow {
  int n = 0;
  std::optional<Int> formula;
  std::optional<Int> observed;
  bool from_exception = false;
  CellOutcome outcome = CellOutcome::NoData;
};

struct CrosscheckReport {
  std::string formula;
  int k = 0;
  Kind graph = Kind::Plain;
  FormulaStatus status = FormulaStatus::Proved;
  std::vector<CrosscheckRow> rows;

  std::size_t mismatches() const;
  std::size_t compared() const;
  /// "verified" (proved or published, all equal), "consistent" (conjectured,
  /// all equal), "mismatch", or "no-data".
  std::string verdict() const;
};

/// Compares the formula against every row of `table` whose n lies in [n_lo, n_hi].
CrosscheckReport crosscheck(const FormulaSpec& f, const LayerTable& table, int n_lo = 1, int n_hi = 1'000);
/// Profiles must all be of the formula's graph kind (std::invalid_argument otherwise).
CrosscheckReport crosscheck(const FormulaSpec& f, std::span<const LayerProfile> profiles);

/// p(n) = sum_m coefficients[m] * C(n - anchor, m).
struct NewtonPoly {
  int anchor = 0;
  std::vector<Int> coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  Int operator()(Int n) const;
};

class NewtonFitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Forward-difference fit over consecutive n. The degree is the lowest order d
/// whose differences are constant across at least two values (d <= points - 2).
NewtonPoly fit_newton(std::span<const std::pair<int, Int>> values);

enum class Verdict { Holds, Fails, InsufficientData };
std::string_view to_string(Verdict v);

struct IdentityCheck {
  Verdict verdict = Verdict::InsufficientData;
  std::optional<Int> lhs;  // table value R(n)
  std::optional<Int> rhs;  // value of the sum
  std::string detail;
};

class MissingTableData : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// R_k(n) = sum_{i=1}^{k+1} (-1)^{i+1} C(k+1, i) R_k(n-i), for k <= 6 with every R_k(n-i) > 0.
/// Throws std::invalid_argument for k outside [0, 6].
IdentityCheck check_binomial_recurrence(int k, int n, const LayerTable& table);

/// Gregory-Newton expansion of R_k^B(n) through the base values R_k^B(1..k):
/// R_k^B(n) = sum_{j=1}^k ( sum_{i=0}^{k-j} (-1)^i C(i+j, i) C(n, i+j) ) R_k^B(j).
/// Bases with j > n have zero coefficient and are not read, so for n <= k the
/// identity reduces to R_k^B(n) = R_k^B(n). Throws MissingTableData when a needed
/// base value or R_k^B(n) is absent.
IdentityCheck check_gregory_newton(int k, int n, const LayerTable& table);

}  // namespace pancake
