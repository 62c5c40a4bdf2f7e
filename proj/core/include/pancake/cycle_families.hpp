#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pancake/cayley.hpp"

namespace pancake {

/// Bound variables of a family instance. Families without i or j leave them empty.
struct FamilyParams {
  int k = 0;
  std::optional<int> i;
  std::optional<int> j;

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
  std::string to_string() const;
};

/// One parametrised canonical cycle form.
///
/// Numbers 1-20 are the P_n forms (6-, 7-, 8- and 9-cycles), 23-26 the BP_n
/// 8-cycle forms and 27-28 the BP_n 9-cycle forms.
struct CycleFamily {
  int number = 0;
  std::string_view label;  // e.g. "P8-3", "BP9-1"
  Kind kind = Kind::Plain;
  int length = 0;
  int min_k = 0;
  /// Parameter instances with k fixed, in ascending (i, j) order, honouring every stated inequality.
  std::vector<FamilyParams> (*instances_for_k)(int k) = nullptr;
  /// Label sequence of the instance, transcribed index-for-index.
  std::vector<int> (*labels)(const FamilyParams& p) = nullptr;

  /// Every in-range instance with min_k <= k <= n, ordered by (k, i, j).
  std::vector<FamilyParams> instances(int n) const;
};

std::span<const CycleFamily> cycle_families();

/// The families describing cycles of `length` in graphs of `kind`; empty when none are known.
std::vector<const CycleFamily*> families_for(Kind kind, int length);

/// Throws std::out_of_range for an unknown family number.
const CycleFamily& family_by_number(int number);

}  // namespace pancake
