#pragma once

#include <span>
#include <string>

#include "pancake/cycle_census.hpp"
#include "pancake/formula_lab.hpp"
#include "pancake/layer_search.hpp"

namespace pancake {

/// JSON renderings. Every document carries "format_version": 1. Integers that do
/// not fit in 64 bits are written as decimal strings.
inline constexpr int kReportFormatVersion = 1;

std::string to_json(std::span<const LayerProfile> profiles);
std::string to_json(const CensusReport& report);
std::string to_json(const CrosscheckReport& report);
std::string to_json(const NewtonPoly& poly, Kind graph, int k);
/// `name` is the identity ("recurrence" / "expansion"); `cells` pairs each (k, n) with its check.
struct IdentityCell {
  int k = 0;
  int n = 0;
  IdentityCheck check;
};
std::string to_json(std::string_view name, std::span<const IdentityCell> cells);

}  // namespace pancake
