#include "pancake/cycle_families.hpp"

#include <array>
#include <stdexcept>

namespace pancake {
namespace {

using Params = std::vector<FamilyParams>;
using Labels = std::vector<int>;

Params only_k(int k) { return {FamilyParams{k, std::nullopt, std::nullopt}}; }

Params fixed_k(int k, int wanted) { return k == wanted ? only_k(k) : Params{}; }

// i over [lo, hi].
Params i_range(int k, int lo, int hi) {
  Params out;
  for (int i = lo; i <= hi; ++i) out.push_back({k, i, std::nullopt});
  return out;
}

// lo_i <= i < j <= hi_j.
Params ij_increasing(int k, int lo_i, int hi_j) {
  Params out;
  for (int i = lo_i; i <= hi_j; ++i) {
    for (int j = i + 1; j <= hi_j; ++j) out.push_back({k, i, j});
  }
  return out;
}

// 2 <= i <= j-2, i+2 <= j <= k-2.
Params ij_gap_two(int k) {
  Params out;
  for (int i = 2; i <= k; ++i) {
    for (int j = i + 2; j <= k - 2; ++j) out.push_back({k, i, j});
  }
  return out;
}

// lo <= i, j <= hi with i + j <= sum_max.
Params ij_bounded_sum(int k, int lo, int hi, int sum_max) {
  Params out;
  for (int i = lo; i <= hi; ++i) {
    for (int j = lo; j <= hi; ++j) {
      if (i + j <= sum_max) out.push_back({k, i, j});
    }
  }
  return out;
}

const std::array<CycleFamily, 26> kFamilies = {{
    // 6-cycle in P_n.
    {1, "P6-1", Kind::Plain, 6, 3, +[](int k) { return fixed_k(k, 3); },
     +[](const FamilyParams&) -> Labels { return {3, 2, 3, 2, 3, 2}; }},
    // 7-cycles in P_n.
    {2, "P7-1", Kind::Plain, 7, 4, +[](int k) { return only_k(k); },
     +[](const FamilyParams& p) -> Labels {
       const int k = p.k;
       return {k, k - 1, k, k - 1, k - 2, k, 2};
     }},
    // 8-cycles in P_n.
    {3, "P8-1", Kind::Plain, 8, 4, +[](int k) { return ij_increasing(k, 2, k - 1); },
     +[](const FamilyParams& p) -> Labels {
       const int k = p.k, i = *p.i, j = *p.j;
       return {k, j, i, j, k, k - j + i, i, k - j + i};
     }},
    {4, "P8-2", Kind::Plain, 8, 4, +[](int k) { return only_k(k); },
     +[](const FamilyParams& p) -> Labels {
       const int k = p.k;
       return {k, k - 1, 2, k - 1, k, 2, 3, 2};
     }},
    {5, "P8-3", Kind::Plain, 8, 4, +[](int k) { return i_range(k, 2, k - 2); },
     +[](const FamilyParams& p) -> Labels {
       const int k = p.k, i = *p.i;
       return {k, k - i, k - 1, i, k, k - i, k - 1, i};
     }},
    {6, "P8-4", Kind::Plain, 8, 5, +[](int k) { return i_range(k, 3, k - 2); },
     +[](const FamilyParams& p) -> Labels {
       const int k = p.k, i = *p.i;
       return {k, k - i + 1, k, i, k, k - i, k - 1, i - 1};
     }},
    {7, "P8-5", Kind::Plain, 8, 5, +[](int k) { return i_range(k, 3, k - 2); },
     +[](const FamilyParams& p) -> Labels {
       const int k = p.k, i = *p.i;
       return {k, k - 1, i - 1, k, k - i + 1, k - i, k, i};
     }},
    {8, "P8-6", Kind::Plain, 8, 5, +[](int k) { return i_range(k, 2, k - 3); },
     +[](const FamilyParams& p) -> Labels {
       const int k = p.k, i = *p.i;
       return {k, k - 1, k, k - i, k - i - 1, k, i, i + 1};
     }},
    {9, "P8-7", Kind::Plain, 8, 4, +[](int k) { return ij_increasing(k, 2, k - 1); },
     +[](const FamilyParams& p) -> Labels {
       const int k = p.k, i = *p.i, j = *p.j;
       return {k, k - j + 1, k, i, k, k - j + 1, k, i};
     }},
    {10, "P8-8", Kind::Plain, 8, 4, +[](int k) { return fixed_k(k, 4); },
     +[](const FamilyParams&) -> Labels { return {4, 3, 4, 3, 4, 3, 4, 3}; }},
    // 9-cycles in P_n.
    {11, "P9-1", Kind::Plain, 9, 5, +[](int k) { return i_range(k, 3, k - 2); },
     +[](const FamilyParams& p) -> Labels {
       const int k = p.k, i = *p.i;
       return {k, k - 1, i, k - 1, k, i, i - 1, i + 1, 2};
     }},
    {12, "P9-2", Kind::Plain, 9, 5, +[](int k) { return i_range(k, 4, k - 1); },
     +[](const FamilyParams& p) -> Labels {
       const int k = p.k, i = *p.i;
       return {2, k - i + 2, k, i - 2, i - 1, i, i - 1, k, k - i + 2};
     }},
    {13, "P9-3", Kind::Plain, 9, 5, +[](int k) { return ij_increasing(k, 2, k - 2); },
     +[](const FamilyParams& p) -> Labels {
       const int k = p.k, i = *p.i, j = *p.j;
       return {k, k - i, k - 1, k - j + i - 1, k - j, k, j - i + 1, j, i};
     }},
    {14, "P9-4", Kind::Plain, 9, 5, +[](int k) { return i_range(k, 3, k - 2); },
     +[](const FamilyParams& p) -> Labels {
       const int k = p.k, i = *p.i;
       return {k, k - 1, i, i - 1, k - 1, k, i, i + 1, 2};
     }},
    {15, "P9-5", Kind::Plain, 9, 4, +[](int k) { return only_k(k); },
     +[](const FamilyParams& p) -> Labels {
       const int k = p.k;
       return {k, k - 1, k - 2, k - 1, k - 2, k, 3, k, k - 2};
     }},
    {16, "P9-6", Kind::Plain, 9, 5, +[](int k) { return i_range(k, 2, k - 3); },
     +[](const FamilyParams& p) -> Labels {
       const int k = p.k, i = *p.i;
       return {k, k - 1, k - 2, i, k, 2, k, i, k - 1};
     }},
    {17, "P9-7", Kind::Plain, 9, 6, +[](int k) { return ij_gap_two(k); },
     +[](const FamilyParams& p) -> Labels {
       const int k = p.k, i = *p.i, j = *p.j;
       return {k, k - j + i, k, j, i, k, k - j, k - i, j - i};
     }},
    {18, "P9-8", Kind::Plain, 9, 6, +[](int k) { return ij_gap_two(k); },
     +[](const FamilyParams& p) -> Labels {
       const int k = p.k, i = *p.i, j = *p.j;
       return {k, k - j + i, k - j, k, j, i, k, k - i, j - i};
     }},
    {19, "P9-9", Kind::Plain, 9, 4, +[](int k) { return ij_increasing(k, 2, k - 1); },
     +[](const FamilyParams& p) -> Labels {
       const int k = p.k, i = *p.i, j = *p.j;
       return {k, k - j + i, k - j + 1, k, j, i, k, k - i + 1, j - i + 1};
     }},
    {20, "P9-10", Kind::Plain, 9, 5, +[](int k) { return only_k(k); },
     +[](const FamilyParams& p) -> Labels {
       const int k = p.k;
       return {k, k - 1, k, k - 1, k, k - 1, k - 3, k, 3};
     }},
    // 8-cycles in BP_n.
    {23, "BP8-1", Kind::Burnt, 8, 3, +[](int k) { return ij_increasing(k, 1, k - 1); },
     +[](const FamilyParams& p) -> Labels {
       const int k = p.k, i = *p.i, j = *p.j;
       return {k, j, i, j, k, k - j + i, i, k - j + i};
     }},
    {24, "BP8-2", Kind::Burnt, 8, 4, +[](int k) { return ij_bounded_sum(k, 2, k - 2, k); },
     +[](const FamilyParams& p) -> Labels {
       const int k = p.k, i = *p.i, j = *p.j;
       return {k, j, k, i, k, j, k, i};
     }},
    {25, "BP8-3", Kind::Burnt, 8, 3, +[](int k) { return i_range(k, 2, k - 1); },
     +[](const FamilyParams& p) -> Labels {
       const int k = p.k, i = *p.i;
       return {k, i, k, 1, k, i, k, 1};
     }},
    {26, "BP8-4", Kind::Burnt, 8, 2, +[](int k) { return only_k(k); },
     +[](const FamilyParams& p) -> Labels {
       const int k = p.k;
       return {k, 1, k, 1, k, 1, k, 1};
     }},
    // 9-cycles in BP_n.
    {27, "BP9-1", Kind::Burnt, 9, 3, +[](int k) { return ij_bounded_sum(k, 1, k - 2, k - 1); },
     +[](const FamilyParams& p) -> Labels {
       const int k = p.k, i = *p.i, j = *p.j;
       return {k, k - i, k, k - j, k - i - j, k, j, i + j, i};
     }},
    {28, "BP9-2", Kind::Burnt, 9, 3, +[](int k) { return ij_bounded_sum(k, 1, k - 2, k - 1); },
     +[](const FamilyParams& p) -> Labels {
       const int k = p.k, i = *p.i, j = *p.j;
       return {k, i + j, i, k, k - i, j, k, k - j, k - i - j};
     }},
}};

}  // namespace

std::string FamilyParams::to_string() const {
  std::string out = "k=" + std::to_string(k);
  if (i) out += ",i=" + std::to_string(*i);
  if (j) out += ",j=" + std::to_string(*j);
  return out;
}

std::vector<FamilyParams> CycleFamily::instances(int n) const {
  std::vector<FamilyParams> out;
  for (int k = min_k; k <= n; ++k) {
    auto batch = instances_for_k(k);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

std::span<const CycleFamily> cycle_families() { return kFamilies; }

std::vector<const CycleFamily*> families_for(Kind kind, int length) {
  std::vector<const CycleFamily*> out;
  for (const auto& f : kFamilies) {
    if (f.kind == kind && f.length == length) out.push_back(&f);
  }
  return out;
}

const CycleFamily& family_by_number(int number) {
  for (const auto& f : kFamilies) {
    if (f.number == number) return f;
  }
  throw std::out_of_range("no cycle family numbered " + std::to_string(number));
}

}  // namespace pancake
