#pragma once

#include "pancake/formula_lab.hpp"

namespace pancake {

/// Published layer counts, columns k = 0..11. Blank published cells stay unknown
/// and nothing past k = 11 is assumed.
const LayerTable& published_table(Kind kind);

/// Largest n with a published row (21 for plain, 25 for burnt).
int published_max_n(Kind kind);

}  // namespace pancake
