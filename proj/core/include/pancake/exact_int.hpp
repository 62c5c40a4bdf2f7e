#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pancake {

/// Exact signed integer used by formula evaluation. Every operation below checks overflow.
__extension__ typedef __int128 Int;

class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
/// Throws std::domain_error when b does not divide a.
Int exact_div(Int a, Int b);
Int ipow(Int base, int exp);
/// C(n, m) for any integer n (generalised: n(n-1)...(n-m+1)/m!), 0 when m < 0.
Int binomial(Int n, int m);

std::string to_string(Int v);
Int parse_int(std::string_view text);

}  // namespace pancake
