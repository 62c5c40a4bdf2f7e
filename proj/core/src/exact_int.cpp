#include "pancake/exact_int.hpp"

#include <algorithm>

namespace pancake {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("128-bit overflow in addition");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("128-bit overflow in subtraction");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("128-bit overflow in multiplication");
  return r;
}

Int exact_div(Int a, Int b) {
  if (b == 0) throw std::domain_error("division by zero");
  if (a % b != 0) throw std::domain_error(to_string(a) + " is not divisible by " + to_string(b));
  return a / b;
}

Int ipow(Int base, int exp) {
  if (exp < 0) throw std::domain_error("negative exponent");
  Int r = 1;
  for (int e = 0; e < exp; ++e) r = checked_mul(r, base);
  return r;
}

Int binomial(Int n, int m) {
  if (m < 0) return 0;
  // Product of m consecutive integers divided step by step stays exact:
  // after step t the partial result is C(n, t), an integer.
  Int r = 1;
  for (int t = 0; t < m; ++t) {
    r = checked_mul(r, n - t);
    r = exact_div(r, t + 1);
  }
  return r;
}

std::string to_string(Int v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  std::string digits;
  // Work with negative remainders so the minimum value does not overflow.
  while (v != 0) {
    const int d = static_cast<int>(v % 10);
    digits.push_back(static_cast<char>('0' + (d < 0 ? -d : d)));
    v /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Int parse_int(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  bool negative = false;
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
  Int v = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c < '0' || c > '9') throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
    v = checked_add(checked_mul(v, 10), negative ? -(c - '0') : (c - '0'));
  }
  return v;
}

}  // namespace pancake
