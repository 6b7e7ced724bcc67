#include "ktorus/scalar.hpp"

namespace ktorus {

BigInt parse_bigint(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty()) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  for (char c : digits)
    if (c < '0' || c > '9')
      throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  const BigInt v{std::string(digits)};
  return negative ? BigInt(-v) : v;
}

}  // namespace ktorus
