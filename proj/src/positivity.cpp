#include "ktorus/positivity.hpp"

#include <sstream>
#include <stdexcept>

namespace ktorus {

ThetaInterval::ThetaInterval(BigRational l, BigRational h) : lo(std::move(l)), hi(std::move(h)) {
  if (!(lo > 0) || !(hi < 1)) throw std::invalid_argument("theta interval must lie inside (0,1)");
  if (lo > hi) throw std::invalid_argument("theta interval has lo > hi");
}

BigRational ThetaInterval::parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const BigInt den = parse_bigint(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in " + text);
    return BigRational(parse_bigint(text.substr(0, slash)), den);
  }
  const auto dot = text.find('.');
  if (dot == std::string::npos) return BigRational(parse_bigint(text));
  const std::string whole = text.substr(0, dot), frac = text.substr(dot + 1);
  if (frac.empty() || frac.front() == '-' || frac.front() == '+')
    throw std::invalid_argument("not a rational number: " + text);
  BigInt den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  const bool negative = !whole.empty() && whole.front() == '-';
  const std::string whole_digits = whole.empty() || whole == "-" || whole == "+" ? "0" : whole;
  BigInt num = parse_bigint(whole_digits);
  num = abs_value(num) * den + parse_bigint(frac);
  if (negative) num = -num;
  return BigRational(num, den);
}

namespace {

bool coordinates_vanish(const K0Element& e, const AbelianGroup& group) {
  if (e.a != 0 || e.b != 0) return false;
  for (const BigInt& x : e.c)
    if (x != 0) return false;
  for (std::size_t i = 0; i < e.t.size(); ++i)
    if (e.t[i] % group.torsion[i] != 0) return false;
  return true;
}

}  // namespace

Sign k0_sign(const K0Element& e, const ThetaInterval& theta, const AbelianGroup& group) {
  if (group.free_rank < 2)
    throw std::invalid_argument("positive cone needs a group of free rank >= 2");
  if (e.c.size() != group.free_rank - 2)
    throw std::invalid_argument("element has the wrong number of free coordinates");
  if (e.t.size() != group.torsion.size())
    throw std::invalid_argument("element has the wrong number of torsion coordinates");
  if (coordinates_vanish(e, group)) return Sign::zero;
  // a + bθ is monotone in θ, so its range over the enclosure is spanned by
  // the two endpoint values.
  const BigRational at_lo = BigRational(e.a) + BigRational(e.b) * theta.lo;
  const BigRational at_hi = BigRational(e.a) + BigRational(e.b) * theta.hi;
  if (at_lo > 0 && at_hi > 0) return Sign::positive;
  if (at_lo < 0 && at_hi < 0) return Sign::negative;
  return Sign::indeterminate;
}

std::optional<bool> in_positive_cone(const K0Element& e, const ThetaInterval& theta,
                                     const AbelianGroup& group) {
  switch (k0_sign(e, theta, group)) {
    case Sign::positive:
    case Sign::zero:
      return true;
    case Sign::negative:
      return false;
    case Sign::indeterminate:
      if (e.a == 0 && e.b == 0) return false;
      return std::nullopt;
  }
  return std::nullopt;
}

std::string to_string(Sign s) {
  switch (s) {
    case Sign::positive:
      return "positive";
    case Sign::zero:
      return "zero";
    case Sign::negative:
      return "negative";
    case Sign::indeterminate:
      return "indeterminate";
  }
  return "?";
}

std::string describe(const K0Element& e, Sign s) {
  switch (s) {
    case Sign::positive:
      return "a + b*theta > 0, in K0+";
    case Sign::zero:
      return "zero element, in K0+";
    case Sign::negative:
      return "a + b*theta < 0, not in K0+";
    case Sign::indeterminate:
      if (e.a == 0 && e.b == 0) return "zero-trace nonzero element, not in K0+";
      return "theta enclosure too wide to decide the sign of a + b*theta";
  }
  return "";
}

TraceRangeReport trace_range_report(const TorusAutomorphism& a, const ThetaInterval& theta) {
  TraceRangeReport out{k_groups(a), theta, false, {}, "Z + Z*theta", std::nullopt};
  out.furstenberg_class = out.k.unipotent_max_degree;
  if (!out.furstenberg_class) {
    out.warnings.push_back(
        "matrix is not unipotent of maximal degree; cone description omitted");
    return out;
  }
  std::ostringstream cone;
  cone << "K0+ = {(a[1] + b[p_theta], c, t) in (Z[1] + Z[p_theta]) + Z^"
       << (out.k.k0.free_rank - 2);
  if (!out.k.k0.is_free()) cone << " + T";
  cone << " : a + b*theta > 0} U {0}";
  out.cone = cone.str();
  return out;
}

}  // namespace ktorus
