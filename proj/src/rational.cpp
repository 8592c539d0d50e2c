#include "seqdens/rational.hpp"

#include "seqdens/error.hpp"

#include <algorithm>
#include <cctype>

namespace seqdens {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw ParseError("not a rational: '" + std::string(whole) + "'");
  }
  BigInt value{std::string(s)};
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  const BigInt num = parse_integer(text.substr(0, slash), text);
  const std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) {
    throw ParseError("denominator must be a positive integer: '" + std::string(text) + "'");
  }
  BigInt den((std::string(den_text)));
  if (den == 0) {
    throw ParseError("zero denominator: '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::string to_fraction_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += '/';
    s += denominator(r).str();
  }
  return s;
}

BigInt floor_to_int(const Rational& r) {
  const BigInt n = numerator(r);
  const BigInt d = denominator(r);
  BigInt q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) {
    --q;
  }
  return q;
}

BigInt ceil_to_int(const Rational& r) { return -floor_to_int(-r); }

std::string to_decimal_string(const Rational& r, int significant_digits) {
  if (significant_digits < 1) {
    throw std::invalid_argument("significant_digits must be >= 1");
  }
  if (r == 0) {
    return "0";
  }
  const bool negative = r < 0;
  const BigInt a = negative ? BigInt(-numerator(r)) : numerator(r);
  const BigInt b = denominator(r);

  // exponent e with 10^e <= a/b < 10^(e+1)
  int e = static_cast<int>(a.str().size()) - static_cast<int>(b.str().size());
  auto pow10 = [](int k) {
    BigInt p = 1;
    for (int i = 0; i < k; ++i) p *= 10;
    return p;
  };
  if (e >= 0 ? (a < b * pow10(e)) : (a * pow10(-e) < b)) {
    --e;
  }

  // digits = round(a/b * 10^(sig-1-e)), half away from zero
  const int shift = significant_digits - 1 - e;
  BigInt num = a, den = b;
  if (shift >= 0) {
    num *= pow10(shift);
  } else {
    den *= pow10(-shift);
  }
  BigInt digits = (2 * num + den) / (2 * den);
  std::string ds = digits.str();
  if (static_cast<int>(ds.size()) > significant_digits) {  // rounding carried over
    ++e;
    ds.pop_back();
  }

  std::string out;
  if (e >= significant_digits - 1) {
    out = ds + std::string(e - significant_digits + 1, '0');
  } else if (e >= 0) {
    out = ds.substr(0, e + 1) + "." + ds.substr(e + 1);
  } else {
    out = "0." + std::string(-e - 1, '0') + ds;
  }
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return negative ? "-" + out : out;
}

}  // namespace seqdens
