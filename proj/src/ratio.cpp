// Copyright 2026 The consets Authors.
// SPDX-License-Identifier: Apache-2.0

#include "consets/ratio.hpp"

#include <stdexcept>

#include <boost/multiprecision/integer.hpp>

namespace consets {

Ratio::Ratio(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::domain_error("Ratio with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Ratio Ratio::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Ratio(BigInt(text), BigInt(1));
    return Ratio(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a ratio: '" + text + "'");
  }
}

std::string Ratio::str() const { return num_.str() + "/" + den_.str(); }

std::string Ratio::decimal(int places) const {
  BigInt scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const bool negative = num_ < 0;
  const BigInt magnitude = negative ? BigInt(-num_) : num_;
  const BigInt scaled = (2 * magnitude * scale + den_) / (2 * den_);
  const BigInt whole = scaled / scale;
  std::string out = (negative && scaled != 0) ? "-" : "";
  out += whole.str();
  if (places > 0) {
    std::string frac = BigInt(scaled % scale).str();
    frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');
    out += "." + frac;
  }
  return out;
}

double Ratio::to_double() const { return std::stod(decimal(17)); }

Ratio operator+(const Ratio& a, const Ratio& b) {
  return Ratio(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Ratio operator-(const Ratio& a, const Ratio& b) {
  return Ratio(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Ratio operator*(const Ratio& a, const Ratio& b) {
  return Ratio(a.num_ * b.num_, a.den_ * b.den_);
}

Ratio operator/(const Ratio& a, const Ratio& b) {
  if (b.num_ == 0) throw std::domain_error("Ratio division by zero");
  return Ratio(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
  const BigInt lhs = a.num_ * b.den_;
  const BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string to_decimal_string(const BigInt& value) { return value.str(); }

}  // namespace consets
