// Copyright 2026 The consets Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace consets {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number kept in lowest terms with a positive denominator.
class Ratio {
 public:
  Ratio() : num_(0), den_(1) {}
  Ratio(BigInt num, BigInt den = 1);  // NOLINT(google-explicit-constructor)
  Ratio(long long num, long long den = 1) : Ratio(BigInt(num), BigInt(den)) {}  // NOLINT

  /// Parses "p/q" or "p".
  static Ratio parse(const std::string& text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  /// "p/q", always with the denominator ("2/1" for two).
  std::string str() const;
  /// Rounded half away from zero to `places` digits after the point.
  std::string decimal(int places = 6) const;
  double to_double() const;

  friend Ratio operator+(const Ratio& a, const Ratio& b);
  friend Ratio operator-(const Ratio& a, const Ratio& b);
  friend Ratio operator*(const Ratio& a, const Ratio& b);
  friend Ratio operator/(const Ratio& a, const Ratio& b);

  friend bool operator==(const Ratio& a, const Ratio& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b);

 private:
  BigInt num_;
  BigInt den_;
};

std::string to_decimal_string(const BigInt& value);

}  // namespace consets
