// Copyright 2026 the bdl authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BDL_PRIORITY_HPP
#define BDL_PRIORITY_HPP

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bdl {

/// Rule priority: a finite non-negative rational, or +infinity.
/// Infinity is reserved for assertions and strict derivations; default
/// rules always carry finite orders. Larger value = higher priority.
class Priority {
 public:
  Priority() : infinite_(false), num_(0), den_(1) {}

  static Priority infinity() {
    Priority p;
    p.infinite_ = true;
    return p;
  }

  static Priority rational(std::int64_t num, std::int64_t den) {
    if (den <= 0 || num < 0) throw std::invalid_argument("priority must be a non-negative rational");
    Priority p;
    std::int64_t g = std::gcd(num, den);
    p.num_ = num / g;
    p.den_ = den / g;
    return p;
  }

  static Priority finite(std::int64_t value) { return rational(value, 1); }

  bool is_infinite() const { return infinite_; }
  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  friend std::strong_ordering operator<=>(const Priority& a, const Priority& b) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    if (a.infinite_) return std::strong_ordering::greater;
    if (b.infinite_) return std::strong_ordering::less;
    __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs < rhs ? std::strong_ordering::less
                     : lhs > rhs ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  friend bool operator==(const Priority& a, const Priority& b) { return (a <=> b) == 0; }

  std::string to_string() const {
    if (infinite_) return "inf";
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Numeric value for serialization; callers must handle infinity first.
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// Exact decimal form when the denominator divides a power of ten
  /// (always true for values produced by parse_decimal); falls back to
  /// num/den notation otherwise.
  std::string to_decimal_string() const {
    if (infinite_) return "inf";
    if (den_ == 1) return std::to_string(num_);
    std::int64_t den = den_, scale = 1;
    int digits = 0;
    while (den % 2 == 0) { den /= 2; scale *= 5; ++digits; }
    while (den % 5 == 0) { den /= 5; scale *= 2; ++digits; }
    if (den != 1) return to_string();
    std::int64_t scaled = num_ * scale;  // value = scaled / 10^digits
    std::string s = std::to_string(scaled);
    while (static_cast<int>(s.size()) <= digits) s.insert(s.begin(), '0');
    s.insert(s.end() - digits, '.');
    return s;
  }

  /// Parses a non-negative decimal literal like "3" or "1.25" exactly.
  static Priority parse_decimal(const std::string& text) {
    auto dot = text.find('.');
    if (dot == std::string::npos) return finite(std::stoll(text));
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    if (frac.empty()) return finite(std::stoll(whole));
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) {
      if (den > 1000000000000000LL) throw std::invalid_argument("priority literal too precise");
      den *= 10;
    }
    std::int64_t num = (whole.empty() ? 0 : std::stoll(whole)) * den + std::stoll(frac);
    return rational(num, den);
  }

 private:
  bool infinite_;
  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace bdl

#endif  // BDL_PRIORITY_HPP
