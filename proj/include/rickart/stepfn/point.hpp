#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>

#include "rickart/core/errors.hpp"

namespace rickart::stepfn {

/// An exact point of X = [0, 1], stored as a reduced fraction num/den.
///
/// Labels are exact decimal strings ("0.5", "0.125") or fractions ("1/3").
/// Floats are never used for identity: two labels denote the same point iff
/// they denote the same rational. The reserved tail points p_n = 1/(n+2),
/// n >= 1, are ordinary points with num == 1 and den >= 3.
class Point {
 public:
  static constexpr std::uint64_t kMaxDen = 1'000'000'000'000'000'000ULL;  // 10^18

  Point() = default;

  static Point fraction(std::uint64_t num, std::uint64_t den) {
    if (den == 0 || den > kMaxDen || num > den)
      throw Error(ErrorKind::InvalidArgument, "point must be a fraction in [0, 1] with denominator <= 1e18");
    const std::uint64_t g = std::gcd(num, den);
    Point p;
    p.num_ = num / g;
    p.den_ = den / g;
    return p;
  }

  /// p_n = 1/(n+2).
  static Point reserved(std::uint64_t n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "reserved tail points start at n = 1");
    return fraction(1, n + 2);
  }

  /// Parses "0.125", "1", "0", ".5", or "a/b". Returns nullopt when the label
  /// is not an exact rational in [0, 1] representable with den <= 1e18.
  static std::optional<Point> parse(std::string_view s) {
    if (s.empty()) return std::nullopt;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
      auto num = parse_uint(s.substr(0, slash));
      auto den = parse_uint(s.substr(slash + 1));
      if (!num || !den || *den == 0 || *den > kMaxDen || *num > *den) return std::nullopt;
      return fraction(*num, *den);
    }
    const auto dot = s.find('.');
    const std::string_view int_part = s.substr(0, dot);
    const std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) return std::nullopt;
    if (dot != std::string_view::npos && frac_part.empty() && int_part.empty()) return std::nullopt;
    if (frac_part.size() > 18) return std::nullopt;
    std::uint64_t whole = 0;
    if (!int_part.empty()) {
      auto w = parse_uint(int_part);
      if (!w || *w > 1) return std::nullopt;
      whole = *w;
    }
    std::uint64_t frac = 0;
    std::uint64_t den = 1;
    for (char c : frac_part) {
      if (c < '0' || c > '9') return std::nullopt;
      frac = frac * 10 + static_cast<std::uint64_t>(c - '0');
      den *= 10;
    }
    if (whole == 1 && frac != 0) return std::nullopt;
    return fraction(whole * den + frac, den);
  }

  std::uint64_t num() const { return num_; }
  std::uint64_t den() const { return den_; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// n with p_n = 1/(n+2), when this is a reserved tail point.
  std::optional<std::uint64_t> tail_index() const {
    if (num_ == 1 && den_ >= 3) return den_ - 2;
    return std::nullopt;
  }

  /// Canonical label: a terminating decimal when den divides 10^18, else "num/den".
  std::string label() const {
    std::uint64_t twos = 0, fives = 0, d = den_;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    if (d != 1 || twos > 18 || fives > 18) return std::to_string(num_) + "/" + std::to_string(den_);
    if (den_ == 1) return std::to_string(num_);
    const std::uint64_t digits = twos > fives ? twos : fives;
    std::uint64_t scale = 1;
    for (std::uint64_t i = 0; i < digits; ++i) scale *= 10;
    const std::uint64_t scaled = num_ * (scale / den_);
    std::string frac = std::to_string(scaled);
    frac.insert(0, digits - frac.size(), '0');
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    return "0." + frac;
  }

  friend bool operator==(const Point& a, const Point& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend std::strong_ordering operator<=>(const Point& a, const Point& b) {
    const unsigned __int128 lhs = static_cast<unsigned __int128>(a.num_) * b.den_;
    const unsigned __int128 rhs = static_cast<unsigned __int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  static std::optional<std::uint64_t> parse_uint(std::string_view s) {
    if (s.empty()) return std::nullopt;
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
  }

  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

}  // namespace rickart::stepfn
