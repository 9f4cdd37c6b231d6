#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace kmstab {

/// Exact rational number over 64-bit integers.
///
/// Always stored reduced with a positive denominator. Every operation is
/// overflow-checked and throws std::overflow_error instead of wrapping, so
/// a result is either exact or absent. Path coordinates stay tiny in
/// practice; linear algebra that can grow uses GMP (see exact.hpp).
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by intent
  Rational(std::int64_t num, std::int64_t den);

  [[nodiscard]] constexpr std::int64_t num() const { return num_; }
  [[nodiscard]] constexpr std::int64_t den() const { return den_; }
  [[nodiscard]] constexpr bool is_integer() const { return den_ == 1; }
  [[nodiscard]] constexpr bool is_zero() const { return num_ == 0; }
  [[nodiscard]] constexpr int sign() const { return (num_ > 0) - (num_ < 0); }

  /// "p/q", or "p" when integral.
  [[nodiscard]] std::string to_string() const;
  static Rational parse(const std::string& text);

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend constexpr bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational: addition overflow");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("rational: subtraction overflow");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational: multiplication overflow");
  return r;
}

}  // namespace checked

inline Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  if (den < 0) {
    num = checked::sub(0, num);
    den = checked::sub(0, den);
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

inline Rational& Rational::operator+=(const Rational& o) {
  if (den_ == 1 && o.den_ == 1) {
    num_ = checked::add(num_, o.num_);
    return *this;
  }
  const std::int64_t g = std::gcd(den_, o.den_);
  const std::int64_t lhs = checked::mul(num_, o.den_ / g);
  const std::int64_t rhs = checked::mul(o.num_, den_ / g);
  *this = Rational(checked::add(lhs, rhs), checked::mul(den_ / g, o.den_));
  return *this;
}

inline Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

inline Rational& Rational::operator*=(const Rational& o) {
  if (den_ == 1 && o.den_ == 1) {
    num_ = checked::mul(num_, o.num_);
    return *this;
  }
  // Cross-reduce first to keep intermediates small.
  const std::int64_t g1 = std::gcd(num_, o.den_);
  const std::int64_t g2 = std::gcd(o.num_, den_);
  const std::int64_t n = checked::mul(num_ / g1, o.num_ / g2);
  const std::int64_t d = checked::mul(den_ / g2, o.den_ / g1);
  num_ = n;
  den_ = d;
  return *this;
}

inline Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("rational: division by zero");
  return *this *= Rational(o.den_, o.num_);
}

inline Rational Rational::operator-() const {
  Rational r;
  r.num_ = checked::sub(0, num_);
  r.den_ = den_;
  return r;
}

inline std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return a.num_ <=> b.num_;
  return checked::mul(a.num_, b.den_) <=> checked::mul(b.num_, a.den_);
}

inline std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

inline Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(std::stoll(text));
  return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

}  // namespace kmstab

template <>
struct std::hash<kmstab::Rational> {
  std::size_t operator()(const kmstab::Rational& r) const noexcept {
    const auto h1 = std::hash<std::int64_t>{}(r.num());
    const auto h2 = std::hash<std::int64_t>{}(r.den());
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
  }
};
