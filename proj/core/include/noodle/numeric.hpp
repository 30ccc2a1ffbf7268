#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>

namespace noodle {

using BigInt = boost::multiprecision::cpp_int;

/// Exact dyadic rational num / 2^exp2, canonical form: num odd, or zero
/// (in which case exp2 == 0). exp2 may be negative, so integers and halves
/// share one representation. Closed under + and *.
class Dyadic {
 public:
  Dyadic() : num_(0), exp2_(0) {}
  Dyadic(long long v) : num_(v), exp2_(0) { canonicalize(); }  // NOLINT(google-explicit-constructor)
  explicit Dyadic(BigInt v) : num_(std::move(v)), exp2_(0) { canonicalize(); }

  /// num / 2^exp2, not necessarily canonical on input.
  static Dyadic scaled(BigInt num, std::int64_t exp2) {
    Dyadic d;
    d.num_ = std::move(num);
    d.exp2_ = exp2;
    d.canonicalize();
    return d;
  }

  const BigInt& numerator() const { return num_; }
  std::int64_t exponent() const { return exp2_; }
  bool is_zero() const { return num_ == 0; }

  Dyadic& operator+=(const Dyadic& o);
  Dyadic& operator-=(const Dyadic& o);
  Dyadic& operator*=(const Dyadic& o);
  friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
  friend Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }
  friend Dyadic operator*(Dyadic a, const Dyadic& b) { return a *= b; }

  bool operator==(const Dyadic& o) const { return num_ == o.num_ && exp2_ == o.exp2_; }
  std::strong_ordering operator<=>(const Dyadic& o) const;

  double to_double() const;

 private:
  void canonicalize();

  BigInt num_;
  std::int64_t exp2_;
};

enum class RoundDir { Down, Up };

/// Exact rational with reduced num/den, den > 0. Used at the aggregation
/// layer where 1/k factors leave the dyadic world.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt num, BigInt den);
  Rational(const Dyadic& d);  // NOLINT(google-explicit-constructor)

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  std::strong_ordering operator<=>(const Rational& o) const;

  double to_double() const;

  /// Fixed-point decimal string with the given number of fractional digits,
  /// rounded toward -inf (Down) or +inf (Up). Exactness first: bounds are
  /// kept rational and only rendered at the edge.
  std::string decimal(int digits, RoundDir dir) const;

 private:
  void reduce();

  BigInt num_;
  BigInt den_;
};

/// C(2n, n), exact.
BigInt central_binomial(int n);

/// Cat_n = C(2n, n) / (n + 1), exact.
BigInt catalan(int n);

}  // namespace noodle
