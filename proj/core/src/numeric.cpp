#include "noodle/numeric.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace noodle {

namespace mp = boost::multiprecision;

void Dyadic::canonicalize() {
  if (num_ == 0) {
    exp2_ = 0;
    return;
  }
  std::size_t tz = mp::lsb(num_ < 0 ? BigInt(-num_) : num_);
  if (tz > 0) {
    num_ >>= tz;
    exp2_ -= static_cast<std::int64_t>(tz);
  }
}

Dyadic& Dyadic::operator+=(const Dyadic& o) {
  if (o.num_ == 0) return *this;
  if (num_ == 0) {
    *this = o;
    return *this;
  }
  // Align to the larger exponent (finer grid).
  if (exp2_ >= o.exp2_) {
    num_ += o.num_ << static_cast<unsigned>(exp2_ - o.exp2_);
  } else {
    num_ = (num_ << static_cast<unsigned>(o.exp2_ - exp2_)) + o.num_;
    exp2_ = o.exp2_;
  }
  canonicalize();
  return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& o) {
  Dyadic neg = o;
  neg.num_ = -neg.num_;
  return *this += neg;
}

Dyadic& Dyadic::operator*=(const Dyadic& o) {
  num_ *= o.num_;
  exp2_ += o.exp2_;
  if (num_ == 0) exp2_ = 0;
  return *this;  // product of canonical odd numerators stays odd
}

std::strong_ordering Dyadic::operator<=>(const Dyadic& o) const {
  // a/2^e <=> b/2^f  compares a*2^(f-e)... shift whichever side is coarser.
  BigInt a = num_;
  BigInt b = o.num_;
  if (exp2_ >= o.exp2_) {
    b <<= static_cast<unsigned>(exp2_ - o.exp2_);
  } else {
    a <<= static_cast<unsigned>(o.exp2_ - exp2_);
  }
  if (a < b) return std::strong_ordering::less;
  if (a > b) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

double Dyadic::to_double() const {
  if (num_ == 0) return 0.0;
  BigInt mag = num_ < 0 ? BigInt(-num_) : num_;
  auto bits = static_cast<std::int64_t>(mp::msb(mag)) + 1;
  std::int64_t shift = bits > 62 ? bits - 62 : 0;
  if (shift > 0) mag >>= static_cast<unsigned>(shift);
  auto m = mag.convert_to<double>();
  double value = std::ldexp(m, static_cast<int>(shift - exp2_));
  return num_ < 0 ? -value : value;
}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::domain_error("Rational: zero denominator");
  reduce();
}

Rational::Rational(const Dyadic& d) : num_(d.numerator()), den_(1) {
  if (d.exponent() >= 0) {
    den_ <<= static_cast<unsigned>(d.exponent());
  } else {
    num_ <<= static_cast<unsigned>(-d.exponent());
  }
}

void Rational::reduce() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = mp::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  reduce();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  reduce();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  reduce();
  return *this;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  BigInt lhs = num_ * o.den_;
  BigInt rhs = o.num_ * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

double Rational::to_double() const {
  if (num_ == 0) return 0.0;
  BigInt n = num_ < 0 ? BigInt(-num_) : num_;
  // scale both operands near 62 bits so neither conversion overflows
  std::int64_t nb = static_cast<std::int64_t>(mp::msb(n)) + 1;
  std::int64_t db = static_cast<std::int64_t>(mp::msb(den_)) + 1;
  std::int64_t ns = nb > 62 ? nb - 62 : 0;
  std::int64_t ds = db > 62 ? db - 62 : 0;
  double nd = (n >> static_cast<unsigned>(ns)).convert_to<double>();
  double dd = (den_ >> static_cast<unsigned>(ds)).convert_to<double>();
  double value = std::ldexp(nd / dd, static_cast<int>(ns - ds));
  return num_ < 0 ? -value : value;
}

std::string Rational::decimal(int digits, RoundDir dir) const {
  if (digits < 0) throw std::domain_error("Rational::decimal: negative digits");
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  BigInt scaled_num = num_ * scale;
  BigInt q = scaled_num / den_;
  BigInt r = scaled_num % den_;
  if (r != 0) {
    bool negative = num_ < 0;
    if (dir == RoundDir::Up && !negative) q += 1;
    if (dir == RoundDir::Down && negative) q -= 1;
  }
  bool neg = q < 0;
  if (neg) q = -q;
  std::string body = q.str();
  if (static_cast<int>(body.size()) <= digits) {
    body.insert(0, static_cast<std::size_t>(digits + 1 - body.size()), '0');
  }
  std::string out = body.substr(0, body.size() - digits);
  if (digits > 0) {
    out += '.';
    out += body.substr(body.size() - digits);
  }
  if (neg) out.insert(0, 1, '-');
  return out;
}

namespace {

std::vector<BigInt>& binomial_table() {
  static std::vector<BigInt> table = {BigInt(1)};
  return table;
}
std::mutex table_mutex;

}  // namespace

BigInt central_binomial(int n) {
  if (n < 0) throw std::domain_error("central_binomial: n < 0");
  std::lock_guard<std::mutex> lock(table_mutex);
  auto& table = binomial_table();
  while (static_cast<int>(table.size()) <= n) {
    int m = static_cast<int>(table.size());
    // C(2m, m) = C(2m-2, m-1) * (2m-1) * 2 / m
    BigInt next = table.back() * (2 * m - 1) * 2;
    next /= m;
    table.push_back(std::move(next));
  }
  return table[static_cast<std::size_t>(n)];
}

BigInt catalan(int n) {
  if (n < 0) throw std::domain_error("catalan: n < 0");
  return central_binomial(n) / (n + 1);
}

}  // namespace noodle
