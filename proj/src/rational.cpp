#include "tetra/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace tetra {

namespace {

using Wide = __int128;

std::int64_t narrow(Wide value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("rational overflow");
  }
  return static_cast<std::int64_t>(value);
}

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) {
    throw std::invalid_argument("rational with zero denominator");
  }
  Wide n = num;
  Wide d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Wide g = wide_gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = narrow(n);
  den_ = narrow(d);
}

Rational Rational::parse(const std::string& text) {
  std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(std::stoll(text), 1);
    }
    return Rational(std::stoll(text.substr(0, slash)),
                    std::stoll(text.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw std::invalid_argument("malformed rational: " + text);
  }
}

namespace {

Rational make_reduced(Wide n, Wide d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Wide g = wide_gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return Rational(narrow(n), narrow(d));
}

}  // namespace

Rational Rational::operator+(const Rational& other) const {
  return make_reduced(Wide(num_) * other.den_ + Wide(other.num_) * den_,
                      Wide(den_) * other.den_);
}

Rational Rational::operator-(const Rational& other) const {
  return make_reduced(Wide(num_) * other.den_ - Wide(other.num_) * den_,
                      Wide(den_) * other.den_);
}

Rational Rational::operator*(const Rational& other) const {
  return make_reduced(Wide(num_) * other.num_, Wide(den_) * other.den_);
}

Rational Rational::operator/(const Rational& other) const {
  if (other.num_ == 0) {
    throw std::invalid_argument("rational division by zero");
  }
  return make_reduced(Wide(num_) * other.den_, Wide(den_) * other.num_);
}

bool Rational::operator<(const Rational& other) const {
  return Wide(num_) * other.den_ < Wide(other.num_) * den_;
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace tetra
