#include "twistk/circle.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace twistk {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void reduce(std::int64_t& num, std::int64_t& den) {
  num %= den;
  if (num < 0) num += den;
  std::int64_t g = std::gcd(num, den);
  num /= g;
  den /= g;
}
}  // namespace

CircleValue CircleValue::turns(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("CircleValue: zero denominator");
  if (den < 0) {
    den = -den;
    num = -num;
  }
  reduce(num, den);
  CircleValue v;
  v.exact_ = true;
  v.num_ = num;
  v.den_ = den;
  v.radians_ = 0.0;
  return v;
}

CircleValue CircleValue::radians(double r) {
  CircleValue v;
  v.exact_ = false;
  v.num_ = 0;
  v.den_ = 1;
  v.radians_ = std::remainder(r, kTwoPi);
  return v;
}

double CircleValue::angle_radians() const {
  return exact_ ? kTwoPi * static_cast<double>(num_) / static_cast<double>(den_)
                : radians_;
}

std::complex<double> CircleValue::value() const {
  // Common exact angles are returned with exact components.
  if (exact_) {
    if (num_ == 0) return {1.0, 0.0};
    if (den_ == 2) return {-1.0, 0.0};
    if (den_ == 4) return {0.0, num_ == 1 ? 1.0 : -1.0};
  }
  double a = angle_radians();
  return {std::cos(a), std::sin(a)};
}

CircleValue CircleValue::operator*(const CircleValue& other) const {
  if (exact_ && other.exact_) {
    // num/den + onum/oden over the common denominator; den fits desk scale.
    std::int64_t den = den_ / std::gcd(den_, other.den_) * other.den_;
    std::int64_t num = num_ * (den / den_) + other.num_ * (den / other.den_);
    return turns(num, den);
  }
  return radians(angle_radians() + other.angle_radians());
}

CircleValue CircleValue::conj() const {
  if (exact_) return turns(-num_, den_);
  return radians(-radians_);
}

CircleValue CircleValue::pow(std::int64_t k) const {
  if (exact_) return turns(num_ * k, den_);
  return radians(radians_ * static_cast<double>(k));
}

bool CircleValue::equals(const CircleValue& other, double tol) const {
  if (exact_ && other.exact_) return num_ == other.num_ && den_ == other.den_;
  return distance(other) <= tol;
}

double CircleValue::distance(const CircleValue& other) const {
  return std::abs(value() - other.value());
}

std::string CircleValue::str() const {
  std::ostringstream os;
  if (exact_) {
    os << num_ << "/" << den_;
  } else {
    os << radians_ << "rad";
  }
  return os.str();
}

}  // namespace twistk
