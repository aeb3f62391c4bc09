#ifndef TWISTK_CIRCLE_HPP
#define TWISTK_CIRCLE_HPP

#include <complex>
#include <cstdint>
#include <string>

namespace twistk {

// A unit-modulus complex number, stored as an angle. Angles coming from
// rational data are kept exact as a reduced fraction of full turns, so
// cocycle tables built from rational input compare bit-exactly; anything
// else degrades to a floating angle in radians.
class CircleValue {
 public:
  CircleValue() : exact_(true), num_(0), den_(1), radians_(0.0) {}

  static CircleValue one() { return CircleValue(); }
  static CircleValue turns(std::int64_t num, std::int64_t den);
  static CircleValue radians(double r);

  bool exact() const { return exact_; }
  // Reduced fraction of turns in [0,1); only meaningful when exact().
  std::int64_t turns_num() const { return num_; }
  std::int64_t turns_den() const { return den_; }
  double angle_radians() const;

  std::complex<double> value() const;

  CircleValue operator*(const CircleValue& other) const;
  CircleValue conj() const;
  CircleValue pow(std::int64_t k) const;

  bool is_one() const { return exact_ && num_ == 0; }

  // Exact when both sides are exact; otherwise falls back to `tol` on the
  // complex values.
  bool equals(const CircleValue& other, double tol = 0.0) const;

  // |value() - other.value()|
  double distance(const CircleValue& other) const;

  // "p/q" in turns for exact values, "<radians>rad" otherwise.
  std::string str() const;

 private:
  bool exact_;
  std::int64_t num_, den_;  // turns, reduced, 0 <= num < den
  double radians_;
};

}  // namespace twistk

#endif
