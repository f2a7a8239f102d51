#pragma once

#include <string>
#include <vector>

#include "core/rational.hpp"

namespace skewrank {

// Univariate polynomial over Q.  Coefficients are stored lowest degree first
// with no trailing zero; the zero polynomial stores nothing.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rat c) : c_{std::move(c)} { normalize(); }
  explicit Poly(long c) : Poly(Rat(c)) {}
  static Poly variable();
  static Poly from_coeffs(std::vector<Rat> coeffs);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 when zero
  // Index of the lowest nonzero coefficient; -1 when zero.
  int low_index() const;
  const Rat& coeff(int i) const;
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat eval(const Rat& t) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  Poly scaled(const Rat& k) const;
  bool operator==(const Poly&) const = default;

  std::string str(const std::string& var = "t") const;

 private:
  void normalize();
  std::vector<Rat> c_;
};

}  // namespace skewrank
