#include "core/poly.hpp"

namespace skewrank {

namespace {
const Rat kZero = 0;
}

Poly Poly::variable() { return from_coeffs({Rat(0), Rat(1)}); }

Poly Poly::from_coeffs(std::vector<Rat> coeffs) {
  Poly p;
  p.c_ = std::move(coeffs);
  p.normalize();
  return p;
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int Poly::low_index() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return -1;
}

const Rat& Poly::coeff(int i) const {
  if (i < 0 || static_cast<size_t>(i) >= c_.size()) return kZero;
  return c_[i];
}

Rat Poly::eval(const Rat& t) const {
  Rat acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly::from_coeffs(std::move(c));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

Poly Poly::scaled(const Rat& k) const {
  Poly r;
  if (k == 0) return r;
  r.c_ = c_;
  for (auto& v : r.c_) v *= k;
  return r;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    Rat a = c_[i];
    if (out.empty()) {
      if (a < 0) out += "-", a = -a;
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    bool unit = (a == 1) && i > 0;
    if (!unit) out += format_rat(a);
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace skewrank
