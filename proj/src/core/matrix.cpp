#include "core/matrix.hpp"

namespace skewrank {

namespace {

// Integer-coefficient polynomial used only inside the Bareiss recurrence.
struct PolyZ {
  std::vector<Int> c;  // lowest degree first, no trailing zero

  bool zero() const { return c.empty(); }
  void normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  static PolyZ mul(const PolyZ& a, const PolyZ& b) {
    if (a.zero() || b.zero()) return {};
    PolyZ r;
    r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i] == 0) continue;
      for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.normalize();
    return r;
  }

  static PolyZ sub(PolyZ a, const PolyZ& b) {
    if (a.c.size() < b.c.size()) a.c.resize(b.c.size());
    for (size_t i = 0; i < b.c.size(); ++i) a.c[i] -= b.c[i];
    a.normalize();
    return a;
  }

  // Exact quotient; Bareiss guarantees divisibility, asserted anyway.
  static PolyZ divexact(PolyZ num, const PolyZ& den) {
    if (num.zero()) return {};
    require(!den.zero(), errc::theorem_violation, "polynomial division by zero");
    int dn = static_cast<int>(num.c.size()) - 1;
    int dd = static_cast<int>(den.c.size()) - 1;
    require(dn >= dd, errc::theorem_violation, "inexact polynomial division");
    const Int& lead = den.c[dd];
    PolyZ q;
    q.c.assign(dn - dd + 1, Int(0));
    for (int k = dn - dd; k >= 0; --k) {
      Int& top = num.c[dd + k];
      if (top == 0) continue;
      require(mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()) != 0, errc::theorem_violation,
              "inexact polynomial division");
      Int qk;
      mpz_divexact(qk.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
      for (int j = 0; j <= dd; ++j) num.c[k + j] -= qk * den.c[j];
      q.c[k] = qk;
    }
    for (const Int& r : num.c)
      require(r == 0, errc::theorem_violation, "inexact polynomial division");
    q.normalize();
    return q;
  }
};

Int row_denominator_lcm(const MatQ& m, int i) {
  Int l = 1;
  for (int j = 0; j < m.cols(); ++j)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
  return l;
}

}  // namespace

Rat det(const MatQ& m) {
  require(m.square(), errc::not_square,
          "determinant of " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  const int n = m.rows();
  if (n == 0) return 1;

  Int denom = 1;
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i) {
    Int l = row_denominator_lcm(m, i);
    denom *= l;
    for (int j = 0; j < n; ++j) {
      const Rat& e = m.at(i, j);
      a[i][j] = e.get_num() * (l / e.get_den());
    }
  }

  int sign = 1;
  Int prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      int r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }

  Rat r(sign < 0 ? Int(-a[n - 1][n - 1]) : a[n - 1][n - 1], denom);
  r.canonicalize();
  return r;
}

Poly det_poly(const MatP& m) {
  require(m.square(), errc::not_square,
          "determinant of " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  const int n = m.rows();
  if (n == 0) return Poly(1);

  Int denom = 1;
  std::vector<std::vector<PolyZ>> a(n, std::vector<PolyZ>(n));
  for (int i = 0; i < n; ++i) {
    Int l = 1;
    for (int j = 0; j < n; ++j)
      for (const Rat& co : m.at(i, j).coeffs())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), co.get_den().get_mpz_t());
    denom *= l;
    for (int j = 0; j < n; ++j) {
      const auto& coeffs = m.at(i, j).coeffs();
      PolyZ& e = a[i][j];
      e.c.resize(coeffs.size());
      for (size_t k = 0; k < coeffs.size(); ++k)
        e.c[k] = coeffs[k].get_num() * (l / coeffs[k].get_den());
      e.normalize();
    }
  }

  int sign = 1;
  PolyZ prev;
  prev.c = {Int(1)};
  for (int k = 0; k + 1 < n; ++k) {
    if (a[k][k].zero()) {
      int r = k + 1;
      while (r < n && a[r][k].zero()) ++r;
      if (r == n) return {};
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        a[i][j] = PolyZ::divexact(PolyZ::sub(PolyZ::mul(a[i][j], a[k][k]), PolyZ::mul(a[i][k], a[k][j])), prev);
      a[i][k] = {};
    }
    prev = a[k][k];
  }

  const PolyZ& d = a[n - 1][n - 1];
  std::vector<Rat> coeffs(d.c.size());
  for (size_t i = 0; i < d.c.size(); ++i) {
    Rat co(sign < 0 ? Int(-d.c[i]) : d.c[i], denom);
    co.canonicalize();
    coeffs[i] = co;
  }
  return Poly::from_coeffs(std::move(coeffs));
}

}  // namespace skewrank
