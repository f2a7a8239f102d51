#include "core/double_schur.hpp"

namespace skewrank {

namespace {

void check_shift_length(const Partition& lambda, size_t n, const std::vector<Rat>& y) {
  size_t needed = n ? lambda.part(1) + n - 1 : 0;
  require(y.size() >= needed, errc::insufficient_y_sequence,
          "need " + std::to_string(needed) + " shift values, have " + std::to_string(y.size()));
}

Rat vandermonde(const std::vector<Rat>& x) {
  Rat prod = 1;
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = i + 1; j < x.size(); ++j) prod *= x[i] - x[j];
  return prod;
}

}  // namespace

std::vector<Tableau> column_strict_tableaux(const Partition& lambda, int n) {
  std::vector<Tableau> out;
  if (lambda.length() > n) return out;
  Tableau t(lambda.length());
  for (int i = 0; i < lambda.length(); ++i) t[i].assign(lambda.parts()[i], 0);

  auto rec = [&](auto&& self, int i, int j) -> void {
    if (i == lambda.length()) {
      out.push_back(t);
      return;
    }
    if (j == lambda.parts()[i]) {
      self(self, i + 1, 0);
      return;
    }
    int lo = 1;
    if (j > 0) lo = std::max(lo, t[i][j - 1]);
    if (i > 0 && j < lambda.parts()[i - 1]) lo = std::max(lo, t[i - 1][j] + 1);
    for (int v = lo; v <= n; ++v) {
      t[i][j] = v;
      self(self, i, j + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

Rat double_schur_det(const Partition& lambda, const std::vector<Rat>& x,
                     const std::vector<Rat>& y) {
  const int n = static_cast<int>(x.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      require(x[i] != x[j], errc::repeated_x, "x values must be distinct");
  if (lambda.length() > n) return 0;
  check_shift_length(lambda, x.size(), y);
  if (n == 0) return 1;

  MatQ num(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      num.at(i, j) = shifted_power(x[i], y, lambda.part(j + 1) + n - (j + 1));
  return det(num) / vandermonde(x);
}

Rat double_schur_comb(const Partition& lambda, const std::vector<Rat>& x,
                      const std::vector<Rat>& y) {
  const int n = static_cast<int>(x.size());
  if (lambda.length() > n) return 0;
  check_shift_length(lambda, x.size(), y);

  Rat sum = 0;
  for (const Tableau& t : column_strict_tableaux(lambda, n)) {
    Rat prod = 1;
    for (size_t i = 0; i < t.size(); ++i)
      for (size_t j = 0; j < t[i].size(); ++j) {
        int entry = t[i][j];
        int shift_index = entry + (static_cast<int>(j) - static_cast<int>(i));  // >= 1
        prod *= x[entry - 1] - y[shift_index - 1];
      }
    sum += prod;
  }
  return sum;
}

namespace {

struct Substitution {
  Partition lambda;
  std::vector<Rat> x, y;
  Rat scale;  // vandermonde(x) / prod_k (a_k)_{b_n}
};

Substitution factorial_substitution(const SequencePair& p) {
  require(p.mode == PairMode::factorial, errc::parse_error, "factorial pair expected");
  const int n = p.n();
  const Rat& bn = p.b[n - 1];
  require(p.a[n - 1] > bn - 1, errc::has_zero_entries,
          "double Schur route needs a zero-free factorial matrix");

  Substitution s;
  std::vector<int> parts(n);
  for (int j = 0; j < n; ++j) {
    Rat gap = bn - p.b[j];
    parts[j] = static_cast<int>(gap.get_num().get_si()) + j + 1 - n;
  }
  s.lambda = Partition(std::move(parts));
  for (int i = 0; i < n; ++i) s.x.push_back(p.a[i] - bn + 1);
  int shifts = s.lambda.part(1) + n - 1;
  for (int j = 1; j <= shifts; ++j) s.y.push_back(Rat(1 - j));

  Rat denom = 1;
  int bn_int = static_cast<int>(bn.get_num().get_si());
  for (int k = 0; k < n; ++k) denom *= falling_factorial(p.a[k], bn_int);
  s.scale = vandermonde(s.x) / denom;
  return s;
}

}  // namespace

Rat fc_det_via_double_schur(const SequencePair& p) {
  Substitution s = factorial_substitution(p);
  return double_schur_det(s.lambda, s.x, s.y) * s.scale;
}

FactorialSchurReport factorial_schur_report(const SequencePair& p) {
  Substitution s = factorial_substitution(p);
  FactorialSchurReport rep;
  rep.lambda = s.lambda;
  rep.x = s.x;
  rep.y = s.y;
  rep.factors_positive = true;

  Rat sum = 0;
  for (const Tableau& t : column_strict_tableaux(s.lambda, p.n())) {
    ++rep.tableau_count;
    Rat prod = 1;
    for (size_t i = 0; i < t.size(); ++i)
      for (size_t j = 0; j < t[i].size(); ++j) {
        int entry = t[i][j];
        int shift_index = entry + (static_cast<int>(j) - static_cast<int>(i));
        Rat factor = s.x[entry - 1] - s.y[shift_index - 1];
        if (factor <= 0) rep.factors_positive = false;
        prod *= factor;
      }
    sum += prod;
  }
  rep.value = sum * s.scale;
  return rep;
}

}  // namespace skewrank
