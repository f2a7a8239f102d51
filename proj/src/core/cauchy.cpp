#include "core/cauchy.hpp"

namespace skewrank {

namespace {

void check_monotone(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  require(!a.empty() && a.size() == b.size(), errc::parse_error,
          "sequences must be nonempty and of equal length");
  for (size_t i = 1; i < a.size(); ++i)
    require(a[i - 1] > a[i], errc::not_monotone, "a must be strictly decreasing");
  for (size_t j = 1; j < b.size(); ++j)
    require(b[j - 1] < b[j], errc::not_monotone, "b must be strictly increasing");
}

int predicted_omega(const SequencePair& p) {
  // Entries vanish strictly below the comparison threshold of the mode.
  Rat shift = p.mode == PairMode::restricted ? 0 : 1;
  int w = 0;
  for (const Rat& ai : p.a)
    for (const Rat& bj : p.b)
      if (ai < bj - shift) ++w;
  return w;
}

DetReport checked_det(const MatQ& m, const char* what) {
  DetReport rep;
  rep.det = det(m);
  rep.omega = omega(m);
  rep.sign = rep.omega % 2 ? -1 : 1;
  require(rep.det != 0, errc::theorem_violation, std::string(what) + ": determinant vanished");
  require(sgn(rep.det) == rep.sign, errc::theorem_violation,
          std::string(what) + ": determinant sign disagrees with (-1)^omega");
  return rep;
}

}  // namespace

SequencePair restricted_pair(std::vector<Rat> a, std::vector<Rat> b) {
  check_monotone(a, b);
  size_t n = a.size();
  for (const Rat& ai : a)
    for (const Rat& bj : b)
      require(ai != bj, errc::collision_ab, "a and b must be disjoint");
  for (size_t i = 0; i < n; ++i)
    require(a[i] > b[n - 1 - i], errc::anti_diagonal_violation,
            "need a_" + std::to_string(i + 1) + " > b_" + std::to_string(n - i));
  return {std::move(a), std::move(b), PairMode::restricted};
}

SequencePair factorial_pair(std::vector<Rat> a, std::vector<Rat> b) {
  check_monotone(a, b);
  size_t n = a.size();
  for (const Rat& bj : b)
    require(is_integer(bj) && bj >= 1, errc::parse_error, "b must be positive integers");
  for (const Rat& ai : a)
    for (const Rat& bj : b)
      require(ai != bj - 1, errc::collision_shifted, "a must avoid every b_j - 1");
  for (size_t i = 0; i < n; ++i)
    require(a[i] > b[n - 1 - i] - 1, errc::anti_diagonal_violation,
            "need a_" + std::to_string(i + 1) + " > b_" + std::to_string(n - i) + " - 1");
  return {std::move(a), std::move(b), PairMode::factorial};
}

MatQ restricted_cauchy(const SequencePair& p) {
  require(p.mode == PairMode::restricted, errc::parse_error, "restricted pair expected");
  int n = p.n();
  MatQ m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.a[i] > p.b[j]) m.at(i, j) = Rat(1) / (p.a[i] - p.b[j]);
  require(omega(m) == predicted_omega(p), errc::theorem_violation,
          "zero pattern disagrees with sequence comparisons");
  return m;
}

int omega(const MatQ& m) {
  int w = 0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j) == 0) ++w;
  return w;
}

bool is_irreducible(const SequencePair& p) {
  require(p.mode == PairMode::restricted, errc::parse_error, "restricted pair expected");
  int n = p.n();
  for (int i = 2; i <= n; ++i)
    if (!(p.a[i - 1] > p.b[n + 1 - i])) return false;
  return true;
}

DetReport rc_det(const SequencePair& p) {
  return checked_det(restricted_cauchy(p), "restricted Cauchy determinant");
}

Rat cauchy_product_formula(const SequencePair& p) {
  require(p.mode == PairMode::restricted, errc::parse_error, "restricted pair expected");
  int n = p.n();
  require(p.a[n - 1] > p.b[n - 1], errc::has_zero_entries,
          "product formula needs a zero-free matrix");
  Rat num = 1, den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) num *= (p.a[i] - p.a[j]) * (p.b[j] - p.b[i]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) den *= p.a[i] - p.b[j];
  return num / den;
}

SequencePair minor_sequences(const SequencePair& p, int i, int j) {
  require(p.mode == PairMode::restricted, errc::parse_error, "restricted pair expected");
  int n = p.n();
  require(i >= 1 && i <= n && j >= 1 && j <= n, errc::parse_error, "minor index out of range");
  require(is_irreducible(p), errc::not_irreducible,
          "minor sequences are only guaranteed for irreducible pairs");
  std::vector<Rat> a, b;
  for (int k = 0; k < n; ++k) {
    if (k != i - 1) a.push_back(p.a[k]);
    if (k != j - 1) b.push_back(p.b[k]);
  }
  if (a.empty()) return {{}, {}, PairMode::restricted};
  try {
    return restricted_pair(std::move(a), std::move(b));
  } catch (const error& e) {
    fail(errc::theorem_violation,
         std::string("minor sequences failed validation: ") + e.what());
  }
}

MatQ factorial_cauchy(const SequencePair& p) {
  require(p.mode == PairMode::factorial, errc::parse_error, "factorial pair expected");
  int n = p.n();
  MatQ m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.a[i] > p.b[j] - 1) {
        long k = p.b[j].get_num().get_si();
        m.at(i, j) = Rat(1) / falling_factorial(p.a[i], static_cast<int>(k));
      }
  require(omega(m) == predicted_omega(p), errc::theorem_violation,
          "zero pattern disagrees with sequence comparisons");
  return m;
}

DetReport fc_det(const SequencePair& p) {
  return checked_det(factorial_cauchy(p), "factorial Cauchy determinant");
}

MatQ inverse_binomial(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<Rat> ra(a.begin(), a.end()), rb(b.begin(), b.end());
  SequencePair p = factorial_pair(ra, rb);
  int n = p.n();
  MatQ m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a[i] >= b[j]) {
        Rat e{Int(1), binomial(a[i], static_cast<unsigned long>(b[j]))};
        e.canonicalize();
        m.at(i, j) = e;
      }

  Rat expected = fc_det(p).det;
  for (long bj : b) expected *= Rat(factorial(static_cast<unsigned long>(bj)));
  require(det(m) == expected, errc::theorem_violation,
          "inverse binomial determinant disagrees with factorial form");
  return m;
}

DetReport ib_det(const std::vector<long>& a, const std::vector<long>& b) {
  return checked_det(inverse_binomial(a, b), "inverse binomial determinant");
}

}  // namespace skewrank
