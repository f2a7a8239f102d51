#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/double_schur.hpp"
#include "core/schur.hpp"
#include "support/test_support.hpp"

using namespace skewrank;

namespace {

std::vector<Rat> rand_distinct(std::mt19937_64& gen, int n) {
  std::vector<Rat> x;
  while (static_cast<int>(x.size()) < n) {
    Rat v = testsup::rand_rat(gen);
    if (std::find(x.begin(), x.end(), v) == x.end()) x.push_back(v);
  }
  return x;
}

std::vector<Rat> rand_shifts(std::mt19937_64& gen, int count) {
  std::vector<Rat> y;
  for (int i = 0; i < count; ++i) y.push_back(testsup::rand_rat(gen));
  return y;
}

// Every partition contained in a 3x3 box.
std::vector<Partition> box_partitions() {
  std::vector<Partition> out;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= a; ++b)
      for (int c = 0; c <= b; ++c) out.push_back(Partition(std::vector<int>{a, b, c}));
  return out;
}

}  // namespace

TEST_CASE("column strict tableaux") {
  CHECK(column_strict_tableaux(Partition({2, 1}), 3).size() == 8);
  CHECK(column_strict_tableaux(Partition({1, 1, 1}), 2).empty());
  CHECK(column_strict_tableaux(Partition(std::vector<int>{}), 2).size() == 1);
  // Counts match the principal specialization of the straight shape.
  for (const Partition& lambda : box_partitions())
    for (int n = 0; n <= 3; ++n) {
      long count = static_cast<long>(column_strict_tableaux(lambda, n).size());
      CHECK(Rat(count) == skew_schur_spec(make_skew(lambda)).eval(n));
    }
}

TEST_CASE("double schur small closed forms") {
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Rat> y = rand_shifts(gen, 4);

    std::vector<Rat> x1 = rand_distinct(gen, 1);
    CHECK(double_schur_det(Partition({1}), x1, y) == x1[0] - y[0]);

    std::vector<Rat> x = rand_distinct(gen, 2);
    CHECK(double_schur_det(Partition({1, 1}), x, y) == (x[0] - y[0]) * (x[1] - y[0]));
    Rat two_row = (x[0] - y[0]) * (x[0] - y[1]) + (x[0] - y[0]) * (x[1] - y[2]) +
                  (x[1] - y[1]) * (x[1] - y[2]);
    CHECK(double_schur_det(Partition({2}), x, y) == two_row);

    // All shifts zero reduces to the classical Schur polynomial.
    std::vector<Rat> zeros(4, Rat(0));
    CHECK(double_schur_det(Partition({2, 1}), x, zeros) == x[0] * x[1] * (x[0] + x[1]));
  }
}

TEST_CASE("determinant and tableau forms agree") {
  std::mt19937_64 gen(11);
  for (const Partition& lambda : box_partitions()) {
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<Rat> x = rand_distinct(gen, 3);
      std::vector<Rat> y = rand_shifts(gen, lambda.part(1) + 2);
      CHECK(double_schur_det(lambda, x, y) == double_schur_comb(lambda, x, y));
    }
  }
}

TEST_CASE("double schur validation") {
  std::vector<Rat> y(5, Rat(0));
  CHECK_ERRC(double_schur_det(Partition({1}), {Rat(2), Rat(2)}, y), errc::repeated_x);
  CHECK_ERRC(double_schur_det(Partition({3}), {Rat(1), Rat(2)}, {Rat(0)}),
             errc::insufficient_y_sequence);
  CHECK_ERRC(double_schur_comb(Partition({3}), {Rat(1), Rat(2)}, {Rat(0)}),
             errc::insufficient_y_sequence);
  CHECK(double_schur_det(Partition({1, 1, 1}), {Rat(1), Rat(2)}, y) == 0);
  CHECK(double_schur_comb(Partition({1, 1, 1}), {Rat(1), Rat(2)}, y) == 0);
  CHECK(double_schur_det(Partition(std::vector<int>{}), {}, {}) == 1);
}

TEST_CASE("factorial determinant through the double schur route") {
  SequencePair p = factorial_pair({Rat(4), Rat(2)}, {Rat(1), Rat(2)});
  CHECK(fc_det_via_double_schur(p) == Rat(1, 12));
  CHECK(fc_det_via_double_schur(p) == fc_det(p).det);

  SequencePair single = factorial_pair({Rat(2)}, {Rat(1)});
  CHECK(fc_det_via_double_schur(single) == Rat(1, 2));

  // Consecutive b gives an empty auxiliary shape.
  SequencePair consec = factorial_pair({Rat(7), Rat(5), Rat(3)}, {Rat(1), Rat(2), Rat(3)});
  CHECK(fc_det_via_double_schur(consec) == fc_det(consec).det);

  // Nonempty auxiliary shape.
  SequencePair wide = factorial_pair({Rat(8), Rat(6), Rat(4)}, {Rat(1), Rat(3), Rat(4)});
  CHECK(fc_det_via_double_schur(wide) == fc_det(wide).det);
  FactorialSchurReport rep = factorial_schur_report(wide);
  CHECK(rep.value == fc_det(wide).det);
  CHECK(rep.lambda == Partition({1}));
  CHECK(rep.tableau_count == 3);
  CHECK(rep.factors_positive);

  // This pair cannot even be built: a_3 collides with b_2 - 1.
  CHECK_ERRC(factorial_pair({Rat(5), Rat(3), Rat(1)}, {Rat(1), Rat(2), Rat(3)}),
             errc::collision_shifted);

  // A zero entry disqualifies the route.
  SequencePair zeroful = factorial_pair({Rat(8), Rat(6), Rat(1)}, {Rat(1), Rat(3), Rat(4)});
  CHECK(fc_det(zeroful).omega == 2);
  CHECK_ERRC(fc_det_via_double_schur(zeroful), errc::has_zero_entries);
  CHECK_ERRC(factorial_schur_report(zeroful), errc::has_zero_entries);

  // Rational a sequences work too.
  SequencePair rat = factorial_pair({Rat(9, 2), Rat(5, 2)}, {Rat(1), Rat(3)});
  CHECK(fc_det_via_double_schur(rat) == fc_det(rat).det);
  CHECK(factorial_schur_report(rat).factors_positive);
}
