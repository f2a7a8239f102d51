#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/cauchy.hpp"
#include "support/test_support.hpp"

using namespace skewrank;

namespace {

std::vector<Rat> rats(std::vector<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("restricted pair validation") {
  CHECK_ERRC(restricted_pair(rats({1, 3}), rats({0, 2})), errc::not_monotone);
  CHECK_ERRC(restricted_pair(rats({3, 1}), rats({2, 0})), errc::not_monotone);
  CHECK_ERRC(restricted_pair(rats({3, 1}), rats({1, 2})), errc::collision_ab);
  CHECK_ERRC(restricted_pair(rats({3}), rats({0, 2})), errc::parse_error);
  CHECK_ERRC(restricted_pair({}, {}), errc::parse_error);
  CHECK_ERRC(restricted_pair({Rat(5), Rat(1), Rat(1, 2)}, rats({0, 2, 3})),
             errc::anti_diagonal_violation);
}

TEST_CASE("restricted cauchy pinned matrix") {
  SequencePair p = restricted_pair(rats({3, 1}), rats({0, 2}));
  MatQ m = restricted_cauchy(p);
  CHECK(m.at(0, 0) == Rat(1, 3));
  CHECK(m.at(0, 1) == 1);
  CHECK(m.at(1, 0) == 1);
  CHECK(m.at(1, 1) == 0);
  CHECK(omega(m) == 1);

  DetReport rep = rc_det(p);
  CHECK(rep.det == -1);
  CHECK(rep.omega == 1);
  CHECK(rep.sign == -1);
  CHECK_FALSE(is_irreducible(p));
}

TEST_CASE("zero-free determinant equals product formula") {
  SequencePair p = restricted_pair(rats({2, 1}), rats({-1, 0}));
  MatQ m = restricted_cauchy(p);
  CHECK(m.at(0, 0) == Rat(1, 3));
  CHECK(m.at(0, 1) == Rat(1, 2));
  CHECK(m.at(1, 0) == Rat(1, 2));
  CHECK(m.at(1, 1) == 1);
  DetReport rep = rc_det(p);
  CHECK(rep.det == Rat(1, 12));
  CHECK(rep.omega == 0);
  CHECK(rep.sign == 1);
  CHECK(cauchy_product_formula(p) == Rat(1, 12));

  SequencePair reducible = restricted_pair(rats({5, 4, 1}), rats({0, 2, 3}));
  DetReport rep3 = rc_det(reducible);
  CHECK(rep3.omega == 2);
  CHECK(rep3.sign == 1);
  CHECK(rep3.det > 0);
  CHECK_FALSE(is_irreducible(reducible));
  CHECK_ERRC(cauchy_product_formula(reducible), errc::has_zero_entries);
}

TEST_CASE("irreducibility and minor sequences") {
  SequencePair p = restricted_pair(rats({6, 5, 3}), rats({0, 2, 4}));
  CHECK(is_irreducible(p));
  CHECK(is_irreducible(restricted_pair(rats({3}), rats({0}))));

  SequencePair m11 = minor_sequences(p, 1, 1);
  CHECK(m11.a == rats({5, 3}));
  CHECK(m11.b == rats({2, 4}));

  SequencePair m23 = minor_sequences(p, 2, 3);
  CHECK(m23.a == rats({6, 3}));
  CHECK(m23.b == rats({0, 2}));

  // Each minor's matrix is the corresponding submatrix of the original.
  MatQ full = restricted_cauchy(p);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      SequencePair sub = minor_sequences(p, i, j);
      MatQ sm = restricted_cauchy(sub);
      MatQ expect = testsup::minor_of(full, i - 1, j - 1);
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) CHECK(sm.at(r, c) == expect.at(r, c));
      CHECK(rc_det(sub).det != 0);
    }

  SequencePair reducible = restricted_pair(rats({5, 3, 1}), rats({0, 2, 4}));
  CHECK_FALSE(is_irreducible(reducible));
  CHECK_ERRC(minor_sequences(reducible, 1, 1), errc::not_irreducible);
  CHECK_ERRC(minor_sequences(p, 0, 1), errc::parse_error);

  SequencePair single = restricted_pair(rats({3}), rats({0}));
  SequencePair none = minor_sequences(single, 1, 1);
  CHECK(none.n() == 0);
  CHECK(rc_det(none).det == 1);
}

TEST_CASE("factorial pair validation") {
  CHECK_ERRC(factorial_pair(rats({4, 2}), rats({2, 1})), errc::not_monotone);
  CHECK_ERRC(factorial_pair(rats({4, 2}), {Rat(1, 2), Rat(2)}), errc::parse_error);
  CHECK_ERRC(factorial_pair(rats({4, 2}), rats({0, 2})), errc::parse_error);
  CHECK_ERRC(factorial_pair(rats({4, 2}), rats({1, 3})), errc::collision_shifted);
  CHECK_ERRC(factorial_pair(rats({1, 0}), rats({1, 2})), errc::collision_shifted);
  CHECK_ERRC(factorial_pair({Rat(5, 2), Rat(1, 2)}, rats({1, 4})),
             errc::anti_diagonal_violation);
}

TEST_CASE("factorial cauchy pinned values") {
  SequencePair p = factorial_pair(rats({4, 2}), rats({1, 2}));
  MatQ m = factorial_cauchy(p);
  CHECK(m.at(0, 0) == Rat(1, 4));
  CHECK(m.at(0, 1) == Rat(1, 12));
  CHECK(m.at(1, 0) == Rat(1, 2));
  CHECK(m.at(1, 1) == Rat(1, 2));
  DetReport rep = fc_det(p);
  CHECK(rep.det == Rat(1, 12));
  CHECK(rep.omega == 0);
  CHECK(rep.sign == 1);

  SequencePair q = factorial_pair(rats({4, 2}), rats({1, 4}));
  DetReport rq = fc_det(q);
  CHECK(rq.det == Rat(-1, 48));
  CHECK(rq.omega == 1);
  CHECK(rq.sign == -1);

  // Rational a values are fine in factorial mode.
  SequencePair r = factorial_pair({Rat(7, 2), Rat(1, 2)}, rats({1, 2}));
  CHECK(fc_det(r).det != 0);
}

TEST_CASE("inverse binomial pinned values") {
  MatQ m = inverse_binomial({4, 2}, {1, 2});
  CHECK(m.at(0, 0) == Rat(1, 4));
  CHECK(m.at(0, 1) == Rat(1, 6));
  CHECK(m.at(1, 0) == Rat(1, 2));
  CHECK(m.at(1, 1) == 1);
  DetReport rep = ib_det({4, 2}, {1, 2});
  CHECK(rep.det == Rat(1, 6));
  CHECK(rep.sign == 1);

  DetReport rq = ib_det({4, 2}, {1, 4});
  CHECK(rq.det == Rat(-1, 2));
  CHECK(rq.omega == 1);
  CHECK(rq.sign == -1);

  CHECK_ERRC(inverse_binomial({6, 1}, {3, 5}), errc::anti_diagonal_violation);
  CHECK_ERRC(inverse_binomial({4, 3}, {4, 5}), errc::collision_shifted);
}

TEST_CASE("sign law on an exhaustive small family") {
  long checked = 0, zero_free = 0;
  for (long a1 = -2; a1 <= 4; ++a1)
    for (long a2 = -2; a2 < a1; ++a2)
      for (long b1 = -2; b1 <= 4; ++b1)
        for (long b2 = b1 + 1; b2 <= 4; ++b2) {
          SequencePair p;
          try {
            p = restricted_pair(rats({a1, a2}), rats({b1, b2}));
          } catch (const error&) {
            continue;
          }
          DetReport rep = rc_det(p);  // sign law asserted inside
          ++checked;
          if (rep.omega == 0) {
            ++zero_free;
            CHECK(rep.det == cauchy_product_formula(p));
          }
        }
  CHECK(checked == 70);
  CHECK(zero_free >= 10);
}
