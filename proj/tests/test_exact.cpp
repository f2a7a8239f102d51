#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/matrix.hpp"
#include "support/test_support.hpp"

using namespace skewrank;

TEST_CASE("rational parse and format") {
  CHECK(format_rat(parse_rat("3")) == "3");
  CHECK(format_rat(parse_rat("-2/4")) == "-1/2");
  CHECK(format_rat(parse_rat("6/3")) == "2");
  CHECK(format_rat(parse_rat(" 7 / 2 ")) == "7/2");
  CHECK(parse_rat("0/5") == 0);
  CHECK_ERRC(parse_rat("1/0"), errc::parse_error);
  CHECK_ERRC(parse_rat("x"), errc::parse_error);
  CHECK_ERRC(parse_rat("1.5"), errc::parse_error);
  CHECK_ERRC(parse_rat(""), errc::parse_error);
  CHECK(parse_rat_list("").empty());
  CHECK(format_rat_list(parse_rat_list("1/2, -3 ,4")) == "1/2,-3,4");
  CHECK_ERRC(parse_long_list("1/2"), errc::parse_error);
  CHECK(parse_long_list("4,2") == std::vector<long>{4, 2});
}

TEST_CASE("falling factorial and shifted power") {
  CHECK(falling_factorial(4, 2) == 12);
  CHECK(falling_factorial(2, 2) == 2);
  CHECK(falling_factorial(1, 2) == 0);
  CHECK(falling_factorial(7, 0) == 1);
  CHECK(falling_factorial(Rat(1, 2), 3) == Rat(3, 8));

  std::vector<Rat> nat;
  for (int j = 0; j < 8; ++j) nat.push_back(j);
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 40; ++trial) {
    Rat x = testsup::rand_rat(gen);
    int k = static_cast<int>(testsup::rand_range(gen, 0, 8));
    CHECK(shifted_power(x, nat, k) == falling_factorial(x, k));
  }
  CHECK_ERRC(shifted_power(1, nat, 9), errc::insufficient_y_sequence);
}

TEST_CASE("integer combinatorics helpers") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(4, 0) == 1);
  CHECK(binomial(1, 3) == 0);
  CHECK(factorial(0) == 1);
  CHECK(factorial(4) == 24);
}

TEST_CASE("polynomial basics") {
  Poly t = Poly::variable();
  CHECK(t.degree() == 1);
  CHECK(Poly().degree() == -1);
  CHECK(Poly().low_index() == -1);

  Poly p = (t + Poly(1)) * (t - Poly(1));
  CHECK(p == Poly::from_coeffs({Rat(-1), Rat(0), Rat(1)}));
  CHECK(p.eval(3) == 8);
  CHECK(p.coeff(5) == 0);
  CHECK(p.str() == "t^2 - 1");

  Poly q = t * t * (t + Poly(2));
  CHECK(q.low_index() == 2);
  CHECK(q.degree() == 3);
  CHECK(q.scaled(Rat(1, 2)).eval(2) == 8);
  CHECK((-q).eval(1) == -3);
  CHECK(Poly::from_coeffs({Rat(0), Rat(0)}).is_zero());
}

TEST_CASE("exact determinant pinned values") {
  MatQ a = MatQ::from_rows({{Rat(1, 3), Rat(1)}, {Rat(1), Rat(0)}});
  CHECK(det(a) == -1);

  MatQ b = MatQ::from_rows({{Rat(1, 3), Rat(1, 2)}, {Rat(1, 2), Rat(1)}});
  CHECK(det(b) == Rat(1, 12));

  CHECK(det(MatQ()) == 1);
  CHECK(det(MatQ::from_rows({{Rat(-7, 3)}})) == Rat(-7, 3));
  CHECK(det(MatQ::from_rows({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}})) == 0);
  CHECK(det(MatQ::from_rows({{Rat(0), Rat(1)}, {Rat(1), Rat(0)}})) == -1);

  CHECK_ERRC(det(MatQ(2, 3)), errc::not_square);
  CHECK_ERRC(MatQ::from_rows({{Rat(1)}, {Rat(1), Rat(2)}}), errc::parse_error);
}

TEST_CASE("exact determinant agrees with cofactor expansion") {
  std::mt19937_64 gen(2024);
  for (int trial = 0; trial < 300; ++trial) {
    int n = static_cast<int>(testsup::rand_range(gen, 1, 4));
    MatQ m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m.at(i, j) = testsup::rand_range(gen, 0, 4) == 0 ? Rat(0) : testsup::rand_rat(gen);
    CHECK(det(m) == testsup::cofactor_det(m));
  }
}

TEST_CASE("polynomial determinant pinned value") {
  Poly t = Poly::variable();
  Poly h2 = Poly::from_coeffs({Rat(0), Rat(1, 2), Rat(1, 2)});
  Poly h3 = Poly::from_coeffs({Rat(0), Rat(1, 3), Rat(1, 2), Rat(1, 6)});
  MatP m = MatP::from_rows({{h2, h3}, {Poly(1), t}});
  Poly d = det_poly(m);
  CHECK(d == Poly::from_coeffs({Rat(0), Rat(-1, 3), Rat(0), Rat(1, 3)}));
  CHECK(d.low_index() == 1);
  CHECK(d.degree() == 3);
}

TEST_CASE("polynomial determinant handles zero pivots") {
  Poly t = Poly::variable();
  MatP m = MatP::from_rows({{Poly(), t}, {t, Poly(1)}});
  CHECK(det_poly(m) == -(t * t));
  MatP z(3, 3);
  CHECK(det_poly(z).is_zero());
  CHECK(det_poly(MatP()) == Poly(1));
  CHECK_ERRC(det_poly(MatP(1, 2)), errc::not_square);
}

TEST_CASE("polynomial determinant agrees with cofactor expansion") {
  std::mt19937_64 gen(99);
  for (int trial = 0; trial < 60; ++trial) {
    int n = static_cast<int>(testsup::rand_range(gen, 1, 3));
    MatP m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::vector<Rat> c;
        int deg = static_cast<int>(testsup::rand_range(gen, -1, 2));
        for (int k = 0; k <= deg; ++k) c.push_back(testsup::rand_rat(gen, 6, 3));
        m.at(i, j) = Poly::from_coeffs(c);
      }
    Poly d = det_poly(m);
    CHECK(d == testsup::cofactor_det(m));

    Rat t0 = testsup::rand_rat(gen);
    MatQ at(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) at.at(i, j) = m.at(i, j).eval(t0);
    CHECK(d.eval(t0) == det(at));
  }
}
