#include <doctest.h>

#include <random>

#include "abhy/matrix.hpp"
#include "oracles.hpp"

using namespace abhy;
using namespace abhy::testing;

namespace {

// B^univ of the rank-2 fixture, frozen from the worked example.
IntMatrix b2_univ() {
  return IntMatrix::from_rows(
      {{0, -1}, {2, 0}, {1, 0}, {0, 1}, {-1, 1}, {-2, 1}, {-1, 0}, {0, -1}});
}

// Its left-kernel basis in the normalized shape (6 x 8).
IntMatrix b2_kernel() {
  return IntMatrix::from_rows({{1, 0, 0, 1, 0, 0, 0, 0},
                               {0, 1, -2, 0, 0, 0, 0, 0},
                               {0, 0, 1, -1, 1, 0, 0, 0},
                               {0, 0, 0, 1, -2, 1, 0, 0},
                               {0, 0, 0, 0, 1, -1, 1, 0},
                               {0, 0, 0, 0, 0, 1, -2, 1}});
}

}  // namespace

TEST_CASE("hermite normal form basics") {
  auto id = IntMatrix::identity(3);
  auto f = hermite_normal_form(id);
  CHECK(f.h == id);
  CHECK(f.u == id);
  CHECK(f.rank == 3);

  CHECK(rank(IntMatrix(4, 2)) == 0);
  CHECK(rank(b2_univ()) == 2);
}

TEST_CASE("hermite normal form properties on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int r = 1 + static_cast<int>(rng() % 5), c = 1 + static_cast<int>(rng() % 5);
    IntMatrix m(r, c);
    for (auto& x : m.a) x = static_cast<long>(rng() % 11) - 5;
    auto f = hermite_normal_form(m);
    CHECK(f.u.mul(m) == f.h);
    // idempotence
    auto g = hermite_normal_form(f.h);
    CHECK(g.h == f.h);
    // unimodularity: |det u| == 1, via HNF of u itself
    auto hu = hermite_normal_form(f.u);
    Int det = 1;
    for (int i = 0; i < r; ++i) det *= hu.h.at(i, i);
    CHECK(abs(det) == 1);
  }
}

TEST_CASE("left kernel basis on the worked example") {
  IntMatrix k0 = left_kernel_basis(b2_univ());
  CHECK(k0.rows == 6);
  CHECK(k0.cols == 8);
  CHECK(k0.mul(b2_univ()).is_zero());
  CHECK(rank(k0) == 6);
  // same rational row span as the displayed kernel matrix
  CHECK(same_row_span(RatMatrix(k0), RatMatrix(b2_kernel())));
}

TEST_CASE("left kernel basis edge cases") {
  CHECK(left_kernel_basis(IntMatrix::identity(2)).rows == 0);
  IntMatrix ones = IntMatrix::from_rows({{1}, {1}});
  IntMatrix k = left_kernel_basis(ones);
  CHECK(k == IntMatrix::from_rows({{1, -1}}));
}

TEST_CASE("left kernel rank counting on random matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int r = 1 + static_cast<int>(rng() % 6), c = 1 + static_cast<int>(rng() % 4);
    IntMatrix m(r, c);
    for (auto& x : m.a) x = static_cast<long>(rng() % 7) - 3;
    IntMatrix k = left_kernel_basis(m);
    CHECK(k.rows + rank(m) == r);
    if (k.rows > 0) CHECK(k.mul(m).is_zero());
  }
}

TEST_CASE("solve_affine examples") {
  {
    RatMatrix a(IntMatrix::from_rows({{1, 1}}));
    auto sol = solve_affine(a, rat_vec({1}));
    REQUIRE(sol.consistent);
    CHECK(sol.particular == rat_vec({1, 0}));
    REQUIRE(sol.homogeneous.size() == 1);
    CHECK(sol.homogeneous[0] == rat_vec({1, -1}));
  }
  {
    RatMatrix a(IntMatrix::from_rows({{1}, {1}}));
    auto sol = solve_affine(a, rat_vec({0, 1}));
    CHECK_FALSE(sol.consistent);
  }
  {
    // the worked 6x8 system at chat = (0,0,1,1,1,1): 2-parameter family
    RatMatrix a(b2_kernel());
    auto sol = solve_affine(a, rat_vec({0, 0, 1, 1, 1, 1}));
    REQUIRE(sol.consistent);
    CHECK(sol.homogeneous.size() == 2);
  }
}

TEST_CASE("solve_affine round trip on random systems") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    int r = 1 + static_cast<int>(rng() % 4), c = 1 + static_cast<int>(rng() % 5);
    RatMatrix a(r, c);
    for (auto& x : a.a) {
      Rat q(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
      q.canonicalize();
      x = q;
    }
    RatVector b(r);
    for (auto& x : b) x = Rat(static_cast<long>(rng() % 9) - 4);
    auto sol = solve_affine(a, b);
    if (!sol.consistent) continue;
    for (int i = 0; i < r; ++i) {
      Rat s(0);
      for (int j = 0; j < c; ++j) s += a.at(i, j) * sol.particular[j];
      CHECK(s == b[i]);
      for (const auto& h : sol.homogeneous) {
        Rat t(0);
        for (int j = 0; j < c; ++j) t += a.at(i, j) * h[j];
        CHECK(t == 0);
      }
    }
  }
}

TEST_CASE("rational arithmetic stays canonical") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    Rat a(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 12));
    Rat b(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 12));
    a.canonicalize();
    b.canonicalize();
    for (const Rat& q : {Rat(a + b), Rat(a - b), Rat(a * b)}) {
      CHECK(q.get_den() > 0);
      CHECK(gcd(q.get_num(), q.get_den()) == 1);
    }
    if (a != 0 && b != 0) CHECK((a / b) * (b / a) == 1);
  }
}

TEST_CASE("rational string round trip") {
  CHECK(rat_to_string(rat_from_string("-3/6")) == "-1/2");
  CHECK(rat_to_string(rat_from_string("7")) == "7");
  CHECK_THROWS_AS(rat_from_string("x"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string(""), std::invalid_argument);
}

TEST_CASE("rref canonicalizes the row span") {
  RatMatrix a(IntMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}));
  RatMatrix b(IntMatrix::from_rows({{1, 0, 1}, {0, 1, 1}}));
  CHECK(same_row_span(a, b));
  CHECK_FALSE(same_row_span(a, RatMatrix(IntMatrix::identity(3))));
}
