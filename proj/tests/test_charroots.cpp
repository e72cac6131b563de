#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "mpchoice/charroots.hpp"
#include "mpchoice/error.hpp"

using namespace mpchoice;

namespace {

constexpr double kE = std::numbers::e;

// Plain-formula evaluation, independent of the library's expm1 rewrite.
double direct(double x, const std::vector<double>& k, double eps) {
  double v = (static_cast<double>(k.size()) + eps) * x - 1.0;
  for (double kj : k) v -= std::pow(x, (kj - 1.0) / kj);
  return v;
}

}  // namespace

TEST_CASE("char_value examples") {
  CHECK(char_value(2.0, {{1.0}, 0.0}) == 0.0);
  for (double k : {1.0, 1.5, 2.0, 7.0, 100.0}) CHECK(char_value(1.0, {{k}, 0.0}) == -1.0);
  CHECK(char_value(2.0, {{2.0}, 0.0}) == doctest::Approx(1.0 - std::sqrt(2.0)).epsilon(1e-15));
  CHECK(char_value(2.0, {{2.0}, 0.0}) == doctest::Approx(-0.4142).epsilon(1e-4));
}

TEST_CASE("char_value domain and validation") {
  CHECK_THROWS_AS(char_value(0.5, {{2.0}, 0.0}), Error);
  CHECK_THROWS_AS(char_value(2.0, {{0.5}, 0.0}), Error);
  CHECK_THROWS_AS(char_value(2.0, {{}, 0.0}), Error);
  CHECK_THROWS_AS(char_value(2.0, {{2.0}, -0.1}), Error);
}

TEST_CASE("char_value matches the direct formula") {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> kd(1.0, 50.0), xd(1.0, 60.0), ed(0.0, 0.9);
  for (int i = 0; i < 500; ++i) {
    std::vector<double> k(std::uniform_int_distribution<int>(1, 4)(gen));
    for (auto& v : k) v = kd(gen);
    const double x = xd(gen), eps = ed(gen);
    CHECK(char_value(x, {k, eps}) == doctest::Approx(direct(x, k, eps)).epsilon(1e-12));
  }
}

TEST_CASE("solve_x0 examples") {
  const auto one = solve_x0({{1.0}, 0.0});
  CHECK(one.x0 == 2.0);

  const auto phi2 = solve_x0({{2.0}, 0.0});
  CHECK(std::abs(phi2.x0 - (3.0 + std::sqrt(5.0)) / 2.0) <= 1e-9);

  const auto three = solve_x0({{1.0, 1.0}, 0.0});
  CHECK(std::abs(three.x0 - 1.5) <= 1e-12);

  // Independent fine-grid scan of x - 1 - x^{3/4}: sign change in [3.6296, 3.6297].
  const auto four = solve_x0({{4.0}, 0.0});
  CHECK(four.x0 == doctest::Approx(3.64).epsilon(0.05 / 3.64));
  CHECK(four.x0 == doctest::Approx(3.6296581267545).epsilon(1e-11));
  CHECK(direct(3.6296, {4.0}, 0) < 0);
  CHECK(direct(3.6297, {4.0}, 0) > 0);
}

TEST_CASE("frozen roots from a 50-digit oracle") {
  // mpmath.findroot(lambda x: x - 1 - x**((k-1)/k), 3) at 50 digits.
  const std::pair<double, double> table[] = {
      {1.5, 2.3247179572447}, {2.0, 2.6180339887499}, {4.0, 3.6296581267545},
      {10.0, 6.0635107660926}, {100.0, 29.925695466624}};
  for (auto [k, x] : table) CHECK(solve_x0({{k}, 0.0}).x0 == doctest::Approx(x).epsilon(1e-12));
}

TEST_CASE("property: residual and bracket for s = 1") {
  for (double k : {1.0, 1.5, 2.0, 5.0, 10.0, 100.0}) {
    const auto r = solve_x0({{k}, 0.0});
    CHECK(std::abs(char_value(r.x0, {{k}, 0.0})) <= kDefaultRootTol);
    CHECK(r.x0 >= 2.0);
    CHECK(r.x0 < std::max(k, kE + 2.0));
    CHECK(r.bracket_low <= r.x0);
    CHECK(r.x0 <= r.bracket_high);
  }
}

TEST_CASE("property: multipartite bracket and residual") {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> kd(1.0, 200.0);
  for (int i = 0; i < 300; ++i) {
    const int s = std::uniform_int_distribution<int>(1, 6)(gen);
    std::vector<double> k(s);
    for (auto& v : k) v = kd(gen);
    std::sort(k.rbegin(), k.rend());
    const auto r = solve_x0({k, 0.0});
    CHECK(std::abs(r.residual) <= kDefaultRootTol);
    CHECK(std::abs(char_value(r.x0, {k, 0.0})) <= kDefaultRootTol);
    CHECK(r.x0 >= (s + 1.0) / s);
    CHECK(r.x0 < std::max(k[0], kE + 2.0));
  }
}

TEST_CASE("property: char_value is strictly increasing") {
  std::mt19937_64 gen(9);
  std::uniform_real_distribution<double> kd(1.0, 30.0), xd(1.0, 100.0);
  for (int i = 0; i < 300; ++i) {
    std::vector<double> k(std::uniform_int_distribution<int>(1, 4)(gen));
    for (auto& v : k) v = kd(gen);
    double a = xd(gen), b = xd(gen);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    CHECK(char_value(b, {k, 0.0}) > char_value(a, {k, 0.0}));
  }
}

TEST_CASE("property: x0 is non-decreasing in k") {
  double prev = 0.0;
  for (double k = 1.0; k <= 200.0; k *= 1.1) {
    const double x = solve_x0({{k}, 0.0}).x0;
    CHECK(x >= prev);
    prev = x;
  }
}

TEST_CASE("property: x0(epsilon) decreases to x0(0)") {
  for (const std::vector<double>& k : {std::vector<double>{1.0, 1.0}, {3.0, 2.0}, {8.0, 4.0, 1.5}}) {
    const double base = solve_x0({k, 0.0}).x0;
    double prev = 0.0;
    for (double eps : {0.5, 0.1, 0.01, 1e-4, 1e-6}) {
      const double x = solve_x0({k, eps}).x0;
      CHECK(x <= base);
      CHECK(x >= prev);
      prev = x;
    }
    CHECK(std::abs(prev - base) <= 1e-4 * base);
  }
}

TEST_CASE("bipartite equation is the s = 1 multipartite one") {
  for (double k : {1.0, 2.5, 40.0}) {
    const auto m = RootProblem{{k}, 0.0};
    for (double x = 1.0; x < 10.0; x += 0.37) {
      CHECK(char_value(x, m) == doctest::Approx(x - 1.0 - std::pow(x, (k - 1) / k)).epsilon(1e-13));
    }
  }
}
