#include <doctest.h>

#include <numbers>
#include <random>

#include "cuplength/cupalg.hpp"
#include "cuplength/invariants.hpp"
#include "fixtures.hpp"

using namespace cuplength;

namespace {

constexpr double kPi = std::numbers::pi;

CupFunction klein_function() {
  CupDiagram d;
  d.record(Interval::closed_open(1, 3), 1);
  d.record(Interval::closed_open(2, 3), 2);
  d.record(Interval::closed_open(2, kInfinity), 2);
  return reconstruct(d);
}

/// evaluate on all closed intervals with endpoints on a grid
std::vector<int> table(const CupFunction& f, const std::vector<double>& grid) {
  std::vector<int> out;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i; j < grid.size(); ++j) out.push_back(evaluate(f, Interval::closed(grid[i], grid[j])));
  }
  return out;
}

std::vector<double> offset_grid(const std::vector<CupFunction>& fs) {
  std::vector<double> grid;
  for (const CupFunction& f : fs) {
    for (double e : f.endpoints()) {
      for (double off : {-0.25, 0.0, 0.25}) grid.push_back(e + off);
    }
  }
  grid.push_back(-1);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

}  // namespace

TEST_CASE("interval containment honours closures") {
  CHECK(Interval::open(0, 2).contains(Interval::closed(0.5, 1)));
  CHECK_FALSE(Interval::open(0, 2).contains(Interval::closed(0, 1)));
  CHECK(Interval::closed(0, 2).contains(Interval::open(0, 2)));
  CHECK(Interval::closed_open(0, kInfinity).contains(Interval::closed(5, 1e9)));
  CHECK_FALSE(Interval::closed(0, 10).contains(Interval::closed_open(1, kInfinity)));
  CHECK(Interval::closed_open(0, kInfinity).contains(Interval::closed_open(1, kInfinity)));
  CHECK(Interval::closed(1, 1).is_valid());
  CHECK_FALSE(Interval::closed_open(1, 1).is_valid());
  CHECK_FALSE(intersect(Interval::closed(0, 1), Interval::open(1, 2)).is_valid());
  CHECK(intersect(Interval::closed(0, 1), Interval::closed(1, 2)) == Interval::closed(1, 1));
  CHECK(Interval::open(0, 1).contains(0.5));
  CHECK_FALSE(Interval::open(0, 1).contains(1.0));
  CHECK(Interval::closed_open(2, kInfinity).to_string() == "[2, inf)");
}

TEST_CASE("reconstruct the Klein diagram") {
  const CupFunction f = klein_function();
  CHECK(evaluate(f, Interval::closed(2.5, 10)) == 2);
  CHECK(evaluate(f, Interval::closed(1.2, 2.4)) == 1);
  CHECK(evaluate(f, Interval::closed(0.5, 0.9)) == 0);
  CHECK(reconstruct(CupDiagram{}).empty());
  CHECK(evaluate(reconstruct(CupDiagram{}), Interval::closed(0, 1)) == 0);
}

TEST_CASE("evaluate") {
  CupFunction f({{Interval::open(0, 2 * kPi / 3), 2}});
  CHECK(evaluate(f, Interval::closed(kPi / 3, kPi / 3)) == 2);
  CHECK(evaluate(f, Interval::closed(0, 1)) == 0);
  CHECK(evaluate(CupFunction({{Interval::closed(0, 4), 1}}), Interval::closed(0, 4)) == 1);
  // non-positive values and empty intervals are dropped
  CHECK(CupFunction({{Interval::closed(0, 1), 0}, {Interval::open(1, 1), 3}}).empty());
}

TEST_CASE("pointwise sum and max") {
  const CupFunction circle = analytic_vr_circle(8);
  const CupFunction torus = analytic_vr_torus(8);
  const CupFunction sum = pointwise_sum(circle, circle);
  const auto grid = offset_grid({circle});
  CHECK(table(sum, grid) == table(torus, grid));
  CHECK(table(pointwise_sum(torus, CupFunction{}), grid) == table(torus, grid));

  const CupFunction a({{Interval::closed(0, 4), 1}});
  const CupFunction b({{Interval::closed(2, 6), 1}});
  const CupFunction ab = pointwise_sum(a, b);
  for (double x = -1; x <= 7; x += 0.5) {
    for (double y = x; y <= 7; y += 0.5) {
      const Interval q = Interval::closed(x, y);
      CHECK(evaluate(ab, q) == evaluate(a, q) + evaluate(b, q));
      CHECK((evaluate(ab, q) == 2) == (x >= 2 && y <= 4));
    }
  }

  const CupFunction m1({{Interval::closed(0, 2), 1}});
  const CupFunction m2({{Interval::closed(1, 3), 2}});
  const CupFunction mx = pointwise_max(m1, m2);
  CHECK(evaluate(mx, Interval::closed(1.5, 3)) == 2);
  CHECK(evaluate(mx, Interval::closed(0.5, 1.5)) == 1);
  CHECK(table(pointwise_max(circle, circle), grid) == table(circle, grid));
}

TEST_CASE("sum and max identities on random generator sets") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 100; ++round) {
    const CupFunction f = fixtures::random_function(rng);
    const CupFunction g = fixtures::random_function(rng);
    const auto grid = offset_grid({f, g});
    const auto tf = table(f, grid);
    const auto tg = table(g, grid);
    const auto ts = table(pointwise_sum(f, g), grid);
    const auto tm = table(pointwise_max(f, g), grid);
    for (std::size_t i = 0; i < tf.size(); ++i) {
      CHECK(ts[i] == tf[i] + tg[i]);
      CHECK(tm[i] == std::max(tf[i], tg[i]));
    }
  }
}

TEST_CASE("analytic functions") {
  const std::vector<Generator> gens = analytic_vr_torus(1).generators();
  REQUIRE(gens.size() == 2);
  CHECK(gens[0].interval.left == 0);
  CHECK(gens[0].interval.right == doctest::Approx(2 * kPi / 3).epsilon(1e-15));
  CHECK_FALSE(gens[0].interval.left_closed);
  CHECK_FALSE(gens[0].interval.right_closed);
  CHECK(gens[0].value == 2);
  CHECK(evaluate(analytic_vr_wedge_lower(), Interval::closed(kPi / 3 - 0.01, kPi / 3 + 0.01)) == 1);
  CHECK(analytic_vr_wedge_lower().generators()[0].interval.right ==
        doctest::Approx(std::acos(-1.0 / 3.0)));
}

TEST_CASE("erosion distance") {
  const CupFunction a({{Interval::closed(0, 4), 1}});
  const CupFunction b({{Interval::closed(0, 2), 1}});
  CHECK(erosion_distance(a, a) == 0);
  CHECK(erosion_distance(a, b) == doctest::Approx(2));
  CHECK(erosion_distance(CupFunction{}, CupFunction{}) == 0);
  CHECK(erosion_distance(analytic_vr_torus(8), analytic_vr_wedge_lower()) ==
        doctest::Approx(kPi / 3).epsilon(1e-12));
  // an infinite generator cannot be matched by a bounded one
  const CupFunction inf({{Interval::closed_open(0, kInfinity), 1}});
  CHECK(std::isinf(erosion_distance(inf, b)));
  CHECK(is_eroded(a, b, 2.5));
  CHECK_FALSE(is_eroded(a, b, 1.5));
}

TEST_CASE("erosion matches the grid oracle on random pairs") {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 40; ++round) {
    const CupFunction f = fixtures::random_function(rng);
    const CupFunction g = fixtures::random_function(rng);
    const double exact = erosion_distance(f, g);
    const double grid = fixtures::grid_erosion(f, g);
    if (std::isinf(grid)) {
      CHECK(std::isinf(exact));
    } else {
      CHECK(exact <= grid + 1e-12);
      CHECK(exact >= grid - 0.25 - 1e-12);
    }
    CHECK(exact == erosion_distance(g, f));
  }
}

TEST_CASE("evaluate is monotone") {
  std::mt19937_64 rng(4);
  for (int round = 0; round < 50; ++round) {
    const CupFunction f = fixtures::random_function(rng);
    CHECK(fixtures::monotonicity_violations(f, fixtures::probe_grid(f)) == 0);
  }
  CHECK(fixtures::monotonicity_violations(klein_function(), fixtures::probe_grid(klein_function())) == 0);
}
