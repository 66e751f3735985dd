#include "cuplength/cupalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <unordered_map>

namespace cuplength {

void CupDiagram::record(const Interval& interval, int value) {
  if (value <= 0 || !interval.is_valid()) return;
  auto [it, inserted] = points_.emplace(interval, value);
  if (!inserted) it->second = std::max(it->second, value);
}

int CupDiagram::value(const Interval& interval) const {
  auto it = points_.find(interval);
  return it == points_.end() ? 0 : it->second;
}

Cochain cup_product(const Cochain& sigma1, const Cochain& sigma2, const FilteredComplex& c) {
  const int p = sigma1.dimension();
  const int q = sigma2.dimension();
  if (p + q > c.dimension()) return Cochain(p + q);

  std::unordered_multimap<Vertex, const Simplex*> by_front;
  for (const Simplex& beta : sigma2.summands()) by_front.emplace(beta.front(), &beta);

  std::vector<Simplex> terms;
  std::vector<Vertex> joined;
  for (const Simplex& alpha : sigma1.summands()) {
    auto [lo, hi] = by_front.equal_range(alpha.back());
    for (auto it = lo; it != hi; ++it) {
      auto a = alpha.vertices();
      auto b = it->second->vertices();
      joined.assign(a.begin(), a.end());
      joined.insert(joined.end(), b.begin() + 1, b.end());
      // Both halves are increasing and meet at a shared vertex, so the
      // concatenation is a valid simplex.
      Simplex s(joined);
      if (c.contains(s)) terms.push_back(std::move(s));
    }
  }
  return Cochain(p + q, std::move(terms));
}

std::optional<Interval> support(const Cochain& product, std::span<const Interval> factor_intervals,
                                const ReducedCoboundary& rc, const FilteredComplex& c,
                                std::span<const double> birth_grid,
                                std::size_t* coboundary_tests) {
  if (factor_intervals.empty() || product.empty()) return std::nullopt;
  double left = factor_intervals.front().left;
  double right = factor_intervals.front().right;
  for (const Interval& i : factor_intervals) {
    left = std::max(left, i.left);
    right = std::min(right, i.right);
  }
  if (left > right) return std::nullopt;

  auto zero_at = [&](double t) {
    if (coboundary_tests) ++*coboundary_tests;
    return is_coboundary_after_restriction(product, t, rc, c);
  };

  // Largest birth <= right. Every factor starts at a birth, so it is >= left.
  auto it = std::upper_bound(birth_grid.begin(), birth_grid.end(), right);
  if (it == birth_grid.begin()) return std::nullopt;
  std::size_t i = static_cast<std::size_t>(it - birth_grid.begin()) - 1;
  if (birth_grid[i] < left || zero_at(birth_grid[i])) return std::nullopt;

  // The zero locus of a restricted class is closed downwards, so walk left
  // until the next step would make the product vanish.
  while (i > 0 && birth_grid[i - 1] >= left && !zero_at(birth_grid[i - 1])) --i;
  return Interval::closed(birth_grid[i], right);
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("CUPLENGTH_THREADS")) {
    try {
      const long n = std::stol(env);
      if (n >= 1) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

namespace {

struct Product {
  Interval interval;  // closed on both sides
  Cochain cochain;

  friend bool operator==(const Product&, const Product&) = default;
  friend bool operator<(const Product& a, const Product& b) {
    if (a.interval != b.interval) return a.interval < b.interval;
    return a.cochain < b.cochain;
  }
};

struct PairResult {
  std::optional<Product> product;
  std::size_t tests = 0;
};

Interval reported(const Interval& closed, const FilteredComplex& c) {
  const double last = c.critical_values().back();
  if (closed.right >= last) return Interval::closed_open(closed.left, kInfinity);
  return Interval::closed_open(closed.left, *c.critical_successor(closed.right));
}

}  // namespace

std::pair<CupDiagram, RunStats> cup_diagram(const AnnotatedBarcode& b, const FilteredComplex& c,
                                            int k, double trim_eps, unsigned threads) {
  CupDiagram diagram;
  RunStats stats;
  stats.m_k = c.count_with_min_dim(1);
  stats.q_ell.assign(1, 0);
  if (c.empty()) return {diagram, stats};

  const double last = c.critical_values().back();
  std::vector<Product> base;
  for (const Bar& bar : b.bars) {
    if (bar.length() < trim_eps) continue;
    const double right = bar.is_essential() ? last : *c.critical_predecessor(bar.death);
    base.push_back({Interval::closed(bar.birth, right), bar.representative});
    diagram.record(Interval::closed_open(bar.birth, bar.death), 1);
  }
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  stats.q_1 = base.size();
  stats.q_ell.push_back(base.size());

  const ReducedCoboundary rc = reduce_coboundary(c);
  const std::vector<double> births = b.births();
  if (threads == 0) threads = default_thread_count();

  std::vector<Product> current = base;
  for (int ell = 1; ell <= k - 1 && !current.empty(); ++ell) {
    const std::size_t pairs = base.size() * current.size();
    std::vector<PairResult> results(pairs);
    std::vector<char> formed(pairs, 0);

    auto work = [&](std::size_t from, std::size_t to) {
      for (std::size_t idx = from; idx < to; ++idx) {
        const Product& x = base[idx / current.size()];
        const Product& y = current[idx % current.size()];
        if (x.cochain.dimension() + y.cochain.dimension() > k) continue;
        formed[idx] = 1;
        Cochain prod = cup_product(x.cochain, y.cochain, c);
        const Interval factors[] = {x.interval, y.interval};
        auto supp = support(prod, factors, rc, c, births, &results[idx].tests);
        if (supp) results[idx].product = Product{*supp, std::move(prod)};
      }
    };

    const std::size_t workers = std::min<std::size_t>(threads, std::max<std::size_t>(pairs, 1));
    if (workers <= 1) {
      work(0, pairs);
    } else {
      std::vector<std::thread> pool;
      const std::size_t chunk = (pairs + workers - 1) / workers;
      for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t from = w * chunk;
        const std::size_t to = std::min(pairs, from + chunk);
        if (from < to) pool.emplace_back(work, from, to);
      }
      for (std::thread& t : pool) t.join();
    }

    std::vector<Product> next;
    for (std::size_t idx = 0; idx < pairs; ++idx) {
      stats.product_count += static_cast<std::size_t>(formed[idx]);
      stats.coboundary_test_count += results[idx].tests;
      if (results[idx].product) {
        diagram.record(reported(results[idx].product->interval, c), ell + 1);
        next.push_back(std::move(*results[idx].product));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (!next.empty()) stats.q_ell.push_back(next.size());
    current = std::move(next);
  }
  return {diagram, stats};
}

}  // namespace cuplength
