#pragma once

// Shared test helpers: repo fixtures, random generators and brute-force
// references that do not go through the library's own algorithms.

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cuplength/cohomology.hpp"
#include "cuplength/complex.hpp"
#include "cuplength/cupalg.hpp"
#include "cuplength/invariants.hpp"
#include "cuplength/io.hpp"
#include "cuplength/oracle.hpp"

namespace fixtures {

using namespace cuplength;

inline std::string data_path(const std::string& name) {
  return std::string(CUPLENGTH_DATA_DIR) + "/" + name;
}

inline FilteredComplex load(const std::string& name) {
  if (name.size() > 4 && name.substr(name.size() - 4) == ".csv") {
    return build_vietoris_rips(load_distance_csv(data_path(name)), 3, 10.0);
  }
  return load_filtered_complex(data_path(name));
}

inline const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names = {
      "hollow_triangle.txt", "filled_triangle.txt", "two_disks.txt",
      "square.csv",          "rp2.txt",             "torus.txt",
  };
  return names;
}

/// Raise grades dimension by dimension so every face comes no later.
inline FilteredComplex with_monotone_grades(std::map<std::vector<Vertex>, double> g) {
  std::size_t top = 1;
  for (const auto& [s, gr] : g) top = std::max(top, s.size());
  for (std::size_t d = 2; d <= top; ++d) {
    for (auto& [s, gr] : g) {
      if (s.size() != d) continue;
      for (std::size_t skip = 0; skip < s.size(); ++skip) {
        std::vector<Vertex> f;
        for (std::size_t i = 0; i < s.size(); ++i) {
          if (i != skip) f.push_back(s[i]);
        }
        gr = std::max(gr, g.at(f));
      }
    }
  }
  std::vector<SimplexEntry> entries;
  for (const auto& [s, gr] : g) entries.push_back({s, gr});
  return FilteredComplex::from_simplex_list(std::move(entries));
}

/// Random filtration on a few vertices: random cliques closed under faces,
/// at most `max_positive` positive-dimensional simplices of dimension <= 3,
/// grades drawn from {0,1,2,3} and then raised to respect faces.
inline FilteredComplex random_filtration(std::mt19937_64& rng, std::size_t max_positive = 25) {
  std::uniform_int_distribution<int> nverts(4, 7);
  const int n = nverts(rng);
  std::uniform_int_distribution<int> grade(0, 3);
  std::uniform_int_distribution<int> size(2, 4);

  std::set<std::vector<Vertex>> simplices;
  std::size_t positive = 0;
  for (int attempt = 0; attempt < 60; ++attempt) {
    std::vector<Vertex> all(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = static_cast<Vertex>(v);
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<Vertex> top(all.begin(), all.begin() + size(rng));
    std::sort(top.begin(), top.end());
    std::set<std::vector<Vertex>> added;
    for (unsigned mask = 1; mask < (1U << top.size()); ++mask) {
      std::vector<Vertex> face;
      for (std::size_t i = 0; i < top.size(); ++i) {
        if (mask & (1U << i)) face.push_back(top[i]);
      }
      if (face.size() >= 2 && !simplices.count(face)) added.insert(face);
    }
    if (positive + added.size() > max_positive) continue;
    positive += added.size();
    simplices.insert(added.begin(), added.end());
  }
  for (int v = 0; v < n; ++v) simplices.insert({static_cast<Vertex>(v)});

  std::map<std::vector<Vertex>, double> g;
  for (const auto& s : simplices) {
    g[s] = grade(rng);
  }
  return with_monotone_grades(std::move(g));
}

/// A fixture surface with fresh random grades, so that products of
/// 1-classes appear and die at varied times.
inline FilteredComplex random_regrading(std::mt19937_64& rng, const std::string& name) {
  std::uniform_int_distribution<int> grade(0, 4);
  std::map<std::vector<Vertex>, double> g;
  for (const SimplexEntry& e : load(name).entries()) g[e.vertices] = grade(rng);
  return with_monotone_grades(std::move(g));
}

/// Random generator set with integer endpoints in [0, 6], mixed closures and
/// occasional infinite right ends.
inline CupFunction random_function(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, 4);
  std::uniform_int_distribution<int> point(0, 6);
  std::uniform_int_distribution<int> value(1, 3);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> rare(0, 7);
  std::vector<Generator> gens;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    int a = point(rng);
    int b = point(rng);
    if (a > b) std::swap(a, b);
    Interval iv{double(a), double(b), coin(rng) == 1, coin(rng) == 1};
    if (rare(rng) == 0) {
      iv.right = std::numeric_limits<double>::infinity();
      iv.right_closed = false;
    }
    if (a == b && std::isfinite(iv.right)) iv.left_closed = iv.right_closed = true;
    gens.push_back({iv, value(rng)});
  }
  return CupFunction(std::move(gens));
}

/// Erosion by brute force: scan eps over a grid of step `step` and queries over
/// a finer grid. Returns the smallest grid eps that passes, or +inf if none up
/// to `max_eps` does.
/// Sized for random_function's endpoints in [0, 6]: any finite distance is at
/// most 6, and the query grid reaches past every endpoint shifted by max_eps.
inline double grid_erosion(const CupFunction& f, const CupFunction& g, double step = 0.25,
                           double max_eps = 8.0) {
  std::vector<double> qs;
  for (double x = -10.0; x <= 16.0 + 1e-9; x += step / 2) qs.push_back(x);
  qs.push_back(25.0);
  qs.push_back(50.0);
  auto eroded = [&](double eps) {
    for (std::size_t i = 0; i < qs.size(); ++i) {
      for (std::size_t j = i; j < qs.size(); ++j) {
        const Interval inner = Interval::closed(qs[i], qs[j]);
        const Interval outer = Interval::closed(qs[i] - eps, qs[j] + eps);
        if (evaluate(f, inner) < evaluate(g, outer)) return false;
        if (evaluate(g, inner) < evaluate(f, outer)) return false;
      }
    }
    return true;
  };
  // monotone in eps, so bisect over grid indices
  std::size_t lo = 0;
  std::size_t hi = static_cast<std::size_t>(max_eps / step) + 1;
  if (!eroded(static_cast<double>(hi - 1) * step)) return std::numeric_limits<double>::infinity();
  hi -= 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (eroded(static_cast<double>(mid) * step)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return static_cast<double>(lo) * step;
}

/// Checks evaluate(f, I) >= evaluate(f, J) for all closed I inside J with
/// endpoints on `grid`. Returns the number of violations.
inline std::size_t monotonicity_violations(const CupFunction& f, const std::vector<double>& grid) {
  std::vector<Interval> ivs;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i; j < grid.size(); ++j) ivs.push_back(Interval::closed(grid[i], grid[j]));
  }
  std::vector<int> vals;
  vals.reserve(ivs.size());
  for (const Interval& iv : ivs) vals.push_back(evaluate(f, iv));
  std::size_t bad = 0;
  for (std::size_t x = 0; x < ivs.size(); ++x) {
    for (std::size_t y = 0; y < ivs.size(); ++y) {
      if (ivs[y].contains(ivs[x]) && vals[x] < vals[y]) ++bad;
    }
  }
  return bad;
}

/// Grid for monotonicity checks: every finite endpoint, midpoints and one
/// point beyond each end.
inline std::vector<double> probe_grid(const CupFunction& f, std::size_t cap = 24) {
  std::vector<double> ends = f.endpoints();
  std::vector<double> grid;
  if (ends.empty()) return {0.0, 1.0};
  grid.push_back(ends.front() - 1.0);
  for (std::size_t i = 0; i < ends.size(); ++i) {
    grid.push_back(ends[i]);
    if (i + 1 < ends.size()) grid.push_back(0.5 * (ends[i] + ends[i + 1]));
  }
  grid.push_back(ends.back() + 1.0);
  if (grid.size() > cap) {
    std::vector<double> thinned;
    const double stride = double(grid.size()) / double(cap);
    for (std::size_t i = 0; i < cap; ++i) thinned.push_back(grid[std::size_t(i * stride)]);
    thinned.back() = grid.back();
    grid = thinned;
  }
  return grid;
}

}  // namespace fixtures
