#include "cuplength/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <unordered_map>

#include "cuplength/cohomology.hpp"
#include "cuplength/error.hpp"

namespace cuplength {

namespace {

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t n) : words_((n + 63) / 64, 0) {}

  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
  }
  std::size_t lowest() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
    return static_cast<std::size_t>(-1);
  }
  BitVector& operator^=(const BitVector& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    return *this;
  }

 private:
  std::vector<std::uint64_t> words_;
};

/// Row-echelon span keyed by lowest set bit.
class Echelon {
 public:
  /// Reduces v in place; returns true if v ends up zero (v was in the span).
  bool reduce(BitVector& v) const {
    while (v.any()) {
      auto it = rows_.find(v.lowest());
      if (it == rows_.end()) return false;
      v ^= it->second;
    }
    return true;
  }
  /// Adds v if independent; returns whether it was added.
  bool insert(BitVector v) {
    if (reduce(v)) return false;
    std::size_t piv = v.lowest();
    rows_.emplace(piv, std::move(v));
    return true;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::map<std::size_t, BitVector> rows_;
};

/// The subcomplex alive at t, split by dimension, together with coboundary
/// spans for each degree.
class Stage {
 public:
  Stage(const FilteredComplex& c, double t, int max_dim) : max_dim_(max_dim) {
    by_dim_.resize(static_cast<std::size_t>(max_dim) + 2);
    index_.resize(by_dim_.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Simplex& s = c.simplex(i);
      if (c.grade(i) > t || s.dimension() > max_dim + 1) continue;
      auto p = static_cast<std::size_t>(s.dimension());
      index_[p].emplace(s, by_dim_[p].size());
      by_dim_[p].push_back(s);
    }
    coboundaries_.resize(by_dim_.size());
    for (int p = 1; p <= max_dim + 1; ++p) {
      for (std::size_t f = 0; f < count(p - 1); ++f) {
        coboundaries_[static_cast<std::size_t>(p)].insert(delta(p - 1, f));
      }
    }
  }

  std::size_t count(int p) const {
    if (p < 0 || p >= static_cast<int>(by_dim_.size())) return 0;
    return by_dim_[static_cast<std::size_t>(p)].size();
  }
  const Simplex& simplex(int p, std::size_t i) const { return by_dim_[static_cast<std::size_t>(p)][i]; }

  std::optional<std::size_t> find(int p, const Simplex& s) const {
    const auto& m = index_[static_cast<std::size_t>(p)];
    auto it = m.find(s);
    if (it == m.end()) return std::nullopt;
    return it->second;
  }

  /// Coboundary of the dual of the i-th (p)-simplex, as a (p+1)-cochain.
  BitVector delta(int p, std::size_t i) const {
    BitVector out(count(p + 1));
    const Simplex& s = simplex(p, i);
    for (std::size_t j = 0; j < count(p + 1); ++j) {
      auto v = simplex(p + 1, j).vertices();
      if (std::includes(v.begin(), v.end(), s.vertices().begin(), s.vertices().end())) out.flip(j);
    }
    return out;
  }

  BitVector delta_of(int p, const BitVector& x) const {
    BitVector out(count(p + 1));
    for (std::size_t i = 0; i < count(p); ++i) {
      if (x.test(i)) out ^= delta(p, i);
    }
    return out;
  }

  bool is_coboundary(int p, BitVector v) const {
    if (p == 0) return !v.any();
    return coboundaries_[static_cast<std::size_t>(p)].reduce(v);
  }

  BitVector to_bits(const Cochain& sigma) const {
    const int p = sigma.dimension();
    BitVector out(count(p));
    for (const Simplex& s : sigma.summands()) {
      if (auto i = find(p, s)) out.flip(*i);
    }
    return out;
  }

  Cochain to_cochain(int p, const BitVector& v) const {
    std::vector<Simplex> summands;
    for (std::size_t i = 0; i < count(p); ++i) {
      if (v.test(i)) summands.push_back(simplex(p, i));
    }
    return Cochain(p, std::move(summands));
  }

  /// (a cup b)(tau) = a(front p-face of tau) * b(back q-face of tau).
  BitVector cup(int p, const BitVector& a, int q, const BitVector& b) const {
    const int n = p + q;
    BitVector out(count(n));
    for (std::size_t j = 0; j < count(n); ++j) {
      auto v = simplex(n, j).vertices();
      Simplex front(std::vector<Vertex>(v.begin(), v.begin() + p + 1));
      Simplex back(std::vector<Vertex>(v.begin() + p, v.end()));
      auto fi = find(p, front);
      auto bi = find(q, back);
      if (fi && bi && a.test(*fi) && b.test(*bi)) out.flip(j);
    }
    return out;
  }

  /// Cocycle representatives of a basis of H^p.
  std::vector<BitVector> cohomology(int p) const {
    // Kernel of delta^p by elimination with tracked combinations.
    std::map<std::size_t, std::pair<BitVector, BitVector>> pivots;  // image, combo
    std::vector<BitVector> kernel;
    for (std::size_t i = 0; i < count(p); ++i) {
      BitVector image = delta(p, i);
      BitVector combo(count(p));
      combo.flip(i);
      while (image.any()) {
        auto it = pivots.find(image.lowest());
        if (it == pivots.end()) break;
        image ^= it->second.first;
        combo ^= it->second.second;
      }
      if (image.any()) {
        std::size_t piv = image.lowest();
        pivots.emplace(piv, std::make_pair(std::move(image), std::move(combo)));
      } else {
        kernel.push_back(std::move(combo));
      }
    }
    Echelon span;
    if (p > 0) span = coboundaries_[static_cast<std::size_t>(p)];
    std::vector<BitVector> out;
    for (BitVector& z : kernel) {
      if (span.insert(z)) out.push_back(std::move(z));
    }
    return out;
  }

 private:
  int max_dim_;
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::unordered_map<Simplex, std::size_t, SimplexHash>> index_;
  std::vector<Echelon> coboundaries_;
};

void require_critical(const FilteredComplex& c, double t) {
  if (!c.is_critical_value(t)) {
    throw Error(ErrorKind::NotCriticalValue, std::to_string(t) + " is not a critical value");
  }
}

struct Element {
  int degree;
  BitVector bits;
};

int longest_nonzero_product(const Stage& stage, const std::vector<Element>& elements, int k) {
  int best = 0;
  auto dfs = [&](auto&& self, std::size_t start, const BitVector& product, int degree,
                 int depth) -> void {
    for (std::size_t i = start; i < elements.size(); ++i) {
      const Element& e = elements[i];
      if (degree + e.degree > k) continue;
      BitVector next = depth == 0 ? e.bits : stage.cup(degree, product, e.degree, e.bits);
      if (stage.is_coboundary(degree + e.degree, next)) continue;
      best = std::max(best, depth + 1);
      if (best == k) return;
      self(self, i, next, degree + e.degree, depth + 1);
    }
  };
  dfs(dfs, 0, BitVector(), 0, 0);
  return best;
}

}  // namespace

CohomBasis cohomology_basis(const FilteredComplex& c, double t, int k) {
  require_critical(c, t);
  Stage stage(c, t, k);
  CohomBasis out;
  out.t = t;
  for (int p = 0; p <= k; ++p) {
    std::vector<Cochain> reps;
    for (const BitVector& z : stage.cohomology(p)) reps.push_back(stage.to_cochain(p, z));
    out.by_dim.push_back(std::move(reps));
  }
  return out;
}

namespace {

int image_cup_length_impl(const FilteredComplex& c, const Stage& at_t, const CohomBasis& at_s,
                          int k) {
  std::vector<Element> elements;
  for (int p = 1; p <= k; ++p) {
    for (const Cochain& z : at_s.by_dim[static_cast<std::size_t>(p)]) {
      elements.push_back({p, at_t.to_bits(z)});
    }
  }
  (void)c;
  return longest_nonzero_product(at_t, elements, k);
}

}  // namespace

int image_cup_length(const FilteredComplex& c, double t, double s, int k) {
  require_critical(c, t);
  require_critical(c, s);
  if (t > s) throw Error(ErrorKind::InvalidArgument, "image_cup_length needs t <= s");
  Stage at_t(c, t, k);
  return image_cup_length_impl(c, at_t, cohomology_basis(c, s, k), k);
}

std::vector<std::vector<int>> oracle_grid_values(const FilteredComplex& c, int k) {
  auto cv = c.critical_values();
  const std::size_t n = cv.size();
  std::vector<Stage> stages;
  std::vector<CohomBasis> bases;
  stages.reserve(n);
  for (double t : cv) {
    stages.emplace_back(c, t, k);
    bases.push_back(cohomology_basis(c, t, k));
  }
  std::vector<std::vector<int>> values(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      values[i][j] = image_cup_length_impl(c, stages[i], bases[j], k);
    }
  }
  return values;
}

CupFunction oracle_cup_function(const FilteredComplex& c, int k) {
  auto cv = c.critical_values();
  const std::size_t n = cv.size();
  const auto values = oracle_grid_values(c, k);
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const int v = values[i][j];
      if (v <= 0) continue;
      // Skip cells dominated by a larger rectangle of at least the same value.
      bool dominated = false;
      for (std::size_t i2 = 0; i2 <= i && !dominated; ++i2) {
        for (std::size_t j2 = j; j2 < n && !dominated; ++j2) {
          if ((i2 != i || j2 != j) && values[i2][j2] >= v) dominated = true;
        }
      }
      if (dominated) continue;
      const double right = j + 1 < n ? cv[j + 1] : kInfinity;
      gens.push_back({Interval::closed_open(cv[i], right), v});
    }
  }
  return CupFunction(std::move(gens));
}

std::optional<Interval> first_grid_mismatch(const CupFunction& f, const CupFunction& g,
                                            std::span<const double> grid) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i; j <= grid.size(); ++j) {
      const double right = j < grid.size() ? grid[j] : grid.back() + 1.0;
      const Interval q = Interval::closed(grid[i], right);
      if (evaluate(f, q) != evaluate(g, q)) return q;
    }
  }
  return std::nullopt;
}

}  // namespace cuplength
