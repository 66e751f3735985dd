#include "cuplength/cohomology.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "cuplength/error.hpp"
#include "cuplength/oracle.hpp"
#include "cuplength/z2linalg.hpp"

namespace cuplength {

std::vector<double> AnnotatedBarcode::births() const {
  std::vector<double> out;
  out.reserve(bars.size());
  for (const Bar& bar : bars) out.push_back(bar.birth);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int AnnotatedBarcode::max_dim() const {
  int d = 0;
  for (const Bar& bar : bars) d = std::max(d, bar.dim);
  return d;
}

AnnotatedBarcode compute_barcode(const FilteredComplex& c, int k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be >= 1");
  AnnotatedBarcode out;
  if (c.empty()) return out;

  // Reducing the coboundary in reverse filtration order pairs a birth
  // p-simplex (column) with a death (p+1)-simplex (pivot row). Column j of V
  // restricted to the stage before death is a representative cocycle.
  CosimplexBasis basis(c, 0);
  ReducedCoboundary rc = column_reduce(coboundary_matrix(c, 0));

  auto representative = [&](std::size_t j, int p) {
    std::vector<Simplex> summands;
    for (Index q : rc.V.column(j)) summands.push_back(c.simplex(basis.simplex_of[q]));
    return Cochain(p, std::move(summands));
  };

  for (std::size_t j = 0; j < basis.size(); ++j) {
    const std::size_t sigma = basis.simplex_of[j];
    const int p = c.simplex(sigma).dimension();
    if (p < 1 || p > k) continue;
    const double birth = c.grade(sigma);
    if (auto piv = rc.R.pivot(j)) {
      const double death = c.grade(basis.simplex_of[*piv]);
      if (death > birth) out.bars.push_back({p, birth, death, representative(j, p)});
    } else if (!rc.is_pivot_row[j]) {
      out.bars.push_back({p, birth, kInfinity, representative(j, p)});
    }
  }

  std::sort(out.bars.begin(), out.bars.end(), [](const Bar& a, const Bar& b) {
    if (a.death != b.death) return a.death < b.death;
    if (a.birth != b.birth) return a.birth < b.birth;
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.representative < b.representative;
  });
  return out;
}

std::vector<Bar> dimension_zero_bars(const FilteredComplex& c) {
  std::vector<Bar> bars;
  std::vector<std::size_t> parent(c.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  // Components are keyed by the complex index of their oldest vertex, which
  // is also the smallest index in the canonical order.
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Simplex& s = c.simplex(i);
    if (s.dimension() != 1) continue;
    std::size_t a = find(*c.index_of(Simplex{s.front()}));
    std::size_t b = find(*c.index_of(Simplex{s.back()}));
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    // b is younger and dies here
    if (c.grade(i) > c.grade(b)) bars.push_back({0, c.grade(b), c.grade(i), Cochain(0)});
    parent[b] = a;
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c.simplex(i).dimension() == 0 && find(i) == i) {
      bars.push_back({0, c.grade(i), kInfinity, Cochain(0)});
    }
  }
  std::sort(bars.begin(), bars.end(), [](const Bar& a, const Bar& b) {
    if (a.death != b.death) return a.death < b.death;
    return a.birth < b.birth;
  });
  return bars;
}

namespace {

bool is_cocycle_at(const Cochain& sigma, double t, const FilteredComplex& c) {
  const int p = sigma.dimension();
  for (std::size_t i = 0; i < c.size() && c.grade(i) <= t; ++i) {
    const Simplex& s = c.simplex(i);
    if (s.dimension() != p + 1) continue;
    int parity = 0;
    for (const Simplex& f : s.facets()) parity ^= sigma.contains(f) ? 1 : 0;
    if (parity) return false;
  }
  return true;
}

FamilyReport failure(double t, int p, const std::string& what) {
  std::ostringstream os;
  os << what << " at t=" << t << ", p=" << p;
  return {false, t, p, os.str()};
}

}  // namespace

FamilyReport validate_family(const AnnotatedBarcode& b, const FilteredComplex& c,
                             std::optional<int> k_opt) {
  const int k = k_opt.value_or(std::max(1, c.dimension() - 1));
  const ReducedCoboundary rc = reduce_coboundary(c);
  std::mt19937_64 rng(0x5eed);

  for (double t : c.critical_values()) {
    const CohomBasis oracle_basis = cohomology_basis(c, t, k);
    for (int p = 1; p <= k; ++p) {
      std::vector<Cochain> reps;
      for (const Bar& bar : b.bars) {
        if (bar.dim == p && bar.contains(t)) reps.push_back(bar.representative.restricted(c, t));
      }
      for (const Cochain& r : reps) {
        if (!is_cocycle_at(r, t, c)) return failure(t, p, "representative is not a cocycle");
      }
      const std::size_t expected = oracle_basis.by_dim[static_cast<std::size_t>(p)].size();
      if (reps.size() != expected) {
        return failure(t, p,
                       "found " + std::to_string(reps.size()) + " classes, expected " +
                           std::to_string(expected));
      }
      const std::size_t n = reps.size();
      if (n == 0) continue;
      if (n <= 12) {
        // Gray-code walk over all non-trivial combinations.
        Cochain acc(p);
        for (std::size_t g = 1; g < (std::size_t{1} << n); ++g) {
          const std::size_t flip = static_cast<std::size_t>(__builtin_ctzll(g));
          acc += reps[flip];
          if (is_coboundary(acc, t, rc, c)) return failure(t, p, "representatives are dependent");
        }
      } else {
        std::uniform_int_distribution<int> coin(0, 1);
        for (int trial = 0; trial < 4096; ++trial) {
          Cochain acc(p);
          bool any = false;
          for (const Cochain& r : reps) {
            if (coin(rng)) {
              acc += r;
              any = true;
            }
          }
          if (any && is_coboundary(acc, t, rc, c)) {
            return failure(t, p, "representatives are dependent");
          }
        }
      }
    }
  }
  return {};
}

}  // namespace cuplength
