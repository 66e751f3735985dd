#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cuplength/cochain.hpp"
#include "cuplength/complex.hpp"
#include "cuplength/invariants.hpp"

namespace cuplength {

/// Brute-force ground truth, deliberately independent of the reduction and
/// cup-product code paths: dense Gaussian elimination and a cup product
/// evaluated from its defining formula on each simplex.

struct CohomBasis {
  double t = 0.0;
  /// by_dim[p] is a list of cocycles whose classes form a basis of H^p(X_t).
  std::vector<std::vector<Cochain>> by_dim;
};

/// Bases of H^p(X_t) for p = 0..k. Throws NotCriticalValue.
CohomBasis cohomology_basis(const FilteredComplex& c, double t, int k);

/// Cup-length of the image ring of H^*(X_s) -> H^*(X_t), t <= s, counting
/// products of total degree <= k. Throws NotCriticalValue.
int image_cup_length(const FilteredComplex& c, double t, double s, int k);

/// The cup-length function evaluated directly on the critical grid, as
/// generators [t_i, t_{j+1}) (the last one reaching infinity).
CupFunction oracle_cup_function(const FilteredComplex& c, int k);

/// Values on the grid: values[i][j] = image_cup_length(c, t_i, t_j, k), j >= i.
std::vector<std::vector<int>> oracle_grid_values(const FilteredComplex& c, int k);

/// Compares two functions on every closed [t_i, t_j] of the grid and on
/// [t_i, t_last + 1]; returns the first disagreeing query.
std::optional<Interval> first_grid_mismatch(const CupFunction& f, const CupFunction& g,
                                            std::span<const double> grid);

}  // namespace cuplength
