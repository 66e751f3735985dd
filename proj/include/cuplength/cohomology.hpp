#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "cuplength/cochain.hpp"
#include "cuplength/complex.hpp"

namespace cuplength {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// A persistence bar [birth, death) with a representative cocycle. An
/// essential bar has death == +infinity.
struct Bar {
  int dim = 0;
  double birth = 0.0;
  double death = kInfinity;
  Cochain representative;

  bool is_essential() const noexcept { return death == kInfinity; }
  double length() const noexcept { return death - birth; }
  /// birth <= t < death
  bool contains(double t) const noexcept { return birth <= t && t < death; }

  friend bool operator==(const Bar&, const Bar&) = default;
};

/// Positive-dimensional bars ordered by death, then birth.
struct AnnotatedBarcode {
  std::vector<Bar> bars;

  std::vector<double> births() const;  ///< sorted, unique
  int max_dim() const;                 ///< 0 when empty
};

/// Persistent cohomology over Z2 in dimensions 1..k, with representatives
/// taken from the reduced coboundary matrix. Pass the (k+1)-truncation.
AnnotatedBarcode compute_barcode(const FilteredComplex& c, int k);

/// Dimension-0 bars (connected components), via union-find. Representatives
/// are left empty.
std::vector<Bar> dimension_zero_bars(const FilteredComplex& c);

struct FamilyReport {
  bool ok = true;
  std::optional<double> failing_t;
  std::optional<int> failing_dim;
  std::string message;
};

/// Checks that, at every critical value t and every degree p in 1..k, the
/// restricted representatives of bars alive at t form a basis of H^p(X_t).
/// k defaults to dimension(c) - 1.
FamilyReport validate_family(const AnnotatedBarcode& b, const FilteredComplex& c,
                             std::optional<int> k = std::nullopt);

}  // namespace cuplength
