#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cuplength/cochain.hpp"
#include "cuplength/cohomology.hpp"
#include "cuplength/complex.hpp"
#include "cuplength/invariants.hpp"
#include "cuplength/z2linalg.hpp"

namespace cuplength {

/// Intervals [b, d) (d possibly infinite) mapped to the largest l for which
/// the interval was found as the support of an l-fold product.
class CupDiagram {
 public:
  CupDiagram() = default;

  const std::map<Interval, int>& points() const noexcept { return points_; }
  bool empty() const noexcept { return points_.empty(); }
  std::size_t size() const noexcept { return points_.size(); }

  /// Keeps the larger of the stored and the new value. Non-positive values and
  /// empty intervals are ignored.
  void record(const Interval& interval, int value);
  /// 0 when absent.
  int value(const Interval& interval) const;

  friend bool operator==(const CupDiagram&, const CupDiagram&) = default;

 private:
  std::map<Interval, int> points_;
};

struct RunStats {
  std::size_t m_k = 0;  // positive-dimensional simplices
  std::size_t q_1 = 0;
  std::vector<std::size_t> q_ell;  // q_ell[l] = |B_l|; index 0 unused
  std::size_t product_count = 0;
  std::size_t coboundary_test_count = 0;
};

/// Cochain-level cup product. Empty if the degrees add up past dim(c).
Cochain cup_product(const Cochain& sigma1, const Cochain& sigma2, const FilteredComplex& c);

/// Closed-right support [b, d] on the critical grid of a product whose factors
/// live on `factor_intervals` (reported as [b, d) by the bars). The result
/// uses closed ends on both sides; nullopt if the product is zero everywhere
/// on the intersection.
std::optional<Interval> support(const Cochain& product, std::span<const Interval> factor_intervals,
                                const ReducedCoboundary& rc, const FilteredComplex& c,
                                std::span<const double> birth_grid,
                                std::size_t* coboundary_tests = nullptr);

/// The persistent cup-length diagram. `threads` = 0 reads CUPLENGTH_THREADS
/// (default: hardware concurrency). The result does not depend on it.
std::pair<CupDiagram, RunStats> cup_diagram(const AnnotatedBarcode& b, const FilteredComplex& c,
                                            int k, double trim_eps = 0.0,
                                            unsigned threads = 0);

/// Number of worker threads implied by CUPLENGTH_THREADS.
unsigned default_thread_count();

}  // namespace cuplength
