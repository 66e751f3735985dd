#pragma once

#include <compare>
#include <string>
#include <vector>

namespace cuplength {

/// An interval <left, right> of the real line; right may be +infinity (always
/// treated as open). Either left < right, or left == right with both ends
/// closed.
struct Interval {
  double left = 0.0;
  double right = 0.0;
  bool left_closed = true;
  bool right_closed = true;

  static Interval closed(double a, double b) { return {a, b, true, true}; }
  static Interval open(double a, double b) { return {a, b, false, false}; }
  /// [a, b), or [a, inf) when b is infinite.
  static Interval closed_open(double a, double b) { return {a, b, true, false}; }

  bool is_infinite() const noexcept;
  /// Whether the end-point data describes a non-empty set.
  bool is_valid() const noexcept;
  /// Set containment, honoring endpoint closures.
  bool contains(const Interval& other) const noexcept;
  bool contains(double t) const noexcept;

  std::string to_string() const;

  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// Intersection; is_valid() is false on the result when it is empty.
Interval intersect(const Interval& a, const Interval& b);

struct Generator {
  Interval interval;
  int value = 0;

  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// A function Int -> N represented by generators:
///   f(I) = max{ value : generator interval contains I }, 0 if none.
/// Such functions are monotone: I subset J implies f(I) >= f(J).
class CupFunction {
 public:
  CupFunction() = default;
  /// Drops generators with non-positive value or an empty interval; sorts and
  /// deduplicates the rest.
  explicit CupFunction(std::vector<Generator> generators);

  const std::vector<Generator>& generators() const noexcept { return generators_; }
  bool empty() const noexcept { return generators_.empty(); }

  /// Finite endpoints of all generators.
  std::vector<double> endpoints() const;

  friend bool operator==(const CupFunction&, const CupFunction&) = default;

 private:
  std::vector<Generator> generators_;
};

class CupDiagram;

/// The diagram's points become the generators (max-over-containing-intervals
/// reconstruction).
CupFunction reconstruct(const CupDiagram& d);

int evaluate(const CupFunction& f, const Interval& query);

CupFunction pointwise_sum(const CupFunction& f, const CupFunction& g);
CupFunction pointwise_max(const CupFunction& f, const CupFunction& g);

/// Infimum of eps >= 0 such that f([a,b]) >= g([a-eps, b+eps]) and
/// g([a,b]) >= f([a-eps, b+eps]) for every closed [a,b]; +infinity if no
/// eps works.
double erosion_distance(const CupFunction& f, const CupFunction& g);

/// Whether f and g are eps-eroded (the predicate behind erosion_distance).
bool is_eroded(const CupFunction& f, const CupFunction& g, double eps);

/// Cup-length function of the Vietoris-Rips filtration of the unit geodesic
/// circle, intervals l = 0..L.
CupFunction analytic_vr_circle(int L);
/// Same intervals at value 2 (the l-infinity torus).
CupFunction analytic_vr_torus(int L);
/// Value 1 on (0, arccos(-1/3)), the known part for S^1 v S^2 v S^1.
CupFunction analytic_vr_wedge_lower();

}  // namespace cuplength
