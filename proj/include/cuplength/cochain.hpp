#pragma once

#include <span>
#include <string>
#include <vector>

#include "cuplength/complex.hpp"

namespace cuplength {

/// A Z2 p-cochain: the formal sum of the duals of its summands. Summands are
/// kept sorted and unique; adding a simplex twice cancels it.
class Cochain {
 public:
  Cochain() = default;
  explicit Cochain(int dimension) : dimension_(dimension) {}
  /// Repeated summands cancel in pairs. Throws InvalidArgument if a summand
  /// has the wrong dimension.
  Cochain(int dimension, std::vector<Simplex> summands);

  int dimension() const noexcept { return dimension_; }
  bool empty() const noexcept { return summands_.empty(); }
  std::size_t size() const noexcept { return summands_.size(); }
  std::span<const Simplex> summands() const noexcept { return summands_; }
  bool contains(const Simplex& s) const;

  /// Z2 sum. Both operands must share a dimension unless one is empty.
  Cochain& operator+=(const Cochain& other);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }

  /// Summands alive at t in c (summands missing from c are dropped).
  Cochain restricted(const FilteredComplex& c, double t) const;

  std::string to_string() const;

  friend bool operator==(const Cochain&, const Cochain&) = default;
  friend auto operator<=>(const Cochain&, const Cochain&) = default;

 private:
  int dimension_ = 0;
  std::vector<Simplex> summands_;
};

}  // namespace cuplength
