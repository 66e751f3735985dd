#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cuplength {

using Vertex = std::uint32_t;

/// A simplex is a non-empty, strictly increasing list of vertex ids.
class Simplex {
 public:
  Simplex() = default;
  /// Throws InvalidSimplex unless `vertices` is non-empty and strictly increasing.
  explicit Simplex(std::vector<Vertex> vertices);
  Simplex(std::initializer_list<Vertex> vertices);

  /// Sorts the input; repeated vertices are rejected with InvalidSimplex.
  static Simplex from_unsorted(std::vector<Vertex> vertices);

  int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  Vertex front() const { return vertices_.front(); }
  Vertex back() const { return vertices_.back(); }

  /// Codimension-1 faces, in the order obtained by deleting vertex 0, 1, ...
  std::vector<Simplex> facets() const;

  std::string to_string() const;

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend auto operator<=>(const Simplex&, const Simplex&) = default;

 private:
  std::vector<Vertex> vertices_;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

class DistanceMatrix;

/// Input record for FilteredComplex::from_simplex_list.
struct SimplexEntry {
  std::vector<Vertex> vertices;
  double grade = 0.0;
};

/// Finite simplicial filtration. Simplices are kept in the canonical total
/// order (grade, then dimension, then lexicographic vertices), which refines
/// the face order. Immutable once built.
class FilteredComplex {
 public:
  FilteredComplex() = default;

  /// Validates face closure, grade monotonicity and uniqueness.
  /// Errors: InvalidArgument (empty input), InvalidSimplex, DuplicateSimplex,
  /// MissingFace, NonMonotoneGrades.
  static FilteredComplex from_simplex_list(std::vector<SimplexEntry> entries);

  std::size_t size() const noexcept { return simplices_.size(); }
  bool empty() const noexcept { return simplices_.empty(); }
  const Simplex& simplex(std::size_t i) const { return simplices_[i]; }
  double grade(std::size_t i) const { return grades_[i]; }
  std::span<const Simplex> simplices() const noexcept { return simplices_; }
  std::span<const double> grades() const noexcept { return grades_; }

  /// Position in the canonical order, if present.
  std::optional<std::size_t> index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }

  /// Largest simplex dimension, -1 for the empty complex.
  int dimension() const noexcept { return dimension_; }

  /// Sorted, deduplicated grades.
  std::span<const double> critical_values() const noexcept { return critical_values_; }
  bool is_critical_value(double t) const;
  /// Last critical value strictly smaller than t.
  std::optional<double> critical_predecessor(double t) const;
  /// First critical value strictly larger than t.
  std::optional<double> critical_successor(double t) const;

  /// Number of simplices of dimension >= min_dim with grade <= t.
  std::size_t count_alive(double t, int min_dim = 0) const;
  /// Number of simplices of dimension >= min_dim.
  std::size_t count_with_min_dim(int min_dim) const;

  /// Underlying entries (in canonical order), e.g. for serialization.
  std::vector<SimplexEntry> entries() const;

 private:
  std::vector<Simplex> simplices_;
  std::vector<double> grades_;
  std::vector<double> critical_values_;
  std::unordered_map<Simplex, std::size_t, SimplexHash> index_;
  int dimension_ = -1;

  friend FilteredComplex truncate(const FilteredComplex& c, int dim_cap);
  friend FilteredComplex build_vietoris_rips(const DistanceMatrix& d, int max_dim,
                                             double max_scale);
  static FilteredComplex from_canonical(std::vector<Simplex> simplices, std::vector<double> grades);
};

/// Dense symmetric distance matrix with zero diagonal.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  /// Throws AsymmetricMatrix (asymmetry beyond `tolerance`, non-square rows or
  /// non-zero diagonal) or NegativeDistance.
  explicit DistanceMatrix(std::vector<std::vector<double>> rows, double tolerance = 1e-12);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// Vietoris-Rips filtration: every vertex set of at most max_dim+1 points
/// with diameter <= max_scale, graded by diameter (vertices at 0).
FilteredComplex build_vietoris_rips(const DistanceMatrix& d, int max_dim, double max_scale);

/// Keeps exactly the simplices of dimension <= dim_cap. To preserve
/// cohomology up to degree k pass dim_cap = k + 1.
FilteredComplex truncate(const FilteredComplex& c, int dim_cap);

/// grade(s) <= t. Throws UnknownSimplex if s is not in c.
bool alive_at(const FilteredComplex& c, const Simplex& s, double t);

}  // namespace cuplength
