#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cuplength/cochain.hpp"
#include "cuplength/complex.hpp"

namespace cuplength {

using Index = std::uint32_t;

/// Sparse matrix over Z2 stored by columns; each column is the sorted list of
/// row indices holding a 1.
class SparseZ2Matrix {
 public:
  SparseZ2Matrix() = default;
  SparseZ2Matrix(std::size_t rows, std::size_t cols);
  /// Sorts each column; duplicated or out-of-range rows throw InvalidArgument.
  static SparseZ2Matrix from_columns(std::size_t rows, std::vector<std::vector<Index>> columns);
  static SparseZ2Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }
  std::span<const Index> column(std::size_t j) const { return columns_[j]; }
  bool get(std::size_t i, std::size_t j) const;
  /// Largest row index carrying a 1, if the column is non-zero.
  std::optional<Index> pivot(std::size_t j) const;
  std::size_t nonzeros() const;

  /// column(target) += column(source)
  void add_column(std::size_t target, std::size_t source);
  void set_column(std::size_t j, std::vector<Index> rows);

  SparseZ2Matrix transpose() const;
  bool is_upper_triangular(bool unit_diagonal) const;

  friend SparseZ2Matrix operator*(const SparseZ2Matrix& a, const SparseZ2Matrix& b);
  friend bool operator==(const SparseZ2Matrix&, const SparseZ2Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::vector<std::vector<Index>> columns_;
};

/// acc := acc xor other, both sorted.
void xor_into(std::vector<Index>& acc, std::span<const Index> other);

/// Indexing of cosimplices: the simplices of dimension >= first_dim, taken in
/// reverse filtration order (cosimplex 0 is the last simplex).
struct CosimplexBasis {
  static constexpr Index npos = static_cast<Index>(-1);

  int first_dim = 1;
  std::vector<std::size_t> simplex_of;  ///< cosimplex index -> complex index
  std::vector<Index> cosimplex_of;      ///< complex index -> cosimplex index or npos

  CosimplexBasis() = default;
  CosimplexBasis(const FilteredComplex& c, int first_dim);
  std::size_t size() const noexcept { return simplex_of.size(); }
};

/// Coboundary matrix in the cosimplex basis: entry (row a*, col b*) is 1 iff
/// b is a codimension-1 face of a. Vertices are excluded when first_dim = 1.
SparseZ2Matrix coboundary_matrix(const FilteredComplex& c, int first_dim = 1);

struct ReducedCoboundary {
  SparseZ2Matrix A, R, V, U;
  std::vector<Index> pivots;        ///< sorted pivot rows of R
  std::vector<bool> is_pivot_row;   ///< indexed by row
  std::vector<Index> pivot_column;  ///< row -> column owning it as pivot, or npos
  /// For each critical value t (same order as critical_values()), the number of
  /// indexed simplices alive at t. Alive simplices are the trailing block.
  std::vector<std::size_t> stage_sizes;
  CosimplexBasis basis;

  std::size_t size() const noexcept { return A.cols(); }
};

/// Left-to-right column reduction R = A V with unique column pivots.
/// Only A, R, V and the pivot tables are filled in.
ReducedCoboundary column_reduce(SparseZ2Matrix a);

/// Bottom-to-top elimination with pivot rows: returns U (upper unitriangular)
/// such that U R has at most one non-zero per row and column.
SparseZ2Matrix row_reduce(const SparseZ2Matrix& r);

/// Coboundary matrix of the positive-dimensional simplices of c, reduced by
/// columns and rows, with stage sizes for every critical value.
ReducedCoboundary reduce_coboundary(const FilteredComplex& c);

/// Whether sigma, restricted to the stage at t, is a coboundary there.
/// Throws SimplexNotAlive if a summand has grade > t and UnknownSimplex if a
/// summand is not in c.
bool is_coboundary(const Cochain& sigma, double t, const ReducedCoboundary& rc,
                   const FilteredComplex& c);

/// Same test, but summands not alive at t are dropped first.
bool is_coboundary_after_restriction(const Cochain& sigma, double t, const ReducedCoboundary& rc,
                                     const FilteredComplex& c);

}  // namespace cuplength
