#include "cuplength/z2linalg.hpp"

#include <algorithm>
#include <numeric>

#include "cuplength/error.hpp"

namespace cuplength {

SparseZ2Matrix::SparseZ2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), columns_(cols) {}

SparseZ2Matrix SparseZ2Matrix::from_columns(std::size_t rows,
                                            std::vector<std::vector<Index>> columns) {
  SparseZ2Matrix m(rows, 0);
  for (auto& col : columns) {
    std::sort(col.begin(), col.end());
    if (std::adjacent_find(col.begin(), col.end()) != col.end()) {
      throw Error(ErrorKind::InvalidArgument, "repeated row index in column");
    }
    if (!col.empty() && col.back() >= rows) {
      throw Error(ErrorKind::InvalidArgument, "row index out of range");
    }
  }
  m.columns_ = std::move(columns);
  return m;
}

SparseZ2Matrix SparseZ2Matrix::identity(std::size_t n) {
  SparseZ2Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) m.columns_[j].push_back(static_cast<Index>(j));
  return m;
}

bool SparseZ2Matrix::get(std::size_t i, std::size_t j) const {
  const auto& col = columns_[j];
  return std::binary_search(col.begin(), col.end(), static_cast<Index>(i));
}

std::optional<Index> SparseZ2Matrix::pivot(std::size_t j) const {
  if (columns_[j].empty()) return std::nullopt;
  return columns_[j].back();
}

std::size_t SparseZ2Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& col : columns_) n += col.size();
  return n;
}

void SparseZ2Matrix::add_column(std::size_t target, std::size_t source) {
  if (target == source) {
    columns_[target].clear();
    return;
  }
  xor_into(columns_[target], columns_[source]);
}

void SparseZ2Matrix::set_column(std::size_t j, std::vector<Index> rows) {
  std::sort(rows.begin(), rows.end());
  columns_[j] = std::move(rows);
}

SparseZ2Matrix SparseZ2Matrix::transpose() const {
  SparseZ2Matrix t(cols(), rows_);
  for (std::size_t j = 0; j < cols(); ++j) {
    for (Index i : columns_[j]) t.columns_[i].push_back(static_cast<Index>(j));
  }
  return t;
}

bool SparseZ2Matrix::is_upper_triangular(bool unit_diagonal) const {
  for (std::size_t j = 0; j < cols(); ++j) {
    const auto& col = columns_[j];
    if (!col.empty() && col.back() > j) return false;
    if (unit_diagonal && (col.empty() || col.back() != j)) return false;
  }
  return true;
}

SparseZ2Matrix operator*(const SparseZ2Matrix& a, const SparseZ2Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::InvalidArgument, "dimension mismatch");
  SparseZ2Matrix out(a.rows(), b.cols());
  std::vector<char> acc(a.rows(), 0);
  std::vector<Index> touched;
  for (std::size_t j = 0; j < b.cols(); ++j) {
    touched.clear();
    for (Index k : b.column(j)) {
      for (Index i : a.column(k)) {
        if (!acc[i]) touched.push_back(i);
        acc[i] ^= 1;
      }
    }
    std::vector<Index> col;
    for (Index i : touched) {
      if (acc[i]) col.push_back(i);
      acc[i] = 0;
    }
    std::sort(col.begin(), col.end());
    col.erase(std::unique(col.begin(), col.end()), col.end());
    out.columns_[j] = std::move(col);
  }
  return out;
}

void xor_into(std::vector<Index>& acc, std::span<const Index> other) {
  std::vector<Index> out;
  out.reserve(acc.size() + other.size());
  std::set_symmetric_difference(acc.begin(), acc.end(), other.begin(), other.end(),
                                std::back_inserter(out));
  acc = std::move(out);
}

CosimplexBasis::CosimplexBasis(const FilteredComplex& c, int first) : first_dim(first) {
  cosimplex_of.assign(c.size(), npos);
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c.simplex(i).dimension() >= first_dim) {
      cosimplex_of[i] = static_cast<Index>(simplex_of.size());
      simplex_of.push_back(i);
    }
  }
}

SparseZ2Matrix coboundary_matrix(const FilteredComplex& c, int first_dim) {
  CosimplexBasis basis(c, first_dim);
  std::vector<std::vector<Index>> columns(basis.size());
  for (std::size_t row = 0; row < basis.size(); ++row) {
    const Simplex& s = c.simplex(basis.simplex_of[row]);
    if (s.dimension() <= first_dim) continue;
    for (const Simplex& f : s.facets()) {
      columns[basis.cosimplex_of[*c.index_of(f)]].push_back(static_cast<Index>(row));
    }
  }
  return SparseZ2Matrix::from_columns(basis.size(), std::move(columns));
}

ReducedCoboundary column_reduce(SparseZ2Matrix a) {
  const std::size_t n = a.cols();
  ReducedCoboundary rc;
  rc.R = a;
  rc.V = SparseZ2Matrix::identity(n);
  rc.pivot_column.assign(a.rows(), CosimplexBasis::npos);
  rc.is_pivot_row.assign(a.rows(), false);

  for (std::size_t j = 0; j < n; ++j) {
    while (auto piv = rc.R.pivot(j)) {
      Index other = rc.pivot_column[*piv];
      if (other == CosimplexBasis::npos) break;
      rc.R.add_column(j, other);
      rc.V.add_column(j, other);
    }
    if (auto piv = rc.R.pivot(j)) {
      rc.pivot_column[*piv] = static_cast<Index>(j);
      rc.is_pivot_row[*piv] = true;
      rc.pivots.push_back(*piv);
    }
  }
  std::sort(rc.pivots.begin(), rc.pivots.end());
  rc.A = std::move(a);
  return rc;
}

namespace {

void toggle(std::vector<Index>& sorted, Index value) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), value);
  if (it != sorted.end() && *it == value) {
    sorted.erase(it);
  } else {
    sorted.insert(it, value);
  }
}

}  // namespace

SparseZ2Matrix row_reduce(const SparseZ2Matrix& r) {
  const std::size_t m = r.rows();
  // Current R kept both by rows and by columns; U kept by rows.
  const SparseZ2Matrix rt = r.transpose();
  std::vector<std::vector<Index>> row_entries(m);
  for (std::size_t i = 0; i < m; ++i) {
    auto row = rt.column(i);
    row_entries[i].assign(row.begin(), row.end());
  }
  std::vector<std::vector<Index>> col_entries(r.cols());
  for (std::size_t j = 0; j < r.cols(); ++j) {
    auto col = r.column(j);
    col_entries[j].assign(col.begin(), col.end());
  }
  std::vector<std::vector<Index>> u_rows(m);
  for (std::size_t i = 0; i < m; ++i) u_rows[i].push_back(static_cast<Index>(i));

  std::vector<std::pair<Index, Index>> pivot_pairs;  // (pivot row, column)
  for (std::size_t j = 0; j < r.cols(); ++j) {
    if (auto p = r.pivot(j)) pivot_pairs.emplace_back(*p, static_cast<Index>(j));
  }
  std::sort(pivot_pairs.begin(), pivot_pairs.end(), std::greater<>());

  std::vector<Index> targets;
  for (auto [p, j] : pivot_pairs) {
    targets.clear();
    for (Index i : col_entries[j]) {
      if (i < p) targets.push_back(i);
    }
    for (Index i : targets) {
      for (Index jj : row_entries[p]) toggle(col_entries[jj], i);
      xor_into(row_entries[i], row_entries[p]);
      xor_into(u_rows[i], u_rows[p]);
    }
  }

  std::vector<std::vector<Index>> u_cols(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (Index q : u_rows[i]) u_cols[q].push_back(static_cast<Index>(i));
  }
  return SparseZ2Matrix::from_columns(m, std::move(u_cols));
}

ReducedCoboundary reduce_coboundary(const FilteredComplex& c) {
  CosimplexBasis basis(c, 1);
  ReducedCoboundary rc = column_reduce(coboundary_matrix(c, 1));
  rc.U = row_reduce(rc.R);
  for (double t : c.critical_values()) rc.stage_sizes.push_back(c.count_alive(t, 1));
  rc.basis = std::move(basis);
  return rc;
}

namespace {

// Union-find with parity: potential(v) xor potential(root) is tracked so that
// a 1-cochain is a coboundary iff all edge constraints are consistent.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(std::size_t n) : parent_(n), parity_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::pair<std::size_t, int> find(std::size_t v) {
    int par = 0;
    std::size_t root = v;
    while (parent_[root] != root) {
      par ^= parity_[root];
      root = parent_[root];
    }
    // path compression
    int acc = par;
    while (parent_[v] != v) {
      std::size_t next = parent_[v];
      int next_acc = acc ^ parity_[v];
      parent_[v] = root;
      parity_[v] = static_cast<char>(acc);
      v = next;
      acc = next_acc;
    }
    return {root, par};
  }

  /// Requires potential(a) xor potential(b) == w; false on contradiction.
  bool unite(std::size_t a, std::size_t b, int w) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == w;
    parent_[ra] = rb;
    parity_[ra] = static_cast<char>(pa ^ pb ^ w);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<char> parity_;
};

bool is_one_coboundary(const Cochain& sigma, double t, const FilteredComplex& c) {
  Vertex max_vertex = 0;
  for (const Simplex& s : c.simplices()) {
    if (s.dimension() == 0) max_vertex = std::max(max_vertex, s.front());
  }
  ParityUnionFind uf(static_cast<std::size_t>(max_vertex) + 1);
  for (std::size_t i = 0; i < c.size() && c.grade(i) <= t; ++i) {
    const Simplex& e = c.simplex(i);
    if (e.dimension() != 1) continue;
    int w = sigma.contains(e) ? 1 : 0;
    if (!uf.unite(e.front(), e.back(), w)) return false;
  }
  return true;
}

bool coboundary_test(const Cochain& sigma, double t, const ReducedCoboundary& rc,
                     const FilteredComplex& c) {
  if (sigma.empty()) return true;
  if (sigma.dimension() == 0) return false;
  if (sigma.dimension() == 1) return is_one_coboundary(sigma, t, c);

  const std::size_t m = rc.size();
  const std::size_t alive = c.count_alive(t, 1);
  const Index first = static_cast<Index>(m - alive);
  std::vector<Index> uy;
  for (const Simplex& s : sigma.summands()) {
    Index q = rc.basis.cosimplex_of[*c.index_of(s)];
    auto col = rc.U.column(q);
    auto begin = std::lower_bound(col.begin(), col.end(), first);
    xor_into(uy, std::span<const Index>(begin, col.end()));
  }
  return std::all_of(uy.begin(), uy.end(), [&](Index u) { return rc.is_pivot_row[u]; });
}

}  // namespace

bool is_coboundary(const Cochain& sigma, double t, const ReducedCoboundary& rc,
                   const FilteredComplex& c) {
  for (const Simplex& s : sigma.summands()) {
    auto idx = c.index_of(s);
    if (!idx) throw Error(ErrorKind::UnknownSimplex, s.to_string());
    if (c.grade(*idx) > t) throw Error(ErrorKind::SimplexNotAlive, s.to_string());
  }
  return coboundary_test(sigma, t, rc, c);
}

bool is_coboundary_after_restriction(const Cochain& sigma, double t, const ReducedCoboundary& rc,
                                     const FilteredComplex& c) {
  return coboundary_test(sigma.restricted(c, t), t, rc, c);
}

}  // namespace cuplength
