#include "cuplength/complex.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cuplength/error.hpp"

namespace cuplength {

namespace {

bool canonical_less(const Simplex& a, double ga, const Simplex& b, double gb) {
  if (ga != gb) return ga < gb;
  if (a.dimension() != b.dimension()) return a.dimension() < b.dimension();
  return a < b;
}

}  // namespace

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw Error(ErrorKind::InvalidSimplex, "simplex has no vertices");
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    if (vertices_[i - 1] >= vertices_[i]) {
      throw Error(ErrorKind::InvalidSimplex, "vertices must be strictly increasing: " + to_string());
    }
  }
}

Simplex::Simplex(std::initializer_list<Vertex> vertices)
    : Simplex(std::vector<Vertex>(vertices)) {}

Simplex Simplex::from_unsorted(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  return Simplex(std::move(vertices));
}

std::vector<Simplex> Simplex::facets() const {
  std::vector<Simplex> out;
  if (vertices_.size() < 2) return out;
  out.reserve(vertices_.size());
  for (std::size_t skip = 0; skip < vertices_.size(); ++skip) {
    std::vector<Vertex> face;
    face.reserve(vertices_.size() - 1);
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (i != skip) face.push_back(vertices_[i]);
    }
    Simplex f;
    f.vertices_ = std::move(face);
    out.push_back(std::move(f));
  }
  return out;
}

std::string Simplex::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) os << ',';
    os << vertices_[i];
  }
  os << ']';
  return os.str();
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Vertex v : s.vertices()) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

FilteredComplex FilteredComplex::from_canonical(std::vector<Simplex> simplices,
                                                std::vector<double> grades) {
  FilteredComplex c;
  c.simplices_ = std::move(simplices);
  c.grades_ = std::move(grades);
  c.index_.reserve(c.simplices_.size());
  for (std::size_t i = 0; i < c.simplices_.size(); ++i) {
    c.index_.emplace(c.simplices_[i], i);
    c.dimension_ = std::max(c.dimension_, c.simplices_[i].dimension());
  }
  c.critical_values_ = c.grades_;
  std::sort(c.critical_values_.begin(), c.critical_values_.end());
  c.critical_values_.erase(std::unique(c.critical_values_.begin(), c.critical_values_.end()),
                           c.critical_values_.end());
  return c;
}

FilteredComplex FilteredComplex::from_simplex_list(std::vector<SimplexEntry> entries) {
  if (entries.empty()) throw Error(ErrorKind::InvalidArgument, "empty simplex list");

  std::vector<std::pair<Simplex, double>> items;
  items.reserve(entries.size());
  std::unordered_map<Simplex, double, SimplexHash> grade_of;
  grade_of.reserve(entries.size());
  for (auto& e : entries) {
    if (!std::isfinite(e.grade)) {
      throw Error(ErrorKind::InvalidArgument, "grades must be finite");
    }
    Simplex s = Simplex::from_unsorted(std::move(e.vertices));
    if (!grade_of.emplace(s, e.grade).second) {
      throw Error(ErrorKind::DuplicateSimplex, s.to_string());
    }
    items.emplace_back(std::move(s), e.grade);
  }

  for (const auto& [s, g] : items) {
    for (const Simplex& f : s.facets()) {
      auto it = grade_of.find(f);
      if (it == grade_of.end()) {
        throw Error(ErrorKind::MissingFace, f.to_string() + " (face of " + s.to_string() + ")");
      }
      if (it->second > g) {
        throw Error(ErrorKind::NonMonotoneGrades,
                    f.to_string() + " has a larger grade than its coface " + s.to_string());
      }
    }
  }

  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    return canonical_less(a.first, a.second, b.first, b.second);
  });
  std::vector<Simplex> simplices;
  std::vector<double> grades;
  simplices.reserve(items.size());
  grades.reserve(items.size());
  for (auto& [s, g] : items) {
    simplices.push_back(std::move(s));
    grades.push_back(g);
  }
  return from_canonical(std::move(simplices), std::move(grades));
}

std::optional<std::size_t> FilteredComplex::index_of(const Simplex& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool FilteredComplex::is_critical_value(double t) const {
  return std::binary_search(critical_values_.begin(), critical_values_.end(), t);
}

std::optional<double> FilteredComplex::critical_predecessor(double t) const {
  auto it = std::lower_bound(critical_values_.begin(), critical_values_.end(), t);
  if (it == critical_values_.begin()) return std::nullopt;
  return *std::prev(it);
}

std::optional<double> FilteredComplex::critical_successor(double t) const {
  auto it = std::upper_bound(critical_values_.begin(), critical_values_.end(), t);
  if (it == critical_values_.end()) return std::nullopt;
  return *it;
}

std::size_t FilteredComplex::count_alive(double t, int min_dim) const {
  // Canonical order is grade-major, so alive simplices form a prefix.
  auto end = std::upper_bound(grades_.begin(), grades_.end(), t);
  std::size_t n = 0;
  for (auto it = grades_.begin(); it != end; ++it) {
    if (simplices_[static_cast<std::size_t>(it - grades_.begin())].dimension() >= min_dim) ++n;
  }
  return n;
}

std::size_t FilteredComplex::count_with_min_dim(int min_dim) const {
  return static_cast<std::size_t>(std::count_if(
      simplices_.begin(), simplices_.end(),
      [min_dim](const Simplex& s) { return s.dimension() >= min_dim; }));
}

std::vector<SimplexEntry> FilteredComplex::entries() const {
  std::vector<SimplexEntry> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    auto v = simplices_[i].vertices();
    out.push_back({std::vector<Vertex>(v.begin(), v.end()), grades_[i]});
  }
  return out;
}

DistanceMatrix::DistanceMatrix(std::vector<std::vector<double>> rows, double tolerance)
    : n_(rows.size()) {
  data_.resize(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (rows[i].size() != n_) {
      throw Error(ErrorKind::AsymmetricMatrix, "distance matrix is not square");
    }
    for (std::size_t j = 0; j < n_; ++j) {
      double v = rows[i][j];
      if (std::isnan(v)) throw Error(ErrorKind::InvalidArgument, "NaN distance");
      if (v < 0) throw Error(ErrorKind::NegativeDistance, "negative distance at row " + std::to_string(i));
      data_[i * n_ + j] = v;
    }
  }
  for (std::size_t i = 0; i < n_; ++i) {
    if (data_[i * n_ + i] != 0.0) {
      throw Error(ErrorKind::AsymmetricMatrix, "non-zero diagonal at row " + std::to_string(i));
    }
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (std::abs(data_[i * n_ + j] - data_[j * n_ + i]) > tolerance) {
        throw Error(ErrorKind::AsymmetricMatrix,
                    "entries (" + std::to_string(i) + "," + std::to_string(j) + ") differ");
      }
    }
  }
}

FilteredComplex build_vietoris_rips(const DistanceMatrix& d, int max_dim, double max_scale) {
  if (max_dim < 0) throw Error(ErrorKind::InvalidArgument, "max_dim must be >= 0");
  const std::size_t n = d.size();
  std::vector<Simplex> simplices;
  std::vector<double> grades;

  // Depth-first clique extension in increasing vertex order.
  std::vector<Vertex> current;
  auto extend = [&](auto&& self, double diameter) -> void {
    simplices.emplace_back(current);
    grades.push_back(diameter);
    if (static_cast<int>(current.size()) > max_dim) return;
    for (std::size_t v = current.back() + 1; v < n; ++v) {
      double diam = diameter;
      for (Vertex u : current) diam = std::max(diam, d(u, v));
      if (diam > max_scale) continue;
      current.push_back(static_cast<Vertex>(v));
      self(self, diam);
      current.pop_back();
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    current.assign(1, static_cast<Vertex>(v));
    extend(extend, 0.0);
  }

  std::vector<std::size_t> order(simplices.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return canonical_less(simplices[a], grades[a], simplices[b], grades[b]);
  });
  std::vector<Simplex> sorted;
  std::vector<double> sorted_grades;
  sorted.reserve(order.size());
  sorted_grades.reserve(order.size());
  for (std::size_t i : order) {
    sorted.push_back(std::move(simplices[i]));
    sorted_grades.push_back(grades[i]);
  }
  return FilteredComplex::from_canonical(std::move(sorted), std::move(sorted_grades));
}

FilteredComplex truncate(const FilteredComplex& c, int dim_cap) {
  if (dim_cap < 0) throw Error(ErrorKind::InvalidArgument, "dim_cap must be >= 0");
  std::vector<Simplex> simplices;
  std::vector<double> grades;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c.simplex(i).dimension() <= dim_cap) {
      simplices.push_back(c.simplex(i));
      grades.push_back(c.grade(i));
    }
  }
  return FilteredComplex::from_canonical(std::move(simplices), std::move(grades));
}

bool alive_at(const FilteredComplex& c, const Simplex& s, double t) {
  auto idx = c.index_of(s);
  if (!idx) throw Error(ErrorKind::UnknownSimplex, s.to_string());
  return c.grade(*idx) <= t;
}

}  // namespace cuplength
