#include "cuplength/cochain.hpp"

#include <algorithm>
#include <sstream>

#include "cuplength/error.hpp"

namespace cuplength {

namespace {

// Sorts and removes summands that occur an even number of times.
void cancel_pairs(std::vector<Simplex>& v) {
  std::sort(v.begin(), v.end());
  std::vector<Simplex> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(std::move(v[i]));
    i = j;
  }
  v = std::move(out);
}

}  // namespace

Cochain::Cochain(int dimension, std::vector<Simplex> summands)
    : dimension_(dimension), summands_(std::move(summands)) {
  for (const Simplex& s : summands_) {
    if (s.dimension() != dimension_) {
      throw Error(ErrorKind::InvalidArgument,
                  "summand " + s.to_string() + " is not of dimension " + std::to_string(dimension_));
    }
  }
  cancel_pairs(summands_);
}

bool Cochain::contains(const Simplex& s) const {
  return std::binary_search(summands_.begin(), summands_.end(), s);
}

Cochain& Cochain::operator+=(const Cochain& other) {
  if (other.empty()) return *this;
  if (empty()) {
    *this = other;
    return *this;
  }
  if (other.dimension_ != dimension_) {
    throw Error(ErrorKind::InvalidArgument, "cannot add cochains of different dimensions");
  }
  std::vector<Simplex> out;
  out.reserve(summands_.size() + other.summands_.size());
  std::set_symmetric_difference(summands_.begin(), summands_.end(), other.summands_.begin(),
                                other.summands_.end(), std::back_inserter(out));
  summands_ = std::move(out);
  return *this;
}

Cochain Cochain::restricted(const FilteredComplex& c, double t) const {
  Cochain out(dimension_);
  for (const Simplex& s : summands_) {
    auto idx = c.index_of(s);
    if (idx && c.grade(*idx) <= t) out.summands_.push_back(s);
  }
  return out;
}

std::string Cochain::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < summands_.size(); ++i) {
    if (i) os << ',';
    os << summands_[i].to_string();
  }
  os << ']';
  return os.str();
}

}  // namespace cuplength
