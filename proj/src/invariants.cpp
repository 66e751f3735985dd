#include "cuplength/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "cuplength/cupalg.hpp"

namespace cuplength {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string format_number(double x) {
  if (std::isinf(x)) return "inf";
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

bool Interval::is_infinite() const noexcept { return std::isinf(right); }

bool Interval::is_valid() const noexcept {
  if (std::isnan(left) || std::isnan(right) || std::isinf(left)) return false;
  if (left < right) return true;
  return left == right && left_closed && right_closed;
}

bool Interval::contains(const Interval& o) const noexcept {
  if (o.left < left) return false;
  if (o.left == left && o.left_closed && !left_closed) return false;
  if (o.right > right) return false;
  if (o.right == right && o.right_closed && !right_closed) return false;
  return true;
}

bool Interval::contains(double t) const noexcept {
  const bool after_left = t > left || (t == left && left_closed);
  const bool before_right = t < right || (t == right && right_closed);
  return after_left && before_right;
}

std::string Interval::to_string() const {
  std::string s = left_closed ? "[" : "(";
  s += format_number(left) + ", " + format_number(right);
  s += right_closed && !is_infinite() ? "]" : ")";
  return s;
}

Interval intersect(const Interval& a, const Interval& b) {
  Interval out;
  if (a.left != b.left) {
    out.left = std::max(a.left, b.left);
    out.left_closed = a.left > b.left ? a.left_closed : b.left_closed;
  } else {
    out.left = a.left;
    out.left_closed = a.left_closed && b.left_closed;
  }
  if (a.right != b.right) {
    out.right = std::min(a.right, b.right);
    out.right_closed = a.right < b.right ? a.right_closed : b.right_closed;
  } else {
    out.right = a.right;
    out.right_closed = a.right_closed && b.right_closed;
  }
  return out;
}

CupFunction::CupFunction(std::vector<Generator> generators) {
  for (Generator& g : generators) {
    if (g.value <= 0 || !g.interval.is_valid()) continue;
    if (g.interval.is_infinite()) g.interval.right_closed = false;
    generators_.push_back(g);
  }
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
}

std::vector<double> CupFunction::endpoints() const {
  std::vector<double> out;
  for (const Generator& g : generators_) {
    out.push_back(g.interval.left);
    if (!g.interval.is_infinite()) out.push_back(g.interval.right);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CupFunction reconstruct(const CupDiagram& d) {
  std::vector<Generator> gens;
  gens.reserve(d.size());
  for (const auto& [interval, value] : d.points()) gens.push_back({interval, value});
  return CupFunction(std::move(gens));
}

int evaluate(const CupFunction& f, const Interval& query) {
  int best = 0;
  for (const Generator& g : f.generators()) {
    if (g.value > best && g.interval.contains(query)) best = g.value;
  }
  return best;
}

CupFunction pointwise_sum(const CupFunction& f, const CupFunction& g) {
  std::vector<Generator> gens(f.generators().begin(), f.generators().end());
  gens.insert(gens.end(), g.generators().begin(), g.generators().end());
  for (const Generator& a : f.generators()) {
    for (const Generator& b : g.generators()) {
      Interval i = intersect(a.interval, b.interval);
      if (i.is_valid()) gens.push_back({i, a.value + b.value});
    }
  }
  return CupFunction(std::move(gens));
}

CupFunction pointwise_max(const CupFunction& f, const CupFunction& g) {
  std::vector<Generator> gens(f.generators().begin(), f.generators().end());
  gens.insert(gens.end(), g.generators().begin(), g.generators().end());
  return CupFunction(std::move(gens));
}

namespace {

/// Points representing every cell of the partition of the line cut by `cuts`.
std::vector<double> cell_samples(std::vector<double> cuts) {
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<double> out;
  if (cuts.empty()) return {0.0};
  out.push_back(cuts.front() - 1.0);
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    out.push_back(cuts[i]);
    if (i + 1 < cuts.size()) out.push_back(0.5 * (cuts[i] + cuts[i + 1]));
  }
  out.push_back(cuts.back() + 1.0);
  return out;
}

/// f([a,b]) >= g([a-eps, b+eps]) for every closed [a,b].
bool dominates_expanded(const CupFunction& f, const CupFunction& g, double eps) {
  if (g.empty()) return true;
  std::vector<double> cuts;
  for (const Generator& gen : f.generators()) {
    cuts.push_back(gen.interval.left);
    if (!gen.interval.is_infinite()) cuts.push_back(gen.interval.right);
  }
  for (const Generator& gen : g.generators()) {
    cuts.push_back(gen.interval.left + eps);
    if (!gen.interval.is_infinite()) cuts.push_back(gen.interval.right - eps);
  }
  const std::vector<double> samples = cell_samples(std::move(cuts));
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = i; j < samples.size(); ++j) {
      const double a = samples[i];
      const double b = samples[j];
      const int rhs = evaluate(g, Interval::closed(a - eps, b + eps));
      if (rhs > 0 && evaluate(f, Interval::closed(a, b)) < rhs) return false;
    }
  }
  return true;
}

}  // namespace

bool is_eroded(const CupFunction& f, const CupFunction& g, double eps) {
  return dominates_expanded(f, g, eps) && dominates_expanded(g, f, eps);
}

double erosion_distance(const CupFunction& f, const CupFunction& g) {
  // The predicate only changes where a shifted endpoint crosses another
  // endpoint, which happens at full or half endpoint differences.
  std::vector<double> ends = f.endpoints();
  const std::vector<double> g_ends = g.endpoints();
  ends.insert(ends.end(), g_ends.begin(), g_ends.end());
  std::vector<double> candidates{0.0};
  for (double u : ends) {
    for (double v : ends) {
      if (u > v) {
        candidates.push_back(u - v);
        candidates.push_back(0.5 * (u - v));
      }
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // Infimum semantics: candidate i wins if the predicate holds just above it.
  auto passes_above = [&](std::size_t i) {
    const double probe = i + 1 < candidates.size()
                             ? 0.5 * (candidates[i] + candidates[i + 1])
                             : candidates[i] + 1.0;
    return is_eroded(f, g, probe);
  };
  std::size_t lo = 0;
  std::size_t hi = candidates.size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (passes_above(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo < candidates.size() ? candidates[lo] : kInf;
}

CupFunction analytic_vr_circle(int L) {
  std::vector<Generator> gens;
  const double two_pi = 2.0 * std::numbers::pi;
  for (int l = 0; l <= L; ++l) {
    const double a = two_pi * l / (2.0 * l + 1.0);
    const double b = two_pi * (l + 1.0) / (2.0 * l + 3.0);
    gens.push_back({Interval::open(a, b), 1});
  }
  return CupFunction(std::move(gens));
}

CupFunction analytic_vr_torus(int L) {
  std::vector<Generator> gens = analytic_vr_circle(L).generators();
  for (Generator& g : gens) g.value = 2;
  return CupFunction(std::move(gens));
}

CupFunction analytic_vr_wedge_lower() {
  return CupFunction({{Interval::open(0.0, std::acos(-1.0 / 3.0)), 1}});
}

}  // namespace cuplength
