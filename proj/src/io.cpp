#include "cuplength/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cuplength/error.hpp"

namespace cuplength {

namespace {

using json = nlohmann::ordered_json;

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  return in;
}

double parse_real(const std::string& token, std::size_t line) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != token.size()) {
    throw Error(ErrorKind::ParseError,
                "line " + std::to_string(line) + ": not a number: '" + token + "'");
  }
  return x;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

json number(double x) {
  if (std::floor(x) == x && std::fabs(x) < 1e15) return static_cast<std::int64_t>(x);
  return x;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

}  // namespace

DistanceMatrix parse_distance_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(parse_real(trim(cell), lineno));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorKind::ParseError, "empty distance matrix");
  return DistanceMatrix(std::move(rows));
}

DistanceMatrix load_distance_csv(const std::string& path) {
  auto in = open_input(path);
  return parse_distance_csv(in);
}

FilteredComplex parse_filtered_complex(std::istream& in) {
  std::vector<SimplexEntry> entries;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    std::string token;
    if (!(ss >> token)) continue;
    SimplexEntry e;
    e.grade = parse_real(token, lineno);
    while (ss >> token) {
      const double v = parse_real(token, lineno);
      if (v < 0 || std::floor(v) != v || v > 4294967295.0) {
        throw Error(ErrorKind::ParseError,
                    "line " + std::to_string(lineno) + ": bad vertex '" + token + "'");
      }
      e.vertices.push_back(static_cast<Vertex>(v));
    }
    if (e.vertices.empty()) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": no vertices");
    }
    std::sort(e.vertices.begin(), e.vertices.end());
    if (std::adjacent_find(e.vertices.begin(), e.vertices.end()) != e.vertices.end()) {
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(lineno) + ": repeated vertex");
    }
    entries.push_back(std::move(e));
  }
  return FilteredComplex::from_simplex_list(std::move(entries));
}

FilteredComplex load_filtered_complex(const std::string& path) {
  auto in = open_input(path);
  return parse_filtered_complex(in);
}

json diagram_to_json(const CupDiagram& d) {
  json points = json::array();
  for (const auto& [interval, value] : d.points()) {
    json p;
    p["birth"] = number(interval.left);
    if (!interval.is_infinite()) p["death"] = number(interval.right);
    p["inf"] = interval.is_infinite();
    p["value"] = value;
    points.push_back(std::move(p));
  }
  json out;
  out["points"] = std::move(points);
  return out;
}

CupDiagram diagram_from_json(const json& j) {
  CupDiagram d;
  try {
    for (const json& p : j.at("points")) {
      const double birth = p.at("birth").get<double>();
      const bool inf = p.value("inf", false);
      const double death = inf ? kInfinity : p.at("death").get<double>();
      d.record(Interval::closed_open(birth, death), p.at("value").get<int>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return d;
}

json function_to_json(const CupFunction& f) {
  json gens = json::array();
  for (const Generator& g : f.generators()) {
    json o;
    o["left"] = number(g.interval.left);
    if (!g.interval.is_infinite()) o["right"] = number(g.interval.right);
    o["inf"] = g.interval.is_infinite();
    o["left_closed"] = g.interval.left_closed;
    o["right_closed"] = g.interval.right_closed;
    o["value"] = g.value;
    gens.push_back(std::move(o));
  }
  json out;
  out["generators"] = std::move(gens);
  return out;
}

CupFunction function_from_json(const json& j) {
  std::vector<Generator> gens;
  try {
    for (const json& o : j.at("generators")) {
      Interval i;
      i.left = o.at("left").get<double>();
      i.right = o.value("inf", false) ? kInfinity : o.at("right").get<double>();
      i.left_closed = o.at("left_closed").get<bool>();
      i.right_closed = o.at("right_closed").get<bool>();
      gens.push_back({i, o.at("value").get<int>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return CupFunction(std::move(gens));
}

json barcode_to_json(const AnnotatedBarcode& b, const std::vector<Bar>& dim0) {
  auto bar_json = [](const Bar& bar) {
    json o;
    o["dim"] = bar.dim;
    o["birth"] = number(bar.birth);
    if (!bar.is_essential()) o["death"] = number(bar.death);
    o["inf"] = bar.is_essential();
    json rep = json::array();
    for (const Simplex& s : bar.representative.summands()) {
      rep.push_back(std::vector<Vertex>(s.vertices().begin(), s.vertices().end()));
    }
    o["representative"] = std::move(rep);
    return o;
  };
  json bars = json::array();
  for (const Bar& bar : dim0) bars.push_back(bar_json(bar));
  for (const Bar& bar : b.bars) bars.push_back(bar_json(bar));
  json out;
  out["bars"] = std::move(bars);
  return out;
}

json complex_to_json(const FilteredComplex& c) {
  json simplices = json::array();
  for (const SimplexEntry& e : c.entries()) {
    json o;
    o["grade"] = number(e.grade);
    o["vertices"] = e.vertices;
    simplices.push_back(std::move(o));
  }
  json out;
  out["simplices"] = std::move(simplices);
  return out;
}

json stats_to_json(const RunStats& s) {
  json out;
  out["m_k"] = s.m_k;
  out["q_1"] = s.q_1;
  out["q_ell"] = std::vector<std::size_t>(s.q_ell.begin() + (s.q_ell.empty() ? 0 : 1), s.q_ell.end());
  out["product_count"] = s.product_count;
  out["coboundary_test_count"] = s.coboundary_test_count;
  return out;
}

std::string diagram_to_csv(const CupDiagram& d) {
  std::ostringstream os;
  os.precision(17);
  os << "birth,death,value\n";
  for (const auto& [interval, value] : d.points()) {
    os << interval.left << ',';
    if (interval.is_infinite()) {
      os << "inf";
    } else {
      os << interval.right;
    }
    os << ',' << value << '\n';
  }
  return os.str();
}

std::string render_svg(const CupDiagram* diagram, const CupFunction* function,
                       const std::string& title) {
  // Finite coordinates that appear anywhere fix the axis range.
  std::vector<double> xs;
  auto add = [&](const Interval& i) {
    xs.push_back(i.left);
    if (!i.is_infinite()) xs.push_back(i.right);
  };
  if (diagram) {
    for (const auto& [i, v] : diagram->points()) add(i);
  }
  if (function) {
    for (const Generator& g : function->generators()) add(g.interval);
  }
  double lo = xs.empty() ? 0.0 : *std::min_element(xs.begin(), xs.end());
  double hi = xs.empty() ? 1.0 : *std::max_element(xs.begin(), xs.end());
  if (hi <= lo) hi = lo + 1.0;
  const double pad = 0.1 * (hi - lo);
  lo -= pad;
  hi += pad;
  const double inf_value = hi + pad;

  const double size = 400.0;
  const double margin = 50.0;
  auto sx = [&](double x) { return margin + (x - lo) / (inf_value - lo) * size; };
  auto sy = [&](double y) {
    if (std::isinf(y)) y = inf_value;
    return margin + size - (y - lo) / (inf_value - lo) * size;
  };

  int max_value = 1;
  if (function) {
    for (const Generator& g : function->generators()) max_value = std::max(max_value, g.value);
  }
  if (diagram) {
    for (const auto& [i, v] : diagram->points()) max_value = std::max(max_value, v);
  }

  std::ostringstream os;
  const double total = size + 2 * margin;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(total) << "\" height=\""
     << fmt(total) << "\" viewBox=\"0 0 " << fmt(total) << ' ' << fmt(total) << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << fmt(total / 2) << "\" y=\"24\" text-anchor=\"middle\" "
     << "font-family=\"sans-serif\" font-size=\"14\">" << title << "</text>\n";

  if (function) {
    // A generator <l, r> covers the triangle of queries [a, b] with l <= a <= b <= r.
    for (const Generator& g : function->generators()) {
      const double l = g.interval.left;
      const double r = g.interval.right;
      const double opacity = 0.15 + 0.5 * g.value / max_value;
      os << "<polygon points=\"" << fmt(sx(l)) << ',' << fmt(sy(l)) << ' ' << fmt(sx(l)) << ','
         << fmt(sy(r)) << ' ' << fmt(sx(std::isinf(r) ? inf_value : r)) << ',' << fmt(sy(r))
         << "\" fill=\"steelblue\" fill-opacity=\"" << fmt(opacity) << "\"/>\n";
    }
  }

  // axes, diagonal and the line standing in for infinity
  os << "<line x1=\"" << fmt(sx(lo)) << "\" y1=\"" << fmt(sy(lo)) << "\" x2=\"" << fmt(sx(inf_value))
     << "\" y2=\"" << fmt(sy(lo)) << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << fmt(sx(lo)) << "\" y1=\"" << fmt(sy(lo)) << "\" x2=\"" << fmt(sx(lo))
     << "\" y2=\"" << fmt(sy(inf_value)) << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << fmt(sx(lo)) << "\" y1=\"" << fmt(sy(lo)) << "\" x2=\"" << fmt(sx(inf_value))
     << "\" y2=\"" << fmt(sy(inf_value)) << "\" stroke=\"gray\"/>\n";
  os << "<line x1=\"" << fmt(sx(lo)) << "\" y1=\"" << fmt(sy(inf_value)) << "\" x2=\""
     << fmt(sx(inf_value)) << "\" y2=\"" << fmt(sy(inf_value))
     << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
  os << "<text x=\"" << fmt(sx(lo) - 8) << "\" y=\"" << fmt(sy(inf_value) + 5)
     << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">∞</text>\n";
  os << "<text x=\"" << fmt(total / 2) << "\" y=\"" << fmt(total - 12)
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">birth</text>\n";
  os << "<text x=\"14\" y=\"" << fmt(total / 2) << "\" text-anchor=\"middle\" "
     << "font-family=\"sans-serif\" font-size=\"12\" transform=\"rotate(-90 14 " << fmt(total / 2)
     << ")\">death</text>\n";

  if (diagram) {
    for (const auto& [i, v] : diagram->points()) {
      os << "<circle cx=\"" << fmt(sx(i.left)) << "\" cy=\"" << fmt(sy(i.right))
         << "\" r=\"4\" fill=\"firebrick\"/>\n";
      os << "<text x=\"" << fmt(sx(i.left) + 6) << "\" y=\"" << fmt(sy(i.right) - 6)
         << "\" font-family=\"sans-serif\" font-size=\"11\">" << v << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace cuplength
