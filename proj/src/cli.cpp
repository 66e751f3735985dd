#include "cuplength/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cuplength/cohomology.hpp"
#include "cuplength/cupalg.hpp"
#include "cuplength/error.hpp"
#include "cuplength/io.hpp"
#include "cuplength/oracle.hpp"

namespace cuplength {

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

int parse_level(const std::string& text, const std::string& name) {
  if (text == name) return 8;
  const std::string rest = text.substr(name.size() + 1);
  try {
    return std::stoi(rest);
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidArgument, "bad preset '" + text + "'");
  }
}

void require_format(const JobConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (cfg.format == f) return;
  }
  throw Error(ErrorKind::InvalidArgument,
              "format '" + cfg.format + "' is not available for " + cfg.command);
}

}  // namespace

FilteredComplex load_input(const std::string& path, int k, std::optional<double> max_scale) {
  if (ends_with(path, ".csv")) {
    const double scale = max_scale.value_or(std::numeric_limits<double>::infinity());
    return build_vietoris_rips(load_distance_csv(path), k + 1, scale);
  }
  FilteredComplex c = load_filtered_complex(path);
  return c.dimension() > k + 1 ? truncate(c, k + 1) : c;
}

CupFunction load_function(const std::string& text) {
  if (text == "wedge-lower") return analytic_vr_wedge_lower();
  if (text.rfind("torus", 0) == 0 && (text.size() == 5 || text[5] == ':')) {
    return analytic_vr_torus(parse_level(text, "torus"));
  }
  if (text.rfind("circle", 0) == 0 && (text.size() == 6 || text[6] == ':')) {
    return analytic_vr_circle(parse_level(text, "circle"));
  }
  std::ifstream in(text);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + text);
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, text + ": " + e.what());
  }
  return function_from_json(j);
}

int run(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.max_dim < 1) throw Error(ErrorKind::InvalidArgument, "--max-dim must be >= 1");
  if (cfg.trim_eps < 0) throw Error(ErrorKind::InvalidArgument, "--trim must be >= 0");

  std::ostringstream buffer;
  int code = 0;
  const int k = cfg.max_dim;
  const auto& in = cfg.inputs;

  if (cfg.command == "vr") {
    // csv gives the plain complex-file format, which load_filtered_complex reads back
    require_format(cfg, {"json", "csv"});
    const FilteredComplex c = load_input(in.at(0), k, cfg.max_scale);
    if (cfg.format == "json") {
      buffer << complex_to_json(c).dump() << '\n';
    } else {
      buffer << std::setprecision(17);
      for (const SimplexEntry& e : c.entries()) {
        buffer << e.grade;
        for (Vertex v : e.vertices) buffer << ' ' << v;
        buffer << '\n';
      }
    }
  } else if (cfg.command == "barcode") {
    require_format(cfg, {"json"});
    const FilteredComplex c = load_input(in.at(0), k, cfg.max_scale);
    buffer << barcode_to_json(compute_barcode(c, k), dimension_zero_bars(c)).dump(2) << '\n';
  } else if (cfg.command == "cup-diagram" || cfg.command == "cup-function" ||
             cfg.command == "plot") {
    const FilteredComplex c = load_input(in.at(0), k, cfg.max_scale);
    auto [diagram, stats] = cup_diagram(compute_barcode(c, k), c, k, cfg.trim_eps);
    const CupFunction f = reconstruct(diagram);
    if (cfg.command == "plot") {
      require_format(cfg, {"json", "svg"});
      buffer << render_svg(&diagram, &f, in.at(0));
    } else if (cfg.command == "cup-function") {
      require_format(cfg, {"json", "svg"});
      if (cfg.format == "svg") {
        buffer << render_svg(nullptr, &f, in.at(0));
      } else {
        buffer << function_to_json(f).dump() << '\n';
      }
    } else if (cfg.format == "csv") {
      buffer << diagram_to_csv(diagram);
    } else if (cfg.format == "svg") {
      buffer << render_svg(&diagram, nullptr, in.at(0));
    } else {
      buffer << diagram_to_json(diagram).dump() << '\n';
      err << stats_to_json(stats).dump() << '\n';
    }
  } else if (cfg.command == "erosion") {
    if (in.size() != 2) throw Error(ErrorKind::InvalidArgument, "erosion needs two functions");
    const double d = erosion_distance(load_function(in[0]), load_function(in[1]));
    if (std::isinf(d)) {
      buffer << "inf\n";
    } else {
      buffer << std::setprecision(17) << d << '\n';
    }
  } else if (cfg.command == "oracle-check") {
    const FilteredComplex c = load_input(in.at(0), k, cfg.max_scale);
    const AnnotatedBarcode b = compute_barcode(c, k);
    const CupFunction fast = reconstruct(cup_diagram(b, c, k).first);
    const CupFunction slow = oracle_cup_function(c, k);
    if (auto bad = first_grid_mismatch(fast, slow, c.critical_values())) {
      buffer << "mismatch at " << bad->to_string() << ": diagram gives " << evaluate(fast, *bad)
             << ", oracle gives " << evaluate(slow, *bad) << '\n';
      code = 1;
    } else {
      buffer << "ok\n";
    }
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown command '" + cfg.command + "'");
  }

  if (cfg.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write " + cfg.output);
    file << buffer.str();
  }
  return code;
}

int cli_main(int argc, char** argv) {
  CLI::App app{"Persistent cup-length diagrams and functions over Z2"};
  app.require_subcommand(1);

  JobConfig cfg;
  double max_scale = -1.0;
  std::string format;
  auto add_common = [&](CLI::App* sub, bool needs_scale) {
    sub->add_option("--max-dim", cfg.max_dim, "largest cohomology degree k")->default_val(2);
    if (needs_scale) {
      sub->add_option("--max-scale", max_scale, "Vietoris-Rips scale cap for .csv input");
    }
    sub->add_option("--trim", cfg.trim_eps, "drop bars shorter than this")->default_val(0.0);
    sub->add_option("--format", format, "json, csv or svg (plot defaults to svg)")
        ->check(CLI::IsMember({"json", "csv", "svg"}));
    sub->add_option("-o,--output", cfg.output, "write here instead of stdout");
  };

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"vr", "print the Vietoris-Rips filtration of a distance CSV"},
      {"barcode", "persistence barcode with representative cocycles"},
      {"cup-diagram", "persistent cup-length diagram"},
      {"cup-function", "persistent cup-length function"},
      {"erosion", "erosion distance between two functions (JSON files or presets)"},
      {"oracle-check", "compare the diagram against brute force; exit 1 on mismatch"},
      {"plot", "SVG of diagram and function"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub, name != "erosion");
    if (name == "erosion") {
      sub->add_option("functions", cfg.inputs, "two functions")->required()->expected(2);
    } else {
      sub->add_option("input", cfg.inputs, "complex file or distance .csv")->required()->expected(1);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (max_scale >= 0) cfg.max_scale = max_scale;
  cfg.format = !format.empty() ? format : cfg.command == "plot" ? "svg" : "json";

  try {
    return run(cfg, std::cout, std::cerr);
  } catch (const Error& e) {
    std::cerr << "cuplength: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "cuplength: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace cuplength
