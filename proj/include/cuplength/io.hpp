#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "cuplength/cohomology.hpp"
#include "cuplength/complex.hpp"
#include "cuplength/cupalg.hpp"
#include "cuplength/invariants.hpp"

namespace cuplength {

/// Square CSV of reals. Errors: ParseError, AsymmetricMatrix, NegativeDistance.
DistanceMatrix load_distance_csv(const std::string& path);
DistanceMatrix parse_distance_csv(std::istream& in);

/// One simplex per line: "grade v0 v1 ... vp". '#' starts a comment. Vertex
/// lists are sorted; repeated vertices are a ParseError.
FilteredComplex load_filtered_complex(const std::string& path);
FilteredComplex parse_filtered_complex(std::istream& in);

// JSON. Infinite right ends are written as "inf": true with no "death" /
// "right" key. Integral reals are written without a fractional part.
nlohmann::ordered_json diagram_to_json(const CupDiagram& d);
CupDiagram diagram_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json function_to_json(const CupFunction& f);
CupFunction function_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json barcode_to_json(const AnnotatedBarcode& b, const std::vector<Bar>& dim0 = {});
nlohmann::ordered_json complex_to_json(const FilteredComplex& c);
nlohmann::ordered_json stats_to_json(const RunStats& s);

/// "birth,death,value" rows, death written as inf when unbounded.
std::string diagram_to_csv(const CupDiagram& d);

/// Birth/death half-plane picture: function regions shaded by value, diagram
/// points labelled by value, unbounded deaths on a dashed line marked "∞".
std::string render_svg(const CupDiagram* diagram, const CupFunction* function,
                       const std::string& title);

}  // namespace cuplength
