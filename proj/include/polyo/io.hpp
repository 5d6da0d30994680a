#pragma once

#include "polyo/cells.hpp"
#include "polyo/decomposition.hpp"
#include "polyo/geometry.hpp"

#include "json.hpp"

#include <string>
#include <variant>

namespace polyo {

// A parsed input: either a raw interval collection (validated later, so a
// CLI "validate" run can report violations as a verdict) or a cell set.
struct Fixture {
    std::variant<std::vector<Interval>, CellComplex> data;

    bool is_cells() const { return std::holds_alternative<CellComplex>(data); }
    const CellComplex& cells() const { return std::get<CellComplex>(data); }
    const std::vector<Interval>& intervals() const { return std::get<std::vector<Interval>>(data); }

    // Cells embed as 1x1 members; interval fixtures must validate.
    Polyocollection to_polyocollection() const;
};

Fixture parse_fixture(const std::string& json_text);
nlohmann::json fixture_to_json(const Fixture& fixture);

nlohmann::json point_to_json(Point p);
Point point_from_json(const nlohmann::json& j);
nlohmann::json interval_to_json(const Interval& iv);
Interval interval_from_json(const nlohmann::json& j);

// Structured polynomial form: list of [coefficient-string, [[var, exp],...]]
// in display (lex) term order.  Round-trips exactly.
nlohmann::json poly_to_json(const QPoly& p, const Ring& ring);
QPoly poly_from_json(const nlohmann::json& j, const Ring& ring);

nlohmann::json ring_to_json(const Ring& ring);
nlohmann::json ideal_to_json(const Ideal& ideal, bool include_groebner = false);

nlohmann::json walk_to_json(const ZigZagWalk& walk);
nlohmann::json violations_to_json(const std::vector<Violation>& violations);
nlohmann::json report_to_json(const DecompositionReport& report);
nlohmann::json report_to_json(const MainTheoremReport& report);
std::string report_to_text(const DecompositionReport& report, const Ring& ring);
std::string report_to_text(const MainTheoremReport& report);

}  // namespace polyo
