#include "polyo/io.hpp"

#include "polyo/ideal_ops.hpp"

#include <sstream>

namespace polyo {

using nlohmann::json;

Polyocollection Fixture::to_polyocollection() const {
    if (is_cells()) return cells().as_polyocollection();
    return Polyocollection::of(intervals());
}

json point_to_json(Point p) { return json::array({p.x, p.y}); }

Point point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw input_error("point must be an [x, y] integer pair, got " + j.dump());
    return {j[0].get<int>(), j[1].get<int>()};
}

json interval_to_json(const Interval& iv) {
    return json{{"ll", point_to_json(iv.ll)}, {"ur", point_to_json(iv.ur)}};
}

Interval interval_from_json(const json& j) {
    if (!j.is_object() || !j.contains("ll") || !j.contains("ur"))
        throw input_error("interval must be an object with ll and ur, got " + j.dump());
    return Interval(point_from_json(j["ll"]), point_from_json(j["ur"]));
}

Fixture parse_fixture(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("type"))
        throw input_error("fixture must be an object with a \"type\" field");
    std::string type = j["type"].get<std::string>();
    if (type == "polyocollection") {
        if (!j.contains("intervals") || !j["intervals"].is_array())
            throw input_error("polyocollection fixture needs an \"intervals\" array");
        std::vector<Interval> intervals;
        for (const auto& item : j["intervals"]) intervals.push_back(interval_from_json(item));
        return Fixture{std::move(intervals)};
    }
    if (type == "cells") {
        if (!j.contains("cells") || !j["cells"].is_array())
            throw input_error("cells fixture needs a \"cells\" array");
        std::vector<Point> cells;
        for (const auto& item : j["cells"]) cells.push_back(point_from_json(item));
        return Fixture{CellComplex(std::move(cells))};
    }
    throw input_error("unknown fixture type \"" + type + "\"");
}

json fixture_to_json(const Fixture& fixture) {
    json j;
    if (fixture.is_cells()) {
        j["type"] = "cells";
        j["cells"] = json::array();
        for (Point c : fixture.cells().cells()) j["cells"].push_back(point_to_json(c));
    } else {
        j["type"] = "polyocollection";
        j["intervals"] = json::array();
        for (const auto& iv : fixture.intervals()) j["intervals"].push_back(interval_to_json(iv));
    }
    return j;
}

json poly_to_json(const QPoly& p, const Ring& ring) {
    std::vector<Term<Rational>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(), [](const Term<Rational>& a, const Term<Rational>& b) {
        return compare(a.mono, b.mono, MonomialOrder::lex()) > 0;
    });
    json out = json::array();
    for (const auto& t : terms) {
        json mono = json::array();
        for (auto& [v, e] : t.mono.exps()) mono.push_back(json::array({v, e}));
        out.push_back(json::array({coeff_to_string(t.coeff), mono}));
    }
    (void)ring;
    return out;
}

QPoly poly_from_json(const json& j, const Ring& ring) {
    if (!j.is_array()) throw input_error("polynomial JSON must be a term array");
    std::vector<Term<Rational>> terms;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2)
            throw input_error("polynomial term must be [coeff, [[var, exp], ...]]");
        Rational coeff = rational_from_string(term[0].get<std::string>());
        std::vector<std::pair<int, int>> exps;
        for (const auto& pair : term[1]) {
            int var = pair[0].get<int>();
            if (var < 0 || var >= ring.size())
                throw input_error("variable index " + std::to_string(var) + " out of range");
            exps.emplace_back(var, pair[1].get<int>());
        }
        terms.push_back({Monomial(std::move(exps)), std::move(coeff)});
    }
    return QPoly::from_terms(std::move(terms), ring.order());
}

json ring_to_json(const Ring& ring) {
    json vars = json::array();
    for (int i = 0; i < ring.size(); ++i) vars.push_back(ring.var_name(i));
    return json{{"order", to_string(ring.order())}, {"variables", vars}};
}

json ideal_to_json(const Ideal& ideal, bool include_groebner) {
    json j;
    j["ring"] = ring_to_json(ideal.ring());
    j["generators"] = json::array();
    for (const auto& g : ideal.gens()) {
        j["generators"].push_back(json{{"text", to_string(g, ideal.ring())},
                                       {"terms", poly_to_json(g, ideal.ring())}});
    }
    if (include_groebner) {
        j["groebner"] = json::array();
        for (const auto& g : ideal.groebner()) j["groebner"].push_back(to_string(g, ideal.ring()));
    }
    return j;
}

json walk_to_json(const ZigZagWalk& walk) {
    json j;
    j["length"] = walk.length();
    j["intervals"] = json::array();
    for (const auto& iv : walk.intervals) j["intervals"].push_back(interval_to_json(iv));
    for (auto [key, seq] : {std::pair{"v", &walk.v}, {"z", &walk.z}, {"u", &walk.u}}) {
        j[key] = json::array();
        for (Point p : *seq) j[key].push_back(point_to_json(p));
    }
    return j;
}

json violations_to_json(const std::vector<Violation>& violations) {
    json out = json::array();
    for (const auto& v : violations) {
        out.push_back(json{{"first", interval_to_json(v.first)},
                           {"second", interval_to_json(v.second)},
                           {"clause", v.kind == ViolationKind::Containment ? "containment"
                                                                           : "edge-overlap"}});
    }
    return out;
}

json report_to_json(const DecompositionReport& report) {
    json comps = json::array();
    for (const auto& comp : report.components) {
        json c;
        c["provenance"] = comp.provenance;
        c["height"] = comp.height;
        c["admissible_set"] = json::array();
        for (Point p : comp.admissible_set) c["admissible_set"].push_back(point_to_json(p));
        c["generators"] = json::array();
        for (const auto& g : comp.ideal.groebner())
            c["generators"].push_back(to_string(g, comp.ideal.ring()));
        comps.push_back(std::move(c));
    }
    return json{{"components", comps},
                {"admissible_sets", report.admissible_count},
                {"distinct_candidates", report.candidate_count},
                {"base_height", report.base_height},
                {"intersection_equals_ideal", report.intersection_equals_ideal},
                {"unmixed", report.unmixed},
                {"seconds", report.seconds}};
}

json report_to_json(const MainTheoremReport& report) {
    json j{{"cells", report.cells},
           {"walks", report.walk_count},
           {"p1_is_lattice_ideal", report.p1_is_lattice_ideal},
           {"p2_structurally_prime", report.p2_structurally_prime},
           {"intersection_equals_ideal", report.intersection_equals},
           {"height_p1", report.height_p1},
           {"height_p2", report.height_p2},
           {"height_ideal", report.height_ip},
           {"heights_match_cell_count", report.heights_match},
           {"unmixed", report.unmixed},
           {"necklace_partition", report.necklace_partition},
           {"exponent_rank_p1", report.exponent_rank_p1},
           {"all_passed", report.all_passed()},
           {"seconds", report.seconds}};
    if (report.p1_equals_toric) j["p1_equals_toric_kernel"] = *report.p1_equals_toric;
    return j;
}

std::string report_to_text(const DecompositionReport& report, const Ring& ring) {
    std::ostringstream out;
    out << "admissible sets: " << report.admissible_count << " (distinct ideals "
        << report.candidate_count << ")\n";
    out << "minimal components: " << report.components.size() << "\n";
    for (const auto& comp : report.components) {
        out << "  height " << comp.height << "  {";
        bool first = true;
        for (const auto& g : comp.ideal.groebner()) {
            out << (first ? "" : ", ") << to_string(g, ring);
            first = false;
        }
        out << "}\n";
    }
    out << "intersection equals the ideal: " << (report.intersection_equals_ideal ? "yes" : "no")
        << "\n";
    out << "unmixed: " << (report.unmixed ? "yes" : "no") << "\n";
    return out.str();
}

std::string report_to_text(const MainTheoremReport& report) {
    std::ostringstream out;
    auto line = [&](const std::string& label, bool ok) {
        out << (ok ? "PASS" : "FAIL") << "  " << label << "\n";
    };
    out << "cells: " << report.cells << ", zig-zag walks: " << report.walk_count << "\n";
    line("p1 equals the lattice ideal (so p1 is prime)", report.p1_is_lattice_ideal);
    line("p2 has the structural prime form", report.p2_structurally_prime);
    line("p1 cap p2 equals the ideal exactly", report.intersection_equals);
    line("heights p1/p2/ideal all equal the cell count (" + std::to_string(report.height_p1) +
             "/" + std::to_string(report.height_p2) + "/" + std::to_string(report.height_ip) +
             "/" + std::to_string(report.cells) + ")",
         report.heights_match);
    line("unmixed", report.unmixed);
    line("necklace/corner/switchback sets partition the cell count", report.necklace_partition);
    if (report.p1_equals_toric) line("p1 equals the toric kernel", *report.p1_equals_toric);
    out << (report.all_passed() ? "ALL CHECKS PASSED" : "CHECKS FAILED") << "\n";
    return out.str();
}

}  // namespace polyo
