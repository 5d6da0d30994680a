#include "polyo/decomposition.hpp"
#include "polyo/generate.hpp"
#include "polyo/ideal_ops.hpp"
#include "polyo/io.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace polyo;
using nlohmann::json;

namespace {

struct Options {
    std::string input;
    std::string format = "text";
    std::string order = "degrevlex";
    std::string field = "rational";
    std::string junction = "min";
    int cap_vertices = 0;  // 0 = per-verb default
    int cap_walks = 10000;
    std::uint64_t seed = 1;
    int max_cells = 20;
    int count = 50;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw input_error("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const Options& opt, const json& j, const std::string& text) {
    if (opt.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

MonomialOrder parse_order(const Options& opt) {
    if (opt.order == "degrevlex") return MonomialOrder::degrevlex();
    if (opt.order == "lex") return MonomialOrder::lex();
    throw input_error("unknown order '" + opt.order + "'");
}

// Shared preamble: parse the fixture and validate.  A violated axiom is a
// verdict, not an error: report and signal the caller to stop with status 0.
std::optional<Polyocollection> load_collection(const Options& opt, const std::string& verb) {
    auto fixture = parse_fixture(read_input(opt.input));
    if (fixture.is_cells()) return fixture.cells().as_polyocollection();
    auto result = Polyocollection::validate(fixture.intervals());
    if (result.valid()) return *result.collection;
    json j{{"verb", verb},
           {"valid", false},
           {"violations", violations_to_json(result.violations)}};
    std::ostringstream text;
    text << "invalid: not a polyocollection\n";
    for (const auto& v : result.violations) text << "  " << to_string(v) << "\n";
    emit(opt, j, text.str());
    return std::nullopt;
}

CellComplex require_cells(const Options& opt) {
    auto fixture = parse_fixture(read_input(opt.input));
    if (!fixture.is_cells())
        throw input_error("this verb needs a cells fixture ({\"type\":\"cells\",...})");
    return fixture.cells();
}

int run_validate(const Options& opt) {
    auto fixture = parse_fixture(read_input(opt.input));
    if (fixture.is_cells()) {
        json j = fixture_to_json(fixture);
        j["valid"] = true;
        j["kind"] = "cells";
        emit(opt, j, "valid cell collection (" + std::to_string(fixture.cells().size()) +
                         " cells)\n");
        return 0;
    }
    auto result = Polyocollection::validate(fixture.intervals());
    if (!result.valid()) {
        json j{{"valid", false}, {"violations", violations_to_json(result.violations)}};
        std::ostringstream text;
        text << "invalid: not a polyocollection\n";
        for (const auto& v : result.violations) text << "  " << to_string(v) << "\n";
        emit(opt, j, text.str());
        return 0;
    }
    json j = fixture_to_json(fixture);
    j["valid"] = true;
    j["members"] = result.collection->size();
    emit(opt, j,
         "valid polyocollection (" + std::to_string(result.collection->size()) + " members)\n");
    return 0;
}

int run_inner(const Options& opt) {
    auto c = load_collection(opt, "inner");
    if (!c) return 0;
    auto inner = inner_intervals(*c);
    json j{{"count", inner.size()}, {"inner_intervals", json::array()}};
    std::ostringstream text;
    text << inner.size() << " inner intervals\n";
    for (const auto& iv : inner) {
        j["inner_intervals"].push_back(interval_to_json(iv));
        text << "  " << to_string(iv) << "\n";
    }
    emit(opt, j, text.str());
    return 0;
}

int run_ideal(const Options& opt) {
    auto c = load_collection(opt, "ideal");
    if (!c) return 0;
    auto ideal = ideal_of(*c, Ring::vertex_ring(c->vertices(), parse_order(opt)));
    json j = ideal_to_json(ideal);
    std::ostringstream text;
    text << ideal.gens().size() << " generators over " << ideal.ring().size() << " variables\n";
    for (const auto& g : ideal.gens()) text << "  " << to_string(g, ideal.ring()) << "\n";
    emit(opt, j, text.str());
    return 0;
}

int run_gb(const Options& opt) {
    auto c = load_collection(opt, "gb");
    if (!c) return 0;
    auto ideal = ideal_of(*c, Ring::vertex_ring(c->vertices(), parse_order(opt)));
    json j = ideal_to_json(ideal, false);
    std::ostringstream text;
    if (opt.field == "prime32003") {
        std::vector<Poly<GF32003>> gens;
        for (const auto& g : ideal.gens()) gens.push_back(to_gf(g, ideal.ring().order()));
        auto gb = reduced_groebner_basis(gens, ideal.ring().order());
        j["field"] = "GF(32003) probabilistic pre-check";
        j["groebner_size"] = gb.size();
        text << "reduced basis over GF(32003), " << gb.size()
             << " elements (probabilistic pre-check, not a verdict)\n";
    } else {
        const auto& gb = ideal.groebner();
        j["groebner"] = json::array();
        for (const auto& g : gb) j["groebner"].push_back(to_string(g, ideal.ring()));
        text << "reduced basis, " << gb.size() << " elements\n";
        for (const auto& g : gb) text << "  " << to_string(g, ideal.ring()) << "\n";
    }
    emit(opt, j, text.str());
    return 0;
}

int run_prime(const Options& opt) {
    auto c = load_collection(opt, "prime");
    if (!c) return 0;
    json j;
    std::ostringstream text;
    if (opt.field == "prime32003") {
        // Fast probabilistic pre-check: compare leading ideals over GF(32003).
        auto base = ideal_of(*c);
        auto lat = lattice_ideal(*c);
        std::vector<Poly<GF32003>> gi, gl;
        for (const auto& g : base.gens()) gi.push_back(to_gf(g, base.ring().order()));
        for (const auto& g : lat.gens()) gl.push_back(to_gf(g, base.ring().order()));
        bool same = reduced_groebner_basis(gi, base.ring().order()) ==
                    reduced_groebner_basis(gl, base.ring().order());
        j["field"] = "GF(32003) probabilistic pre-check";
        j["probably_prime"] = same;
        text << (same ? "probably prime" : "probably non-prime")
             << " (GF(32003) pre-check, not a verdict)\n";
        emit(opt, j, text.str());
        return 0;
    }
    bool prime = is_prime_ideal_of(*c);
    auto base = ideal_of(*c);
    int h = c->empty() ? 0 : height(base);
    int d = c->empty() ? 0 : krull_dimension(base);
    j = json{{"prime", prime},
             {"height", h},
             {"dimension", d},
             {"variables", base.ring().size()}};
    text << (prime ? "prime" : "non-prime") << "\n"
         << "height " << h << ", dimension " << d << " (" << base.ring().size()
         << " variables)\n";
    emit(opt, j, text.str());
    return 0;
}

int run_zigzag(const Options& opt) {
    auto cc = require_cells(opt);
    EnumerationCaps caps;
    if (opt.cap_vertices > 0) caps.max_vertices = opt.cap_vertices;
    caps.max_walks = opt.cap_walks;
    auto walks = enumerate_zigzag_walks(cc, caps);
    json j{{"count", walks.size()}, {"walks", json::array()}};
    std::ostringstream text;
    text << walks.size() << " zig-zag walks\n";
    for (const auto& w : walks) {
        j["walks"].push_back(walk_to_json(w));
        text << "  l=" << w.length() << " v:";
        for (Point p : w.v) text << " " << to_string(p);
        text << "\n";
    }
    if (!walks.empty() && cc.closed_path().ok()) {
        auto n = necklace_of(cc);
        auto m = m_set(cc);
        auto r = r_set(cc);
        j["necklace"] = json::array();
        for (Point p : n) j["necklace"].push_back(point_to_json(p));
        j["outer_corners"] = json::array();
        for (Point p : m) j["outer_corners"].push_back(point_to_json(p));
        j["switchback_intervals"] = json::array();
        for (const auto& iv : r) j["switchback_intervals"].push_back(interval_to_json(iv));
        text << "necklace " << n.size() << " vertices, " << m.size() << " outer corners, "
             << r.size() << " switchback intervals\n";
    }
    emit(opt, j, text.str());
    return 0;
}

int run_decompose(const Options& opt) {
    auto c = load_collection(opt, "decompose");
    if (!c) return 0;
    int cap = opt.cap_vertices > 0 ? opt.cap_vertices : 24;
    auto report = radical_decomposition(*c, cap);
    auto ring = Ring::vertex_ring(c->vertices());
    emit(opt, report_to_json(report), report_to_text(report, *ring));
    return 0;
}

int run_closed_path_verify(const Options& opt) {
    auto cc = require_cells(opt);
    auto cp = cc.closed_path();
    if (!cp.ok()) {
        json j{{"closed_path", false}, {"reason", cp.failure->reason}};
        emit(opt, j, "not a closed path (" + cp.failure->reason + ")\n");
        return 0;
    }
    if (enumerate_zigzag_walks(cc).empty()) {
        json j{{"closed_path", true}, {"prime", true},
               {"note", "no zig-zag walk: the two-component decomposition does not apply"}};
        emit(opt, j, "prime closed path (no zig-zag walk): nothing to decompose\n");
        return 0;
    }
    auto choice = opt.junction == "all" ? JunctionChoice::All : JunctionChoice::LexMin;
    auto report = verify_main_theorem(cc, true, choice);
    emit(opt, report_to_json(report), report_to_text(report));
    return 0;
}

int run_height(const Options& opt) {
    auto c = load_collection(opt, "height");
    if (!c) return 0;
    auto base = ideal_of(*c);
    json j{{"variables", base.ring().size()}};
    std::ostringstream text;
    if (base.is_zero_ideal()) {
        j["height"] = 0;
        j["dimension"] = base.ring().size();
        text << "zero ideal: height 0, dimension " << base.ring().size() << "\n";
    } else {
        j["height"] = height(base);
        j["dimension"] = krull_dimension(base);
        j["exponent_rank_bound"] = binomial_height_bound(base);
        text << "height " << height(base) << ", dimension " << krull_dimension(base) << " ("
             << base.ring().size() << " variables), exponent rank "
             << binomial_height_bound(base) << "\n";
    }
    emit(opt, j, text.str());
    return 0;
}

int run_lattice(const Options& opt) {
    auto c = load_collection(opt, "lattice");
    if (!c) return 0;
    auto model = build_lattice_model(*c);
    std::string csv = lattice_matrix_csv(model);
    json j{{"vertices", model.vertices.size()},
           {"members", model.members.size()},
           {"free_vertices", json::array()},
           {"determinant", model.determinant},
           {"csv", csv}};
    for (Point p : model.free_vertices) j["free_vertices"].push_back(point_to_json(p));
    emit(opt, j, csv);
    return 0;
}

int run_generate(const Options& opt) {
    auto paths = generate_closed_paths(opt.seed, opt.max_cells, opt.count);
    for (const auto& p : paths) {
        json j = fixture_to_json(Fixture{p.cells});
        j["prime"] = p.prime;
        std::cout << j.dump() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact binomial-ideal toolkit for interval collections and cell cycles"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool needs_input) {
        if (needs_input)
            sub->add_option("input", opt.input, "fixture path or - for stdin")->required();
        sub->add_option("--format", opt.format, "text|json")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--order", opt.order, "degrevlex|lex")
            ->check(CLI::IsMember({"degrevlex", "lex"}));
        sub->add_option("--field", opt.field, "rational|prime32003")
            ->check(CLI::IsMember({"rational", "prime32003"}));
        sub->add_option("--junction", opt.junction, "min|all")
            ->check(CLI::IsMember({"min", "all"}));
        sub->add_option("--cap-vertices", opt.cap_vertices, "enumeration vertex cap");
        sub->add_option("--cap-walks", opt.cap_walks, "walk count cap");
    };

    std::map<std::string, int (*)(const Options&)> verbs{
        {"validate", run_validate},
        {"inner", run_inner},
        {"ideal", run_ideal},
        {"gb", run_gb},
        {"prime", run_prime},
        {"zigzag", run_zigzag},
        {"decompose", run_decompose},
        {"closed-path-verify", run_closed_path_verify},
        {"height", run_height},
        {"lattice", run_lattice},
    };
    for (auto& [name, fn] : verbs) {
        auto* sub = app.add_subcommand(name);
        add_common(sub, true);
    }
    auto* gen = app.add_subcommand("generate", "seeded closed-path fixture stream");
    gen->add_option("--seed", opt.seed, "stream seed");
    gen->add_option("--max-cells", opt.max_cells, "size cap (>= 6)")->check(CLI::Range(6, 1000));
    gen->add_option("--count", opt.count, "number of fixtures");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        for (auto& [name, fn] : verbs)
            if (app.get_subcommand(name)->parsed()) return fn(opt);
        if (gen->parsed()) return run_generate(opt);
        return 1;
    } catch (const cap_exceeded& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
