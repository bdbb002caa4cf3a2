// Command-line front end: exact local/global heights, arithmetic distances,
// place decompositions, and the identity-check suites, over a JSON workspace.
//
// Exit codes: 0 success; 1 usage or schema error; 2 mathematical precondition
// violation (point on the subscheme, identical points); 3 verification
// failure.

#include "CLI11.hpp"
#include "json.hpp"

#include "heights/global_height.hpp"
#include "heights/verify.hpp"
#include "heights/workspace.hpp"

#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

using namespace heights;
using nlohmann::json;

namespace {

using AnyPlace = std::variant<Place, ExtPlace>;

// Grammar: "inf" | "inf:+|-|complex" | "p=<prime>" | "p=<prime>:split1|split2|inert|ram".
// The suffix names a place of the point's quadratic field; the field itself
// always comes from the point.
struct PlaceSpec {
    Place base = Place::archimedean();
    std::optional<std::string> ext;
};

PlaceSpec parse_place_spec(const std::string& s) {
    auto bad = [&s]() {
        throw Error("malformed place spec \"" + s +
                    "\"; expected inf, inf:+|-|complex, p=<prime>, or "
                    "p=<prime>:split1|split2|inert|ram");
    };
    std::string head = s, ext;
    if (auto colon = s.find(':'); colon != std::string::npos) {
        head = s.substr(0, colon);
        ext = s.substr(colon + 1);
    }
    PlaceSpec out;
    if (head == "inf") {
        if (!ext.empty()) {
            if (ext != "+" && ext != "-" && ext != "complex") bad();
            out.ext = ext;
        }
        return out;
    }
    if (head.rfind("p=", 0) != 0) bad();
    std::string digits = head.substr(2);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) bad();
    out.base = Place::finite(Int(digits)); // rejects composites
    if (!ext.empty()) {
        if (ext != "split1" && ext != "split2" && ext != "inert" && ext != "ram") bad();
        out.ext = ext;
    }
    return out;
}

std::string kind_word(ExtPlace::Kind k) {
    switch (k) {
        case ExtPlace::Kind::RealPlus:
        case ExtPlace::Kind::RealMinus: return "real";
        case ExtPlace::Kind::ComplexPair: return "complex";
        case ExtPlace::Kind::Split: return "split";
        case ExtPlace::Kind::Inert: return "inert";
        case ExtPlace::Kind::Ramified: return "ramified";
    }
    return "?";
}

AnyPlace resolve_place(const PlaceSpec& spec, const ProjectivePoint& x) {
    if (x.is_rational()) {
        if (spec.ext)
            throw Error("place suffix \"" + *spec.ext +
                        "\" names a place of a quadratic field, but the point is rational");
        return spec.base;
    }
    const QuadraticField& F = *x.quad_field();
    auto above = places_above(spec.base, F);
    if (!spec.ext) {
        if (above.size() == 1) return above[0];
        throw Error(spec.base.str() + " has two places in " + F.str() + "; say " +
                    above[0].str() + " or " + above[1].str());
    }
    ExtPlace::Kind want = [&]() {
        const std::string& e = *spec.ext;
        if (e == "+") return ExtPlace::Kind::RealPlus;
        if (e == "-") return ExtPlace::Kind::RealMinus;
        if (e == "complex") return ExtPlace::Kind::ComplexPair;
        if (e == "inert") return ExtPlace::Kind::Inert;
        if (e == "ram") return ExtPlace::Kind::Ramified;
        return ExtPlace::Kind::Split;
    }();
    std::vector<ExtPlace> matches;
    for (const auto& w : above)
        if (w.kind() == want) matches.push_back(w);
    if (matches.empty()) {
        std::string have;
        for (const auto& w : above) have += (have.empty() ? "" : ", ") + w.str();
        throw Error(spec.base.str() + " is " + kind_word(above[0].kind()) + " in " + F.str() +
                    ", not " + kind_word(want) + "; its places: " + have);
    }
    return matches[spec.ext == "split2" ? 1 : 0];
}

template <class M>
const typename M::mapped_type& named(const M& m, const std::string& name, const char* what) {
    auto it = m.find(name);
    if (it == m.end()) throw Error(std::string("no ") + what + " named \"" + name + "\"");
    return it->second;
}

struct Opts {
    std::string input, subscheme, place, mode = "exact", output = "text";
    std::vector<std::string> points;
    unsigned precision = 53;
    // verify
    std::vector<std::string> suites;
    unsigned samples = 100;
    uint64_t seed = 1;
    // places
    long d = 0;
    std::string prime;
};

std::string render_value(const LogValue& v, const Opts& o) {
    return o.mode == "float" ? to_decimal_string(v, o.precision) : v.str();
}

json value_json(const LogValue& v, unsigned precision) {
    return {{"exact", v.str()},
            {"decimal", to_decimal_string(v, precision)},
            {"precision", precision},
            {"infinite", v.is_infinite()}};
}

json field_json(const std::optional<QuadraticField>& F) {
    if (!F) return nullptr;
    return {{"d", F->d().get_si()}};
}

json witnesses_json(const LocalHeightResult& r) {
    if (!r.witnesses) return nullptr;
    return {{"divisor", (*r.witnesses)[0]},
            {"section", (*r.witnesses)[1]},
            {"cover", (*r.witnesses)[2]}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_compute(const Opts& o) {
    Workspace ws = load_workspace(o.input);
    const auto& Y = named(ws.presentations, o.subscheme, "presentation");
    const auto& x = named(ws.points, o.points[0], "point");
    HeightValue h = global_height(Y, x);
    if (o.output == "json") {
        emit({{"command", "compute"},
              {"subscheme", o.subscheme},
              {"point", o.points[0]},
              {"field", field_json(h.field_used)},
              {"mode", o.mode},
              {"height", value_json(h.value, o.precision)}});
    } else {
        std::cout << render_value(h.value, o) << "\n";
    }
    return 0;
}

int cmd_local(const Opts& o) {
    Workspace ws = load_workspace(o.input);
    const auto& Y = named(ws.presentations, o.subscheme, "presentation");
    const auto& x = named(ws.points, o.points[0], "point");
    AnyPlace w = resolve_place(parse_place_spec(o.place), x);
    LocalHeightResult r =
        std::visit([&](const auto& p) { return local_height(Y, x, p); }, w);
    if (o.output == "json") {
        emit({{"command", "local"},
              {"subscheme", o.subscheme},
              {"point", o.points[0]},
              {"place", r.place_str()},
              {"mode", o.mode},
              {"value", value_json(r.value, o.precision)},
              {"witnesses", witnesses_json(r)}});
    } else {
        std::cout << render_value(r.value, o) << "\n";
    }
    return 0;
}

int cmd_distance(const Opts& o) {
    Workspace ws = load_workspace(o.input);
    const auto& x = named(ws.points, o.points[0], "point");
    const auto& y = named(ws.points, o.points[1], "point");
    if (o.place.empty()) {
        HeightValue h = arithmetic_distance_global(x, y);
        if (o.output == "json") {
            emit({{"command", "distance"},
                  {"points", {o.points[0], o.points[1]}},
                  {"place", nullptr},
                  {"field", field_json(h.field_used)},
                  {"mode", o.mode},
                  {"value", value_json(h.value, o.precision)}});
        } else {
            std::cout << render_value(h.value, o) << "\n";
        }
        return 0;
    }
    AnyPlace w = resolve_place(parse_place_spec(o.place), pair_point(x, y));
    LocalHeightResult r =
        std::visit([&](const auto& p) { return arithmetic_distance_local(x, y, p); }, w);
    if (o.output == "json") {
        emit({{"command", "distance"},
              {"points", {o.points[0], o.points[1]}},
              {"place", r.place_str()},
              {"mode", o.mode},
              {"value", value_json(r.value, o.precision)},
              {"witnesses", witnesses_json(r)}});
    } else {
        std::cout << render_value(r.value, o) << "\n";
    }
    return 0;
}

int cmd_places(const Opts& o) {
    QuadraticField F = QuadraticField::make(Int(o.d));
    Place v = [&]() {
        if (o.prime == "inf") return Place::archimedean();
        if (o.prime.empty() || o.prime.find_first_not_of("0123456789") != std::string::npos)
            throw Error("--p takes a prime or \"inf\", got \"" + o.prime + "\"");
        return Place::finite(Int(o.prime));
    }();
    auto above = places_above(v, F);
    if (o.output == "json") {
        json arr = json::array();
        for (const auto& w : above) {
            json e = {{"name", w.str()}, {"degree", w.local_degree()}};
            e["root"] = w.kind() == ExtPlace::Kind::Split ? json(w.root_seed().get_si())
                                                          : json(nullptr);
            arr.push_back(e);
        }
        emit({{"command", "places"},
              {"d", o.d},
              {"base", v.str()},
              {"decomposition", kind_word(above[0].kind())},
              {"places", arr}});
        return 0;
    }
    std::string line = kind_word(above[0].kind()) + ": ";
    if (above[0].kind() == ExtPlace::Kind::Split) {
        line += "roots " + to_string(above[0].root_seed()) + "," +
                to_string(above[1].root_seed()) + "; degrees 1,1";
    } else if (above.size() == 2) {
        line += "+,-; degrees 1,1";
    } else {
        line += "degree 2";
    }
    std::cout << line << "\n";
    return 0;
}

int cmd_verify(const Opts& o) {
    SampleSpec spec;
    spec.count = o.samples;
    spec.seed = o.seed;
    auto reports = run_suite(o.suites.empty() ? std::vector<std::string>{"all"} : o.suites, spec);
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.passed();
    if (o.output == "json") {
        json arr = json::array();
        for (const auto& r : reports) {
            json profile(nullptr);
            if (r.profile) {
                profile = json::object();
                for (const auto& [v, val] : r.profile->entries()) profile[v.str()] = val;
            }
            arr.push_back({{"name", r.check_name},
                           {"status", r.status_str()},
                           {"samples", r.samples_used},
                           {"witnesses", r.witnesses},
                           {"notes", r.notes},
                           {"profile", profile}});
        }
        emit({{"command", "verify"}, {"ok", ok}, {"reports", arr}});
    } else {
        for (const auto& r : reports) std::cout << r.str() << "\n";
    }
    return ok ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact heights of presented subschemes of multiprojective space over Q"};
    app.require_subcommand(1);
    Opts o;

    auto add_common = [&o](CLI::App* cmd, int npoints) {
        cmd->add_option("--input", o.input, "workspace JSON document")
            ->required()
            ->check(CLI::ExistingFile);
        if (npoints)
            cmd->add_option("--point", o.points, "named point")->required()->expected(npoints);
        cmd->add_option("--mode", o.mode, "value rendering")
            ->check(CLI::IsMember({"exact", "float"}));
        cmd->add_option("--precision", o.precision, "float-mode precision in bits")
            ->check(CLI::Range(2u, 100000u));
        cmd->add_option("--output", o.output, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto* compute =
        app.add_subcommand("compute", "global height of a named subscheme at a named point");
    add_common(compute, 1);
    compute->add_option("--subscheme", o.subscheme, "named presentation")->required();

    auto* local = app.add_subcommand("local", "local height at one place");
    add_common(local, 1);
    local->add_option("--subscheme", o.subscheme, "named presentation")->required();
    local->add_option("--place", o.place, "inf | p=<prime> [+ quadratic suffix]")->required();

    auto* distance =
        app.add_subcommand("distance", "arithmetic distance between two named points");
    add_common(distance, 2);
    distance->add_option("--place", o.place, "local distance at this place (default: global)");

    auto* places = app.add_subcommand("places", "decomposition of a place in Q(sqrt(d))");
    places->add_option("--d", o.d, "squarefree d of Q(sqrt(d))")->required();
    places->add_option("--p", o.prime, "a prime, or \"inf\"")->required();
    places->add_option("--output", o.output, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* verify = app.add_subcommand("verify", "run identity-check suites");
    verify->add_option("suites", o.suites, "suite names (default: all)");
    verify->add_option("--samples", o.samples, "sample count per check")
        ->check(CLI::Range(1u, 1000000u));
    verify->add_option("--seed", o.seed, "sampling seed");
    verify->add_option("--output", o.output, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (compute->parsed()) return cmd_compute(o);
        if (local->parsed()) return cmd_local(o);
        if (distance->parsed()) return cmd_distance(o);
        if (places->parsed()) return cmd_places(o);
        if (verify->parsed()) return cmd_verify(o);
    } catch (const OnSubscheme& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IdenticalPoints& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
