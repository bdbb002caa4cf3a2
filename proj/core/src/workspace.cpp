#include "heights/workspace.hpp"

#include "json.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace heights {

namespace {

using nlohmann::json;

// The default parser keeps the last of two equal keys and drops the first
// silently; a workspace with two presentations named "H" is a user error we
// have to catch ourselves, during the event stream.
json parse_checked(const std::string& text) {
    std::vector<std::set<std::string>> scopes;
    json::parser_callback_t cb = [&scopes](int, json::parse_event_t ev, json& parsed) {
        switch (ev) {
            case json::parse_event_t::object_start: scopes.emplace_back(); break;
            case json::parse_event_t::object_end: scopes.pop_back(); break;
            case json::parse_event_t::key: {
                auto k = parsed.get<std::string>();
                if (!scopes.back().insert(k).second)
                    throw DuplicateName("duplicate key \"" + k + "\"");
                break;
            }
            default: break;
        }
        return true;
    };
    try {
        return json::parse(text, cb);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("not valid JSON: ") + e.what());
    }
}

// Rethrows construction errors with the JSON path of the offending field so
// the caller sees e.g. "presentations.H.divisors[0].s_D: term ...".
template <class F>
auto at(const std::string& where, F&& f) {
    try {
        return f();
    } catch (const SchemaError& e) {
        throw SchemaError(where + ": " + e.what());
    } catch (const NotHomogeneous& e) {
        throw NotHomogeneous(where + ": " + e.what());
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    } catch (const DegreeMismatch& e) {
        throw DegreeMismatch(where + ": " + e.what());
    } catch (const InvalidField& e) {
        throw InvalidField(where + ": " + e.what());
    } catch (const InvalidPoint& e) {
        throw InvalidPoint(where + ": " + e.what());
    } catch (const FieldMismatch& e) {
        throw FieldMismatch(where + ": " + e.what());
    } catch (const AmbientMismatch& e) {
        throw AmbientMismatch(where + ": " + e.what());
    } catch (const Error& e) {
        throw SchemaError(where + ": " + e.what());
    }
}

const json& need(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object()) throw SchemaError(where + ": expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError(where + ": missing \"" + key + "\"");
    return *it;
}

void reject_unknown(const json& obj, std::initializer_list<const char*> known,
                    const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : known) ok = ok || it.key() == k;
        if (!ok) throw SchemaError(where + ": unknown key \"" + it.key() + "\"");
    }
}

std::vector<int> int_array(const json& j, const std::string& where) {
    if (!j.is_array()) throw SchemaError(where + ": expected an array of integers");
    std::vector<int> out;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw SchemaError(where + ": expected an integer");
        out.push_back(e.get<int>());
    }
    return out;
}

std::string string_at(const json& j, const std::string& where) {
    if (!j.is_string()) throw SchemaError(where + ": expected a string");
    return j.get<std::string>();
}

Rational parse_rational_string(const std::string& s, const std::string& where) {
    return at(where, [&]() { return parse_rational(s); });
}

MultihomogPolynomial poly_at(const json& j, const Ambient& amb, const std::string& where) {
    std::string text = string_at(j, where);
    return at(where, [&]() { return parse_polynomial(text, amb); });
}

std::vector<MultihomogPolynomial> poly_array(const json& j, const Ambient& amb,
                                             const std::string& where) {
    if (!j.is_array()) throw SchemaError(where + ": expected an array of polynomials");
    std::vector<MultihomogPolynomial> out;
    for (size_t i = 0; i < j.size(); ++i)
        out.push_back(poly_at(j[i], amb, where + "[" + std::to_string(i) + "]"));
    return out;
}

DivisorPresentation divisor_at(const json& j, const Ambient& amb, const std::string& where) {
    reject_unknown(j, {"s_D", "L", "M"}, where);
    const json& L = need(j, "L", where);
    const json& M = need(j, "M", where);
    reject_unknown(L, {"degree", "sections"}, where + ".L");
    reject_unknown(M, {"degree", "sections"}, where + ".M");
    auto s_D = poly_at(need(j, "s_D", where), amb, where + ".s_D");
    auto L_degree = int_array(need(L, "degree", where + ".L"), where + ".L.degree");
    auto L_sections = poly_array(need(L, "sections", where + ".L"), amb, where + ".L.sections");
    auto M_degree = int_array(need(M, "degree", where + ".M"), where + ".M.degree");
    auto M_sections = poly_array(need(M, "sections", where + ".M"), amb, where + ".M.sections");
    return at(where, [&]() {
        return make_divisor_presentation(std::move(s_D), std::move(L_degree),
                                         std::move(L_sections), std::move(M_degree),
                                         std::move(M_sections));
    });
}

ProjectivePoint point_at(const json& j, const Ambient& amb, const std::string& where) {
    reject_unknown(j, {"field", "coords"}, where);
    const json& field = need(j, "field", where);
    const json& coords = need(j, "coords", where);
    if (!coords.is_array()) throw SchemaError(where + ".coords: expected an array of blocks");

    std::optional<QuadraticField> F;
    if (!field.is_null()) {
        reject_unknown(field, {"d"}, where + ".field");
        const json& d = need(field, "d", where + ".field");
        if (!d.is_number_integer()) throw SchemaError(where + ".field.d: expected an integer");
        F = at(where + ".field", [&]() { return QuadraticField::make(Int(d.get<long>())); });
    }

    auto entry_where = [&where](size_t b, size_t k) {
        return where + ".coords[" + std::to_string(b) + "][" + std::to_string(k) + "]";
    };
    if (!F) {
        RationalCoords rc;
        for (size_t b = 0; b < coords.size(); ++b) {
            const json& blk = coords[b];
            if (!blk.is_array())
                throw SchemaError(where + ".coords[" + std::to_string(b) +
                                  "]: expected an array of entries");
            std::vector<Rational> row;
            for (size_t k = 0; k < blk.size(); ++k) {
                if (!blk[k].is_string())
                    throw SchemaError(entry_where(b, k) +
                                      ": rational points take \"p/q\" entries");
                row.push_back(
                    parse_rational_string(blk[k].get<std::string>(), entry_where(b, k)));
            }
            rc.push_back(std::move(row));
        }
        return at(where, [&]() { return ProjectivePoint::rational(amb, std::move(rc)); });
    }
    QuadCoords qc;
    for (size_t b = 0; b < coords.size(); ++b) {
        const json& blk = coords[b];
        if (!blk.is_array())
            throw SchemaError(where + ".coords[" + std::to_string(b) +
                              "]: expected an array of entries");
        std::vector<QuadElement> row;
        for (size_t k = 0; k < blk.size(); ++k) {
            const json& e = blk[k];
            if (e.is_string()) {
                row.emplace_back(parse_rational_string(e.get<std::string>(), entry_where(b, k)),
                                 Rational(0), *F);
            } else if (e.is_array() && e.size() == 2 && e[0].is_string() && e[1].is_string()) {
                row.emplace_back(
                    parse_rational_string(e[0].get<std::string>(), entry_where(b, k)),
                    parse_rational_string(e[1].get<std::string>(), entry_where(b, k)), *F);
            } else {
                throw SchemaError(entry_where(b, k) +
                                  ": expected \"p/q\" or a pair [\"a\", \"b\"]");
            }
        }
        qc.push_back(std::move(row));
    }
    return at(where, [&]() { return ProjectivePoint::quadratic(amb, *F, std::move(qc)); });
}

Morphism morphism_at(const json& j, const Ambient& amb, const std::string& where) {
    reject_unknown(j, {"target_blocks", "components"}, where);
    auto blocks = int_array(need(j, "target_blocks", where), where + ".target_blocks");
    Ambient target = at(where + ".target_blocks", [&]() { return Ambient::make(blocks); });
    const json& comp = need(j, "components", where);
    if (!comp.is_array()) throw SchemaError(where + ".components: expected an array per block");
    std::vector<std::vector<MultihomogPolynomial>> components;
    for (size_t b = 0; b < comp.size(); ++b)
        components.push_back(
            poly_array(comp[b], amb, where + ".components[" + std::to_string(b) + "]"));
    return at(where, [&]() { return Morphism::make(amb, target, std::move(components)); });
}

} // namespace

Workspace parse_workspace(const std::string& text) {
    json doc = parse_checked(text);
    if (!doc.is_object()) throw SchemaError("top level: expected an object");
    reject_unknown(doc, {"ambient", "presentations", "points", "morphisms"}, "top level");

    const json& amb_j = need(doc, "ambient", "top level");
    reject_unknown(amb_j, {"blocks"}, "ambient");
    auto blocks = int_array(need(amb_j, "blocks", "ambient"), "ambient.blocks");
    Ambient amb = at("ambient.blocks", [&]() { return Ambient::make(blocks); });

    Workspace ws{amb, {}, {}, {}};
    if (auto it = doc.find("presentations"); it != doc.end()) {
        if (!it->is_object()) throw SchemaError("presentations: expected name -> presentation");
        for (auto p = it->begin(); p != it->end(); ++p) {
            std::string where = "presentations." + p.key();
            reject_unknown(*p, {"divisors"}, where);
            const json& divs = need(*p, "divisors", where);
            if (!divs.is_array() || divs.empty())
                throw SchemaError(where + ".divisors: expected a nonempty array");
            std::vector<DivisorPresentation> ds;
            for (size_t i = 0; i < divs.size(); ++i)
                ds.push_back(
                    divisor_at(divs[i], amb, where + ".divisors[" + std::to_string(i) + "]"));
            ws.presentations.emplace(
                p.key(), at(where, [&]() {
                    return make_subscheme_presentation(std::move(ds), p.key());
                }));
        }
    }
    if (auto it = doc.find("points"); it != doc.end()) {
        if (!it->is_object()) throw SchemaError("points: expected name -> point");
        for (auto p = it->begin(); p != it->end(); ++p)
            ws.points.emplace(p.key(), point_at(*p, amb, "points." + p.key()));
    }
    if (auto it = doc.find("morphisms"); it != doc.end()) {
        if (!it->is_object()) throw SchemaError("morphisms: expected name -> morphism");
        for (auto p = it->begin(); p != it->end(); ++p)
            ws.morphisms.emplace(p.key(), morphism_at(*p, amb, "morphisms." + p.key()));
    }
    return ws;
}

Workspace load_workspace(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_workspace(buf.str());
}

} // namespace heights
