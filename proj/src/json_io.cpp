#include "mptg/json_io.hpp"

#include <json.hpp>

#include "mptg/errors.hpp"
#include "mptg/rational.hpp"

namespace mptg {

namespace {

using json = nlohmann::ordered_json;

template <typename Rep, typename Emit>
std::string dump_rep(const Rep& rep, Emit emit) {
    json doc;
    doc["vertices"] = json::array();
    for (int v = 0; v < rep.size(); ++v) {
        json entry;
        entry["id"] = v + 1;
        emit(entry, rep.vertices[static_cast<std::size_t>(v)]);
        doc["vertices"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

Rat field_rational(const json& entry, const char* key) {
    if (!entry.contains(key))
        throw ParseError(0, std::string("vertex entry is missing \"") + key + "\"");
    const json& value = entry[key];
    try {
        if (value.is_string()) return parse_rational(value.get<std::string>());
        if (value.is_number_integer()) return Rat(value.get<long long>());
    } catch (const ContractError& e) {
        throw ParseError(0, std::string("bad \"") + key + "\" value: " + e.what());
    }
    throw ParseError(0, std::string("\"") + key +
                            "\" must be a rational string or an integer");
}

}  // namespace

std::string to_json(const IntervalPointRep& rep) {
    return dump_rep(rep, [](json& entry, const RepVertex& rv) {
        entry["a"] = format_rational(rv.a);
        entry["b"] = format_rational(rv.b);
        entry["p"] = format_rational(rv.p);
    });
}

std::string to_json(const ToleranceRep& rep) {
    return dump_rep(rep, [](json& entry, const TolVertex& tv) {
        entry["a"] = format_rational(tv.a);
        entry["b"] = format_rational(tv.b);
        entry["t"] = format_rational(tv.t);
    });
}

AnyRep parse_representation(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(0, std::string("not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
        throw ParseError(0, "expected an object with a \"vertices\" array");

    const json& verts = doc["vertices"];
    const int n = static_cast<int>(verts.size());
    std::vector<const json*> by_id(static_cast<std::size_t>(n), nullptr);
    bool any_point = false, any_tolerance = false;
    for (const json& entry : verts) {
        if (!entry.is_object() || !entry.contains("id") || !entry["id"].is_number_integer())
            throw ParseError(0, "every vertex entry needs an integer \"id\"");
        const long long id = entry["id"].get<long long>();
        if (id < 1 || id > n)
            throw ParseError(0, "vertex id " + std::to_string(id) + " outside 1.." +
                                    std::to_string(n));
        if (by_id[static_cast<std::size_t>(id - 1)])
            throw ParseError(0, "vertex id " + std::to_string(id) + " repeated");
        by_id[static_cast<std::size_t>(id - 1)] = &entry;
        if (entry.contains("p")) any_point = true;
        if (entry.contains("t")) any_tolerance = true;
    }
    if (any_point && any_tolerance)
        throw ParseError(0, "vertices mix \"p\" and \"t\" entries");
    if (n > 0 && !any_point && !any_tolerance)
        throw ParseError(0, "vertex entries need either \"p\" or \"t\"");

    if (any_tolerance) {
        ToleranceRep rep;
        rep.vertices.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            const json& entry = *by_id[static_cast<std::size_t>(v)];
            rep.vertices[static_cast<std::size_t>(v)] = {field_rational(entry, "a"),
                                                         field_rational(entry, "b"),
                                                         field_rational(entry, "t")};
        }
        rep.validate();
        return rep;
    }
    IntervalPointRep rep;
    rep.vertices.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        const json& entry = *by_id[static_cast<std::size_t>(v)];
        rep.vertices[static_cast<std::size_t>(v)] = {field_rational(entry, "a"),
                                                     field_rational(entry, "b"),
                                                     field_rational(entry, "p")};
    }
    rep.validate();
    return rep;
}

}  // namespace mptg
