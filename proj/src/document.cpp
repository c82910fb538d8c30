/* document.cpp */
#include "mftop/document.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mftop {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw ValueError(path + ": " + message);
}

std::uint32_t get_positive_int(const json& j, const std::string& path) {
    if (!j.is_number_unsigned() || j.get<std::uint64_t>() == 0 ||
        j.get<std::uint64_t>() > 0xffffffffull)
        fail(path, "expected a positive integer");
    return j.get<std::uint32_t>();
}

} // namespace

SpaceDocument parse_space_document(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValueError(std::string("document is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) fail("$", "expected a JSON object");
    for (const std::string key : {"universe", "n", "D", "kind", "opens"})
        if (!root.contains(key)) fail("$", "missing required field '" + key + "'");

    if (!root["universe"].is_array() || root["universe"].empty())
        fail("universe", "expected a nonempty array of labels");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < root["universe"].size(); ++i) {
        const json& l = root["universe"][i];
        if (!l.is_string()) fail("universe[" + std::to_string(i) + "]", "expected a string");
        labels.push_back(l.get<std::string>());
    }

    const std::uint32_t n = get_positive_int(root["n"], "n");
    const std::uint32_t den = get_positive_int(root["D"], "D");
    if (!root["kind"].is_string()) fail("kind", "expected \"lowen\" or \"chang\"");
    const TopologyKind kind = topology_kind_from_string(root["kind"].get<std::string>());

    SpaceShape shape = make_shape(Universe(std::move(labels)), n, den);

    if (!root["opens"].is_array()) fail("opens", "expected an array");
    SetFamily opens;
    for (std::size_t k = 0; k < root["opens"].size(); ++k) {
        const std::string where = "opens[" + std::to_string(k) + "]";
        const json& entry = root["opens"][k];
        if (!entry.is_object()) fail(where, "expected an object point -> grade tuple");
        std::vector<std::uint32_t> table(shape.cells(), 0);
        std::vector<bool> seen(shape.universe.size(), false);
        for (const auto& [label, tuple] : entry.items()) {
            const auto idx = shape.universe.find(label);
            if (!idx) fail(where + "." + label, "point is not in the universe");
            seen[*idx] = true;
            if (!tuple.is_array() || tuple.size() != n)
                fail(where + "." + label, "expected an array of " + std::to_string(n) +
                                              " grades");
            for (std::size_t i = 0; i < tuple.size(); ++i) {
                const std::string gwhere =
                    where + "." + label + "[" + std::to_string(i) + "]";
                if (!tuple[i].is_string()) fail(gwhere, "grades are \"k/D\" strings");
                try {
                    table[*idx * n + i] = shape.chain.parse(tuple[i].get<std::string>());
                } catch (const ValueError& e) {
                    fail(gwhere, e.what());
                }
            }
        }
        for (std::size_t p = 0; p < seen.size(); ++p)
            if (!seen[p]) fail(where, "missing point '" + shape.universe.label(p) + "'");
        opens.emplace_back(shape, std::move(table));
    }

    SpaceDocument doc{std::move(shape), kind, canonical_family(std::move(opens)), {}};

    if (root.contains("maps")) {
        if (!root["maps"].is_object()) fail("maps", "expected an object");
        for (const auto& [name, assignment] : root["maps"].items()) {
            if (!assignment.is_object())
                fail("maps." + name, "expected an object point -> point");
            std::map<std::string, std::string> out;
            for (const auto& [from, to] : assignment.items()) {
                if (!doc.shape.universe.find(from))
                    fail("maps." + name + "." + from, "point is not in the universe");
                if (!to.is_string()) fail("maps." + name + "." + from, "expected a string");
                out[from] = to.get<std::string>();
            }
            for (const std::string& label : doc.shape.universe.labels())
                if (!out.count(label))
                    fail("maps." + name, "missing point '" + label + "'");
            doc.maps[name] = std::move(out);
        }
    }
    return doc;
}

SpaceDocument load_space_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValueError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_space_document(buffer.str());
}

std::string serialize_space_document(const SpaceDocument& doc) {
    json root;
    root["universe"] = doc.shape.universe.labels();
    root["n"] = doc.shape.dim;
    root["D"] = doc.shape.chain.denominator();
    root["kind"] = to_string(doc.kind);
    json opens = json::array();
    for (const MultiFuzzySet& g : doc.opens) {
        json entry = json::object();
        for (std::size_t p = 0; p < doc.shape.universe.size(); ++p) {
            json tuple = json::array();
            for (std::uint32_t i = 0; i < doc.shape.dim; ++i)
                tuple.push_back(doc.shape.chain.format(g.grade(p, i)));
            entry[doc.shape.universe.label(p)] = std::move(tuple);
        }
        opens.push_back(std::move(entry));
    }
    root["opens"] = std::move(opens);
    if (!doc.maps.empty()) root["maps"] = doc.maps;
    return root.dump(2) + "\n";
}

SpaceDocument document_from_topology(const MultiFuzzyTopology& topology) {
    return SpaceDocument{topology.shape(), topology.kind(), topology.opens(), {}};
}

PointMap resolve_map(const SpaceDocument& from, const SpaceDocument& to,
                     const std::string& name) {
    auto it = from.maps.find(name);
    if (it == from.maps.end())
        throw ValueError("document defines no map named '" + name + "'");
    std::vector<std::pair<std::string, std::string>> assignment(it->second.begin(),
                                                                it->second.end());
    return PointMap(from.shape.universe, to.shape.universe, assignment);
}

} // namespace mftop
