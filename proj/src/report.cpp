/* report.cpp */
#include "mftop/report.hpp"

#include <algorithm>

namespace mftop {

using nlohmann::json;

json set_to_json(const MultiFuzzySet& set) {
    const SpaceShape& shape = set.shape();
    json out = json::object();
    for (std::size_t p = 0; p < shape.universe.size(); ++p) {
        json tuple = json::array();
        for (std::uint32_t i = 0; i < shape.dim; ++i)
            tuple.push_back(shape.chain.format(set.grade(p, i)));
        out[shape.universe.label(p)] = std::move(tuple);
    }
    return out;
}

json family_to_json(const SetFamily& family) {
    json out = json::array();
    for (const MultiFuzzySet& f : family) out.push_back(set_to_json(f));
    return out;
}

json topology_to_json(const MultiFuzzyTopology& topology) {
    json out;
    out["universe"] = topology.shape().universe.labels();
    out["n"] = topology.shape().dim;
    out["D"] = topology.shape().chain.denominator();
    out["kind"] = to_string(topology.kind());
    out["opens"] = family_to_json(topology.opens());
    return out;
}

json point_map_to_json(const PointMap& map) {
    json assignment = json::object();
    for (std::size_t x = 0; x < map.domain().size(); ++x)
        assignment[map.domain().label(x)] = map.codomain().label(map.apply(x));
    json out;
    out["from"] = map.domain().labels();
    out["to"] = map.codomain().labels();
    out["assignment"] = std::move(assignment);
    return out;
}

json axiom_report_to_json(const AxiomReport& report) {
    json out;
    out["ok"] = report.ok;
    json violations = json::array();
    for (const AxiomViolation& v : report.violations) {
        json entry;
        entry["code"] = v.code;
        entry["detail"] = v.detail;
        entry["witnesses"] = family_to_json(v.witnesses);
        violations.push_back(std::move(entry));
    }
    out["violations"] = std::move(violations);
    return out;
}

json nbd_report_to_json(const NbdReport& report) {
    json out;
    out["ok"] = report.ok;
    json violations = json::array();
    for (const NbdViolation& v : report.violations) {
        json entry;
        entry["axiom"] = v.axiom;
        entry["point"] = v.point;
        entry["detail"] = v.detail;
        entry["witnesses"] = family_to_json(v.witnesses);
        violations.push_back(std::move(entry));
    }
    out["violations"] = std::move(violations);
    return out;
}

bool VerificationReport::ok() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

void VerificationReport::add(std::string name, bool pass, json details) {
    checks.push_back({std::move(name), pass, std::move(details)});
}

json VerificationReport::to_json() const {
    json out;
    out["command"] = command;
    out["seed"] = seed;
    out["ok"] = ok();
    json list = json::array();
    for (const CheckResult& c : checks) {
        json entry;
        entry["name"] = c.name;
        entry["pass"] = c.pass;
        if (!c.details.is_null()) entry["details"] = c.details;
        list.push_back(std::move(entry));
    }
    out["checks"] = std::move(list);
    return out;
}

std::string VerificationReport::to_text() const {
    std::string out;
    for (const CheckResult& c : checks) {
        out += c.name + ": " + (c.pass ? "PASS" : "FAIL") + "\n";
        if (!c.pass && !c.details.is_null())
            out += "  " + c.details.dump() + "\n";
    }
    out += std::string(ok() ? "OK" : "FAILED") + " (" + std::to_string(checks.size()) +
           " checks)\n";
    return out;
}

} // namespace mftop
