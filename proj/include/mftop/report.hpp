/* report.hpp -- structured verification reports with deterministic
 * rendering (stable key order, no timestamps in the payload).
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "mftop/neighborhood.hpp"
#include "mftop/topology.hpp"

namespace mftop {

/// JSON value for a set: point label -> ["k/D", ...].
nlohmann::json set_to_json(const MultiFuzzySet& set);
nlohmann::json family_to_json(const SetFamily& family);
nlohmann::json topology_to_json(const MultiFuzzyTopology& topology);
nlohmann::json point_map_to_json(const PointMap& map);
nlohmann::json axiom_report_to_json(const AxiomReport& report);
nlohmann::json nbd_report_to_json(const NbdReport& report);

struct CheckResult {
    std::string name;
    bool pass = false;
    nlohmann::json details; // optional witness payload
};

struct VerificationReport {
    std::string command;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool ok() const;
    void add(std::string name, bool pass, nlohmann::json details = nullptr);

    nlohmann::json to_json() const;
    /// One "name: PASS|FAIL" line per check plus a summary line.
    std::string to_text() const;
};

} // namespace mftop
