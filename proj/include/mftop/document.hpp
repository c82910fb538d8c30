/* document.hpp -- the JSON space-document format and its canonical
 * serialization.
 *
 * Schema (canonical key order is alphabetical):
 *   {
 *     "D": 2,
 *     "kind": "lowen" | "chang",
 *     "maps": { "name": { "point": "point", ... }, ... },
 *     "n": 1,
 *     "opens": [ { "point": ["k/D", ...], ... }, ... ],
 *     "universe": ["a", "b"]
 *   }
 * Grades are exact "k/D" strings, never decimals.  parse/serialize round
 * trips are byte-exact on canonical documents.
 */
#pragma once

#include <map>
#include <string>

#include "mftop/topology.hpp"

namespace mftop {

struct SpaceDocument {
    SpaceShape shape;
    TopologyKind kind;
    SetFamily opens;
    /// Named point assignments (by label); targets may refer to another
    /// document's universe, so they stay unresolved here.
    std::map<std::string, std::map<std::string, std::string>> maps;

    MultiFuzzyTopology topology() const { return MultiFuzzyTopology(shape, kind, opens); }
};

/// Parses and validates a document; errors carry the offending field path.
SpaceDocument parse_space_document(const std::string& text);
SpaceDocument load_space_document(const std::string& path);

/// Canonical serialization: sorted keys, opens in canonical family order,
/// grades as "k/D".
std::string serialize_space_document(const SpaceDocument& doc);

SpaceDocument document_from_topology(const MultiFuzzyTopology& topology);

/// Resolves a named map from `from`'s maps section as a point map into
/// `to`'s universe.
PointMap resolve_map(const SpaceDocument& from, const SpaceDocument& to,
                     const std::string& name);

} // namespace mftop
