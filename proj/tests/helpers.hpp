/* helpers.hpp -- shared fixtures and oracle bridging for the test suites. */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mftop/enumerate.hpp"
#include "mftop/topology.hpp"
#include "oracle.hpp"

namespace testutil {

inline mftop::SpaceShape shape_ab(std::uint32_t dim = 1, std::uint32_t den = 2) {
    return mftop::make_shape(mftop::Universe({"a", "b"}), dim, den);
}

inline mftop::SpaceShape shape_y(std::uint32_t dim = 1, std::uint32_t den = 2) {
    return mftop::make_shape(mftop::Universe({"y"}), dim, den);
}

inline mftop::MultiFuzzySet mk(const mftop::SpaceShape& shape,
                               std::vector<std::uint32_t> table) {
    return mftop::MultiFuzzySet(shape, std::move(table));
}

/// The worked fixture: tau = {null, C-half, U, C-one} over {a,b}, n=1, D=2
/// with U = [a:1, b:1/2].
inline mftop::MultiFuzzyTopology fixture_tau() {
    const mftop::SpaceShape s = shape_ab();
    return mftop::generate(s, {mk(s, {2, 1})});
}

/// tau = {null, C-half, C-one}: the minimal Lowen topology on {a,b}.
inline mftop::MultiFuzzyTopology minimal_tau() {
    return mftop::generate(shape_ab(), {});
}

// -- oracle bridging ---------------------------------------------------------

inline oracle::Tab to_tab(const mftop::MultiFuzzySet& set) {
    oracle::Tab tab;
    tab.reserve(set.table().size());
    for (std::uint32_t g : set.table()) tab.push_back(static_cast<int>(g));
    return tab;
}

inline oracle::Fam to_fam(const mftop::SetFamily& family) {
    oracle::Fam fam;
    fam.reserve(family.size());
    for (const mftop::MultiFuzzySet& f : family) fam.push_back(to_tab(f));
    std::sort(fam.begin(), fam.end());
    return fam;
}

inline oracle::Shape to_shape(const mftop::SpaceShape& shape) {
    return oracle::Shape{static_cast<int>(shape.universe.size()),
                         static_cast<int>(shape.dim),
                         static_cast<int>(shape.chain.denominator())};
}

inline mftop::MultiFuzzySet from_tab(const mftop::SpaceShape& shape, const oracle::Tab& tab) {
    std::vector<std::uint32_t> table;
    table.reserve(tab.size());
    for (int g : tab) table.push_back(static_cast<std::uint32_t>(g));
    return mftop::MultiFuzzySet(shape, std::move(table));
}

inline mftop::SetFamily from_fam(const mftop::SpaceShape& shape, const oracle::Fam& fam) {
    mftop::SetFamily out;
    for (const oracle::Tab& t : fam) out.push_back(from_tab(shape, t));
    return mftop::canonical_family(std::move(out));
}

} // namespace testutil
