/* topology.cpp */
#include "mftop/topology.hpp"

#include <algorithm>

#include "mftop/kernels.hpp"

namespace mftop {

std::string to_string(TopologyKind kind) {
    return kind == TopologyKind::Lowen ? "lowen" : "chang";
}

TopologyKind topology_kind_from_string(std::string_view text) {
    if (text == "lowen") return TopologyKind::Lowen;
    if (text == "chang") return TopologyKind::Chang;
    throw ValueError("unknown topology kind '" + std::string(text) + "'");
}

MultiFuzzyTopology::MultiFuzzyTopology(SpaceShape shape, TopologyKind kind, SetFamily opens)
    : shape_(std::move(shape)), kind_(kind), opens_(canonical_family(std::move(opens))) {
    for (const MultiFuzzySet& g : opens_)
        if (g.shape() != shape_)
            throw ShapeError("open set does not live over the topology's shape");
}

namespace {

std::string describe(const MultiFuzzySet& set) {
    const SpaceShape& s = set.shape();
    std::string out = "[";
    for (std::size_t p = 0; p < s.universe.size(); ++p) {
        if (p) out += ", ";
        out += s.universe.label(p) + ":(";
        for (std::uint32_t i = 0; i < s.dim; ++i) {
            if (i) out += ",";
            out += s.chain.format(set.grade(p, i));
        }
        out += ")";
    }
    out += "]";
    return out;
}

} // namespace

AxiomReport verify_axioms(const SpaceShape& shape, const SetFamily& candidate,
                          TopologyKind kind) {
    for (const MultiFuzzySet& g : candidate)
        if (g.shape() != shape)
            throw ShapeError("candidate set does not live over the given shape");

    AxiomReport report;
    auto violate = [&report](std::string code, std::string detail, SetFamily witnesses) {
        report.ok = false;
        report.violations.push_back({std::move(code), std::move(detail), std::move(witnesses)});
    };

    const SetFamily family = canonical_family(candidate);

    for (const MultiFuzzySet& g : family)
        if (!in_restricted_class(g))
            violate("restricted-class", "open set " + describe(g) + " has a mixed point",
                    {g});

    const MultiFuzzySet null = null_set(shape);
    if (!family_contains(family, null))
        violate("missing-member", "null set missing", {null});
    if (kind == TopologyKind::Lowen) {
        for (const MultiFuzzySet& c : all_nonnull_constants(shape))
            if (!family_contains(family, c))
                violate("missing-member", "constant " + describe(c) + " missing", {c});
    } else {
        const MultiFuzzySet full = absolute_set(shape);
        if (!family_contains(family, full))
            violate("missing-member", "absolute set missing", {full});
    }

    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            MultiFuzzySet m = meet(family[i], family[j]);
            if (!family_contains(family, m))
                violate("meet-closure",
                        "meet of " + describe(family[i]) + " and " + describe(family[j]) +
                            " is not a member",
                        {family[i], family[j], m});
            MultiFuzzySet u = join(family[i], family[j]);
            if (!family_contains(family, u))
                violate("join-closure",
                        "join of " + describe(family[i]) + " and " + describe(family[j]) +
                            " is not a member",
                        {family[i], family[j], u});
        }
    }
    // Finite families make pairwise join closure equivalent to closure
    // under unions of any number; the total join is checked explicitly.
    if (!family.empty()) {
        MultiFuzzySet total = join(std::span<const MultiFuzzySet>(family));
        if (!family_contains(family, total))
            violate("join-closure", "join of the whole family is not a member", {total});
    }
    return report;
}

AxiomReport verify_axioms(const MultiFuzzyTopology& topology) {
    return verify_axioms(topology.shape(), topology.opens(), topology.kind());
}

MultiFuzzyTopology generate(const SpaceShape& shape, const SetFamily& seeds,
                            const GenerateOptions& options) {
    for (const MultiFuzzySet& s : seeds) {
        if (s.shape() != shape)
            throw ShapeError("seed does not live over the given shape");
        if (!in_restricted_class(s))
            throw PreconditionError("seed " + describe(s) + " is outside the restricted class");
    }

    SetFamily family; // canonical index for membership tests
    std::vector<MultiFuzzySet> items; // discovery order, drives the pair loop
    auto add = [&family, &items](MultiFuzzySet s) {
        if (family_insert(family, s)) items.push_back(std::move(s));
    };
    add(null_set(shape));
    if (options.include_constants)
        for (const MultiFuzzySet& c : all_nonnull_constants(shape)) add(c);
    for (const MultiFuzzySet& s : seeds) add(s);

    // Closure under pairwise meet and join: every unordered pair is
    // visited exactly once as the frontier index advances past it.
    for (std::size_t i = 1; i < items.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            add(meet(items[i], items[j]));
            add(join(items[i], items[j]));
        }
    }
    return MultiFuzzyTopology(shape, TopologyKind::Lowen, std::move(family));
}

bool is_open_base(const SetFamily& base, const MultiFuzzyTopology& topology) {
    for (const MultiFuzzySet& b : base)
        if (!topology.contains(b))
            throw PreconditionError("base member " + describe(b) + " is not open");

    const MultiFuzzySet null = null_set(topology.shape());
    for (const MultiFuzzySet& g : topology.opens()) {
        if (g == null) continue; // empty union by convention
        // The join of all base members below g is the largest join a
        // subfamily of the base can reach inside g.
        std::vector<std::uint32_t> acc(topology.shape().cells(), 0);
        for (const MultiFuzzySet& b : base)
            if (leq(b, g))
                kernels::active_ops().max_into(acc.data(), b.table().data(), acc.data(),
                                               acc.size());
        if (acc != g.table()) return false;
    }
    return true;
}

SetFamily minimal_base(const MultiFuzzyTopology& topology) {
    SetFamily base;
    const MultiFuzzySet null = null_set(topology.shape());
    for (const MultiFuzzySet& g : topology.opens()) {
        if (g == null) continue; // the empty join
        std::vector<std::uint32_t> acc(topology.shape().cells(), 0);
        for (const MultiFuzzySet& other : topology.opens())
            if (other != g && leq(other, g))
                kernels::active_ops().max_into(acc.data(), other.table().data(), acc.data(),
                                               acc.size());
        if (acc != g.table()) base.push_back(g); // join-irreducible
    }
    return base; // opens are canonical, so this is too
}

MultiFuzzyTopology intersect_topologies(std::span<const MultiFuzzyTopology> topologies) {
    if (topologies.empty())
        throw PreconditionError("intersection of an empty family of topologies");
    const MultiFuzzyTopology& first = topologies.front();
    for (const MultiFuzzyTopology& t : topologies) {
        if (t.shape() != first.shape())
            throw ShapeError("topologies live over different shapes");
        if (t.kind() != first.kind())
            throw ShapeError("topologies have different kinds");
    }
    SetFamily opens;
    for (const MultiFuzzySet& g : first.opens()) {
        bool everywhere = true;
        for (std::size_t k = 1; k < topologies.size() && everywhere; ++k)
            everywhere = topologies[k].contains(g);
        if (everywhere) opens.push_back(g);
    }
    return MultiFuzzyTopology(first.shape(), first.kind(), std::move(opens));
}

bool is_closed(const MultiFuzzySet& set, const MultiFuzzyTopology& topology) {
    if (set.shape() != topology.shape())
        throw ShapeError("set does not live over the topology's shape");
    return topology.contains(complement(set));
}

} // namespace mftop
