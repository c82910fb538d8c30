/* neighborhood.cpp */
#include "mftop/neighborhood.hpp"

#include <algorithm>
#include <map>

#include "mftop/enumerate.hpp"
#include "mftop/kernels.hpp"

namespace mftop {

NbdSystem::NbdSystem(SpaceShape shape, std::vector<SetFamily> families)
    : shape_(std::move(shape)) {
    if (families.size() != shape_.universe.size())
        throw ShapeError("neighbourhood system needs one family per point");
    families_.reserve(families.size());
    for (SetFamily& fam : families) {
        for (const MultiFuzzySet& f : fam)
            if (f.shape() != shape_)
                throw ShapeError("neighbourhood member does not live over the system's shape");
        families_.push_back(canonical_family(std::move(fam)));
    }
}

const SetFamily& NbdSystem::family_at(std::size_t point_index) const {
    if (point_index >= families_.size()) throw PointError("point index out of range");
    return families_[point_index];
}

const SetFamily& NbdSystem::family_at(std::string_view label) const {
    return families_[shape_.universe.index_of(label)];
}

namespace {

bool tuple_equal(const MultiFuzzySet& a, const MultiFuzzySet& b, std::size_t point) {
    auto ta = a.tuple_at(point);
    auto tb = b.tuple_at(point);
    return std::equal(ta.begin(), ta.end(), tb.begin());
}

} // namespace

bool is_nbd(const MultiFuzzySet& f, std::size_t point_index,
            const MultiFuzzyTopology& topology) {
    if (f.shape() != topology.shape())
        throw ShapeError("set does not live over the topology's shape");
    if (positivity_at(f, point_index) != Positivity::AllPositive) return false;
    for (const MultiFuzzySet& g : topology.opens())
        if (leq(g, f) && tuple_equal(g, f, point_index)) return true;
    return false;
}

bool is_nbd(const MultiFuzzySet& f, std::string_view label,
            const MultiFuzzyTopology& topology) {
    return is_nbd(f, topology.shape().universe.index_of(label), topology);
}

std::vector<SetFamily> nbd_families(const MultiFuzzyTopology& topology) {
    const SpaceShape& shape = topology.shape();
    const std::size_t points = shape.universe.size();
    std::vector<SetFamily> families(points);
    std::vector<bool> positive(points), witnessed(points);
    // One sweep over the grid, scanning the dominated opens once per set.
    for (const MultiFuzzySet& f : all_grid_sets(shape)) {
        std::size_t wanted = 0;
        for (std::size_t x = 0; x < points; ++x) {
            positive[x] = positivity_at(f, x) == Positivity::AllPositive;
            witnessed[x] = false;
            if (positive[x]) ++wanted;
        }
        if (wanted == 0) continue;
        for (const MultiFuzzySet& g : topology.opens()) {
            if (!leq(g, f)) continue;
            for (std::size_t x = 0; x < points; ++x)
                if (positive[x] && !witnessed[x] && tuple_equal(g, f, x)) {
                    witnessed[x] = true;
                    --wanted;
                }
            if (wanted == 0) break;
        }
        for (std::size_t x = 0; x < points; ++x)
            if (witnessed[x]) families[x].push_back(f);
    }
    return families; // grid order is canonical already
}

SetFamily nbd_family(const MultiFuzzyTopology& topology, std::size_t point_index) {
    if (point_index >= topology.shape().universe.size())
        throw PointError("point index out of range");
    return nbd_families(topology)[point_index];
}

SetFamily nbd_family(const MultiFuzzyTopology& topology, std::string_view label) {
    return nbd_family(topology, topology.shape().universe.index_of(label));
}

NbdSystem nbd_from_topology(const MultiFuzzyTopology& topology) {
    return NbdSystem(topology.shape(), nbd_families(topology));
}

namespace detail {

// Coordinatewise maximum, at the point, over the members below f.
static std::vector<std::uint32_t> attained_tuple(const SetFamily& family,
                                                 const MultiFuzzySet& f,
                                                 std::size_t point_index) {
    std::vector<std::uint32_t> acc(f.shape().dim, 0);
    for (const MultiFuzzySet& n : family) {
        if (!leq(n, f)) continue;
        auto tup = n.tuple_at(point_index);
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = std::max(acc[i], tup[i]);
    }
    return acc;
}

bool n4_hypothesis_attained(const SetFamily& family, const MultiFuzzySet& f,
                            std::size_t point_index) {
    const auto acc = attained_tuple(family, f, point_index);
    auto want = f.tuple_at(point_index);
    return std::equal(acc.begin(), acc.end(), want.begin());
}

bool n4_hypothesis_grid_r(const SetFamily& family, const MultiFuzzySet& f,
                          std::size_t point_index) {
    const auto acc = attained_tuple(family, f, point_index);
    auto want = f.tuple_at(point_index);
    for (std::size_t i = 0; i < acc.size(); ++i) {
        if (want[i] <= 1) continue; // no grid value strictly between 0 and 1/D
        // the largest grid r below want[i] is want[i]-1; exceeding every
        // such r means reaching want[i] itself
        if (acc[i] < want[i]) return false;
    }
    return true;
}

} // namespace detail

NbdReport verify_nbd_axioms(const NbdSystem& system) {
    const SpaceShape& shape = system.shape();
    NbdReport report;
    auto violate = [&report](std::string axiom, std::size_t point, std::string detail,
                             SetFamily witnesses) {
        report.ok = false;
        report.violations.push_back(
            {std::move(axiom), point, std::move(detail), std::move(witnesses)});
    };

    const SetFamily constants = all_nonnull_constants(shape);
    const SetFamily restricted = all_restricted_grid_sets(shape);

    // N5 needs, per candidate inner set G, whether G belongs to L(y) at
    // every positive point y.  Computed once over all distinct members.
    SetFamily members;
    for (const SetFamily& fam : system.families())
        for (const MultiFuzzySet& n : fam) family_insert(members, n);
    std::vector<bool> global_ok(members.size(), true);
    for (std::size_t k = 0; k < members.size(); ++k)
        for (std::size_t y = 0; y < shape.universe.size() && global_ok[k]; ++y)
            if (positivity_at(members[k], y) == Positivity::AllPositive &&
                !family_contains(system.family_at(y), members[k]))
                global_ok[k] = false;

    for (std::size_t x = 0; x < shape.universe.size(); ++x) {
        const SetFamily& fam = system.family_at(x);

        // N1: every non-null constant belongs to L(x).
        for (const MultiFuzzySet& c : constants)
            if (!family_contains(fam, c))
                violate("N1", x, "non-null constant missing from the family", {c});

        // N2: members are strictly positive at x.
        for (const MultiFuzzySet& n : fam)
            if (positivity_at(n, x) != Positivity::AllPositive)
                violate("N2", x, "member is not strictly positive at the point", {n});

        // N3: pairwise meets stay in the family.
        for (std::size_t i = 0; i < fam.size(); ++i)
            for (std::size_t j = i + 1; j < fam.size(); ++j) {
                MultiFuzzySet m = meet(fam[i], fam[j]);
                if (!family_contains(fam, m))
                    violate("N3", x, "meet of two members is not a member",
                            {fam[i], fam[j], m});
            }

        // N4 (attainment form) over restricted-class grid sets positive at x.
        for (const MultiFuzzySet& f : restricted) {
            if (positivity_at(f, x) != Positivity::AllPositive) continue;
            if (detail::n4_hypothesis_attained(fam, f, x) && !family_contains(fam, f))
                violate("N4", x, "set with attained coordinate grades is not a member", {f});
        }

        // N5: an inner member with the same tuple at x that belongs to the
        // family of every point where it is positive.
        // Bucket the globally-good members by their tuple at x.
        std::map<std::vector<std::uint32_t>, std::vector<std::size_t>> buckets;
        for (std::size_t k = 0; k < members.size(); ++k) {
            if (!global_ok[k] || !family_contains(fam, members[k])) continue;
            auto tup = members[k].tuple_at(x);
            buckets[std::vector<std::uint32_t>(tup.begin(), tup.end())].push_back(k);
        }
        for (const MultiFuzzySet& n : fam) {
            auto tup = n.tuple_at(x);
            auto it = buckets.find(std::vector<std::uint32_t>(tup.begin(), tup.end()));
            bool found = false;
            if (it != buckets.end())
                for (std::size_t k : it->second)
                    if (leq(members[k], n)) { found = true; break; }
            if (!found)
                violate("N5", x, "no inner member matches the tuple and is a member everywhere",
                        {n});
        }
    }
    return report;
}

MultiFuzzyTopology topology_from_nbd(const NbdSystem& system, bool verify) {
    if (verify) {
        NbdReport report = verify_nbd_axioms(system);
        if (!report.ok)
            throw PreconditionError("neighbourhood system violates axiom " +
                                    report.violations.front().axiom);
    }
    const SpaceShape& shape = system.shape();
    SetFamily opens;
    opens.push_back(null_set(shape));
    for (const MultiFuzzySet& g : all_restricted_grid_sets(shape)) {
        bool member = true;
        for (std::size_t x = 0; x < shape.universe.size() && member; ++x)
            if (positivity_at(g, x) == Positivity::AllPositive &&
                !family_contains(system.family_at(x), g))
                member = false;
        if (member) opens.push_back(g);
    }
    return MultiFuzzyTopology(shape, TopologyKind::Lowen, std::move(opens));
}

bool open_via_nbd(const MultiFuzzySet& set, const MultiFuzzyTopology& topology) {
    if (set.shape() != topology.shape())
        throw ShapeError("set does not live over the topology's shape");
    if (!in_restricted_class(set))
        throw PreconditionError("openness criterion applies to restricted-class sets only");
    for (std::size_t x = 0; x < set.shape().universe.size(); ++x) {
        if (positivity_at(set, x) != Positivity::AllPositive) continue;
        bool witnessed = false;
        for (const MultiFuzzySet& g : topology.opens())
            if (leq(g, set) && tuple_equal(g, set, x)) {
                witnessed = true;
                break;
            }
        if (!witnessed) return false;
    }
    return true;
}

} // namespace mftop
