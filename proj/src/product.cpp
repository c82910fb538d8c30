/* product.cpp */
#include "mftop/product.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>

namespace mftop {

ProductSpace::ProductSpace(MultiFuzzyTopology factor1, MultiFuzzyTopology factor2)
    : factor1_(std::move(factor1)), factor2_(std::move(factor2)),
      pairs_(make_pair_universe(factor1_.shape().universe, factor2_.shape().universe)),
      topology_(SpaceShape{pairs_.combined, factor1_.shape().dim, factor1_.shape().chain},
                TopologyKind::Lowen, {}) {
    if (factor1_.shape().dim != factor2_.shape().dim ||
        factor1_.shape().chain != factor2_.shape().chain)
        throw ShapeError("product factors disagree on dimension or grade chain");

    // Deduplicated basis, remembering one generating pair per member.
    std::map<std::vector<std::uint32_t>, std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t i = 0; i < factor1_.opens().size(); ++i)
        for (std::size_t j = 0; j < factor2_.opens().size(); ++j) {
            MultiFuzzySet p = product_set(factor1_.opens()[i], factor2_.opens()[j], pairs_);
            seen.emplace(p.table(), std::make_pair(i, j));
        }
    const SpaceShape pair_shape{pairs_.combined, factor1_.shape().dim, factor1_.shape().chain};
    for (const auto& [table, witness] : seen) {
        basis_.emplace_back(pair_shape, table);
        basis_factors_.push_back(witness);
    }
    topology_ = generate(pair_shape, basis_);
}

ProductSpace product_topology(const MultiFuzzyTopology& factor1,
                              const MultiFuzzyTopology& factor2) {
    return ProductSpace(factor1, factor2);
}

SpaceMap projection(const ProductSpace& product, int j) {
    if (j != 1 && j != 2) throw ValueError("projection index must be 1 or 2");
    const PairUniverse& pairs = product.pairs();
    std::vector<std::size_t> assignment(pairs.combined.size());
    for (std::size_t k = 0; k < assignment.size(); ++k)
        assignment[k] = j == 1 ? pairs.factors[k].first : pairs.factors[k].second;
    const MultiFuzzyTopology& target = j == 1 ? product.factor1() : product.factor2();
    return SpaceMap(PointMap(pairs.combined, target.shape().universe, std::move(assignment)),
                    product.topology(), target);
}

bool smallest_topology_check(const ProductSpace& product) {
    SetFamily subbase;
    const SpaceMap pi1 = projection(product, 1);
    const SpaceMap pi2 = projection(product, 2);
    for (const MultiFuzzySet& u : product.factor1().opens())
        family_insert(subbase, preimage(pi1.map(), u));
    for (const MultiFuzzySet& v : product.factor2().opens())
        family_insert(subbase, preimage(pi2.map(), v));
    const MultiFuzzyTopology generated = generate(product.topology().shape(), subbase);
    return generated.opens() == product.topology().opens();
}

SpaceMap slice_embedding(const ProductSpace& product, std::string_view fixed_label,
                         SliceSide side) {
    const PairUniverse& pairs = product.pairs();
    if (side == SliceSide::Left) {
        const std::size_t a = product.factor1().shape().universe.index_of(fixed_label);
        std::vector<std::size_t> assignment(product.factor2().shape().universe.size());
        for (std::size_t x2 = 0; x2 < assignment.size(); ++x2)
            assignment[x2] = pairs.pair_index(a, x2);
        return SpaceMap(PointMap(product.factor2().shape().universe, pairs.combined,
                                 std::move(assignment)),
                        product.factor2(), product.topology());
    }
    const std::size_t a = product.factor2().shape().universe.index_of(fixed_label);
    std::vector<std::size_t> assignment(product.factor1().shape().universe.size());
    for (std::size_t x1 = 0; x1 < assignment.size(); ++x1)
        assignment[x1] = pairs.pair_index(x1, a);
    return SpaceMap(PointMap(product.factor1().shape().universe, pairs.combined,
                             std::move(assignment)),
                    product.factor1(), product.topology());
}

SpaceMap product_map(const SpaceMap& m1, const SpaceMap& m2) {
    const ProductSpace domain = product_topology(m1.domain(), m2.domain());
    const ProductSpace codomain = product_topology(m1.codomain(), m2.codomain());
    std::vector<std::size_t> assignment(domain.pairs().combined.size());
    for (std::size_t k = 0; k < assignment.size(); ++k) {
        const auto [i, j] = domain.pairs().factors[k];
        assignment[k] = codomain.pairs().pair_index(m1.map().apply(i), m2.map().apply(j));
    }
    return SpaceMap(PointMap(domain.pairs().combined, codomain.pairs().combined,
                             std::move(assignment)),
                    domain.topology(), codomain.topology());
}

SecondCountability is_second_countable(const MultiFuzzyTopology& space) {
    // Opens are finite on a grade grid, so a countable base always exists;
    // report the minimal one.
    return SecondCountability{true, minimal_base(space)};
}

SetFamily product_base(const ProductSpace& product, const SetFamily& base1,
                       const SetFamily& base2) {
    if (!is_open_base(base1, product.factor1()))
        throw PreconditionError("first family is not an open base of its factor");
    if (!is_open_base(base2, product.factor2()))
        throw PreconditionError("second family is not an open base of its factor");
    SetFamily out;
    for (const MultiFuzzySet& b1 : base1)
        for (const MultiFuzzySet& b2 : base2)
            family_insert(out, product_set(b1, b2, product.pairs()));
    return out;
}

Cover Cover::of_set(MultiFuzzySet target, SetFamily family) {
    if (family.empty()) throw PreconditionError("cover family must be nonempty");
    for (const MultiFuzzySet& a : family)
        if (a.shape() != target.shape())
            throw ShapeError("cover member does not live over the target's shape");
    return Cover{std::move(target), canonical_family(std::move(family))};
}

Cover Cover::of_subset(CrispSubset subset, SetFamily family) {
    if (family.empty()) throw PreconditionError("cover family must be nonempty");
    for (const MultiFuzzySet& a : family)
        if (a.shape() != family.front().shape())
            throw ShapeError("cover members live over different shapes");
    for (const std::string& label : subset)
        family.front().shape().universe.index_of(label); // existence check
    return Cover{std::move(subset), canonical_family(std::move(family))};
}

namespace {

// Requirement table for a cover: per cell (point, coordinate) the grade
// the family's running maximum has to reach; 0 where unconstrained.
std::vector<std::uint32_t> cover_requirement(const Cover& cover) {
    const SpaceShape& shape = cover.family.front().shape();
    std::vector<std::uint32_t> need(shape.cells(), 0);
    if (const auto* target = std::get_if<MultiFuzzySet>(&cover.target)) {
        need = target->table();
    } else {
        const auto& subset = std::get<CrispSubset>(cover.target);
        for (const std::string& label : subset) {
            const std::size_t p = shape.universe.index_of(label);
            for (std::uint32_t i = 0; i < shape.dim; ++i)
                need[p * shape.dim + i] = shape.chain.denominator();
        }
    }
    return need;
}

// First cell where the family's maximum stays below the requirement.
std::optional<std::size_t> uncovered_cell(const SetFamily& family,
                                          const std::vector<std::uint32_t>& need) {
    for (std::size_t cell = 0; cell < need.size(); ++cell) {
        if (need[cell] == 0) continue;
        std::uint32_t best = 0;
        for (const MultiFuzzySet& a : family) best = std::max(best, a.table()[cell]);
        if (best < need[cell]) return cell;
    }
    return std::nullopt;
}

// Cells each member satisfies on its own (running maxima only improve
// through some member reaching the requirement), as bitmasks.  Only
// usable while the constrained cell count fits a word.
struct CoverMasks {
    std::vector<std::uint64_t> member; // per family member
    std::uint64_t full = 0;            // all constrained cells
};

std::optional<CoverMasks> make_masks(const SetFamily& family,
                                     const std::vector<std::uint32_t>& need) {
    std::vector<std::size_t> constrained;
    for (std::size_t cell = 0; cell < need.size(); ++cell)
        if (need[cell] > 0) constrained.push_back(cell);
    if (constrained.size() > 64) return std::nullopt;
    CoverMasks masks;
    masks.full = constrained.empty() ? 0 : (~std::uint64_t{0} >> (64 - constrained.size()));
    masks.member.reserve(family.size());
    for (const MultiFuzzySet& a : family) {
        std::uint64_t m = 0;
        for (std::size_t b = 0; b < constrained.size(); ++b)
            if (a.table()[constrained[b]] >= need[constrained[b]]) m |= std::uint64_t{1} << b;
        masks.member.push_back(m);
    }
    return masks;
}

// Exhaustive minimum set cover by increasing cardinality (n <= 12).
std::optional<std::vector<std::size_t>> exhaustive_min_cover(
    const std::vector<std::uint64_t>& member, std::uint64_t full) {
    const std::size_t n = member.size();
    std::vector<std::size_t> best;
    bool found = false;
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (subset & (std::uint64_t{1} << i)) acc |= member[i];
        if (acc != full) continue;
        std::vector<std::size_t> pick;
        for (std::size_t i = 0; i < n; ++i)
            if (subset & (std::uint64_t{1} << i)) pick.push_back(i);
        if (!found || pick.size() < best.size()) {
            best = std::move(pick);
            found = true;
        }
    }
    if (!found) return std::nullopt;
    return best;
}

// Greedy cover by coverage gain with a redundant-member pruning pass.
std::optional<std::vector<std::size_t>> greedy_cover(const std::vector<std::uint64_t>& member,
                                                     std::uint64_t full) {
    std::uint64_t acc = 0;
    std::vector<std::size_t> pick;
    while (acc != full) {
        std::size_t best = member.size();
        int best_gain = -1;
        for (std::size_t i = 0; i < member.size(); ++i) {
            const int gain = std::popcount(member[i] & ~acc);
            if (gain > best_gain) {
                best_gain = gain;
                best = i;
            }
        }
        if (best == member.size() || best_gain <= 0) return std::nullopt;
        acc |= member[best];
        pick.push_back(best);
    }
    for (std::size_t k = 0; k < pick.size();) {
        std::uint64_t without = 0;
        for (std::size_t j = 0; j < pick.size(); ++j)
            if (j != k) without |= member[pick[j]];
        if (without == full)
            pick.erase(pick.begin() + static_cast<std::ptrdiff_t>(k));
        else
            ++k;
    }
    std::sort(pick.begin(), pick.end());
    return pick;
}

} // namespace

bool is_cover(const Cover& cover) {
    return !uncovered_cell(cover.family, cover_requirement(cover)).has_value();
}

SubcoverResult find_finite_subcover(const Cover& cover, const MultiFuzzyTopology& topology) {
    for (const MultiFuzzySet& a : cover.family)
        if (!topology.contains(a))
            throw PreconditionError("cover family member is not open");

    const SpaceShape& shape = cover.family.front().shape();
    const std::vector<std::uint32_t> need = cover_requirement(cover);

    SubcoverResult result;
    if (auto cell = uncovered_cell(cover.family, need)) {
        const std::size_t point = *cell / shape.dim;
        const std::uint32_t coord = static_cast<std::uint32_t>(*cell % shape.dim);
        result.failure_reason = "family does not cover the target at point '" +
                                shape.universe.label(point) + "' coordinate " +
                                std::to_string(coord);
        result.witness = {shape.universe.label(point), coord};
        return result;
    }

    auto masks = make_masks(cover.family, need);
    std::optional<std::vector<std::size_t>> pick;
    bool exact = false;
    if (masks && cover.family.size() <= 12) {
        pick = exhaustive_min_cover(masks->member, masks->full);
        exact = true;
    } else if (masks) {
        pick = greedy_cover(masks->member, masks->full);
    } else {
        // Degenerate fallback for very large shapes: keep everything.
        pick.emplace(cover.family.size());
        std::iota(pick->begin(), pick->end(), std::size_t{0});
    }
    result.ok = true;
    result.exact = exact;
    for (std::size_t i : *pick) result.subcover.push_back(cover.family[i]);
    return result;
}

namespace {

struct CoverEnumeration {
    std::uint64_t covers = 0;
    std::uint64_t subcovers = 0;
    std::size_t largest_min = 0;
    bool all_have_subcover = true;
};

// DFS over index-increasing subsets of size <= cap, with a suffix-mask
// prune; runs `handle` on every covering subset.
template <typename Handler>
void enumerate_covers(const std::vector<std::uint64_t>& member, std::uint64_t full,
                      std::size_t cap, Handler&& handle) {
    const std::size_t n = member.size();
    std::vector<std::uint64_t> suffix(n + 1, 0);
    for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] | member[i];
    std::vector<std::size_t> chosen;
    auto rec = [&](auto&& self, std::size_t start, std::uint64_t acc) -> void {
        if (acc == full) handle(chosen);
        if (chosen.size() == cap) return;
        for (std::size_t i = start; i < n; ++i) {
            if ((acc | suffix[i]) != full) break; // nothing later can complete it
            chosen.push_back(i);
            self(self, i + 1, acc | member[i]);
            chosen.pop_back();
        }
    };
    rec(rec, 0, 0);
}

void account_cover(const std::vector<std::uint64_t>& member, std::uint64_t full,
                   const std::vector<std::size_t>& chosen, CoverEnumeration& stats) {
    ++stats.covers;
    std::vector<std::uint64_t> sub;
    sub.reserve(chosen.size());
    for (std::size_t i : chosen) sub.push_back(member[i]);
    auto pick = sub.size() <= 12 ? exhaustive_min_cover(sub, full) : greedy_cover(sub, full);
    if (pick) {
        ++stats.subcovers;
        stats.largest_min = std::max(stats.largest_min, pick->size());
    } else {
        stats.all_have_subcover = false;
    }
}

CompactnessReport check_compact_impl(const MultiFuzzyTopology& space,
                                     const CompactnessOptions& options,
                                     const ProductSpace* product) {
    CompactnessReport report;
    const SpaceShape& shape = space.shape();
    Cover everything = Cover::of_subset(shape.universe.labels(), space.opens());
    report.cover_exists = is_cover(everything);
    if (!report.cover_exists) {
        report.vacuously_compact = true;
        report.compact = true; // no open cover to refine
        report.exhaustive = true;
        return report;
    }

    const std::vector<std::uint32_t> need = cover_requirement(everything);
    auto masks = make_masks(space.opens(), need);
    if (!masks) throw ValueError("space too large for cover enumeration");

    CoverEnumeration stats;
    enumerate_covers(masks->member, masks->full, options.max_cover_size,
                     [&](const std::vector<std::size_t>& chosen) {
                         account_cover(masks->member, masks->full, chosen, stats);
                     });
    report.exhaustive = true;
    report.covers_enumerated = stats.covers;

    // Families larger than the cap are sampled.
    if (space.opens().size() > options.max_cover_size && options.sample_count > 0) {
        std::mt19937_64 rng(options.seed);
        std::uniform_int_distribution<std::size_t> size_dist(options.max_cover_size + 1,
                                                             space.opens().size());
        for (std::uint64_t s = 0; s < options.sample_count; ++s) {
            const std::size_t k = size_dist(rng);
            std::vector<std::size_t> idx(space.opens().size());
            std::iota(idx.begin(), idx.end(), std::size_t{0});
            std::shuffle(idx.begin(), idx.end(), rng);
            idx.resize(k);
            std::sort(idx.begin(), idx.end());
            std::uint64_t acc = 0;
            for (std::size_t i : idx) acc |= masks->member[i];
            if (acc != masks->full) continue;
            ++report.covers_sampled;
            account_cover(masks->member, masks->full, idx, stats);
        }
    }
    report.subcovers_found = stats.subcovers;
    report.largest_min_subcover = stats.largest_min;
    report.compact = stats.all_have_subcover;

    if (product) {
        report.product_pattern_checked = true;
        report.product_pattern_ok = true;
        auto basic_masks = make_masks(product->basis(), need);
        if (!basic_masks) throw ValueError("space too large for cover enumeration");
        enumerate_covers(
            basic_masks->member, basic_masks->full, options.max_cover_size,
            [&](const std::vector<std::size_t>& chosen) {
                ++report.basic_covers_checked;
                std::vector<std::uint64_t> sub;
                for (std::size_t i : chosen) sub.push_back(basic_masks->member[i]);
                auto pick = exhaustive_min_cover(sub, basic_masks->full);
                if (!pick) {
                    report.product_pattern_ok = false;
                    return;
                }
                // Factor families of the refined basic subcover must cover
                // the factors.
                SetFamily left, right;
                for (std::size_t i : *pick) {
                    const auto [a, b] = product->basis_factors()[chosen[i]];
                    left.push_back(product->factor1().opens()[a]);
                    right.push_back(product->factor2().opens()[b]);
                }
                const bool ok_left = is_cover(Cover::of_subset(
                    product->factor1().shape().universe.labels(), std::move(left)));
                const bool ok_right = is_cover(Cover::of_subset(
                    product->factor2().shape().universe.labels(), std::move(right)));
                if (!ok_left || !ok_right) report.product_pattern_ok = false;
            });
    }
    return report;
}

} // namespace

CompactnessReport check_compact(const MultiFuzzyTopology& space,
                                const CompactnessOptions& options) {
    return check_compact_impl(space, options, nullptr);
}

CompactnessReport check_compact(const ProductSpace& product, const CompactnessOptions& options) {
    return check_compact_impl(product.topology(), options, &product);
}

} // namespace mftop
