/* set.cpp -- lattice algebra over grade tables, on top of the kernels. */
#include "mftop/set.hpp"

#include <algorithm>

#include "mftop/kernels.hpp"

namespace mftop {

SpaceShape make_shape(Universe universe, std::uint32_t dim, std::uint32_t denominator) {
    if (dim == 0) throw ValueError("dimension must be positive");
    return SpaceShape{std::move(universe), dim, GradeChain(denominator)};
}

MultiFuzzySet::MultiFuzzySet(SpaceShape shape, std::vector<std::uint32_t> table)
    : shape_(std::move(shape)), table_(std::move(table)) {
    if (table_.size() != shape_.cells())
        throw ShapeError("grade table size does not match universe x dimension");
    for (std::uint32_t g : table_)
        if (!shape_.chain.contains(g))
            throw ValueError("grade numerator exceeds chain denominator");
}

bool canonical_less(const MultiFuzzySet& a, const MultiFuzzySet& b) {
    return a.table() < b.table();
}

SetFamily canonical_family(SetFamily family) {
    std::sort(family.begin(), family.end(), canonical_less);
    family.erase(std::unique(family.begin(), family.end()), family.end());
    return family;
}

bool family_contains(const SetFamily& family, const MultiFuzzySet& set) {
    auto it = std::lower_bound(family.begin(), family.end(), set, canonical_less);
    return it != family.end() && *it == set;
}

bool family_insert(SetFamily& family, const MultiFuzzySet& set) {
    auto it = std::lower_bound(family.begin(), family.end(), set, canonical_less);
    if (it != family.end() && *it == set) return false;
    family.insert(it, set);
    return true;
}

MultiFuzzySet null_set(const SpaceShape& shape) {
    return MultiFuzzySet(shape, std::vector<std::uint32_t>(shape.cells(), 0));
}

MultiFuzzySet absolute_set(const SpaceShape& shape) {
    return MultiFuzzySet(shape,
                         std::vector<std::uint32_t>(shape.cells(), shape.chain.denominator()));
}

MultiFuzzySet constant(const SpaceShape& shape, std::span<const std::uint32_t> tuple) {
    if (tuple.size() != shape.dim)
        throw ShapeError("constant tuple length does not match dimension");
    std::vector<std::uint32_t> table;
    table.reserve(shape.cells());
    for (std::size_t p = 0; p < shape.universe.size(); ++p)
        table.insert(table.end(), tuple.begin(), tuple.end());
    return MultiFuzzySet(shape, std::move(table));
}

bool is_constant(const MultiFuzzySet& set) {
    const auto first = set.tuple_at(0);
    for (std::size_t p = 1; p < set.shape().universe.size(); ++p) {
        const auto tuple = set.tuple_at(p);
        if (!std::equal(first.begin(), first.end(), tuple.begin())) return false;
    }
    return true;
}

bool is_nonnull_constant(const MultiFuzzySet& set) {
    return is_constant(set) && positivity_at(set, std::size_t{0}) == Positivity::AllPositive;
}

SetFamily all_nonnull_constants(const SpaceShape& shape) {
    const std::uint32_t den = shape.chain.denominator();
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < shape.dim; ++i) {
        if (count > (std::uint64_t{1} << 22) / den)
            throw ValueError("too many constants to enumerate over this grade chain");
        count *= den;
    }
    SetFamily out;
    std::vector<std::uint32_t> tuple(shape.dim, 1);
    while (true) {
        out.push_back(constant(shape, tuple));
        std::size_t i = 0;
        while (i < tuple.size() && tuple[i] == den) tuple[i++] = 1;
        if (i == tuple.size()) break;
        ++tuple[i];
    }
    return canonical_family(std::move(out));
}

namespace {
void require_same_shape(const MultiFuzzySet& a, const MultiFuzzySet& b) {
    if (a.shape() != b.shape())
        throw ShapeError("operands live in different spaces");
}
} // namespace

MultiFuzzySet meet(const MultiFuzzySet& a, const MultiFuzzySet& b) {
    require_same_shape(a, b);
    std::vector<std::uint32_t> out(a.table().size());
    kernels::active_ops().min_into(a.table().data(), b.table().data(), out.data(), out.size());
    return MultiFuzzySet(a.shape(), std::move(out));
}

MultiFuzzySet join(const MultiFuzzySet& a, const MultiFuzzySet& b) {
    require_same_shape(a, b);
    std::vector<std::uint32_t> out(a.table().size());
    kernels::active_ops().max_into(a.table().data(), b.table().data(), out.data(), out.size());
    return MultiFuzzySet(a.shape(), std::move(out));
}

MultiFuzzySet join(std::span<const MultiFuzzySet> family) {
    if (family.empty())
        throw PreconditionError("join of an empty family is rejected; pass the null set explicitly");
    std::vector<std::uint32_t> out = family.front().table();
    for (std::size_t k = 1; k < family.size(); ++k) {
        require_same_shape(family.front(), family[k]);
        kernels::active_ops().max_into(out.data(), family[k].table().data(), out.data(),
                                       out.size());
    }
    return MultiFuzzySet(family.front().shape(), std::move(out));
}

MultiFuzzySet complement(const MultiFuzzySet& a) {
    std::vector<std::uint32_t> out(a.table().size());
    kernels::active_ops().complement_into(a.table().data(), a.shape().chain.denominator(),
                                          out.data(), out.size());
    return MultiFuzzySet(a.shape(), std::move(out));
}

bool leq(const MultiFuzzySet& a, const MultiFuzzySet& b) {
    require_same_shape(a, b);
    return kernels::active_ops().all_leq(a.table().data(), b.table().data(), a.table().size());
}

Positivity positivity_at(const MultiFuzzySet& set, std::size_t point_index) {
    if (point_index >= set.shape().universe.size())
        throw PointError("point index out of range");
    auto tuple = set.tuple_at(point_index);
    bool any_zero = false;
    bool any_pos = false;
    for (std::uint32_t g : tuple) (g == 0 ? any_zero : any_pos) = true;
    if (!any_zero) return Positivity::AllPositive;
    if (!any_pos) return Positivity::AllZero;
    return Positivity::Mixed;
}

Positivity positivity_at(const MultiFuzzySet& set, std::string_view label) {
    return positivity_at(set, set.shape().universe.index_of(label));
}

bool in_restricted_class(const MultiFuzzySet& set) {
    for (std::size_t p = 0; p < set.shape().universe.size(); ++p)
        if (positivity_at(set, p) == Positivity::Mixed) return false;
    return true;
}

MultiFuzzySet image(const PointMap& f, const MultiFuzzySet& a) {
    if (f.domain() != a.shape().universe)
        throw ShapeError("image: set does not live over the map's domain");
    SpaceShape out_shape{f.codomain(), a.shape().dim, a.shape().chain};
    std::vector<std::uint32_t> out(out_shape.cells(), 0); // empty fiber -> zero tuple
    const std::uint32_t dim = a.shape().dim;
    for (std::size_t x = 0; x < f.domain().size(); ++x) {
        const std::size_t y = f.apply(x);
        kernels::active_ops().max_into(out.data() + y * dim, a.table().data() + x * dim,
                                       out.data() + y * dim, dim);
    }
    return MultiFuzzySet(std::move(out_shape), std::move(out));
}

MultiFuzzySet preimage(const PointMap& f, const MultiFuzzySet& b) {
    if (f.codomain() != b.shape().universe)
        throw ShapeError("preimage: set does not live over the map's codomain");
    SpaceShape out_shape{f.domain(), b.shape().dim, b.shape().chain};
    std::vector<std::uint32_t> out;
    out.reserve(out_shape.cells());
    for (std::size_t x = 0; x < f.domain().size(); ++x) {
        auto tuple = b.tuple_at(f.apply(x));
        out.insert(out.end(), tuple.begin(), tuple.end());
    }
    return MultiFuzzySet(std::move(out_shape), std::move(out));
}

namespace {
MultiFuzzySet product_impl(const MultiFuzzySet& f, const MultiFuzzySet& g,
                           const PairUniverse& pairs, bool mixed) {
    if (f.shape().chain != g.shape().chain)
        throw ShapeError("product: factors use different grade chains");
    if (mixed) {
        if (f.shape().dim != 1)
            throw ShapeError("product_mixed: first factor must be 1-dimensional");
    } else if (f.shape().dim != g.shape().dim) {
        throw ShapeError("product: factors have different dimensions");
    }
    const std::uint32_t dim = g.shape().dim;
    SpaceShape out_shape{pairs.combined, dim, g.shape().chain};
    std::vector<std::uint32_t> out(out_shape.cells());
    for (std::size_t k = 0; k < pairs.factors.size(); ++k) {
        const auto [i, j] = pairs.factors[k];
        for (std::uint32_t c = 0; c < dim; ++c)
            out[k * dim + c] = std::min(f.grade(i, mixed ? 0 : c), g.grade(j, c));
    }
    return MultiFuzzySet(std::move(out_shape), std::move(out));
}
} // namespace

MultiFuzzySet product_set(const MultiFuzzySet& f, const MultiFuzzySet& g,
                          const PairUniverse& pairs) {
    return product_impl(f, g, pairs, /*mixed=*/false);
}

MultiFuzzySet product_set(const MultiFuzzySet& f, const MultiFuzzySet& g) {
    return product_set(f, g, make_pair_universe(f.shape().universe, g.shape().universe));
}

MultiFuzzySet product_mixed(const MultiFuzzySet& f, const MultiFuzzySet& g,
                            const PairUniverse& pairs) {
    return product_impl(f, g, pairs, /*mixed=*/true);
}

MultiFuzzySet product_mixed(const MultiFuzzySet& f, const MultiFuzzySet& g) {
    return product_mixed(f, g, make_pair_universe(f.shape().universe, g.shape().universe));
}

} // namespace mftop
