/* enumerate.cpp */
#include "mftop/enumerate.hpp"

#include <algorithm>

namespace mftop {

std::uint64_t grid_set_count(const SpaceShape& shape) {
    const std::uint64_t base = shape.chain.denominator() + 1;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < shape.cells(); ++i) {
        if (count > kMaxGridEnumeration / base)
            throw ValueError("grid enumeration over this shape is too large");
        count *= base;
    }
    return count;
}

SetFamily all_grid_sets(const SpaceShape& shape) {
    grid_set_count(shape); // cap check
    SetFamily out;
    std::vector<std::uint32_t> table(shape.cells(), 0);
    const std::uint32_t den = shape.chain.denominator();
    while (true) {
        out.emplace_back(shape, table);
        std::size_t i = 0;
        while (i < table.size() && table[i] == den) table[i++] = 0;
        if (i == table.size()) break;
        ++table[i];
    }
    return canonical_family(std::move(out));
}

SetFamily all_restricted_grid_sets(const SpaceShape& shape) {
    // Direct enumeration over per-point tuples: each point carries either
    // the zero tuple or an all-positive tuple, so the count stays at
    // (D^n + 1)^|X| instead of (D+1)^(n|X|).
    const std::uint32_t den = shape.chain.denominator();
    std::vector<std::vector<std::uint32_t>> tuples;
    tuples.emplace_back(shape.dim, 0);
    std::vector<std::uint32_t> tup(shape.dim, 1);
    while (true) {
        tuples.push_back(tup);
        std::size_t i = 0;
        while (i < tup.size() && tup[i] == den) tup[i++] = 1;
        if (i == tup.size()) break;
        ++tup[i];
    }

    std::uint64_t count = 1;
    for (std::size_t p = 0; p < shape.universe.size(); ++p) {
        if (count > kMaxGridEnumeration / tuples.size())
            throw ValueError("grid enumeration over this shape is too large");
        count *= tuples.size();
    }

    SetFamily out;
    std::vector<std::size_t> pick(shape.universe.size(), 0);
    while (true) {
        std::vector<std::uint32_t> table;
        table.reserve(shape.cells());
        for (std::size_t p = 0; p < pick.size(); ++p)
            table.insert(table.end(), tuples[pick[p]].begin(), tuples[pick[p]].end());
        out.emplace_back(shape, std::move(table));
        std::size_t p = 0;
        while (p < pick.size() && pick[p] == tuples.size() - 1) pick[p++] = 0;
        if (p == pick.size()) break;
        ++pick[p];
    }
    return canonical_family(std::move(out));
}

Universe synthetic_universe(std::size_t points) {
    std::vector<std::string> labels;
    labels.reserve(points);
    for (std::size_t i = 0; i < points; ++i) labels.push_back("p" + std::to_string(i));
    return Universe(std::move(labels));
}

MultiFuzzySet random_grid_set(Rng& rng, const SpaceShape& shape) {
    std::uniform_int_distribution<std::uint32_t> dist(0, shape.chain.denominator());
    std::vector<std::uint32_t> table(shape.cells());
    for (std::uint32_t& g : table) g = dist(rng);
    return MultiFuzzySet(shape, std::move(table));
}

MultiFuzzySet random_restricted_set(Rng& rng, const SpaceShape& shape) {
    std::uniform_int_distribution<std::uint32_t> grade(1, shape.chain.denominator());
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<std::uint32_t> table;
    table.reserve(shape.cells());
    for (std::size_t p = 0; p < shape.universe.size(); ++p) {
        const bool zero = coin(rng) == 0;
        for (std::uint32_t i = 0; i < shape.dim; ++i)
            table.push_back(zero ? 0 : grade(rng));
    }
    return MultiFuzzySet(shape, std::move(table));
}

MultiFuzzyTopology random_topology(Rng& rng, const SpaceShape& shape, std::size_t max_seeds,
                                   const GenerateOptions& options) {
    std::uniform_int_distribution<std::size_t> count(0, max_seeds);
    SetFamily seeds;
    const std::size_t n = count(rng);
    for (std::size_t i = 0; i < n; ++i) seeds.push_back(random_restricted_set(rng, shape));
    return generate(shape, seeds, options);
}

PointMap random_point_map(Rng& rng, const Universe& domain, const Universe& codomain) {
    std::uniform_int_distribution<std::size_t> target(0, codomain.size() - 1);
    std::vector<std::size_t> assignment(domain.size());
    for (std::size_t& a : assignment) a = target(rng);
    return PointMap(domain, codomain, std::move(assignment));
}

std::vector<MultiFuzzyTopology> all_generated_topologies(const SpaceShape& shape,
                                                         std::uint64_t max_subsets,
                                                         const GenerateOptions& options) {
    const SetFamily grid = all_restricted_grid_sets(shape);
    if (grid.size() >= 63 || (std::uint64_t{1} << grid.size()) > max_subsets)
        throw ValueError("too many seed subsets to enumerate");
    std::vector<MultiFuzzyTopology> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << grid.size()); ++mask) {
        SetFamily seeds;
        for (std::size_t i = 0; i < grid.size(); ++i)
            if (mask & (std::uint64_t{1} << i)) seeds.push_back(grid[i]);
        MultiFuzzyTopology t = generate(shape, seeds, options);
        if (std::none_of(out.begin(), out.end(),
                         [&t](const MultiFuzzyTopology& u) { return u.opens() == t.opens(); }))
            out.push_back(std::move(t));
    }
    return out;
}

} // namespace mftop
