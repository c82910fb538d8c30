/* set.hpp -- multi-fuzzy sets over a finite universe and the lattice
 * algebra on them: meet, join, complement, order, image/preimage under
 * point maps, and binary set products.
 */
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mftop/grades.hpp"
#include "mftop/universe.hpp"

namespace mftop {

/// Universe + dimension + grade chain: the "shape" every value in one
/// space shares.  Operations on mismatched shapes throw ShapeError.
struct SpaceShape {
    Universe universe;
    std::uint32_t dim;
    GradeChain chain;

    std::size_t cells() const { return universe.size() * dim; }
    bool operator==(const SpaceShape& other) const {
        return universe == other.universe && dim == other.dim && chain == other.chain;
    }
    bool operator!=(const SpaceShape& other) const { return !(*this == other); }
};

SpaceShape make_shape(Universe universe, std::uint32_t dim, std::uint32_t denominator);

/// Point classification used by the restricted class and by neighbourhood
/// machinery: the grade tuple at a point is strictly positive in every
/// coordinate, zero in every coordinate, or mixed.
enum class Positivity { AllPositive, AllZero, Mixed };

/// A multi-fuzzy set: one grade tuple per universe point, stored as a flat
/// point-major numerator table.  Immutable after construction.
class MultiFuzzySet {
public:
    MultiFuzzySet(SpaceShape shape, std::vector<std::uint32_t> table);

    const SpaceShape& shape() const { return shape_; }
    const std::vector<std::uint32_t>& table() const { return table_; }

    std::span<const std::uint32_t> tuple_at(std::size_t point_index) const {
        return {table_.data() + point_index * shape_.dim, shape_.dim};
    }
    std::uint32_t grade(std::size_t point_index, std::size_t coord) const {
        return table_[point_index * shape_.dim + coord];
    }

    bool operator==(const MultiFuzzySet& other) const {
        return shape_ == other.shape_ && table_ == other.table_;
    }
    bool operator!=(const MultiFuzzySet& other) const { return !(*this == other); }

private:
    SpaceShape shape_;
    std::vector<std::uint32_t> table_;
};

/// Canonical order on same-shape sets: lexicographic on the numerator
/// table.  Families are kept sorted and deduplicated under this order.
bool canonical_less(const MultiFuzzySet& a, const MultiFuzzySet& b);

using SetFamily = std::vector<MultiFuzzySet>;

SetFamily canonical_family(SetFamily family);
bool family_contains(const SetFamily& family, const MultiFuzzySet& set);
/// Insert preserving canonical order; returns false if already present.
bool family_insert(SetFamily& family, const MultiFuzzySet& set);

// -- constructors -----------------------------------------------------------

/// The null set (every grade zero).
MultiFuzzySet null_set(const SpaceShape& shape);
/// The absolute set (every grade one).
MultiFuzzySet absolute_set(const SpaceShape& shape);
/// The constant set carrying `tuple` at every point.
MultiFuzzySet constant(const SpaceShape& shape, std::span<const std::uint32_t> tuple);
/// True iff every point carries the same tuple.
bool is_constant(const MultiFuzzySet& set);
/// True iff constant with every coordinate strictly positive.
bool is_nonnull_constant(const MultiFuzzySet& set);
/// All non-null constants of the shape (each coordinate in 1..D), in
/// canonical order.  D^n members.
SetFamily all_nonnull_constants(const SpaceShape& shape);

// -- lattice algebra --------------------------------------------------------

MultiFuzzySet meet(const MultiFuzzySet& a, const MultiFuzzySet& b);
/// Join of a nonempty family; an empty family is rejected (callers pass
/// the null set explicitly when they mean it).
MultiFuzzySet join(std::span<const MultiFuzzySet> family);
MultiFuzzySet join(const MultiFuzzySet& a, const MultiFuzzySet& b);
MultiFuzzySet complement(const MultiFuzzySet& a);
bool leq(const MultiFuzzySet& a, const MultiFuzzySet& b);

Positivity positivity_at(const MultiFuzzySet& set, std::size_t point_index);
Positivity positivity_at(const MultiFuzzySet& set, std::string_view label);
/// Membership in the restricted class: every point all-positive or all-zero.
bool in_restricted_class(const MultiFuzzySet& set);

// -- maps -------------------------------------------------------------------

/// Zadeh image: at y, coordinatewise supremum over the fiber f^-1(y);
/// empty fibers give the zero tuple.
MultiFuzzySet image(const PointMap& f, const MultiFuzzySet& a);
/// Preimage: the grade tuple of b at f(x).
MultiFuzzySet preimage(const PointMap& f, const MultiFuzzySet& b);

// -- products ---------------------------------------------------------------

/// Coordinatewise min across a point pair; both factors share dim & chain.
MultiFuzzySet product_set(const MultiFuzzySet& f, const MultiFuzzySet& g,
                          const PairUniverse& pairs);
MultiFuzzySet product_set(const MultiFuzzySet& f, const MultiFuzzySet& g);
/// Product of a 1-dimensional set with an n-dimensional one: coordinate i
/// at (x,y) is min(f(x), g_i(y)).
MultiFuzzySet product_mixed(const MultiFuzzySet& f, const MultiFuzzySet& g,
                            const PairUniverse& pairs);
MultiFuzzySet product_mixed(const MultiFuzzySet& f, const MultiFuzzySet& g);

} // namespace mftop
