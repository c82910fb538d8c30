/* universe.hpp -- finite point universes and total point maps. */
#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mftop/errors.hpp"

namespace mftop {

/// A nonempty finite set of distinct point labels in canonical
/// (lexicographic) order.  Cheap to copy; the label list is shared.
class Universe {
public:
    explicit Universe(std::vector<std::string> labels);

    std::size_t size() const { return labels_->size(); }
    const std::string& label(std::size_t index) const { return (*labels_)[index]; }
    const std::vector<std::string>& labels() const { return *labels_; }

    std::optional<std::size_t> find(std::string_view label) const;
    /// Index of a label that must exist; throws PointError otherwise.
    std::size_t index_of(std::string_view label) const;

    bool operator==(const Universe& other) const;
    bool operator!=(const Universe& other) const { return !(*this == other); }

private:
    std::shared_ptr<const std::vector<std::string>> labels_;
};

/// A total function between universes, stored index-to-index.
class PointMap {
public:
    /// Assignment given as domain-index -> codomain-index.
    PointMap(Universe domain, Universe codomain, std::vector<std::size_t> assignment);
    /// Assignment given by labels; every domain label must be mapped.
    PointMap(Universe domain, Universe codomain,
             const std::vector<std::pair<std::string, std::string>>& assignment);

    const Universe& domain() const { return domain_; }
    const Universe& codomain() const { return codomain_; }

    std::size_t apply(std::size_t domain_index) const { return assignment_[domain_index]; }
    const std::string& apply_label(std::string_view label) const;
    const std::vector<std::size_t>& assignment() const { return assignment_; }

    bool is_injective() const;
    bool is_surjective() const;
    bool is_bijective() const { return is_injective() && is_surjective(); }

    static PointMap identity(const Universe& u);
    static PointMap constant(const Universe& domain, const Universe& codomain,
                             std::string_view target_label);
    /// Requires bijectivity.
    PointMap inverse() const;
    /// (g.compose_after(f))(x) = g(f(x)); f's codomain must equal g's domain.
    PointMap compose_after(const PointMap& f) const;

    bool operator==(const PointMap& other) const;

private:
    Universe domain_;
    Universe codomain_;
    std::vector<std::size_t> assignment_;
};

/// Canonical label for a pair of factor points, with escaping so distinct
/// pairs never collide: "(left,right)".
std::string pair_label(std::string_view left, std::string_view right);

/// The universe of ordered pairs together with index bookkeeping.
struct PairUniverse {
    Universe combined;
    /// combined index -> (factor-1 index, factor-2 index)
    std::vector<std::pair<std::size_t, std::size_t>> factors;
    /// row-major (i * |second| + j) -> combined index
    std::vector<std::size_t> flat_to_combined;
    std::size_t second_size = 0;

    std::size_t pair_index(std::size_t i, std::size_t j) const {
        return flat_to_combined[i * second_size + j];
    }
};

PairUniverse make_pair_universe(const Universe& first, const Universe& second);

} // namespace mftop
