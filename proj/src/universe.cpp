/* universe.cpp */
#include "mftop/universe.hpp"

#include <algorithm>
#include <numeric>

namespace mftop {

Universe::Universe(std::vector<std::string> labels) {
    if (labels.empty()) throw ValueError("universe must be nonempty");
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
        throw ValueError("universe labels must be distinct");
    labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

std::optional<std::size_t> Universe::find(std::string_view label) const {
    const auto& ls = *labels_;
    auto it = std::lower_bound(ls.begin(), ls.end(), label);
    if (it == ls.end() || *it != label) return std::nullopt;
    return static_cast<std::size_t>(it - ls.begin());
}

std::size_t Universe::index_of(std::string_view label) const {
    if (auto idx = find(label)) return *idx;
    throw PointError("point '" + std::string(label) + "' is not in the universe");
}

bool Universe::operator==(const Universe& other) const {
    return labels_ == other.labels_ || *labels_ == *other.labels_;
}

PointMap::PointMap(Universe domain, Universe codomain, std::vector<std::size_t> assignment)
    : domain_(std::move(domain)), codomain_(std::move(codomain)),
      assignment_(std::move(assignment)) {
    if (assignment_.size() != domain_.size())
        throw ShapeError("point map must assign every domain point");
    for (std::size_t target : assignment_)
        if (target >= codomain_.size())
            throw PointError("point map target index out of range");
}

PointMap::PointMap(Universe domain, Universe codomain,
                   const std::vector<std::pair<std::string, std::string>>& assignment)
    : domain_(std::move(domain)), codomain_(std::move(codomain)),
      assignment_(domain_.size(), codomain_.size()) {
    for (const auto& [from, to] : assignment)
        assignment_[domain_.index_of(from)] = codomain_.index_of(to);
    for (std::size_t target : assignment_)
        if (target == codomain_.size())
            throw ShapeError("point map must assign every domain point");
}

const std::string& PointMap::apply_label(std::string_view label) const {
    return codomain_.label(assignment_[domain_.index_of(label)]);
}

bool PointMap::is_injective() const {
    std::vector<bool> hit(codomain_.size(), false);
    for (std::size_t target : assignment_) {
        if (hit[target]) return false;
        hit[target] = true;
    }
    return true;
}

bool PointMap::is_surjective() const {
    std::vector<bool> hit(codomain_.size(), false);
    for (std::size_t target : assignment_) hit[target] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

PointMap PointMap::identity(const Universe& u) {
    std::vector<std::size_t> assignment(u.size());
    std::iota(assignment.begin(), assignment.end(), std::size_t{0});
    return PointMap(u, u, std::move(assignment));
}

PointMap PointMap::constant(const Universe& domain, const Universe& codomain,
                            std::string_view target_label) {
    return PointMap(domain, codomain,
                    std::vector<std::size_t>(domain.size(), codomain.index_of(target_label)));
}

PointMap PointMap::inverse() const {
    if (!is_bijective())
        throw PreconditionError("inverse requires a bijective point map");
    std::vector<std::size_t> inv(codomain_.size());
    for (std::size_t x = 0; x < assignment_.size(); ++x) inv[assignment_[x]] = x;
    return PointMap(codomain_, domain_, std::move(inv));
}

PointMap PointMap::compose_after(const PointMap& f) const {
    if (f.codomain_ != domain_)
        throw ShapeError("composition requires matching universes");
    std::vector<std::size_t> composed(f.domain_.size());
    for (std::size_t x = 0; x < composed.size(); ++x)
        composed[x] = assignment_[f.assignment_[x]];
    return PointMap(f.domain_, codomain_, std::move(composed));
}

bool PointMap::operator==(const PointMap& other) const {
    return domain_ == other.domain_ && codomain_ == other.codomain_ &&
           assignment_ == other.assignment_;
}

std::string pair_label(std::string_view left, std::string_view right) {
    std::string out;
    out.reserve(left.size() + right.size() + 3);
    out.push_back('(');
    auto escape = [&out](std::string_view s) {
        for (char c : s) {
            if (c == '\\' || c == ',' || c == '(' || c == ')') out.push_back('\\');
            out.push_back(c);
        }
    };
    escape(left);
    out.push_back(',');
    escape(right);
    out.push_back(')');
    return out;
}

PairUniverse make_pair_universe(const Universe& first, const Universe& second) {
    std::vector<std::string> labels;
    labels.reserve(first.size() * second.size());
    for (std::size_t i = 0; i < first.size(); ++i)
        for (std::size_t j = 0; j < second.size(); ++j)
            labels.push_back(pair_label(first.label(i), second.label(j)));
    Universe combined(labels); // sorts canonically
    std::vector<std::pair<std::size_t, std::size_t>> factors(combined.size());
    std::vector<std::size_t> flat_to_combined(labels.size());
    std::size_t flat = 0;
    for (std::size_t i = 0; i < first.size(); ++i)
        for (std::size_t j = 0; j < second.size(); ++j) {
            const std::size_t k = combined.index_of(labels[flat]);
            factors[k] = {i, j};
            flat_to_combined[flat] = k;
            ++flat;
        }
    return PairUniverse{std::move(combined), std::move(factors),
                        std::move(flat_to_combined), second.size()};
}

} // namespace mftop
