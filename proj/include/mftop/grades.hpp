/* grades.hpp -- the finite grade chain {0, 1/D, ..., 1}. */
#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "mftop/errors.hpp"

namespace mftop {

/// The value chain all membership grades live in.  A grade is stored as
/// its numerator k with the denominator D shared through the chain, so
/// every lattice operation is exact integer arithmetic.
class GradeChain {
public:
    explicit GradeChain(std::uint32_t denominator);

    std::uint32_t denominator() const { return den_; }
    /// Number of chain values, D + 1.
    std::uint32_t size() const { return den_ + 1; }

    bool contains(std::uint32_t numerator) const { return numerator <= den_; }
    std::uint32_t complement(std::uint32_t numerator) const { return den_ - numerator; }

    /// Canonical form "k/D", never a decimal.
    std::string format(std::uint32_t numerator) const;

    /// Parses a canonical "k/D" string; rejects anything not exactly on
    /// this chain (wrong denominator, overflow, stray characters).
    std::uint32_t parse(std::string_view text) const;

    bool operator==(const GradeChain& other) const { return den_ == other.den_; }

private:
    std::uint32_t den_;
};

} // namespace mftop
