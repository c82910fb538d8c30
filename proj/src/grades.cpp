/* grades.cpp */
#include "mftop/grades.hpp"

#include <charconv>

namespace mftop {

GradeChain::GradeChain(std::uint32_t denominator) : den_(denominator) {
    if (denominator == 0)
        throw ValueError("grade chain denominator must be positive");
}

std::string GradeChain::format(std::uint32_t numerator) const {
    if (!contains(numerator))
        throw ValueError("grade numerator " + std::to_string(numerator) +
                         " exceeds denominator " + std::to_string(den_));
    return std::to_string(numerator) + "/" + std::to_string(den_);
}

namespace {
bool parse_u32(std::string_view text, std::uint32_t& out) {
    if (text.empty()) return false;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}
} // namespace

std::uint32_t GradeChain::parse(std::string_view text) const {
    const auto slash = text.find('/');
    std::uint32_t num = 0;
    std::uint32_t den = 0;
    if (slash == std::string_view::npos || !parse_u32(text.substr(0, slash), num) ||
        !parse_u32(text.substr(slash + 1), den))
        throw ValueError("grade '" + std::string(text) + "' is not of the form k/D");
    if (den != den_ || num > den_)
        throw ValueError("grade '" + std::string(text) + "' not on chain with D=" +
                         std::to_string(den_));
    return num;
}

} // namespace mftop
