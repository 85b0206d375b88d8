#include "forge/reference.hpp"

#include "forge/kummer.hpp"

namespace forge {

namespace {

// Embedded reference data; no network fetches, ever.
constexpr RefBound kTable[] = {
    // p = 2
    {8, 25, 86, 97, "table-p2", false},
    {8, 51, 132, 173, "table-p2", true},
    {16, 12, 83, 97, "table-p2", false},
    {16, 20, 127, 140, "table-p2", false},
    {16, 40, 225, 244, "table-p2", false},
    {16, 49, 213, 286, "table-p2", true},
    {32, 45, 313, 428, "table-p2", false},
    {32, 60, 468, 542, "table-p2", true},
    {32, 135, 933, 1098, "table-p2", true},
    {64, 214, 1901, 2553, "table-p2", true},
    {64, 428, 3969, 4786, "table-p2", true},
    // p = 3
    {9, 13, 64, 66, "table-p3", false},
    {9, 33, 128, 133, "table-p3", false},
    {9, 41, 128, 158, "table-p3", false},
    {27, 24, 208, 235, "table-p3", false},
    {27, 49, 314, 409, "table-p3", true},
    {27, 98, 624, 745, "table-p3", true},
    {27, 124, 680, 901, "table-p3", true},
    {81, 17, 288, 387, "table-p3", true},
    {81, 625, 6400, 7824, "table-p3", true},
    {243, 3854, 58080, 81835, "table-p3", true},
    {243, 4096, 58568, 86441, "table-p3", true},
    // quoted in the running text only
    {9, 9, 48, 51, "text", false},
};

}  // namespace

std::span<const RefBound> reference_table() { return kTable; }

std::optional<RefBound> reference_lookup(uint64_t q, uint64_t genus) {
    for (const auto& row : kTable)
        if (row.q == q && row.genus == genus) return row;
    return std::nullopt;
}

uint64_t qualification_threshold(uint64_t upper) {
    // floor(u / sqrt(2)) = isqrt(floor(u^2 / 2))
    return isqrt64(upper * upper / 2);
}

}  // namespace forge
