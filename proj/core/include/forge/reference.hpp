#pragma once

#include <cstdint>
#include <optional>
#include <span>

namespace forge {

/// Best-known interval for (q, genus) from the embedded reference data:
/// lower is the best point count on record, upper the interval end or the
/// Oesterle bound. new_only marks rows that had no previous entry.
struct RefBound {
    uint64_t q;
    uint64_t genus;
    uint64_t lower;
    uint64_t upper;
    const char* source;  // "table-p2" | "table-p3" | "text"
    bool new_only;
};

std::span<const RefBound> reference_table();

std::optional<RefBound> reference_lookup(uint64_t q, uint64_t genus);

/// floor(upper / sqrt(2)), the qualification threshold for a curve to
/// merit an entry; integer square-root arithmetic only.
uint64_t qualification_threshold(uint64_t upper);

}  // namespace forge
