// The six worked examples, each tagged with the Fano fourfold it comes from
// and its FP-equivalence class a) to d).
#pragma once

#include "semifree/types.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace semifree {

struct CatalogEntry {
    std::string name;
    std::string fano;        // P4, Q4, W5 or X8m
    std::int64_t c1_fourth;  // of that Fano
    char fp_case;            // 'a'..'d'
    FixedPointData data;
};

/// Kuznetsov's two planes need only c2_min + c2_max = 8; the catalog uses (4,4).
FixedPointData kuznetsov_data(std::int64_t c2_min = 4, std::int64_t c2_max = 4);

const std::vector<CatalogEntry>& catalog();
std::vector<std::string> catalog_names();
const CatalogEntry* find_catalog(const std::string& name);

struct FpMatch {
    std::optional<char> fp_case;  // empty: unclassified
    std::string entry;            // matched catalog entry
    bool reversed = false;        // matched after reversing the action
};

/// Compares against every catalog entry in both orientations. The X8m case
/// accepts any split of the plane c2 values summing to 8.
FpMatch match_fp_class(const FixedPointData& data);
std::string fp_case_name(const FpMatch& m);

}  // namespace semifree
