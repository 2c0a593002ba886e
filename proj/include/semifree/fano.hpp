// Filter of the index > 1 prime Fano fourfolds with positive definite
// intersection form down to those that can carry a semi-free action.
#pragma once

#include "semifree/classifier.hpp"
#include "semifree/rational.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace semifree {

namespace anchor {
inline constexpr const char* kIndexAboveOne = "a semi-free action forces index > 1";
inline constexpr const char* kFiniteAutomorphisms = "finite automorphism group admits no circle action";
inline constexpr const char* kDegreeGenus = "degree-genus relation c1^4 = 32(g - 1)";
inline constexpr const char* kFanoVolume = "c1^4 must equal the volume of admissible data";
}  // namespace anchor

struct FanoFamilyRecord {
    std::string name;
    int iota = 0;
    int b4 = 0;
    std::int64_t c1_fourth = 0;
    std::optional<int> genus;
    bool finite_automorphisms = false;

    friend bool operator==(const FanoFamilyRecord&, const FanoFamilyRecord&) = default;
};

/// The eight families, in the order P4, Q4, Q1capQ2, W5, X7m, X8m, X9m, V18.
std::vector<FanoFamilyRecord> default_fano_table();
/// Names every input table must cover.
std::vector<std::string> required_fano_names();

class FanoTableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One (iota, b4, volume) triple realized by enumerated data.
struct RealizedInvariant {
    int iota = 0;
    int b4 = 0;
    Rational volume;
    DimPair shape;
    std::string family;
};

/// Invariants of every member of every family, all admissible shapes,
/// b4_max = 30. Computed once.
const std::vector<RealizedInvariant>& realized_invariants();

struct FanoVerdict {
    FanoFamilyRecord record;
    bool survives = false;
    std::string anchor;  // of the rejecting rule, empty for survivors
    std::vector<std::string> trace;
};

struct FanoClassification {
    std::vector<std::string> survivors;
    std::vector<FanoVerdict> verdicts;  // by decreasing index, then b4, then name
};

/// Throws FanoTableError if a required family is missing or listed twice.
FanoClassification classify_fano(const std::vector<FanoFamilyRecord>& records);

}  // namespace semifree
