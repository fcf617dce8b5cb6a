#ifndef PFHODGE_ENUMERATE_HPP
#define PFHODGE_ENUMERATE_HPP

#include "pfhodge/base_change.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pfhodge {

struct SearchConfig {
    std::string family = "quintic";  // "quintic" (dm1) or "quartic"
    int max_part = 50;
    int max_parts = 50;
    int target = 1;  // h^{top,0}
};

struct EnumerationResult {
    std::vector<std::vector<int>> profiles;  // parts ascending, sorted lexicographically
    std::vector<std::string> warnings;       // empty iff certified complete within caps
    bool certified() const { return warnings.empty(); }
};

// Cover of degree sum(y) with [d] over 0, y over infinity, unramified over
// the other finite singular point and l - 1 free simple ramification points.
CoverSpec canonical_cover(const std::vector<int>& y_inf);

// h^{top,0} of the pullback along canonical_cover(y_inf), via the full pipeline.
std::int64_t top_hodge_number(const std::string& family, const std::vector<int>& y_inf);

EnumerationResult enumerate_cy_infinity_profiles(const SearchConfig& cfg);

struct IndependenceReport {
    int samples = 0;
    std::vector<std::string> counterexamples;
};

// Random covers sharing an infinity profile but differing elsewhere give the
// same h^{0,4}.
IndependenceReport verify_independence(const std::string& family, int samples, std::uint64_t seed = 1);

}  // namespace pfhodge

#endif
