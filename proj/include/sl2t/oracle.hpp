#pragma once

// Independent brute-force machinery used as ground truth: direct window
// extension from seeds by the minor rule alone, exhaustive small-case
// verification of the triangulation correspondence, and randomized
// falsification runs for the forbidden-period contracts.
//
// Deliberately shares no code with the quiddity-recurrence engine in
// tiling.hpp; this filler works diamond by diamond.

#include <sl2t/annulus.hpp>
#include <sl2t/bigint.hpp>
#include <sl2t/lattice_path.hpp>
#include <sl2t/tiling.hpp>

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace sl2t {

struct BruteFailure {
    enum class Kind : unsigned char { NonIntegral, NonPositive };
    Position position;
    Kind kind = Kind::NonIntegral;
};

using BruteResult = std::variant<Window, BruteFailure>;

// Extends the path over the window
//   [start.i - radius*m, start.i + radius*m] x [start.j - radius*n, start.j + radius*n]
// strictly by minor-rule diamond completion with exact division, reporting
// the first failure in raster order, or the completed window.
BruteResult brute_extend(const LatticePath& path, int radius);

inline bool brute_succeeded(const BruteResult& r) { return std::holds_alternative<Window>(r); }

// All-bridging triangulations of A(m,n) plus every way of growing smaller
// annuli back to A(m,n) with up to ear_depth ear insertions; canonical and
// deduplicated.
std::vector<Triangulation> enumerate_triangulations(int m, int n, long long twist_min,
                                                    long long twist_max, int ear_depth);

struct BijectionCheckReport {
    int cases = 0;
    int round_trip_failures = 0;
    int window_collisions = 0;
    int invalid_windows = 0;
    std::vector<std::string> failures;
    bool all_pass() const {
        return round_trip_failures == 0 && window_collisions == 0 && invalid_windows == 0;
    }
};

// For every enumerated triangulation: the tiling round-trips back to the
// same canonical triangulation, its (3m)x(3n) window passes verification,
// and distinct canonical triangulations give distinct windows.
BijectionCheckReport exhaustive_bijection_check(int m, int n, long long twist_min,
                                                long long twist_max, int ear_depth);

struct FalsifyReport {
    int trials = 0;
    int tilings_checked = 0;
    int period_violations = 0;   // detected period not a multiple of the primitive pair
    int pure_shift_hits = 0;     // windows invariant under (m,0) or (0,n)
    std::vector<std::string> failures;
    bool all_pass() const { return period_violations == 0 && pure_shift_hits == 0; }
};

// Evidence collection for the nonexistence contracts: random valid tilings
// never exhibit periods outside the multiples of one primitive pair, nor
// pure row/column translation symmetries.
FalsifyReport falsify_bad_periods(int trials, int bound, std::uint64_t rng_seed);

}  // namespace sl2t
