#pragma once

// Periodic positive integral grids with unit adjacent 2x2 minors.
//
// Rows are numbered bottom to top, so the adjacent minor is taken with row
// i+1 above row i:
//
//     u(i+1,j) * u(i,j+1) - u(i,j) * u(i+1,j+1) = 1.
//
// This is the unique sign choice for which the all-1 staircase with both
// periods equal to 1 produces the bisected Fibonacci rows
// ..., 13, 5, 2, 1, 1, 2, 5, 13, 34, ...  (anchored in the unit tests).
// An (m,n)-periodic grid additionally satisfies u(i,j) = u(i+m,j+n).

#include <sl2t/bigint.hpp>
#include <sl2t/errors.hpp>
#include <sl2t/lattice_path.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sl2t {

// Dense inclusive rectangle of grid entries.
class Window {
  public:
    Window(long long i_min, long long i_max, long long j_min, long long j_max);

    long long i_min() const { return i_min_; }
    long long i_max() const { return i_max_; }
    long long j_min() const { return j_min_; }
    long long j_max() const { return j_max_; }
    long long rows() const { return i_max_ - i_min_ + 1; }
    long long cols() const { return j_max_ - j_min_ + 1; }
    bool contains(long long i, long long j) const {
        return i >= i_min_ && i <= i_max_ && j >= j_min_ && j <= j_max_;
    }

    BigInt& at(long long i, long long j);
    const BigInt& at(long long i, long long j) const;

    bool operator==(const Window&) const = default;

  private:
    long long i_min_, i_max_, j_min_, j_max_;
    std::vector<BigInt> cells_;
};

struct ConditionCheck {
    std::string name;
    bool passed = true;
    std::optional<Position> first_failure;
    std::string detail;
};

struct VerificationReport {
    std::vector<ConditionCheck> conditions;
    bool all_passed() const;
};

// An (m,n)-periodic positive integral grid with unit minors, represented by
// its seed staircase plus the two quiddity sequences extracted from a block
// around the seed. Immutable after construction except for the entry cache,
// whose writes are idempotent.
class PeriodicTiling {
  public:
    // Throws DomainError when the seed is invalid or does not extend to a
    // positive integral grid (use bijection.hpp's check_seed/extend_seed for
    // a per-condition report).
    explicit PeriodicTiling(LatticePath seed);

    int m() const { return m_; }
    int n() const { return n_; }
    const LatticePath& seed() const { return seed_; }

    // a_i = (u(i-1,j) + u(i+1,j)) / u(i,j), indexed by i mod m.
    const std::vector<BigInt>& row_quiddity() const { return row_quiddity_; }
    // b_j = (u(i,j-1) + u(i,j+1)) / u(i,j), indexed by j mod n.
    const std::vector<BigInt>& col_quiddity() const { return col_quiddity_; }

    BigInt entry(long long i, long long j) const;
    BigInt entry(Position p) const { return entry(p.i, p.j); }

    Window window(long long i_min, long long i_max, long long j_min, long long j_max) const;

    // Same grid translated by (di, dj): entry'(i,j) = entry(i-di, j-dj).
    PeriodicTiling shifted(long long di, long long dj) const;

    // Equality as functions on the whole grid (periods, quiddities and one
    // 2x2 block pin everything else through the recurrences).
    bool operator==(const PeriodicTiling& other) const;

  private:
    struct Cache {
        std::mutex mutex;
        std::map<std::pair<long long, long long>, BigInt> entries;
    };

    int m_ = 0, n_ = 0;
    LatticePath seed_;
    long long base_i0_ = 0, base_j0_ = 0; // seed start
    Window base_;                          // rows [i0-1, i0+m+1] x cols [j0-1, j0+n+1]
    std::vector<BigInt> row_quiddity_, col_quiddity_;
    std::shared_ptr<Cache> cache_;

    BigInt quiddity_at_row(long long i) const { return row_quiddity_[floormod(i, m_)]; }
    BigInt quiddity_at_col(long long j) const { return col_quiddity_[floormod(j, n_)]; }
    // (u(i, j0), u(i, j0+1)) reached by the row recurrence.
    std::pair<BigInt, BigInt> anchor_pair(long long i) const;
    BigInt compute_entry(long long i, long long j) const;
};

// Per-condition validation of a window: positivity, unit minors, vanishing
// adjacent 3x3 determinants, and (m,n)-periodicity on the overlap.
// Conditions with no checkable site pass vacuously; failures are report
// content, not errors.
VerificationReport verify_window(const Window& w, int m, int n);

// All (m,n) with 1 <= m,n <= search_bound under which the window is
// invariant on its overlap, in lexicographic order. Throws DomainError when
// the window is too small to test any candidate.
std::vector<std::pair<int, int>> detect_periods(const Window& w, int search_bound);

}  // namespace sl2t
