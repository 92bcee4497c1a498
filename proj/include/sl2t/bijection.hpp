#pragma once

// Both directions of the correspondence between (m,n)-periodic positive
// integral unit-minor grids and triangulations of the marked annulus
// A(m,n), together with the lattice-path seed checker/extender and the
// ear-reduction dichotomy on tilings.

#include <sl2t/annulus.hpp>
#include <sl2t/bigint.hpp>
#include <sl2t/lattice_path.hpp>
#include <sl2t/tiling.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace sl2t {

struct SeedCondition {
    enum class Kind : unsigned char { Straight, Corner };
    int point_index = 0;
    Kind kind = Kind::Straight;
    BigInt numerator;    // u(k-1)+u(k+1) for straight, u(k-1)*u(k+1)+1 for corner
    BigInt denominator;  // u(k)
    bool passes = false;
};

struct CheckReport {
    std::vector<SeedCondition> conditions;  // one per distinct path point
    bool all_pass() const;
};

class SeedRejected : public DomainError {
  public:
    explicit SeedRejected(CheckReport report);
    const CheckReport& report() const { return report_; }

  private:
    CheckReport report_;
};

// The m+n divisibility conditions, one per distinct point of the
// periodically extended path. Point k has neighbors k-1 and k+1; the ends
// wrap onto the single point identified by the (m,n) shift. A point whose
// two neighboring steps agree is straight and checks
// u(k-1)+u(k+1) = 0 mod u(k); a corner checks u(k-1)*u(k+1)+1 = 0 mod u(k).
CheckReport check_seed(const LatticePath& path);

// The unique periodic tiling through the path. Throws SeedRejected (with
// the report attached) when a condition fails.
PeriodicTiling extend_seed(const LatticePath& path);

enum class Axis : unsigned char { Row, Column };

struct ReductionRecord {
    Axis axis = Axis::Row;
    long long index = 0;             // removed line family, in [0, m) resp. [0, n)
    std::vector<BigInt> removed_values;  // one period of the removed line
};

// Triangulation -> tiling. Peels ears, seeds the remaining all-bridging
// staircase with 1s, extends, then replays each ear as a new line equal to
// the entrywise sum of its two neighbors.
PeriodicTiling tiling_from_triangulation(const Triangulation& t);

// Tiling -> canonical triangulation: repeatedly strips quiddity-1 lines
// (rows first, smallest index first), reads the unit staircase off the
// fully reduced tiling, and replays the strips as ear insertions.
Triangulation triangulation_from_tiling(const PeriodicTiling& t);

// One step of the dichotomy: if some row or column quiddity equals 1 the
// corresponding line family is removed and returned with its record;
// otherwise (a unit staircase exists) returns std::nullopt.
std::optional<std::pair<PeriodicTiling, ReductionRecord>> reduce(const PeriodicTiling& t);

// A monotone staircase of 1-entries with periodic closure, starting at the
// smallest row of the fundamental window, or std::nullopt if none exists.
std::optional<LatticePath> find_unit_staircase(const PeriodicTiling& t);

}  // namespace sl2t
