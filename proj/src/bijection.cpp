#include <sl2t/bijection.hpp>

#include <algorithm>
#include <set>
#include <string>

namespace sl2t {

namespace {

// L-shaped seed through (0,0): n Right steps then m Up steps, with values
// supplied by `value(i, j)`. Any staircase works as a seed of an already
// valid grid; the L shape is a convenient deterministic choice.
template <typename ValueFn>
LatticePath l_path(int m, int n, ValueFn&& value) {
    LatticePath path;
    path.m = m;
    path.n = n;
    path.start = Position{0, 0};
    path.values.push_back(value(0, 0));
    for (int j = 1; j <= n; ++j) {
        path.steps.push_back(Step::Right);
        path.values.push_back(value(0, j));
    }
    for (int i = 1; i <= m; ++i) {
        path.steps.push_back(Step::Up);
        path.values.push_back(value(i, n));
    }
    path.validate();
    return path;
}

// Tiling with the row family `index` removed (the family must be the sum of
// its two neighboring families for the result to be a tiling again).
PeriodicTiling drop_row_family(const PeriodicTiling& t, long long index) {
    const int m = t.m(), n = t.n();
    auto old_row = [&](long long i) {
        long long q = floordiv(i, m - 1), r = floormod(i, m - 1);
        return q * m + (r < index ? r : r + 1);
    };
    return PeriodicTiling(
        l_path(m - 1, n, [&](long long i, long long j) { return t.entry(old_row(i), j); }));
}

PeriodicTiling drop_col_family(const PeriodicTiling& t, long long index) {
    const int m = t.m(), n = t.n();
    auto old_col = [&](long long j) {
        long long q = floordiv(j, n - 1), r = floormod(j, n - 1);
        return q * n + (r < index ? r : r + 1);
    };
    return PeriodicTiling(
        l_path(m, n - 1, [&](long long i, long long j) { return t.entry(i, old_col(j)); }));
}

// Tiling with a new row family inserted at `index`, equal to the sum of the
// two neighboring rows.
PeriodicTiling insert_row_family(const PeriodicTiling& t, long long index) {
    const int m = t.m(), n = t.n();
    auto value = [&](long long i, long long j) -> BigInt {
        long long q = floordiv(i, m + 1), r = floormod(i, m + 1);
        if (r == index) return t.entry(q * m + index - 1, j) + t.entry(q * m + index, j);
        return t.entry(q * m + (r < index ? r : r - 1), j);
    };
    return PeriodicTiling(l_path(m + 1, n, value));
}

PeriodicTiling insert_col_family(const PeriodicTiling& t, long long index) {
    const int m = t.m(), n = t.n();
    auto value = [&](long long i, long long j) -> BigInt {
        long long q = floordiv(j, n + 1), r = floormod(j, n + 1);
        if (r == index) return t.entry(i, q * n + index - 1) + t.entry(i, q * n + index);
        return t.entry(i, q * n + (r < index ? r : r - 1));
    };
    return PeriodicTiling(l_path(m, n + 1, value));
}

// Columns j with entry(i, j) == 1, produced by walking outward from j = 0.
// Along each row, samples n columns apart obey s' = growth * s - s'' with
// integer growth >= 2, so once a full window of n consecutive columns is
// above 1 and no smaller than its predecessor period the row has left its
// valley for good and no further 1 can occur on that side.
std::vector<long long> ones_in_row(const PeriodicTiling& t, long long i) {
    const int n = t.n();
    std::vector<long long> ones;
    auto scan = [&](long long dir) {
        long long j = dir > 0 ? 0 : -1;
        int settled = 0;
        while (settled < n) {
            BigInt cur = t.entry(i, j);
            if (cur == 1) ones.push_back(j);
            BigInt prev = t.entry(i, j - dir * n);
            if (cur > 1 && cur >= prev)
                ++settled;
            else
                settled = 0;
            j += dir;
        }
    };
    scan(+1);
    scan(-1);
    std::sort(ones.begin(), ones.end());
    return ones;
}

}  // namespace

bool CheckReport::all_pass() const {
    return std::all_of(conditions.begin(), conditions.end(),
                       [](const SeedCondition& c) { return c.passes; });
}

SeedRejected::SeedRejected(CheckReport report)
    : DomainError("seed fails its extension conditions"), report_(std::move(report)) {}

CheckReport check_seed(const LatticePath& path) {
    path.validate();
    const int len = path.m + path.n;
    CheckReport report;
    for (int k = 0; k < len; ++k) {
        const BigInt& prev = path.values[static_cast<std::size_t>(k == 0 ? len - 1 : k - 1)];
        const BigInt& mid = path.values[static_cast<std::size_t>(k)];
        const BigInt& next = path.values[static_cast<std::size_t>(k + 1)];
        const Step in = path.steps[static_cast<std::size_t>(floormod(k - 1, len))];
        const Step out = path.steps[static_cast<std::size_t>(k)];
        SeedCondition cond;
        cond.point_index = k;
        if (in == out) {
            cond.kind = SeedCondition::Kind::Straight;
            cond.numerator = prev + next;
        } else {
            cond.kind = SeedCondition::Kind::Corner;
            cond.numerator = prev * next + 1;
        }
        cond.denominator = mid;
        cond.passes = cond.numerator % cond.denominator == 0;
        report.conditions.push_back(std::move(cond));
    }
    return report;
}

PeriodicTiling extend_seed(const LatticePath& path) {
    CheckReport report = check_seed(path);
    if (!report.all_pass()) throw SeedRejected(std::move(report));
    try {
        return PeriodicTiling(path);
    } catch (const DomainError& e) {
        throw InternalError(std::string("seed passed its conditions but failed to extend: ") +
                            e.what());
    }
}

std::optional<std::pair<PeriodicTiling, ReductionRecord>> reduce(const PeriodicTiling& t) {
    for (long long i = 0; i < t.m(); ++i) {
        if (t.row_quiddity()[static_cast<std::size_t>(i)] != 1) continue;
        if (t.m() == 1)
            throw InternalError("row quiddity 1 with a single row family");
        ReductionRecord record;
        record.axis = Axis::Row;
        record.index = i;
        for (long long j = 0; j < t.n(); ++j) record.removed_values.push_back(t.entry(i, j));
        return std::make_pair(drop_row_family(t, i), std::move(record));
    }
    for (long long j = 0; j < t.n(); ++j) {
        if (t.col_quiddity()[static_cast<std::size_t>(j)] != 1) continue;
        if (t.n() == 1)
            throw InternalError("column quiddity 1 with a single column family");
        ReductionRecord record;
        record.axis = Axis::Column;
        record.index = j;
        for (long long i = 0; i < t.m(); ++i) record.removed_values.push_back(t.entry(i, j));
        return std::make_pair(drop_col_family(t, j), std::move(record));
    }
    return std::nullopt;
}

std::optional<LatticePath> find_unit_staircase(const PeriodicTiling& t) {
    const int m = t.m(), n = t.n();
    for (long long c : ones_in_row(t, 0)) {
        Position cur{0, c};
        std::vector<Step> steps;
        while (static_cast<int>(steps.size()) < m + n) {
            if (t.entry(cur.i, cur.j + 1) == 1) {
                steps.push_back(Step::Right);
                ++cur.j;
            } else if (t.entry(cur.i + 1, cur.j) == 1) {
                steps.push_back(Step::Up);
                ++cur.i;
            } else {
                break;
            }
        }
        if (static_cast<int>(steps.size()) == m + n && cur.i == m && cur.j == c + n)
            return unit_path(m, n, Position{0, c}, std::move(steps));
    }
    return std::nullopt;
}

PeriodicTiling tiling_from_triangulation(const Triangulation& t) {
    Triangulation current = canonical_form(t);
    std::vector<EarRecord> records;
    for (;;) {
        auto es = ears(current);
        if (es.empty()) break;
        auto [smaller, record] = remove_ear(current, es.front().first, es.front().second);
        current = std::move(smaller);
        records.push_back(record);
    }

    // All arcs are bridging now; their lifts form one bi-infinite monotone
    // staircase. Chain it starting from the smallest q-lift at p = 0.
    const int m = current.annulus().m, n = current.annulus().n;
    std::set<std::pair<long long, long long>> lift_set;
    long long start_q = 0;
    bool have_start = false;
    for (const Arc& arc : current.arcs()) {
        const auto& br = std::get<BridgingArc>(arc);
        lift_set.insert({br.p, br.q});
        if (br.p == 0 && (!have_start || br.q < start_q)) {
            start_q = br.q;
            have_start = true;
        }
    }
    if (!have_start) throw InternalError("all-bridging triangulation with no arc at p = 0");
    auto is_lift = [&](long long i, long long j) {
        long long carry = floordiv(i, m);
        return lift_set.count({i - carry * m, j - carry * n}) > 0;
    };
    Position cur{0, start_q};
    std::vector<Step> steps;
    for (int k = 0; k < m + n; ++k) {
        if (is_lift(cur.i, cur.j + 1)) {
            steps.push_back(Step::Right);
            ++cur.j;
        } else if (is_lift(cur.i + 1, cur.j)) {
            steps.push_back(Step::Up);
            ++cur.i;
        } else {
            throw InternalError("bridging arcs do not chain into a staircase");
        }
    }
    PeriodicTiling tiling = extend_seed(unit_path(m, n, Position{0, start_q}, std::move(steps)));

    for (auto it = records.rbegin(); it != records.rend(); ++it) {
        if (it->boundary == Boundary::P)
            tiling = insert_row_family(tiling, it->insertion_position);
        else
            tiling = insert_col_family(tiling, it->insertion_position);
    }
    return tiling;
}

Triangulation triangulation_from_tiling(const PeriodicTiling& t) {
    std::vector<ReductionRecord> records;
    PeriodicTiling current = t;
    for (;;) {
        auto step = reduce(current);
        if (!step) break;
        current = std::move(step->first);
        records.push_back(std::move(step->second));
    }
    auto staircase = find_unit_staircase(current);
    if (!staircase)
        throw InternalError("fully reduced tiling has no unit staircase");

    const int m = current.m(), n = current.n();
    std::vector<Arc> arcs;
    auto pts = staircase->points();
    for (int k = 0; k < m + n; ++k) {
        long long carry = floordiv(pts[static_cast<std::size_t>(k)].i, m);
        arcs.push_back(BridgingArc{
            static_cast<int>(pts[static_cast<std::size_t>(k)].i - carry * m),
            pts[static_cast<std::size_t>(k)].j - carry * n});
    }
    Triangulation tri(MarkedAnnulus{m, n}, std::move(arcs));
    for (auto it = records.rbegin(); it != records.rend(); ++it) {
        Boundary b = it->axis == Axis::Row ? Boundary::P : Boundary::Q;
        tri = insert_ear(tri, EarRecord{b, static_cast<int>(it->index),
                                        static_cast<int>(it->index)});
    }
    return canonical_form(tri);
}

}  // namespace sl2t
