#include <sl2t/farey.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

namespace sl2t {

namespace {

using Vec = std::array<BigInt, 2>;

BigInt det2(const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; }

Vec to_vec(const FareyVertex& v) { return {v.p, v.q}; }

FareyVertex normalize(Vec v) {
    if (v[1] < 0 || (v[1] == 0 && v[0] < 0)) {
        v[0] = -v[0];
        v[1] = -v[1];
    }
    return FareyVertex{std::move(v[0]), std::move(v[1])};
}

// True iff u, v, w lie in this counterclockwise circular order on
// R union {infinity} (counterclockwise = direction of increasing reals).
// For canonical vertices this is the classical three-determinant test.
bool ccw(const FareyVertex& u, const FareyVertex& v, const FareyVertex& w) {
    BigInt prod = vertex_det(u, v) * vertex_det(v, w) * vertex_det(u, w);
    if (prod == 0) throw InternalError("circular orientation of non-distinct vertices");
    return prod < 0;
}

// Stern-Brocot parents of a rational vertex: the unique Farey edge {u, v}
// with u + v = a at the vector level.
std::pair<FareyVertex, FareyVertex> parents(const FareyVertex& a) {
    // Solve p*q' - q*p' = 1 with 0 <= q' < q (q' = 0 only for integers).
    BigInt p = a.p, q = a.q;
    BigInt old_r = p, r = q;
    BigInt old_s = 1, s = 0;
    BigInt old_t = 0, t = 1;
    while (r != 0) {
        BigInt quo = old_r / r;
        old_r -= quo * r;
        std::swap(old_r, r);
        old_s -= quo * s;
        std::swap(old_s, s);
        old_t -= quo * t;
        std::swap(old_t, t);
    }
    // old_s * p + old_t * q == gcd == +-1; arrange p*q' - q*p' = 1.
    BigInt pp, qq;
    if (old_r == 1) {
        qq = old_s;
        pp = -old_t;
    } else {
        qq = -old_s;
        pp = old_t;
    }
    // Shift the solution so 0 <= qq < q.
    BigInt shift = qq >= 0 ? qq / q : -((-qq + q - 1) / q);
    qq -= shift * q;
    pp -= shift * p;
    Vec first{pp, qq};
    Vec second{a.p - pp, a.q - qq};
    return {normalize(first), normalize(second)};
}

// The two triangle apexes over the Farey edge {x, y} are x+y and x-y.
FareyVertex other_apex(const FareyVertex& x, const FareyVertex& y, const FareyVertex& not_this) {
    FareyVertex sum = normalize({x.p + y.p, x.q + y.q});
    if (sum != not_this) return sum;
    return normalize({x.p - y.p, x.q - y.q});
}

}  // namespace

FareyVertex make_vertex(BigInt p, BigInt q) {
    if (p == 0 && q == 0) throw DomainError("(0,0) is not a Farey vertex");
    BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(p),
                                          boost::multiprecision::abs(q));
    if (g > 1) {
        p /= g;
        q /= g;
    }
    return normalize({std::move(p), std::move(q)});
}

BigInt vertex_det(const FareyVertex& a, const FareyVertex& b) { return a.p * b.q - a.q * b.p; }

bool is_edge(const FareyVertex& a, const FareyVertex& b) {
    BigInt d = vertex_det(a, b);
    return d == 1 || d == -1;
}

const std::array<BigInt, 2>& FareyPath::at(long long index) const {
    if (index < index_min || index > index_max())
        throw DomainError("path index " + std::to_string(index) + " outside stored range");
    return vectors[static_cast<std::size_t>(index - index_min)];
}

BigInt tiling_entry_from_paths(const FareyPath& p_path, const FareyPath& r_path, long long i,
                               long long j) {
    return det2(p_path.at(i), r_path.at(j));
}

PathsResult paths_from_tiling(const PeriodicTiling& t, long long i_lo, long long i_hi,
                              long long j_lo, long long j_hi) {
    if (i_lo > i_hi || j_lo > j_hi) throw DomainError("empty path index range");
    const int n = t.n();
    PathsResult out;

    out.p_path.index_min = std::min<long long>(i_lo, 0);
    for (long long i = out.p_path.index_min; i <= i_hi; ++i)
        out.p_path.vectors.push_back({t.entry(i, 1), -t.entry(i, 0)});

    const long long r_lo = std::min<long long>(j_lo, 0);
    const long long r_hi = std::max<long long>(j_hi, n + 1);
    out.r_path.index_min = r_lo;
    out.r_path.vectors.resize(static_cast<std::size_t>(r_hi - r_lo + 1));
    auto rv = [&](long long j) -> Vec& {
        return out.r_path.vectors[static_cast<std::size_t>(j - r_lo)];
    };
    rv(0) = {BigInt(1), BigInt(0)};
    rv(1) = {BigInt(0), BigInt(1)};
    for (long long j = 1; j < r_hi; ++j) {
        const BigInt& b = t.col_quiddity()[static_cast<std::size_t>(floormod(j, n))];
        rv(j + 1) = {b * rv(j)[0] - rv(j - 1)[0], b * rv(j)[1] - rv(j - 1)[1]};
    }
    for (long long j = 0; j > r_lo; --j) {
        const BigInt& b = t.col_quiddity()[static_cast<std::size_t>(floormod(j, n))];
        rv(j - 1) = {b * rv(j)[0] - rv(j + 1)[0], b * rv(j)[1] - rv(j + 1)[1]};
    }

    out.monodromy = Monodromy{rv(n)[0], rv(n + 1)[0], rv(n)[1], rv(n + 1)[1]};

    // Contract checks: consecutive unit determinants, window reproduction at
    // the anchor entries, and the translation action of the monodromy.
    for (long long i = out.p_path.index_min; i < i_hi; ++i)
        if (det2(out.p_path.at(i + 1), out.p_path.at(i)) != 1)
            throw InternalError("outer path determinant contract failed at " + std::to_string(i));
    for (long long j = r_lo; j < r_hi; ++j)
        if (det2(out.r_path.at(j), out.r_path.at(j + 1)) != 1)
            throw InternalError("inner path determinant contract failed at " + std::to_string(j));
    if (out.monodromy.det() != 1) throw InternalError("monodromy determinant is not 1");
    const Monodromy& M = out.monodromy;
    if (r_hi - n >= r_lo) {
        for (long long j = r_lo; j + n <= r_hi; ++j) {
            const Vec& x = out.r_path.at(j);
            Vec mx{M.a * x[0] + M.b * x[1], M.c * x[0] + M.d * x[1]};
            if (mx != out.r_path.at(j + n))
                throw InternalError("monodromy does not translate the inner path");
        }
    }
    for (long long i = out.p_path.index_min; i + t.m() <= i_hi; ++i) {
        const Vec& x = out.p_path.at(i);
        Vec mx{M.a * x[0] + M.b * x[1], M.c * x[0] + M.d * x[1]};
        if (mx != out.p_path.at(i + t.m()))
            throw InternalError("monodromy does not translate the outer path");
    }
    return out;
}

bool ptolemy_check(const FareyVertex& a, const FareyVertex& b, const FareyVertex& c,
                   const FareyVertex& d) {
    const FareyVertex* vs[4] = {&a, &b, &c, &d};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (*vs[i] == *vs[j]) throw DomainError("ptolemy_check needs four distinct vertices");
    const bool o = ccw(a, b, c);
    if (ccw(b, c, d) != o || ccw(c, d, a) != o || ccw(d, a, b) != o)
        throw DomainError("vertices are not in cyclic order");
    return vertex_det(a, c) * vertex_det(b, d) ==
           vertex_det(a, b) * vertex_det(c, d) + vertex_det(a, d) * vertex_det(b, c);
}

long long crossing_count(const FareyVertex& a, const FareyVertex& c) {
    if (a.q <= 0 || c.q <= 0)
        throw DomainError("crossing_count is defined for rational vertices (q > 0)");
    if (a == c) throw DomainError("crossing_count needs distinct vertices");
    if (is_edge(a, c)) return 0;

    // Fan of neighbors around `a`: x_k = u0 + dir*k*a, with dir chosen so
    // the fan marches counterclockwise as k grows.
    auto [u0, u1] = parents(a);
    long long dir = 1;
    auto fan = [&](long long k) {
        return normalize({u0.p + dir * k * a.p, u0.q + dir * k * a.q});
    };
    if (!ccw(a, fan(0), fan(1))) dir = -1;
    // Largest k with x_k still (weakly) before c going counterclockwise
    // from a. before(k) is true for all small k and false for all large k.
    auto before = [&](long long k) { return ccw(a, fan(k), c); };
    long long lo, hi;  // before(lo) == true, before(hi) == false
    if (before(0)) {
        lo = 0;
        hi = 1;
        while (before(hi)) {
            lo = hi;
            hi *= 2;
        }
    } else {
        hi = 0;
        lo = -1;
        while (!before(lo)) {
            hi = lo;
            lo *= 2;
        }
    }
    while (hi - lo > 1) {
        long long mid = lo + (hi - lo) / 2;
        (before(mid) ? lo : hi) = mid;
    }

    FareyVertex x = fan(lo), y = fan(lo + 1), z = a;
    if (x == c || y == c) throw InternalError("edge case escaped the early return");
    // Walk triangle (z, x, y) across the far edge until c is a vertex.
    long long count = 0;
    const BigInt guard = boost::multiprecision::abs(vertex_det(a, c)) * 10 + 1000;
    while (true) {
        if (count > guard)
            throw InternalError("triangle walk failed to terminate");
        if (x == c || y == c || z == c) return count;
        // Exit through the edge whose far arc contains c.
        const FareyVertex *e1 = nullptr, *e2 = nullptr, *far = nullptr;
        auto beyond = [&](const FareyVertex& p1, const FareyVertex& p2, const FareyVertex& opp) {
            return ccw(p1, c, p2) != ccw(p1, opp, p2);
        };
        if (beyond(x, y, z)) {
            e1 = &x;
            e2 = &y;
            far = &z;
        } else if (beyond(x, z, y)) {
            e1 = &x;
            e2 = &z;
            far = &y;
        } else if (beyond(y, z, x)) {
            e1 = &y;
            e2 = &z;
            far = &x;
        } else {
            throw InternalError("target vertex not beyond any triangle edge");
        }
        ++count;
        FareyVertex nx = *e1, ny = *e2;
        FareyVertex nz = other_apex(nx, ny, *far);
        x = std::move(nx);
        y = std::move(ny);
        z = std::move(nz);
    }
}

}  // namespace sl2t
