#pragma once

// The Farey graph on Q union {infinity} and its pair-of-paths realization
// of tame unit-minor grids: u(i,j) = det(P_i, R_j).
//
// Paths store raw integer vectors (the second coordinate may be negative)
// because the determinant formulas are vector-level; canonicalization to
// fractions happens only for display and edge/crossing tests.

#include <sl2t/bigint.hpp>
#include <sl2t/frieze.hpp>
#include <sl2t/tiling.hpp>

#include <array>
#include <vector>

namespace sl2t {

// Reduced fraction p/q with q > 0, or the vertex at infinity (1, 0).
struct FareyVertex {
    BigInt p, q;
    bool is_infinity() const { return q == 0; }
    bool operator==(const FareyVertex&) const = default;
};

// Reduces and sign-normalizes; throws DomainError on (0,0).
FareyVertex make_vertex(BigInt p, BigInt q);

BigInt vertex_det(const FareyVertex& a, const FareyVertex& b);

// |p_a q_b - q_a p_b| = 1.
bool is_edge(const FareyVertex& a, const FareyVertex& b);

// Indexed family of 2-vectors with consecutive unit determinants.
struct FareyPath {
    long long index_min = 0;
    std::vector<std::array<BigInt, 2>> vectors;

    long long index_max() const { return index_min + static_cast<long long>(vectors.size()) - 1; }
    const std::array<BigInt, 2>& at(long long index) const;
};

// det [[p_i, r_j], [q_i, s_j]].
BigInt tiling_entry_from_paths(const FareyPath& p_path, const FareyPath& r_path, long long i,
                               long long j);

struct PathsResult {
    FareyPath p_path;   // P_i = (u(i,1), -u(i,0)), det(P_{i+1}, P_i) = 1
    FareyPath r_path;   // R_0 = (1,0), R_1 = (0,1), R_{j+1} = b_j R_j - R_{j-1}
    Monodromy monodromy;  // R_{j+n} = M R_j and P_{i+m} = M P_i; trace(M) = growth
};

// Paths covering the requested index ranges (the R range is widened to
// include the normalization indices 0 and 1, and the P range to include 0).
PathsResult paths_from_tiling(const PeriodicTiling& t, long long i_lo, long long i_hi,
                              long long j_lo, long long j_hi);

// Exact Ptolemy/Pluecker identity
//   det(a,c)det(b,d) = det(a,b)det(c,d) + det(a,d)det(b,c)
// for four distinct vertices in cyclic order on the circle; throws
// DomainError when the order is violated.
bool ptolemy_check(const FareyVertex& a, const FareyVertex& b, const FareyVertex& c,
                   const FareyVertex& d);

// Number of Farey edges crossed by the hyperbolic arc joining two distinct
// rational vertices, computed by walking the triangles of the tessellation
// from a Stern-Brocot parent triangle of `a`. Always <= |det(a, c)|.
long long crossing_count(const FareyVertex& a, const FareyVertex& c);

}  // namespace sl2t
