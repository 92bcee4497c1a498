#pragma once

// Combinatorics of the marked annulus A(m,n): m marked points P_0..P_{m-1}
// on the outer boundary, n marked points Q_0..Q_{n-1} on the inner one.
//
// Arcs live on the universal cover, an infinite strip with points P^_i and
// Q^_j for all integers i, j. A bridging arc P_p--Q_q is stored by the lift
// with p in [0,m); its full lift set is {(p + k*m, q + k*n) : k in Z}. The
// q-lift carries the Dehn-twist data: one twist shifts every q-lift by one
// period, and rotating the inner labels by one shifts every q-lift by one.
// A peripheral arc joins two points of the same boundary; the one from
// index `from` with span s covers the s-1 points strictly between its
// endpoints (2 <= span <= boundary size).

#include <sl2t/errors.hpp>

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

namespace sl2t {

struct MarkedAnnulus {
    int m = 0;
    int n = 0;
    bool operator==(const MarkedAnnulus&) const = default;
};

enum class Boundary : std::uint8_t { P, Q };

struct BridgingArc {
    int p = 0;
    long long q = 0;
    bool operator==(const BridgingArc&) const = default;
};

struct PeripheralArc {
    Boundary boundary = Boundary::P;
    int from = 0;
    int span = 2;
    bool operator==(const PeripheralArc&) const = default;
};

using Arc = std::variant<BridgingArc, PeripheralArc>;

// Bridging arcs sort before peripheral ones; P-side peripherals before
// Q-side; ties by (p, q) resp. (from, span).
bool arc_less(const Arc& a, const Arc& b);

class Triangulation {
  public:
    // Validates: arc ranges, pairwise distinct and non-crossing, exactly
    // m+n arcs, at least one bridging arc. Arcs are stored sorted.
    Triangulation(MarkedAnnulus annulus, std::vector<Arc> arcs);

    const MarkedAnnulus& annulus() const { return annulus_; }
    const std::vector<Arc>& arcs() const { return arcs_; }

    bool operator==(const Triangulation&) const = default;

  private:
    MarkedAnnulus annulus_;
    std::vector<Arc> arcs_;
};

bool triangulation_less(const Triangulation& a, const Triangulation& b);

// True iff some pair of lifts of the two arcs strictly interleaves on the
// cover. Irreflexive: an arc never crosses itself.
bool crosses(const Arc& a, const Arc& b, const MarkedAnnulus& annulus);

// Pairwise non-crossing, pairwise distinct, and of maximal size m+n.
bool is_triangulation(const std::vector<Arc>& arcs, const MarkedAnnulus& annulus);

// The all-bridging triangulation whose arcs form the staircase
// (0,0),(1,0),...,(m,0),(m,1),...,(m,n-1) on the cover.
Triangulation fan_triangulation(int m, int n);

struct EarRecord {
    Boundary boundary = Boundary::P;
    int removed_vertex = 0;
    int insertion_position = 0;
    bool operator==(const EarRecord&) const = default;
};

// Marked points carrying no arc endpoint: each spans a triangle with two
// boundary sides. P ears first, then Q ears, each by ascending index.
std::vector<std::pair<Boundary, int>> ears(const Triangulation& t);

// Deletes an ear vertex together with the peripheral arc spanning it and
// relabels the remaining points. The record inverts the surgery exactly.
std::pair<Triangulation, EarRecord> remove_ear(const Triangulation& t, Boundary boundary,
                                               int vertex);

// Inverse of remove_ear: grows the boundary by one vertex at
// record.insertion_position and adds the span-2 peripheral arc over it.
Triangulation insert_ear(const Triangulation& t, const EarRecord& record);

// Canonical representatives of the all-bridging triangulations reachable
// from the C(m+n, m) monotone step words crossed with the given global
// twist offsets, deduplicated and sorted.
std::vector<Triangulation> enumerate_bridging(int m, int n, long long twist_min,
                                              long long twist_max);

// Lexicographically minimal representative under rotations of the P labels,
// rotations of the Q labels, and shifts of the chosen lifts (which subsume
// Dehn twists). Idempotent.
Triangulation canonical_form(const Triangulation& t);

}  // namespace sl2t
