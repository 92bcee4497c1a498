#include <sl2t/annulus.hpp>
#include <sl2t/bigint.hpp>

#include <algorithm>
#include <optional>
#include <set>
#include <string>

namespace sl2t {

namespace {

int side_size(const MarkedAnnulus& a, Boundary b) { return b == Boundary::P ? a.m : a.n; }

void validate_arc(const Arc& arc, const MarkedAnnulus& a) {
    if (const auto* br = std::get_if<BridgingArc>(&arc)) {
        if (br->p < 0 || br->p >= a.m)
            throw DomainError("bridging arc p index " + std::to_string(br->p) +
                              " outside [0," + std::to_string(a.m) + ")");
        return;
    }
    const auto& pe = std::get<PeripheralArc>(arc);
    const int size = side_size(a, pe.boundary);
    if (pe.from < 0 || pe.from >= size)
        throw DomainError("peripheral arc from index " + std::to_string(pe.from) +
                          " outside [0," + std::to_string(size) + ")");
    if (pe.span < 2 || pe.span > size)
        throw DomainError("peripheral arc span " + std::to_string(pe.span) +
                          " outside [2," + std::to_string(size) + "]");
}

// Is there an integer t with (dp + t*mp) * (dq + t*nq) < 0?  The product is
// an upward parabola in t, so the negative set is the open interval between
// the roots -dp/mp and -dq/nq; we test it for an integer point exactly.
bool bridging_pair_crosses(long long dp, long long dq, int mp, int nq) {
    // Roots as rationals a/b with b > 0.
    const BigInt a1 = -dp, b1 = mp;
    const BigInt a2 = BigInt(-dq), b2 = nq;
    // Compare a1/b1 vs a2/b2.
    const bool first_smaller = a1 * b2 < a2 * b1;
    const BigInt &lo_num = first_smaller ? a1 : a2, &lo_den = first_smaller ? b1 : b2;
    const BigInt &hi_num = first_smaller ? a2 : a1, &hi_den = first_smaller ? b2 : b1;
    // Smallest integer strictly above lo and largest strictly below hi.
    auto floor_q = [](const BigInt& num, const BigInt& den) {
        BigInt q = num / den;
        if (q * den > num) --q;
        return q;
    };
    BigInt lowest = floor_q(lo_num, lo_den) + 1;
    BigInt highest = -floor_q(-hi_num, hi_den) - 1;
    return lowest <= highest;
}

bool intervals_strictly_interleave(long long x1, long long y1, long long x2, long long y2) {
    return (x1 < x2 && x2 < y1 && y1 < y2) || (x2 < x1 && x1 < y2 && y2 < y1);
}

// Relabel map on the cover after deleting every lift of vertex `v` from a
// boundary of size `size`: surviving old index -> new index.
long long relabel_after_removal(long long x, int v, int size) {
    long long q = floordiv(x, size), r = floormod(x, size);
    if (r == v) throw InternalError("relabel_after_removal applied to a removed vertex");
    return q * (size - 1) + (r < v ? r : r - 1);
}

// Relabel map on the cover after inserting a new vertex at position `v` into
// a boundary of size `size`: old index -> new index.
long long relabel_after_insertion(long long x, int v, int size) {
    long long q = floordiv(x, size), r = floormod(x, size);
    return q * (size + 1) + (r < v ? r : r + 1);
}

}  // namespace

bool arc_less(const Arc& a, const Arc& b) {
    if (a.index() != b.index()) return a.index() < b.index();
    if (a.index() == 0) {
        const auto &x = std::get<BridgingArc>(a), &y = std::get<BridgingArc>(b);
        return x.p != y.p ? x.p < y.p : x.q < y.q;
    }
    const auto &x = std::get<PeripheralArc>(a), &y = std::get<PeripheralArc>(b);
    if (x.boundary != y.boundary) return x.boundary < y.boundary;
    if (x.from != y.from) return x.from < y.from;
    return x.span < y.span;
}

bool crosses(const Arc& a, const Arc& b, const MarkedAnnulus& annulus) {
    if (a == b) return false;
    const auto* ba = std::get_if<BridgingArc>(&a);
    const auto* bb = std::get_if<BridgingArc>(&b);
    if (ba && bb)
        return bridging_pair_crosses(ba->p - bb->p, ba->q - bb->q, annulus.m, annulus.n);
    if (ba || bb) {
        const BridgingArc& br = ba ? *ba : *bb;
        const PeripheralArc& pe = std::get<PeripheralArc>(ba ? b : a);
        // The bridging arc crosses iff one of its endpoint lifts on that
        // boundary lies strictly under the peripheral arc.
        const int size = side_size(annulus, pe.boundary);
        long long rel = pe.boundary == Boundary::P ? floormod(br.p - pe.from, size)
                                                   : floormod(br.q - pe.from, size);
        return rel >= 1 && rel <= pe.span - 1;
    }
    const auto &pa = std::get<PeripheralArc>(a), &pb = std::get<PeripheralArc>(b);
    if (pa.boundary != pb.boundary) return false;
    const int size = side_size(annulus, pa.boundary);
    for (long long k = -2; k <= 2; ++k) {
        long long x1 = pa.from + k * size, y1 = x1 + pa.span;
        if (intervals_strictly_interleave(x1, y1, pb.from, pb.from + pb.span)) return true;
    }
    return false;
}

bool is_triangulation(const std::vector<Arc>& arcs, const MarkedAnnulus& annulus) {
    if (annulus.m < 1 || annulus.n < 1) return false;
    if (arcs.size() != static_cast<std::size_t>(annulus.m + annulus.n)) return false;
    for (const Arc& arc : arcs) {
        try {
            validate_arc(arc, annulus);
        } catch (const DomainError&) {
            return false;
        }
    }
    for (std::size_t i = 0; i < arcs.size(); ++i)
        for (std::size_t j = i + 1; j < arcs.size(); ++j) {
            if (arcs[i] == arcs[j]) return false;
            if (crosses(arcs[i], arcs[j], annulus)) return false;
        }
    return true;
}

Triangulation::Triangulation(MarkedAnnulus annulus, std::vector<Arc> arcs)
    : annulus_(annulus), arcs_(std::move(arcs)) {
    if (annulus_.m < 1 || annulus_.n < 1)
        throw DomainError("annulus needs at least one marked point per boundary");
    for (const Arc& arc : arcs_) validate_arc(arc, annulus_);
    std::sort(arcs_.begin(), arcs_.end(), arc_less);
    for (std::size_t i = 0; i + 1 < arcs_.size(); ++i)
        if (arcs_[i] == arcs_[i + 1]) throw DomainError("duplicate arc in triangulation");
    if (arcs_.size() != static_cast<std::size_t>(annulus_.m + annulus_.n))
        throw DomainError("a triangulation of A(m,n) has exactly m+n arcs, got " +
                          std::to_string(arcs_.size()));
    for (std::size_t i = 0; i < arcs_.size(); ++i)
        for (std::size_t j = i + 1; j < arcs_.size(); ++j)
            if (crosses(arcs_[i], arcs_[j], annulus_))
                throw DomainError("triangulation contains crossing arcs");
    if (std::none_of(arcs_.begin(), arcs_.end(),
                     [](const Arc& a) { return std::holds_alternative<BridgingArc>(a); }))
        throw DomainError("a triangulation of an annulus contains a bridging arc");
}

bool triangulation_less(const Triangulation& a, const Triangulation& b) {
    if (a.annulus().m != b.annulus().m) return a.annulus().m < b.annulus().m;
    if (a.annulus().n != b.annulus().n) return a.annulus().n < b.annulus().n;
    return std::lexicographical_compare(a.arcs().begin(), a.arcs().end(), b.arcs().begin(),
                                        b.arcs().end(), arc_less);
}

Triangulation fan_triangulation(int m, int n) {
    if (m < 1 || n < 1) throw DomainError("fan triangulation needs m,n >= 1");
    std::vector<Arc> arcs;
    for (int j = -n; j <= 0; ++j) arcs.push_back(BridgingArc{0, j});
    for (int i = 1; i < m; ++i) arcs.push_back(BridgingArc{i, 0});
    return Triangulation(MarkedAnnulus{m, n}, std::move(arcs));
}

std::vector<std::pair<Boundary, int>> ears(const Triangulation& t) {
    const auto& a = t.annulus();
    std::vector<bool> p_used(static_cast<std::size_t>(a.m), false);
    std::vector<bool> q_used(static_cast<std::size_t>(a.n), false);
    for (const Arc& arc : t.arcs()) {
        if (const auto* br = std::get_if<BridgingArc>(&arc)) {
            p_used[static_cast<std::size_t>(br->p)] = true;
            q_used[static_cast<std::size_t>(floormod(br->q, a.n))] = true;
        } else {
            const auto& pe = std::get<PeripheralArc>(arc);
            const int size = side_size(a, pe.boundary);
            auto& used = pe.boundary == Boundary::P ? p_used : q_used;
            used[static_cast<std::size_t>(pe.from)] = true;
            used[static_cast<std::size_t>(floormod(pe.from + pe.span, size))] = true;
        }
    }
    std::vector<std::pair<Boundary, int>> result;
    for (int v = 0; v < a.m; ++v)
        if (!p_used[static_cast<std::size_t>(v)]) result.emplace_back(Boundary::P, v);
    for (int v = 0; v < a.n; ++v)
        if (!q_used[static_cast<std::size_t>(v)]) result.emplace_back(Boundary::Q, v);
    return result;
}

std::pair<Triangulation, EarRecord> remove_ear(const Triangulation& t, Boundary boundary,
                                               int vertex) {
    const auto& a = t.annulus();
    const int size = side_size(a, boundary);
    const auto all_ears = ears(t);
    if (std::find(all_ears.begin(), all_ears.end(), std::make_pair(boundary, vertex)) ==
        all_ears.end())
        throw DomainError("vertex " + std::to_string(vertex) + " is not an ear");
    if (size - 1 < 1) throw DomainError("removing the ear would empty a boundary");

    const PeripheralArc spanning{boundary, static_cast<int>(floormod(vertex - 1, size)), 2};
    bool removed_spanning = false;
    std::vector<Arc> out;
    for (const Arc& arc : t.arcs()) {
        if (arc == Arc{spanning}) {
            removed_spanning = true;
            continue;
        }
        if (const auto* br = std::get_if<BridgingArc>(&arc)) {
            BridgingArc moved = *br;
            if (boundary == Boundary::P)
                moved.p = static_cast<int>(relabel_after_removal(br->p, vertex, size));
            else
                moved.q = relabel_after_removal(br->q, vertex, size);
            out.push_back(moved);
            continue;
        }
        const auto& pe = std::get<PeripheralArc>(arc);
        if (pe.boundary != boundary) {
            out.push_back(arc);
            continue;
        }
        long long lo = relabel_after_removal(pe.from, vertex, size);
        long long hi = relabel_after_removal(pe.from + pe.span, vertex, size);
        out.push_back(PeripheralArc{boundary, static_cast<int>(floormod(lo, size - 1)),
                                    static_cast<int>(hi - lo)});
    }
    if (!removed_spanning)
        throw InternalError("ear at vertex " + std::to_string(vertex) +
                            " lacked its spanning arc");
    MarkedAnnulus smaller = a;
    (boundary == Boundary::P ? smaller.m : smaller.n) -= 1;
    return {Triangulation(smaller, std::move(out)), EarRecord{boundary, vertex, vertex}};
}

Triangulation insert_ear(const Triangulation& t, const EarRecord& record) {
    const auto& a = t.annulus();
    const int size = side_size(a, record.boundary);
    const int v = record.insertion_position;
    if (v < 0 || v > size)
        throw DomainError("ear insertion position " + std::to_string(v) + " outside [0," +
                          std::to_string(size) + "]");
    std::vector<Arc> out;
    for (const Arc& arc : t.arcs()) {
        if (const auto* br = std::get_if<BridgingArc>(&arc)) {
            BridgingArc moved = *br;
            if (record.boundary == Boundary::P)
                moved.p = static_cast<int>(floormod(relabel_after_insertion(br->p, v, size),
                                                    size + 1));
            else
                moved.q = relabel_after_insertion(br->q, v, size);
            out.push_back(moved);
            continue;
        }
        const auto& pe = std::get<PeripheralArc>(arc);
        if (pe.boundary != record.boundary) {
            out.push_back(arc);
            continue;
        }
        long long lo = relabel_after_insertion(pe.from, v, size);
        long long hi = relabel_after_insertion(pe.from + pe.span, v, size);
        out.push_back(PeripheralArc{record.boundary, static_cast<int>(floormod(lo, size + 1)),
                                    static_cast<int>(hi - lo)});
    }
    out.push_back(PeripheralArc{record.boundary, static_cast<int>(floormod(v - 1, size + 1)), 2});
    MarkedAnnulus larger = a;
    (record.boundary == Boundary::P ? larger.m : larger.n) += 1;
    return Triangulation(larger, std::move(out));
}

Triangulation canonical_form(const Triangulation& t) {
    const auto& a = t.annulus();
    std::optional<std::vector<Arc>> best;
    for (int rot = 0; rot < a.m; ++rot) {
        std::vector<Arc> candidate;
        candidate.reserve(t.arcs().size());
        long long min_q = 0;
        bool have_q = false;
        for (const Arc& arc : t.arcs()) {
            if (const auto* br = std::get_if<BridgingArc>(&arc)) {
                long long p = br->p + rot;
                long long carry = floordiv(p, a.m);
                BridgingArc moved{static_cast<int>(p - carry * a.m), br->q - carry * a.n};
                if (!have_q || moved.q < min_q) {
                    min_q = moved.q;
                    have_q = true;
                }
                candidate.push_back(moved);
            } else {
                const auto& pe = std::get<PeripheralArc>(arc);
                if (pe.boundary == Boundary::P)
                    candidate.push_back(PeripheralArc{
                        Boundary::P, static_cast<int>(floormod(pe.from + rot, a.m)), pe.span});
                else
                    candidate.push_back(pe);
            }
        }
        // Shift the inner labels so the smallest bridging q-lift is zero.
        for (Arc& arc : candidate) {
            if (auto* br = std::get_if<BridgingArc>(&arc))
                br->q -= min_q;
            else if (auto* pe = std::get_if<PeripheralArc>(&arc); pe->boundary == Boundary::Q)
                pe->from = static_cast<int>(floormod(pe->from - min_q, a.n));
        }
        std::sort(candidate.begin(), candidate.end(), arc_less);
        if (!best || std::lexicographical_compare(candidate.begin(), candidate.end(),
                                                  best->begin(), best->end(), arc_less))
            best = std::move(candidate);
    }
    return Triangulation(a, std::move(*best));
}

std::vector<Triangulation> enumerate_bridging(int m, int n, long long twist_min,
                                              long long twist_max) {
    if (m < 1 || n < 1) throw DomainError("enumerate_bridging needs m,n >= 1");
    if (twist_min > twist_max) throw DomainError("empty twist range");
    std::vector<int> word(static_cast<std::size_t>(m + n), 0);
    for (int k = 0; k < n; ++k) word[static_cast<std::size_t>(k)] = 0;  // 0 = Right
    for (int k = n; k < m + n; ++k) word[static_cast<std::size_t>(k)] = 1;  // 1 = Up
    std::sort(word.begin(), word.end());

    std::set<std::vector<Arc>, bool (*)(const std::vector<Arc>&, const std::vector<Arc>&)> seen(
        +[](const std::vector<Arc>& x, const std::vector<Arc>& y) {
            return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), arc_less);
        });
    std::vector<Triangulation> result;
    do {
        for (long long twist = twist_min; twist <= twist_max; ++twist) {
            long long i = 0, j = twist;
            std::vector<Arc> arcs;
            for (int k = 0; k < m + n; ++k) {
                long long carry = floordiv(i, m);
                arcs.push_back(BridgingArc{static_cast<int>(i - carry * m), j - carry * n});
                if (word[static_cast<std::size_t>(k)] == 0)
                    ++j;
                else
                    ++i;
            }
            Triangulation canon = canonical_form(Triangulation(MarkedAnnulus{m, n}, std::move(arcs)));
            if (seen.insert(canon.arcs()).second) result.push_back(std::move(canon));
        }
    } while (std::next_permutation(word.begin(), word.end()));
    std::sort(result.begin(), result.end(), triangulation_less);
    return result;
}

}  // namespace sl2t
