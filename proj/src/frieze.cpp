#include <sl2t/frieze.hpp>

#include <string>

namespace sl2t {

void QuidditySequence::validate() const {
    if (period < 1) throw DomainError("quiddity period must be at least 1");
    if (values.size() != static_cast<std::size_t>(period))
        throw DomainError("quiddity needs exactly `period` values");
    for (const BigInt& v : values)
        if (v < 1) throw DomainError("quiddity values must be positive");
}

InfiniteFriezePattern::InfiniteFriezePattern(QuidditySequence quiddity)
    : quiddity_(std::move(quiddity)), memo_(std::make_shared<Memo>()) {
    quiddity_.validate();
    memo_->rows.assign(static_cast<std::size_t>(quiddity_.period), {});
    // Positivity shows within a couple of periods when it fails at all; the
    // per-entry check below keeps lazily computed values honest regardless.
    for (long long k = 0; k < quiddity_.period; ++k)
        entry(k, k + 2 * quiddity_.period + 3);
}

BigInt InfiniteFriezePattern::entry(long long k, long long l) const {
    if (l < k) throw DomainError("frieze entries are defined for l >= k");
    const int p = quiddity_.period;
    const std::size_t row = static_cast<std::size_t>(floormod(k, p));
    const std::size_t want = static_cast<std::size_t>(l - k);
    std::lock_guard<std::mutex> lock(memo_->mutex);
    auto& vals = memo_->rows[row];
    if (vals.empty()) {
        vals.push_back(BigInt(0));  // v(k,k)
        vals.push_back(BigInt(1));  // v(k,k+1)
    }
    const long long base = floormod(k, p);
    while (vals.size() <= want) {
        const long long l_cur = base + static_cast<long long>(vals.size()) - 1;
        const BigInt& a = quiddity_.values[static_cast<std::size_t>(floormod(l_cur, p))];
        BigInt next = a * vals[vals.size() - 1] - vals[vals.size() - 2];
        if (next <= 0)
            throw DomainError("quiddity does not define a positive frieze: v(k,k+" +
                              std::to_string(vals.size()) + ") = " + to_decimal(next));
        vals.push_back(std::move(next));
    }
    return vals[want];
}

QuidditySequence row_quiddity(const PeriodicTiling& t) {
    return QuidditySequence{t.m(), t.row_quiddity()};
}

QuidditySequence col_quiddity(const PeriodicTiling& t) {
    return QuidditySequence{t.n(), t.col_quiddity()};
}

BigInt frieze_entry_from_tiling(const PeriodicTiling& t, Axis side, long long k, long long l) {
    if (l < k) throw DomainError("frieze entries are defined for l >= k");
    if (side == Axis::Row)
        return t.entry(k, 1) * t.entry(l, 0) - t.entry(k, 0) * t.entry(l, 1);
    return t.entry(1, k) * t.entry(0, l) - t.entry(0, k) * t.entry(1, l);
}

InfiniteFriezePattern frieze_from_quiddity(const QuidditySequence& q) {
    return InfiniteFriezePattern(q);
}

BigInt growth(const PeriodicTiling& t) {
    BigInt num = t.entry(t.m(), 0) + t.entry(0, t.n());
    auto g = exact_div(num, t.entry(0, 0));
    if (!g) throw InternalError("growth coefficient is not an integer");
    return *g;
}

BigInt growth_from_frieze(const InfiniteFriezePattern& f) {
    const int p = f.period();
    return f.entry(0, p + 1) - f.entry(1, p);
}

Monodromy monodromy(const QuidditySequence& q) {
    q.validate();
    Monodromy m{1, 0, 0, 1};
    for (const BigInt& a : q.values) {
        // m *= [[a, -1], [1, 0]]
        Monodromy next{m.a * a + m.b, -m.a, m.c * a + m.d, -m.c};
        m = std::move(next);
    }
    if (m.det() != 1) throw InternalError("monodromy determinant is not 1");
    return m;
}

}  // namespace sl2t
