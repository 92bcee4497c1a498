#pragma once

// Quiddity sequences, the infinite frieze patterns they generate, the
// determinant formula for pattern entries, growth coefficients, and
// monodromy matrices.

#include <sl2t/bigint.hpp>
#include <sl2t/bijection.hpp>
#include <sl2t/tiling.hpp>

#include <memory>
#include <mutex>
#include <vector>

namespace sl2t {

struct QuidditySequence {
    int period = 0;
    std::vector<BigInt> values;  // all >= 1, values[k] attached to line k mod period

    void validate() const;
    bool operator==(const QuidditySequence&) const = default;
};

// Table v(k,l) for l >= k with v(k,k) = 0, v(k,k+1) = 1 and the three-term
// recurrence v(k,l+1) = a_l * v(k,l) - v(k,l-1), so that v(k,k+2) = a_{k+1}.
// Entries are memoized per (k mod period, l-k).
class InfiniteFriezePattern {
  public:
    // Throws DomainError when the quiddity does not define a positive
    // pattern (some v(k,l) <= 0 for l > k).
    explicit InfiniteFriezePattern(QuidditySequence quiddity);

    const QuidditySequence& quiddity() const { return quiddity_; }
    int period() const { return quiddity_.period; }
    BigInt entry(long long k, long long l) const;

  private:
    struct Memo {
        std::mutex mutex;
        std::vector<std::vector<BigInt>> rows;  // rows[k mod p][l-k]
    };
    QuidditySequence quiddity_;
    std::shared_ptr<Memo> memo_;
};

QuidditySequence row_quiddity(const PeriodicTiling& t);
QuidditySequence col_quiddity(const PeriodicTiling& t);

// Pattern entry read off the tiling:
//   Row side:    v(k,l) = u(k,j+1)*u(l,j) - u(k,j)*u(l,j+1)   (any j)
//   Column side: v(k,l) = u(i+1,k)*u(i,l) - u(i,k)*u(i+1,l)   (any i)
// Requires l >= k.
BigInt frieze_entry_from_tiling(const PeriodicTiling& t, Axis side, long long k, long long l);

InfiniteFriezePattern frieze_from_quiddity(const QuidditySequence& q);

// Growth coefficient (u(i+m,j) + u(i,j+n)) / u(i,j); an integer independent
// of (i,j).
BigInt growth(const PeriodicTiling& t);

// v(i, i+p+1) - v(i+1, i+p) for the pattern's period p; independent of i.
BigInt growth_from_frieze(const InfiniteFriezePattern& f);

struct Monodromy {
    BigInt a, b, c, d;  // [[a, b], [c, d]]
    BigInt trace() const { return a + d; }
    BigInt det() const { return a * d - b * c; }
    bool operator==(const Monodromy&) const = default;
};

// Product over one period, in index order, of the matrices [[a_k, -1],[1,0]].
// Its trace equals the growth of the pattern.
Monodromy monodromy(const QuidditySequence& q);

}  // namespace sl2t
