#pragma once

#include <sl2t/bigint.hpp>

#include <compare>
#include <vector>

namespace sl2t {

// Grid position. Row index i grows bottom to top, column index j left to
// right.
struct Position {
    long long i = 0;
    long long j = 0;
    auto operator<=>(const Position&) const = default;
};

enum class Step : unsigned char { Right, Up };

// A monotone staircase of m+n steps from `start` to `start + (m, n)`, with a
// positive integer attached to each of its m+n+1 points. The first and last
// values agree, so the path closes up under the translation (i,j) ->
// (i+m, j+n); it is the finite seed from which a periodic tiling is grown.
struct LatticePath {
    int m = 0;
    int n = 0;
    Position start{};
    std::vector<Step> steps;    // length m+n, exactly n Right and m Up
    std::vector<BigInt> values; // length m+n+1, values.front() == values.back()

    void validate() const; // throws DomainError
    std::vector<Position> points() const;

    bool operator==(const LatticePath&) const = default;
};

// All-1 staircase with the given step word.
LatticePath unit_path(int m, int n, Position start, std::vector<Step> steps);

}  // namespace sl2t
