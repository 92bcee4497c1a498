#include <sl2t/errors.hpp>
#include <sl2t/lattice_path.hpp>

#include <cstddef>

namespace sl2t {

BigInt parse_decimal(const std::string& text) {
    if (text.empty()) throw ParseError("empty integer literal");
    std::size_t k = text[0] == '-' ? 1 : 0;
    if (k == text.size()) throw ParseError("bad integer literal: '" + text + "'");
    for (; k < text.size(); ++k) {
        if (text[k] < '0' || text[k] > '9')
            throw ParseError("bad integer literal: '" + text + "'");
    }
    return BigInt(text);
}

void LatticePath::validate() const {
    if (m < 1 || n < 1)
        throw DomainError("periods must satisfy m >= 1 and n >= 1, got m=" + std::to_string(m) +
                          " n=" + std::to_string(n));
    const std::size_t len = static_cast<std::size_t>(m) + static_cast<std::size_t>(n);
    if (steps.size() != len)
        throw DomainError("lattice path needs m+n steps, got " + std::to_string(steps.size()));
    std::size_t ups = 0;
    for (Step s : steps)
        if (s == Step::Up) ++ups;
    if (ups != static_cast<std::size_t>(m))
        throw DomainError("lattice path needs exactly m Up steps and n Right steps");
    if (values.size() != len + 1)
        throw DomainError("lattice path needs m+n+1 values, got " + std::to_string(values.size()));
    for (const BigInt& v : values)
        if (v <= 0) throw DomainError("lattice path values must be positive");
    if (values.front() != values.back())
        throw DomainError("lattice path must close up: values[0] != values[m+n]");
}

std::vector<Position> LatticePath::points() const {
    std::vector<Position> pts;
    pts.reserve(steps.size() + 1);
    Position cur = start;
    pts.push_back(cur);
    for (Step s : steps) {
        if (s == Step::Right)
            ++cur.j;
        else
            ++cur.i;
        pts.push_back(cur);
    }
    return pts;
}

LatticePath unit_path(int m, int n, Position start, std::vector<Step> steps) {
    LatticePath p;
    p.m = m;
    p.n = n;
    p.start = start;
    p.steps = std::move(steps);
    p.values.assign(static_cast<std::size_t>(m) + static_cast<std::size_t>(n) + 1, BigInt(1));
    p.validate();
    return p;
}

}  // namespace sl2t
