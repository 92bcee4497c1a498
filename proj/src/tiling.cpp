#include <sl2t/tiling.hpp>

#include <algorithm>
#include <sstream>

namespace sl2t {

namespace {

std::string pos_str(long long i, long long j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// Dense block of optional values used while growing the seed into its
// neighborhood.
class Block {
  public:
    Block(long long i_min, long long i_max, long long j_min, long long j_max)
        : i_min_(i_min), i_max_(i_max), j_min_(j_min), j_max_(j_max),
          known_(static_cast<std::size_t>((i_max - i_min + 1) * (j_max - j_min + 1)), false),
          cells_(known_.size()) {}

    bool contains(long long i, long long j) const {
        return i >= i_min_ && i <= i_max_ && j >= j_min_ && j <= j_max_;
    }
    bool known(long long i, long long j) const { return known_[index(i, j)]; }
    const BigInt& get(long long i, long long j) const { return cells_[index(i, j)]; }
    void set(long long i, long long j, BigInt v) {
        std::size_t k = index(i, j);
        if (known_[k]) {
            if (cells_[k] != v)
                throw DomainError("inconsistent seed data at " + pos_str(i, j));
            return;
        }
        known_[k] = true;
        cells_[k] = std::move(v);
    }
    long long i_min() const { return i_min_; }
    long long i_max() const { return i_max_; }
    long long j_min() const { return j_min_; }
    long long j_max() const { return j_max_; }

  private:
    std::size_t index(long long i, long long j) const {
        return static_cast<std::size_t>((i - i_min_) * (j_max_ - j_min_ + 1) + (j - j_min_));
    }
    long long i_min_, i_max_, j_min_, j_max_;
    std::vector<bool> known_;
    std::vector<BigInt> cells_;
};

// Completes one empty corner of a diamond whose other three entries are
// known. Returns false when nothing was fillable at (i,j).
bool try_complete(Block& b, long long i, long long j) {
    if (b.known(i, j)) return false;
    auto k = [&](long long a, long long c) { return b.contains(a, c) && b.known(a, c); };
    auto g = [&](long long a, long long c) -> const BigInt& { return b.get(a, c); };
    BigInt num, den;
    // (i,j) as the lower-left corner: u = (u(i+1,j)*u(i,j+1) - 1) / u(i+1,j+1)
    if (k(i + 1, j) && k(i, j + 1) && k(i + 1, j + 1)) {
        num = g(i + 1, j) * g(i, j + 1) - 1;
        den = g(i + 1, j + 1);
    } else if (k(i - 1, j) && k(i, j - 1) && k(i - 1, j - 1)) {
        // upper-right: u = (u(i,j-1)*u(i-1,j) - 1) / u(i-1,j-1)
        num = g(i, j - 1) * g(i - 1, j) - 1;
        den = g(i - 1, j - 1);
    } else if (k(i - 1, j) && k(i, j + 1) && k(i - 1, j + 1)) {
        // upper-left: u = (1 + u(i-1,j)*u(i,j+1)) / u(i-1,j+1)
        num = 1 + g(i - 1, j) * g(i, j + 1);
        den = g(i - 1, j + 1);
    } else if (k(i + 1, j) && k(i, j - 1) && k(i + 1, j - 1)) {
        // lower-right: u = (1 + u(i,j-1)*u(i+1,j)) / u(i+1,j-1)
        num = 1 + g(i, j - 1) * g(i + 1, j);
        den = g(i + 1, j - 1);
    } else {
        return false;
    }
    auto q = exact_div(num, den);
    if (!q)
        throw DomainError("seed does not extend integrally at " + pos_str(i, j));
    if (*q <= 0)
        throw DomainError("seed does not extend positively at " + pos_str(i, j));
    b.set(i, j, std::move(*q));
    return true;
}

}  // namespace

Window::Window(long long i_min, long long i_max, long long j_min, long long j_max)
    : i_min_(i_min), i_max_(i_max), j_min_(j_min), j_max_(j_max) {
    if (i_min > i_max || j_min > j_max) throw DomainError("empty window bounds");
    cells_.resize(static_cast<std::size_t>(rows() * cols()));
}

BigInt& Window::at(long long i, long long j) {
    if (!contains(i, j)) throw DomainError("window access out of bounds at " + pos_str(i, j));
    return cells_[static_cast<std::size_t>((i - i_min_) * cols() + (j - j_min_))];
}

const BigInt& Window::at(long long i, long long j) const {
    return const_cast<Window&>(*this).at(i, j);
}

bool VerificationReport::all_passed() const {
    return std::all_of(conditions.begin(), conditions.end(),
                       [](const ConditionCheck& c) { return c.passed; });
}

PeriodicTiling::PeriodicTiling(LatticePath seed)
    : seed_(std::move(seed)), base_(0, 0, 0, 0), cache_(std::make_shared<Cache>()) {
    seed_.validate();
    m_ = seed_.m;
    n_ = seed_.n;
    base_i0_ = seed_.start.i;
    base_j0_ = seed_.start.j;

    Block block(base_i0_ - 1, base_i0_ + m_ + 1, base_j0_ - 1, base_j0_ + n_ + 1);
    // Seed the block with every periodic copy of the path that meets it.
    const auto pts = seed_.points();
    for (long long k = -3; k <= 3; ++k) {
        for (std::size_t t = 0; t < pts.size(); ++t) {
            long long i = pts[t].i + k * m_, j = pts[t].j + k * n_;
            if (block.contains(i, j)) block.set(i, j, seed_.values[t]);
        }
    }
    // Grow by diamond completion, mirroring each new value to its periodic
    // copies, until the block is full.
    bool progress = true;
    while (progress) {
        progress = false;
        for (long long i = block.i_min(); i <= block.i_max(); ++i) {
            for (long long j = block.j_min(); j <= block.j_max(); ++j) {
                if (!try_complete(block, i, j)) continue;
                progress = true;
                for (long long k = -3; k <= 3; ++k) {
                    long long ci = i + k * m_, cj = j + k * n_;
                    if (k != 0 && block.contains(ci, cj)) block.set(ci, cj, block.get(i, j));
                }
            }
        }
    }
    Window filled(block.i_min(), block.i_max(), block.j_min(), block.j_max());
    for (long long i = block.i_min(); i <= block.i_max(); ++i)
        for (long long j = block.j_min(); j <= block.j_max(); ++j) {
            if (!block.known(i, j))
                throw InternalError("seed block fill stalled at " + pos_str(i, j));
            filled.at(i, j) = block.get(i, j);
        }
    base_ = std::move(filled);

    row_quiddity_.resize(static_cast<std::size_t>(m_));
    for (long long i = base_i0_; i < base_i0_ + m_; ++i) {
        BigInt num = base_.at(i - 1, base_j0_) + base_.at(i + 1, base_j0_);
        auto q = exact_div(num, base_.at(i, base_j0_));
        if (!q || *q <= 0) throw InternalError("row quiddity not a positive integer at row " +
                                               std::to_string(i));
        row_quiddity_[floormod(i, m_)] = std::move(*q);
    }
    col_quiddity_.resize(static_cast<std::size_t>(n_));
    for (long long j = base_j0_; j < base_j0_ + n_; ++j) {
        BigInt num = base_.at(base_i0_, j - 1) + base_.at(base_i0_, j + 1);
        auto q = exact_div(num, base_.at(base_i0_, j));
        if (!q || *q <= 0) throw InternalError("column quiddity not a positive integer at column " +
                                               std::to_string(j));
        col_quiddity_[floormod(j, n_)] = std::move(*q);
    }

    // Tameness on the freshly built block: every adjacent 3x3 determinant
    // vanishes.
    for (long long i = base_.i_min(); i + 2 <= base_.i_max(); ++i)
        for (long long j = base_.j_min(); j + 2 <= base_.j_max(); ++j) {
            const BigInt a = base_.at(i, j), b = base_.at(i, j + 1), c = base_.at(i, j + 2);
            const BigInt d = base_.at(i + 1, j), e = base_.at(i + 1, j + 1),
                         f = base_.at(i + 1, j + 2);
            const BigInt g = base_.at(i + 2, j), h = base_.at(i + 2, j + 1),
                         k = base_.at(i + 2, j + 2);
            BigInt det = a * (e * k - f * h) - b * (d * k - f * g) + c * (d * h - e * g);
            if (det != 0) throw InternalError("adjacent 3x3 determinant nonzero at " + pos_str(i, j));
        }
}

std::pair<BigInt, BigInt> PeriodicTiling::anchor_pair(long long i) const {
    const long long c = base_j0_;
    if (i >= base_.i_min() && i <= base_.i_max())
        return {base_.at(i, c), base_.at(i, c + 1)};
    // Walk the row recurrence u(i+1) = a_i u(i) - u(i-1) from the block edge.
    if (i > base_.i_max()) {
        long long r = base_.i_max();
        BigInt prev0 = base_.at(r - 1, c), cur0 = base_.at(r, c);
        BigInt prev1 = base_.at(r - 1, c + 1), cur1 = base_.at(r, c + 1);
        while (r < i) {
            BigInt next0 = quiddity_at_row(r) * cur0 - prev0;
            BigInt next1 = quiddity_at_row(r) * cur1 - prev1;
            prev0 = std::move(cur0);
            cur0 = std::move(next0);
            prev1 = std::move(cur1);
            cur1 = std::move(next1);
            ++r;
        }
        return {cur0, cur1};
    }
    long long r = base_.i_min();
    BigInt cur0 = base_.at(r, c), above0 = base_.at(r + 1, c);
    BigInt cur1 = base_.at(r, c + 1), above1 = base_.at(r + 1, c + 1);
    while (r > i) {
        BigInt below0 = quiddity_at_row(r) * cur0 - above0;
        BigInt below1 = quiddity_at_row(r) * cur1 - above1;
        above0 = std::move(cur0);
        cur0 = std::move(below0);
        above1 = std::move(cur1);
        cur1 = std::move(below1);
        --r;
    }
    return {cur0, cur1};
}

BigInt PeriodicTiling::compute_entry(long long i, long long j) const {
    auto [v0, v1] = anchor_pair(i); // u(i, j0), u(i, j0+1)
    const long long c = base_j0_;
    if (j == c) return v0;
    if (j == c + 1) return v1;
    if (j > c + 1) {
        long long t = c + 1;
        BigInt prev = std::move(v0), cur = std::move(v1);
        while (t < j) {
            BigInt next = quiddity_at_col(t) * cur - prev;
            prev = std::move(cur);
            cur = std::move(next);
            ++t;
        }
        return cur;
    }
    long long t = c;
    BigInt cur = std::move(v0), right = std::move(v1);
    while (t > j) {
        BigInt left = quiddity_at_col(t) * cur - right;
        right = std::move(cur);
        cur = std::move(left);
        --t;
    }
    return cur;
}

BigInt PeriodicTiling::entry(long long i, long long j) const {
    if (base_.contains(i, j)) return base_.at(i, j);
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        auto it = cache_->entries.find({i, j});
        if (it != cache_->entries.end()) return it->second;
    }
    BigInt v = compute_entry(i, j);
    if (v <= 0)
        throw InternalError("recurrence produced a non-positive entry at " + pos_str(i, j));
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        cache_->entries.emplace(std::make_pair(i, j), v);
    }
    return v;
}

Window PeriodicTiling::window(long long i_min, long long i_max, long long j_min,
                              long long j_max) const {
    Window w(i_min, i_max, j_min, j_max);
    for (long long i = i_min; i <= i_max; ++i) {
        auto [v0, v1] = anchor_pair(i);
        const long long c = base_j0_;
        // Sweep right from the anchor columns.
        if (j_max >= c) {
            BigInt prev = v0, cur = v1;
            if (w.contains(i, c)) w.at(i, c) = prev;
            if (w.contains(i, c + 1)) w.at(i, c + 1) = cur;
            for (long long t = c + 1; t < j_max; ++t) {
                BigInt next = quiddity_at_col(t) * cur - prev;
                prev = std::move(cur);
                cur = std::move(next);
                if (w.contains(i, t + 1)) w.at(i, t + 1) = cur;
            }
        }
        // Sweep left.
        if (j_min < c) {
            BigInt cur = v0, right = v1;
            for (long long t = c; t > j_min; --t) {
                BigInt left = quiddity_at_col(t) * cur - right;
                right = std::move(cur);
                cur = std::move(left);
                if (w.contains(i, t - 1)) w.at(i, t - 1) = cur;
            }
        }
    }
    for (long long i = i_min; i <= i_max; ++i)
        for (long long j = j_min; j <= j_max; ++j)
            if (w.at(i, j) <= 0)
                throw InternalError("recurrence produced a non-positive entry at " + pos_str(i, j));
    return w;
}

PeriodicTiling PeriodicTiling::shifted(long long di, long long dj) const {
    LatticePath moved = seed_;
    moved.start.i += di;
    moved.start.j += dj;
    return PeriodicTiling(std::move(moved));
}

bool PeriodicTiling::operator==(const PeriodicTiling& other) const {
    if (m_ != other.m_ || n_ != other.n_) return false;
    if (row_quiddity_ != other.row_quiddity_ || col_quiddity_ != other.col_quiddity_) return false;
    for (long long i = 0; i <= 1; ++i)
        for (long long j = 0; j <= 1; ++j)
            if (entry(i, j) != other.entry(i, j)) return false;
    return true;
}

VerificationReport verify_window(const Window& w, int m, int n) {
    VerificationReport report;

    ConditionCheck positivity{"positivity", true, std::nullopt, ""};
    for (long long i = w.i_min(); i <= w.i_max() && positivity.passed; ++i)
        for (long long j = w.j_min(); j <= w.j_max(); ++j)
            if (w.at(i, j) <= 0) {
                positivity.passed = false;
                positivity.first_failure = Position{i, j};
                positivity.detail = "entry " + to_decimal(w.at(i, j)) + " at " + pos_str(i, j);
                break;
            }
    report.conditions.push_back(std::move(positivity));

    ConditionCheck minors{"unit-minors", true, std::nullopt, ""};
    for (long long i = w.i_min(); i + 1 <= w.i_max() && minors.passed; ++i)
        for (long long j = w.j_min(); j + 1 <= w.j_max(); ++j) {
            BigInt det = w.at(i + 1, j) * w.at(i, j + 1) - w.at(i, j) * w.at(i + 1, j + 1);
            if (det != 1) {
                minors.passed = false;
                minors.first_failure = Position{i, j};
                minors.detail = "minor " + to_decimal(det) + " at " + pos_str(i, j);
                break;
            }
        }
    report.conditions.push_back(std::move(minors));

    ConditionCheck tame{"tameness", true, std::nullopt, ""};
    for (long long i = w.i_min(); i + 2 <= w.i_max() && tame.passed; ++i)
        for (long long j = w.j_min(); j + 2 <= w.j_max(); ++j) {
            const BigInt &a = w.at(i, j), &b = w.at(i, j + 1), &c = w.at(i, j + 2);
            const BigInt &d = w.at(i + 1, j), &e = w.at(i + 1, j + 1), &f = w.at(i + 1, j + 2);
            const BigInt &g = w.at(i + 2, j), &h = w.at(i + 2, j + 1), &k = w.at(i + 2, j + 2);
            BigInt det = a * (e * k - f * h) - b * (d * k - f * g) + c * (d * h - e * g);
            if (det != 0) {
                tame.passed = false;
                tame.first_failure = Position{i, j};
                tame.detail = "3x3 determinant " + to_decimal(det) + " at " + pos_str(i, j);
                break;
            }
        }
    report.conditions.push_back(std::move(tame));

    ConditionCheck periodic{"periodicity", true, std::nullopt, ""};
    if (m >= 1 && n >= 1) {
        for (long long i = w.i_min(); i + m <= w.i_max() && periodic.passed; ++i)
            for (long long j = w.j_min(); j + n <= w.j_max(); ++j)
                if (w.at(i, j) != w.at(i + m, j + n)) {
                    periodic.passed = false;
                    periodic.first_failure = Position{i, j};
                    periodic.detail = "entry differs from its (m,n)-translate at " + pos_str(i, j);
                    break;
                }
    } else {
        periodic.passed = false;
        periodic.detail = "periods must be positive";
    }
    report.conditions.push_back(std::move(periodic));

    return report;
}

std::vector<std::pair<int, int>> detect_periods(const Window& w, int search_bound) {
    if (search_bound < 1) throw DomainError("search bound must be at least 1");
    std::vector<std::pair<int, int>> found;
    bool any_testable = false;
    for (int mm = 1; mm <= search_bound; ++mm) {
        for (int nn = 1; nn <= search_bound; ++nn) {
            if (w.i_min() + mm > w.i_max() || w.j_min() + nn > w.j_max()) continue;
            any_testable = true;
            bool ok = true;
            for (long long i = w.i_min(); i + mm <= w.i_max() && ok; ++i)
                for (long long j = w.j_min(); j + nn <= w.j_max(); ++j)
                    if (w.at(i, j) != w.at(i + mm, j + nn)) {
                        ok = false;
                        break;
                    }
            if (ok) found.emplace_back(mm, nn);
        }
    }
    if (!any_testable)
        throw DomainError("window too small: no (m,n) candidate within the bound is testable");
    return found;
}

}  // namespace sl2t
