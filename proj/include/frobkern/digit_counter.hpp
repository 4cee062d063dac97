#pragma once

// Memoized digit recursion for equations of the form
//
//     t [+ c_0] + sum_{i=1..r} (c_i + d_i) p^i = N p^r,   c_i >= 0.
//
// N_k(x) counts solutions of the truncated equation whose right-hand side is
// x p^k. Level 0 is [x == t] (or [x >= t] with a free c_0), and
//
//     N_k(x) = sum_{j=0}^{x - d_k} N_{k-1}(j p)      (0 when x < d_k).
//
// Each level keeps a lazily extended table of the prefix sums
// T_k(y) = sum_{j<=y} N_k(j p), so N_{k+1}(x) = T_k(x - d_{k+1}) is O(1)
// once filled. A graded variant carries a polynomial in the total degree of
// the c_i instead of a plain count.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "frobkern/params.hpp"

namespace frobkern {

struct DigitEquation {
    std::int64_t p = 3;
    std::vector<std::int64_t> offsets;  // d_1 .. d_r
    std::int64_t constant = 0;          // t
    std::int64_t target_multiplier = 0; // N
    bool unit_variable = false;         // free c_0 with weight p^0

    std::size_t r() const { return offsets.size(); }
    void validate() const;
};

/// Degree-indexed counts: entry d is the number of solutions of degree d.
using DegreeSeries = std::vector<CountValue>;

namespace policy {

struct Plain {
    using value_type = CountValue;
    static value_type zero() { return 0; }
    value_type unit_term(std::int64_t /*excess*/) const { return 1; }
    void shift(value_type&) const {}
    static void accumulate(value_type& acc, const value_type& v) { acc += v; }
};

/// Every c_i (and c_0) contributes `weight` to the degree.
struct Graded {
    using value_type = DegreeSeries;
    std::int64_t weight = 1;

    static value_type zero() { return {}; }
    value_type unit_term(std::int64_t excess) const
    {
        value_type v(static_cast<std::size_t>(excess * weight) + 1);
        v.back() = 1;
        return v;
    }
    void shift(value_type& v) const
    {
        if (!v.empty()) v.insert(v.begin(), static_cast<std::size_t>(weight), CountValue(0));
    }
    static void accumulate(value_type& acc, const value_type& v)
    {
        if (acc.size() < v.size()) acc.resize(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) acc[i] += v[i];
    }
};

} // namespace policy

/// Upper bound on entries held by all level tables of one counter. Keeps a
/// single counter to a few hundred MB even with big-integer entries.
inline constexpr std::int64_t kMaxTableEntries = std::int64_t{1} << 22;

template <class Policy>
class DigitCounter {
public:
    using value_type = typename Policy::value_type;

    DigitCounter(std::int64_t p, std::vector<std::int64_t> offsets, std::int64_t constant,
                 bool unit_variable, Policy policy = {})
        : p_(p), offsets_(std::move(offsets)), constant_(constant), unit_(unit_variable),
          policy_(policy), tables_(offsets_.size())
    {
    }

    /// Number of solutions with right-hand side N p^r.
    value_type count(std::int64_t target_multiplier)
    {
        return level(offsets_.size(), target_multiplier);
    }

    /// N_k(x).
    value_type level(std::size_t k, std::int64_t x)
    {
        if (x < 0) return Policy::zero();
        if (k == 0) {
            if (unit_) return x >= constant_ ? policy_.unit_term(x - constant_) : Policy::zero();
            return x == constant_ ? policy_.unit_term(0) : Policy::zero();
        }
        const std::int64_t d = offsets_[k - 1];
        if (x < d) return Policy::zero();
        return prefix(k - 1, x - d);
    }

    std::size_t table_entries() const
    {
        std::size_t total = 0;
        for (const auto& t : tables_) total += t.size();
        return total;
    }

private:
    const value_type& prefix(std::size_t j, std::int64_t y)
    {
        auto& table = tables_[j];
        const auto have = static_cast<std::int64_t>(table.size());
        if (y >= have && (y >= kMaxTableEntries || entries_ + (y + 1 - have) > kMaxTableEntries)) {
            throw TooLarge("digit recursion tables exceed entry limit");
        }
        while (static_cast<std::int64_t>(table.size()) <= y) {
            if (++entries_ > kMaxTableEntries) throw TooLarge("digit recursion tables exceed entry limit");
            const auto i = static_cast<std::int64_t>(table.size());
            value_type next = Policy::zero();
            if (i > 0) {
                next = table.back();
                policy_.shift(next);
            }
            Policy::accumulate(next, level(j, checked_mul(i, p_)));
            // level() may not touch tables_[j]; it only reaches lower levels.
            table.push_back(std::move(next));
        }
        return table[static_cast<std::size_t>(y)];
    }

    std::int64_t p_;
    std::vector<std::int64_t> offsets_;
    std::int64_t constant_;
    bool unit_;
    Policy policy_;
    std::vector<std::vector<value_type>> tables_;
    std::int64_t entries_ = 0;
};

using CountCounter = DigitCounter<policy::Plain>;
using GradedCounter = DigitCounter<policy::Graded>;

/// Counters keyed by (p, offsets, t, unit). Safe for concurrent use: the map
/// and each counter are guarded separately.
class MemoCache {
public:
    CountValue count(const DigitEquation& eq);

    std::size_t size() const;
    void clear();

    /// Process-wide cache used when callers opt into sharing.
    static MemoCache& shared();

private:
    struct Entry {
        std::mutex mu;
        CountCounter counter;
        Entry(std::int64_t p, std::vector<std::int64_t> d, std::int64_t t, bool u)
            : counter(p, std::move(d), t, u)
        {
        }
    };
    using Key = std::tuple<std::int64_t, std::vector<std::int64_t>, std::int64_t, bool>;

    mutable std::mutex mu_;
    std::map<Key, std::shared_ptr<Entry>> entries_;
};

/// Exact number of solutions of `eq`. Uses `cache` when given, otherwise a
/// counter scoped to this call.
CountValue count_digit_equation(const DigitEquation& eq, MemoCache* cache = nullptr);

/// Degree distribution of the solutions of `eq`, where each c_i (i >= 1, and
/// c_0 when present) contributes `weight`.
DegreeSeries graded_digit_equation(const DigitEquation& eq, std::int64_t weight);

/// The N_i recursion evaluated literally: one memo entry per (level, x), and
/// each entry sums its full range of lower-level values. No constant term.
/// Kept as the reference route for the prefix-table counter.
CountValue nested_sum_count(std::int64_t p, const std::vector<std::int64_t>& offsets,
                            std::int64_t target_multiplier);

} // namespace frobkern
