#include "frobkern/digit_counter.hpp"

#include <functional>

namespace frobkern {

void DigitEquation::validate() const
{
    if (!is_prime(p)) throw InvalidInput("digit equation: p must be prime");
    if (offsets.empty()) throw InvalidInput("digit equation: needs at least one coefficient");
    for (auto d : offsets) {
        if (d < 0) throw InvalidInput("digit equation: offsets must be >= 0");
    }
    if (constant < 0) throw InvalidInput("digit equation: constant must be >= 0");
    if (target_multiplier < 0) throw InvalidInput("digit equation: target multiplier must be >= 0");
}

CountValue MemoCache::count(const DigitEquation& eq)
{
    std::shared_ptr<Entry> entry;
    {
        std::lock_guard lock(mu_);
        Key key{eq.p, eq.offsets, eq.constant, eq.unit_variable};
        auto it = entries_.find(key);
        if (it == entries_.end()) {
            it = entries_
                     .emplace(std::move(key), std::make_shared<Entry>(eq.p, eq.offsets, eq.constant,
                                                                     eq.unit_variable))
                     .first;
        }
        entry = it->second;
    }
    std::lock_guard lock(entry->mu);
    return entry->counter.count(eq.target_multiplier);
}

std::size_t MemoCache::size() const
{
    std::lock_guard lock(mu_);
    return entries_.size();
}

void MemoCache::clear()
{
    std::lock_guard lock(mu_);
    entries_.clear();
}

MemoCache& MemoCache::shared()
{
    static MemoCache cache;
    return cache;
}

CountValue count_digit_equation(const DigitEquation& eq, MemoCache* cache)
{
    eq.validate();
    if (cache) return cache->count(eq);
    CountCounter counter(eq.p, eq.offsets, eq.constant, eq.unit_variable);
    return counter.count(eq.target_multiplier);
}

DegreeSeries graded_digit_equation(const DigitEquation& eq, std::int64_t weight)
{
    eq.validate();
    if (weight < 1) throw InvalidInput("degree weight must be >= 1");
    GradedCounter counter(eq.p, eq.offsets, eq.constant, eq.unit_variable,
                          policy::Graded{weight});
    return counter.count(eq.target_multiplier);
}

CountValue nested_sum_count(std::int64_t p, const std::vector<std::int64_t>& offsets,
                            std::int64_t target_multiplier)
{
    DigitEquation{p, offsets, 0, target_multiplier, false}.validate();

    std::map<std::pair<std::size_t, std::int64_t>, CountValue> memo;
    std::function<CountValue(std::size_t, std::int64_t)> level =
        [&](std::size_t i, std::int64_t n) -> CountValue {
        if (n == 0) {
            // N_i(0) = 1 only while every offset below is zero.
            for (std::size_t k = 0; k < i; ++k) {
                if (offsets[k] != 0) return 0;
            }
            return 1;
        }
        const std::int64_t d = offsets[i - 1];
        if (d > n) return 0;
        if (i == 1) return 1;
        auto key = std::make_pair(i, n);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        CountValue total = 0;
        for (std::int64_t j = 0; j <= n - d; ++j) total += level(i - 1, checked_mul(j, p));
        memo.emplace(key, total);
        return total;
    };
    return level(offsets.size(), target_multiplier);
}

} // namespace frobkern
