#include "frobkern/oracle.hpp"

#include <numeric>

#include <omp.h>

namespace frobkern {

namespace {

struct Variable {
    std::int64_t coef;   // coefficient in the doubled equation
    std::int64_t bound;  // inclusive
    std::int64_t weight; // contribution to the cohomological degree
};

struct Box {
    std::vector<Variable> vars;
    std::int64_t constant = 0;
    std::int64_t target = 0;
    bool empty = false;
};

// Layout: [a0?] a_1..a_r [b_1..b_r]
Box classical_box(const CountParams& params)
{
    params.validate();
    Box box;
    const std::int64_t pr = checked_pow(params.p, params.r);
    box.constant = params.m;
    box.target = checked_mul(params.n, pr);
    // Partial sums stay below (2r + 2) * target.
    checked_mul(box.target, 2 * params.r + 2);
    const std::int64_t slack = box.target - box.constant;
    box.empty = slack < 0;
    const std::int64_t s = std::max<std::int64_t>(slack, 0);
    for (std::int64_t i = 1; i <= params.r; ++i) {
        const std::int64_t coef = params.p == 2 ? checked_pow(2, i) : 2 * checked_pow(params.p, i);
        box.vars.push_back({coef, s / coef, params.p == 2 ? 1 : 2});
    }
    if (params.p != 2) {
        for (std::int64_t j = 1; j <= params.r; ++j) {
            box.vars.push_back({2 * checked_pow(params.p, j - 1), 1, 1});
        }
    }
    return box;
}

Box quantum_box(std::int64_t p, std::int64_t r, std::int64_t n)
{
    const CountParams params{p, r, 0, n};
    params.validate();
    if (p == 2) throw InvalidInput("quantum oracle requires p odd");
    Box box;
    box.target = checked_mul(n, checked_pow(p, r));
    checked_mul(box.target, 2 * r + 3);
    box.vars.push_back({2, box.target / 2, 0});
    for (std::int64_t i = 1; i <= r; ++i) {
        const std::int64_t coef = 2 * checked_pow(p, i);
        box.vars.push_back({coef, box.target / coef, 2});
    }
    for (std::int64_t j = 1; j <= r; ++j) box.vars.push_back({2 * checked_pow(p, j - 1), 1, 1});
    return box;
}

CountValue box_size(const Box& box)
{
    if (box.empty) return 0;
    CountValue size = 1;
    for (const auto& v : box.vars) size *= v.bound + 1;
    return size;
}

void check_threshold(const Box& box, const OracleOptions& opts)
{
    if (opts.force) return;
    const auto size = box_size(box);
    if (size > kOracleForceThreshold) {
        throw OracleRefused("oracle search box has " + size.str() + " candidates (limit " +
                            std::to_string(kOracleForceThreshold) + "); pass force to run anyway");
    }
}

template <class Leaf>
void walk(const Box& box, std::size_t level, std::int64_t lhs, std::vector<std::int64_t>& vals,
          Leaf& leaf)
{
    if (level == box.vars.size()) {
        if (lhs == box.target) leaf(vals);
        return;
    }
    const auto& var = box.vars[level];
    // Coefficients are positive, so once the left side overshoots, larger v only make it worse.
    for (std::int64_t v = 0; v <= var.bound && lhs + v * var.coef <= box.target; ++v) {
        vals[level] = v;
        walk(box, level + 1, lhs + v * var.coef, vals, leaf);
    }
}

// Runs `make_leaf()`-produced visitors over the box, splitting the outermost
// variable across threads when requested. Each thread owns its own leaf.
template <class LeafFactory, class Merge>
void sweep(const Box& box, const OracleOptions& opts, LeafFactory make_leaf, Merge merge)
{
    if (box.empty) return;
    const auto& outer = box.vars.front();
    if (!opts.parallel) {
        auto leaf = make_leaf();
        std::vector<std::int64_t> vals(box.vars.size());
        walk(box, 0, box.constant, vals, leaf);
        merge(leaf);
        return;
    }
#pragma omp parallel
    {
        auto leaf = make_leaf();
        std::vector<std::int64_t> vals(box.vars.size());
#pragma omp for schedule(dynamic)
        for (std::int64_t v = 0; v <= outer.bound; ++v) {
            if (box.constant + v * outer.coef > box.target) continue;
            vals[0] = v;
            walk(box, 1, box.constant + v * outer.coef, vals, leaf);
        }
#pragma omp critical
        merge(leaf);
    }
}

struct Counter {
    std::uint64_t count = 0;
    void operator()(const std::vector<std::int64_t>&) { ++count; }
};

struct Histogram {
    const Box* box;
    std::vector<std::uint64_t> buckets;
    void operator()(const std::vector<std::int64_t>& vals)
    {
        std::int64_t d = 0;
        for (std::size_t i = 0; i < vals.size(); ++i) d += vals[i] * box->vars[i].weight;
        if (buckets.size() <= static_cast<std::size_t>(d)) buckets.resize(d + 1, 0);
        ++buckets[d];
    }
};

CountValue count_box(const Box& box, const OracleOptions& opts)
{
    check_threshold(box, opts);
    std::uint64_t total = 0;
    sweep(box, opts, [] { return Counter{}; }, [&](const Counter& c) { total += c.count; });
    return total;
}

std::vector<CountValue> histogram_box(const Box& box, const OracleOptions& opts)
{
    check_threshold(box, opts);
    std::vector<std::uint64_t> merged;
    sweep(
        box, opts, [&] { return Histogram{&box, {}}; },
        [&](const Histogram& h) {
            if (merged.size() < h.buckets.size()) merged.resize(h.buckets.size(), 0);
            for (std::size_t i = 0; i < h.buckets.size(); ++i) merged[i] += h.buckets[i];
        });
    std::vector<CountValue> out(merged.begin(), merged.end());
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

SolutionTuple to_tuple(const std::vector<std::int64_t>& vals, std::size_t a_begin, std::size_t r,
                       bool has_b, bool has_a0)
{
    SolutionTuple s;
    if (has_a0) s.a0 = vals[0];
    s.a.assign(vals.begin() + a_begin, vals.begin() + a_begin + r);
    if (has_b) s.b.assign(vals.begin() + a_begin + r, vals.begin() + a_begin + 2 * r);
    return s;
}

} // namespace

std::int64_t SolutionTuple::degree(std::int64_t p) const
{
    const std::int64_t sa = std::accumulate(a.begin(), a.end(), std::int64_t{0});
    const std::int64_t sb = std::accumulate(b.begin(), b.end(), std::int64_t{0});
    return p == 2 ? sa : 2 * sa + sb;
}

bool satisfies_classical(const SolutionTuple& s, const CountParams& params)
{
    const auto r = static_cast<std::size_t>(params.r);
    if (s.a.size() != r || s.a0) return false;
    CountValue lhs = params.m;
    if (params.p == 2) {
        if (!s.b.empty()) return false;
        for (std::size_t i = 0; i < r; ++i) lhs += big_pow(2, i + 1) * s.a[i];
        return lhs == big_pow(2, params.r) * params.n;
    }
    if (s.b.size() != r) return false;
    for (std::size_t i = 0; i < r; ++i) {
        if (s.a[i] < 0 || s.b[i] < 0 || s.b[i] > 1) return false;
        lhs += 2 * big_pow(params.p, i + 1) * s.a[i];
        lhs += 2 * big_pow(params.p, i) * s.b[i];
    }
    return lhs == big_pow(params.p, params.r) * params.n;
}

bool satisfies_quantum(const SolutionTuple& s, std::int64_t p, std::int64_t r, std::int64_t n)
{
    const auto rr = static_cast<std::size_t>(r);
    if (!s.a0 || *s.a0 < 0 || s.a.size() != rr || s.b.size() != rr) return false;
    CountValue lhs = 2 * CountValue(*s.a0);
    for (std::size_t i = 0; i < rr; ++i) {
        if (s.a[i] < 0 || s.b[i] < 0 || s.b[i] > 1) return false;
        lhs += 2 * big_pow(p, i + 1) * s.a[i];
        lhs += 2 * big_pow(p, i) * s.b[i];
    }
    return lhs == big_pow(p, r) * n;
}

CountValue classical_box_size(const CountParams& params) { return box_size(classical_box(params)); }

CountValue quantum_box_size(std::int64_t p, std::int64_t r, std::int64_t n)
{
    return box_size(quantum_box(p, r, n));
}

std::vector<SolutionTuple> enumerate_solutions(const CountParams& params, OracleOptions opts)
{
    const Box box = classical_box(params);
    check_threshold(box, opts);
    std::vector<SolutionTuple> out;
    if (box.empty) return out;
    const auto r = static_cast<std::size_t>(params.r);
    auto leaf = [&](const std::vector<std::int64_t>& vals) {
        auto s = to_tuple(vals, 0, r, params.p != 2, false);
        if (!satisfies_classical(s, params)) throw std::logic_error("oracle emitted a non-solution");
        out.push_back(std::move(s));
    };
    std::vector<std::int64_t> vals(box.vars.size());
    walk(box, 0, box.constant, vals, leaf);
    return out;
}

std::vector<SolutionTuple> enumerate_quantum(std::int64_t p, std::int64_t r, std::int64_t n,
                                             OracleOptions opts)
{
    const Box box = quantum_box(p, r, n);
    check_threshold(box, opts);
    std::vector<SolutionTuple> out;
    const auto rr = static_cast<std::size_t>(r);
    auto leaf = [&](const std::vector<std::int64_t>& vals) {
        auto s = to_tuple(vals, 1, rr, true, true);
        if (!satisfies_quantum(s, p, r, n)) throw std::logic_error("oracle emitted a non-solution");
        out.push_back(std::move(s));
    };
    std::vector<std::int64_t> vals(box.vars.size());
    walk(box, 0, box.constant, vals, leaf);
    return out;
}

CountValue brute_count(const CountParams& params, OracleOptions opts)
{
    return count_box(classical_box(params), opts);
}

CountValue brute_quantum(std::int64_t p, std::int64_t r, std::int64_t n, OracleOptions opts)
{
    return count_box(quantum_box(p, r, n), opts);
}

std::vector<CountValue> brute_degree_histogram(const CountParams& params, OracleOptions opts)
{
    return histogram_box(classical_box(params), opts);
}

CountValue brute_graded(const CountParams& params, std::int64_t degree, OracleOptions opts)
{
    if (degree < 0) throw InvalidInput("degree must be >= 0");
    const auto hist = brute_degree_histogram(params, opts);
    const auto d = static_cast<std::size_t>(degree);
    return d < hist.size() ? hist[d] : CountValue(0);
}

} // namespace frobkern
