#include "polysum/polygonal.hpp"

#include <algorithm>

#include "polysum/parallel.hpp"

namespace polysum {

namespace {

constexpr int64_t kMaxSlots = 1'000'000;
constexpr std::size_t kMaxTableEntries = std::size_t(1) << 25;

// P_m(x) in 128-bit arithmetic; exact for any |x| <= 2^62 and m <= 10^9.
__int128 polygonal_value_wide(int64_t m, int64_t x) {
    __int128 t = (__int128)x * (x - 1) / 2;  // x(x-1) is always even
    return (__int128)(m - 2) * t + x;
}

// rank(0)=0, rank(1)=1, rank(-1)=2, rank(2)=3, rank(-2)=4, ...
int64_t rank_of(int64_t x) { return x > 0 ? 2 * x - 1 : -2 * x; }

}  // namespace

CoeffVector CoeffVector::ones_and_twos(int64_t alpha, int64_t beta) {
    if (alpha < 0 || beta < 0) throw std::invalid_argument("alpha, beta must be >= 0");
    if (alpha + beta < 1) throw std::invalid_argument("alpha + beta must be >= 1");
    if (alpha + beta > kMaxSlots) throw std::invalid_argument("coefficient vector too long");
    std::vector<int64_t> c;
    c.reserve(static_cast<std::size_t>(alpha + beta));
    c.insert(c.end(), static_cast<std::size_t>(alpha), 1);
    c.insert(c.end(), static_cast<std::size_t>(beta), 2);
    return CoeffVector(std::move(c));
}

CoeffVector CoeffVector::from_list(std::vector<int64_t> coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("coefficient list must be non-empty");
    if (coeffs.size() > static_cast<std::size_t>(kMaxSlots))
        throw std::invalid_argument("coefficient vector too long");
    for (int64_t c : coeffs)
        if (c < 1) throw std::invalid_argument("coefficients must be positive");
    return CoeffVector(std::move(coeffs));
}

int64_t polygonal_value(Gonality m, int64_t x) {
    if (x == INT64_MIN) throw std::overflow_error("polygonal_value argument out of range");
    int64_t t = checked_mul(x, x - 1) / 2;
    return checked_add(checked_mul(m.value() - 2, t), x);
}

std::optional<int64_t> polygonal_root(Gonality m, int64_t v) {
    if (v < 0) return std::nullopt;
    // 2v = (m-2)x^2 - (m-4)x, so x = ((m-4) +- sqrt((m-4)^2 + 8(m-2)v)) / (2(m-2)).
    int64_t mm = m.value();
    __int128 disc = (__int128)(mm - 4) * (mm - 4) + (__int128)8 * (mm - 2) * v;
    __int128 s;
    if (disc <= INT64_MAX) {
        int64_t s64;
        if (!is_square(static_cast<int64_t>(disc), s64)) return std::nullopt;
        s = s64;
    } else {
        auto approx = static_cast<__int128>(sqrtl(static_cast<long double>(disc)));
        while (approx > 0 && approx * approx > disc) --approx;
        while ((approx + 1) * (approx + 1) <= disc) ++approx;
        if (approx * approx != disc) return std::nullopt;
        s = approx;
    }
    std::optional<int64_t> best;
    for (__int128 num : {(__int128)(mm - 4) + s, (__int128)(mm - 4) - s}) {
        __int128 den = (__int128)2 * (mm - 2);
        if (num % den != 0) continue;
        __int128 x = num / den;
        if (x > INT64_MAX || x < INT64_MIN) continue;
        auto xi = static_cast<int64_t>(x);
        if (!best || rank_of(xi) < rank_of(*best)) best = xi;
    }
    return best;
}

std::vector<ValueEntry> generalized_values_up_to(Gonality m, int64_t bound) {
    if (bound < 0) throw std::invalid_argument("bound must be >= 0");
    int64_t mm = m.value();
    std::vector<ValueEntry> out;
    out.push_back({0, 0});
    // For m = 3 and m = 4 every value of the negative branch repeats a
    // positive-branch value of lower rank (P_3(-k) = P_3(k-1) and
    // P_4(-k) = P_4(k)), so only x >= 0 is enumerated there. For m >= 5
    // the interleaving P(k) < P(-k) < P(k+1) keeps the list increasing.
    const bool negatives = mm >= 5;
    for (int64_t k = 1;; ++k) {
        __int128 pos = polygonal_value_wide(mm, k);
        __int128 neg = negatives ? polygonal_value_wide(mm, -k) : pos;
        if (pos > bound && neg > bound) break;
        if (pos <= bound) out.push_back({static_cast<int64_t>(pos), k});
        if (negatives && neg <= bound) out.push_back({static_cast<int64_t>(neg), -k});
        if (out.size() > kMaxTableEntries)
            throw std::length_error("value table too large for exhaustive search");
    }
    return out;
}

int64_t evaluate(Gonality m, const CoeffVector& a, const Witness& w) {
    if (w.x.size() != a.size())
        throw std::invalid_argument("witness length does not match coefficient count");
    int64_t sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        sum = checked_add(sum, checked_mul(a[i], polygonal_value(m, w.x[i])));
    return sum;
}

namespace {

struct Searcher {
    int64_t m;
    std::vector<int64_t> coeffs;        // sorted by decreasing coefficient
    std::vector<std::size_t> origin;    // position of each sorted slot in the input
    std::vector<ValueEntry> table;      // values <= n in increasing order
    std::vector<int64_t> suffix_coeff;  // sum of coefficients from slot i on
    std::vector<std::size_t> chosen;    // table index per inner slot on the current path
    int64_t last_x = 0;
    uint64_t nodes = 0;
    uint64_t budget;

    // Largest table value <= cap (the table always holds 0).
    int64_t max_value_at_most(int64_t cap) const {
        auto it = std::upper_bound(table.begin(), table.end(), cap,
                                   [](int64_t c, const ValueEntry& e) { return c < e.value; });
        return std::prev(it)->value;
    }

    SearchStatus dfs(std::size_t slot, int64_t remaining) {
        if (++nodes > budget) return SearchStatus::out_of_budget;
        const int64_t c = coeffs[slot];
        // Within a run of equal coefficients only non-decreasing table
        // indices are explored; every solution has exactly one such
        // arrangement and it is the lexicographically smallest one.
        std::size_t start = 0;
        if (slot > 0 && coeffs[slot - 1] == c) start = chosen[slot - 1];
        if (slot + 1 == coeffs.size()) {
            if (remaining % c != 0) return SearchStatus::exhausted;
            int64_t target = remaining / c;
            if (target < table[start].value) return SearchStatus::exhausted;
            auto x = polygonal_root(Gonality(m), target);
            if (!x) return SearchStatus::exhausted;
            last_x = *x;
            return SearchStatus::found;
        }
        for (std::size_t idx = start; idx < table.size(); ++idx) {
            int64_t contribution;
            if (__builtin_mul_overflow(c, table[idx].value, &contribution)) break;
            if (contribution > remaining) break;
            int64_t rest = remaining - contribution;
            if (rest > 0 &&
                (__int128)suffix_coeff[slot + 1] * max_value_at_most(rest) < rest)
                continue;
            chosen[slot] = idx;
            SearchStatus s = dfs(slot + 1, rest);
            if (s != SearchStatus::exhausted) return s;
        }
        return SearchStatus::exhausted;
    }
};

}  // namespace

SearchResult represents_budgeted(Gonality m, const CoeffVector& a, int64_t n,
                                 uint64_t node_budget) {
    if (n < 0) throw std::invalid_argument("target must be >= 0");
    Searcher s;
    s.m = m.value();
    s.budget = node_budget;

    const std::size_t k = a.size();
    std::vector<std::size_t> order(k);
    for (std::size_t i = 0; i < k; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a[i] > a[j]; });
    s.coeffs.resize(k);
    s.origin = order;
    for (std::size_t i = 0; i < k; ++i) s.coeffs[i] = a[order[i]];

    s.table = generalized_values_up_to(m, n);
    s.suffix_coeff.assign(k + 1, 0);
    for (std::size_t i = k; i-- > 0;)
        s.suffix_coeff[i] = s.suffix_coeff[i + 1] + s.coeffs[i];
    s.chosen.assign(k, 0);

    SearchStatus st = s.dfs(0, n);
    SearchResult res;
    res.status = st;
    res.nodes = s.nodes;
    if (st == SearchStatus::found) {
        Witness w;
        w.x.assign(k, 0);
        for (std::size_t i = 0; i + 1 < k; ++i)
            w.x[s.origin[i]] = s.table[s.chosen[i]].x;
        w.x[s.origin[k - 1]] = s.last_x;
        res.witness = std::move(w);
    }
    return res;
}

std::optional<Witness> represents(Gonality m, const CoeffVector& a, int64_t n) {
    SearchResult r = represents_budgeted(m, a, n, UINT64_MAX);
    return r.witness;
}

std::vector<std::uint8_t> scan_represented(Gonality m, const CoeffVector& a,
                                           int64_t lo, int64_t hi, int jobs) {
    if (lo < 0 || hi < lo) throw std::invalid_argument("bad scan range");
    const int64_t count = hi - lo + 1;
    std::vector<std::uint8_t> out(static_cast<std::size_t>(count), 0);
    constexpr int64_t kChunk = 256;  // fixed: results must not depend on jobs
    auto chunks = static_cast<std::size_t>((count + kChunk - 1) / kChunk);
    parallel_chunks(chunks, jobs, [&](std::size_t c) {
        int64_t begin = lo + static_cast<int64_t>(c) * kChunk;
        int64_t end = std::min(hi, begin + kChunk - 1);
        for (int64_t n = begin; n <= end; ++n)
            out[static_cast<std::size_t>(n - lo)] = represents(m, a, n).has_value() ? 1 : 0;
    });
    return out;
}

std::vector<int64_t> exceptional_set(Gonality m, const CoeffVector& a,
                                     int64_t bound, int jobs) {
    if (bound < 0) throw std::invalid_argument("bound must be >= 0");
    auto flags = scan_represented(m, a, 0, bound, jobs);
    std::vector<int64_t> missing;
    for (int64_t n = 0; n <= bound; ++n)
        if (!flags[static_cast<std::size_t>(n)]) missing.push_back(n);
    return missing;
}

}  // namespace polysum
