#pragma once

#include <optional>
#include <vector>

#include "polysum/arith.hpp"

namespace polysum {

// The gonality parameter m >= 3 of the polygonal family
// P_m(x) = (m-2)(x^2-x)/2 + x, evaluated at any integer x.
// Capped at 10^9 so that discriminants stay inside 128 bits.
class Gonality {
public:
    explicit Gonality(int64_t m) : m_(m) {
        if (m < 3) throw std::invalid_argument("gonality must be >= 3");
        if (m > 1'000'000'000) throw std::invalid_argument("gonality out of supported range");
    }
    int64_t value() const { return m_; }
    friend bool operator==(Gonality a, Gonality b) { return a.m_ == b.m_; }

private:
    int64_t m_;
};

// A weight vector. Either the two-block form (1^alpha, 2^beta) or an
// arbitrary list of positive coefficients.
class CoeffVector {
public:
    static CoeffVector ones_and_twos(int64_t alpha, int64_t beta);
    static CoeffVector from_list(std::vector<int64_t> coeffs);

    const std::vector<int64_t>& coeffs() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }
    int64_t operator[](std::size_t i) const { return coeffs_[i]; }

private:
    explicit CoeffVector(std::vector<int64_t> c) : coeffs_(std::move(c)) {}
    std::vector<int64_t> coeffs_;
};

// Integer assignment x, one entry per coefficient.
struct Witness {
    std::vector<int64_t> x;
};

struct ValueEntry {
    int64_t value;
    int64_t x;  // witnessing argument, lowest in the order 0, 1, -1, 2, -2, ...
};

// P_m(x), exact. Throws std::overflow_error if the value does not fit
// in 64 bits.
int64_t polygonal_value(Gonality m, int64_t x);

// Lowest-rank x (order 0, 1, -1, 2, -2, ...) with P_m(x) = v, if any.
std::optional<int64_t> polygonal_root(Gonality m, int64_t v);

// All distinct values P_m(x) <= bound, increasing, each with its
// lowest-rank witness. Contains 0, and 1 whenever bound >= 1.
std::vector<ValueEntry> generalized_values_up_to(Gonality m, int64_t bound);

// Sum a_i * P_m(x_i) for a witness, exact.
int64_t evaluate(Gonality m, const CoeffVector& a, const Witness& w);

// Witness with sum a_i * P_m(x_i) = n, or nullopt once the search space
// (every component value bounded by the remaining budget) is exhausted.
// Deterministic: returns the lexicographically first witness under the
// per-slot enumeration order 0, 1, -1, 2, -2, ... with slots visited in
// order of decreasing coefficient.
std::optional<Witness> represents(Gonality m, const CoeffVector& a, int64_t n);

// Same search with a node budget for callers that need to bail out of
// infeasibly large exhaustive scans.
enum class SearchStatus { found, exhausted, out_of_budget };
struct SearchResult {
    SearchStatus status;
    std::optional<Witness> witness;
    uint64_t nodes = 0;
};
SearchResult represents_budgeted(Gonality m, const CoeffVector& a, int64_t n,
                                 uint64_t node_budget);

// Representability flags for every n in [lo, hi], scanned in fixed-size
// chunks that workers pull independently; the result does not depend on
// the worker count.
std::vector<std::uint8_t> scan_represented(Gonality m, const CoeffVector& a,
                                           int64_t lo, int64_t hi, int jobs = 1);

// The n in [0, bound] with no representation, sorted.
std::vector<int64_t> exceptional_set(Gonality m, const CoeffVector& a,
                                     int64_t bound, int jobs = 1);

}  // namespace polysum
