// summation.hpp
//
// Deterministic summation primitives.  Double-precision sums are compensated
// (Neumaier) and parallel reductions follow a fixed contract: partition the
// index range into fixed-size contiguous blocks, compensate within each
// block, merge blocks in index order.  The result is a function of the
// sequence order only — never of the thread count.

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ellsym2/precision.hpp"

namespace ellsym2 {

// Neumaier-compensated accumulator.
struct KahanD {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    // merge another accumulator (block merge, in index order)
    void merge(const KahanD& o) {
        add(o.sum);
        comp += o.comp;
    }
    double value() const { return sum + comp; }
};

// Same scheme over Real; each elementary add is compensated with TwoSum.
struct KahanR {
    Real sum;
    Real comp;

    explicit KahanR(mpfr_prec_t prec) : sum(prec), comp(prec) {}
    void add(const Real& x) {
        Real t = sum + x;
        if (ellsym2::abs(sum) >= ellsym2::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    Real value() const { return sum + comp; }
};

// Number of worker threads to use: n <= 0 means all hardware threads.
int resolve_threads(int requested);

// Fixed block size of the deterministic reduction contract.
inline constexpr std::uint64_t kSumBlock = 1 << 14;

// Deterministic blocked compensated sum of f(0..n-1).  Blocks of kSumBlock
// indices are compensated independently (possibly on different threads) and
// merged in index order, so the bits do not depend on the thread count.
double blocked_compensated_sum(std::uint64_t n,
                               const std::function<double(std::uint64_t)>& f,
                               int threads = 0);

double compensated_sum(std::span<const double> terms, int threads = 0);

// Sequential compensated sum over Real (one block; deterministic).
Real compensated_sum(std::span<const Real> terms, mpfr_prec_t prec);

// Deterministic parallel loop: body(i) for i in [lo, hi), work split in
// contiguous chunks.  The caller owns any result slots indexed by i.
void parallel_for(std::int64_t lo, std::int64_t hi,
                  const std::function<void(std::int64_t)>& body, int threads = 0);

} // namespace ellsym2
