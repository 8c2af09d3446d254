// summation.cpp

#include "ellsym2/summation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace ellsym2 {

int resolve_threads(int requested) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (requested <= 0) return static_cast<int>(hw);
    return requested;
}

double blocked_compensated_sum(std::uint64_t n,
                               const std::function<double(std::uint64_t)>& f,
                               int threads) {
    const std::uint64_t nblocks = (n + kSumBlock - 1) / kSumBlock;
    if (nblocks == 0) return 0.0;

    std::vector<KahanD> blocks(nblocks);
    int nt = std::min<std::uint64_t>(resolve_threads(threads), nblocks);

    auto work = [&](std::uint64_t b0, std::uint64_t b1) {
        for (std::uint64_t b = b0; b < b1; ++b) {
            KahanD acc;
            const std::uint64_t lo = b * kSumBlock;
            const std::uint64_t hi = std::min(n, lo + kSumBlock);
            for (std::uint64_t i = lo; i < hi; ++i) acc.add(f(i));
            blocks[b] = acc;
        }
    };

    if (nt <= 1) {
        work(0, nblocks);
    } else {
        std::vector<std::thread> pool;
        std::uint64_t per = (nblocks + nt - 1) / nt;
        for (int t = 0; t < nt; ++t) {
            std::uint64_t b0 = t * per;
            std::uint64_t b1 = std::min<std::uint64_t>(nblocks, b0 + per);
            if (b0 >= b1) break;
            pool.emplace_back(work, b0, b1);
        }
        for (auto& th : pool) th.join();
    }

    // merge in index order
    KahanD total;
    for (const auto& b : blocks) total.merge(b);
    return total.value();
}

double compensated_sum(std::span<const double> terms, int threads) {
    return blocked_compensated_sum(
        terms.size(), [&](std::uint64_t i) { return terms[i]; }, threads);
}

Real compensated_sum(std::span<const Real> terms, mpfr_prec_t prec) {
    KahanR acc(prec);
    for (const Real& t : terms) acc.add(t);
    return acc.value();
}

void parallel_for(std::int64_t lo, std::int64_t hi,
                  const std::function<void(std::int64_t)>& body, int threads) {
    if (hi <= lo) return;
    int nt = resolve_threads(threads);
    std::int64_t n = hi - lo;
    if (nt <= 1 || n < 2) {
        for (std::int64_t i = lo; i < hi; ++i) body(i);
        return;
    }
    std::atomic<std::int64_t> next(lo);
    auto work = [&]() {
        // chunked self-scheduling; chunk size keeps dispatch overhead low
        const std::int64_t chunk = std::max<std::int64_t>(1, n / (8 * nt));
        for (;;) {
            std::int64_t i0 = next.fetch_add(chunk);
            if (i0 >= hi) return;
            std::int64_t i1 = std::min(hi, i0 + chunk);
            for (std::int64_t i = i0; i < i1; ++i) body(i);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
}

} // namespace ellsym2
