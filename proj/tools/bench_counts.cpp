// Compares the serial reference scan against the OpenMP block-counting
// kernel and the streaming beta/gamma/h pipeline on a random word.

#include "blockdim/block_counts.hpp"
#include "blockdim/entropy.hpp"
#include "blockdim/rauzy.hpp"
#include "blockdim/rng.hpp"
#include "blockdim/word.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

using namespace blockdim;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

Word random_word(std::size_t n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    Word w;
    for (std::size_t i = 0; i < n; ++i) w.push_back(static_cast<int>(rng.next() & 1u));
    return w;
}

template <class F>
double best_of(int repeats, F&& f) {
    double best = 1e100;
    for (int r = 0; r < repeats; ++r) {
        const auto start = clock_type::now();
        f();
        best = std::min(best, seconds_since(start));
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t n = 20'000'000;
    int repeats = 3;
    std::vector<unsigned> ells{4, 8, 12, 16};
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--n" && i + 1 < argc) n = std::strtoull(argv[++i], nullptr, 10);
        else if (arg == "--repeats" && i + 1 < argc) repeats = std::atoi(argv[++i]);
        else {
            std::fprintf(stderr, "usage: %s [--n N] [--repeats R]\n", argv[0]);
            return 2;
        }
    }

    if (const char* env = std::getenv("BLOCKDIM_THREADS")) {
        const int t = std::atoi(env);
        if (t > 0) omp_set_num_threads(t);
    }

    std::printf("word length %zu, threads %d\n", n, omp_get_max_threads());
    const Word w = random_word(n, 42);

    std::printf("%4s %14s %14s %9s\n", "ell", "serial Mwin/s", "parallel Mwin/s", "speedup");
    for (unsigned ell : ells) {
        const double windows = static_cast<double>(n - ell + 1);
        BlockCounts serial(ell), parallel(ell);
        const double ts = best_of(repeats, [&] { serial = block_counts_serial(w, ell); });
        const double tp = best_of(repeats, [&] { parallel = block_counts(w, ell); });
        if (!(serial == parallel)) {
            std::fprintf(stderr, "MISMATCH between serial and parallel at ell=%u\n", ell);
            return 1;
        }
        std::printf("%4u %14.1f %14.1f %8.2fx\n", ell, windows / ts / 1e6,
                    windows / tp / 1e6, ts / tp);
    }

    const auto start = clock_type::now();
    const auto counts = block_counts(w, 9);
    const auto beta = rauzy_from_counts(counts, Direction::predict_preceding);
    const auto gamma = rauzy_from_counts(counts, Direction::predict_following);
    const double h = block_entropy_sum(counts) / 9.0;
    std::printf("full ell=8 pipeline (beta=%.6f gamma=%.6f h9=%.6f): %.3fs\n",
                to_double(beta.value), to_double(gamma.value), h, seconds_since(start));
    return 0;
}
