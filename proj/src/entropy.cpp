#include "blockdim/entropy.hpp"

#include <cmath>
#include <stdexcept>

namespace blockdim {
namespace {

double eta_from_counts(std::uint64_t ones, std::uint64_t total) {
    if (ones == 0 || ones == total) return 0.0;
    return binary_entropy(static_cast<double>(ones) / static_cast<double>(total));
}

}  // namespace

EmpiricalBlockDistribution empirical_distribution(const Word& w, unsigned ell) {
    if (w.size() < static_cast<std::size_t>(ell) + 1)
        throw std::invalid_argument("need ell+1 <= |w|");
    EmpiricalBlockDistribution d{w.size(), ell, block_counts(w, ell + 1)};
    return d;
}

double binary_entropy(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::domain_error("binary_entropy: argument outside [0,1]");
    if (alpha == 0.0 || alpha == 1.0) return 0.0;
    return -alpha * std::log2(alpha) - (1.0 - alpha) * std::log2(1.0 - alpha);
}

double binary_entropy(const Rational& alpha) {
    if (alpha < 0 || alpha > 1)
        throw std::domain_error("binary_entropy: argument outside [0,1]");
    return binary_entropy(alpha.get_d());
}

double block_entropy_sum(const BlockCounts& counts) {
    const double total = static_cast<double>(counts.window_total());
    double acc = 0.0;
    counts.for_each([&](std::uint64_t, std::uint64_t cnt) {
        const double p = static_cast<double>(cnt) / total;
        acc -= p * std::log2(p);
    });
    return acc;
}

double block_entropy_h(const Word& w, unsigned ell) {
    if (ell < 1 || ell > w.size())
        throw std::invalid_argument("need 1 <= ell <= |w|");
    return block_entropy_sum(block_counts(w, ell)) / ell;
}

double joint_entropy(const EmpiricalBlockDistribution& d) {
    return block_entropy_sum(d.counts);
}

double conditional_entropy_last_from_counts(const BlockCounts& counts) {
    const double total = static_cast<double>(counts.window_total());
    double acc = 0.0;
    for (const auto& [ctx, pair] : context_counts(counts, Direction::predict_following)) {
        const std::uint64_t ctx_total = pair[0] + pair[1];
        acc += (static_cast<double>(ctx_total) / total) * eta_from_counts(pair[1], ctx_total);
    }
    return acc;
}

double conditional_entropy_last(const EmpiricalBlockDistribution& d) {
    return conditional_entropy_last_from_counts(d.counts);
}

double conditional_entropy_last(const EmpiricalBlockDistribution& d, unsigned context_len) {
    if (context_len > d.ell)
        throw std::invalid_argument("context longer than the block");
    const unsigned first = d.ell - context_len;
    const auto m = marginal_counts(d, first, d.ell);
    const double total = static_cast<double>(d.denominator());
    double acc = 0.0;
    for (std::uint64_t ctx = 0; ctx < (std::uint64_t{1} << context_len); ++ctx) {
        const std::uint64_t c0 = m[ctx];
        const std::uint64_t c1 = m[ctx | (std::uint64_t{1} << context_len)];
        if (c0 + c1 == 0) continue;
        acc += (static_cast<double>(c0 + c1) / total) * eta_from_counts(c1, c0 + c1);
    }
    return acc;
}

double conditional_entropy_first(const EmpiricalBlockDistribution& d) {
    const double total = static_cast<double>(d.denominator());
    double acc = 0.0;
    for (const auto& [ctx, pair] : context_counts(d.counts, Direction::predict_preceding)) {
        const std::uint64_t ctx_total = pair[0] + pair[1];
        acc += (static_cast<double>(ctx_total) / total) * eta_from_counts(pair[1], ctx_total);
    }
    return acc;
}

double conditional_entropy_at(const EmpiricalBlockDistribution& d, unsigned i) {
    if (i > d.ell) throw std::invalid_argument("coordinate out of range");
    const auto m = marginal_counts(d, 0, i);
    const double total = static_cast<double>(d.denominator());
    double acc = 0.0;
    for (std::uint64_t ctx = 0; ctx < (std::uint64_t{1} << i); ++ctx) {
        const std::uint64_t c0 = m[ctx];
        const std::uint64_t c1 = m[ctx | (std::uint64_t{1} << i)];
        if (c0 + c1 == 0) continue;
        acc += (static_cast<double>(c0 + c1) / total) * eta_from_counts(c1, c0 + c1);
    }
    return acc;
}

std::vector<std::uint64_t> marginal_counts(const EmpiricalBlockDistribution& d,
                                           unsigned first, unsigned last) {
    if (first > last || last > d.ell)
        throw std::invalid_argument("marginal range out of bounds");
    const unsigned width = last - first + 1;
    if (width > 24) throw std::invalid_argument("marginal range wider than 24 coordinates");
    std::vector<std::uint64_t> out(std::uint64_t{1} << width, 0);
    const std::uint64_t mask = (std::uint64_t{1} << width) - 1;
    d.counts.for_each([&](std::uint64_t code, std::uint64_t cnt) {
        out[(code >> first) & mask] += cnt;
    });
    return out;
}

EntropyConvergenceReport entropy_convergence_report(const Word& w, unsigned ell,
                                                    unsigned ell_prime) {
    if (ell < 1 || ell > ell_prime)
        throw std::invalid_argument("need 1 <= ell <= ell_prime");
    if (w.size() < static_cast<std::size_t>(ell_prime) + 1)
        throw std::invalid_argument("need ell_prime + 1 <= |w|");
    const auto d = empirical_distribution(w, ell);
    const auto dp = empirical_distribution(w, ell_prime);
    EntropyConvergenceReport r;
    r.h_rate = joint_entropy(d) / (ell + 1);
    r.hc = conditional_entropy_last(d);
    r.h_rate_refined = joint_entropy(dp) / (ell_prime + 1);
    r.gap_lower = r.h_rate - r.hc;
    r.gap_upper = r.h_rate_refined - r.hc;
    return r;
}

}  // namespace blockdim
