#include "blockdim/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace blockdim {

Rational ErrorProfile::weighted_error() const {
    Rational acc = 0;
    for (const auto& c : contexts) acc += c.p * c.e;
    acc.canonicalize();
    return acc;
}

double ErrorProfile::eta_mix() const {
    double acc = 0.0;
    for (const auto& c : contexts) acc += to_double(c.p) * binary_entropy(c.e);
    return acc;
}

ErrorProfile error_profile(const EmpiricalBlockDistribution& d, Direction dir) {
    ErrorProfile profile;
    profile.ell = d.ell;
    const std::uint64_t total = d.denominator();
    for (const auto& [ctx, pair] : context_counts(d.counts, dir)) {
        const std::uint64_t ctx_total = pair[0] + pair[1];
        ContextError ce;
        ce.context = ctx;
        ce.p = make_rational(ctx_total, total);
        ce.e = make_rational(std::min(pair[0], pair[1]), ctx_total);
        profile.contexts.push_back(std::move(ce));
    }
    return profile;
}

ErrorProfile error_profile(const Word& w, unsigned ell) {
    return error_profile(empirical_distribution(w, ell), Direction::predict_following);
}

SandwichReport verify_sandwich(const Word& w, unsigned ell) {
    const auto d = empirical_distribution(w, ell);
    SandwichReport r;
    r.ell = ell;
    r.n = w.size();
    r.gamma = rauzy_from_counts(d.counts, Direction::predict_following).value;
    r.beta = rauzy_from_counts(d.counts, Direction::predict_preceding).value;
    r.hc = error_profile(d, Direction::predict_following).eta_mix();
    r.hc_beta = error_profile(d, Direction::predict_preceding).eta_mix();

    r.lower_ok = 2.0 * to_double(r.gamma) <= r.hc + kIneqSlack;
    r.upper_ok = r.hc <= binary_entropy(r.gamma) + kIneqSlack;
    r.lower_ok_beta = 2.0 * to_double(r.beta) <= r.hc_beta + kIneqSlack;
    r.upper_ok_beta = r.hc_beta <= binary_entropy(r.beta) + kIneqSlack;
    return r;
}

std::vector<ConvergenceRow> convergence_table(const Word& x,
                                              const std::vector<unsigned>& ells,
                                              const std::vector<std::size_t>& ns) {
    if (ells.empty() || ns.empty())
        throw std::invalid_argument("convergence_table: empty schedule");
    std::vector<std::size_t> schedule(ns);
    std::sort(schedule.begin(), schedule.end());
    schedule.erase(std::unique(schedule.begin(), schedule.end()), schedule.end());
    if (schedule.back() > x.size())
        throw std::invalid_argument("n schedule exceeds input length");
    for (unsigned ell : ells) {
        if (ell < 1 || ell + 1 > BlockCounts::kMaxLen)
            throw std::invalid_argument("ell out of range");
        if (static_cast<std::size_t>(ell) >= schedule.front())
            throw std::invalid_argument("need ell < min(n)");
    }

    std::vector<ConvergenceRow> rows(schedule.size() * ells.size());
    const std::size_t max_n = schedule.back();

#pragma omp parallel for schedule(dynamic)
    for (std::size_t e = 0; e < ells.size(); ++e) {
        const unsigned ell = ells[e];
        StreamingCounter low(ell);        // h_ell blocks
        StreamingCounter high(ell + 1);   // beta/gamma/hc blocks
        std::size_t next = 0;
        for (std::size_t i = 0; i < max_n && next < schedule.size(); ++i) {
            const int bit = x[i];
            low.push(bit);
            high.push(bit);
            if (i + 1 == schedule[next]) {
                ConvergenceRow row;
                row.n = i + 1;
                row.ell = ell;
                row.beta = rauzy_from_counts(high.counts(), Direction::predict_preceding).value;
                row.gamma = rauzy_from_counts(high.counts(), Direction::predict_following).value;
                row.h = block_entropy_sum(low.counts()) / ell;
                row.hc = conditional_entropy_last_from_counts(high.counts());
                rows[next * ells.size() + e] = std::move(row);
                ++next;
            }
        }
    }
    return rows;
}

}  // namespace blockdim
