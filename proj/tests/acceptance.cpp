// Acceptance suite: one pass/fail line per criterion. With no arguments all
// criteria run; otherwise the arguments select criterion numbers. Exit code
// is the number of failed criteria.

#include "blockdim/addition.hpp"
#include "blockdim/bounds.hpp"
#include "blockdim/entropy.hpp"
#include "blockdim/generators.hpp"
#include "blockdim/markov.hpp"
#include "blockdim/rauzy.hpp"
#include "blockdim/rng.hpp"
#include "blockdim/word.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace blockdim;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

Word random_word(std::size_t n, SplitMix64& rng) {
    Word w;
    for (std::size_t i = 0; i < n; ++i)
        w.push_back(static_cast<int>(rng.next() & 1u));
    return w;
}

struct Outcome {
    bool ok;
    std::string detail;
};

// 1. Exact counterexample reproduction, under 10 seconds.
Outcome criterion_exact_reproduction() {
    const auto start = clock_type::now();
    const auto chain = counterexample_chain();
    const auto pi = stationary_distribution(chain);
    const std::vector<Rational> want_pi{Rational(5, 24), Rational(1, 4),
                                        Rational(7, 24), Rational(1, 4)};
    const bool pi_ok = pi == want_pi;
    const bool bound_ok = snake_lower_bound(chain, pi) == Rational(11, 24);
    const auto beta6 = exact_beta(chain, pi, 6);
    const bool beta_ok = beta6 == Rational(9503, 20736);
    const double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << "pi " << (pi_ok ? "ok" : "WRONG") << ", bound "
           << (bound_ok ? "11/24" : "WRONG") << ", beta6 "
           << to_fraction_string(beta6) << ", " << elapsed << "s";
    return {pi_ok && bound_ok && beta_ok && elapsed < 10.0, detail.str()};
}

// 2. Exact separation beta_6 < 11/24 <= gamma_ell.
Outcome criterion_separation() {
    const auto chain = counterexample_chain();
    const auto pi = stationary_distribution(chain);
    const auto beta6 = exact_beta(chain, pi, 6);
    bool ok = beta6 < Rational(11, 24);
    std::ostringstream detail;
    detail << "beta6 " << to_fraction_string(beta6) << " < 11/24";
    for (unsigned ell = 1; ell <= 6; ++ell) {
        const auto gamma = exact_gamma(chain, pi, ell);
        if (!(gamma >= Rational(11, 24))) {
            ok = false;
            detail << ", gamma_" << ell << " " << to_fraction_string(gamma) << " BELOW";
        }
    }
    detail << ", gamma_1..6 >= 11/24";
    return {ok, detail.str()};
}

// 3. Finite-word sandwich, both orientations, 1000 words.
Outcome criterion_sandwich_suite() {
    SplitMix64 rng(30003);
    int violations = 0;
    int checked = 0;
    for (int iter = 0; iter < 1000; ++iter) {
        const std::size_t n = 64 + rng.next_below(4096 - 64 + 1);
        const Word w = random_word(n, rng);
        for (unsigned ell = 1; ell <= 6; ++ell) {
            const auto d = empirical_distribution(w, ell);
            const auto gamma = rauzy_from_counts(d.counts, Direction::predict_following);
            const auto beta = rauzy_from_counts(d.counts, Direction::predict_preceding);
            const auto gp = error_profile(d, Direction::predict_following);
            const auto bp = error_profile(d, Direction::predict_preceding);
            if (gp.weighted_error() != gamma.value) ++violations;
            if (bp.weighted_error() != beta.value) ++violations;
            const double gmix = gp.eta_mix();
            const double bmix = bp.eta_mix();
            if (!(2.0 * to_double(gamma.value) <= gmix + kIneqSlack)) ++violations;
            if (!(gmix <= binary_entropy(gamma.value) + kIneqSlack)) ++violations;
            if (!(2.0 * to_double(beta.value) <= bmix + kIneqSlack)) ++violations;
            if (!(bmix <= binary_entropy(beta.value) + kIneqSlack)) ++violations;
            ++checked;
        }
    }
    std::ostringstream detail;
    detail << checked << " (word, ell) cells, " << violations << " violations";
    return {violations == 0, detail.str()};
}

// 4. Counting formulas equal the brute-force predictor minimum.
Outcome criterion_oracle() {
    int mismatches = 0;
    for (unsigned len = 2; len <= 12; ++len) {
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << len); ++code) {
            const Word w = decode_block(code, len);
            for (unsigned ell : {1u, 2u}) {
                if (ell >= len) continue;
                if (brute_force_rauzy(w, ell, Direction::predict_following).value !=
                    gamma_ell(w, ell).value)
                    ++mismatches;
                if (brute_force_rauzy(w, ell, Direction::predict_preceding).value !=
                    beta_ell(w, ell).value)
                    ++mismatches;
            }
        }
    }
    SplitMix64 rng(40004);
    for (int iter = 0; iter < 1000; ++iter) {
        const Word w = random_word(5 + rng.next_below(60), rng);
        if (brute_force_rauzy(w, 3, Direction::predict_following).value !=
            gamma_ell(w, 3).value)
            ++mismatches;
        if (brute_force_rauzy(w, 3, Direction::predict_preceding).value !=
            beta_ell(w, 3).value)
            ++mismatches;
    }
    std::ostringstream detail;
    detail << "exhaustive len<=12 (ell 1,2) + 1000 random len<=64 (ell 3), "
           << mismatches << " mismatches";
    return {mismatches == 0, detail.str()};
}

// 5. Chain rule and the matched-denominator identity.
Outcome criterion_chain_rule() {
    SplitMix64 rng(50005);
    int failures = 0;
    double worst_gap = 0.0;
    for (int iter = 0; iter < 1000; ++iter) {
        const Word w = random_word(16 + rng.next_below(2000), rng);
        const unsigned ell = 1 + static_cast<unsigned>(rng.next_below(6));
        const auto d = empirical_distribution(w, ell);
        double chained = 0.0;
        for (unsigned i = 0; i <= ell; ++i) chained += conditional_entropy_at(d, i);
        const double gap = std::abs(chained - joint_entropy(d));
        worst_gap = std::max(worst_gap, gap);
        if (gap > 1e-10) ++failures;
        if (joint_entropy(d) != block_entropy_sum(block_counts(w, ell + 1)))
            ++failures;
    }
    std::ostringstream detail;
    detail << "1000 cases, worst chain-rule gap " << worst_gap << ", " << failures
           << " failures";
    return {failures == 0, detail.str()};
}

// 6. Seeded walk matches the exact asymptotics, under 60 seconds.
Outcome criterion_monte_carlo() {
    const auto start = clock_type::now();
    const auto chain = counterexample_chain();
    const auto pi = stationary_distribution(chain);
    const Word walk = markov_walk(chain, 1000000, 1, 0);
    const auto counts = block_counts(walk, 7);
    const double emp_beta =
        to_double(rauzy_from_counts(counts, Direction::predict_preceding).value);
    const double emp_gamma =
        to_double(rauzy_from_counts(counts, Direction::predict_following).value);
    const double exact_b = to_double(exact_beta(chain, pi, 6));

    double worst_freq = 0.0;
    const double denom = static_cast<double>(counts.window_total());
    for (std::uint64_t code = 0; code < (1u << 7); ++code) {
        const double freq = static_cast<double>(counts.count(code)) / denom;
        const double mu = to_double(cylinder_measure(chain, pi, decode_block(code, 7)));
        worst_freq = std::max(worst_freq, std::abs(freq - mu));
    }
    const double elapsed = seconds_since(start);

    const bool beta_ok = std::abs(emp_beta - exact_b) <= 0.01;
    const bool gamma_ok = emp_gamma >= 11.0 / 24.0 - 0.01;
    const bool freq_ok = worst_freq <= 0.002;
    std::ostringstream detail;
    detail << "beta6 " << emp_beta << " (exact " << exact_b << "), gamma6 "
           << emp_gamma << ", max freq err " << worst_freq << ", " << elapsed << "s";
    return {beta_ok && gamma_ok && freq_ok && elapsed < 60.0, detail.str()};
}

// 7. Champernowne prefix behaves like a normality witness.
Outcome criterion_champernowne() {
    const Word x = champernowne(1000000);
    const double h = block_entropy_h(x, 8);
    const double gamma = to_double(gamma_ell(x, 8).value);
    std::ostringstream detail;
    detail << "h8 " << h << " (>= 0.95), gamma8 " << gamma << " (>= 0.40)";
    return {h >= 0.95 && gamma >= 0.40, detail.str()};
}

// 8. Sturmian prefix: factor growth ell+1 and low block entropy.
Outcome criterion_sturmian() {
    const Word x = sturmian(0.6180339887498949, 0.0, 1000000);
    bool factors_ok = true;
    for (unsigned ell = 1; ell <= 10; ++ell)
        factors_ok = factors_ok && block_counts(x, ell).distinct_blocks() == ell + 1;
    const double h8 = block_entropy_h(x, 8);
    const double cap = std::log2(9.0) / 8.0 + 0.01;
    std::ostringstream detail;
    detail << "factor counts " << (factors_ok ? "ell+1 for ell<=10" : "WRONG")
           << ", h8 " << h8 << " (<= " << cap << ")";
    return {factors_ok && h8 <= cap, detail.str()};
}

// 9. Subadditivity of block entropy under addition, 20 seeded pairs.
Outcome criterion_subadditivity() {
    constexpr std::size_t n = 1000000;
    constexpr unsigned ell = 6;
    const auto make = [&](int kind, std::uint64_t seed) -> Word {
        switch (kind) {
            case 0: return champernowne(n);
            case 1: return sturmian(0.6180339887498949, 0.0, n);
            case 2: return bernoulli_word(Rational(1, 3), n, seed);
            default: return counterexample_walk(n, seed);
        }
    };
    int failures = 0;
    int pair_index = 0;
    double worst_upper = -1.0, worst_lower = -1.0;
    auto check_pair = [&](int ki, int kj, std::uint64_t sx, std::uint64_t sy) {
        const Word x = make(ki, sx);
        const Word y = make(kj, sy);
        const auto rows = subadditivity_report(x, y, {ell});
        const auto& row = rows[0];
        const double upper_slack = row.h_x + row.h_y + 0.02 - row.h_sum;
        const double lower_slack = row.h_sum - (row.h_x - row.h_y - 0.02);
        worst_upper = worst_upper < 0 ? upper_slack : std::min(worst_upper, upper_slack);
        worst_lower = worst_lower < 0 ? lower_slack : std::min(worst_lower, lower_slack);
        if (upper_slack < 0 || lower_slack < 0) ++failures;
        const auto joint = carry_joint(x, y, ell);
        if (std::abs(joint.entropy_all() - joint.entropy_inputs_carry()) > 1e-9)
            ++failures;
        ++pair_index;
    };
    for (int ki = 0; ki < 4; ++ki)
        for (int kj = 0; kj < 4; ++kj)
            check_pair(ki, kj, 9000 + pair_index * 2, 9001 + pair_index * 2);
    for (int k = 0; k < 4; ++k) check_pair(k, k, 9100 + k * 2, 9101 + k * 2);
    std::ostringstream detail;
    detail << pair_index << " pairs, min slack upper " << worst_upper << " lower "
           << worst_lower << ", " << failures << " failures";
    return {failures == 0, detail.str()};
}

// 10. Sharpness construction at finite scale.
Outcome criterion_sharpness() {
    constexpr std::size_t n = 1000000;
    constexpr unsigned ell = 8;
    const Rational epsilon(1, 20);
    bool ok = true;
    std::ostringstream detail;
    int index = 0;
    for (const auto& alpha : {Rational(1, 8), Rational(1, 4), Rational(3, 8)}) {
        const auto [x, params] = sharp_sequence(alpha, epsilon, n, 77 + index++);
        Rational rebuilt = make_rational(params.p, 2 * params.q) +
                           params.alpha_prime /
                               Rational(static_cast<unsigned long>(params.q));
        rebuilt.canonicalize();
        const bool identity_ok = rebuilt == alpha;
        const double gamma = to_double(gamma_ell(x, ell).value);
        const double h = block_entropy_h(x, ell);
        const double a = to_double(alpha);
        const double h_cap = 2.0 * a + to_double(epsilon) + 0.03;
        const bool gamma_ok = std::abs(gamma - a) <= 0.03;
        const bool h_ok = h <= h_cap;
        ok = ok && identity_ok && gamma_ok && h_ok;
        detail << "[alpha " << to_fraction_string(alpha) << ": gamma8 " << gamma
               << (gamma_ok ? "" : " OFF") << ", h8 " << h << " vs cap " << h_cap
               << (h_ok ? "" : " OVER") << ", identity "
               << (identity_ok ? "exact" : "BROKEN") << "] ";
    }
    return {ok, detail.str()};
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"exact counterexample reproduction", criterion_exact_reproduction},
        {"beta/gamma separation", criterion_separation},
        {"finite-word sandwich suite", criterion_sandwich_suite},
        {"brute-force oracle equivalence", criterion_oracle},
        {"chain rule and block identity", criterion_chain_rule},
        {"Monte Carlo vs exact", criterion_monte_carlo},
        {"normality witness (champernowne)", criterion_champernowne},
        {"determinism witness (sturmian)", criterion_sturmian},
        {"subadditivity under addition", criterion_subadditivity},
        {"sharpness construction", criterion_sharpness},
    };

    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
    if (selected.empty())
        for (std::size_t i = 1; i <= criteria.size(); ++i)
            selected.push_back(static_cast<int>(i));

    int failures = 0;
    for (int number : selected) {
        if (number < 1 || number > static_cast<int>(criteria.size())) {
            std::fprintf(stderr, "no criterion %d\n", number);
            return 2;
        }
        const auto& [name, fn] = criteria[number - 1];
        const auto outcome = fn();
        std::printf("criterion %2d %s: %s (%s)\n", number,
                    outcome.ok ? "PASS" : "FAIL", name.c_str(),
                    outcome.detail.c_str());
        std::fflush(stdout);
        if (!outcome.ok) ++failures;
    }
    if (selected.size() > 1)
        std::printf("%zu criteria, %d failed\n", selected.size(), failures);
    return failures;
}
