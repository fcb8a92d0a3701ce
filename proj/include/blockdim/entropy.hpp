#pragma once

#include "blockdim/block_counts.hpp"
#include "blockdim/rational.hpp"
#include "blockdim/word.hpp"

#include <cstdint>
#include <vector>

namespace blockdim {

// Joint law of the ell+1 symbols of a sliding window of w = x[0:n), i.e.
// coordinates X_0..X_ell with p(a_0..a_ell) = occ(w, a_0..a_ell) / (n-ell).
// Counts stay exact; probabilities become floats only inside entropies.
struct EmpiricalBlockDistribution {
    std::size_t n = 0;
    unsigned ell = 0;
    BlockCounts counts;  // block length ell+1, window_total n-ell

    std::uint64_t denominator() const noexcept { return counts.window_total(); }
    Rational probability(std::uint64_t code) const {
        return make_rational(counts.count(code), denominator());
    }
};

// Requires ell+1 <= |w|.
EmpiricalBlockDistribution empirical_distribution(const Word& w, unsigned ell);

// eta(a) = -a log2 a - (1-a) log2 (1-a); eta(0) = eta(1) = 0. Arguments
// outside [0,1] are a domain error.
double binary_entropy(double alpha);
double binary_entropy(const Rational& alpha);

// Non-aligned block entropy: -(1/ell) sum_u f_u log2 f_u over length-ell
// blocks, f_u = occ(w,u) / (|w|-ell+1).
double block_entropy_h(const Word& w, unsigned ell);

// The same sum without the 1/ell normalization; identical summation order
// as joint_entropy so the (ell+1) * h identity is bit-exact.
double block_entropy_sum(const BlockCounts& counts);

double joint_entropy(const EmpiricalBlockDistribution& d);

// H(X_ell | X_0..X_{ell-1}) = sum_ctx p(ctx) eta(p(1|ctx)); zero-probability
// contexts contribute 0.
double conditional_entropy_last(const EmpiricalBlockDistribution& d);
// Context trimmed to the context_len coordinates immediately before X_ell;
// context_len = 0 gives the plain marginal entropy of X_ell.
double conditional_entropy_last(const EmpiricalBlockDistribution& d, unsigned context_len);
// H(X_0 | X_1..X_ell): the orientation where the predicted symbol precedes
// its context.
double conditional_entropy_first(const EmpiricalBlockDistribution& d);
// H(X_i | X_0..X_{i-1}); i = 0 gives the marginal entropy of X_0.
double conditional_entropy_at(const EmpiricalBlockDistribution& d, unsigned i);

double conditional_entropy_last_from_counts(const BlockCounts& counts);

// Exact occurrence counts of the sub-block (X_first..X_last); index bit j
// corresponds to coordinate first+j. last-first <= 23.
std::vector<std::uint64_t> marginal_counts(const EmpiricalBlockDistribution& d,
                                           unsigned first, unsigned last);

// Finite-scale comparison of the block entropy rate against the conditional
// entropy of the last symbol, with a refined rate at a larger block size.
// gap_lower ~ rate(ell) - hc, gap_upper ~ rate(ell_prime) - hc; both shrink
// for long generic inputs but are reported, never asserted.
struct EntropyConvergenceReport {
    double h_rate = 0;          // H(X_0..X_ell) / (ell+1)
    double hc = 0;              // H(X_ell | X_0..X_{ell-1})
    double h_rate_refined = 0;  // H(X_0..X_ell') / (ell'+1)
    double gap_lower = 0;
    double gap_upper = 0;
};

EntropyConvergenceReport entropy_convergence_report(const Word& w, unsigned ell,
                                                    unsigned ell_prime);

}  // namespace blockdim
