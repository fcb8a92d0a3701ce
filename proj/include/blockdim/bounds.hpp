#pragma once

#include "blockdim/entropy.hpp"
#include "blockdim/rational.hpp"
#include "blockdim/rauzy.hpp"
#include "blockdim/word.hpp"

#include <cstdint>
#include <vector>

namespace blockdim {

// Slack for inequalities that are exact in real arithmetic but whose
// entropy sides are evaluated in doubles.
inline constexpr double kIneqSlack = 1e-9;

// Per-context prediction-error probabilities: p is the context weight,
// e = min(p(0|ctx), p(1|ctx)) in [0, 1/2]. Only observed contexts appear;
// the weighted error sums exactly to the optimal-predictor error rate.
struct ContextError {
    std::uint64_t context = 0;
    Rational p;
    Rational e;
};

struct ErrorProfile {
    unsigned ell = 0;
    std::vector<ContextError> contexts;  // ascending context code

    Rational weighted_error() const;  // sum p * e
    double eta_mix() const;           // sum p * eta(e)
};

// Contexts precede the predicted symbol (the gamma orientation).
ErrorProfile error_profile(const Word& w, unsigned ell);
ErrorProfile error_profile(const EmpiricalBlockDistribution& d, Direction dir);

// Finite-word two-sided bound 2*err <= sum p*eta(e) <= eta(err), checked in
// both orientations. The chain holds for every finite word; a false flag
// indicates an implementation bug, not input behavior.
struct SandwichReport {
    unsigned ell = 0;
    std::size_t n = 0;
    Rational gamma, beta;
    double hc = 0;       // sum p*eta(e), contexts before the symbol
    double hc_beta = 0;  // same with contexts after the symbol
    bool lower_ok = false, upper_ok = false;
    bool lower_ok_beta = false, upper_ok_beta = false;

    bool all_ok() const { return lower_ok && upper_ok && lower_ok_beta && upper_ok_beta; }
};

SandwichReport verify_sandwich(const Word& w, unsigned ell);

// One row per (n, ell) cell, computed by a single streaming pass per ell.
struct ConvergenceRow {
    std::size_t n = 0;
    unsigned ell = 0;
    Rational beta, gamma;
    double h = 0;
    double hc = 0;
};

std::vector<ConvergenceRow> convergence_table(const Word& x,
                                              const std::vector<unsigned>& ells,
                                              const std::vector<std::size_t>& ns);

}  // namespace blockdim
