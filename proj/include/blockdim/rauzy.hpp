#pragma once

#include "blockdim/block_counts.hpp"
#include "blockdim/rational.hpp"
#include "blockdim/word.hpp"

#include <cstdint>
#include <vector>

namespace blockdim {

// Optimal-predictor error rate: mismatches over the |w| - ell prediction
// positions, as an exact fraction. Always in [0, 1/2] since the better of
// the two constant predictors errs on at most half the positions.
struct RauzyValue {
    std::uint64_t mismatches = 0;
    std::uint64_t positions = 0;  // |w| - ell
    Rational value;               // mismatches / positions
};

// beta_ell: best predictor of w[i] from the ell symbols after it.
// gamma_ell: best predictor of w[i] from the ell symbols before it.
// Requires 1 <= ell < |w| and ell <= 62.
RauzyValue beta_ell(const Word& w, unsigned ell);
RauzyValue gamma_ell(const Word& w, unsigned ell);

// Same values computed from an existing (ell+1)-block counter, so streaming
// scans can share one table. predict_preceding gives beta, predict_following
// gives gamma.
RauzyValue rauzy_from_counts(const BlockCounts& counts, Direction dir);

// Total map from length-ell contexts to a predicted symbol.
struct PredictorTable {
    unsigned context_length = 0;
    Direction direction = Direction::predict_following;
    std::vector<std::uint8_t> table;  // 2^ell entries

    int predict(std::uint64_t context) const { return table[context]; }
};

// Majority rule per context; ties and unseen contexts resolve to symbol 0.
// Applying the table reproduces exactly the optimal mismatch count.
PredictorTable best_predictor(const Word& w, unsigned ell, Direction dir);

// Literal position-by-position evaluation of a predictor table.
std::uint64_t count_mismatches(const Word& w, const PredictorTable& table);

// Exact minimum over all 2^(2^ell) predictor tables, each evaluated
// literally. Oracle for the counting-based formulas; ell <= 3.
RauzyValue brute_force_rauzy(const Word& w, unsigned ell, Direction dir);

}  // namespace blockdim
