#include "blockdim/rauzy.hpp"

#include <algorithm>
#include <stdexcept>

namespace blockdim {
namespace {

void check_ell(const Word& w, unsigned ell) {
    if (ell < 1) throw std::invalid_argument("context length must be >= 1");
    if (ell + 1 > BlockCounts::kMaxLen)
        throw std::invalid_argument("context length must be <= 62");
    if (ell >= w.size())
        throw std::invalid_argument("context length must be < |w| (no prediction positions)");
}

std::uint64_t min_mismatch_total(const BlockCounts& counts, Direction dir) {
    std::uint64_t total = 0;
    for (const auto& [ctx, pair] : context_counts(counts, dir))
        total += std::min(pair[0], pair[1]);
    return total;
}

// Target symbol and context code of the prediction at index i.
struct PositionView {
    int target;
    std::uint64_t context;
};

PositionView position(const Word& w, unsigned ell, Direction dir, std::size_t i) {
    if (dir == Direction::predict_following)
        return {w[ell + i], w.window(i, ell)};
    return {w[i], w.window(i + 1, ell)};
}

}  // namespace

RauzyValue rauzy_from_counts(const BlockCounts& counts, Direction dir) {
    RauzyValue v;
    v.positions = counts.window_total();
    if (v.positions == 0)
        throw std::invalid_argument("no prediction positions");
    v.mismatches = min_mismatch_total(counts, dir);
    v.value = make_rational(v.mismatches, v.positions);
    return v;
}

RauzyValue beta_ell(const Word& w, unsigned ell) {
    check_ell(w, ell);
    return rauzy_from_counts(block_counts(w, ell + 1), Direction::predict_preceding);
}

RauzyValue gamma_ell(const Word& w, unsigned ell) {
    check_ell(w, ell);
    return rauzy_from_counts(block_counts(w, ell + 1), Direction::predict_following);
}

PredictorTable best_predictor(const Word& w, unsigned ell, Direction dir) {
    check_ell(w, ell);
    PredictorTable t;
    t.context_length = ell;
    t.direction = dir;
    t.table.assign(std::uint64_t{1} << ell, 0);
    for (const auto& [ctx, pair] : context_counts(block_counts(w, ell + 1), dir))
        if (pair[1] > pair[0]) t.table[ctx] = 1;
    return t;
}

std::uint64_t count_mismatches(const Word& w, const PredictorTable& table) {
    const unsigned ell = table.context_length;
    check_ell(w, ell);
    std::uint64_t mismatches = 0;
    for (std::size_t i = 0; i + ell < w.size(); ++i) {
        const auto view = position(w, ell, table.direction, i);
        mismatches += (view.target != table.predict(view.context));
    }
    return mismatches;
}

RauzyValue brute_force_rauzy(const Word& w, unsigned ell, Direction dir) {
    if (ell > 3) throw std::invalid_argument("brute force capped at context length 3");
    check_ell(w, ell);
    const unsigned contexts = 1u << ell;
    const std::uint64_t tables = std::uint64_t{1} << contexts;
    const std::uint64_t positions = w.size() - ell;

    std::uint64_t best = positions + 1;
    for (std::uint64_t f = 0; f < tables; ++f) {
        std::uint64_t mismatches = 0;
        for (std::size_t i = 0; i < positions && mismatches < best; ++i) {
            const auto view = position(w, ell, dir, i);
            const int predicted = static_cast<int>((f >> view.context) & 1u);
            mismatches += (view.target != predicted);
        }
        best = std::min(best, mismatches);
    }

    RauzyValue v;
    v.mismatches = best;
    v.positions = positions;
    v.value = make_rational(best, positions);
    return v;
}

}  // namespace blockdim
