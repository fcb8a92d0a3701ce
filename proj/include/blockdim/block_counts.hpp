#pragma once

#include "blockdim/word.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <vector>

namespace blockdim {

// Which end of an (ell+1)-block is the prediction target. The beta
// complexity predicts the symbol preceding its length-ell context, gamma
// predicts the symbol following it.
enum class Direction { predict_preceding, predict_following };

// Occurrence counts of all length-ell blocks over the scanned windows.
// Direct-indexed array for ell <= kDenseMaxLen, ordered map above. Counts
// are exact integers; completed instances are safe to share across threads.
class BlockCounts {
public:
    static constexpr unsigned kDenseMaxLen = 24;
    static constexpr unsigned kMaxLen = 63;

    explicit BlockCounts(unsigned block_length);

    unsigned block_length() const noexcept { return len_; }
    std::uint64_t window_total() const noexcept { return total_; }

    std::uint64_t count(std::uint64_t code) const;

    void add(std::uint64_t code, std::uint64_t n = 1) {
        if (n == 0) return;
        if (!dense_.empty())
            dense_[code] += n;
        else
            sparse_[code] += n;
        total_ += n;
    }

    // Exact integer addition of another counter with the same block length.
    void merge(const BlockCounts& other);

    std::uint64_t distinct_blocks() const;

    // Visits nonzero entries as f(code, count), ascending code order.
    template <class F>
    void for_each(F&& f) const {
        if (!dense_.empty()) {
            for (std::uint64_t code = 0; code < dense_.size(); ++code)
                if (dense_[code] != 0) f(code, dense_[code]);
        } else {
            for (const auto& [code, cnt] : sparse_) f(code, cnt);
        }
    }

    friend bool operator==(const BlockCounts& a, const BlockCounts& b) {
        return a.len_ == b.len_ && a.total_ == b.total_ &&
               a.dense_ == b.dense_ && a.sparse_ == b.sparse_;
    }

private:
    unsigned len_;
    std::uint64_t total_ = 0;
    std::vector<std::uint64_t> dense_;
    std::map<std::uint64_t, std::uint64_t> sparse_;
};

// Number of (possibly overlapping) occurrences of u in w; 0 when |u| > |w|.
// The empty word is rejected.
std::uint64_t occurrences(const Word& w, const Word& u);

// Counts of every length-ell block of w; window_total = |w| - ell + 1.
// Splits the scan across OpenMP threads and merges the per-thread tables.
BlockCounts block_counts(const Word& w, unsigned ell);
// Single-pass reference scan, kept as the oracle for the parallel kernel.
BlockCounts block_counts_serial(const Word& w, unsigned ell);

// Appends one symbol to an already-scanned word: recent_suffix must be the
// last ell-1 symbols seen. Cost is independent of the scanned length.
void extend_counts(BlockCounts& counts, int next_symbol, const Word& recent_suffix);

// Rolling scan state for prefix-incremental analysis.
class StreamingCounter {
public:
    explicit StreamingCounter(unsigned ell);
    void push(int bit);
    const BlockCounts& counts() const noexcept { return counts_; }
    std::size_t symbols_seen() const noexcept { return seen_; }

private:
    BlockCounts counts_;
    unsigned ell_;
    std::uint64_t suffix_ = 0;  // last min(seen, ell-1) symbols
    std::size_t seen_ = 0;
};

// Per-context counts of the predicted symbol, gathered from (ell+1)-block
// counts: context_counts(c, dir)[ctx] = {count of target 0, count of 1}.
std::map<std::uint64_t, std::array<std::uint64_t, 2>>
context_counts(const BlockCounts& counts, Direction dir);

}  // namespace blockdim
