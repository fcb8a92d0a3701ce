#include "blockdim/block_counts.hpp"

#include <omp.h>

#include <stdexcept>

namespace blockdim {
namespace {

// Parallel scan keeps one dense table per thread; cap the table size so the
// memory stays bounded, and skip the fork for short inputs.
constexpr unsigned kParallelMaxLen = 20;
constexpr std::size_t kParallelMinWindows = 1u << 15;

void check_block_length(unsigned ell) {
    if (ell < 1 || ell > BlockCounts::kMaxLen)
        throw std::invalid_argument("block length must be in [1, 63]");
}

}  // namespace

BlockCounts::BlockCounts(unsigned block_length) : len_(block_length) {
    check_block_length(block_length);
    if (len_ <= kDenseMaxLen) dense_.assign(std::uint64_t{1} << len_, 0);
}

std::uint64_t BlockCounts::count(std::uint64_t code) const {
    if (len_ < 64 && (code >> len_) != 0)
        throw std::out_of_range("block code wider than block length");
    if (!dense_.empty()) return dense_[code];
    auto it = sparse_.find(code);
    return it == sparse_.end() ? 0 : it->second;
}

void BlockCounts::merge(const BlockCounts& other) {
    if (other.len_ != len_)
        throw std::invalid_argument("merging counts of different block lengths");
    other.for_each([this](std::uint64_t code, std::uint64_t cnt) { add(code, cnt); });
}

std::uint64_t BlockCounts::distinct_blocks() const {
    std::uint64_t distinct = 0;
    for_each([&](std::uint64_t, std::uint64_t) { ++distinct; });
    return distinct;
}

std::uint64_t occurrences(const Word& w, const Word& u) {
    if (u.empty())
        throw std::invalid_argument("occurrence count of the empty word is undefined");
    if (u.size() > w.size()) return 0;
    std::uint64_t hits = 0;
    if (u.size() <= 63) {
        const unsigned len = static_cast<unsigned>(u.size());
        const std::uint64_t target = encode_block(u);
        std::uint64_t code = w.window(0, len);
        hits += (code == target);
        for (std::size_t i = 1; i + len <= w.size(); ++i) {
            code = (code >> 1) |
                   (static_cast<std::uint64_t>(w[i + len - 1]) << (len - 1));
            hits += (code == target);
        }
        return hits;
    }
    // Long needles: compare 64-symbol chunks per window.
    for (std::size_t i = 0; i + u.size() <= w.size(); ++i) {
        bool match = true;
        for (std::size_t j = 0; j < u.size() && match; j += 64) {
            unsigned len = static_cast<unsigned>(std::min<std::size_t>(64, u.size() - j));
            match = w.window(i + j, len) == u.window(j, len);
        }
        hits += match;
    }
    return hits;
}

BlockCounts block_counts_serial(const Word& w, unsigned ell) {
    check_block_length(ell);
    if (w.size() < ell)
        throw std::invalid_argument("block length exceeds word length");
    BlockCounts counts(ell);
    const std::size_t windows = w.size() - ell + 1;
    std::uint64_t code = w.window(0, ell);
    counts.add(code);
    for (std::size_t i = 1; i < windows; ++i) {
        code = (code >> 1) |
               (static_cast<std::uint64_t>(w[i + ell - 1]) << (ell - 1));
        counts.add(code);
    }
    return counts;
}

BlockCounts block_counts(const Word& w, unsigned ell) {
    check_block_length(ell);
    if (w.size() < ell)
        throw std::invalid_argument("block length exceeds word length");
    const std::size_t windows = w.size() - ell + 1;
    if (ell > kParallelMaxLen || windows < kParallelMinWindows ||
        omp_get_max_threads() == 1)
        return block_counts_serial(w, ell);

    BlockCounts counts(ell);
#pragma omp parallel
    {
        const std::size_t t = static_cast<std::size_t>(omp_get_thread_num());
        const std::size_t nt = static_cast<std::size_t>(omp_get_num_threads());
        const std::size_t begin = windows * t / nt;
        const std::size_t end = windows * (t + 1) / nt;
        if (begin < end) {
            BlockCounts local(ell);
            std::uint64_t code = w.window(begin, ell);
            local.add(code);
            for (std::size_t i = begin + 1; i < end; ++i) {
                code = (code >> 1) |
                       (static_cast<std::uint64_t>(w[i + ell - 1]) << (ell - 1));
                local.add(code);
            }
#pragma omp critical(blockdim_counts_merge)
            counts.merge(local);
        }
    }
    return counts;
}

void extend_counts(BlockCounts& counts, int next_symbol, const Word& recent_suffix) {
    if (next_symbol != 0 && next_symbol != 1)
        throw std::invalid_argument("symbol outside {0,1}");
    const unsigned ell = counts.block_length();
    if (recent_suffix.size() + 1 != ell)
        throw std::invalid_argument("suffix length must be block length - 1");
    const std::uint64_t code =
        encode_block(recent_suffix) |
        (static_cast<std::uint64_t>(next_symbol) << (ell - 1));
    counts.add(code);
}

StreamingCounter::StreamingCounter(unsigned ell) : counts_(ell), ell_(ell) {}

void StreamingCounter::push(int bit) {
    if (bit != 0 && bit != 1)
        throw std::invalid_argument("symbol outside {0,1}");
    ++seen_;
    if (seen_ >= ell_) {
        const std::uint64_t code =
            suffix_ | (static_cast<std::uint64_t>(bit) << (ell_ - 1));
        counts_.add(code);
        suffix_ = code >> 1;
    } else {
        suffix_ |= static_cast<std::uint64_t>(bit) << (seen_ - 1);
    }
}

std::map<std::uint64_t, std::array<std::uint64_t, 2>>
context_counts(const BlockCounts& counts, Direction dir) {
    const unsigned len = counts.block_length();
    if (len < 2)
        throw std::invalid_argument("context split needs block length >= 2");
    const unsigned ell = len - 1;
    std::map<std::uint64_t, std::array<std::uint64_t, 2>> out;
    counts.for_each([&](std::uint64_t code, std::uint64_t cnt) {
        std::uint64_t ctx;
        unsigned target;
        if (dir == Direction::predict_following) {
            ctx = code & ((std::uint64_t{1} << ell) - 1);
            target = static_cast<unsigned>(code >> ell);
        } else {
            ctx = code >> 1;
            target = static_cast<unsigned>(code & 1u);
        }
        out[ctx][target] += cnt;
    });
    return out;
}

}  // namespace blockdim
