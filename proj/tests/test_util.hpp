#pragma once

#include "blockdim/rng.hpp"
#include "blockdim/word.hpp"

#include <cstddef>

namespace blockdim::testutil {

inline Word random_word(std::size_t n, SplitMix64& rng) {
    Word w;
    for (std::size_t i = 0; i < n; ++i)
        w.push_back(static_cast<int>(rng.next() & 1u));
    return w;
}

inline Word constant_word(std::size_t n, int bit) {
    Word w;
    for (std::size_t i = 0; i < n; ++i) w.push_back(bit);
    return w;
}

inline Word alternating_word(std::size_t n) {
    Word w;
    for (std::size_t i = 0; i < n; ++i) w.push_back(static_cast<int>(i & 1));
    return w;
}

}  // namespace blockdim::testutil
