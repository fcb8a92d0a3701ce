#include "blockdim/block_counts.hpp"

#include "blockdim/rng.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace blockdim;
using testutil::constant_word;
using testutil::random_word;

TEST_SUITE("block_counts") {

TEST_CASE("occurrences of short blocks") {
    CHECK(occurrences(Word::from_string("0000"), Word::from_string("00")) == 3);
    CHECK(occurrences(Word::from_string("00110011"), Word::from_string("011")) == 2);
    CHECK(occurrences(Word::from_string("0101"), Word::from_string("10")) == 1);
    CHECK(occurrences(Word::from_string("01"), Word::from_string("011")) == 0);
    CHECK_THROWS_AS(occurrences(Word::from_string("01"), Word()), std::invalid_argument);

    SplitMix64 rng(5);
    for (int iter = 0; iter < 50; ++iter) {
        const Word w = random_word(1 + rng.next_below(200), rng);
        CHECK(occurrences(w, w) == 1);
    }
}

TEST_CASE("occurrences of blocks longer than 63 symbols") {
    SplitMix64 rng(17);
    const Word w = random_word(300, rng);
    const Word u = w.slice(100, 200);  // length 100
    std::uint64_t naive = 0;
    for (std::size_t i = 0; i + u.size() <= w.size(); ++i)
        naive += (w.slice(i, i + u.size()) == u);
    CHECK(occurrences(w, u) == naive);
    CHECK(naive >= 1);
}

TEST_CASE("basic tables") {
    const auto c1 = block_counts(Word::from_string("0101"), 1);
    CHECK(c1.count(0) == 2);
    CHECK(c1.count(1) == 2);
    CHECK(c1.window_total() == 4);

    const auto c2 = block_counts(Word::from_string("0000"), 2);
    CHECK(c2.count(0) == 3);
    CHECK(c2.window_total() == 3);
    CHECK(c2.distinct_blocks() == 1);

    CHECK_THROWS_AS(block_counts(Word::from_string("01"), 3), std::invalid_argument);
    CHECK_THROWS_AS(block_counts(Word::from_string("01"), 0), std::invalid_argument);
}

TEST_CASE("window totals and per-block agreement with occurrences") {
    SplitMix64 rng(23);
    for (int iter = 0; iter < 40; ++iter) {
        const Word w = random_word(30 + rng.next_below(400), rng);
        const unsigned ell = 1 + static_cast<unsigned>(rng.next_below(8));
        const auto counts = block_counts(w, ell);
        CHECK(counts.window_total() == w.size() - ell + 1);
        std::uint64_t sum = 0;
        counts.for_each([&](std::uint64_t code, std::uint64_t cnt) {
            sum += cnt;
            CHECK(cnt == occurrences(w, decode_block(code, ell)));
        });
        CHECK(sum == counts.window_total());
    }
}

TEST_CASE("parallel kernel equals the serial reference") {
    SplitMix64 rng(29);
    // Sizes straddling the parallel threshold plus one long word.
    for (std::size_t n : {std::size_t{1000}, std::size_t{(1u << 15) - 1},
                          std::size_t{(1u << 15) + 3}, std::size_t{100003},
                          std::size_t{1000000}}) {
        const Word w = random_word(n, rng);
        for (unsigned ell : {1u, 2u, 7u, 16u}) {
            CAPTURE(n);
            CAPTURE(ell);
            CHECK(block_counts(w, ell) == block_counts_serial(w, ell));
        }
    }
}

TEST_CASE("sparse storage beyond the dense cap") {
    SplitMix64 rng(31);
    const Word w = random_word(500, rng);
    const auto counts = block_counts(w, 30);
    CHECK(counts.window_total() == w.size() - 30 + 1);
    CHECK(counts.distinct_blocks() <= counts.window_total());
    counts.for_each([&](std::uint64_t code, std::uint64_t cnt) {
        CHECK(cnt == occurrences(w, decode_block(code, 30)));
    });
    CHECK(block_counts(w, 30) == block_counts_serial(w, 30));
}

TEST_CASE("merge is exact integer addition") {
    SplitMix64 rng(37);
    const Word a = random_word(500, rng);
    const Word b = random_word(700, rng);
    auto ca = block_counts(a, 4);
    const auto cb = block_counts(b, 4);
    const auto total_before = ca.window_total();
    ca.merge(cb);
    CHECK(ca.window_total() == total_before + cb.window_total());
    for (std::uint64_t code = 0; code < 16; ++code)
        CHECK(ca.count(code) == block_counts(a, 4).count(code) + cb.count(code));

    BlockCounts other(5);
    CHECK_THROWS_AS(ca.merge(other), std::invalid_argument);
}

TEST_CASE("extend_counts matches a fresh scan") {
    auto counts = block_counts(Word::from_string("010"), 2);
    extend_counts(counts, 1, Word::from_string("0"));
    CHECK(counts == block_counts(Word::from_string("0101"), 2));

    CHECK_THROWS_AS(extend_counts(counts, 1, Word::from_string("00")),
                    std::invalid_argument);
    CHECK_THROWS_AS(extend_counts(counts, 2, Word::from_string("0")),
                    std::invalid_argument);

    // block length 1 takes the empty suffix
    auto unigrams = block_counts(Word::from_string("0"), 1);
    extend_counts(unigrams, 1, Word());
    CHECK(unigrams == block_counts(Word::from_string("01"), 1));
}

TEST_CASE("extending a constant word touches a single key") {
    const unsigned ell = 3;
    auto counts = block_counts(constant_word(3, 1), ell);
    const Word suffix = Word::from_string("11");
    for (int i = 0; i < 20; ++i) extend_counts(counts, 1, suffix);
    CHECK(counts.distinct_blocks() == 1);
    CHECK(counts.count(7) == 21);
}

TEST_CASE("streaming increments reproduce a full scan") {
    SplitMix64 rng(41);
    for (int iter = 0; iter < 1000; ++iter) {
        const std::size_t n = 8 + rng.next_below(10000 - 8 + 1);
        const Word w = random_word(n, rng);
        const unsigned ell = 1 + static_cast<unsigned>(rng.next_below(7));
        StreamingCounter sc(ell);
        for (std::size_t i = 0; i < w.size(); ++i) sc.push(w[i]);
        CHECK(sc.counts() == block_counts(w, ell));
    }
}

TEST_CASE("streaming matches a full scan at length one million") {
    SplitMix64 rng(43);
    const Word w = random_word(1000000, rng);
    StreamingCounter sc(8);
    for (std::size_t i = 0; i < w.size(); ++i) sc.push(w[i]);
    CHECK(sc.counts() == block_counts(w, 8));
}

TEST_CASE("occurrence consistency across block lengths") {
    // occ(w,u) = occ(w,u0) + occ(w,u1) + [u is the final window of w]
    SplitMix64 rng(47);
    for (int iter = 0; iter < 30; ++iter) {
        const Word w = random_word(50 + rng.next_below(300), rng);
        for (std::uint64_t code = 0; code < 8; ++code) {
            const Word u = decode_block(code, 3);
            Word u0 = u, u1 = u;
            u0.push_back(0);
            u1.push_back(1);
            const std::uint64_t tail =
                w.slice(w.size() - 3, w.size()) == u ? 1 : 0;
            CHECK(occurrences(w, u) ==
                  occurrences(w, u0) + occurrences(w, u1) + tail);
        }
    }
}

TEST_CASE("context split of a small table") {
    // word 00110: length-2 blocks 00,01,11,10
    const auto counts = block_counts(Word::from_string("00110"), 2);
    const auto following = context_counts(counts, Direction::predict_following);
    CHECK(following.at(0)[0] == 1);  // 00
    CHECK(following.at(0)[1] == 1);  // 01
    CHECK(following.at(1)[0] == 1);  // 10
    CHECK(following.at(1)[1] == 1);  // 11
    const auto preceding = context_counts(counts, Direction::predict_preceding);
    CHECK(preceding.at(0)[0] == 1);  // 00
    CHECK(preceding.at(0)[1] == 1);  // 10
    CHECK(preceding.at(1)[0] == 1);  // 01
    CHECK(preceding.at(1)[1] == 1);  // 11
}

}  // TEST_SUITE
