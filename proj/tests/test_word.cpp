#include "blockdim/word.hpp"

#include "blockdim/rng.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace blockdim;
using testutil::random_word;

TEST_SUITE("word") {

TEST_CASE("string round trip and indexing") {
    const Word w = Word::from_string("0110");
    CHECK(w.size() == 4);
    CHECK(w[0] == 0);
    CHECK(w[1] == 1);
    CHECK(w[2] == 1);
    CHECK(w[3] == 0);
    CHECK(w.str() == "0110");
    CHECK(Word::from_string("").empty());
}

TEST_CASE("invalid symbols rejected") {
    CHECK_THROWS_AS(Word::from_string("01x"), std::invalid_argument);
    Word w;
    CHECK_THROWS_AS(w.push_back(2), std::invalid_argument);
}

TEST_CASE("slice is the half-open range") {
    const Word w = Word::from_string("0110100");
    CHECK(w.slice(1, 4).str() == "110");
    CHECK(w.slice(3, 3).empty());
    CHECK(w.slice(0, w.size()) == w);
    CHECK_THROWS_AS(w.slice(3, 8), std::out_of_range);
    CHECK_THROWS_AS(w.slice(4, 3), std::out_of_range);
}

TEST_CASE("slice and reverse across limb boundaries") {
    SplitMix64 rng(7);
    const Word w = random_word(300, rng);
    const Word r = w.reversed();
    CHECK(r.size() == w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        CHECK(r[i] == w[w.size() - 1 - i]);
    const Word mid = w.slice(60, 200);
    for (std::size_t i = 0; i < mid.size(); ++i)
        CHECK(mid[i] == w[60 + i]);
}

TEST_CASE("window matches per-symbol reconstruction") {
    SplitMix64 rng(11);
    const Word w = random_word(257, rng);
    for (std::size_t pos : {std::size_t{0}, std::size_t{1}, std::size_t{63},
                            std::size_t{64}, std::size_t{65}, std::size_t{120}}) {
        for (unsigned len : {1u, 2u, 13u, 63u, 64u}) {
            if (pos + len > w.size()) continue;
            std::uint64_t expect = 0;
            for (unsigned j = 0; j < len; ++j)
                expect |= static_cast<std::uint64_t>(w[pos + j]) << j;
            CHECK(w.window(pos, len) == expect);
        }
    }
    CHECK_THROWS_AS(w.window(250, 20), std::out_of_range);
}

TEST_CASE("block codes form a bijection") {
    SplitMix64 rng(3);
    for (int iter = 0; iter < 200; ++iter) {
        const unsigned len = 1 + static_cast<unsigned>(rng.next_below(63));
        const Word u = random_word(len, rng);
        CHECK(decode_block(encode_block(u), len) == u);
    }
    for (int iter = 0; iter < 200; ++iter) {
        const unsigned len = 1 + static_cast<unsigned>(rng.next_below(20));
        const std::uint64_t code = rng.next_below(std::uint64_t{1} << len);
        CHECK(encode_block(decode_block(code, len)) == code);
    }
    CHECK_THROWS_AS(decode_block(4, 2), std::invalid_argument);
}

TEST_CASE("file io accepts one trailing newline and nothing else") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "blockdim_word_test";
    fs::create_directories(dir);

    const Word w = Word::from_string("0101101");
    const fs::path path = dir / "w.bits";
    w.save(path);
    CHECK(Word::load(path) == w);

    {
        std::ofstream out(dir / "no_newline.bits", std::ios::binary);
        out << "0011";
    }
    CHECK(Word::load(dir / "no_newline.bits").str() == "0011");

    {
        std::ofstream out(dir / "bad.bits", std::ios::binary);
        out << "0102\n";
    }
    CHECK_THROWS(Word::load(dir / "bad.bits"));

    {
        std::ofstream out(dir / "crlf.bits", std::ios::binary);
        out << "0011\r\n";
    }
    CHECK_THROWS(Word::load(dir / "crlf.bits"));

    CHECK_THROWS(Word::load(dir / "missing.bits"));
    fs::remove_all(dir);
}

TEST_CASE("append") {
    Word w = Word::from_string("01");
    w.append(Word::from_string("100"));
    CHECK(w.str() == "01100");
}

}  // TEST_SUITE
