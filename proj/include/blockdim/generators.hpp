#pragma once

#include "blockdim/markov.hpp"
#include "blockdim/rational.hpp"
#include "blockdim/rng.hpp"
#include "blockdim/word.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>

namespace blockdim {

// First n bits of the concatenated binary expansions of 1, 2, 3, ...
Word champernowne(std::size_t n);

// Rotation word x_k = floor((k+1)theta + rho) - floor(k theta + rho).
// Irrational theta gives a Sturmian word; rational theta is accepted but
// eventually periodic.
Word sturmian(double theta, double rho, std::size_t n);

// True when theta sits within 1e-12 of a fraction with denominator <= 1e6;
// flags rotation parameters that make the output periodic.
bool theta_looks_rational(double theta);

// n independent symbols with P(0) = alpha_zero: symbol 0 iff a 53-bit draw
// falls below floor(alpha * 2^53).
Word bernoulli_word(const Rational& alpha_zero, std::size_t n, std::uint64_t seed);

// Symbol labels of an n-step trajectory. Transitions are scanned in a fixed
// order (symbol 0 row, then symbol 1 row, ascending target state) against
// cumulative 53-bit thresholds, so a seed pins the exact path.
Word markov_walk(const LabeledMarkovChain& chain, std::size_t n,
                 std::uint64_t seed, std::size_t start_state = 0);
// Same, but the initial state is drawn from the stationary distribution.
Word markov_walk_stationary_start(const LabeledMarkovChain& chain, std::size_t n,
                                  std::uint64_t seed);

// Decomposition alpha = p/(2q) + alpha'/q with q = ceil(1/epsilon) + 1 (the
// smallest admissible modulus), p = floor(2 q alpha), alpha' in [0, 1/2).
struct SharpParams {
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    Rational alpha_prime;
};

SharpParams sharp_params(const Rational& alpha, const Rational& epsilon);

// Interleaving witness for prediction error alpha with entropy <= 2 alpha +
// epsilon: position i carries a champernowne bit when i mod q < p, a
// Bernoulli(alpha') bit when i mod q == p, and 0 otherwise.
std::pair<Word, SharpParams> sharp_sequence(const Rational& alpha,
                                            const Rational& epsilon,
                                            std::size_t n, std::uint64_t seed);

// Walk over the bundled counterexample chain, started in state 0.
Word counterexample_walk(std::size_t n, std::uint64_t seed);

// Everything needed to regenerate a word; written next to the bit stream as
// a key=value sidecar. A spec (seed included) always yields the same word.
struct GeneratorSpec {
    std::string kind;  // champernowne|sturmian|bernoulli|markov|sharp|counterexample
    std::size_t length = 0;
    std::uint64_t seed = 0;
    double theta = 0.0;
    double rho = 0.0;
    Rational alpha;
    Rational epsilon;
    std::string chain_path;
    bool stationary_start = false;
    std::size_t start_state = 0;
};

struct GeneratedWord {
    Word word;
    std::optional<SharpParams> sharp;
};

GeneratedWord generate(const GeneratorSpec& spec);

// Bit stream at `path`, spec sidecar at `path`.meta.
void write_with_sidecar(const GeneratedWord& generated, const GeneratorSpec& spec,
                        const std::filesystem::path& path);

}  // namespace blockdim
