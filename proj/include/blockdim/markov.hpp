#pragma once

#include "blockdim/rational.hpp"
#include "blockdim/word.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace blockdim {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Markov chain whose transitions emit a binary symbol: matrix(b)[i][j] is
// the probability of moving i -> j while emitting b. The two matrices sum
// row-stochastically to 1. Instances are immutable after validate().
struct LabeledMarkovChain {
    std::size_t states = 0;
    RationalMatrix p0, p1;

    LabeledMarkovChain() = default;
    explicit LabeledMarkovChain(std::size_t m);

    const RationalMatrix& matrix(int symbol) const { return symbol == 0 ? p0 : p1; }
    void set(std::size_t from, std::size_t to, int symbol, const Rational& prob);

    // Row sums exactly 1, all entries >= 0.
    void validate() const;
    // Strong connectivity of the support graph of p0 + p1.
    bool is_irreducible() const;

    // Text format: first line "states m", then one line "from to symbol p/q"
    // per nonzero transition. Probabilities must be exact fractions; decimal
    // floats are rejected. '#' starts a comment.
    static LabeledMarkovChain from_text(std::string_view text);
    static LabeledMarkovChain load(const std::filesystem::path& path);
    std::string to_text() const;
};

// Exact solve of pi (P0+P1) = pi, sum(pi) = 1. Throws on reducible chains.
std::vector<Rational> stationary_distribution(const LabeledMarkovChain& chain);

// mu([w]) = pi . P^(w[0]) ... P^(w[|w|-1]) . 1, one transition per symbol,
// so the measures of the 2^k length-k cylinders sum to 1 for every k.
Rational cylinder_measure(const LabeledMarkovChain& chain,
                          const std::vector<Rational>& pi, const Word& w);

// Enumeration bound for the closed-form complexities below.
inline constexpr unsigned kExactEnumMaxLen = 20;

// Asymptotic complexities of any generic sequence of the chain, from the
// cylinder measures alpha_u of the 2^(ell+1) blocks:
//   beta  = sum_w min(alpha_{0w}, alpha_{1w})
//   gamma = sum_w min(alpha_{w0}, alpha_{w1})
Rational exact_beta(const LabeledMarkovChain& chain,
                    const std::vector<Rational>& pi, unsigned ell);
Rational exact_gamma(const LabeledMarkovChain& chain,
                     const std::vector<Rational>& pi, unsigned ell);

inline constexpr std::size_t kSnakeStateCap = std::size_t{1} << 20;

// Chain over length-k state paths of the original chain; the snake chain of
// order 1 is the original chain itself.
struct SnakeChain {
    LabeledMarkovChain chain;
    std::vector<std::vector<std::size_t>> paths;  // state index -> path
};

SnakeChain snake_chain(const LabeledMarkovChain& chain, unsigned order,
                       std::size_t state_cap = kSnakeStateCap);

// Product-form stationary distribution of a snake chain:
// pi(q_1..q_k) = pi(q_1) P[q_1][q_2] ... P[q_{k-1}][q_k].
std::vector<Rational> snake_stationary_closed_form(
    const LabeledMarkovChain& original, const std::vector<Rational>& pi,
    const std::vector<std::vector<std::size_t>>& paths);

// Last-state prediction bound: sum_i pi_i min(theta_{i,0}, theta_{i,1})
// where theta_{i,b} is the probability of emitting b from state i. The
// asymptotic gamma of a generic sequence is at least this value.
Rational snake_lower_bound(const LabeledMarkovChain& chain,
                           const std::vector<Rational>& pi);

// The bundled 4-state chain whose asymptotic beta and gamma differ.
LabeledMarkovChain counterexample_chain();

}  // namespace blockdim
