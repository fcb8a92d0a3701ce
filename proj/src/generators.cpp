#include "blockdim/generators.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace blockdim {
namespace {

// floor(r * 2^53) as an unsigned threshold for 53-bit draws; r in [0,1].
std::uint64_t draw_threshold(const Rational& r) {
    Integer t = (r.get_num() << 53) / r.get_den();  // floor for nonnegative r
    if (!t.fits_ulong_p()) throw std::domain_error("threshold out of range");
    return t.get_ui();
}

// Per-state cumulative emission thresholds, transition order: symbol 0 row
// first, then symbol 1, targets ascending.
struct WalkTables {
    struct Edge {
        std::uint64_t threshold;
        std::size_t to;
        int symbol;
    };
    std::vector<std::vector<Edge>> edges;

    explicit WalkTables(const LabeledMarkovChain& chain) : edges(chain.states) {
        for (std::size_t i = 0; i < chain.states; ++i) {
            Rational cum = 0;
            for (int b : {0, 1}) {
                for (std::size_t j = 0; j < chain.states; ++j) {
                    const Rational& p = chain.matrix(b)[i][j];
                    if (p == 0) continue;
                    cum += p;
                    edges[i].push_back({draw_threshold(cum), j, b});
                }
            }
            if (edges[i].empty())
                throw std::invalid_argument("state with no outgoing transition");
            edges[i].back().threshold = std::uint64_t{1} << 53;  // row sums to 1
        }
    }
};

}  // namespace

Word champernowne(std::size_t n) {
    Word w;
    for (std::uint64_t v = 1; w.size() < n; ++v) {
        const int width = 64 - __builtin_clzll(v);
        for (int i = width - 1; i >= 0 && w.size() < n; --i)
            w.push_back(static_cast<int>((v >> i) & 1u));
    }
    return w;
}

Word sturmian(double theta, double rho, std::size_t n) {
    Word w;
    double prev = std::floor(rho);
    for (std::size_t k = 0; k < n; ++k) {
        const double cur = std::floor(static_cast<double>(k + 1) * theta + rho);
        const double diff = cur - prev;
        w.push_back(diff >= 1.0 ? 1 : 0);
        prev = cur;
    }
    return w;
}

bool theta_looks_rational(double theta) {
    // Continued-fraction convergents of theta. A small-denominator convergent
    // within 1e-14 only happens when theta was a rational to begin with (its
    // double representation is 2^-53-exact); badly approximable irrationals
    // like the golden ratio stay orders of magnitude away at q <= 1e6.
    double x = theta;
    std::uint64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int iter = 0; iter < 64; ++iter) {
        const double a = std::floor(x);
        if (a > 1e15) break;
        const std::uint64_t ai = static_cast<std::uint64_t>(a);
        const std::uint64_t p = ai * p1 + p0;
        const std::uint64_t q = ai * q1 + q0;
        if (q > 1000000) break;
        if (q > 0 && std::abs(theta - static_cast<double>(p) / static_cast<double>(q)) < 1e-14)
            return true;
        p0 = p1; q0 = q1; p1 = p; q1 = q;
        const double frac = x - a;
        if (frac < 1e-15) break;
        x = 1.0 / frac;
    }
    return false;
}

Word bernoulli_word(const Rational& alpha_zero, std::size_t n, std::uint64_t seed) {
    if (alpha_zero < 0 || alpha_zero > 1)
        throw std::domain_error("alpha outside [0,1]");
    const std::uint64_t threshold = draw_threshold(alpha_zero);
    SplitMix64 rng(seed);
    Word w;
    for (std::size_t i = 0; i < n; ++i)
        w.push_back(rng.next53() < threshold ? 0 : 1);
    return w;
}

namespace {

Word walk_impl(const LabeledMarkovChain& chain, std::size_t n, SplitMix64& rng,
               std::size_t state) {
    const WalkTables tables(chain);
    Word w;
    for (std::size_t step = 0; step < n; ++step) {
        const std::uint64_t r = rng.next53();
        for (const auto& edge : tables.edges[state]) {
            if (r < edge.threshold) {
                w.push_back(edge.symbol);
                state = edge.to;
                break;
            }
        }
    }
    return w;
}

}  // namespace

Word markov_walk(const LabeledMarkovChain& chain, std::size_t n,
                 std::uint64_t seed, std::size_t start_state) {
    chain.validate();
    if (start_state >= chain.states)
        throw std::invalid_argument("start state out of range");
    SplitMix64 rng(seed);
    return walk_impl(chain, n, rng, start_state);
}

Word markov_walk_stationary_start(const LabeledMarkovChain& chain, std::size_t n,
                                  std::uint64_t seed) {
    chain.validate();
    const auto pi = stationary_distribution(chain);
    SplitMix64 rng(seed);
    const std::uint64_t r = rng.next53();
    std::size_t state = chain.states - 1;
    Rational cum = 0;
    for (std::size_t i = 0; i < chain.states; ++i) {
        cum += pi[i];
        if (r < draw_threshold(cum)) {
            state = i;
            break;
        }
    }
    return walk_impl(chain, n, rng, state);
}

SharpParams sharp_params(const Rational& alpha, const Rational& epsilon) {
    if (alpha < 0 || alpha > Rational(1, 2))
        throw std::domain_error("alpha outside [0, 1/2]");
    if (epsilon <= 0) throw std::domain_error("epsilon must be positive");

    // q = ceil(1/epsilon) + 1 guarantees 1/q < epsilon.
    Integer q_big;
    mpz_cdiv_q(q_big.get_mpz_t(), epsilon.get_den().get_mpz_t(),
               epsilon.get_num().get_mpz_t());
    q_big += 1;
    if (!q_big.fits_ulong_p() || q_big.get_ui() > (1ull << 32))
        throw std::domain_error("epsilon too small (period would overflow)");
    const std::uint64_t q = q_big.get_ui();

    // Largest p with p/(2q) <= alpha; then alpha' = q*alpha - p/2 in [0, 1/2).
    const Rational two_q_alpha = Rational(2) * Rational(static_cast<unsigned long>(q)) * alpha;
    Integer p_big;
    mpz_fdiv_q(p_big.get_mpz_t(), two_q_alpha.get_num().get_mpz_t(),
               two_q_alpha.get_den().get_mpz_t());
    std::uint64_t p = p_big.get_ui();

    SharpParams params;
    params.q = q;
    params.p = p;
    params.alpha_prime = Rational(static_cast<unsigned long>(q)) * alpha -
                         Rational(static_cast<unsigned long>(p), 2ul);
    params.alpha_prime.canonicalize();
    if (params.alpha_prime < 0 || params.alpha_prime >= Rational(1, 2))
        throw std::logic_error("sharp decomposition out of range");
    return params;
}

std::pair<Word, SharpParams> sharp_sequence(const Rational& alpha,
                                            const Rational& epsilon,
                                            std::size_t n, std::uint64_t seed) {
    const SharpParams params = sharp_params(alpha, epsilon);
    const Word y = champernowne(n);
    const Word z = bernoulli_word(params.alpha_prime, n, seed);
    Word x;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t r = i % params.q;
        if (r < params.p)
            x.push_back(y[i]);
        else if (r == params.p)
            x.push_back(z[i]);
        else
            x.push_back(0);
    }
    return {std::move(x), params};
}

Word counterexample_walk(std::size_t n, std::uint64_t seed) {
    return markov_walk(counterexample_chain(), n, seed, 0);
}

GeneratedWord generate(const GeneratorSpec& spec) {
    GeneratedWord out;
    if (spec.kind == "champernowne") {
        out.word = champernowne(spec.length);
    } else if (spec.kind == "sturmian") {
        out.word = sturmian(spec.theta, spec.rho, spec.length);
    } else if (spec.kind == "bernoulli") {
        out.word = bernoulli_word(spec.alpha, spec.length, spec.seed);
    } else if (spec.kind == "markov") {
        const auto chain = LabeledMarkovChain::load(spec.chain_path);
        out.word = spec.stationary_start
                       ? markov_walk_stationary_start(chain, spec.length, spec.seed)
                       : markov_walk(chain, spec.length, spec.seed, spec.start_state);
    } else if (spec.kind == "sharp") {
        auto [word, params] = sharp_sequence(spec.alpha, spec.epsilon, spec.length, spec.seed);
        out.word = std::move(word);
        out.sharp = params;
    } else if (spec.kind == "counterexample") {
        out.word = counterexample_walk(spec.length, spec.seed);
    } else {
        throw std::invalid_argument("unknown generator kind '" + spec.kind + "'");
    }
    return out;
}

void write_with_sidecar(const GeneratedWord& generated, const GeneratorSpec& spec,
                        const std::filesystem::path& path) {
    generated.word.save(path);

    std::ostringstream meta;
    meta << "kind=" << spec.kind << '\n';
    meta << "length=" << spec.length << '\n';
    if (spec.kind == "bernoulli" || spec.kind == "markov" || spec.kind == "sharp" ||
        spec.kind == "counterexample")
        meta << "seed=" << spec.seed << '\n';
    if (spec.kind == "sturmian") {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", spec.theta);
        meta << "theta=" << buf << '\n';
        std::snprintf(buf, sizeof buf, "%.17g", spec.rho);
        meta << "rho=" << buf << '\n';
        if (theta_looks_rational(spec.theta))
            meta << "eventually_periodic=1\n";
    }
    if (spec.kind == "bernoulli" || spec.kind == "sharp")
        meta << "alpha=" << to_fraction_string(spec.alpha) << '\n';
    if (spec.kind == "sharp") {
        meta << "epsilon=" << to_fraction_string(spec.epsilon) << '\n';
        meta << "p=" << generated.sharp->p << '\n';
        meta << "q=" << generated.sharp->q << '\n';
        meta << "alpha_prime=" << to_fraction_string(generated.sharp->alpha_prime) << '\n';
    }
    if (spec.kind == "markov") {
        meta << "chain=" << spec.chain_path << '\n';
        if (spec.stationary_start)
            meta << "start=stationary\n";
        else
            meta << "start_state=" << spec.start_state << '\n';
    }

    std::filesystem::path meta_path = path;
    meta_path += ".meta";
    std::ofstream out(meta_path);
    if (!out) throw std::runtime_error("cannot write " + meta_path.string());
    out << meta.str();
}

}  // namespace blockdim
