#include "blockdim/markov.hpp"

#include "blockdim/linalg.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace blockdim {
namespace {

RationalMatrix zero_matrix(std::size_t m) {
    return RationalMatrix(m, std::vector<Rational>(m, Rational(0)));
}

// pi . P^(b), reused by the cylinder DFS and the measure evaluation.
std::vector<Rational> row_times_matrix(const std::vector<Rational>& v,
                                       const RationalMatrix& p) {
    const std::size_t m = v.size();
    std::vector<Rational> out(m, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m; ++j) {
            if (p[i][j] == 0) continue;
            out[j] += v[i] * p[i][j];
        }
    }
    for (auto& q : out) q.canonicalize();
    return out;
}

Rational sum_of(const std::vector<Rational>& v) {
    Rational acc = 0;
    for (const auto& q : v) acc += q;
    acc.canonicalize();
    return acc;
}

// Cylinder measures of all length-len blocks, indexed by block code.
// Prefix products are shared along the DFS over symbols.
void measures_dfs(const LabeledMarkovChain& chain, std::vector<Rational>& out,
                  const std::vector<Rational>& v, std::uint64_t code,
                  unsigned depth, unsigned len) {
    if (depth == len) {
        out[code] = sum_of(v);
        return;
    }
    measures_dfs(chain, out, row_times_matrix(v, chain.p0), code, depth + 1, len);
    measures_dfs(chain, out, row_times_matrix(v, chain.p1),
                 code | (std::uint64_t{1} << depth), depth + 1, len);
}

std::vector<Rational> all_cylinder_measures(const LabeledMarkovChain& chain,
                                            const std::vector<Rational>& pi,
                                            unsigned len) {
    std::vector<Rational> out(std::uint64_t{1} << len, Rational(0));
    measures_dfs(chain, out, pi, 0, 0, len);
    return out;
}

}  // namespace

LabeledMarkovChain::LabeledMarkovChain(std::size_t m)
    : states(m), p0(zero_matrix(m)), p1(zero_matrix(m)) {}

void LabeledMarkovChain::set(std::size_t from, std::size_t to, int symbol,
                             const Rational& prob) {
    if (from >= states || to >= states)
        throw std::invalid_argument("transition endpoint out of range");
    if (symbol != 0 && symbol != 1)
        throw std::invalid_argument("transition symbol outside {0,1}");
    (symbol == 0 ? p0 : p1)[from][to] = prob;
}

void LabeledMarkovChain::validate() const {
    if (states == 0) throw std::invalid_argument("chain has no states");
    for (std::size_t i = 0; i < states; ++i) {
        Rational row_sum = 0;
        for (std::size_t j = 0; j < states; ++j) {
            if (p0[i][j] < 0 || p1[i][j] < 0)
                throw std::invalid_argument("negative transition probability");
            row_sum += p0[i][j] + p1[i][j];
        }
        if (row_sum != 1)
            throw std::invalid_argument("row " + std::to_string(i) +
                                        " does not sum to 1 (got " +
                                        to_fraction_string(row_sum) + ")");
    }
}

bool LabeledMarkovChain::is_irreducible() const {
    // Strong connectivity via forward and backward reachability from state 0.
    auto reach = [&](bool forward) {
        std::vector<char> seen(states, 0);
        std::vector<std::size_t> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            const std::size_t i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < states; ++j) {
                const bool edge = forward ? (p0[i][j] != 0 || p1[i][j] != 0)
                                          : (p0[j][i] != 0 || p1[j][i] != 0);
                if (edge && !seen[j]) {
                    seen[j] = 1;
                    stack.push_back(j);
                }
            }
        }
        return seen;
    };
    const auto fwd = reach(true);
    const auto bwd = reach(false);
    for (std::size_t i = 0; i < states; ++i)
        if (!fwd[i] || !bwd[i]) return false;
    return true;
}

LabeledMarkovChain LabeledMarkovChain::from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    LabeledMarkovChain chain;
    bool have_header = false;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (!have_header) {
            std::size_t m = 0;
            if (first != "states" || !(ls >> m) || m == 0)
                throw std::invalid_argument("chain line " + std::to_string(lineno) +
                                            ": expected 'states m'");
            chain = LabeledMarkovChain(m);
            have_header = true;
            continue;
        }
        std::size_t from = 0, to = 0;
        int symbol = 0;
        std::string prob;
        std::istringstream fs(first);
        if (!(fs >> from) || !fs.eof() || !(ls >> to >> symbol >> prob))
            throw std::invalid_argument("chain line " + std::to_string(lineno) +
                                        ": expected 'from to symbol p/q'");
        std::string extra;
        if (ls >> extra)
            throw std::invalid_argument("chain line " + std::to_string(lineno) +
                                        ": trailing tokens");
        const Rational p = parse_rational(prob);
        if (p <= 0)
            throw std::invalid_argument("chain line " + std::to_string(lineno) +
                                        ": probability must be positive");
        if (chain.matrix(symbol)[from][to] != 0)
            throw std::invalid_argument("chain line " + std::to_string(lineno) +
                                        ": duplicate transition");
        chain.set(from, to, symbol, p);
    }
    if (!have_header) throw std::invalid_argument("empty chain description");
    chain.validate();
    return chain;
}

LabeledMarkovChain LabeledMarkovChain::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::string data((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return from_text(data);
}

std::string LabeledMarkovChain::to_text() const {
    std::ostringstream out;
    out << "states " << states << '\n';
    for (std::size_t i = 0; i < states; ++i)
        for (std::size_t j = 0; j < states; ++j)
            for (int b : {0, 1})
                if (matrix(b)[i][j] != 0)
                    out << i << ' ' << j << ' ' << b << ' '
                        << to_fraction_string(matrix(b)[i][j]) << '\n';
    return out.str();
}

std::vector<Rational> stationary_distribution(const LabeledMarkovChain& chain) {
    chain.validate();
    if (!chain.is_irreducible())
        throw std::domain_error("stationary distribution needs an irreducible chain");
    const std::size_t m = chain.states;

    // Replace the last balance equation (redundant for stochastic P) with
    // the normalization sum(pi) = 1.
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m, Rational(0)));
    std::vector<Rational> b(m, Rational(0));
    for (std::size_t j = 0; j + 1 < m; ++j) {
        for (std::size_t i = 0; i < m; ++i) {
            a[j][i] = chain.p0[i][j] + chain.p1[i][j];
            if (i == j) a[j][i] -= 1;
        }
    }
    for (std::size_t i = 0; i < m; ++i) a[m - 1][i] = 1;
    b[m - 1] = 1;

    auto pi = solve_linear(std::move(a), std::move(b));
    for (const auto& q : pi)
        if (q < 0) throw std::domain_error("negative stationary entry (bad chain)");
    return pi;
}

Rational cylinder_measure(const LabeledMarkovChain& chain,
                          const std::vector<Rational>& pi, const Word& w) {
    if (pi.size() != chain.states)
        throw std::invalid_argument("distribution size mismatch");
    std::vector<Rational> v = pi;
    for (std::size_t i = 0; i < w.size(); ++i)
        v = row_times_matrix(v, chain.matrix(w[i]));
    return sum_of(v);
}

Rational exact_beta(const LabeledMarkovChain& chain,
                    const std::vector<Rational>& pi, unsigned ell) {
    if (ell < 1 || ell > kExactEnumMaxLen)
        throw std::invalid_argument("ell out of range for exact enumeration");
    const auto alpha = all_cylinder_measures(chain, pi, ell + 1);
    Rational acc = 0;
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << ell); ++w)
        acc += std::min(alpha[w << 1], alpha[(w << 1) | 1]);
    acc.canonicalize();
    return acc;
}

Rational exact_gamma(const LabeledMarkovChain& chain,
                     const std::vector<Rational>& pi, unsigned ell) {
    if (ell < 1 || ell > kExactEnumMaxLen)
        throw std::invalid_argument("ell out of range for exact enumeration");
    const auto alpha = all_cylinder_measures(chain, pi, ell + 1);
    Rational acc = 0;
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << ell); ++w)
        acc += std::min(alpha[w], alpha[w | (std::uint64_t{1} << ell)]);
    acc.canonicalize();
    return acc;
}

SnakeChain snake_chain(const LabeledMarkovChain& chain, unsigned order,
                       std::size_t state_cap) {
    if (order < 1) throw std::invalid_argument("snake order must be >= 1");
    chain.validate();

    // Paths of `order` states joined by nonzero-probability transitions.
    std::vector<std::vector<std::size_t>> paths;
    for (std::size_t q = 0; q < chain.states; ++q) paths.push_back({q});
    for (unsigned step = 1; step < order; ++step) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& path : paths) {
            const std::size_t tail = path.back();
            for (std::size_t q = 0; q < chain.states; ++q) {
                if (chain.p0[tail][q] == 0 && chain.p1[tail][q] == 0) continue;
                auto extended = path;
                extended.push_back(q);
                next.push_back(std::move(extended));
                if (next.size() > state_cap)
                    throw std::runtime_error("snake chain exceeds state cap");
            }
        }
        paths = std::move(next);
    }

    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t s = 0; s < paths.size(); ++s) index[paths[s]] = s;

    SnakeChain snake;
    snake.chain = LabeledMarkovChain(paths.size());
    snake.paths = paths;
    for (std::size_t s = 0; s < paths.size(); ++s) {
        const std::size_t tail = paths[s].back();
        const std::vector<std::size_t> shifted(paths[s].begin() + 1, paths[s].end());
        for (std::size_t q = 0; q < chain.states; ++q) {
            for (int b : {0, 1}) {
                const Rational& prob = chain.matrix(b)[tail][q];
                if (prob == 0) continue;
                auto target = shifted;
                target.push_back(q);
                const auto it = index.find(target);
                if (it == index.end()) continue;  // unreachable path prefix
                snake.chain.set(s, it->second, b, prob);
            }
        }
    }
    return snake;
}

std::vector<Rational> snake_stationary_closed_form(
    const LabeledMarkovChain& original, const std::vector<Rational>& pi,
    const std::vector<std::vector<std::size_t>>& paths) {
    std::vector<Rational> out;
    out.reserve(paths.size());
    for (const auto& path : paths) {
        Rational acc = pi[path.front()];
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            acc *= original.p0[path[i]][path[i + 1]] +
                   original.p1[path[i]][path[i + 1]];
        acc.canonicalize();
        out.push_back(std::move(acc));
    }
    return out;
}

Rational snake_lower_bound(const LabeledMarkovChain& chain,
                           const std::vector<Rational>& pi) {
    if (pi.size() != chain.states)
        throw std::invalid_argument("distribution size mismatch");
    Rational acc = 0;
    for (std::size_t i = 0; i < chain.states; ++i) {
        Rational theta0 = 0, theta1 = 0;
        for (std::size_t j = 0; j < chain.states; ++j) {
            theta0 += chain.p0[i][j];
            theta1 += chain.p1[i][j];
        }
        acc += pi[i] * std::min(theta0, theta1);
    }
    acc.canonicalize();
    return acc;
}

LabeledMarkovChain counterexample_chain() {
    LabeledMarkovChain c(4);
    const Rational half(1, 2);
    c.set(0, 1, 0, half);
    c.set(0, 3, 1, half);
    c.set(1, 2, 0, half);
    c.set(1, 0, 1, half);
    c.set(2, 3, 0, half);
    c.set(2, 1, 1, half);
    c.set(3, 0, 0, Rational(1, 3));
    c.set(3, 2, 1, Rational(2, 3));
    c.validate();
    return c;
}

}  // namespace blockdim
