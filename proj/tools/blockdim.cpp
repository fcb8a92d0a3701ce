// Command-line front end: sequence generators, streaming complexity/entropy
// analysis, exact Markov-chain analysis, bound verification, and the
// counterexample reproduction pipeline.

#include "blockdim/addition.hpp"
#include "blockdim/bounds.hpp"
#include "blockdim/entropy.hpp"
#include "blockdim/generators.hpp"
#include "blockdim/markov.hpp"
#include "blockdim/rauzy.hpp"
#include "blockdim/word.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace blockdim;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

std::vector<unsigned> parse_ell_list(const std::string& text) {
    std::vector<unsigned> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon != std::string::npos) {
            const unsigned lo = static_cast<unsigned>(std::stoul(item.substr(0, colon)));
            const unsigned hi = static_cast<unsigned>(std::stoul(item.substr(colon + 1)));
            if (lo > hi) throw std::invalid_argument("bad ell range '" + item + "'");
            for (unsigned e = lo; e <= hi; ++e) out.push_back(e);
        } else if (!item.empty()) {
            out.push_back(static_cast<unsigned>(std::stoul(item)));
        }
    }
    if (out.empty()) throw std::invalid_argument("empty ell list");
    return out;
}

std::vector<std::size_t> parse_n_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoull(item));
    if (out.empty()) throw std::invalid_argument("empty n list");
    return out;
}

std::vector<std::size_t> geometric_schedule(const std::string& text, std::size_t limit) {
    // start:factor[:max]
    std::stringstream ss(text);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(ss, part, ':')) parts.push_back(part);
    if (parts.size() < 2 || parts.size() > 3)
        throw std::invalid_argument("geometric schedule is start:factor[:max]");
    std::size_t n = std::stoull(parts[0]);
    const double factor = std::stod(parts[1]);
    const std::size_t max_n = parts.size() == 3 ? std::stoull(parts[2]) : limit;
    if (factor <= 1.0) throw std::invalid_argument("geometric factor must exceed 1");
    std::vector<std::size_t> out;
    while (n <= std::min(max_n, limit)) {
        out.push_back(n);
        const auto next = static_cast<std::size_t>(static_cast<double>(n) * factor);
        if (next <= n) break;
        n = next;
    }
    if (out.empty()) throw std::invalid_argument("empty geometric schedule");
    return out;
}

struct RowWriter {
    std::ostream& out;
    bool jsonl = false;
    std::vector<std::string> columns;

    void header() {
        if (jsonl) return;
        for (std::size_t i = 0; i < columns.size(); ++i)
            out << columns[i] << (i + 1 < columns.size() ? "," : "\n");
    }
    void row(const std::vector<std::string>& values) {
        if (jsonl) {
            out << '{';
            for (std::size_t i = 0; i < values.size(); ++i) {
                out << '"' << columns[i] << "\":" << values[i];
                if (i + 1 < values.size()) out << ',';
            }
            out << "}\n";
        } else {
            for (std::size_t i = 0; i < values.size(); ++i)
                out << values[i] << (i + 1 < values.size() ? "," : "\n");
        }
    }
};

std::string quoted(const std::string& s) { return '"' + s + '"'; }

// ---------------------------------------------------------------- generate

struct GenerateArgs {
    GeneratorSpec spec;
    std::string alpha_text = "1/2";
    std::string epsilon_text = "1/20";
    std::string output;
};

int run_generate(GenerateArgs& args) {
    args.spec.alpha = parse_rational(args.alpha_text);
    args.spec.epsilon = parse_rational(args.epsilon_text);
    const auto generated = generate(args.spec);
    write_with_sidecar(generated, args.spec, args.output);
    return 0;
}

// ----------------------------------------------------------------- analyze

struct AnalyzeArgs {
    std::string input;
    std::string ell_text = "6";
    std::string ns_text;
    std::string geom_text;
    std::string metrics_text = "beta,gamma,h,hc";
    std::string format = "csv";
    std::string output;
    bool exact = false;
    bool cross_check = false;
};

int run_analyze(const AnalyzeArgs& args) {
    if (!args.ns_text.empty() && !args.geom_text.empty())
        throw std::invalid_argument("--ns and --n-geom are mutually exclusive");
    std::set<std::string> metrics;
    {
        std::stringstream ss(args.metrics_text);
        std::string m;
        while (std::getline(ss, m, ',')) {
            if (m != "beta" && m != "gamma" && m != "h" && m != "hc")
                throw std::invalid_argument("unknown metric '" + m + "'");
            metrics.insert(m);
        }
        if (metrics.empty()) throw std::invalid_argument("empty metric list");
    }

    const Word x = Word::load(args.input);
    const auto ells = parse_ell_list(args.ell_text);

    std::vector<std::size_t> ns;
    if (!args.ns_text.empty())
        ns = parse_n_list(args.ns_text);
    else if (!args.geom_text.empty())
        ns = geometric_schedule(args.geom_text, x.size());
    else
        ns = {x.size()};

    const auto rows = convergence_table(x, ells, ns);

    if (args.cross_check) {
        for (const auto& row : rows) {
            const Word prefix = x.slice(0, row.n);
            const auto beta = beta_ell(prefix, row.ell);
            const auto gamma = gamma_ell(prefix, row.ell);
            const double h = block_entropy_h(prefix, row.ell);
            const double hc = conditional_entropy_last(empirical_distribution(prefix, row.ell));
            if (beta.value != row.beta || gamma.value != row.gamma ||
                h != row.h || hc != row.hc) {
                std::cerr << "cross-check mismatch at n=" << row.n
                          << " ell=" << row.ell << "\n";
                return kExitVerifyFailure;
            }
        }
        std::cerr << "cross-check: incremental scan matches per-prefix rescan ("
                  << rows.size() << " rows)\n";
    }

    std::ofstream file;
    if (!args.output.empty()) {
        file.open(args.output);
        if (!file) throw std::runtime_error("cannot write " + args.output);
    }
    std::ostream& out = args.output.empty() ? std::cout : file;

    RowWriter writer{out, args.format == "jsonl", {"n", "ell"}};
    for (const char* m : {"beta", "gamma", "h", "hc"})
        if (metrics.count(m)) writer.columns.push_back(m);
    if (args.exact) {
        if (metrics.count("beta")) writer.columns.push_back("beta_frac");
        if (metrics.count("gamma")) writer.columns.push_back("gamma_frac");
    }
    writer.header();
    for (const auto& row : rows) {
        std::vector<std::string> values{std::to_string(row.n), std::to_string(row.ell)};
        if (metrics.count("beta")) values.push_back(to_decimal_string(row.beta));
        if (metrics.count("gamma")) values.push_back(to_decimal_string(row.gamma));
        if (metrics.count("h")) values.push_back(to_decimal_string(row.h));
        if (metrics.count("hc")) values.push_back(to_decimal_string(row.hc));
        if (args.exact) {
            const bool j = args.format == "jsonl";
            if (metrics.count("beta"))
                values.push_back(j ? quoted(to_fraction_string(row.beta))
                                   : to_fraction_string(row.beta));
            if (metrics.count("gamma"))
                values.push_back(j ? quoted(to_fraction_string(row.gamma))
                                   : to_fraction_string(row.gamma));
        }
        writer.row(values);
    }
    return 0;
}

// ------------------------------------------------------------------ markov

struct MarkovArgs {
    std::string chain_path;
    unsigned ell_max = 6;
    unsigned snake_order = 0;
};

int run_markov(const MarkovArgs& args) {
    const auto chain = LabeledMarkovChain::load(args.chain_path);
    const auto pi = stationary_distribution(chain);

    std::cout << "states " << chain.states << "\n";
    std::cout << "pi";
    for (const auto& q : pi) std::cout << ' ' << to_fraction_string(q);
    std::cout << "\n";
    const auto bound = snake_lower_bound(chain, pi);
    std::cout << "snake_lower_bound " << to_fraction_string(bound) << " ("
              << to_decimal_string(bound) << ")\n";

    std::cout << "ell beta gamma gamma_minus_bound\n";
    for (unsigned ell = 1; ell <= args.ell_max; ++ell) {
        const auto beta = exact_beta(chain, pi, ell);
        const auto gamma = exact_gamma(chain, pi, ell);
        Rational excess = gamma - bound;
        excess.canonicalize();
        std::cout << ell << ' ' << to_fraction_string(beta) << " ("
                  << to_decimal_string(beta) << ") " << to_fraction_string(gamma)
                  << " (" << to_decimal_string(gamma) << ") "
                  << to_fraction_string(excess) << "\n";
    }

    if (args.snake_order >= 1) {
        const auto snake = snake_chain(chain, args.snake_order);
        std::cout << "snake_order " << args.snake_order << " states "
                  << snake.chain.states << "\n";
        const auto snake_pi = stationary_distribution(snake.chain);
        const auto closed = snake_stationary_closed_form(chain, pi, snake.paths);
        std::cout << "snake_stationary_matches_closed_form "
                  << (snake_pi == closed ? "yes" : "NO") << "\n";
    }
    return 0;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
    std::string input;
    std::string ell_text = "1:6";
};

int run_verify(const VerifyArgs& args) {
    const Word w = Word::load(args.input);
    const auto ells = parse_ell_list(args.ell_text);
    bool all_ok = true;
    std::cout << "ell,n,gamma,hc,eta_gamma,beta,hc_beta,eta_beta,ok\n";
    for (unsigned ell : ells) {
        const auto r = verify_sandwich(w, ell);
        const bool ok = r.all_ok();
        all_ok = all_ok && ok;
        std::cout << ell << ',' << r.n << ',' << to_decimal_string(r.gamma) << ','
                  << to_decimal_string(r.hc) << ','
                  << to_decimal_string(binary_entropy(r.gamma)) << ','
                  << to_decimal_string(r.beta) << ',' << to_decimal_string(r.hc_beta)
                  << ',' << to_decimal_string(binary_entropy(r.beta)) << ','
                  << (ok ? "yes" : "NO") << "\n";
        if (!ok)
            std::cerr << "bound violated at ell=" << ell
                      << " (2g<=hc:" << r.lower_ok << " hc<=eta:" << r.upper_ok
                      << " 2b<=hcb:" << r.lower_ok_beta
                      << " hcb<=eta:" << r.upper_ok_beta << ")\n";
    }
    return all_ok ? 0 : kExitVerifyFailure;
}

// --------------------------------------------------------------------- add

struct AddArgs {
    std::string input_x, input_y;
    std::string output;
    std::string ell_text;
    std::string report_path;
    std::string format = "csv";
};

int run_add(const AddArgs& args) {
    const Word x = Word::load(args.input_x);
    const Word y = Word::load(args.input_y);
    const auto result = add_prefixes(x, y);
    if (!args.output.empty()) {
        result.sum.save(args.output);
        std::ofstream meta(args.output + ".meta");
        meta << "kind=sum\n"
             << "length=" << result.sum.size() << '\n'
             << "overflow=" << result.overflow << '\n'
             << "carry_uncertainty_span=" << result.carry_uncertainty_span << '\n';
    }
    if (!args.ell_text.empty()) {
        const auto rows = subadditivity_report(x, y, parse_ell_list(args.ell_text));
        std::ofstream file;
        if (!args.report_path.empty()) {
            file.open(args.report_path);
            if (!file) throw std::runtime_error("cannot write " + args.report_path);
        }
        std::ostream& out = args.report_path.empty() ? std::cout : file;
        RowWriter writer{out, args.format == "jsonl",
                         {"ell", "h_x", "h_y", "h_sum", "slack", "carry_rate"}};
        writer.header();
        for (const auto& row : rows)
            writer.row({std::to_string(row.ell), to_decimal_string(row.h_x),
                        to_decimal_string(row.h_y), to_decimal_string(row.h_sum),
                        to_decimal_string(row.slack), to_decimal_string(row.carry_rate)});
    }
    return 0;
}

// --------------------------------------------------------------- reproduce

struct ReproduceArgs {
    std::uint64_t seed = 1;
    std::size_t n = 1000000;
    bool exact_only = false;
};

int run_reproduce(const ReproduceArgs& args) {
    bool all_ok = true;
    auto report = [&](const std::string& name, bool ok, const std::string& detail) {
        all_ok = all_ok && ok;
        std::cout << (ok ? "PASS " : "FAIL ") << name << ": " << detail << "\n";
    };

    const auto chain = counterexample_chain();
    const auto pi = stationary_distribution(chain);

    const std::vector<Rational> want_pi{Rational(5, 24), Rational(1, 4),
                                        Rational(7, 24), Rational(1, 4)};
    std::string pi_text;
    for (const auto& q : pi) pi_text += to_fraction_string(q) + " ";
    report("stationary_distribution", pi == want_pi, pi_text + "(expect 5/24 1/4 7/24 1/4)");

    const auto bound = snake_lower_bound(chain, pi);
    report("snake_lower_bound", bound == Rational(11, 24),
           to_fraction_string(bound) + " (expect 11/24)");

    const auto beta6 = exact_beta(chain, pi, 6);
    report("exact_beta_6", beta6 == Rational(9503, 20736),
           to_fraction_string(beta6) + " (expect 9503/20736)");
    report("beta_6 < 11/24", beta6 < Rational(11, 24), to_fraction_string(beta6));
    for (unsigned ell = 1; ell <= 6; ++ell) {
        const auto gamma = exact_gamma(chain, pi, ell);
        report("exact_gamma_" + std::to_string(ell) + " >= 11/24",
               gamma >= Rational(11, 24), to_fraction_string(gamma));
    }

    if (!args.exact_only) {
        const Word walk = markov_walk(chain, args.n, args.seed, 0);
        const auto counts7 = block_counts(walk, 7);
        const double emp_beta =
            to_double(rauzy_from_counts(counts7, Direction::predict_preceding).value);
        const double emp_gamma =
            to_double(rauzy_from_counts(counts7, Direction::predict_following).value);
        const double exact_b = to_double(beta6);

        report("empirical_beta_6", std::abs(emp_beta - exact_b) <= 0.01,
               to_decimal_string(emp_beta) + " vs " + to_decimal_string(exact_b) +
                   " (tolerance 0.01, n=" + std::to_string(args.n) + ")");
        report("empirical_gamma_6", emp_gamma >= 11.0 / 24.0 - 0.01,
               to_decimal_string(emp_gamma) + " >= 11/24 - 0.01");

        double worst = 0.0;
        const double denom = static_cast<double>(counts7.window_total());
        for (std::uint64_t code = 0; code < (1u << 7); ++code) {
            const double freq = static_cast<double>(counts7.count(code)) / denom;
            const double mu = to_double(cylinder_measure(chain, pi, decode_block(code, 7)));
            worst = std::max(worst, std::abs(freq - mu));
        }
        report("block_frequencies_7", worst <= 0.002,
               "max |freq - mu| = " + to_decimal_string(worst) + " (tolerance 0.002)");
    }

    return all_ok ? 0 : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* env = std::getenv("BLOCKDIM_THREADS")) {
        const int t = std::atoi(env);
        if (t > 0) omp_set_num_threads(t);
    }

    CLI::App app{"prediction complexity and block entropy of binary sequences"};
    app.require_subcommand(1);

    GenerateArgs gen_args;
    auto* gen = app.add_subcommand("generate", "write a bit stream plus .meta sidecar");
    gen->add_option("kind", gen_args.spec.kind, "generator family")
        ->required()
        ->check(CLI::IsMember({"champernowne", "sturmian", "bernoulli", "markov",
                               "sharp", "counterexample"}));
    gen->add_option("--length", gen_args.spec.length, "number of symbols")->required();
    gen->add_option("--seed", gen_args.spec.seed, "PRNG seed (seeded kinds)");
    gen->add_option("--theta", gen_args.spec.theta, "rotation angle (sturmian)")
        ->default_val(0.6180339887498949);
    gen->add_option("--rho", gen_args.spec.rho, "rotation offset (sturmian)");
    gen->add_option("--alpha", gen_args.alpha_text, "P(0), exact fraction");
    gen->add_option("--epsilon", gen_args.epsilon_text, "entropy slack (sharp)");
    gen->add_option("--chain", gen_args.spec.chain_path, "chain file (markov)");
    gen->add_option("--start-state", gen_args.spec.start_state, "walk start state");
    gen->add_flag("--stationary-start", gen_args.spec.stationary_start,
                  "draw the start state from pi");
    gen->add_option("-o,--output", gen_args.output, "output path")->required();

    AnalyzeArgs an_args;
    auto* an = app.add_subcommand("analyze", "streaming beta/gamma/h/hc over prefixes");
    an->add_option("-i,--input", an_args.input, "bit-stream file")->required();
    an->add_option("--ell", an_args.ell_text, "ell list, e.g. 1:8 or 2,4,6");
    an->add_option("--ns", an_args.ns_text, "prefix lengths, comma list");
    an->add_option("--n-geom", an_args.geom_text, "geometric schedule start:factor[:max]");
    an->add_option("--metrics", an_args.metrics_text, "subset of beta,gamma,h,hc");
    an->add_option("--format", an_args.format)->check(CLI::IsMember({"csv", "jsonl"}));
    an->add_option("-o,--output", an_args.output, "write report here (default stdout)");
    an->add_flag("--exact", an_args.exact, "append exact fraction columns");
    an->add_flag("--cross-check", an_args.cross_check,
                 "recompute every row from scratch and compare");

    MarkovArgs mk_args;
    auto* mk = app.add_subcommand("markov", "exact chain analysis");
    mk->add_option("--chain", mk_args.chain_path, "chain file")->required();
    mk->add_option("--ell-max", mk_args.ell_max, "largest ell for exact beta/gamma");
    mk->add_option("--snake-order", mk_args.snake_order,
                   "also build the snake chain of this order");

    VerifyArgs vf_args;
    auto* vf = app.add_subcommand("verify", "check the finite-word entropy bounds");
    vf->add_option("-i,--input", vf_args.input, "bit-stream file")->required();
    vf->add_option("--ell", vf_args.ell_text, "ell list");

    AddArgs add_args;
    auto* ad = app.add_subcommand("add", "binary addition of two prefixes");
    ad->add_option("x", add_args.input_x, "first bit stream")->required();
    ad->add_option("y", add_args.input_y, "second bit stream")->required();
    ad->add_option("-o,--output", add_args.output, "write the sum bit stream");
    ad->add_option("--ell", add_args.ell_text, "subadditivity report ell list");
    ad->add_option("--report", add_args.report_path, "report path (default stdout)");
    ad->add_option("--format", add_args.format)->check(CLI::IsMember({"csv", "jsonl"}));

    ReproduceArgs rp_args;
    auto* rp = app.add_subcommand("reproduce", "rerun the bundled counterexample checks");
    rp->add_option("--seed", rp_args.seed, "walk seed");
    rp->add_option("--n", rp_args.n, "walk length");
    rp->add_flag("--exact-only", rp_args.exact_only, "skip the Monte Carlo stage");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*gen) return run_generate(gen_args);
        if (*an) return run_analyze(an_args);
        if (*mk) return run_markov(mk_args);
        if (*vf) return run_verify(vf_args);
        if (*ad) return run_add(add_args);
        if (*rp) return run_reproduce(rp_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
