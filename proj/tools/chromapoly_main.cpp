#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "chromapoly/chromatic.hpp"
#include "chromapoly/complete.hpp"
#include "chromapoly/generators.hpp"
#include "chromapoly/io.hpp"
#include "chromapoly/recursion.hpp"
#include "chromapoly/whitney.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace chromapoly;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSizeGuard = 3;

class Stopwatch {
public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

EdgeOrdering make_ordering(const std::string& spec, int m) {
    if (spec == "file") return EdgeOrdering::identity(m);
    if (spec == "reverse") return EdgeOrdering::reversed(m);
    if (spec.rfind("random:", 0) == 0) {
        const std::string seed = spec.substr(7);
        if (seed.empty() || seed.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("--ordering random:SEED needs a numeric seed");
        return EdgeOrdering::shuffled(m, std::stoull(seed));
    }
    throw std::invalid_argument("unknown ordering '" + spec + "' (file|reverse|random:SEED)");
}

void guard_subsets(const Hypergraph& h, std::uint64_t max_subsets) {
    const int m = h.edge_count();
    if (m >= 63 || (std::uint64_t{1} << m) > max_subsets)
        throw SizeLimitError("2^" + std::to_string(m) +
                             " edge subsets exceed the --max-subsets budget of " +
                             std::to_string(max_subsets));
}

json coefficient_strings(const IntPolynomial& poly) {
    json arr = json::array();
    for (const auto& c : poly.decimal_strings()) arr.push_back(c);
    return arr;
}

BrokenFamily family_by_name(const Hypergraph& h, const std::string& name,
                            const EdgeOrdering& ord) {
    if (name == "delta") return delta_cycle_broken_sets(h, ord);
    if (name == "berge") return berge_cycle_broken_sets(h, ord);
    if (name == "maximal") return enumerate_broken_cyclic(h, ord);
    throw std::invalid_argument("unknown family '" + name + "' (delta|berge|maximal)");
}

void emit(const json& out, bool plain, const std::string& plain_text) {
    if (plain)
        std::cout << plain_text << "\n";
    else
        std::cout << out.dump(2) << "\n";
}

struct ComputeOptions {
    std::string file;
    std::string algorithm = "expand";
    std::string ordering = "file";
    std::string family = "maximal";
    long lambda = -1;
    std::uint64_t max_subsets = std::uint64_t{1} << 26;
    bool plain = false;
};

int run_compute(const ComputeOptions& opt) {
    const Hypergraph h = parse_hypergraph(read_input(opt.file));
    Stopwatch timer;

    json out;
    out["n"] = h.order();
    out["m"] = h.edge_count();
    out["algorithm"] = opt.algorithm;

    if (opt.algorithm == "brute") {
        if (opt.lambda < 0) throw std::invalid_argument("brute needs --lambda");
        const BigInt count = chromatic_bruteforce(h, static_cast<unsigned long>(opt.lambda),
                                                  std::max<std::uint64_t>(opt.max_subsets,
                                                                          kDefaultAssignmentBudget));
        out["lambda"] = opt.lambda;
        out["count"] = count.get_str();
        out["elapsed_ms"] = timer.elapsed_ms();
        emit(out, opt.plain, count.get_str());
        return kExitOk;
    }

    IntPolynomial poly(h.order());
    if (opt.algorithm == "expand") {
        guard_subsets(h, opt.max_subsets);
        ExpansionResult res = chromatic_subset_expansion_stats(h);
        poly = std::move(res.poly);
        out["subsets_visited"] = res.subsets_visited;
    } else if (opt.algorithm == "delcon") {
        poly = chromatic_deletion_contraction(h);
    } else if (opt.algorithm == "whitney") {
        guard_subsets(h, opt.max_subsets);
        NbcCounts counts = nbc_counts(h, make_ordering(opt.ordering, h.edge_count()));
        json hs = json::array();
        for (const auto& v : counts.h) hs.push_back(v.get_str());
        out["nbc_counts"] = hs;
        poly = std::move(counts.abar);
    } else if (opt.algorithm == "pruned") {
        guard_subsets(h, opt.max_subsets);
        const EdgeOrdering ord = make_ordering(opt.ordering, h.edge_count());
        const BrokenFamily family = family_by_name(h, opt.family, ord);
        PrunedResult res = pruned_expansion_stats(h, family);
        out["family"] = opt.family;
        out["family_size"] = family.sets.size();
        out["subsets_visited"] = res.subsets_visited;
        poly = std::move(res.poly);
    } else if (opt.algorithm == "recursion") {
        poly = coefficients_recursive(h);
    } else if (opt.algorithm == "interpolate") {
        poly = interpolate_from_counts(h, std::max<std::uint64_t>(opt.max_subsets,
                                                                  kDefaultAssignmentBudget));
    } else {
        throw std::invalid_argument("unknown algorithm '" + opt.algorithm +
                                    "' (brute|expand|delcon|whitney|pruned|recursion|interpolate)");
    }

    out["coefficients"] = coefficient_strings(poly);
    out["elapsed_ms"] = timer.elapsed_ms();
    emit(out, opt.plain, poly.to_string());
    return kExitOk;
}

struct CompareOptions {
    std::string file;
    int orderings = 5;
    std::uint64_t seed = 1;
    std::uint64_t max_subsets = std::uint64_t{1} << 26;
    bool plain = false;
};

int run_compare(const CompareOptions& opt) {
    const Hypergraph h = parse_hypergraph(read_input(opt.file));
    Stopwatch timer;

    std::vector<std::pair<std::string, IntPolynomial>> results;
    std::vector<std::string> skipped;
    auto attempt = [&](const std::string& name, auto&& fn) {
        try {
            results.emplace_back(name, fn());
        } catch (const SizeLimitError& err) {
            skipped.push_back(name + ": " + err.what());
        }
    };

    attempt("expand", [&] {
        guard_subsets(h, opt.max_subsets);
        return chromatic_subset_expansion(h);
    });
    attempt("recursion", [&] { return coefficients_recursive(h); });
    attempt("interpolate", [&] { return interpolate_from_counts(h); });
    if (h.is_graph()) {
        attempt("delcon", [&] { return chromatic_deletion_contraction(h); });
        attempt("whitney", [&] {
            guard_subsets(h, opt.max_subsets);
            return nbc_counts(h, EdgeOrdering::identity(h.edge_count())).abar;
        });
    }
    for (int t = 0; t < opt.orderings; ++t) {
        const EdgeOrdering ord = EdgeOrdering::shuffled(h.edge_count(), opt.seed + static_cast<std::uint64_t>(t));
        const std::string suffix = "[ordering " + std::to_string(t) + "]";
        for (const char* family : {"delta", "berge", "maximal"}) {
            attempt(std::string("pruned:") + family + suffix, [&] {
                guard_subsets(h, opt.max_subsets);
                return pruned_expansion(h, family_by_name(h, family, ord));
            });
        }
    }

    json out;
    out["n"] = h.order();
    out["m"] = h.edge_count();
    out["seed"] = opt.seed;
    out["orderings"] = opt.orderings;
    json res = json::array();
    for (const auto& [name, poly] : results)
        res.push_back(json{{"algorithm", name}, {"coefficients", coefficient_strings(poly)}});
    out["results"] = res;
    if (!skipped.empty()) out["skipped"] = skipped;

    bool agree = true;
    json mismatch = nullptr;
    for (std::size_t t = 1; t < results.size() && agree; ++t) {
        if (results[t].second == results[0].second) continue;
        agree = false;
        for (int i = 1; i <= h.order(); ++i) {
            if (results[t].second.a(i) != results[0].second.a(i)) {
                mismatch = json{{"first", results[0].first},
                                {"other", results[t].first},
                                {"index", i},
                                {"first_value", results[0].second.a(i).get_str()},
                                {"other_value", results[t].second.a(i).get_str()}};
                break;
            }
        }
    }
    out["agree"] = agree;
    out["mismatch"] = mismatch;
    out["elapsed_ms"] = timer.elapsed_ms();

    emit(out, opt.plain,
         agree && !results.empty() ? results[0].second.to_string() : std::string("mismatch"));
    return agree ? kExitOk : kExitMismatch;
}

struct CompleteOptions {
    int r = 2;
    int n_max = 10;
    bool plain = false;
};

int run_complete(const CompleteOptions& opt) {
    if (opt.r < 2) throw std::invalid_argument("--r must be at least 2");
    if (opt.n_max < 1) throw std::invalid_argument("--n-max must be at least 1");
    Stopwatch timer;

    const std::vector<BigInt> recursive = a1_complete_recursive_table(opt.r, opt.n_max);
    json rows = json::array();
    std::string plain_line;
    bool all_consistent = true;
    for (int n = 1; n <= opt.n_max; ++n) {
        const BigInt value = a1_complete(opt.r, n);
        json row;
        row["n"] = n;
        row["a1"] = value.get_str();
        const bool rec_ok = recursive[static_cast<std::size_t>(n - 1)] == value;
        row["recursive_agrees"] = rec_ok;
        if (auto pw = a1_complete_piecewise(opt.r, n)) {
            row["piecewise"] = pw->get_str();
            row["piecewise_agrees"] = *pw == value;
            all_consistent = all_consistent && *pw == value;
        } else {
            row["piecewise"] = nullptr;
        }
        all_consistent = all_consistent && rec_ok;
        rows.push_back(row);
        if (!plain_line.empty()) plain_line += ' ';
        plain_line += value.get_str();
    }

    json residuals = json::array();
    bool all_zero = true;
    for (int m = 1; m + opt.r <= opt.n_max; ++m) {
        const BigInt res = zemyan_identity_residual(opt.r, m);
        residuals.push_back(json{{"m", m}, {"residual", res.get_str()}});
        all_zero = all_zero && res == 0;
    }

    json out;
    out["r"] = opt.r;
    out["n_max"] = opt.n_max;
    out["rows"] = rows;
    out["consistent"] = all_consistent;
    out["zemyan_residuals"] = residuals;
    out["zemyan_all_zero"] = all_zero;
    out["elapsed_ms"] = timer.elapsed_ms();

    emit(out, opt.plain, plain_line);
    return all_consistent && all_zero ? kExitOk : kExitMismatch;
}

struct EvalOptions {
    std::string file;
    std::string algorithm = "recursion";
    long lambda = -1;
    std::uint64_t max_subsets = std::uint64_t{1} << 26;
    bool plain = false;
};

int run_eval(const EvalOptions& opt) {
    if (opt.lambda < 0) throw std::invalid_argument("eval needs --lambda with a non-negative value");
    const Hypergraph h = parse_hypergraph(read_input(opt.file));
    Stopwatch timer;

    IntPolynomial poly(h.order());
    if (opt.algorithm == "expand") {
        guard_subsets(h, opt.max_subsets);
        poly = chromatic_subset_expansion(h);
    } else if (opt.algorithm == "recursion") {
        poly = coefficients_recursive(h);
    } else if (opt.algorithm == "delcon") {
        poly = chromatic_deletion_contraction(h);
    } else {
        throw std::invalid_argument("unknown algorithm '" + opt.algorithm +
                                    "' (expand|recursion|delcon)");
    }
    const BigInt value = poly.eval(BigInt(opt.lambda));

    json out;
    out["n"] = h.order();
    out["m"] = h.edge_count();
    out["algorithm"] = opt.algorithm;
    out["lambda"] = opt.lambda;
    out["value"] = value.get_str();
    out["elapsed_ms"] = timer.elapsed_ms();
    emit(out, opt.plain, value.get_str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact chromatic polynomials of graphs and hypergraphs"};
    app.require_subcommand(1);

    ComputeOptions copt;
    CLI::App* compute = app.add_subcommand("compute", "compute coefficients with one algorithm");
    compute->add_option("file", copt.file, "instance file ('-' for stdin)")->required();
    compute->add_option("--algorithm,-a", copt.algorithm,
                        "brute|expand|delcon|whitney|pruned|recursion|interpolate");
    compute->add_option("--lambda", copt.lambda, "colour count for brute");
    compute->add_option("--ordering", copt.ordering, "file|reverse|random:SEED");
    compute->add_option("--family", copt.family, "pruning family: delta|berge|maximal");
    compute->add_option("--max-subsets", copt.max_subsets, "size guard override");
    compute->add_flag("--plain", copt.plain, "space-separated coefficients only");

    CompareOptions mopt;
    CLI::App* compare = app.add_subcommand("compare", "cross-check all applicable algorithms");
    compare->add_option("file", mopt.file, "instance file ('-' for stdin)")->required();
    compare->add_option("--orderings,-R", mopt.orderings, "random orderings for pruned runs");
    compare->add_option("--seed", mopt.seed, "base seed for the random orderings");
    compare->add_option("--max-subsets", mopt.max_subsets, "size guard override");
    compare->add_flag("--plain", mopt.plain, "agreed coefficients only");

    CompleteOptions kopt;
    CLI::App* complete = app.add_subcommand("complete",
                                            "linear coefficients of complete r-uniform hypergraphs");
    complete->add_option("--r,-r", kopt.r, "edge cardinality r >= 2")->required();
    complete->add_option("--n-max,-n", kopt.n_max, "largest order to tabulate")->required();
    complete->add_flag("--plain", kopt.plain, "space-separated a_1 values only");

    EvalOptions eopt;
    CLI::App* eval = app.add_subcommand("eval", "evaluate the chromatic polynomial at a point");
    eval->add_option("file", eopt.file, "instance file ('-' for stdin)")->required();
    eval->add_option("--lambda", eopt.lambda, "evaluation point (non-negative integer)")->required();
    eval->add_option("--algorithm,-a", eopt.algorithm, "expand|recursion|delcon");
    eval->add_option("--max-subsets", eopt.max_subsets, "size guard override");
    eval->add_flag("--plain", eopt.plain, "value only");

    try {
        app.parse(argc, argv);
        if (compute->parsed()) return run_compute(copt);
        if (compare->parsed()) return run_compare(mopt);
        if (complete->parsed()) return run_complete(kopt);
        if (eval->parsed()) return run_eval(eopt);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const chromapoly::SizeLimitError& e) {
        std::cerr << "size guard: " << e.what() << "\n";
        return kExitSizeGuard;
    } catch (const chromapoly::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
