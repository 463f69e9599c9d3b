#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "navoid/cache.hpp"
#include "navoid/constants.hpp"
#include "navoid/csv.hpp"
#include "navoid/group.hpp"
#include "navoid/multiset.hpp"
#include "navoid/sieve.hpp"
#include "navoid/verify.hpp"

namespace {

using namespace navoid;

struct CommonOpts {
    std::string out_path;
    std::string cache_path = "navoid-cache.csv";
    bool no_cache = false;
    unsigned threads = 0;
    std::string method = "auto";
};

void add_cache_flags(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--cache", opts.cache_path, "count cache CSV path");
    cmd->add_flag("--no-cache", opts.no_cache, "bypass the count cache");
    cmd->add_option("--threads", opts.threads, "sieve segment threads (0 = all cores)");
    cmd->add_option("--method", opts.method, "count method: auto|oracle|sieve")
        ->check(CLI::IsMember({"auto", "oracle", "sieve"}));
}

// Writes to --out if given, else stdout.
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw std::invalid_argument("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::string resolve_method(std::uint64_t q, std::uint64_t a, const std::string& method) {
    if (method == "oracle") return "oracle";
    if (a == 0 || (q == 2 && a == 1)) return "closed";
    return "sieve";
}

CountRecord run_count(std::uint64_t x, std::uint64_t q, std::uint64_t a,
                      const std::string& method, const SieveOptions& sieve_opts) {
    if (method == "oracle") return navoid_oracle(x, q, a);
    if (method == "closed") return navoid_closed(x, q, a);
    return navoid_sieve(x, q, a, sieve_opts);
}

CountRecord count_with_cache(std::uint64_t x, std::uint64_t q, std::uint64_t a,
                             const CommonOpts& opts) {
    SieveOptions sieve_opts;
    sieve_opts.threads = opts.threads;
    const std::string method = resolve_method(q, a, opts.method);
    if (!opts.no_cache) {
        const CountCache cache = CountCache::load(opts.cache_path);
        if (const CacheEntry* hit = cache.find(q, a, x, method))
            return {x, q, a, hit->count, hit->method, 0.0};
    }
    CountRecord rec = run_count(x, q, a, method, sieve_opts);
    if (!opts.no_cache)
        CountCache::append(opts.cache_path, {q, a, x, rec.count, rec.method, ""});
    return rec;
}

void write_count_row(CsvWriter& w, const CountRecord& rec) {
    w.row({std::to_string(rec.x), std::to_string(rec.q), std::to_string(rec.a),
           std::to_string(rec.count), rec.method, format_sig12(rec.elapsed_seconds)});
}

int cmd_count(std::uint64_t q, std::uint64_t a, std::uint64_t x, const CommonOpts& opts) {
    Output out(opts.out_path);
    CsvWriter w(out.stream());
    w.row({"x", "q", "a", "count", "method", "elapsed_seconds"});
    write_count_row(w, count_with_cache(x, q, a, opts));
    return 0;
}

int cmd_converge(std::uint64_t q, std::uint64_t a, const std::vector<std::uint64_t>& grid,
                 std::uint64_t y, const CommonOpts& opts) {
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (grid[i] <= grid[i - 1])
            throw std::invalid_argument("--grid must be strictly ascending");
    Output out(opts.out_path);
    CsvWriter w(out.stream());
    w.row({"x", "q", "a", "count", "main_term", "ratio", "P", "V", "W", "y", "method",
           "elapsed_seconds"});
    for (std::uint64_t x : grid) {
        const CountRecord rec = count_with_cache(x, q, a, opts);
        const Prediction pred = predict(static_cast<double>(x), q, a, y);
        const double ratio = static_cast<double>(rec.count) / pred.main_term;
        w.row({std::to_string(x), std::to_string(q), std::to_string(a),
               std::to_string(rec.count), format_sig12(pred.main_term), format_sig12(ratio),
               std::to_string(pred.P.value), format_sig12(pred.V.value),
               format_sig12(pred.W), std::to_string(y), rec.method,
               format_sig12(rec.elapsed_seconds)});
    }
    return 0;
}

int cmd_constants(std::uint64_t q, std::uint64_t a, std::uint64_t y,
                  const CommonOpts& opts) {
    const GroupContext ctx(q, a);
    const TruncatedConstant v = v_constant(q, a, y);
    const double w_val = w_constant(q, a);
    const TruncatedConstant theta = theta_constant(q, a, y);
    std::string members;
    for (std::uint64_t h : ctx.subgroup()) {
        if (!members.empty()) members += ";";
        members += std::to_string(h);
    }
    Output out(opts.out_path);
    CsvWriter w(out.stream());
    w.row({"key", "value"});
    w.row({"q", std::to_string(q)});
    w.row({"a", std::to_string(a)});
    w.row({"y", std::to_string(y)});
    w.row({"P", std::to_string(ctx.index().value)});
    w.row({"p", std::to_string(ctx.index().p)});
    w.row({"r", std::to_string(ctx.index().r)});
    w.row({"ord", std::to_string(ctx.order())});
    w.row({"generator", std::to_string(ctx.generator())});
    w.row({"H_size", std::to_string(ctx.subgroup().size())});
    w.row({"H_members", members});
    w.row({"V", format_sig12(v.value)});
    w.row({"V_at_y_over_10", format_sig12(v.value_at_y_over_10)});
    w.row({"V_delta", format_sig12(v.relative_delta)});
    w.row({"W", format_sig12(w_val)});
    w.row({"theta", format_sig12(theta.value)});
    return 0;
}

int cmd_kappa(std::uint64_t m, std::uint64_t a, std::uint64_t cap, const CommonOpts& opts) {
    Output out(opts.out_path);
    CsvWriter w(out.stream());
    w.row({"m", "a", "kappa", "status", "extremal_count"});
    if (a == 0) {
        const KappaZero res = kappa_cyclic_zero(m);
        w.row({std::to_string(m), "", std::to_string(res.kappa), "finite",
               std::to_string(res.extremal.size())});
    } else {
        if (cap == 0) cap = 4 * m;
        const KappaSearch res = kappa_avoiding(m, a, cap);
        if (res.exceeds_cap)
            w.row({std::to_string(m), std::to_string(a), "", "exceeds_cap", ""});
        else
            w.row({std::to_string(m), std::to_string(a), std::to_string(res.kappa), "finite",
                   std::to_string(res.extremal.size())});
    }
    return 0;
}

int cmd_verify(const VerifyCaps& caps, const CommonOpts& opts) {
    const auto results = verify_all(caps);
    Output out(opts.out_path);
    CsvWriter w(out.stream());
    w.row({"status", "check", "detail"});
    bool all_pass = true;
    for (const auto& r : results) {
        w.row({r.pass ? "PASS" : "FAIL", r.name, r.detail});
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 1;
}

int cmd_compare(std::uint64_t q, const std::vector<std::uint64_t>& residues,
                std::uint64_t x, std::uint64_t y, const CommonOpts& opts) {
    for (std::uint64_t a : residues)
        if (a < 1 || a >= q)
            throw std::invalid_argument("residues must lie in [1, q)");
    (void)y;
    Output out(opts.out_path);
    CsvWriter w(out.stream());
    w.row({"q", "x", "a", "b", "count_a", "count_b", "ratio", "P_a", "P_b", "same_H",
           "flag"});
    // Larger subgroup index means faster decay of the count; a = 1 decays
    // fastest of all. Pairs with distinct indices are oriented so the ratio
    // is expected to tend to 0.
    auto index_of = [&](std::uint64_t a) -> std::uint64_t {
        return a == 1 ? ~std::uint64_t(0) : subgroup_index(q, a).value;
    };
    auto printable_index = [&](std::uint64_t a) -> std::string {
        return a == 1 ? "0" : std::to_string(subgroup_index(q, a).value);
    };
    for (std::size_t i = 0; i < residues.size(); ++i) {
        for (std::size_t j = i + 1; j < residues.size(); ++j) {
            std::uint64_t a = residues[i], b = residues[j];
            const bool same_h = index_of(a) == index_of(b);
            if (!same_h && index_of(a) < index_of(b)) std::swap(a, b);
            const CountRecord ra = count_with_cache(x, q, a, opts);
            const CountRecord rb = count_with_cache(x, q, b, opts);
            const double ratio =
                static_cast<double>(ra.count) / static_cast<double>(rb.count);
            w.row({std::to_string(q), std::to_string(x), std::to_string(a),
                   std::to_string(b), std::to_string(ra.count), std::to_string(rb.count),
                   format_sig12(ratio), printable_index(a), printable_index(b),
                   same_h ? "1" : "0", same_h ? "expect->1" : "expect->0"});
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact counting and constant evaluation for integers without "
                 "divisors in a fixed progression a mod q"};
    app.require_subcommand(1);

    std::uint64_t q = 0, a = 0, x = 0, m = 0, cap = 0;
    std::uint64_t y = kDefaultCutoff;
    std::vector<std::uint64_t> grid, residues;
    CommonOpts opts;
    VerifyCaps caps;

    auto* count = app.add_subcommand("count", "exact N(x; q, a)");
    count->add_option("--q", q, "modulus")->required();
    count->add_option("--a", a, "residue class")->required();
    count->add_option("--x", x, "count limit")->required();
    count->add_option("--out", opts.out_path, "output CSV path (default stdout)");
    add_cache_flags(count, opts);

    auto* converge = app.add_subcommand(
        "converge", "counts vs main-term predictions along an x grid");
    converge->add_option("--q", q, "modulus")->required();
    converge->add_option("--a", a, "residue class")->required();
    converge->add_option("--grid", grid, "ascending x values")->delimiter(',');
    converge->add_option("--y", y, "prime cutoff for truncated constants");
    converge->add_option("--out", opts.out_path, "output CSV path (default stdout)");
    add_cache_flags(converge, opts);

    auto* constants = app.add_subcommand(
        "constants", "subgroup data and the constants P, V, W, theta");
    constants->add_option("--q", q, "modulus")->required();
    constants->add_option("--a", a, "residue class")->required();
    constants->add_option("--y", y, "prime cutoff for truncated constants");
    constants->add_option("--out", opts.out_path, "output CSV path (default stdout)");

    auto* kappa = app.add_subcommand(
        "kappa", "largest multiset sizes avoiding a subset-sum target");
    kappa->add_option("--m", m, "cyclic group order")->required();
    kappa->add_option("--a", a, "avoided target (omit for the zero-sum variant)");
    kappa->add_option("--cap", cap, "search cap (default 4m)");
    kappa->add_option("--out", opts.out_path, "output CSV path (default stdout)");

    auto* verify = app.add_subcommand("verify-lemmas",
                                      "exhaustive combinatorial verification suites");
    verify->add_option("--m-cap", caps.unit_kappa_max_m, "zero-sum sweep cap");
    verify->add_option("--pr-cap", caps.prime_power_max, "avoiding-kappa sweep cap");
    verify->add_option("--construction-cap", caps.construction_max,
                       "avoider construction sweep cap");
    verify->add_option("--q-cap", caps.subgroup_max_q, "subgroup identity sweep cap");
    verify->add_option("--hom-q-cap", caps.psi_hom_max_q, "psi additivity sweep cap");
    verify->add_option("--dp-trials", caps.dp_trials, "subset DP random trials");
    verify->add_option("--decomp-trials", caps.decomposition_trials,
                       "decomposition random trials per (q, a)");
    verify->add_option("--seed", caps.seed, "random seed");
    verify->add_option("--out", opts.out_path, "output CSV path (default stdout)");

    auto* compare = app.add_subcommand("compare-classes",
                                       "pairwise count ratios between residue classes");
    compare->add_option("--q", q, "modulus")->required();
    compare->add_option("--residues", residues, "residue classes to compare")
        ->delimiter(',')
        ->required();
    compare->add_option("--x", x, "count limit")->required();
    compare->add_option("--y", y, "prime cutoff (reserved for annotations)");
    compare->add_option("--out", opts.out_path, "output CSV path (default stdout)");
    add_cache_flags(compare, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (count->parsed()) return cmd_count(q, a, x, opts);
        if (converge->parsed()) return cmd_converge(q, a, grid, y, opts);
        if (constants->parsed()) return cmd_constants(q, a, y, opts);
        if (kappa->parsed()) return cmd_kappa(m, a, cap, opts);
        if (verify->parsed()) return cmd_verify(caps, opts);
        if (compare->parsed()) return cmd_compare(q, residues, x, y, opts);
    } catch (const ResourceError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
