#include "eisen/cli.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "eisen/divisor.hpp"
#include "eisen/factorization.hpp"
#include "eisen/mersenne.hpp"
#include "eisen/report.hpp"
#include "eisen/scan.hpp"
#include "eisen/text.hpp"

namespace eisen {

namespace {

const char *bool_str(bool b) { return b ? "true" : "false"; }

struct ScanArgs {
    std::string checkpoint;
    bool resume = false;
    unsigned workers = 1;
    std::uint64_t checkpoint_every = 10'000;
    std::uint64_t halt_after = 0;
    bool csv = false;
    bool json = false;
};

void add_scan_options(CLI::App *cmd, ScanArgs &args)
{
    cmd->add_option("--checkpoint", args.checkpoint, "Checkpoint file, rewritten atomically");
    cmd->add_flag("--resume", args.resume, "Continue from the checkpoint file if it exists");
    cmd->add_option("--workers", args.workers, "Worker threads")->check(CLI::Range(1u, 1024u));
    cmd->add_option("--checkpoint-every", args.checkpoint_every, "Candidates per checkpoint")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--halt-after", args.halt_after,
                    "Stop after this many candidates, leaving the checkpoint incomplete");
    cmd->add_flag("--csv", args.csv, "CSV output");
}

ScanConfig make_scan_config(const ScanArgs &args, std::uint64_t bound)
{
    ScanConfig config;
    config.bound = bound;
    config.workers = args.workers;
    config.checkpoint_every = args.checkpoint_every;
    config.factor_options = FactorOptions::from_environment();
    if (!args.checkpoint.empty())
        config.checkpoint_path = args.checkpoint;
    if (args.halt_after > 0)
        config.halt_after = args.halt_after;
    return config;
}

std::optional<ScanCheckpoint> resume_state(const ScanArgs &args)
{
    if (args.resume && args.checkpoint.empty())
        throw std::invalid_argument("--resume requires --checkpoint");
    if (args.resume && std::filesystem::exists(args.checkpoint))
        return load_checkpoint(args.checkpoint);
    return std::nullopt;
}

int report_halt(const ScanCheckpoint &c, std::ostream &err)
{
    err << "halted after " << c.examined << " candidates; rerun with --resume to continue\n";
    return 0;
}

void print_divisor_report(const DivisorReport &r, std::ostream &out)
{
    out << "subject=" << format_eisenstein(r.subject) << '\n'
        << "sigma_star=" << format_eisenstein(r.sigma_star) << '\n'
        << "norm_subject=" << r.norm_subject.get_str() << '\n'
        << "norm_sigma=" << r.norm_sigma.get_str() << '\n'
        << "perfect=" << bool_str(r.is_perfect) << '\n'
        << "norm_perfect=" << bool_str(r.is_norm_perfect) << '\n';
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact arithmetic, factorization and perfect-number search over the Eisenstein integers"};
    app.name("eisen");
    app.require_subcommand(1);
    app.footer("Elements are written a+bw, e.g. -1-3w, 486+243w, 7, -2w. "
               "EISEN_FACTOR_EFFORT bounds Pollard-rho iterations.");

    std::string element;
    bool json = false;

    auto *norm_cmd = app.add_subcommand("norm", "Norm a^2 - ab + b^2");
    auto *factor_cmd = app.add_subcommand("factor", "Factor into a unit times canonical primes");
    auto *sigma_cmd = app.add_subcommand("sigma", "Complex sum of divisors (and sigma(n) for positive rationals)");
    auto *even_cmd = app.add_subcommand("even", "Divisibility by 1-w, by three equivalent tests");
    auto *conj_cmd = app.add_subcommand("conjecture", "Check the odd norm-perfect shape pi^k gamma^3");
    for (auto *cmd : {norm_cmd, factor_cmd, sigma_cmd, even_cmd, conj_cmd}) {
        cmd->add_option("x", element, "Eisenstein integer")->required()->allow_extra_args(false);
        cmd->add_flag("--json", json, "JSON output");
    }

    unsigned long mersenne_max = 0;
    ScanArgs mersenne_args;
    auto *mersenne_cmd = app.add_subcommand("mersenne", "Scan Eisenstein Mersenne numbers over prime exponents");
    mersenne_cmd->add_option("--max", mersenne_max, "Largest exponent")->required()->check(CLI::PositiveNumber);
    add_scan_options(mersenne_cmd, mersenne_args);
    mersenne_cmd->add_flag("--json", mersenne_args.json, "Line-delimited JSON output");

    unsigned long euclid_k = 0;
    std::string check_value;
    auto *check_cmd = app.add_subcommand("check", "Divisor report for a value or the Euclid-form construction");
    auto *euclid_opt = check_cmd->add_option("--euclid", euclid_k, "Build (1-w)^(k-1) M_k and verify it");
    auto *value_opt = check_cmd->add_option("--value", check_value, "Element to report on");
    euclid_opt->excludes(value_opt);
    check_cmd->add_flag("--json", json, "JSON output");

    std::uint64_t max_norm = 1'000'000;
    ScanArgs scan_args;
    auto *scan_cmd = app.add_subcommand("scan", "Search region representatives for norm-perfect elements");
    scan_cmd->add_option("--max-norm", max_norm, "Norm bound")->capture_default_str()->check(CLI::PositiveNumber);
    add_scan_options(scan_cmd, scan_args);

    unsigned long table_max = 0;
    auto *table_cmd = app.add_subcommand("table", "Compare the period-12 closed form of (1-w)^p with direct powers");
    table_cmd->add_option("--max", table_max, "Largest exponent")->required()->check(CLI::PositiveNumber);
    table_cmd->add_flag("--json", json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << '\n' << "run 'eisen --help' for usage\n";
        return 2;
    }

    try {
        const FactorOptions opts = FactorOptions::from_environment();

        if (norm_cmd->parsed()) {
            EisensteinInt x = parse_eisenstein(element);
            if (json)
                out << Json{{"subject", format_eisenstein(x)}, {"norm", norm(x).get_str()}}.dump() << '\n';
            else
                out << "subject=" << format_eisenstein(x) << "\nnorm=" << norm(x).get_str() << '\n';
            return 0;
        }

        if (factor_cmd->parsed()) {
            EisensteinInt x = parse_eisenstein(element);
            PrimeFactorization f = factor(x, opts);
            if (json) {
                out << to_json(f).dump() << '\n';
            } else {
                out << "subject=" << format_eisenstein(x) << '\n'
                    << "unit=" << format_eisenstein(f.unit) << '\n'
                    << "factorization=" << format_factorization(f) << '\n';
            }
            return 0;
        }

        if (sigma_cmd->parsed()) {
            EisensteinInt x = parse_eisenstein(element);
            EisensteinInt s = sigma_star(x, opts);
            std::optional<Integer> rational;
            if (sgn(x.b) == 0 && sgn(x.a) > 0)
                rational = rational_sigma(x.a, opts);
            if (json) {
                Json j{{"subject", format_eisenstein(x)}, {"sigma_star", format_eisenstein(s)}};
                if (rational)
                    j["rational_sigma"] = rational->get_str();
                out << j.dump() << '\n';
            } else {
                out << "subject=" << format_eisenstein(x) << "\nsigma_star=" << format_eisenstein(s) << '\n';
                if (rational)
                    out << "rational_sigma=" << rational->get_str() << '\n';
            }
            return 0;
        }

        if (even_cmd->parsed()) {
            EisensteinInt x = parse_eisenstein(element);
            bool coefficient_test = is_even(x);
            bool divisibility_test = divides(one_minus_w, x);
            bool norm_test = mpz_divisible_ui_p(norm(x).get_mpz_t(), 3) != 0;
            if (json) {
                out << Json{{"subject", format_eisenstein(x)},
                            {"even", coefficient_test},
                            {"coefficient_test", coefficient_test},
                            {"divisible_by_1_minus_w", divisibility_test},
                            {"norm_test", norm_test}}
                           .dump()
                    << '\n';
            } else {
                out << "subject=" << format_eisenstein(x) << '\n'
                    << "even=" << bool_str(coefficient_test) << '\n'
                    << "coefficient_test=" << bool_str(coefficient_test) << '\n'
                    << "divisible_by_1_minus_w=" << bool_str(divisibility_test) << '\n'
                    << "norm_test=" << bool_str(norm_test) << '\n';
            }
            return 0;
        }

        if (conj_cmd->parsed()) {
            EisensteinInt x = parse_eisenstein(element);
            auto witness = matches_odd_conjecture(x, opts);
            if (json) {
                Json j{{"subject", format_eisenstein(x)}, {"matches", witness.has_value()}};
                if (witness) {
                    j["prime"] = format_eisenstein(witness->prime);
                    j["exponent"] = witness->exponent;
                    j["gamma"] = format_eisenstein(witness->cube_root);
                }
                out << j.dump() << '\n';
            } else {
                out << "subject=" << format_eisenstein(x) << "\nmatches=" << bool_str(witness.has_value()) << '\n';
                if (witness)
                    out << "prime=" << format_eisenstein(witness->prime) << '\n'
                        << "exponent=" << witness->exponent << '\n'
                        << "gamma=" << format_eisenstein(witness->cube_root) << '\n';
            }
            return 0;
        }

        if (mersenne_cmd->parsed()) {
            if (mersenne_args.json && mersenne_args.csv)
                throw std::invalid_argument("--json and --csv are mutually exclusive");
            ScanConfig config = make_scan_config(mersenne_args, mersenne_max);
            ScanCheckpoint c = run_mersenne_scan(config, resume_state(mersenne_args));
            if (!c.complete)
                return report_halt(c, err);
            if (mersenne_args.csv)
                out << csv_header_mersenne() << '\n';
            std::string primes;
            for (const auto &j : c.found) {
                MersenneRecord r = mersenne_record_from_json(j);
                if (mersenne_args.json)
                    out << j.dump() << '\n';
                else if (mersenne_args.csv)
                    out << to_csv(r) << '\n';
                else
                    out << "p=" << r.p << " value=" << format_eisenstein(r.value) << " norm=" << r.norm.get_str()
                        << " prime=" << bool_str(r.prime) << " p_mod_12=" << r.p_mod_12
                        << " in_region=" << bool_str(r.in_region) << '\n';
                if (r.prime)
                    primes += (primes.empty() ? "" : " ") + std::to_string(r.p);
            }
            if (!mersenne_args.json && !mersenne_args.csv)
                out << "prime_exponents=" << primes << '\n';
            return 0;
        }

        if (check_cmd->parsed()) {
            if (euclid_opt->count() == 0 && value_opt->count() == 0)
                throw std::invalid_argument("check requires --euclid or --value");
            EisensteinInt x;
            if (euclid_opt->count() > 0)
                x = euclid_norm_perfect(euclid_k);
            else
                x = parse_eisenstein(check_value);
            DivisorReport r = divisor_report(x, opts);
            if (json) {
                Json j = to_json(r);
                j["even"] = is_even(x);
                if (euclid_opt->count() > 0)
                    j["k"] = euclid_k;
                out << j.dump() << '\n';
            } else {
                if (euclid_opt->count() > 0)
                    out << "k=" << euclid_k << '\n';
                print_divisor_report(r, out);
                out << "even=" << bool_str(is_even(x)) << '\n';
            }
            return 0;
        }

        if (scan_cmd->parsed()) {
            ScanConfig config = make_scan_config(scan_args, max_norm);
            ScanCheckpoint c = run_norm_perfect_scan(config, resume_state(scan_args));
            if (!c.complete)
                return report_halt(c, err);
            write_norm_perfect_output(c, scan_args.csv ? OutputFormat::csv : OutputFormat::jsonl, out);
            return 0;
        }

        if (table_cmd->parsed()) {
            bool all_match = true;
            for (unsigned long p = 1; p <= table_max; ++p) {
                EisensteinInt closed = power_table_entry(p);
                EisensteinInt direct = pow(one_minus_w, p);
                bool match = closed == direct;
                all_match = all_match && match;
                if (json)
                    out << Json{{"p", p},
                                {"p_mod_12", p % 12},
                                {"closed_form", format_eisenstein(closed)},
                                {"direct", format_eisenstein(direct)},
                                {"match", match}}
                               .dump()
                        << '\n';
                else
                    out << "p=" << p << " p_mod_12=" << p % 12 << " closed_form=" << format_eisenstein(closed)
                        << " direct=" << format_eisenstein(direct) << " match=" << bool_str(match) << '\n';
            }
            if (!all_match) {
                err << "error: closed form disagrees with direct power\n";
                return 1;
            }
            return 0;
        }
    } catch (const std::invalid_argument &e) {
        // ParseError and checkpoint/flag mismatches.
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

} // namespace eisen
