#include "cli.hpp"

#include "spadic/exact_seq.hpp"
#include "spadic/minzero.hpp"
#include "spadic/oracle.hpp"
#include "spadic/padic_core.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <fstream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

namespace spadic::cli {
namespace {

using nlohmann::json;

struct Options {
    std::vector<long> primes{2};
    bool witness = false;
    std::optional<unsigned long> n_max, h_max, k_max, c_max, digit_max, factorial_max;
    std::optional<long> l_max;
    std::string format;
    std::string report_path;
    std::string output_path;

    // compute / classify / table
    std::string kind;
    std::vector<std::string> args;

    // verify
    std::vector<std::string> claims;
    std::string profile;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

Integer parse_integer(const std::string& text, const char* what) {
    static const std::regex pattern("[-+]?[0-9]+");
    if (!std::regex_match(text, pattern)) {
        throw UsageError(fmt::format("{} must be an integer, got '{}'", what, text));
    }
    return Integer(text[0] == '+' ? text.substr(1) : text);
}

unsigned long parse_index(const std::string& text, const char* what) {
    const Integer v = parse_integer(text, what);
    if (sgn(v) < 0 || !v.fits_ulong_p()) {
        throw UsageError(fmt::format("{} must be a non-negative machine integer", what));
    }
    return v.get_ui();
}

long parse_long(const std::string& text, const char* what) {
    const Integer v = parse_integer(text, what);
    if (!v.fits_slong_p()) throw UsageError(fmt::format("{} is out of range", what));
    return v.get_si();
}

json valuation_json(const Valuation& v) {
    return v.is_infinite() ? json(nullptr) : json(v.value());
}

json document(const std::string& command, json inputs, json results) {
    return json{{"schema_version", schema_version},
                {"command", command},
                {"inputs", std::move(inputs)},
                {"results", std::move(results)}};
}

template <class T>
json optional_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

void add_padic(json& results, const Rational& value, Prime p) {
    const ValUnit vu = val_unit(value, p);
    results["nu"] = valuation_json(vu.valuation);
    results["eps_residue"] = optional_json(vu.unit_residue);
}

void expect_args(const Options& o, std::size_t count, const char* usage) {
    if (o.args.size() != count) throw UsageError(fmt::format("usage: {}", usage));
}

Prime first_prime(const Options& o) { return Prime(o.primes.front()); }

int cmd_compute(const Options& o, bool p_given, std::ostream& out) {
    json inputs{{"kind", o.kind}};
    json results;
    if (o.kind == "s1" || o.kind == "s2") {
        expect_args(o, 2, "compute s1|s2 N K");
        const unsigned long n = parse_index(o.args[0], "n");
        const unsigned long k = parse_index(o.args[1], "k");
        inputs["n"] = std::to_string(n);
        inputs["k"] = std::to_string(k);
        const Integer value = o.kind == "s1" ? stirling1(n, k) : stirling2(n, k);
        results["value"] = value.get_str();
        if (p_given) add_padic(results, Rational(value), first_prime(o));
    } else if (o.kind == "bern") {
        expect_args(o, 2, "compute bern N L");
        const unsigned long n = parse_index(o.args[0], "n");
        const long l = parse_long(o.args[1], "l");
        inputs["n"] = std::to_string(n);
        inputs["l"] = std::to_string(l);
        const Rational value = bernoulli_number(n, l);
        results["value"] = value.get_str();
        if (p_given) add_padic(results, value, first_prime(o));
    } else if (o.kind == "bernpoly") {
        expect_args(o, 2, "compute bernpoly N L");
        const unsigned long n = parse_index(o.args[0], "n");
        const long l = parse_long(o.args[1], "l");
        inputs["n"] = std::to_string(n);
        inputs["l"] = std::to_string(l);
        const SeriesPoly poly = bernoulli_poly(n, l);
        json coeffs = json::array();
        for (unsigned long i = 0; i <= n; ++i) coeffs.push_back(poly[i].get_str());
        results["coefficients"] = std::move(coeffs);
        results["polynomial"] = poly.to_string('x');
        if (p_given) {
            json vals = json::array();
            for (const auto& [codegree, v] : coefficient_valuations(n, l, first_prime(o))) {
                vals.push_back(json{{"codegree", codegree}, {"nu", valuation_json(v)}});
            }
            results["coefficient_valuations"] = std::move(vals);
        }
    } else {
        throw UsageError(fmt::format("unknown compute kind '{}' (s1, s2, bern, bernpoly)", o.kind));
    }
    if (p_given) inputs["p"] = o.primes.front();
    out << document("compute", std::move(inputs), std::move(results)).dump(2) << '\n';
    return exit_ok;
}

int cmd_classify(const Options& o, std::ostream& out) {
    Kind kind;
    if (o.kind == "first") {
        kind = Kind::First;
    } else if (o.kind == "second") {
        kind = Kind::Second;
    } else {
        throw UsageError(fmt::format("unknown classify kind '{}' (first, second)", o.kind));
    }
    expect_args(o, 2, "classify first|second N K");
    const Integer n = parse_integer(o.args[0], "n");
    const Integer k = parse_integer(o.args[1], "k");
    const Prime p = first_prime(o);
    const ClassificationReport rep = classify(kind, n, k, p, o.witness);
    json results{
        {"kind", to_string(rep.kind)},
        {"n", rep.n.get_str()},
        {"k", rep.k.get_str()},
        {"p", rep.p},
        {"r", rep.r ? json(rep.r->get_str()) : json(nullptr)},
        {"binomial_test_value", optional_json(rep.binomial_test_value)},
        {"min_zero", rep.is_min_zero},
        {"predicted_valuation", optional_json(rep.predicted_valuation)},
        {"predicted_unit_residue", optional_json(rep.predicted_unit_residue)},
    };
    if (o.witness) {
        results["witnessed_valuation"] = valuation_json(*rep.witnessed_valuation);
        results["witnessed_unit_residue"] = optional_json(rep.witnessed_unit_residue);
    }
    json inputs{{"kind", o.kind}, {"n", n.get_str()}, {"k", k.get_str()}, {"p", p.value()},
                {"witness", o.witness}};
    out << document("classify", std::move(inputs), std::move(results)).dump(2) << '\n';
    return exit_ok;
}

SweepRanges ranges_from(const Options& o) {
    SweepRanges r;
    if (o.n_max) r.n_max = *o.n_max;
    if (o.h_max) r.h_max = *o.h_max;
    if (o.k_max) r.k_max = *o.k_max;
    if (o.l_max) r.l_max = *o.l_max;
    if (o.c_max) r.c_max = *o.c_max;
    if (o.digit_max) r.digit_max = *o.digit_max;
    if (o.factorial_max) r.factorial_max = *o.factorial_max;
    return r;
}

json ranges_json(const SweepRanges& r) {
    return json{{"n_max", r.n_max},         {"k_max", r.k_max},
                {"h_max", r.h_max},         {"l_max", r.l_max},
                {"c_max", r.c_max},         {"digit_max", r.digit_max},
                {"factorial_max", r.factorial_max}};
}

json report_json(const SweepSpec& spec, const SweepReport& rep) {
    json failures = json::array();
    for (const auto& f : rep.failures) {
        failures.push_back(
            json{{"inputs", f.inputs}, {"expected", f.expected}, {"observed", f.observed}});
    }
    std::string verdict = "PASS";
    if (!rep.passed()) verdict = rep.conjecture_flag ? "CONJECTURE-VIOLATION" : "FAIL";
    return json{{"claim", std::string(claim_name(rep.claim))},
                {"primes", rep.primes},
                {"ranges", ranges_json(spec.ranges)},
                {"witness", spec.witness},
                {"cases_checked", rep.cases_checked},
                {"cases_skipped", rep.cases_skipped},
                {"failures", std::move(failures)},
                {"elapsed_seconds", rep.elapsed.count()},
                {"conjecture", rep.conjecture_flag},
                {"verdict", verdict}};
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    std::vector<SweepSpec> specs;
    json inputs;
    if (!o.profile.empty()) {
        if (!o.claims.empty()) throw UsageError("use either --claim or --profile, not both");
        const auto profile = parse_profile(o.profile);
        if (!profile) throw UsageError(fmt::format("unknown profile '{}' (quick, full)", o.profile));
        specs = profile_specs(*profile);
        inputs["profile"] = o.profile;
    } else {
        if (o.claims.empty()) throw UsageError("verify needs --claim ID or --profile NAME");
        const SweepRanges ranges = ranges_from(o);
        for (const auto& name : o.claims) {
            const auto id = parse_claim(name);
            if (!id) throw UsageError(fmt::format("unknown claim id '{}'", name));
            SweepSpec s;
            s.claim = *id;
            s.primes = o.primes;
            s.ranges = ranges;
            s.witness = true;
            specs.push_back(s);
        }
        inputs["claims"] = o.claims;
        inputs["primes"] = o.primes;
        inputs["ranges"] = ranges_json(ranges);
    }
    for (const auto& s : specs) {
        try {
            validate(s);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }

    const bool json_out = o.format == "json";
    json results = json::array();
    bool failed = false;
    bool conjecture_failed = false;
    for (const auto& s : specs) {
        const SweepReport rep = run_sweep(s);
        if (!json_out) {
            out << to_log_line(rep) << '\n';
            for (const auto& f : rep.failures) {
                out << fmt::format("  failure {} expected: {} observed: {}\n", f.inputs,
                                   f.expected, f.observed);
            }
            out.flush();
        }
        if (!rep.passed()) (rep.conjecture_flag ? conjecture_failed : failed) = true;
        results.push_back(report_json(s, rep));
    }
    const int code = failed ? exit_failure : conjecture_failed ? exit_conjecture : exit_ok;
    const json doc = document("verify", std::move(inputs), std::move(results));
    if (json_out) {
        out << doc.dump(2) << '\n';
    } else {
        out << (code == exit_ok ? "PASS" : "FAIL") << " summary sweeps=" << specs.size() << '\n';
    }
    if (!o.report_path.empty()) {
        std::ofstream file(o.report_path);
        file << doc.dump(2) << '\n';
        if (!file) {
            err << "error: cannot write report to " << o.report_path << '\n';
            return exit_failure;
        }
    }
    return code;
}

void write_table(const Options& o, std::ostream& out) {
    const bool nu_table = o.kind == "s1-nu" || o.kind == "s2-nu";
    Kind kind;
    if (o.kind == "s1" || o.kind == "s1-nu") {
        kind = Kind::First;
    } else if (o.kind == "s2" || o.kind == "s2-nu") {
        kind = Kind::Second;
    } else {
        throw UsageError(fmt::format("unknown table kind '{}' (s1, s2, s1-nu, s2-nu)", o.kind));
    }
    if (!o.args.empty()) throw UsageError("table takes no positional arguments");
    const unsigned long n_max = o.n_max.value_or(10);
    if (n_max < 1) throw UsageError("--nmax must be at least 1");
    const Prime p = first_prime(o);
    const std::string format = o.format.empty() ? "csv" : o.format;
    if (format != "csv" && format != "json") {
        throw UsageError(fmt::format("unknown format '{}' (csv, json)", format));
    }

    std::vector<Integer> row{1};
    if (format == "csv") {
        out << "n,k," << (nu_table ? "nu" : "value") << '\n';
    }
    json rows = json::array();
    for (unsigned long n = 0; n <= n_max; ++n) {
        if (n > 0) row = next_stirling_row(kind, row);
        json jrow = json::array();
        for (unsigned long k = 0; k <= n; ++k) {
            if (nu_table) {
                const Valuation v = val_unit(Rational(row[k]), p).valuation;
                if (format == "csv") {
                    out << n << ',' << k << ',' << v.to_string() << '\n';
                } else {
                    jrow.push_back(valuation_json(v));
                }
            } else if (format == "csv") {
                out << n << ',' << k << ',' << row[k].get_str() << '\n';
            } else {
                jrow.push_back(row[k].get_str());
            }
        }
        if (format == "json") rows.push_back(std::move(jrow));
    }
    if (format == "json") {
        json inputs{{"kind", o.kind}, {"nmax", n_max}};
        if (nu_table) inputs["p"] = p.value();
        out << document("table", std::move(inputs), std::move(rows)).dump(2) << '\n';
    }
}

int cmd_table(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.output_path.empty()) {
        write_table(o, out);
        return exit_ok;
    }
    std::ofstream file(o.output_path);
    if (!file) {
        err << "error: cannot open " << o.output_path << '\n';
        return exit_failure;
    }
    write_table(o, file);
    file.flush();
    if (!file) {
        err << "error: write to " << o.output_path << " failed\n";
        return exit_failure;
    }
    return exit_ok;
}

// CLI11 reads "-3" as a short flag; mark negative integers so they parse as
// positionals.
std::vector<std::string> protect_negatives(int argc, const char* const* argv) {
    static const std::regex negative("-[0-9]+");
    std::vector<std::string> args;
    for (int i = argc - 1; i >= 1; --i) {
        std::string a = argv[i];
        if (std::regex_match(a, negative)) a = "neg:" + a.substr(1);
        args.push_back(std::move(a));
    }
    return args;  // reversed, as App::parse(std::vector) expects
}

std::string restore_negative(const std::string& a) {
    return a.rfind("neg:", 0) == 0 ? "-" + a.substr(4) : a;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"p-adic valuations of Stirling and higher-order Bernoulli numbers", "spadic"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for all subcommands");
    app.set_config("--config", "", "Read key=value defaults from FILE")->envname("SPADIC_CONFIG");

    auto* p_opt = app.add_option("--p", o.primes, "Prime(s), comma separated (default 2)")
                      ->delimiter(',')
                      ->check(CLI::PositiveNumber);
    app.add_flag("--witness", o.witness, "Attach exact values to classifications");
    app.add_option("--nmax", o.n_max, "Upper bound for n");
    app.add_option("--hmax", o.h_max, "Upper bound for h in a p^h families");
    app.add_option("--kmax", o.k_max, "Upper bound for k in S(pk, k)");
    app.add_option("--lmax", o.l_max, "Upper bound for |l| in B_n^(l)")->check(CLI::NonNegativeNumber);
    app.add_option("--cmax", o.c_max, "Upper bound for multipliers c and m");
    app.add_option("--digitmax", o.digit_max, "Range of digit-sum identities");
    app.add_option("--factmax", o.factorial_max, "Range of factorial identities");
    app.add_option("--format", o.format, "Output format: csv or json (table), json (verify)");
    app.add_option("--report", o.report_path, "Write the verify report document to FILE");
    app.add_option("--output", o.output_path, "Write the table to FILE");

    auto* compute = app.add_subcommand("compute", "Exact values: s1 N K, s2 N K, bern N L, bernpoly N L");
    compute->add_option("kind", o.kind, "s1, s2, bern or bernpoly")->required();
    compute->add_option("args", o.args, "Indices");
    compute->fallthrough();

    auto* classify_cmd = app.add_subcommand("classify", "Minimum-zero classification of S or s");
    classify_cmd->add_option("kind", o.kind, "first or second")->required();
    classify_cmd->add_option("args", o.args, "N K");
    classify_cmd->fallthrough();

    auto* verify = app.add_subcommand("verify", "Run verification sweeps");
    verify->add_option("--claim", o.claims, "Claim id, repeatable (e.g. T2.1, EQ1.1)");
    verify->add_option("--profile", o.profile, "quick or full");
    verify->fallthrough();

    auto* table = app.add_subcommand("table", "Export a triangle: s1, s2, s1-nu, s2-nu");
    table->add_option("kind", o.kind, "s1, s2, s1-nu or s2-nu")->required();
    table->add_option("args", o.args);
    table->fallthrough();

    try {
        app.parse(protect_negatives(argc, argv));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }
    for (auto& a : o.args) a = restore_negative(a);

    try {
        for (long p : o.primes) Prime{p};
        if (o.primes.empty()) throw UsageError("--p needs at least one prime");
        if (*compute) return cmd_compute(o, p_opt->count() > 0, out);
        if (*classify_cmd) return cmd_classify(o, out);
        if (*verify) return cmd_verify(o, out, err);
        if (*table) return cmd_table(o, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_usage;
}

}  // namespace spadic::cli
