#include <wcqsym/cli.hpp>

#include <optional>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include <wcqsym/birkhoff.hpp>
#include <wcqsym/combinatorics.hpp>
#include <wcqsym/regularization.hpp>
#include <wcqsym/render.hpp>
#include <wcqsym/renqsym.hpp>
#include <wcqsym/verify.hpp>

namespace wcqsym
{

using nlohmann::json;

namespace
{

// A failed check that should exit with kExitFailure.
struct CommandFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    bool json = false;
    std::optional<std::uint32_t> expand;
    std::uint32_t delta = 1;
    bool check_delta = false;
    std::optional<std::string> window;
    std::optional<unsigned> max_size;
};

// "lo:hi" with signed integers.
std::pair<int, int> parse_window(const std::string &text)
{
    auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw std::invalid_argument("window must have the form lo:hi");
    }
    auto to_int = [&](const std::string &s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception &) {
            used = std::string::npos;
        }
        if (s.empty() || used != s.size()) {
            throw std::invalid_argument("malformed window '" + text + "'");
        }
        return v;
    };
    return {to_int(text.substr(0, colon)), to_int(text.substr(colon + 1))};
}

json meta_base(const std::string &command, const std::vector<std::string> &inputs)
{
    return {{"command", command}, {"input", inputs}};
}

void emit(std::ostream &out, json record, json meta)
{
    record["meta"] = std::move(meta);
    out << record.dump() << '\n';
}

int cmd_renorm(const std::string &text, const Options &o, std::ostream &out)
{
    const WeakComposition alpha = parse_composition(text);
    if (o.delta == 0) {
        throw std::invalid_argument("delta must be positive");
    }
    QPoly value = renormalized_M(alpha, o.delta);
    std::optional<std::uint32_t> other;
    if (o.check_delta) {
        other = o.delta == 2 ? 1 : 2;
    }
    bool mismatch = other && renormalized_M(alpha, *other) != value;
    if (o.json) {
        json meta = meta_base("renorm", {text});
        meta["delta"] = o.delta;
        if (other) {
            meta["check_delta"] = {{"delta", *other}, {"agrees", !mismatch}};
        }
        if (o.expand) {
            meta["expansion"] = json_truncated(expand(value, *o.expand));
        }
        emit(out, json_qpoly(value), meta);
    } else {
        out << render_qpoly(value, true) << '\n';
        if (o.expand) {
            out << expand(value, *o.expand).to_string() << '\n';
        }
    }
    if (mismatch) {
        throw CommandFailure("renormalized value differs between delta=" + std::to_string(o.delta) +
                             " and delta=" + std::to_string(*other));
    }
    return kExitOk;
}

int cmd_product(const std::vector<std::string> &operands, const Options &o, std::ostream &out)
{
    RenElement acc = ren_basis(WeakComposition());
    for (const auto &text : operands) {
        acc = ren_product(acc, ren_basis(parse_composition(text)));
    }
    if (o.json) {
        emit(out, json_ren(acc), meta_base("product", operands));
    } else {
        out << render_ren(acc) << '\n';
    }
    return kExitOk;
}

int cmd_coproduct(const std::string &text, const Options &o, std::ostream &out)
{
    RenTensor value = ren_coproduct(parse_composition(text));
    if (o.json) {
        emit(out, json_tensor(value), meta_base("coproduct", {text}));
    } else {
        out << render_tensor(value) << '\n';
    }
    return kExitOk;
}

int cmd_antipode(const std::string &text, const Options &o, std::ostream &out)
{
    RenElement value = ren_antipode(parse_composition(text));
    if (o.json) {
        emit(out, json_ren(value), meta_base("antipode", {text}));
    } else {
        out << render_ren(value) << '\n';
    }
    return kExitOk;
}

int cmd_phi(const std::string &upper, const std::string &lower, const Options &o, std::ostream &out)
{
    const auto d = make_directed(parse_composition(upper), parse_composition(lower));
    const int k = static_cast<int>(d.size());
    auto [lo, hi] = o.window ? parse_window(*o.window) : std::pair<int, int>{-k, k};
    if (lo > hi) {
        throw WindowError("window lower end exceeds upper end");
    }
    QSeries s = phi(d, lo, hi).series;
    if (o.json) {
        json meta = meta_base("phi", {upper, lower});
        meta["window"] = {lo, hi};
        emit(out, json_series(s), meta);
    } else {
        out << render_series(s) << '\n';
    }
    return kExitOk;
}

void print_suite(const SuiteResult &r, std::ostream &out)
{
    out << "suite " << r.suite << " (max size " << r.max_size << ")\n";
    for (const auto &c : r.checks) {
        out << (c.passed() ? "  PASS  " : "  FAIL  ") << c.name << "  [" << c.cases << " cases";
        if (!c.passed()) {
            out << ", " << c.failures << " failed";
        }
        out << "]\n";
        if (!c.passed()) {
            out << "        counterexample: " << c.counterexample << '\n';
        }
    }
}

int cmd_verify(const std::string &suite, const Options &o, std::ostream &out)
{
    std::vector<std::string> suites;
    if (suite == "all") {
        suites = verify_suite_names();
    } else {
        suites.push_back(suite);
    }
    bool ok = true;
    for (const auto &name : suites) {
        SuiteResult r = run_verify_suite(name, o.max_size);
        print_suite(r, out);
        ok = ok && r.passed();
    }
    out << (ok ? "PASS" : "FAIL") << '\n';
    return ok ? kExitOk : kExitFailure;
}

// CLI11 would read "-1:1" as a short option, so glue option values on.
std::vector<std::string> glue_values(const std::vector<std::string> &args)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if ((args[i] == "--window" || args[i] == "--delta" || args[i] == "--expand" || args[i] == "--max-size") &&
            i + 1 < args.size()) {
            out.push_back(args[i] + "=" + args[i + 1]);
            ++i;
        } else {
            out.push_back(args[i]);
        }
    }
    return out;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Renormalized weak-composition quasisymmetric functions", "wcqsym"};
    app.require_subcommand(1);
    Options o;

    std::string alpha;
    std::string beta;
    std::vector<std::string> operands;
    std::string suite;

    auto *renorm = app.add_subcommand("renorm", "renormalized monomial function of a weak composition");
    renorm->add_option("alpha", alpha, "weak composition, e.g. 2,0")->required();
    renorm->add_flag("--json", o.json, "machine-readable output");
    renorm->add_option("--delta", o.delta, "regularization direction (positive)");
    renorm->add_flag("--check-delta", o.check_delta, "recompute with another delta and compare");
    renorm->add_option("--expand", o.expand, "also print the series expansion in N variables");

    auto *product = app.add_subcommand("product", "quasi-shuffle product in the weak-composition M-basis");
    product->add_option("operands", operands, "weak compositions")->required()->expected(2, -1);
    product->add_flag("--json", o.json, "machine-readable output");

    auto *coproduct = app.add_subcommand("coproduct", "deconcatenation coproduct");
    coproduct->add_option("alpha", alpha, "weak composition")->required();
    coproduct->add_flag("--json", o.json, "machine-readable output");

    auto *antipode = app.add_subcommand("antipode", "antipode");
    antipode->add_option("alpha", alpha, "weak composition")->required();
    antipode->add_flag("--json", o.json, "machine-readable output");

    auto *phi_cmd = app.add_subcommand("phi", "regularized Laurent series of a directed weak composition");
    phi_cmd->add_option("alpha", alpha, "weak composition")->required();
    phi_cmd->add_option("beta", beta, "positive direction of the same length")->required();
    phi_cmd->add_option("--window", o.window, "exponent window lo:hi (default -k:k)");
    phi_cmd->add_flag("--json", o.json, "machine-readable output");

    auto *verify = app.add_subcommand("verify", "run an invariant suite");
    std::string suites_help = "one of: all";
    for (const auto &n : verify_suite_names()) {
        suites_help += ", " + n;
    }
    verify->add_option("suite", suite, suites_help)->required();
    verify->add_option("--max-size", o.max_size, "size bound of the suite");

    try {
        std::vector<std::string> glued = glue_values(args);
        std::vector<std::string> reversed(glued.rbegin(), glued.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*renorm) {
            return cmd_renorm(alpha, o, out);
        }
        if (*product) {
            return cmd_product(operands, o, out);
        }
        if (*coproduct) {
            return cmd_coproduct(alpha, o, out);
        }
        if (*antipode) {
            return cmd_antipode(alpha, o, out);
        }
        if (*phi_cmd) {
            return cmd_phi(alpha, beta, o, out);
        }
        return cmd_verify(suite, o, out);
    } catch (const WindowError &e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

} // namespace wcqsym
