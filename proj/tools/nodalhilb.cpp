// nodalhilb: classes, series, monodromy invariants and grid verification for
// Hilbert schemes of rational nodal curves.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or bounds error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <nodalhilb/nodalhilb.hpp>

namespace
{

using namespace nodalhilb;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

constexpr std::size_t max_series_order = 64;

enum class Format { text, json, csv };

const std::map<std::string, Format> format_names{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string render(const WeightPoly &p, Format f)
{
    switch (f) {
    case Format::json:
        return nlohmann::json(p).dump();
    case Format::csv: {
        std::string out = "degree,coefficient\n";
        for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
            out += std::to_string(i) + "," + p.coeffs()[i].str() + "\n";
        }
        return out;
    }
    case Format::text:
        break;
    }
    return to_string(p);
}

std::string render(const QSeries &s, Format f)
{
    switch (f) {
    case Format::json:
        return nlohmann::json(s).dump();
    case Format::csv: {
        std::string out = "q_power,L_power,coefficient\n";
        for (std::size_t n = 0; n <= s.order(); ++n) {
            const auto &c = s.coeffs()[n].coeffs();
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (c[i] != 0) {
                    out += std::to_string(n) + "," + std::to_string(i) + "," + c[i].str() + "\n";
                }
            }
        }
        return out;
    }
    case Format::text:
        break;
    }
    return to_string(s);
}

void print(const std::string &s)
{
    std::cout << s;
    if (s.empty() || s.back() != '\n') {
        std::cout << '\n';
    }
}

bool env_allows_large()
{
    const char *v = std::getenv("NODALHILB_ALLOW_LARGE");
    return v != nullptr && std::string(v) != "" && std::string(v) != "0";
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Weight polynomials of Hilbert schemes of rational nodal curves"};
    app.require_subcommand(1);

    Format format = Format::text;
    auto add_format = [&](CLI::App *sub) {
        sub->add_option("--format", format, "Output format")->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
    };

    // class
    auto *cls = app.add_subcommand("class", "Grothendieck class of C^[m] or C^[m,m+1]");
    std::string kind;
    unsigned delta = 0;
    unsigned m = 0;
    unsigned punctures = 0;
    cls->add_option("kind", kind, "hilb or nested")->required()->check(CLI::IsMember({"hilb", "nested"}));
    cls->add_option("--delta", delta, "Number of nodes")->required();
    cls->add_option("--m", m, "Length")->required();
    auto *punct_opt = cls->add_option("--punctures", punctures, "Removed regular points (hilb only)");
    add_format(cls);

    // series
    auto *ser = app.add_subcommand("series", "Hilbert-scheme generating series up to q^order");
    std::size_t order = 0;
    ser->add_option("--delta", delta, "Number of nodes")->required();
    ser->add_option("--punctures", punctures, "Removed regular points");
    ser->add_option("--order", order, "Truncation order")->required();
    add_format(ser);

    // invariants
    auto *inv = app.add_subcommand("invariants", "Monodromy-invariant weight polynomials");
    long long degree = 0;
    bool nested = false;
    std::string method_name = "oracle";
    inv->add_option("--delta", delta, "Number of nodes")->required();
    inv->add_option("--m", m, "Length")->required();
    auto *degree_opt = inv->add_option("--i", degree, "Single cohomological degree (unsigned result)");
    inv->add_flag("--nested", nested, "Nested Hilbert scheme C^[m,m+1]");
    inv->add_option("--method", method_name, "oracle or closed")->check(CLI::IsMember({"oracle", "closed"}));
    add_format(inv);

    // verify
    auto *ver = app.add_subcommand("verify", "Check the support identities over a (delta, m) grid");
    unsigned delta_max = 0;
    unsigned m_max = 0;
    std::vector<std::string> identity_names;
    unsigned jobs = 1;
    bool allow_large = false;
    double timeout = 0;
    std::string out_path;
    ver->add_option("--delta-max", delta_max, "Largest number of nodes")->required();
    ver->add_option("--m-max", m_max, "Largest length")->required();
    ver->add_option("--identities", identity_names, "Subset of hilb_support,nested_support,lemma_A,lemma_B")
        ->delimiter(',');
    ver->add_option("--jobs", jobs, "Cells evaluated in parallel")->check(CLI::PositiveNumber);
    ver->add_flag("--allow-large", allow_large, "Lift the grid safety bound");
    ver->add_option("--timeout", timeout, "Per-cell time limit in seconds (0: none)")->check(CLI::NonNegativeNumber);
    ver->add_option("--out", out_path, "Also write the report to this file");
    add_format(ver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (cls->parsed()) {
            WeightPoly p;
            if (kind == "hilb") {
                p = hilb_class(CurveSpec{delta, punctures}, m);
            } else {
                if (punct_opt->count() != 0) {
                    throw UsageError("--punctures is only valid with kind=hilb");
                }
                p = nested_class(delta, m);
            }
            print(render(p, format));
            return exit_ok;
        }

        if (ser->parsed()) {
            if (order > max_series_order) {
                throw UsageError("--order must be at most " + std::to_string(max_series_order));
            }
            print(render(hilb_series(CurveSpec{delta, punctures}, order), format));
            return exit_ok;
        }

        if (inv->parsed()) {
            const Method method = method_name == "closed" ? Method::closed_form : Method::oracle;
            WeightPoly p;
            if (degree_opt->count() != 0) {
                p = nested ? nested_degree_invariants(delta, m, degree, method) : hilb_degree_invariants(delta, m, degree, method);
            } else {
                p = nested ? w_I(delta, m, method) : w_H(delta, m, method);
            }
            print(render(p, format));
            return exit_ok;
        }

        if (ver->parsed()) {
            std::vector<Identity> ids;
            if (identity_names.empty()) {
                ids.assign(std::begin(all_identities), std::end(all_identities));
            }
            for (const auto &n : identity_names) {
                auto id = parse_identity(n);
                if (!id) {
                    throw UsageError("unknown identity '" + n + "'");
                }
                ids.push_back(*id);
            }
            VerifyOptions opts;
            opts.jobs = jobs;
            opts.allow_large = allow_large || env_allows_large();
            if (timeout > 0) {
                opts.timeout_seconds = timeout;
            }
            const auto report = verify_grid(delta_max, m_max, ids, opts);
            std::string text;
            switch (format) {
            case Format::json:
                text = to_json(report).dump(2);
                break;
            case Format::csv:
                text = to_csv(report);
                break;
            case Format::text:
                text = to_text(report);
                break;
            }
            print(text);
            if (!out_path.empty()) {
                std::ofstream f(out_path);
                if (!f) {
                    throw UsageError("cannot write " + out_path);
                }
                f << text << '\n';
            }
            return report.passed() ? exit_ok : exit_failed;
        }
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const BoundExceeded &e) {
        std::cerr << "BoundExceeded: " << e.what() << '\n';
        return exit_usage;
    } catch (const DegreeOutOfRange &e) {
        std::cerr << "DegreeOutOfRange: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
