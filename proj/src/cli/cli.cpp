#include "soliton/cli/cli.hpp"

#include "soliton/cli/verify.hpp"
#include "soliton/errors.hpp"
#include "soliton/report/json_io.hpp"
#include "soliton/spectra/spectra.hpp"
#include "soliton/varengine/oracle.hpp"
#include "soliton/varengine/reference_forms.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <ctime>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

namespace soliton::cli {

using exactnum::Rat;
using report::EvalPoint;
using report::Json;
using report::to_json;
namespace ve = varengine;
namespace ref = varengine::reference_forms;

namespace {

struct Outcome {
    Json results = Json::object();
    Json discrepancies = Json::array();
};

/// Raw flag values as typed; parsed lazily so that every numeric flag goes
/// through the exact rational parser.
struct Flags {
    bool json = false;
    bool timestamps = false;
    std::string n_dim = "symbolic";
    bool symbolic = false;
    std::string op;
    std::string sphere_dim;
    std::string m;
    std::string n;
    std::string cutoff = "20";
    std::string manifold;
    bool dagger = false;
    std::string lambda1_bound;
    std::string b_factors = "2";
    std::string alpha;
    std::string seed;
    bool skip_oracle = false;
};

Rat parse_rational(const std::string& flag, const std::string& text) {
    try {
        return Rat::parse(text);
    } catch (const ParseError&) {
        throw UsageError("--" + flag + " expects an exact rational, got '" + text + "'");
    }
}

long parse_integer(const std::string& flag, const std::string& text) {
    if (text.empty()) throw UsageError("--" + flag + " is required");
    const Rat r = parse_rational(flag, text);
    if (!r.is_integer() || !r.numerator().fits_slong_p())
        throw UsageError("--" + flag + " expects an integer, got '" + text + "'");
    return r.numerator().get_si();
}

EvalPoint eval_point(const Flags& f) {
    if (f.symbolic || f.n_dim == "symbolic") return std::nullopt;
    return parse_rational("n-dim", f.n_dim);
}

Json discrepancy_json(const ve::Discrepancy& d, const EvalPoint& at) {
    return {{"quantity", d.quantity}, {"reference", to_json(d.reference, at)}, {"pipeline", to_json(d.pipeline, at)}};
}

void add_discrepancies(Outcome& o, const ve::Pipeline& p, const EvalPoint& at,
                       std::initializer_list<std::string_view> prefixes) {
    for (const auto& d : ve::compare_with_reference(p))
        for (auto pre : prefixes)
            if (std::string_view(d.quantity).substr(0, pre.size()) == pre) {
                o.discrepancies.push_back(discrepancy_json(d, at));
                break;
            }
}

Json pde_json(const ve::Solution& s, const ve::AnsatzFn& reference, const EvalPoint& at) {
    return {{"pipeline", to_json(s.value, at)},
            {"reference", to_json(reference, at)},
            {"residual_zero", ve::verify_back_substitution(s.value, s.op, s.rhs)}};
}

spectra::ManifoldKind manifold_kind(const std::string& s) {
    if (s == "s2xs2") return spectra::ManifoldKind::S2xS2;
    if (s == "smxsn") return spectra::ManifoldKind::SmxSn;
    if (s == "s2xN" || s == "s2xn") return spectra::ManifoldKind::S2xN;
    throw UsageError("--manifold must be one of s2xs2, smxsn, s2xN, got '" + s + "'");
}

std::vector<Rat> parse_alphas(const std::string& text) {
    std::vector<Rat> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational("alpha", item));
    return out;
}

Json check_json(const CheckResult& c) {
    return {{"id", std::to_string(c.id)}, {"name", c.name}, {"status", to_string(c.status)}, {"details", c.details}};
}

std::string utc_now() {
    const std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

void render_text(std::ostream& os, const Json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (is_scalar(v)) {
                os << pad << k << ": " << scalar_text(v) << '\n';
            } else if (v.empty()) {
                os << pad << k << ": " << (v.is_array() ? "[]" : "{}") << '\n';
            } else if (v.is_object() && v.contains("expr") && v.contains("num")) {
                os << pad << k << ": " << scalar_text(v["expr"]);
                if (v.contains("value")) os << "  (at n = " << scalar_text(v["at"]) << ": " << scalar_text(v["value"]) << ")";
                os << '\n';
            } else {
                os << pad << k << ":\n";
                render_text(os, v, indent + 1);
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (is_scalar(v)) {
                os << pad << "- " << scalar_text(v) << '\n';
            } else {
                os << pad << "-\n";
                render_text(os, v, indent + 1);
            }
        }
    } else {
        os << pad << scalar_text(j) << '\n';
    }
}

class Driver {
public:
    explicit Driver(const RunOptions& opts) : opts_(opts) {}

    const ve::Pipeline& pipeline() {
        if (!pipeline_)
            pipeline_ = ve::Pipeline::run(opts_.corrupt_laplacian ? corrupted_laplacian_matrices()
                                                                  : ve::laplacian_matrices());
        return *pipeline_;
    }

    Outcome spectrum(const Flags& f) {
        const auto op = spectra::operator_from_string(f.op);
        const long n = parse_integer("sphere-dim", f.sphere_dim);
        Outcome o;
        o.results["spectrum"] = to_json(spectra::sphere_spectrum(op, n, parse_rational("cutoff", f.cutoff)));
        return o;
    }

    Outcome product_spectrum(const Flags& f) {
        const auto op = spectra::operator_from_string(f.op);
        const long m = parse_integer("m", f.m);
        const long n = parse_integer("n", f.n);
        const Rat cutoff = parse_rational("cutoff", f.cutoff);
        spectra::Spectrum s;
        switch (op) {
        case spectra::Operator::Functions: s = spectra::product_function_spectrum(m, n, cutoff); break;
        case spectra::Operator::OneForms: s = spectra::product_oneform_sum(m, n, cutoff); break;
        case spectra::Operator::Einstein: s = spectra::product_einstein_spectrum(m, n, cutoff); break;
        }
        Outcome o;
        o.results["spectrum"] = to_json(s);
        return o;
    }

    Outcome kernel(const Flags& f) {
        spectra::ManifoldDescriptor d;
        d.kind = manifold_kind(f.manifold);
        if (d.kind == spectra::ManifoldKind::SmxSn) {
            d.m = parse_integer("m", f.m);
            d.n = parse_integer("n", f.n);
        }
        d.asserted_dagger = f.dagger;
        if (!f.lambda1_bound.empty()) d.lambda1_lower_bound = parse_rational("lambda1-bound", f.lambda1_bound);
        Outcome o;
        o.results["kernel"] = to_json(spectra::kernel_dims(d));
        return o;
    }

    Outcome fss(const Flags& f) {
        const auto at = eval_point(f);
        Outcome o;
        o.results["f_ss"] = pde_json(pipeline().f_ss, ref::f_ss(), at);
        add_discrepancies(o, pipeline(), at, {"f_ss["});
        return o;
    }

    Outcome utilde(const Flags& f) {
        const auto at = eval_point(f);
        const auto& p = pipeline();
        Outcome o;
        o.results["u_tilde"] = pde_json(p.u.u_tilde, ref::u_tilde(), at);
        o.results["u"] = {{"pipeline", to_json(p.u.u, at)}, {"reference", to_json(ref::u(), at)}};
        add_discrepancies(o, p, at, {"u_tilde[", "u["});
        return o;
    }

    Outcome hb(const Flags& f) {
        const auto at = eval_point(f);
        const auto& p = pipeline();
        Outcome o;
        Json j = pde_json(p.h_b, ref::h_b(), at);
        j["reference_residual_zero"] = ve::verify_back_substitution(ref::h_b(), p.h_b.op, p.h_b.rhs);
        o.results["h_b"] = std::move(j);
        add_discrepancies(o, p, at, {"h_b["});
        return o;
    }

    Outcome crossterms(const Flags& f) {
        const auto at = eval_point(f);
        const auto& p = pipeline();
        Outcome o;
        o.results["cross_conformal"] = {{"pipeline", to_json(p.conformal, at)},
                                        {"reference", to_json(ref::cross_conformal(), at)}};
        o.results["cross_tt"] = {{"pipeline", to_json(p.tt, at)}, {"reference", to_json(ref::cross_tt(), at)}};
        add_discrepancies(o, p, at, {"cross_conformal.", "cross_tt."});
        return o;
    }

    Outcome thirdvar(const Flags& f) {
        const auto at = eval_point(f);
        const auto& p = pipeline();
        Outcome o;
        o.results["third_variation"] = {{"pipeline", to_json(p.third, at)},
                                        {"reference", to_json(ref::third_variation(), at)}};
        add_discrepancies(o, p, at, {"third_variation."});
        return o;
    }

    Outcome obstruction(const Flags& f) {
        const auto at = eval_point(f);
        const int B = static_cast<int>(parse_integer("b-factors", f.b_factors));
        const auto r = ve::obstruction(B, pipeline());
        Outcome o;
        o.results["obstruction"] = to_json(r, at);
        for (const auto& d : r.discrepancies) o.discrepancies.push_back(discrepancy_json(d, at));
        return o;
    }

    Outcome oracle(const Flags& f) {
        if (parse_integer("b-factors", f.b_factors) != 2)
            throw ConfigError("the polynomial oracle needs B = 2; no concrete model exists for an abstract factor");
        std::vector<Rat> alphas;
        if (!f.alpha.empty())
            alphas = parse_alphas(f.alpha);
        else
            alphas = ve::random_alphas(f.seed.empty() ? 0 : static_cast<std::uint64_t>(parse_integer("seed", f.seed)));
        const auto r = ve::oracle_check(alphas, pipeline());
        Outcome o;
        o.results["oracle"] = to_json(r);
        for (const auto& c : r.checks)
            if (!c.passed) o.discrepancies.push_back({{"check", c.name}, {"detail", c.detail}});
        return o;
    }

    Outcome verify(const Flags& f) {
        VerifyOptions vo;
        vo.skip_oracle = f.skip_oracle;
        vo.corrupt_laplacian = opts_.corrupt_laplacian;
        const VerifyReport r = verify_all(vo);
        Outcome o;
        Json checks = Json::array();
        for (const auto& c : r.checks) {
            checks.push_back(check_json(c));
            if (c.status == CheckStatus::Fail)
                o.discrepancies.push_back({{"check", std::to_string(c.id)}, {"name", c.name}});
        }
        o.results["checks"] = std::move(checks);
        o.results["oracle_section"] = f.skip_oracle ? "skipped" : "executed";
        Json ledger = Json::array();
        const Json full = to_json(r.obstruction_b2, Rat(4));
        for (const auto& fd : full["findings"])
            if (fd["topic"].get<std::string>().rfind("sigma4.", 0) == 0) ledger.push_back(fd);
        o.results["sigma4_ledger"] = std::move(ledger);
        o.results["pipeline_vs_reference"] = full["discrepancies"];
        return o;
    }

private:
    const RunOptions& opts_;
    std::optional<ve::Pipeline> pipeline_;
};

std::string status_of(const Outcome& o) { return o.discrepancies.empty() ? "ok" : "mismatch"; }

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const RunOptions& opts) {
    CLI::App app{"Exact verification engine for the obstruction computation on products with 2-sphere factors",
                 "soliton"};
    app.require_subcommand(1);
    Flags f;

    auto common = [&](CLI::App* s) {
        s->add_flag("--json", f.json, "Emit the report as JSON");
        s->add_flag("--timestamps", f.timestamps, "Include a generation timestamp");
    };
    auto dimension = [&](CLI::App* s) {
        s->add_option("--n-dim", f.n_dim, "Dimension as an exact rational, or 'symbolic'");
        s->add_flag("--symbolic", f.symbolic, "Same as --n-dim symbolic");
    };

    using Handler = Outcome (Driver::*)(const Flags&);
    std::map<CLI::App*, std::pair<std::string, Handler>> handlers;
    auto command = [&](const std::string& name, const std::string& help, Handler h) {
        CLI::App* s = app.add_subcommand(name, help);
        common(s);
        handlers[s] = {name, h};
        return s;
    };

    auto* spectrum = command("spectrum", "Spectrum of a round sphere", &Driver::spectrum);
    spectrum->add_option("--operator", f.op, "functions, one-forms or einstein")->required();
    spectrum->add_option("--sphere-dim", f.sphere_dim, "Sphere dimension")->required();
    spectrum->add_option("--cutoff", f.cutoff, "Largest eigenvalue reported");

    auto* product = command("product-spectrum", "Spectrum of a product of two spheres", &Driver::product_spectrum);
    product->add_option("--operator", f.op, "functions, one-forms or einstein")->required();
    product->add_option("--m", f.m, "First sphere dimension")->required();
    product->add_option("--n", f.n, "Second sphere dimension")->required();
    product->add_option("--cutoff", f.cutoff, "Largest eigenvalue reported");

    auto* kernel = command("kernel", "Kernel dimensions for a product manifold", &Driver::kernel);
    kernel->add_option("--manifold", f.manifold, "s2xs2, smxsn or s2xN")->required();
    kernel->add_option("--m", f.m, "First sphere dimension (smxsn)");
    kernel->add_option("--n", f.n, "Second sphere dimension (smxsn)");
    kernel->add_flag("--dagger", f.dagger, "Assert the spectral condition on N (s2xN)");
    kernel->add_option("--lambda1-bound", f.lambda1_bound, "Asserted lower bound for lambda_1 on N (s2xN)");

    dimension(command("fss", "Second-order correction f_ss", &Driver::fss));
    dimension(command("utilde", "Conformal factor u~ and u = (1+M)u~", &Driver::utilde));
    dimension(command("hb", "Factor trace h_b of the second-order metric", &Driver::hb));
    dimension(command("crossterms", "Conformal and TT cross terms", &Driver::crossterms));
    dimension(command("thirdvar", "Third variation", &Driver::thirdvar));

    auto* obstruction = command("obstruction", "Fourth-order obstruction Q4, Q2 and verdicts", &Driver::obstruction);
    dimension(obstruction);
    obstruction->add_option("--b-factors", f.b_factors, "Number of 2-sphere factors (1 or 2)");

    auto* oracle = command("oracle", "Polynomial oracle on two 2-spheres at n = 4", &Driver::oracle);
    oracle->add_option("--alpha", f.alpha, "Kernel coefficients a,b");
    oracle->add_option("--seed", f.seed, "Seed for random coefficients when --alpha is absent");
    oracle->add_option("--b-factors", f.b_factors, "Number of 2-sphere factors; only 2 is supported");

    auto* verify = command("verify-all", "Run every acceptance check", &Driver::verify);
    verify->add_flag("--skip-oracle", f.skip_oracle, "Skip the polynomial oracle and property suites");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "soliton: " << e.what() << '\n';
        return kExitError;
    }

    CLI::App* chosen = app.get_subcommands().front();
    const auto& [name, handler] = handlers.at(chosen);

    std::string format = "text";
    if (opts.report_format) {
        format = *opts.report_format;
    } else if (const char* env = std::getenv("SOLITON_REPORT_FORMAT")) {
        format = env;
    }
    if (format != "text" && format != "json") {
        err << "soliton: SOLITON_REPORT_FORMAT must be 'text' or 'json', got '" << format << "'\n";
        return kExitError;
    }
    if (f.json) format = "json";

    Json options = Json::object();
    for (const CLI::Option* o : chosen->get_options()) {
        if (o->count() == 0) continue;
        std::string key = o->get_name();
        while (!key.empty() && key.front() == '-') key.erase(key.begin());
        if (key == "help" || key == "json" || key == "timestamps") continue;
        const auto& res = o->results();
        options[key] = o->get_type_size() == 0 ? "true" : (res.empty() ? "" : res.back());
    }

    Json rep;
    rep["schema"] = "1";
    rep["command"] = name;
    rep["options"] = options;
    int code = kExitOk;
    Driver driver(opts);
    try {
        Outcome o = (driver.*handler)(f);
        rep["results"] = std::move(o.results);
        rep["status"] = status_of(o);
        code = o.discrepancies.empty() ? kExitOk : kExitMismatch;
        rep["discrepancies"] = std::move(o.discrepancies);
    } catch (const UsageError& e) {
        err << "soliton: " << e.what() << '\n';
        return kExitError;
    } catch (const Error& e) {
        rep["results"] = Json::object();
        rep["discrepancies"] = Json::array();
        rep["status"] = "error";
        rep["error"] = {{"kind", e.kind()}, {"message", e.what()}};
        code = kExitError;
    }
    if (f.timestamps) rep["generated_at"] = utc_now();

    if (format == "json") {
        out << rep.dump(2) << '\n';
    } else {
        render_text(out, rep, 0);
    }
    return code;
}

} // namespace soliton::cli
