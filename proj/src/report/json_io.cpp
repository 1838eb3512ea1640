#include "soliton/report/json_io.hpp"

#include "soliton/errors.hpp"

namespace soliton::report {

Json to_json(const Rat& r) { return r.str(); }

Json to_json(const exactnum::Poly& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(c.str());
    return a;
}

Json to_json(const RatFunc& f, const EvalPoint& at) {
    Json j;
    j["num"] = to_json(f.num());
    j["den"] = to_json(f.den());
    j["expr"] = f.str();
    if (at) {
        j["at"] = at->str();
        j["value"] = f.eval(*at).str();
    }
    return j;
}

Json to_json(const spherepoly::SpherePoly& p) {
    Json a = Json::array();
    for (const auto& [e, c] : p.rep().terms()) a.push_back({{"exponents", e}, {"coeff", c.str()}});
    return a;
}

spherepoly::SpherePoly sphere_poly_from_json(const Json& j, int factors) {
    if (!j.is_array()) throw ParseError("sphere polynomial JSON must be a list of terms");
    spherepoly::RawPoly raw(factors);
    for (const auto& t : j) {
        if (!t.contains("exponents") || !t.contains("coeff"))
            throw ParseError("each term needs 'exponents' and 'coeff'");
        raw.add_term(t.at("exponents").get<std::vector<int>>(), Rat::parse(t.at("coeff").get<std::string>()));
    }
    return raw;
}

Json to_json(const spectra::Spectrum& s) {
    Json j;
    j["operator"] = spectra::to_string(s.op);
    j["cutoff"] = s.cutoff.str();
    Json entries = Json::array();
    for (const auto& e : s.entries) {
        Json x;
        x["value"] = e.value.str();
        x["origins"] = e.origins;
        if (e.multiplicity) x["multiplicity"] = e.multiplicity->get_str();
        entries.push_back(std::move(x));
    }
    j["entries"] = std::move(entries);
    return j;
}

Json to_json(const spectra::KernelReport& k) {
    Json j;
    j["dim_conformal_kernel"] = std::to_string(k.dim_conformal_kernel);
    if (k.dim_tt_kernel)
        j["dim_tt_kernel"] = std::to_string(*k.dim_tt_kernel);
    else
        j["dim_tt_kernel"] = "present";
    j["dim_K1"] = std::to_string(k.dim_K1);
    j["notes"] = k.notes;
    return j;
}

Json to_json(const varengine::AnsatzFn& f, const EvalPoint& at) {
    Json j;
    for (std::size_t i = 0; i < varengine::kAnsatzDim; ++i) j[varengine::basis_names()[i]] = to_json(f[i], at);
    return j;
}

Json to_json(const varengine::SigmaQuad& q, const EvalPoint& at) {
    return Json{{"sigma2^2", to_json(q.c22, at)}, {"sigma4", to_json(q.c4, at)}};
}

Json to_json(const varengine::ObstructionReport& r, const EvalPoint& at) {
    auto roots = [](const std::vector<exactnum::Integer>& v) {
        Json a = Json::array();
        for (const auto& x : v) a.push_back(x.get_str());
        return a;
    };
    Json j;
    j["B"] = std::to_string(r.B);
    j["reference"] = {{"Q4", to_json(r.Q4, at)}, {"Q2", to_json(r.Q2, at)}};
    j["pipeline"] = {{"Q4", to_json(r.pipeline_Q4, at)}, {"Q2", to_json(r.pipeline_Q2, at)}};
    j["verdicts"] = {{"n4_sum_negative", r.verdicts.n4_sum_negative},
                     {"b1_numerator_integer_root_free", r.verdicts.b1_numerator_integer_root_free},
                     {"certified", r.certified()}};
    j["reference_verdicts"] = {{"n4_sum_negative", r.reference_verdicts.n4_sum_negative},
                               {"b1_numerator_integer_root_free", r.reference_verdicts.b1_numerator_integer_root_free}};
    j["pipeline_worst_at_4"] = r.pipeline_worst_at_4.str();
    j["pipeline_b1_numerator"] = to_json(r.pipeline_b1_numerator);
    j["pipeline_b1_integer_roots"] = roots(r.pipeline_b1_roots);
    j["reference_b1_integer_roots"] = roots(r.reference_b1_roots);
    Json d = Json::array();
    for (const auto& x : r.discrepancies)
        d.push_back({{"quantity", x.quantity}, {"reference", to_json(x.reference, at)}, {"pipeline", to_json(x.pipeline, at)}});
    j["discrepancies"] = std::move(d);
    Json f = Json::array();
    for (const auto& x : r.findings) {
        Json vals = Json::array();
        for (const auto& v : x.values) vals.push_back({{"name", v.name}, {"value", to_json(v.value)}});
        f.push_back({{"topic", x.topic}, {"holds", x.holds}, {"statement", x.statement}, {"values", std::move(vals)}});
    }
    j["findings"] = std::move(f);
    return j;
}

Json to_json(const varengine::OracleReport& r) {
    Json j;
    Json alpha = Json::array();
    for (const auto& a : r.alpha) alpha.push_back(a.str());
    j["alpha"] = std::move(alpha);
    j["n"] = r.n.str();
    j["degenerate"] = r.degenerate;
    if (!r.notice.empty()) j["notice"] = r.notice;
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json x{{"name", c.name}, {"passed", c.passed}};
        if (!c.detail.empty()) x["detail"] = c.detail;
        checks.push_back(std::move(x));
    }
    j["checks"] = std::move(checks);
    j["observations"] = r.observations;
    j["failed"] = std::to_string(r.failed());
    return j;
}

} // namespace soliton::report
