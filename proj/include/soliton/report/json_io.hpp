#ifndef SOLITON_REPORT_JSON_IO_HPP
#define SOLITON_REPORT_JSON_IO_HPP

#include "soliton/spectra/spectra.hpp"
#include "soliton/spherepoly/sphere_poly.hpp"
#include "soliton/varengine/obstruction.hpp"
#include "soliton/varengine/oracle.hpp"

#include <json.hpp>

#include <optional>

namespace soliton::report {

using Json = nlohmann::ordered_json;
using exactnum::Rat;
using exactnum::RatFunc;

/// Optional evaluation point for n; when set, every Q(n) value also carries
/// its reduced "p/q" value there.
using EvalPoint = std::optional<Rat>;

Json to_json(const Rat& r);
Json to_json(const exactnum::Poly& p);
Json to_json(const RatFunc& f, const EvalPoint& at = std::nullopt);
Json to_json(const spherepoly::SpherePoly& p);
Json to_json(const spectra::Spectrum& s);
Json to_json(const spectra::KernelReport& k);
Json to_json(const varengine::AnsatzFn& f, const EvalPoint& at = std::nullopt);
Json to_json(const varengine::SigmaQuad& q, const EvalPoint& at = std::nullopt);
Json to_json(const varengine::ObstructionReport& r, const EvalPoint& at = std::nullopt);
Json to_json(const varengine::OracleReport& r);

/// Reads back a polynomial from its JSON list of {exponents, coeff} terms.
spherepoly::SpherePoly sphere_poly_from_json(const Json& j, int factors);

} // namespace soliton::report

#endif
