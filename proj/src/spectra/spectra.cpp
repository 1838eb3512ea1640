#include "soliton/spectra/spectra.hpp"

#include "soliton/errors.hpp"

#include <map>

namespace soliton::spectra {

namespace {

// Which kind of symmetric 2-tensor (or other section) an eigenvalue comes from.
// Only Tt and OneFormPair may hide transverse-traceless kernel elements.
enum class Sector { Function, OneForm, Conformal, Lie, Tt, OneFormPair };

struct Item {
    Rat value;
    std::string origin;
    Sector sector;
    std::optional<Integer> multiplicity;
};

void require_dim(long n) {
    if (n < 2) throw DomainError("sphere dimension must be at least 2, got " + std::to_string(n));
}

std::string tag(Family f, long k, int shift) {
    std::string s = to_string(f) + "[k=" + std::to_string(k) + "]";
    if (shift) s += std::to_string(shift);
    return s;
}

// Appends the family f shifted by `shift`, for k >= floor, while value <= bound.
void append_family(std::vector<Item>& out, Family f, long kmin, int shift, long n, const Rat& bound,
                   Sector sector, bool with_multiplicity) {
    for (long k = kmin;; ++k) {
        const Rat v = sphere_eigenvalue(f, k, n) + Rat(shift);
        if (v > bound) break;
        std::optional<Integer> mult;
        if (with_multiplicity) mult = function_multiplicity(k, n);
        out.push_back({v, tag(f, k, shift), sector, mult});
    }
}

std::vector<Item> sphere_items(Operator op, long n, const Rat& bound) {
    require_dim(n);
    std::vector<Item> out;
    switch (op) {
    case Operator::Functions:
        append_family(out, Family::Lambda0, 0, 0, n, bound, Sector::Function, true);
        break;
    case Operator::OneForms:
        append_family(out, Family::Lambda0, 1, -1, n, bound, Sector::OneForm, false);
        append_family(out, Family::Lambda1, 1, -1, n, bound, Sector::OneForm, false);
        break;
    case Operator::Einstein:
        append_family(out, Family::Lambda0, 0, -2, n, bound, Sector::Conformal, false);
        append_family(out, Family::Lambda1, 2, -2, n, bound, Sector::Lie, false);
        append_family(out, Family::Lambda2, 2, -2, n, bound, Sector::Tt, false);
        break;
    }
    return out;
}

Rat spectrum_min(Operator op, long n) {
    switch (op) {
    case Operator::Functions: return Rat(0);
    case Operator::OneForms: {
        const Rat a = sphere_eigenvalue(Family::Lambda0, 1, n) - Rat(1);
        const Rat b = sphere_eigenvalue(Family::Lambda1, 1, n) - Rat(1);
        return a < b ? a : b;
    }
    case Operator::Einstein: return sphere_eigenvalue(Family::Lambda0, 0, n) - Rat(2);
    }
    return Rat(0);
}

std::string op_symbol(Operator op) {
    switch (op) {
    case Operator::Functions: return "D0";
    case Operator::OneForms: return "D1";
    case Operator::Einstein: return "E";
    }
    return "?";
}

// All sums a + b <= cutoff with a from (opl on S^m, labelled `ml`) and b from (opr on S^n).
void append_sums(std::vector<Item>& out, Operator opl, long m, const std::string& ml, Operator opr,
                 long n, const std::string& nl, const Rat& cutoff, bool with_multiplicity) {
    const auto left = sphere_items(opl, m, cutoff - spectrum_min(opr, n));
    const auto right = sphere_items(opr, n, cutoff - spectrum_min(opl, m));
    for (const auto& a : left)
        for (const auto& b : right) {
            const Rat v = a.value + b.value;
            if (v > cutoff) continue;
            Sector s = a.sector;
            if (opl == Operator::OneForms) s = Sector::OneFormPair;
            std::optional<Integer> mult;
            if (with_multiplicity) mult = *a.multiplicity * *b.multiplicity;
            out.push_back({v, op_symbol(opl) + "^" + ml + " " + a.origin + " + " + op_symbol(opr) + "^" + nl + " " + b.origin,
                           s, mult});
        }
}

Spectrum merge(Operator op, const Rat& cutoff, const std::vector<Item>& items) {
    std::map<Rat, SpectrumEntry> by_value;
    for (const auto& it : items) {
        auto [pos, inserted] = by_value.try_emplace(it.value);
        SpectrumEntry& e = pos->second;
        if (inserted) {
            e.value = it.value;
            e.op = op;
            e.multiplicity = it.multiplicity;
        } else if (e.multiplicity && it.multiplicity) {
            *e.multiplicity += *it.multiplicity;
        }
        e.origins.push_back(it.origin);
    }
    Spectrum s{op, cutoff, {}};
    for (auto& [v, e] : by_value) s.entries.push_back(std::move(e));
    return s;
}

std::vector<Item> einstein_items(long m, long n, const Rat& cutoff) {
    std::vector<Item> items;
    append_sums(items, Operator::Einstein, m, "M", Operator::Functions, n, "N", cutoff, false);
    append_sums(items, Operator::Einstein, n, "N", Operator::Functions, m, "M", cutoff, false);
    append_sums(items, Operator::OneForms, m, "M", Operator::OneForms, n, "N", cutoff, false);
    return items;
}

Integer binomial(long top, long bottom) {
    if (bottom < 0 || top < bottom) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
    return r;
}

long eigenvalue_two_multiplicity(long m, long n) {
    const Spectrum s = product_function_spectrum(m, n, Rat(2));
    for (const auto& e : s.entries)
        if (e.value == Rat(2)) return e.multiplicity ? e.multiplicity->get_si() : 0;
    return 0;
}

} // namespace

std::string to_string(Family f) {
    switch (f) {
    case Family::Lambda0: return "lambda0";
    case Family::Lambda1: return "lambda1";
    case Family::Lambda2: return "lambda2";
    }
    return "?";
}

std::string to_string(Operator op) {
    switch (op) {
    case Operator::Functions: return "functions";
    case Operator::OneForms: return "one-forms";
    case Operator::Einstein: return "einstein";
    }
    return "?";
}

Operator operator_from_string(const std::string& s) {
    if (s == "functions") return Operator::Functions;
    if (s == "one-forms") return Operator::OneForms;
    if (s == "einstein") return Operator::Einstein;
    throw UsageError("unknown operator '" + s + "' (expected functions, one-forms or einstein)");
}

long family_floor(Family f) {
    switch (f) {
    case Family::Lambda0: return 0;
    case Family::Lambda1: return 1;
    case Family::Lambda2: return 2;
    }
    return 0;
}

Rat sphere_eigenvalue(Family f, long k, long n) {
    require_dim(n);
    if (k < family_floor(f))
        throw DomainError(to_string(f) + " is defined for k >= " + std::to_string(family_floor(f)) +
                          ", got k = " + std::to_string(k));
    const Rat base = Rat(k) * Rat(k + n - 1);
    const Rat shift = f == Family::Lambda0 ? Rat(0) : (f == Family::Lambda1 ? Rat(n - 2) : Rat(2 * (n - 1)));
    return (base + shift) / Rat(n - 1);
}

RatFunc sphere_eigenvalue_symbolic(Family f, long k) {
    if (k < family_floor(f))
        throw DomainError(to_string(f) + " is defined for k >= " + std::to_string(family_floor(f)) +
                          ", got k = " + std::to_string(k));
    const RatFunc n = RatFunc::n();
    const RatFunc base = RatFunc(k) * (RatFunc(k - 1) + n);
    const RatFunc shift = f == Family::Lambda0 ? RatFunc(0)
                          : f == Family::Lambda1 ? n - RatFunc(2)
                                                 : RatFunc(2) * (n - RatFunc(1));
    return (base + shift) / (n - RatFunc(1));
}

Integer function_multiplicity(long k, long n) {
    require_dim(n);
    if (k < 0) throw DomainError("harmonic degree must be non-negative");
    return binomial(k + n, n) - binomial(k + n - 2, n);
}

Spectrum sphere_spectrum(Operator op, long n, const Rat& cutoff) {
    return merge(op, cutoff, sphere_items(op, n, cutoff));
}

Spectrum product_function_spectrum(long m, long n, const Rat& cutoff) {
    std::vector<Item> items;
    append_sums(items, Operator::Functions, m, "M", Operator::Functions, n, "N", cutoff, true);
    return merge(Operator::Functions, cutoff, items);
}

Spectrum product_oneform_sum(long m, long n, const Rat& cutoff) {
    std::vector<Item> items;
    append_sums(items, Operator::OneForms, m, "M", Operator::OneForms, n, "N", cutoff, false);
    return merge(Operator::OneForms, cutoff, items);
}

Spectrum product_einstein_spectrum(long m, long n, const Rat& cutoff) {
    return merge(Operator::Einstein, cutoff, einstein_items(m, n, cutoff));
}

KernelReport kernel_dims(const ManifoldDescriptor& d) {
    KernelReport r;
    if (d.kind == ManifoldKind::S2xN) {
        if (!d.asserted_dagger)
            throw AssumptionNotAsserted(
                "S^2 x N requires the asserted condition on N: lambda_1(D0^N) > 2 and trivial TT kernel");
        if (d.lambda1_lower_bound && *d.lambda1_lower_bound <= Rat(2))
            throw AssumptionNotAsserted("asserted lambda_1(D0^N) lower bound " + d.lambda1_lower_bound->str() +
                                        " does not exceed 2");
        // Functions on N have eigenvalue 0 or > 2, so only N-constant S^2 modes reach 2.
        r.dim_conformal_kernel = function_multiplicity(1, 2).get_si();
        r.notes.push_back("conformal kernel: degree-1 harmonics on the S^2 factor, constant on N");
        if (spectrum_min(Operator::OneForms, 2) <= Rat(0))
            throw std::logic_error("one-form spectrum of S^2 is expected to be positive");
        r.dim_tt_kernel = 0;
        r.notes.push_back(
            "TT kernel: zero modes are conformal or Lie-derivative type once N's TT kernel is trivial");
        r.dim_K1 = r.dim_conformal_kernel;
        return r;
    }

    long m = 2;
    long n = 2;
    if (d.kind == ManifoldKind::SmxSn) {
        if (d.m < 3 || d.n < 3)
            throw DomainError("S^m x S^n kernel path needs m, n >= 3 (use s2xs2 for two 2-spheres)");
        m = d.m;
        n = d.n;
    }
    r.dim_conformal_kernel = eigenvalue_two_multiplicity(m, n);
    r.notes.push_back("conformal kernel: multiplicity of eigenvalue 2 in the assembled function spectrum (derived)");

    bool undecided = false;
    for (const auto& it : einstein_items(m, n, Rat(0))) {
        if (it.value != Rat(0)) continue;
        if (it.sector == Sector::Tt || it.sector == Sector::OneFormPair) undecided = true;
    }
    if (undecided) {
        r.notes.push_back("TT kernel: a zero mode with TT-capable origin exists; not counted");
    } else {
        r.dim_tt_kernel = 0;
        r.notes.push_back("TT kernel: every Einstein zero mode is conformal or Lie-derivative type");
    }
    r.dim_K1 = r.dim_conformal_kernel;
    return r;
}

} // namespace soliton::spectra
