#ifndef SOLITON_SPECTRA_SPECTRA_HPP
#define SOLITON_SPECTRA_SPECTRA_HPP

#include "soliton/exactnum/rat.hpp"
#include "soliton/exactnum/ratfunc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace soliton::spectra {

using exactnum::Integer;
using exactnum::Rat;
using exactnum::RatFunc;

/// The three eigenvalue families of the round 1-Einstein sphere S^n:
///   lambda0 = k(k+n-1)/(n-1)            (k >= 0)
///   lambda1 = (k(k+n-1) + n-2)/(n-1)    (k >= 1)
///   lambda2 = (k(k+n-1) + 2(n-1))/(n-1) (k >= 2)
enum class Family { Lambda0, Lambda1, Lambda2 };

enum class Operator { Functions, OneForms, Einstein };

std::string to_string(Family f);
std::string to_string(Operator op);
Operator operator_from_string(const std::string& s);

/// Lowest admissible k for a family.
long family_floor(Family f);

/// Throws DomainError for n < 2 or k below the family floor.
Rat sphere_eigenvalue(Family f, long k, long n);
/// The same eigenvalue with the sphere dimension left as the symbol n.
RatFunc sphere_eigenvalue_symbolic(Family f, long k);

/// Dimension of degree-k spherical harmonics on S^n: C(k+n, n) - C(k+n-2, n).
Integer function_multiplicity(long k, long n);

struct SpectrumEntry {
    Rat value;
    Operator op = Operator::Functions;
    std::vector<std::string> origins;
    /// Counted for function spectra only; other bundles report presence.
    std::optional<Integer> multiplicity;
};

struct Spectrum {
    Operator op = Operator::Functions;
    Rat cutoff;
    std::vector<SpectrumEntry> entries; ///< ascending by value, one entry per distinct value
};

/// Spectrum of the given operator on S^n up to and including `cutoff`.
Spectrum sphere_spectrum(Operator op, long n, const Rat& cutoff);

/// Additive assembly of the function Laplacian on S^m x S^n.
Spectrum product_function_spectrum(long m, long n, const Rat& cutoff);

/// Pairwise sums of the one-form Laplacian eigenvalues D1^M + D1^N.
Spectrum product_oneform_sum(long m, long n, const Rat& cutoff);

/// Einstein operator of S^m x S^n as the union of the pairwise eigenvalue sums
/// E^M + D0^N, E^N + D0^M and D1^M + D1^N.
Spectrum product_einstein_spectrum(long m, long n, const Rat& cutoff);

enum class ManifoldKind { S2xS2, SmxSn, S2xN };

struct ManifoldDescriptor {
    ManifoldKind kind = ManifoldKind::S2xS2;
    long m = 2;
    long n = 2;
    /// Only meaningful for S2xN: the user asserts lambda_1(D0^N) > 2 and a
    /// trivial TT kernel of the Lichnerowicz operator on N.
    bool asserted_dagger = false;
    std::optional<Rat> lambda1_lower_bound;
};

struct KernelReport {
    long dim_conformal_kernel = 0;
    /// Empty when a zero mode exists whose TT status the combination rules
    /// cannot settle; never happens for the supported manifold classes.
    std::optional<long> dim_tt_kernel;
    long dim_K1 = 0;
    /// Human-readable reasons behind each number.
    std::vector<std::string> notes;
};

/// Throws AssumptionNotAsserted for S2xN without the asserted condition, and
/// DomainError when an SmxSn descriptor has a factor of dimension below 3.
KernelReport kernel_dims(const ManifoldDescriptor& m);

} // namespace soliton::spectra

#endif
