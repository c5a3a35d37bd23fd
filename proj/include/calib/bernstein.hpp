#pragma once

#include "calib/mpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace calib {

// scaled:   p(t) = sum_k d_k (b - t)^(m-k) (t - a)^k
// binomial: p(t) = sum_k c_k C(m,k) u^k (1 - u)^(m-k),  u = (t - a)/(b - a)
enum class Basis { scaled, binomial };
enum class Verdict { positive, nonnegative, inconclusive };

std::string to_string(Basis b);
std::string to_string(Verdict v);
Basis parse_basis(const std::string& s);

struct BernCert {
    std::string var;
    QuadExt a, b;
    unsigned m = 0;
    Basis basis = Basis::scaled;
    std::vector<QuadExt> coeffs;
    Verdict verdict = Verdict::inconclusive;

    QuadExt min_coeff() const;
    // Index of the last negative coefficient, or -1.
    int last_negative() const;
};

Verdict classify_coeffs(const std::vector<QuadExt>& coeffs);

BernCert bern_expand(const MPoly& p, const QuadExt& a, const QuadExt& b, unsigned m,
                     Basis basis = Basis::scaled);

// Rebuilds the polynomial from a certificate.
MPoly bern_reexpand(const BernCert& c);

BernCert convert_basis(const BernCert& c, Basis to);
// Degree m -> m + 1 without changing the represented polynomial.
BernCert elevate(const BernCert& c);

struct CertifyResult {
    bool certified = false;
    BernCert cert;            // at the certifying degree, or at max_m on failure
    int last_negative = -1;   // on failure
};

// Smallest m in [deg p, max_m] whose verdict is not inconclusive.
CertifyResult bern_certify(const MPoly& p, const QuadExt& a, const QuadExt& b, unsigned max_m = 64,
                           Basis basis = Basis::scaled);

// Expansion in `var` with coefficients polynomial in the other variables.
std::vector<MPoly> bern_expand_parametric(const MPoly& p, const std::string& var, const Rat& a,
                                          const Rat& b, unsigned m, Basis basis = Basis::scaled);
MPoly bern_reexpand_parametric(const std::vector<MPoly>& coeffs, const std::string& var, const Rat& a,
                               const Rat& b, Basis basis);

// The single variable of a univariate polynomial ("t" for constants).
std::string main_variable(const MPoly& p);

}  // namespace calib
