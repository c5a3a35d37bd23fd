#pragma once

#include "calib/mpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace calib {

// Dense univariate polynomial over Q, coefficients low to high.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rat> c);
    // p must be univariate (or constant) with rational coefficients.
    static UPoly from_mpoly(const MPoly& p);
    MPoly to_mpoly(const std::string& var) const;

    const std::vector<Rat>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const Rat& lead() const { return c_.back(); }

    Rat eval(const Rat& x) const;
    double eval_double(double x) const;
    UPoly derivative() const;
    UPoly shift(const Rat& h) const;  // p(x + h)
    UPoly monic() const;

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
    UPoly operator-() const;

    static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);

private:
    void trim();
    std::vector<Rat> c_;
};

UPoly gcd(UPoly a, UPoly b);
UPoly squarefree_part(const UPoly& p);

struct RootInterval {
    Rat lo;
    Rat hi;
};

std::vector<UPoly> sturm_sequence(const UPoly& p);
// Number of distinct real roots in (a, b]; a < b.
int sturm_count(const std::vector<UPoly>& seq, const Rat& a, const Rat& b);
// Disjoint open intervals, ascending, each with exactly one root of the
// squarefree part of p; endpoints are never roots. A positive max_width
// refines every interval by bisection.
std::vector<RootInterval> sturm_isolate(const UPoly& p, const Rat& max_width = Rat(0));
// Cauchy bound: every real root lies in (-B, B).
Rat root_bound(const UPoly& p);

// Real algebraic number: the unique root of `poly` (squarefree) in (lo, hi).
class AlgNum {
public:
    AlgNum(const UPoly& poly, const Rat& lo, const Rat& hi);
    const UPoly& poly() const { return poly_; }
    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    void refine(const Rat& width);
    void bisect();
    Rat midpoint() const { return (lo_ + hi_) / Rat(2); }
    double approx() const { return midpoint().to_double(); }

private:
    UPoly poly_;
    Rat lo_, hi_;
};

std::vector<AlgNum> real_roots(const UPoly& p, const Rat& max_width = Rat(0));

// Sign of q(alpha + shift). Gives 0 when q(x+shift) shares the root with the
// defining polynomial; otherwise bisects until an interval bound of q decides.
int sign_at_algebraic(const UPoly& q, AlgNum alpha, const Rat& shift, int max_bisections = 256);

// Enclosure of q over [lo, hi] by interval Horner evaluation.
std::pair<Rat, Rat> interval_eval(const UPoly& q, const Rat& lo, const Rat& hi);

// Discriminant with the convention
// disc = (-1)^{n(n-1)/2} Res(p, p') / lead(p).
Rat discriminant(const UPoly& p);

}  // namespace calib
