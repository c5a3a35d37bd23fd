#pragma once

#include "calib/quadext.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace calib {

using Monomial = std::vector<std::uint32_t>;

// Graded-lex with the first registry variable most significant; the map keeps
// the leading term first.
struct GrlexGreater {
    bool operator()(const Monomial& x, const Monomial& y) const;
};

// Sparse multivariate polynomial over Q(sqrt d). The variable registry is kept
// sorted by name so that the printed form does not depend on construction order.
class MPoly {
public:
    using TermMap = std::map<Monomial, QuadExt, GrlexGreater>;

    MPoly() = default;
    MPoly(int c) : MPoly(QuadExt(c)) {}
    MPoly(const Rat& c) : MPoly(QuadExt(c)) {}
    MPoly(const QuadExt& c);

    static MPoly var(const std::string& name);
    static MPoly monomial(const QuadExt& c, const std::vector<std::pair<std::string, unsigned>>& powers);
    // Grammar: sums/products of numbers, sqrt(d), identifiers, '^' with integer
    // exponents, parentheses; division only by constants.
    static MPoly parse(const std::string& text);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    QuadExt constant_value() const;  // error unless constant
    QuadExt constant_term() const;
    bool has_var(const std::string& v) const;
    int var_index(const std::string& v) const;  // -1 when absent

    unsigned degree(const std::string& v) const;
    unsigned total_degree() const;
    // Names of variables that actually occur.
    std::vector<std::string> support() const;

    // Coefficient of v^k, as a polynomial in the remaining variables.
    MPoly coeff(const std::string& v, unsigned k) const;
    std::vector<MPoly> coeffs_in(const std::string& v) const;
    MPoly derivative(const std::string& v) const;

    MPoly substitute(const std::string& v, const MPoly& r) const;
    MPoly substitute(const std::map<std::string, MPoly>& subs) const;
    MPoly rename(const std::string& from, const std::string& to) const;

    QuadExt eval(const std::map<std::string, QuadExt>& at) const;
    double eval_double(const std::map<std::string, double>& at) const;

    // Exact quotient; throws if the divisor does not divide.
    MPoly exact_div(const MPoly& divisor) const;
    MPoly scale(const QuadExt& c) const;
    MPoly pow(unsigned e) const;

    std::string str() const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend bool operator==(const MPoly& a, const MPoly& b);

    // Expands the registry to `vars` (a sorted superset).
    MPoly with_vars(const std::vector<std::string>& vars) const;

private:
    void add_term(const Monomial& m, const QuadExt& c);
    std::vector<std::string> vars_;
    TermMap terms_;
};

MPoly pow(const MPoly& p, int e);

// p/q compared by cross multiplication, never reduced.
class RatFunc {
public:
    RatFunc() : num_(0), den_(1) {}
    RatFunc(const MPoly& n) : num_(n), den_(1) {}
    RatFunc(const MPoly& n, const MPoly& d);

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }

    RatFunc operator-() const { return RatFunc(-num_, den_); }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend bool operator==(const RatFunc& a, const RatFunc& b);

private:
    MPoly num_;
    MPoly den_;
};

// Replaces v by r; the result's denominator is den(r)^deg_v(p).
RatFunc substitute(const MPoly& p, const std::string& v, const RatFunc& r);
RatFunc substitute(const RatFunc& p, const std::string& v, const RatFunc& r);

}  // namespace calib
