#include "calib/bernstein.hpp"

namespace calib {

std::string to_string(Basis b) { return b == Basis::scaled ? "scaled" : "binomial"; }

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::positive: return "positive";
        case Verdict::nonnegative: return "nonnegative";
        default: return "inconclusive";
    }
}

Basis parse_basis(const std::string& s) {
    if (s == "scaled") return Basis::scaled;
    if (s == "binomial") return Basis::binomial;
    throw Error("unknown basis '" + s + "'");
}

QuadExt BernCert::min_coeff() const {
    QuadExt m = coeffs.front();
    for (const auto& c : coeffs)
        if (c < m) m = c;
    return m;
}

int BernCert::last_negative() const {
    for (std::size_t k = coeffs.size(); k-- > 0;)
        if (coeffs[k].sign() < 0) return static_cast<int>(k);
    return -1;
}

Verdict classify_coeffs(const std::vector<QuadExt>& c) {
    for (const auto& x : c)
        if (x.sign() < 0) return Verdict::inconclusive;
    if (c.front().sign() > 0 && c.back().sign() > 0) return Verdict::positive;
    return Verdict::nonnegative;
}

std::string main_variable(const MPoly& p) {
    auto s = p.support();
    if (s.size() > 1) throw Error("expected a univariate polynomial: " + p.str());
    return s.empty() ? "t" : s[0];
}

namespace {

// Binomial-basis coefficients from power coefficients of p in t.
template <class K>
std::vector<K> to_binomial(std::vector<K> pc, const QuadExt& a, const QuadExt& h, unsigned m) {
    std::size_t n = pc.size();
    if (n > m + 1) throw Error("polynomial degree exceeds the Bernstein degree");
    // p(a + h u): Taylor shift at a, then scale
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t k = n - 1; k > i; --k) pc[k - 1] = pc[k - 1] + pc[k] * K(a);
    QuadExt hp(1);
    for (std::size_t i = 0; i < n; ++i) {
        pc[i] = pc[i] * K(hp);
        hp *= h;
    }
    std::vector<K> c(m + 1, K(0));
    for (unsigned k = 0; k <= m; ++k)
        for (unsigned i = 0; i <= k && i < n; ++i)
            c[k] = c[k] + pc[i] * K(QuadExt(binomial(k, i) / binomial(m, i)));
    return c;
}

template <class K>
std::vector<K> rescale(const std::vector<K>& c, const QuadExt& h, bool to_scaled) {
    unsigned m = static_cast<unsigned>(c.size() - 1);
    QuadExt hm = h.pow(static_cast<int>(m));
    std::vector<K> out;
    for (unsigned k = 0; k <= m; ++k) {
        QuadExt f = to_scaled ? QuadExt(binomial(m, k)) / hm : hm / QuadExt(binomial(m, k));
        out.push_back(c[k] * K(f));
    }
    return out;
}

void check_interval(const QuadExt& a, const QuadExt& b) {
    if (!(a < b)) throw Error("Bernstein interval needs a < b, got [" + a.str() + ", " + b.str() + "]");
}

}  // namespace

BernCert bern_expand(const MPoly& p, const QuadExt& a, const QuadExt& b, unsigned m, Basis basis) {
    check_interval(a, b);
    BernCert c;
    c.var = main_variable(p);
    c.a = a;
    c.b = b;
    c.m = m;
    c.basis = basis;
    std::vector<QuadExt> pc;
    for (const auto& k : p.coeffs_in(c.var)) pc.push_back(k.constant_value());
    if (pc.empty()) pc.push_back(QuadExt(0));
    QuadExt h = b - a;
    c.coeffs = to_binomial<QuadExt>(pc, a, h, m);
    if (basis == Basis::scaled) c.coeffs = rescale(c.coeffs, h, true);
    c.verdict = classify_coeffs(c.coeffs);
    return c;
}

MPoly bern_reexpand(const BernCert& c) {
    MPoly t = MPoly::var(c.var);
    MPoly left = MPoly(c.b) - t, right = t - MPoly(c.a);
    std::vector<QuadExt> d = c.basis == Basis::scaled ? c.coeffs : rescale(c.coeffs, c.b - c.a, true);
    MPoly out;
    for (unsigned k = 0; k <= c.m; ++k) out += MPoly(d[k]) * left.pow(c.m - k) * right.pow(k);
    return out;
}

BernCert convert_basis(const BernCert& c, Basis to) {
    if (c.basis == to) return c;
    BernCert r = c;
    r.basis = to;
    r.coeffs = rescale(c.coeffs, c.b - c.a, to == Basis::scaled);
    return r;
}

BernCert elevate(const BernCert& c) {
    BernCert bin = convert_basis(c, Basis::binomial);
    unsigned m = c.m;
    std::vector<QuadExt> e(m + 2, QuadExt(0));
    for (unsigned k = 0; k <= m + 1; ++k) {
        Rat w(static_cast<long>(k), static_cast<long>(m + 1));
        if (k > 0) e[k] += bin.coeffs[k - 1] * QuadExt(w);
        if (k <= m) e[k] += bin.coeffs[k] * QuadExt(Rat(1) - w);
    }
    bin.coeffs = std::move(e);
    bin.m = m + 1;
    BernCert r = convert_basis(bin, c.basis);
    r.verdict = classify_coeffs(r.coeffs);
    return r;
}

CertifyResult bern_certify(const MPoly& p, const QuadExt& a, const QuadExt& b, unsigned max_m, Basis basis) {
    std::string v = main_variable(p);
    unsigned m = p.degree(v);
    CertifyResult r;
    r.cert = bern_expand(p, a, b, m, basis);
    for (;;) {
        if (r.cert.verdict != Verdict::inconclusive) {
            r.certified = true;
            return r;
        }
        if (r.cert.m >= max_m) break;
        r.cert = elevate(r.cert);
    }
    r.last_negative = r.cert.last_negative();
    return r;
}

std::vector<MPoly> bern_expand_parametric(const MPoly& p, const std::string& var, const Rat& a, const Rat& b,
                                          unsigned m, Basis basis) {
    check_interval(QuadExt(a), QuadExt(b));
    auto pc = p.coeffs_in(var);
    if (pc.empty()) pc.push_back(MPoly(0));
    QuadExt h(b - a);
    auto c = to_binomial<MPoly>(pc, QuadExt(a), h, m);
    if (basis == Basis::scaled) c = rescale(c, h, true);
    return c;
}

MPoly bern_reexpand_parametric(const std::vector<MPoly>& coeffs, const std::string& var, const Rat& a,
                               const Rat& b, Basis basis) {
    unsigned m = static_cast<unsigned>(coeffs.size() - 1);
    QuadExt h(b - a);
    auto d = basis == Basis::scaled ? coeffs : rescale(coeffs, h, true);
    MPoly t = MPoly::var(var);
    MPoly left = MPoly(b) - t, right = t - MPoly(a);
    MPoly out;
    for (unsigned k = 0; k <= m; ++k) out += d[k] * left.pow(m - k) * right.pow(k);
    return out;
}

}  // namespace calib
