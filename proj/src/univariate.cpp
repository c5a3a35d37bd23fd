#include "calib/univariate.hpp"

#include <algorithm>
#include <cmath>

namespace calib {

UPoly::UPoly(std::vector<Rat> c) : c_(std::move(c)) { trim(); }

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::from_mpoly(const MPoly& p) {
    auto sup = p.support();
    if (sup.size() > 1) throw Error("polynomial is not univariate: " + p.str());
    std::vector<Rat> c;
    if (sup.empty()) {
        QuadExt k = p.constant_term();
        if (!k.is_rational()) throw Error("univariate polynomial needs rational coefficients");
        return UPoly({k.a()});
    }
    for (const auto& m : p.coeffs_in(sup[0])) {
        QuadExt k = m.constant_value();
        if (!k.is_rational()) throw Error("univariate polynomial needs rational coefficients");
        c.push_back(k.a());
    }
    return UPoly(std::move(c));
}

MPoly UPoly::to_mpoly(const std::string& var) const {
    MPoly x = MPoly::var(var), r;
    for (std::size_t k = c_.size(); k-- > 0;) r = r * x + MPoly(c_[k]);
    return r;
}

Rat UPoly::eval(const Rat& x) const {
    Rat s(0);
    for (std::size_t k = c_.size(); k-- > 0;) s = s * x + c_[k];
    return s;
}

double UPoly::eval_double(double x) const {
    double s = 0;
    for (std::size_t k = c_.size(); k-- > 0;) s = s * x + c_[k].to_double();
    return s;
}

UPoly UPoly::derivative() const {
    std::vector<Rat> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Rat(static_cast<long>(k)));
    return UPoly(std::move(d));
}

UPoly UPoly::shift(const Rat& h) const {
    // repeated synthetic division (Taylor shift)
    std::vector<Rat> a = c_;
    std::size_t n = a.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t k = n - 1; k > i; --k) a[k - 1] += h * a[k];
    return UPoly(std::move(a));
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    std::vector<Rat> c = c_;
    Rat l = lead();
    for (auto& v : c) v /= l;
    return UPoly(std::move(c));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UPoly(std::move(c));
}

UPoly UPoly::operator-() const {
    std::vector<Rat> c = c_;
    for (auto& v : c) v = -v;
    return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(c));
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    std::vector<Rat> rem = a.c_;
    int db = b.degree();
    std::vector<Rat> quo(std::max(0, a.degree() - db + 1), Rat(0));
    for (int k = a.degree(); k >= db; --k) {
        Rat f = rem[static_cast<std::size_t>(k)] / b.lead();
        quo[static_cast<std::size_t>(k - db)] = f;
        if (f.is_zero()) continue;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= f * b.c_[static_cast<std::size_t>(j)];
    }
    q = UPoly(std::move(quo));
    rem.resize(static_cast<std::size_t>(std::max(0, db)));
    r = UPoly(std::move(rem));
}

UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly q, r;
        UPoly::divmod(a, b, q, r);
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

UPoly squarefree_part(const UPoly& p) {
    if (p.degree() <= 0) return p;
    UPoly g = gcd(p, p.derivative());
    UPoly q, r;
    UPoly::divmod(p, g, q, r);
    return q;
}

std::vector<UPoly> sturm_sequence(const UPoly& p) {
    std::vector<UPoly> seq{p, p.derivative()};
    while (!seq.back().is_zero() && seq.back().degree() > 0) {
        UPoly q, r;
        UPoly::divmod(seq[seq.size() - 2], seq.back(), q, r);
        if (r.is_zero()) break;
        // positive rescaling keeps sign variations unchanged
        Rat l = r.lead().abs();
        std::vector<Rat> c = r.coeffs();
        for (auto& v : c) v /= l;
        seq.push_back(-UPoly(std::move(c)));
    }
    return seq;
}

namespace {

int variations(const std::vector<UPoly>& seq, const Rat& x) {
    int v = 0, last = 0;
    for (const auto& p : seq) {
        int s = p.eval(x).sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

}  // namespace

int sturm_count(const std::vector<UPoly>& seq, const Rat& a, const Rat& b) {
    return variations(seq, a) - variations(seq, b);
}

Rat root_bound(const UPoly& p) {
    if (p.degree() < 1) return Rat(1);
    Rat m(0);
    for (int k = 0; k < p.degree(); ++k) m = std::max(m, (p.coeffs()[static_cast<std::size_t>(k)] / p.lead()).abs());
    return Rat(1) + m;
}

std::vector<RootInterval> sturm_isolate(const UPoly& input, const Rat& max_width) {
    if (input.is_zero()) throw Error("root isolation of the zero polynomial");
    UPoly p = squarefree_part(input);
    std::vector<RootInterval> out;
    if (p.degree() < 1) return out;
    auto seq = sturm_sequence(p);
    Rat bnd = root_bound(p);
    // choose split points that are not roots
    auto split = [&](const Rat& lo, const Rat& hi) {
        for (long k = 2;; ++k) {
            Rat m = lo + (hi - lo) / Rat(k);
            if (!p.eval(m).is_zero()) return m;
        }
    };
    std::vector<RootInterval> work{{-bnd, bnd}};
    while (!work.empty()) {
        RootInterval iv = work.back();
        work.pop_back();
        int n = sturm_count(seq, iv.lo, iv.hi);
        if (n == 0) continue;
        if (n == 1) {
            out.push_back(iv);
            continue;
        }
        Rat m = split(iv.lo, iv.hi);
        work.push_back({m, iv.hi});
        work.push_back({iv.lo, m});
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.lo < y.lo; });
    if (max_width.sign() > 0)
        for (auto& iv : out) {
            AlgNum a(p, iv.lo, iv.hi);
            a.refine(max_width);
            iv = {a.lo(), a.hi()};
        }
    return out;
}

AlgNum::AlgNum(const UPoly& poly, const Rat& lo, const Rat& hi) : poly_(squarefree_part(poly)), lo_(lo), hi_(hi) {
    if (!(lo < hi)) throw Error("isolating interval must have lo < hi");
    if (poly_.eval(lo).is_zero() || poly_.eval(hi).is_zero())
        throw Error("isolating interval endpoint is a root");
    if (sturm_count(sturm_sequence(poly_), lo, hi) != 1)
        throw Error("interval does not isolate exactly one root");
}

void AlgNum::bisect() {
    Rat m = midpoint();
    int sm = poly_.eval(m).sign();
    if (sm == 0) {
        // nudge off an exact rational root; keep the root strictly inside
        Rat q = (hi_ - lo_) / Rat(4);
        lo_ = m - q;
        hi_ = m + q;
        return;
    }
    int sl = poly_.eval(lo_).sign();
    if (sl != sm) hi_ = m;
    else lo_ = m;
}

void AlgNum::refine(const Rat& width) {
    while (hi_ - lo_ > width) bisect();
}

std::vector<AlgNum> real_roots(const UPoly& p, const Rat& max_width) {
    std::vector<AlgNum> out;
    for (const auto& iv : sturm_isolate(p, max_width)) out.emplace_back(p, iv.lo, iv.hi);
    return out;
}

std::pair<Rat, Rat> interval_eval(const UPoly& q, const Rat& lo, const Rat& hi) {
    Rat l(0), h(0);
    const auto& c = q.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        Rat p1 = l * lo, p2 = l * hi, p3 = h * lo, p4 = h * hi;
        l = std::min({p1, p2, p3, p4}) + c[k];
        h = std::max({p1, p2, p3, p4}) + c[k];
    }
    return {l, h};
}

int sign_at_algebraic(const UPoly& q, AlgNum alpha, const Rat& shift, int max_bisections) {
    UPoly qs = q.shift(shift);
    if (qs.is_zero()) return 0;
    UPoly g = gcd(alpha.poly(), qs);
    if (g.degree() > 0 && sturm_count(sturm_sequence(g), alpha.lo(), alpha.hi()) > 0) return 0;
    for (int it = 0;; ++it) {
        auto [l, h] = interval_eval(qs, alpha.lo(), alpha.hi());
        if (l.sign() > 0) return 1;
        if (h.sign() < 0) return -1;
        if (it >= max_bisections)
            throw Error("sign at algebraic number undecided after " + std::to_string(max_bisections) +
                        " bisections");
        alpha.bisect();
    }
}

namespace {

Rat det_rat(std::vector<std::vector<Rat>> a) {
    std::size_t n = a.size();
    Rat det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k].is_zero()) ++p;
        if (p == n) return Rat(0);
        if (p != k) {
            std::swap(a[p], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k].is_zero()) continue;
            Rat f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

}  // namespace

Rat discriminant(const UPoly& p) {
    int n = p.degree();
    if (n < 1) throw Error("discriminant needs degree >= 1");
    UPoly dp = p.derivative();
    int m = n - 1;
    std::size_t sz = static_cast<std::size_t>(n + m);
    std::vector<std::vector<Rat>> s(sz, std::vector<Rat>(sz, Rat(0)));
    // Sylvester matrix, highest coefficient first
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k)
            s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + k)] = p.coeffs()[static_cast<std::size_t>(n - k)];
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k)
            s[static_cast<std::size_t>(m + i)][static_cast<std::size_t>(i + k)] = dp.coeffs()[static_cast<std::size_t>(m - k)];
    Rat res = det_rat(std::move(s));
    Rat d = res / p.lead();
    if ((n * (n - 1) / 2) % 2) d = -d;
    return d;
}

}  // namespace calib
