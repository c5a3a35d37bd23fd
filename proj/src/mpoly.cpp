#include "calib/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace calib {

bool GrlexGreater::operator()(const Monomial& x, const Monomial& y) const {
    std::uint64_t dx = std::accumulate(x.begin(), x.end(), std::uint64_t{0});
    std::uint64_t dy = std::accumulate(y.begin(), y.end(), std::uint64_t{0});
    if (dx != dy) return dx > dy;
    return x > y;
}

namespace {

std::vector<std::string> merge_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    if (a == b) return a;
    std::vector<std::string> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

MPoly::MPoly(const QuadExt& c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

MPoly MPoly::var(const std::string& name) {
    MPoly p;
    p.vars_ = {name};
    p.terms_.emplace(Monomial{1}, QuadExt(1));
    return p;
}

MPoly MPoly::monomial(const QuadExt& c, const std::vector<std::pair<std::string, unsigned>>& powers) {
    MPoly p(c);
    for (const auto& [v, e] : powers) p *= var(v).pow(e);
    return p;
}

void MPoly::add_term(const Monomial& m, const QuadExt& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly MPoly::with_vars(const std::vector<std::string>& vars) const {
    if (vars == vars_) return *this;
    std::vector<std::size_t> pos(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::lower_bound(vars.begin(), vars.end(), vars_[i]);
        if (it == vars.end() || *it != vars_[i]) throw Error("registry is not a superset");
        pos[i] = static_cast<std::size_t>(it - vars.begin());
    }
    MPoly r;
    r.vars_ = vars;
    for (const auto& [m, c] : terms_) {
        Monomial nm(vars.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) nm[pos[i]] = m[i];
        r.terms_.emplace(std::move(nm), c);
    }
    return r;
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

QuadExt MPoly::constant_value() const {
    if (!is_constant()) throw Error("polynomial is not constant: " + str());
    return constant_term();
}

QuadExt MPoly::constant_term() const {
    if (terms_.empty()) return QuadExt(0);
    auto it = terms_.find(Monomial(vars_.size(), 0));
    return it == terms_.end() ? QuadExt(0) : it->second;
}

bool MPoly::has_var(const std::string& v) const { return var_index(v) >= 0; }

int MPoly::var_index(const std::string& v) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
    if (it == vars_.end() || *it != v) return -1;
    return static_cast<int>(it - vars_.begin());
}

unsigned MPoly::degree(const std::string& v) const {
    int i = var_index(v);
    if (i < 0) return 0;
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max<unsigned>(d, m[static_cast<std::size_t>(i)]);
    return d;
}

unsigned MPoly::total_degree() const {
    if (terms_.empty()) return 0;
    const auto& m = terms_.begin()->first;
    return std::accumulate(m.begin(), m.end(), 0u);
}

std::vector<std::string> MPoly::support() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        for (const auto& [m, c] : terms_)
            if (m[i] > 0) {
                out.push_back(vars_[i]);
                break;
            }
    return out;
}

MPoly MPoly::coeff(const std::string& v, unsigned k) const {
    int i = var_index(v);
    MPoly r;
    r.vars_ = vars_;
    if (i < 0) {
        if (k == 0) return *this;
        return r;
    }
    for (const auto& [m, c] : terms_)
        if (m[static_cast<std::size_t>(i)] == k) {
            Monomial nm = m;
            nm[static_cast<std::size_t>(i)] = 0;
            r.terms_.emplace(std::move(nm), c);
        }
    return r;
}

std::vector<MPoly> MPoly::coeffs_in(const std::string& v) const {
    unsigned d = degree(v);
    std::vector<MPoly> out;
    out.reserve(d + 1);
    for (unsigned k = 0; k <= d; ++k) out.push_back(coeff(v, k));
    return out;
}

MPoly MPoly::derivative(const std::string& v) const {
    int i = var_index(v);
    MPoly r;
    r.vars_ = vars_;
    if (i < 0) return r;
    auto ui = static_cast<std::size_t>(i);
    for (const auto& [m, c] : terms_)
        if (m[ui] > 0) {
            Monomial nm = m;
            nm[ui] -= 1;
            r.add_term(nm, c * QuadExt(static_cast<long>(m[ui])));
        }
    return r;
}

MPoly MPoly::substitute(const std::string& v, const MPoly& r) const {
    if (!has_var(v)) return *this;
    auto cs = coeffs_in(v);
    MPoly out;
    for (std::size_t k = cs.size(); k-- > 0;) out = out * r + cs[k];
    return out;
}

MPoly MPoly::substitute(const std::map<std::string, MPoly>& subs) const {
    std::vector<std::vector<MPoly>> powcache(vars_.size());
    std::vector<const MPoly*> target(vars_.size(), nullptr);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = subs.find(vars_[i]);
        if (it != subs.end()) target[i] = &it->second;
    }
    auto power = [&](std::size_t i, unsigned e) -> const MPoly& {
        auto& pc = powcache[i];
        if (pc.empty()) pc.push_back(MPoly(1));
        while (pc.size() <= e) pc.push_back(pc.back() * *target[i]);
        return pc[e];
    };
    MPoly out;
    for (const auto& [m, c] : terms_) {
        MPoly kept;
        kept.vars_ = vars_;
        Monomial km = m;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (target[i]) km[i] = 0;
        kept.terms_.emplace(km, c);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (target[i] && m[i] > 0) kept = kept * power(i, m[i]);
        out += kept;
    }
    return out;
}

MPoly MPoly::rename(const std::string& from, const std::string& to) const {
    if (!has_var(from)) return *this;
    return substitute(from, var(to));
}

QuadExt MPoly::eval(const std::map<std::string, QuadExt>& at) const {
    std::vector<std::vector<QuadExt>> pw(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = at.find(vars_[i]);
        if (it == at.end()) {
            if (degree(vars_[i]) == 0) continue;
            throw Error("no value for variable '" + vars_[i] + "'");
        }
        unsigned d = degree(vars_[i]);
        pw[i].push_back(QuadExt(1));
        for (unsigned k = 1; k <= d; ++k) pw[i].push_back(pw[i].back() * it->second);
    }
    QuadExt s(0);
    for (const auto& [m, c] : terms_) {
        QuadExt t = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) t *= pw[i][m[i]];
        s += t;
    }
    return s;
}

double MPoly::eval_double(const std::map<std::string, double>& at) const {
    std::vector<double> x(vars_.size(), 0.0);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = at.find(vars_[i]);
        if (it != at.end()) x[i] = it->second;
        else if (degree(vars_[i]) > 0) throw Error("no value for variable '" + vars_[i] + "'");
    }
    double s = 0;
    for (const auto& [m, c] : terms_) {
        double t = c.to_double();
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) t *= std::pow(x[i], static_cast<int>(m[i]));
        s += t;
    }
    return s;
}

MPoly MPoly::scale(const QuadExt& c) const {
    MPoly r;
    r.vars_ = vars_;
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly r(1), base = *this;
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

MPoly pow(const MPoly& p, int e) {
    if (e < 0) throw Error("negative exponent in polynomial power");
    return p.pow(static_cast<unsigned>(e));
}

MPoly MPoly::exact_div(const MPoly& divisor) const {
    if (divisor.is_zero()) throw Error("division by the zero polynomial");
    auto vars = merge_vars(vars_, divisor.vars_);
    MPoly r = with_vars(vars);
    MPoly g = divisor.with_vars(vars);
    const auto& [gm, gc] = *g.terms_.begin();
    QuadExt ginv = gc.inv();
    MPoly q;
    q.vars_ = vars;
    while (!r.is_zero()) {
        const auto [rm, rc] = *r.terms_.begin();
        Monomial qm(vars.size());
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (rm[i] < gm[i]) throw Error("inexact polynomial division");
            qm[i] = rm[i] - gm[i];
        }
        QuadExt qc = rc * ginv;
        q.terms_.emplace(qm, qc);
        for (const auto& [m, c] : g.terms_) {
            Monomial pm(vars.size());
            for (std::size_t i = 0; i < vars.size(); ++i) pm[i] = m[i] + qm[i];
            r.add_term(pm, -(c * qc));
        }
    }
    return q;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    if (o.vars_ != vars_) {
        auto vars = merge_vars(vars_, o.vars_);
        *this = with_vars(vars);
        MPoly t = o.with_vars(vars);
        for (const auto& [m, c] : t.terms_) add_term(m, c);
        return *this;
    }
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly operator*(const MPoly& a, const MPoly& b) {
    auto vars = merge_vars(a.vars_, b.vars_);
    MPoly x = a.with_vars(vars), y = b.with_vars(vars);
    MPoly r;
    r.vars_ = vars;
    Monomial m(vars.size());
    for (const auto& [mx, cx] : x.terms_)
        for (const auto& [my, cy] : y.terms_) {
            for (std::size_t i = 0; i < vars.size(); ++i) m[i] = mx[i] + my[i];
            r.add_term(m, cx * cy);
        }
    return r;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

bool operator==(const MPoly& a, const MPoly& b) {
    if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
    auto vars = merge_vars(a.vars_, b.vars_);
    return a.with_vars(vars).terms_ == b.with_vars(vars).terms_;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bool is_const = std::all_of(m.begin(), m.end(), [](auto e) { return e == 0; });
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        bool neg = c.is_rational() && c.a().sign() < 0;
        QuadExt mag = neg ? -c : c;
        std::string cs;
        if (mag.is_rational()) cs = mag.str();
        else cs = (mag.a().is_zero() ? mag.str() : "(" + mag.str() + ")");
        if (first) os << (neg ? "-" : "");
        else os << (neg ? " - " : " + ");
        first = false;
        if (is_const) os << cs;
        else if (mag == QuadExt(1)) os << mono;
        else os << cs << "*" << mono;
    }
    return os.str();
}

namespace {

struct PParser {
    const std::string& s;
    std::size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw Error("cannot parse polynomial '" + s + "': " + what);
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    mpz_class integer() {
        skip();
        std::size_t st = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (st == i) fail("expected integer at position " + std::to_string(st));
        return mpz_class(s.substr(st, i - st), 10);
    }
    MPoly atom() {
        skip();
        if (i >= s.size()) fail("unexpected end of input");
        if (eat('(')) {
            MPoly v = expr();
            if (!eat(')')) fail("missing ')'");
            return v;
        }
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) return MPoly(Rat(integer()));
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t st = i;
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
            std::string name = s.substr(st, i - st);
            skip();
            if (name == "sqrt" && i < s.size() && s[i] == '(') {
                eat('(');
                mpz_class n = integer();
                if (!eat(')')) fail("missing ')'");
                if (!n.fits_slong_p()) fail("radicand too large");
                return MPoly(QuadExt::sqrt_int(n.get_si()));
            }
            return MPoly::var(name);
        }
        fail(std::string("unexpected character '") + c + "' at position " + std::to_string(i));
    }
    MPoly power() {
        MPoly b = atom();
        if (eat('^')) {
            mpz_class e = integer();
            if (!e.fits_uint_p()) fail("exponent too large");
            return b.pow(static_cast<unsigned>(e.get_ui()));
        }
        return b;
    }
    MPoly unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    MPoly term() {
        MPoly v = unary();
        for (;;) {
            if (eat('*')) v *= unary();
            else if (eat('/')) {
                MPoly d = unary();
                if (!d.is_constant()) fail("division by a non-constant");
                v = v.scale(d.constant_value().inv());
            } else
                return v;
        }
    }
    MPoly expr() {
        MPoly v = term();
        for (;;) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }
};

}  // namespace

MPoly MPoly::parse(const std::string& text) {
    PParser p{text};
    MPoly v = p.expr();
    p.skip();
    if (p.i != text.size()) p.fail("trailing input at position " + std::to_string(p.i));
    return v;
}

RatFunc::RatFunc(const MPoly& n, const MPoly& d) : num_(n), den_(d) {
    if (d.is_zero()) throw Error("rational function with zero denominator");
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.num_.is_zero()) throw Error("division by zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

RatFunc substitute(const MPoly& p, const std::string& v, const RatFunc& r) {
    unsigned d = p.degree(v);
    auto cs = p.coeffs_in(v);
    // sum_k c_k N^k D^(d-k)
    std::vector<MPoly> dpow{MPoly(1)};
    for (unsigned k = 1; k <= d; ++k) dpow.push_back(dpow.back() * r.den());
    MPoly num;
    MPoly npow(1);
    for (unsigned k = 0; k <= d; ++k) {
        num += cs[k] * npow * dpow[d - k];
        if (k < d) npow *= r.num();
    }
    return RatFunc(num, dpow[d]);
}

RatFunc substitute(const RatFunc& p, const std::string& v, const RatFunc& r) {
    RatFunc n = substitute(p.num(), v, r);
    RatFunc d = substitute(p.den(), v, r);
    return n / d;
}

}  // namespace calib
