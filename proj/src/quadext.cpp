#include "calib/quadext.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace calib {

bool is_squarefree(long d) {
    if (d < 1) return false;
    for (long p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0) return false;
    return true;
}

QuadExt::QuadExt(const Rat& a, const Rat& b, long d) : a_(a), b_(b), d_(d) {
    if (d < 1) throw Error("radicand must be positive");
    if (d > 1 && !is_squarefree(d)) throw Error("radicand " + std::to_string(d) + " is not square-free");
    normalize();
}

void QuadExt::normalize() {
    if (d_ == 1) {
        a_ += b_;
        b_ = Rat(0);
    }
    if (b_.is_zero()) d_ = 1;
}

QuadExt QuadExt::sqrt_int(long n) {
    if (n < 0) throw Error("square root of a negative integer");
    long k = 1, m = n;
    for (long p = 2; p * p <= m; ++p)
        while (m % (p * p) == 0) {
            m /= p * p;
            k *= p;
        }
    if (m <= 1) return QuadExt(Rat(m == 0 ? 0 : k));
    return QuadExt(Rat(0), Rat(k), m);
}

long QuadExt::common_radicand(const QuadExt& o) const {
    if (d_ == 1) return o.d_;
    if (o.d_ == 1 || o.d_ == d_) return d_;
    throw Error("mismatched radicands sqrt(" + std::to_string(d_) + ") and sqrt(" +
                std::to_string(o.d_) + ")");
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    d_ = common_radicand(o);
    a_ += o.a_;
    b_ += o.b_;
    normalize();
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
    d_ = common_radicand(o);
    a_ -= o.a_;
    b_ -= o.b_;
    normalize();
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    long d = common_radicand(o);
    Rat a = a_ * o.a_ + Rat(d) * b_ * o.b_;
    Rat b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    d_ = d;
    normalize();
    return *this;
}

QuadExt QuadExt::inv() const {
    if (is_zero()) throw Error("division by zero");
    Rat n = norm();
    return QuadExt(a_ / n, -b_ / n, d_);
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
    common_radicand(o);
    return *this *= o.inv();
}

QuadExt QuadExt::pow(int e) const {
    if (e < 0) return inv().pow(-e);
    QuadExt r(1), base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

int QuadExt::sign() const {
    int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with d b^2
    auto c = a_ * a_ <=> Rat(d_) * b_ * b_;
    if (c == 0) return 0;
    return c > 0 ? sa : sb;
}

double QuadExt::to_double() const {
    return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(d_));
}

std::string QuadExt::str() const {
    if (b_.is_zero()) return a_.str();
    std::string rad = "sqrt(" + std::to_string(d_) + ")";
    std::string bs;
    Rat bb = b_.abs();
    if (bb == Rat(1)) bs = rad;
    else bs = bb.str() + "*" + rad;
    if (a_.is_zero()) return (b_.sign() < 0 ? "-" : "") + bs;
    return a_.str() + (b_.sign() < 0 ? " - " : " + ") + bs;
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.str(); }

namespace {

struct QParser {
    const std::string& s;
    std::size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw Error("cannot parse number '" + s + "': " + what);
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
    QuadExt factor() {
        skip();
        if (eat('(')) {
            QuadExt v = expr();
            if (!eat(')')) fail("missing ')'");
            return v;
        }
        if (s.compare(i, 4, "sqrt") == 0) {
            i += 4;
            if (!eat('(')) fail("expected '(' after sqrt");
            mpz_class n = integer();
            if (!eat(')')) fail("missing ')'");
            if (!n.fits_slong_p()) fail("radicand too large");
            return QuadExt::sqrt_int(n.get_si());
        }
        return QuadExt(Rat(integer()));
    }
    QuadExt unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return factor();
    }
    QuadExt term() {
        QuadExt v = unary();
        for (;;) {
            if (eat('*')) v *= unary();
            else if (eat('/')) v /= unary();
            else return v;
        }
    }
    QuadExt expr() {
        QuadExt v = term();
        for (;;) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }
};

}  // namespace

QuadExt QuadExt::parse(const std::string& text) {
    QParser p{text};
    QuadExt v = p.expr();
    p.skip();
    if (p.i != text.size()) p.fail("trailing input at position " + std::to_string(p.i));
    return v;
}

}  // namespace calib
