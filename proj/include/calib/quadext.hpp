#pragma once

#include "calib/rat.hpp"

#include <iosfwd>
#include <string>

namespace calib {

// a + b*sqrt(d) with d square-free. A value with b = 0 is stored with d = 1
// and combines with any radicand.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(int v) : a_(v) {}
    QuadExt(long v) : a_(v) {}
    QuadExt(const Rat& a) : a_(a) {}
    QuadExt(const Rat& a, const Rat& b, long d);

    // sqrt(n) for integer n >= 0, with square factors pulled out.
    static QuadExt sqrt_int(long n);
    // Grammar: integers, p/q, sqrt(d), combined with + - * / and parentheses.
    static QuadExt parse(const std::string& text);

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    long d() const { return d_; }
    bool is_rational() const { return b_.is_zero(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    int sign() const;
    Rat norm() const { return a_ * a_ - Rat(d_) * b_ * b_; }
    QuadExt conj() const { return QuadExt(a_, -b_, d_); }
    QuadExt inv() const;
    QuadExt pow(int e) const;
    double to_double() const;
    std::string str() const;

    QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }
    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o);

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
    }
    friend bool operator<(const QuadExt& x, const QuadExt& y) { return (x - y).sign() < 0; }
    friend bool operator>(const QuadExt& x, const QuadExt& y) { return y < x; }
    friend bool operator<=(const QuadExt& x, const QuadExt& y) { return !(y < x); }
    friend bool operator>=(const QuadExt& x, const QuadExt& y) { return !(x < y); }

private:
    void normalize();
    long common_radicand(const QuadExt& o) const;

    Rat a_;
    Rat b_;
    long d_ = 1;
};

inline int qext_sign(const QuadExt& x) { return x.sign(); }
bool is_squarefree(long d);

std::ostream& operator<<(std::ostream& os, const QuadExt& x);

}  // namespace calib
