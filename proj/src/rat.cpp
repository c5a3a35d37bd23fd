#include "calib/rat.hpp"

#include <cctype>
#include <ostream>

namespace calib {

Rat::Rat(long num, long den) {
    if (den == 0) throw Error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw Error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat Rat::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw Error("empty rational literal");
    auto check_int = [&](const std::string& part) {
        std::size_t i = (part.size() > 0 && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (i == part.size()) throw Error("malformed rational literal '" + text + "'");
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw Error("malformed rational literal '" + text + "'");
    };
    auto slash = s.find('/');
    std::string n = s.substr(0, slash);
    if (!n.empty() && n[0] == '+') n.erase(0, 1);
    check_int(n);
    mpz_class num(n, 10);
    mpz_class den(1);
    if (slash != std::string::npos) {
        std::string d = s.substr(slash + 1);
        check_int(d);
        den = mpz_class(d, 10);
    }
    return Rat(num, den);
}

Rat Rat::inv() const {
    if (is_zero()) throw Error("division by zero");
    return Rat(mpq_class(1 / v_));
}

Rat Rat::pow(int e) const {
    if (e < 0) return inv().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rat(n, d);
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw Error("division by zero");
    v_ /= o.v_;
    return *this;
}

Rat binomial(unsigned n, unsigned k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Rat(r);
}

Rat floor_div_rat(const Rat& x) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), x.raw().get_num_mpz_t(), x.raw().get_den_mpz_t());
    return Rat(q);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace calib
