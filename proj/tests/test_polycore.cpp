#include "doctest.h"

#include "calib/polyalg.hpp"
#include "calib/univariate.hpp"

#include <algorithm>
#include <cmath>
#include <random>

using namespace calib;

namespace {

MPoly P(const std::string& s) { return MPoly::parse(s); }

MPoly random_poly(std::mt19937_64& g, const std::vector<std::string>& vars, unsigned maxdeg, int nterms) {
    std::uniform_int_distribution<int> coef(-9, 9), deg(0, static_cast<int>(maxdeg));
    MPoly p;
    for (int k = 0; k < nterms; ++k) {
        std::vector<std::pair<std::string, unsigned>> pw;
        unsigned left = maxdeg;
        for (const auto& v : vars) {
            unsigned e = static_cast<unsigned>(deg(g)) % (left + 1);
            left -= e;
            pw.emplace_back(v, e);
        }
        p += MPoly::monomial(QuadExt(coef(g)), pw);
    }
    return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
    CHECK(P("(t+1)*(t-1)") == P("t^2 - 1"));
    CHECK(P("t^2 - 1").str() == "t^2 - 1");
    MPoly l = P("(l1+l2+l3)^2 - 3*(l1*l2+l2*l3+l3*l1)");
    MPoly sq = P("1/2*((l1-l2)^2 + (l2-l3)^2 + (l3-l1)^2)");
    CHECK((l - sq).is_zero());
    MPoly p = P("3*x*y - 2*sqrt(2)*x + 7");
    CHECK(p + MPoly(0) == p);
    CHECK(P("y*x") == P("x*y"));
    CHECK(P("x^3*y").degree("x") == 3);
    CHECK(P("x^3*y + y^5").total_degree() == 5);
    CHECK(P("2*x^2*y + x*y - 3").coeff("x", 1) == P("y"));
    CHECK(P("x^2*y").derivative("x") == P("2*x*y"));
    CHECK_THROWS_AS(pow(P("x"), -1), Error);
    CHECK_THROWS_AS(P("x/y"), Error);
    CHECK(P("x^2 + 1").eval({{"x", QuadExt::sqrt_int(2)}}) == QuadExt(3));
}

TEST_CASE("parser and printer round trip") {
    for (const char* s : {"t^4 - 2*t^3 - 12*t^2 - 16*t + 20", "4*t^5 - 4*t^4 - (101 + 20*sqrt(2))*t^3",
                          "-1520/2401*x*y^2 + 3", "s1^2 - 2*s2"}) {
        MPoly p = P(s);
        CHECK(P(p.str()) == p);
    }
}

TEST_CASE("exact division") {
    MPoly f = P("(x^2 + y - 3)*(x*y - 2)");
    CHECK(f.exact_div(P("x*y - 2")) == P("x^2 + y - 3"));
    CHECK_THROWS_AS(P("x^2 + 1").exact_div(P("x + 1")), Error);
    MPoly s2 = MPoly(QuadExt::sqrt_int(2));
    MPoly g = P("4*t^5 - 4*t^4 - (101 + 20*sqrt(2))*t^3 + (174 + 106*sqrt(2))*t^2 - (88 + 76*sqrt(2))*t + (24 + 8*sqrt(2))");
    CHECK(((g * (P("t") + s2 * MPoly(2))).exact_div(P("t + 2*sqrt(2)"))) == g);
}

TEST_CASE("substitution with denominator clearing") {
    RatFunc l3(P("l1 + l2"), P("l1*l2 - 1"));
    RatFunc r = substitute(P("l1 + l2 + l3 - l1*l2*l3"), "l3", l3);
    CHECK(r.num().is_zero());
    RatFunc s = substitute(P("l1*l2 + l2*l3 + l3*l1"), "l3", l3);
    CHECK(s.den() == P("l1*l2 - 1"));
    CHECK(s.num() == P("l1^2*l2^2 + 1/2*l1^2 + 1/2*l2^2 + 1/2*(l1 + l2)^2"));
    RatFunc s3(P("s1 + w*(1 - s2)"));
    CHECK(substitute(P("s3 - s1 - w*(1 - s2)"), "s3", s3).num().is_zero());
    CHECK(substitute(P("l3^2 + 1"), "l3", l3).den() == P("(l1*l2 - 1)^2"));
}

TEST_CASE("substitution is a homomorphism") {
    std::mt19937_64 g(5);
    RatFunc r(P("x + y^2"), P("x*y - 1"));
    for (int it = 0; it < 20; ++it) {
        MPoly p = random_poly(g, {"x", "y", "z"}, 3, 4);
        MPoly q = random_poly(g, {"x", "y", "z"}, 3, 4);
        CHECK(substitute(p * q, "z", r) == substitute(p, "z", r) * substitute(q, "z", r));
        CHECK(substitute(p + q, "z", r) == substitute(p, "z", r) + substitute(q, "z", r));
    }
}

TEST_CASE("symmetric reduction") {
    std::vector<std::string> L{"l1", "l2", "l3"};
    CHECK(symmetric_reduce(P("l1^2 + l2^2 + l3^2"), L) == P("s1^2 - 2*s2"));
    CHECK(symmetric_reduce(P("l1^2*l2^2 + l2^2*l3^2 + l3^2*l1^2"), L) == P("s2^2 - 2*s1*s3"));
    CHECK(symmetric_reduce(P("w*(l1 + l2 + l3) + w^2"), L) == P("w*s1 + w^2"));
    CHECK_THROWS_AS(symmetric_reduce(P("l1 + 2*l2"), L), Error);
    MPoly vd = P("(l1 - l2)^2*(l2 - l3)^2*(l3 - l1)^2");
    MPoly q = symmetric_reduce(vd, L);
    CHECK(q == P("s1^2*s2^2 - 4*s2^3 - 4*s1^3*s3 + 18*s1*s2*s3 - 27*s3^2"));
}

TEST_CASE("symmetric reduction round trip on random inputs") {
    std::mt19937_64 g(13);
    std::vector<std::string> L{"l1", "l2", "l3"};
    std::map<std::string, MPoly> back{{"s1", elementary_symmetric(L, 1)},
                                      {"s2", elementary_symmetric(L, 2)},
                                      {"s3", elementary_symmetric(L, 3)}};
    std::vector<std::vector<int>> perms{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (int it = 0; it < 100; ++it) {
        MPoly base = random_poly(g, {"l1", "l2", "l3", "w"}, 6, 3);
        MPoly sym;
        for (const auto& pm : perms) {
            std::map<std::string, MPoly> sub;
            for (int i = 0; i < 3; ++i) sub[L[static_cast<std::size_t>(i)]] = MPoly::var(L[static_cast<std::size_t>(pm[static_cast<std::size_t>(i)])]);
            sym += base.substitute(sub);
        }
        MPoly q = symmetric_reduce(sym, L);
        REQUIRE(q.substitute(back) == sym);
    }
}

TEST_CASE("determinants") {
    PolyMatrix id(3, std::vector<MPoly>(3, MPoly(0)));
    for (int i = 0; i < 3; ++i) id[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = MPoly(1);
    CHECK(det_poly(id) == MPoly(1));
    PolyMatrix l0(3, std::vector<MPoly>(3, MPoly(-2)));
    for (std::size_t i = 0; i < 3; ++i) l0[i][i] = MPoly(6);
    CHECK(det_poly(l0) == MPoly(128));
    PolyMatrix z{{P("0"), P("1")}, {P("1"), P("0")}};
    CHECK(det_poly(z) == MPoly(-1));
}

TEST_CASE("bareiss agrees with cofactor expansion") {
    std::mt19937_64 g(21);
    for (int n : {3, 4}) {
        for (int it = 0; it < 15; ++it) {
            PolyMatrix m(static_cast<std::size_t>(n), std::vector<MPoly>(static_cast<std::size_t>(n)));
            for (auto& row : m)
                for (auto& e : row) e = random_poly(g, {"a", "b"}, 2, 2);
            REQUIRE(det_bareiss(m) == det_cofactor(m));
        }
    }
}

TEST_CASE("quartic discriminant") {
    CHECK(quartic_discriminant(1, 0, 0, 0, 1) == MPoly(256));
    CHECK(quartic_discriminant(1, 0, -2, 0, 1) == MPoly(0));
    // agrees with the resultant definition on a univariate sample
    UPoly p({Rat(5), Rat(-3), Rat(2), Rat(7), Rat(1)});
    CHECK(quartic_discriminant(1, 7, 2, -3, 5).constant_value() == QuadExt(discriminant(p)));
}

TEST_CASE("sturm isolation") {
    auto roots = sturm_isolate(UPoly::from_mpoly(P("t^2 - 2")), Rat(1, 4));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].lo >= Rat(-2));
    CHECK(roots[0].hi <= Rat(-1));
    CHECK(roots[1].lo >= Rat(1));
    CHECK(roots[1].hi <= Rat(2));
    CHECK_THROWS_AS(sturm_isolate(UPoly()), Error);
    // repeated and rational roots
    auto r2 = sturm_isolate(UPoly::from_mpoly(P("(t - 1)^3*(t + 2)*(t^2 + 1)")));
    CHECK(r2.size() == 2);
}

TEST_CASE("sturm counts match a float sign-change oracle") {
    std::mt19937_64 g(17);
    std::uniform_int_distribution<int> root(-6, 6), nreal(0, 6), cq(1, 9);
    for (int it = 0; it < 60; ++it) {
        std::vector<int> rs;
        int k = nreal(g);
        while (static_cast<int>(rs.size()) < k) {
            int r = root(g);
            if (std::find(rs.begin(), rs.end(), r) == rs.end()) rs.push_back(r);
        }
        UPoly p({Rat(1)});
        for (int r : rs) p = p * UPoly({Rat(-r), Rat(1)});
        while (p.degree() + 2 <= 8 && (it % 2)) {
            p = p * UPoly({Rat(cq(g)), Rat(0), Rat(1)});
            if (p.degree() >= 4) break;
        }
        if (p.degree() < 1) continue;
        // shift by 1/3 so that no root sits on the oracle grid
        UPoly q = p.shift(Rat(1, 3));
        int changes = 0;
        double prev = q.eval_double(-12.0);
        for (int s = 1; s <= 2400; ++s) {
            double v = q.eval_double(-12.0 + 0.01 * s);
            if ((v > 0) != (prev > 0)) ++changes;
            prev = v;
        }
        REQUIRE(static_cast<int>(sturm_isolate(q).size()) == changes);
    }
}

TEST_CASE("algebraic number signs") {
    UPoly tau_poly = UPoly::from_mpoly(P("t^6 - 6*t^5 + 6*t^4 + 16*t^3 - 77*t^2 + 204*t - 192"));
    auto roots = real_roots(tau_poly);
    REQUIRE(roots.size() == 4);
    AlgNum tau = roots.back();
    CHECK(sign_at_algebraic(tau_poly, tau, Rat(0)) == 0);
    CHECK(sign_at_algebraic(tau_poly, tau, Rat(-1, 10)) == -1);
    CHECK(sign_at_algebraic(UPoly::from_mpoly(P("t - 4")), tau, Rat(0)) == 1);
    CHECK(sign_at_algebraic(UPoly::from_mpoly(P("t - 9/2")), tau, Rat(0)) == -1);
    AlgNum s2(UPoly::from_mpoly(P("t^2 - 2")), Rat(1), Rat(2));
    CHECK_THROWS_AS(sign_at_algebraic(UPoly::from_mpoly(P("t - 1")), s2, Rat(0), 0), Error);
    CHECK(sign_at_algebraic(UPoly::from_mpoly(P("t^2 - 2")), s2, Rat(0)) == 0);
    CHECK(sign_at_algebraic(UPoly::from_mpoly(P("t - 1")), s2, Rat(0)) == 1);
    CHECK_THROWS_AS(AlgNum(UPoly::from_mpoly(P("t^2 - 2")), Rat(-2), Rat(2)), Error);
}

TEST_CASE("discriminant convention") {
    CHECK(discriminant(UPoly::from_mpoly(P("t^2 - 2"))) == Rat(8));
    CHECK(discriminant(UPoly::from_mpoly(P("t^3 - t"))) == Rat(4));
    CHECK(discriminant(UPoly::from_mpoly(P("t^6 - 6*t^5 + 6*t^4 + 16*t^3 - 77*t^2 + 204*t - 192"))).sign() < 0);
}
