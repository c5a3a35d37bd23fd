#include "doctest.h"

#include "calib/mpoly.hpp"
#include "calib/normalform.hpp"
#include "calib/octalg.hpp"
#include "calib/polyalg.hpp"

#include <cmath>
#include <random>

using namespace calib;

namespace {

Mat random_so(std::mt19937_64& g, std::size_t n) {
    std::normal_distribution<double> nd;
    Mat a = zeros(n, n);
    for (auto& r : a)
        for (auto& x : r) x = nd(g);
    std::vector<std::vector<double>> cols;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<double> v(n);
        for (std::size_t r = 0; r < n; ++r) v[r] = a[r][c];
        cols.push_back(v);
    }
    auto q = orthonormalize(cols);
    Mat m = zeros(n, n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) m[r][c] = q[c][r];
    std::vector<std::vector<double>> mm(m.begin(), m.end());
    if (det_small(mm) < 0)
        for (std::size_t r = 0; r < n; ++r) m[r][0] = -m[r][0];
    return m;
}

Mat block(const Mat& a, const Mat& b) {
    Mat m = zeros(a.size() + b.size(), a.size() + b.size());
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < a.size(); ++c) m[r][c] = a[r][c];
    for (std::size_t r = 0; r < b.size(); ++r)
        for (std::size_t c = 0; c < b.size(); ++c) m[a.size() + r][a.size() + c] = b[r][c];
    return m;
}

double form_defect(const FormTable& f, const Mat& m) {
    int n = f.dim();
    double worst = 0;
    std::vector<int> idx(static_cast<std::size_t>(f.arity()));
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == f.arity()) {
            std::vector<Vec<double>> orig, moved;
            for (int i : idx) {
                auto e = basis_vec<double>(n, i);
                orig.push_back(e);
                moved.push_back(matvec(m, e));
            }
            worst = std::max(worst, std::fabs(evaluate<double>(f, moved) - evaluate<double>(f, orig)));
            return;
        }
        for (int i = start; i < n; ++i) {
            idx[static_cast<std::size_t>(pos)] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
    return worst;
}

std::array<double, 3> sorted_abs(std::array<double, 3> a) {
    for (auto& x : a) x = std::fabs(x);
    std::sort(a.begin(), a.end());
    return a;
}

Mat coass_diag(const std::vector<double>& l) {
    Mat j = zeros(3, 4);
    for (std::size_t i = 0; i < 3; ++i) j[i][i + 1] = l[i];
    return j;
}

void check_same_up_to_sign(const std::vector<double>& got, std::vector<double> want, double tol) {
    auto sorted = [](std::vector<double> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    auto g = sorted(got), w = sorted(want);
    std::vector<double> neg;
    for (double x : want) neg.push_back(-x);
    auto wn = sorted(neg);
    double d1 = 0, d2 = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        d1 = std::max(d1, std::fabs(g[i] - w[i]));
        d2 = std::max(d2, std::fabs(g[i] - wn[i]));
    }
    CHECK(std::min(d1, d2) < tol);
}

}  // namespace

TEST_CASE("lift formulas") {
    CHECK(lift3(QuadExt(0), QuadExt(0)) == QuadExt(0));
    QuadExt r3(0, 1, 3);
    CHECK(lift3(r3, r3) == r3);
    CHECK(lift4(QuadExt(1), QuadExt(2), QuadExt(3)) == QuadExt(0));
    CHECK(lift3(2.0, 3.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(lift3(QuadExt(2), QuadExt(Rat(1, 2))), Error);
    CHECK_THROWS_AS(lift4(QuadExt(1), QuadExt(1), QuadExt(0)), Error);
    auto e = elementary_values(std::vector<QuadExt>{QuadExt(0), QuadExt(1), QuadExt(2), QuadExt(3)});
    CHECK(e[1] == QuadExt(6));
    CHECK(e[3] == QuadExt(6));
}

TEST_CASE("lift3 closes the locus exactly") {
    std::mt19937_64 g(11);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 9);
    int done = 0;
    while (done < 10000) {
        Rat a(num(g), den(g)), b(num(g), den(g));
        if (a * b == Rat(1)) continue;
        QuadExt l1(a), l2(b), l3 = lift3(l1, l2);
        auto e = elementary_values(std::vector<QuadExt>{l1, l2, l3});
        REQUIRE(e[1] == e[3]);
        ++done;
    }
}

TEST_CASE("classify") {
    QuadExt r3(0, 1, 3), r5(0, 1, 5);
    CHECK(classify(std::vector<QuadExt>{QuadExt(0), QuadExt(0), QuadExt(0)}) == Component::CG0);
    CHECK(classify(std::vector<QuadExt>{r3, r3, r3}) == Component::CGplus);
    CHECK(classify(std::vector<QuadExt>{-r3, -r3, -r3}) == Component::CGminus);
    CHECK(classify(std::vector<QuadExt>{r5, r5, r5 / QuadExt(2)}) == Component::CGplus);
    CHECK(classify(std::vector<QuadExt>{QuadExt(2), QuadExt(2), QuadExt(Rat(4, 3))}) == Component::CGplus);
    CHECK(classify(std::vector<QuadExt>{QuadExt(1), QuadExt(1), QuadExt(1), QuadExt(1)}) == Component::CSplus);
    CHECK(classify(std::vector<QuadExt>{QuadExt(0), QuadExt(0), QuadExt(0), QuadExt(0)}) == Component::CS0);
    CHECK(classify(std::vector<double>{-1, -1, -1, -1}) == Component::CSminus);
    CHECK_THROWS_AS(classify(std::vector<QuadExt>{QuadExt(1), QuadExt(2), QuadExt(4)}), Error);
    CHECK_THROWS_AS(classify(std::vector<double>{1, 2}), Error);
    CHECK(to_string(Component::CGplus) == "CG+");
}

TEST_CASE("component bounds by sampling") {
    std::mt19937_64 g(5);
    std::uniform_real_distribution<double> small(-1.0, 1.0), big(-30.0, 30.0);
    int cg0 = 0, cgp = 0;
    while (cg0 < 10000 || cgp < 10000) {
        bool want0 = cg0 < 10000;
        double l1 = want0 ? small(g) : big(g), l2 = want0 ? small(g) : big(g);
        if (std::fabs(l1 * l2 - 1) < 1e-6) continue;
        std::vector<double> l = {l1, l2, lift3(l1, l2)};
        Component c;
        try {
            c = classify(l);
        } catch (const Error&) {
            continue;
        }
        double s2 = elementary_values(l)[2];
        if (c == Component::CG0 && cg0 < 10000) {
            REQUIRE(s2 <= 1e-12);
            ++cg0;
        } else if (c == Component::CGplus && cgp < 10000) {
            REQUIRE(s2 >= 9 - 1e-9);
            ++cgp;
        }
    }
    int cs0 = 0, csp = 0;
    while (cs0 < 10000 || csp < 2000) {
        bool want0 = cs0 < 10000;
        double a = want0 ? small(g) : std::fabs(big(g)), b = want0 ? small(g) : std::fabs(big(g)),
               c3 = want0 ? small(g) : std::fabs(big(g));
        std::vector<double> t = {a, b, c3};
        if (std::fabs(elementary_values(t)[2] - 1) < 1e-6) continue;
        std::vector<double> l = {lift4(a, b, c3), a, b, c3};
        Component c;
        try {
            c = classify(l);
        } catch (const Error&) {
            continue;
        }
        auto e = elementary_values(l);
        if (c == Component::CS0 && cs0 < 10000) {
            REQUIRE(e[2] <= 1e-12);
            ++cs0;
        } else if (c == Component::CSplus && csp < 2000) {
            REQUIRE(e[2] >= 6 - 1e-9);
            REQUIRE(e[1] >= 4 - 1e-9);
            ++csp;
        }
    }
}

TEST_CASE("sum of squares identities in three variables") {
    MPoly l1 = MPoly::var("l1"), l2 = MPoly::var("l2"), l3 = MPoly::var("l3");
    MPoly s1 = l1 + l2 + l3, s2 = l1 * l2 + l1 * l3 + l2 * l3, s3 = l1 * l2 * l3;
    MPoly half(Rat(1, 2));
    CHECK(s1 * s1 - MPoly(3) * s2 == half * (pow(l1 - l2, 2) + pow(l1 - l3, 2) + pow(l2 - l3, 2)));
    MPoly p12 = l1 * l2, p13 = l1 * l3, p23 = l2 * l3;
    CHECK(s2 * s2 - MPoly(3) * s1 * s3 == half * (pow(p12 - p13, 2) + pow(p12 - p23, 2) + pow(p13 - p23, 2)));
}

TEST_CASE("self-dual action lies in G2") {
    std::mt19937_64 g(3);
    for (int t = 0; t < 20; ++t) {
        Mat r = random_so(g, 4);
        Mat a = self_dual_action(r);
        CHECK(max_abs_diff(matmul(a, transpose(a)), identity(3)) < 1e-12);
        CHECK(form_defect(phi_form(), block(r, a)) < 1e-12);
    }
}

TEST_CASE("su2 alignment preserves the Cayley form on each side") {
    std::mt19937_64 g(4);
    std::normal_distribution<double> nd;
    for (int t = 0; t < 10; ++t) {
        std::vector<double> v = {nd(g), nd(g), nd(g), nd(g)};
        Mat o = su2_align(v);
        auto w = matvec(o, v);
        double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]);
        CHECK(w[0] == doctest::Approx(n));
        CHECK(std::fabs(w[1]) + std::fabs(w[2]) + std::fabs(w[3]) < 1e-12);
        CHECK(form_defect(cayley_form(), block(o, identity(4))) < 1e-12);
        CHECK(form_defect(cayley_form(), block(identity(4), o)) < 1e-12);
    }
    CHECK_THROWS_AS(su2_align({0, 0, 0, 0}), Error);
}

TEST_CASE("coassociative normal form examples") {
    auto z = coass_normal_form(zeros(3, 4));
    CHECK(z.lambda == std::array<double, 3>{0, 0, 0});
    CHECK(z.component == Component::CG0);

    auto d = coass_normal_form(coass_diag({2, 2, 4.0 / 3}));
    CHECK(d.lambda[0] == doctest::Approx(2));
    CHECK(d.lambda[1] == doctest::Approx(2));
    CHECK(d.lambda[2] == doctest::Approx(4.0 / 3));
    CHECK(d.component == Component::CGplus);

    auto lo = lawson_osserman({1, 0, 0, 0});
    auto nf = coass_normal_form(lo.jac);
    double r5 = std::sqrt(5.0);
    CHECK(std::fabs(nf.lambda[0] - r5) < 1e-12);
    CHECK(std::fabs(nf.lambda[1] - r5) < 1e-12);
    CHECK(std::fabs(nf.lambda[2] - r5 / 2) < 1e-12);
    CHECK(nf.component == Component::CGplus);

    CHECK_THROWS_AS(coass_normal_form(coass_diag({1, 2, 4})), Error);
    CHECK_THROWS_AS(coass_normal_form(zeros(3, 3)), Error);
}

TEST_CASE("coassociative normal form round trip") {
    std::mt19937_64 g(8);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int t = 0; t < 200; ++t) {
        double l1 = u(g), l2 = u(g);
        if (std::fabs(l1 * l2 - 1) < 0.05) continue;
        std::vector<double> l = {l1, l2, lift3(l1, l2)};
        if (std::fabs(l[2]) > 50) continue;
        Mat r = random_so(g, 4);
        Mat j = matmul(matmul(self_dual_action(r), coass_diag(l)), transpose(r));
        auto nf = coass_normal_form(j);
        std::vector<double> got(nf.lambda.begin(), nf.lambda.end());
        check_same_up_to_sign(got, l, 1e-8);
        CHECK(nf.locus_residual < 1e-8);
    }
}

TEST_CASE("associative normal form") {
    auto z = associative_normal_form(zeros(3, 3));
    CHECK(z.lambda == std::array<double, 3>{0, 0, 0});
    double r3 = std::sqrt(3.0);
    Mat j = zeros(3, 3);
    for (std::size_t i = 0; i < 3; ++i) j[i][i] = r3;
    auto nf = associative_normal_form(j);
    for (double x : nf.lambda) CHECK(x == doctest::Approx(r3));
    CHECK(nf.component == Component::CGplus);

    Mat anti = {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}};
    CHECK_THROWS_AS(associative_normal_form(anti), Error);

    std::mt19937_64 g(9);
    for (int t = 0; t < 50; ++t) {
        Mat r = random_so(g, 3);
        std::vector<double> l = {0.3, -0.7, lift3(0.3, -0.7)};
        Mat dl = zeros(3, 3);
        for (std::size_t i = 0; i < 3; ++i) dl[i][i] = l[i];
        auto nf2 = associative_normal_form(matmul(matmul(r, dl), transpose(r)));
        std::vector<double> got(nf2.lambda.begin(), nf2.lambda.end());
        check_same_up_to_sign(got, l, 1e-10);
    }
}

TEST_CASE("Cayley normal form") {
    auto z = cayley_normal_form(zeros(4, 4));
    CHECK(z.component == Component::CS0);
    for (double x : z.lambda) CHECK(x == 0.0);

    auto id = cayley_normal_form(identity(4));
    for (double x : id.lambda) CHECK(x == doctest::Approx(1.0));
    CHECK(id.component == Component::CSplus);

    Mat d = zeros(4, 4);
    for (std::size_t i = 0; i < 4; ++i) d[i][i] = static_cast<double>(i);
    auto nf = cayley_normal_form(d);
    CHECK(nf.lambda[0] == doctest::Approx(3));
    CHECK(nf.lambda[1] == doctest::Approx(2));
    CHECK(nf.lambda[2] == doctest::Approx(1));
    CHECK(std::fabs(nf.lambda[3]) < 1e-12);
    CHECK(nf.component == Component::CSplus);

    Mat bad = identity(4);
    bad[0][0] = 2;
    CHECK_THROWS_AS(cayley_normal_form(bad), Error);
}

TEST_CASE("Cayley normal form round trip") {
    std::mt19937_64 g(10);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::normal_distribution<double> nd;
    for (int t = 0; t < 200; ++t) {
        double a = u(g), b = u(g), c = u(g);
        double s2 = a * b + a * c + b * c;
        if (std::fabs(s2 - 1) < 0.05) continue;
        std::vector<double> l = {lift4(a, b, c), a, b, c};
        if (std::fabs(l[0]) > 50) continue;
        Mat dl = zeros(4, 4);
        for (std::size_t i = 0; i < 4; ++i) dl[i][i] = l[i];
        Mat r = random_so(g, 4);
        Mat ox = su2_align({nd(g), nd(g), nd(g), nd(g)}), oy = su2_align({nd(g), nd(g), nd(g), nd(g)});
        Mat j = matmul(matmul(oy, matmul(matmul(r, dl), transpose(r))), transpose(ox));
        auto nf = cayley_normal_form(j);
        std::vector<double> got(nf.lambda.begin(), nf.lambda.end());
        check_same_up_to_sign(got, l, 1e-8);
    }
}

TEST_CASE("Lawson-Osserman map") {
    auto p = lawson_osserman({1, 0, 0, 0});
    CHECK(p.f[0] == doctest::Approx(std::sqrt(5.0) / 2));
    CHECK(p.f[1] == 0.0);
    CHECK(p.f[2] == 0.0);
    CHECK_THROWS_AS(lawson_osserman({0, 0, 0, 0}), Error);

    std::mt19937_64 g(12);
    std::normal_distribution<double> nd;
    for (int t = 0; t < 200; ++t) {
        std::vector<double> x = {nd(g), nd(g), nd(g), nd(g)};
        auto q = lawson_osserman(x);
        double nx = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3]);
        double nf = std::sqrt(q.f[0] * q.f[0] + q.f[1] * q.f[1] + q.f[2] * q.f[2]);
        CHECK(nf == doctest::Approx(std::sqrt(5.0) / 2 * nx));
        auto m = lawson_osserman({-x[0], -x[1], -x[2], -x[3]});
        for (std::size_t i = 0; i < 3; ++i) CHECK(m.f[i] == doctest::Approx(q.f[i]));
        double h = 1e-6, worst = 0;
        for (std::size_t a = 0; a < 4; ++a) {
            auto xp = x, xm = x;
            xp[a] += h;
            xm[a] -= h;
            auto fp = lawson_osserman(xp).f, fm = lawson_osserman(xm).f;
            for (std::size_t i = 0; i < 3; ++i) worst = std::max(worst, std::fabs((fp[i] - fm[i]) / (2 * h) - q.jac[i][a]));
        }
        CHECK(worst < 1e-8);
        CalPlane<double> plane{PlaneKind::coassociative, coass_graph_span(q.jac)};
        auto res = is_calibrated(plane);
        CHECK(res.calibrated);
        CHECK(res.sign == -1);
    }
}

TEST_CASE("Jacobi eigen and svd") {
    Mat a = {{2, 1, 0}, {1, 2, 0}, {0, 0, 5}};
    auto e = jacobi_eigen(a);
    CHECK(e.values[0] == doctest::Approx(1));
    CHECK(e.values[1] == doctest::Approx(3));
    CHECK(e.values[2] == doctest::Approx(5));
    Mat m = {{3, 0, 0, 0}, {0, 0, 0, 2}, {0, 0, -1, 0}};
    auto s = svd_small(m);
    CHECK(s.s[0] == doctest::Approx(3));
    CHECK(s.s[1] == doctest::Approx(2));
    CHECK(s.s[2] == doctest::Approx(1));
    Mat sig = zeros(3, 4);
    for (std::size_t i = 0; i < 3; ++i) sig[i][i] = s.s[i];
    CHECK(max_abs_diff(matmul(matmul(s.u, sig), transpose(s.v)), m) < 1e-12);
}
