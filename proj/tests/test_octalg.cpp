#include "doctest.h"

#include "calib/mpoly.hpp"
#include "calib/octalg.hpp"

#include <random>

using namespace calib;

namespace {

Vec<QuadExt> E(int n, int i) { return basis_vec<QuadExt>(n, i); }

Vec<QuadExt> rand_vec(std::mt19937_64& g, int n) {
    std::uniform_int_distribution<long> num(-20, 20), den(1, 7);
    Vec<QuadExt> v;
    for (int i = 0; i < n; ++i) v.push_back(QuadExt(Rat(num(g), den(g))));
    return v;
}

std::vector<double> random_cg0(std::mt19937_64& g) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double l1 = u(g), l2 = u(g);
    return {l1, l2, (l1 + l2) / (l1 * l2 - 1)};
}

}  // namespace

TEST_CASE("form tables") {
    std::map<std::vector<int>, QuadExt> phi{{{4, 5, 6}, 1},  {{0, 1, 4}, -1}, {{2, 3, 4}, -1}, {{0, 2, 5}, -1},
                                            {{1, 3, 5}, 1},  {{0, 3, 6}, -1}, {{1, 2, 6}, -1}};
    CHECK(phi_form().coeffs() == phi);
    std::map<std::vector<int>, QuadExt> psi{{{0, 1, 2, 3}, 1},  {{0, 1, 5, 6}, -1}, {{2, 3, 5, 6}, -1},
                                            {{0, 2, 4, 6}, 1},  {{1, 3, 4, 6}, -1}, {{0, 3, 4, 5}, -1},
                                            {{1, 2, 4, 5}, -1}};
    CHECK(psi_form().coeffs() == psi);
    CHECK(cayley_form().coeffs().size() == 14);
    CHECK(cayley_form().coeff({0, 1, 2, 3}) == QuadExt(1));
    CHECK(cayley_form().coeff({4, 5, 6, 7}) == QuadExt(1));
    CHECK(cayley_form().coeff({0, 1, 4, 5}) == QuadExt(-1));
    CHECK(cayley_form().coeff({1, 0, 4, 5}) == QuadExt(1));
    // every coefficient of the Cayley form is +-1
    for (const auto& [idx, c] : cayley_form().coeffs()) CHECK((c == QuadExt(1) || c == QuadExt(-1)));
}

TEST_CASE("form algebra") {
    FormTable a = dform(7, "x0") ^ dform(7, "x1");
    CHECK((dform(7, "x1") ^ dform(7, "x0")) == -a);
    CHECK((a ^ dform(7, "x0")).coeffs().empty());
    CHECK(a.contract(E(7, 1)) == -dform(7, "x0"));
    CHECK(a.str(coord_names(7)) == "dx0^dx1");
    CHECK_THROWS_AS(dform(7, "y0"), Error);
}

TEST_CASE("cross product") {
    CHECK(cross7(E(7, 0), E(7, 1)) == [] { auto v = E(7, 4); v[4] = QuadExt(-1); return v; }());
    auto u = Vec<QuadExt>{1, 2, 3, 4, 5, 6, 7};
    for (const auto& x : cross7(u, u)) CHECK(x.is_zero());
    auto f = calibrated_frame_exact(PlaneKind::coassociative, {0, 0, 0}, 1).vectors;
    CHECK(cross7(f[4], f[1]) == f[0]);
    CHECK_THROWS_AS(cross7(E(8, 0), E(8, 1)), Error);
}

TEST_CASE("associator") {
    auto a = associator(E(7, 1), E(7, 2), E(7, 3));
    auto want = E(7, 0);
    want[0] = QuadExt(2);
    CHECK(a == want);
    for (const auto& x : associator(E(7, 4), E(7, 5), E(7, 6))) CHECK(x.is_zero());
    auto u = Vec<QuadExt>{1, -2, 0, 3, 1, 1, 5}, v = Vec<QuadExt>{0, 1, 1, 0, 2, -1, 1};
    for (const auto& x : associator(u, u, v)) CHECK(x.is_zero());
}

TEST_CASE("triple cross product") {
    CHECK(triple_cross8(E(8, 1), E(8, 2), E(8, 3)) == E(8, 0));
    auto u = Vec<QuadExt>{1, -2, 0, 3, 1, 1, 5, 2}, v = Vec<QuadExt>{0, 1, 1, 0, 2, -1, 1, 0};
    for (const auto& x : triple_cross8(u, u, v)) CHECK(x.is_zero());
    auto f = calibrated_frame_exact(PlaneKind::cayley, {0, 0, 0, 0}).vectors;
    CHECK(triple_cross8(f[5], f[6], f[7]) == f[4]);
}

TEST_CASE("calibration predicates") {
    auto r = is_calibrated(CalPlane<QuadExt>{PlaneKind::coassociative, {E(7, 0), E(7, 1), E(7, 2), E(7, 3)}});
    CHECK(r.calibrated);
    CHECK(r.sign == 1);
    auto n = is_calibrated(CalPlane<QuadExt>{PlaneKind::coassociative, {E(7, 0), E(7, 1), E(7, 2), E(7, 6)}});
    CHECK_FALSE(n.calibrated);
    auto flipped = is_calibrated(CalPlane<QuadExt>{PlaneKind::coassociative, {E(7, 1), E(7, 0), E(7, 2), E(7, 3)}});
    CHECK(flipped.sign == -1);
    CHECK(is_calibrated(CalPlane<QuadExt>{PlaneKind::associative, {E(7, 4), E(7, 5), E(7, 6)}}).calibrated);
    CHECK(is_calibrated(CalPlane<QuadExt>{PlaneKind::cayley, {E(8, 0), E(8, 1), E(8, 2), E(8, 3)}}).calibrated);
    CHECK_FALSE(is_calibrated(CalPlane<QuadExt>{PlaneKind::cayley, {E(8, 0), E(8, 1), E(8, 2), E(8, 4)}}).calibrated);
    CHECK_THROWS_AS(is_calibrated(CalPlane<QuadExt>{PlaneKind::coassociative, {E(7, 0), E(7, 1), E(7, 2), E(7, 2)}}), Error);
    CHECK_THROWS_AS(is_calibrated(CalPlane<double>{PlaneKind::coassociative, {basis_vec<double>(7, 0), basis_vec<double>(7, 1), basis_vec<double>(7, 2), basis_vec<double>(7, 2)}}), Error);
}

TEST_CASE("the two coassociative characterizations agree") {
    std::mt19937_64 g(4);
    std::normal_distribution<double> nd;
    for (int it = 0; it < 200; ++it) {
        std::vector<Vec<double>> span;
        if (it % 2 == 0) {
            auto f = calibrated_frame(PlaneKind::coassociative, random_cg0(g), 1);
            // mix the tangent vectors by a random invertible matrix
            for (int a = 0; a < 4; ++a) {
                Vec<double> v(7, 0.0);
                for (int b = 0; b < 4; ++b) {
                    double c = nd(g) + (a == b ? 3.0 : 0.0);
                    for (int i = 0; i < 7; ++i) v[static_cast<std::size_t>(i)] += c * f[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)];
                }
                span.push_back(v);
            }
        } else {
            for (int a = 0; a < 4; ++a) {
                Vec<double> v;
                for (int i = 0; i < 7; ++i) v.push_back(nd(g));
                span.push_back(v);
            }
        }
        auto r = is_calibrated(CalPlane<double>{PlaneKind::coassociative, span});
        double psi = std::fabs(evaluate<double>(psi_form(), orthonormalize(span)));
        CHECK(r.calibrated == (std::fabs(psi - 1.0) <= 1e-9));
    }
}

TEST_CASE("cross product identities on random rational pairs") {
    std::mt19937_64 g(8);
    for (int it = 0; it < 10000; ++it) {
        auto u = rand_vec(g, 7), v = rand_vec(g, 7);
        auto w = cross7(u, v);
        REQUIRE(dot(w, u).is_zero());
        REQUIRE(dot(w, v).is_zero());
        REQUIRE(dot(w, w) == dot(u, u) * dot(v, v) - dot(u, v) * dot(u, v));
    }
}

TEST_CASE("adapted frames") {
    auto std7 = calibrated_frame(PlaneKind::coassociative, {0, 0, 0}, 1);
    for (int i = 0; i < 7; ++i) CHECK(std7[static_cast<std::size_t>(i)] == basis_vec<double>(7, i));
    double r3 = std::sqrt(3.0);
    CHECK(basis_check(FrameKind::g2, calibrated_frame(PlaneKind::coassociative, {r3, r3, r3}, -1)).ok);
    CHECK_FALSE(basis_check(FrameKind::g2, calibrated_frame(PlaneKind::coassociative, {r3, r3, r3}, 1)).ok);
    auto c8 = calibrated_frame(PlaneKind::cayley, {0, 0, 0, 0});
    CHECK(evaluate<double>(cayley_form(), {c8[0], c8[1], c8[2], c8[3]}) == doctest::Approx(1.0));
    CHECK_THROWS_AS(calibrated_frame(PlaneKind::coassociative, {1, 0, 0}), Error);
    CHECK_THROWS_AS(calibrated_frame(PlaneKind::cayley, {1, 1, 1, 1}), Error);
    QuadExt s3 = QuadExt::sqrt_int(3);
    auto ex = calibrated_frame_exact(PlaneKind::coassociative, {s3, s3, s3}, -1);
    CHECK(ex.squared_norms[1] == QuadExt(4));
}

TEST_CASE("basis check") {
    std::vector<Vec<double>> f;
    for (int i = 0; i < 7; ++i) f.push_back(basis_vec<double>(7, i));
    auto ok = basis_check(FrameKind::g2, f);
    CHECK(ok.ok);
    CHECK(ok.relations == 21);
    f[0][0] = -1;
    auto bad = basis_check(FrameKind::g2, f);
    CHECK_FALSE(bad.ok);
    bool found = false;
    for (const auto& v : bad.violations)
        if (v.inputs == std::vector<int>{1, 4} && v.target == 0) found = true;
    CHECK(found);
    f[0][0] = 2;
    CHECK_THROWS_AS(basis_check(FrameKind::g2, f), Error);
    std::vector<Vec<QuadExt>> e8;
    for (int i = 0; i < 8; ++i) e8.push_back(E(8, i));
    auto s = basis_check(FrameKind::spin7, e8);
    CHECK(s.ok);
    CHECK(s.relations == 56);
}

TEST_CASE("random CG0 and CS0 frames pass") {
    std::mt19937_64 g(12);
    for (int it = 0; it < 100; ++it) REQUIRE(basis_check(FrameKind::g2, calibrated_frame(PlaneKind::coassociative, random_cg0(g), 1)).ok);
}

TEST_CASE("frame coefficient identity modulo the locus") {
    RatFunc l3(MPoly::parse("l1 + l2"), MPoly::parse("l1*l2 - 1"));
    MPoly id = MPoly::parse("(-1 + l2*l3)^2*(1 + l1^2) - (1 + l2^2)*(1 + l3^2)");
    CHECK(substitute(id, "l3", l3).num().is_zero());
}

TEST_CASE("special Lagrangian reductions") {
    CHECK(slag_reduction(SlagIdentity::coass_x0).holds);
    CHECK(slag_reduction(SlagIdentity::cayley_assoc).holds);
    for (Rat l : {Rat(0), Rat(3, 2), Rat(-2), Rat(7, 3)}) {
        CHECK(slag_reduction(SlagIdentity::coass_phase, l).holds);
        CHECK(slag_reduction(SlagIdentity::cayley_phase, l).holds);
    }
    auto r = slag_reduction(SlagIdentity::coass_x0);
    CHECK(r.lhs.str(coord_names(7)) == "dx1^dx2^dx3 - dx1^dy2^dy3 + dx2^dy1^dy3 - dx3^dy1^dy2");
    CHECK_THROWS_AS(parse_slag_identity("nope"), Error);
}
