#include "doctest.h"

#include "calib/catalog.hpp"
#include "calib/curvforms.hpp"
#include "calib/linalg.hpp"
#include "calib/normalform.hpp"

#include <cmath>
#include <random>

using namespace calib;

namespace {

MPoly V(const std::string& n) { return MPoly::var(n); }

Mat numeric(const PolyMatrix& m, const std::map<std::string, double>& at) {
    Mat out = zeros(m.size(), m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = m[i][j].eval_double(at);
    return out;
}

PolyMatrix at_values(QuadFormKind k, const std::vector<Rat>& v) {
    std::vector<MPoly> args;
    for (const auto& x : v) args.push_back(MPoly(x));
    return build_quadform(k, args);
}

}  // namespace

TEST_CASE("constraint space dimensions") {
    auto c = sff_constraint_space(SffKind::coassociative);
    CHECK(c.unknowns.size() == 30);
    CHECK(c.relations.size() == 16);
    CHECK(c.rank == 15);
    CHECK(c.dimension() == 15);
    auto k = sff_constraint_space(SffKind::cayley);
    CHECK(k.unknowns.size() == 40);
    CHECK(k.rank == 16);
    CHECK(k.dimension() == 24);
    auto a = sff_constraint_space(SffKind::associative);
    CHECK(a.unknowns.size() == 24);
    CHECK(a.relations.size() == 12);
    CHECK(a.dimension() == 24 - a.rank);

    // one of the 16 coassociative relations is redundant
    int dependent = 0;
    for (std::size_t r = 0; r < 16; ++r) {
        auto rep = constraint_space_without(SffKind::coassociative, r);
        CHECK((rep.dimension == 15 || rep.dimension == 16));
        CHECK(rep.independent == (rep.dimension == 16));
        if (!rep.independent) ++dependent;
    }
    CHECK(dependent > 0);
    CHECK_THROWS_AS(constraint_space_without(SffKind::cayley, 16), Error);

    for (const auto& v : c.kernel) {
        for (const auto& row : c.relations) {
            Rat s(0);
            for (std::size_t i = 0; i < row.size(); ++i) s = s + row[i] * v[i];
            CHECK(s.is_zero());
        }
    }
}

TEST_CASE("group dependents") {
    GroupedVec g = {{MPoly(1), MPoly(0), MPoly(0)},
                    {MPoly(0), MPoly(0), MPoly(0), MPoly(0)},
                    {MPoly(0), MPoly(0), MPoly(0), MPoly(0)},
                    {MPoly(0), MPoly(0), MPoly(0), MPoly(0)}};
    auto t = group_dependents(SffKind::coassociative, g);
    CHECK(t.h(4, 2, 3) == MPoly(1));
    CHECK(t.h(5, 0, 2) == MPoly(1));
    CHECK(t.h(6, 0, 3) == MPoly(-1));
    int nonzero = 0;
    for (int a = 4; a <= 6; ++a)
        for (int i = 0; i < 4; ++i)
            for (int j = i; j < 4; ++j)
                if (!t.h(a, i, j).is_zero()) ++nonzero;
    CHECK(nonzero == 3);

    for (auto kind : {SffKind::coassociative, SffKind::cayley}) {
        auto sym = grouped_symbols(kind);
        for (const auto& r : group_dependents(kind, sym).relation_values()) CHECK(r.is_zero());
        GroupedVec zero = sym;
        for (auto& grp : zero)
            for (auto& x : grp) x = MPoly(0);
        for (const auto& r : group_dependents(kind, zero).relation_values()) CHECK(r.is_zero());
    }

    std::mt19937_64 rng(2);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int n = 0; n < 20; ++n) {
        auto sym = grouped_symbols(SffKind::cayley);
        for (auto& grp : sym)
            for (auto& x : grp) x = MPoly(Rat(d(rng), 1 + std::abs(d(rng))));
        for (const auto& r : group_dependents(SffKind::cayley, sym).relation_values()) CHECK(r.is_zero());
    }
    auto h5 = grouped_symbols(SffKind::cayley)[1];
    CHECK(h5[3] == -V("h612"));
    CHECK(h5[5] == -V("h401"));
}

TEST_CASE("quadratic form matrices") {
    auto l0 = at_values(QuadFormKind::L0, {0, 0, 0});
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(l0[i][j] == MPoly(i == j ? 6 : -2));
    auto l = at_values(QuadFormKind::L, {0, 0, 0});
    std::vector<std::vector<int>> want = {{4, 0, -1, 1}, {0, 4, -1, 1}, {-1, -1, 4, 0}, {1, 1, 0, 4}};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(l[i][j] == MPoly(want[i][j]));
    auto m = at_values(QuadFormKind::M, {0, 0, 0, 0});
    std::vector<int> row = {4, -1, -1, 0, -1, 1};
    for (std::size_t j = 0; j < 6; ++j) CHECK(m[0][j] == MPoly(row[j]));
    CHECK_THROWS_AS(build_quadform(QuadFormKind::M, {V("a"), V("b"), V("c")}), Error);
    CHECK_THROWS_AS(build_quadform(QuadFormKind::L, {V("a")}), Error);

    auto sym = build_quadform(QuadFormKind::M, {V("e"), V("l"), V("m"), V("n")});
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) CHECK(sym[i][j] == sym[j][i]);

    // independent cofactor oracles
    CHECK(det_cofactor(l0) == MPoly(128));
    CHECK(det_cofactor(m) == MPoly(1728));
    auto e0 = jacobi_eigen(numeric(l0, {}));
    CHECK(e0.values[0] == doctest::Approx(2));
    CHECK(e0.values[1] == doctest::Approx(8));
    CHECK(e0.values[2] == doctest::Approx(8));
    CHECK(jacobi_eigen(numeric(l, {})).values[0] > 0);
}

TEST_CASE("forms at the symmetric CG+ point are semi-definite") {
    double r3 = std::sqrt(3.0);
    for (double sg : {1.0, -1.0}) {
        double x = sg * r3;
        std::map<std::string, double> at = {{"a", x}, {"b", x}, {"c", x}};
        auto l0 = numeric(build_quadform(QuadFormKind::L0, {V("a"), V("b"), V("c")}), at);
        CHECK(jacobi_eigen(l0).values[0] >= -1e-9);
        auto l = numeric(build_quadform(QuadFormKind::L, {V("a"), V("b"), V("c")}), at);
        CHECK(jacobi_eigen(l).values[0] >= -1e-9);
    }
}

TEST_CASE("laplacian quadratic form identities") {
    CHECK(laplacian_quadform_identity(SffKind::coassociative));
    CHECK(laplacian_quadform_identity(SffKind::cayley));
    auto g = grouped_symbols(SffKind::coassociative);
    auto t = group_dependents(SffKind::coassociative, g);
    MPoly sq(0);
    for (int a = 4; a <= 6; ++a)
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) sq = sq + t.h(a, i, j) * t.h(a, i, j);
    CHECK(laplacian_blocks(SffKind::coassociative, g, {MPoly(0), MPoly(0), MPoly(0)}) == sq);
}

TEST_CASE("Wang specialization") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    auto h0 = random_constrained_sff(SffKind::coassociative, rng);
    CHECK(wang_specialization_check(SffKind::coassociative, {0, 0, 0}, h0) <= 1e-9);
    for (int n = 0; n < 100; ++n) {
        double a = u(rng), b = u(rng);
        std::vector<double> l = {a, b, lift3(a, b)};
        if (std::fabs(l[2]) > 20) continue;
        auto h = random_constrained_sff(SffKind::coassociative, rng);
        CHECK(wang_specialization_check(SffKind::coassociative, l, h) <= 1e-9);
    }
    double r3 = std::sqrt(3.0);
    CHECK(wang_specialization_check(SffKind::coassociative, {r3, r3, r3},
                                    random_constrained_sff(SffKind::coassociative, rng)) <= 1e-9);
    for (int n = 0; n < 100; ++n) {
        double a = u(rng) * 0.5, b = u(rng) * 0.5, c = u(rng) * 0.5;
        std::vector<double> l = {lift4(a, b, c), a, b, c};
        auto h = random_constrained_sff(SffKind::cayley, rng);
        CHECK(wang_specialization_check(SffKind::cayley, l, h) <= 1e-9);
    }
    CHECK_THROWS_AS(wang_specialization_check(SffKind::coassociative, {1, 2, 4}, h0), Error);
}

TEST_CASE("determinant identities for the coassociative forms") {
    for (const auto& r : det_identity_suite(SffKind::coassociative)) {
        INFO(r.id << ": " << r.detail);
        CHECK(r.holds);
    }
    // at the origin both sides of the first identity are 128
    MPoly rhs = catalog::det_L0_sigma().substitute({{"sigma1", MPoly(0)}, {"sigma2", MPoly(0)}});
    CHECK(rhs == MPoly(128));
}

TEST_CASE("Cayley determinant reduction") {
    auto checks = det_identity_suite(SffKind::cayley);
    REQUIRE(checks.size() == 2);
    CHECK(checks[1].id == "disc_g");
    CHECK(checks[1].holds);
    // the reduced determinant differs from the displayed f in the s1 s2 coefficient only
    MPoly diff = det_M_reduced() - catalog::f_cayley();
    CHECK(diff == V("w").pow(5) * V("s1") * V("s2"));
    CHECK_FALSE(checks[0].holds);
    CHECK(det_M_reduced().substitute({{"s1", MPoly(0)}, {"s2", MPoly(0)}, {"w", MPoly(0)}}) == MPoly(432));
    MPoly v = V("v");
    MPoly sharp = det_M_reduced().substitute({{"s1", MPoly(0)}, {"s2", -v}, {"w", MPoly(0)}});
    CHECK(sharp == MPoly(4) * (MPoly(3) + v) * (MPoly(6) + v) * (MPoly(6) - v * v));
}
