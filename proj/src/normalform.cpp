#include "calib/normalform.hpp"

#include "calib/octalg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>

namespace calib {

std::string to_string(Component c) {
    switch (c) {
        case Component::CG0: return "CG0";
        case Component::CGplus: return "CG+";
        case Component::CGminus: return "CG-";
        case Component::CS0: return "CS0";
        case Component::CSplus: return "CS+";
        case Component::CSminus: return "CS-";
    }
    return "?";
}

QuadExt lift3(const QuadExt& l1, const QuadExt& l2) {
    QuadExt den = l1 * l2 - QuadExt(1);
    if (den.is_zero()) throw Error("lift3: l1 l2 = 1");
    return (l1 + l2) / den;
}

double lift3(double l1, double l2) {
    double den = l1 * l2 - 1;
    if (den == 0.0) throw Error("lift3: l1 l2 = 1");
    return (l1 + l2) / den;
}

template <class S>
static std::vector<S> elem(const std::vector<S>& l) {
    std::vector<S> e(l.size() + 1, S(0));
    e[0] = S(1);
    for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t k = i + 1; k >= 1; --k) e[k] = e[k] + e[k - 1] * l[i];
    return e;
}

std::vector<double> elementary_values(const std::vector<double>& l) { return elem(l); }
std::vector<QuadExt> elementary_values(const std::vector<QuadExt>& l) { return elem(l); }

QuadExt lift4(const QuadExt& l1, const QuadExt& l2, const QuadExt& l3) {
    auto e = elem<QuadExt>({l1, l2, l3});
    QuadExt den = e[2] - QuadExt(1);
    if (den.is_zero()) throw Error("lift4: s2 = 1");
    return (e[1] - e[3]) / den;
}

double lift4(double l1, double l2, double l3) {
    auto e = elem<double>({l1, l2, l3});
    double den = e[2] - 1;
    if (den == 0.0) throw Error("lift4: s2 = 1");
    return (e[1] - e[3]) / den;
}

namespace {

// cmp(x, y) returns the sign of x - y with the given slack.
template <class S>
Component classify_impl(const std::vector<S>& l, const std::function<int(const S&, const S&)>& cmp) {
    auto e = elem(l);
    if (l.size() == 3) {
        if (cmp(e[1], e[3]) != 0) throw Error("classify: off the locus s1 = s3");
        std::vector<S> prods = {l[0] * l[1], l[0] * l[2], l[1] * l[2]};
        bool all_lt = std::all_of(prods.begin(), prods.end(), [&](const S& p) { return cmp(p, S(1)) < 0; });
        bool all_gt = std::all_of(prods.begin(), prods.end(), [&](const S& p) { return cmp(p, S(1)) > 0; });
        if (all_lt) return Component::CG0;
        if (all_gt) {
            if (std::all_of(l.begin(), l.end(), [&](const S& x) { return cmp(x, S(0)) > 0; })) return Component::CGplus;
            if (std::all_of(l.begin(), l.end(), [&](const S& x) { return cmp(x, S(0)) < 0; })) return Component::CGminus;
        }
        throw Error("classify: triple lies in no component");
    }
    if (l.size() == 4) {
        if (cmp(e[1], e[3]) != 0) throw Error("classify: off the locus s1 = s3");
        std::vector<S> partial;
        for (std::size_t i = 0; i < 4; ++i) {
            std::vector<S> rest;
            for (std::size_t k = 0; k < 4; ++k)
                if (k != i) rest.push_back(l[k]);
            partial.push_back(elem(rest)[2]);
        }
        if (std::all_of(partial.begin(), partial.end(), [&](const S& p) { return cmp(p, S(1)) < 0; }))
            return Component::CS0;
        if (std::all_of(partial.begin(), partial.end(), [&](const S& p) { return cmp(p, S(1)) > 0; })) {
            if (cmp(e[1], S(4)) >= 0) return Component::CSplus;
            if (cmp(e[1], S(-4)) <= 0) return Component::CSminus;
        }
        throw Error("classify: quadruple lies in no component");
    }
    throw Error("classify: need 3 or 4 values");
}

}  // namespace

Component classify(const std::vector<double>& lambda, double tol) {
    std::function<int(const double&, const double&)> cmp = [tol](const double& x, const double& y) {
        double d = x - y;
        if (std::fabs(d) <= tol * (1 + std::fabs(x) + std::fabs(y))) return 0;
        return d > 0 ? 1 : -1;
    };
    return classify_impl(lambda, cmp);
}

Component classify(const std::vector<QuadExt>& lambda) {
    std::function<int(const QuadExt&, const QuadExt&)> cmp = [](const QuadExt& x, const QuadExt& y) {
        return (x - y).sign();
    };
    return classify_impl(lambda, cmp);
}

static void check_shape(const Mat& j, std::size_t r, std::size_t c, const char* what) {
    if (j.size() != r) throw Error(std::string(what) + ": wrong number of rows");
    for (const auto& row : j)
        if (row.size() != c) throw Error(std::string(what) + ": wrong number of columns");
}

std::vector<std::vector<double>> coass_graph_span(const Mat& j) {
    check_shape(j, 3, 4, "coassociative graph");
    std::vector<std::vector<double>> span;
    for (int a = 0; a < 4; ++a) {
        std::vector<double> v(7, 0.0);
        v[static_cast<std::size_t>(a)] = 1.0;
        for (int i = 0; i < 3; ++i) v[static_cast<std::size_t>(4 + i)] = j[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)];
        span.push_back(v);
    }
    return span;
}

std::vector<std::vector<double>> associative_graph_span(const Mat& j) {
    check_shape(j, 3, 3, "associative graph");
    std::vector<std::vector<double>> span;
    for (std::size_t i = 0; i < 3; ++i) {
        std::vector<double> v(7, 0.0);
        v[4 + i] = 1.0;
        for (std::size_t r = 0; r < 3; ++r) v[1 + r] = j[r][i];
        span.push_back(v);
    }
    return span;
}

std::vector<std::vector<double>> cayley_graph_span(const Mat& j) {
    check_shape(j, 4, 4, "Cayley graph");
    std::vector<std::vector<double>> span;
    for (std::size_t a = 0; a < 4; ++a) {
        std::vector<double> v(8, 0.0);
        v[a] = 1.0;
        for (std::size_t i = 0; i < 4; ++i) v[4 + i] = j[i][a];
        span.push_back(v);
    }
    return span;
}

// w^1 = dx01 + dx23, w^2 = dx02 + dx31, w^3 = dx03 + dx12 as antisymmetric matrices.
static Mat self_dual_matrix(int i) {
    static const int pairs[3][2][2] = {{{0, 1}, {2, 3}}, {{0, 2}, {3, 1}}, {{0, 3}, {1, 2}}};
    Mat w = zeros(4, 4);
    for (const auto& p : pairs[i]) {
        w[static_cast<std::size_t>(p[0])][static_cast<std::size_t>(p[1])] = 1.0;
        w[static_cast<std::size_t>(p[1])][static_cast<std::size_t>(p[0])] = -1.0;
    }
    return w;
}

Mat self_dual_action(const Mat& g) {
    check_shape(g, 4, 4, "self_dual_action");
    Mat a = zeros(3, 3);
    for (int i = 0; i < 3; ++i) {
        Mat pulled = matmul(matmul(transpose(g), self_dual_matrix(i)), g);
        for (int k = 0; k < 3; ++k) {
            Mat w = self_dual_matrix(k);
            double ip = 0;
            for (std::size_t r = 0; r < 4; ++r)
                for (std::size_t c = 0; c < 4; ++c) ip += pulled[r][c] * w[r][c];
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = ip / 4.0;
        }
    }
    return a;
}

using Cx = std::complex<double>;
using Quat = std::array<std::array<Cx, 2>, 2>;

static Quat quat_matrix(const std::vector<double>& x) {
    return {{{Cx(x[0], x[1]), Cx(-x[2], x[3])}, {Cx(x[2], x[3]), Cx(x[0], -x[1])}}};
}

Mat su2_align(const std::vector<double>& v) {
    if (v.size() != 4) throw Error("su2_align needs a vector in R^4");
    double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]);
    if (n == 0.0) throw Error("su2_align: zero vector");
    std::vector<double> u = {v[0] / n, v[1] / n, v[2] / n, v[3] / n};
    Quat x = quat_matrix(u);
    Quat h{};
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) h[r][c] = std::conj(x[c][r]);
    Mat o = zeros(4, 4);
    for (int k = 0; k < 4; ++k) {
        std::vector<double> e(4, 0.0);
        e[static_cast<std::size_t>(k)] = 1.0;
        Quat q = quat_matrix(e);
        Cx m00 = h[0][0] * q[0][0] + h[0][1] * q[1][0];
        Cx m10 = h[1][0] * q[0][0] + h[1][1] * q[1][0];
        o[0][static_cast<std::size_t>(k)] = m00.real();
        o[1][static_cast<std::size_t>(k)] = m00.imag();
        o[2][static_cast<std::size_t>(k)] = m10.real();
        o[3][static_cast<std::size_t>(k)] = m10.imag();
    }
    return o;
}

namespace {

// Eigenvalues of the symmetric part, descending, with a global sign making the
// largest-magnitude entry positive.
template <std::size_t N>
std::array<double, N> canonical(std::vector<double> vals) {
    std::sort(vals.begin(), vals.end(), std::greater<>());
    double big = 0;
    for (double x : vals)
        if (std::fabs(x) > std::fabs(big) + 1e-12) big = x;
    if (big < 0) {
        for (auto& x : vals) x = -x;
        std::sort(vals.begin(), vals.end(), std::greater<>());
    }
    std::array<double, N> out{};
    std::copy(vals.begin(), vals.end(), out.begin());
    return out;
}

double asym(const Mat& b) {
    double m = 0;
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) m = std::max(m, std::fabs(b[i][k] - b[k][i]));
    return m;
}

Mat sym_part(const Mat& b) {
    Mat s = b;
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) s[i][k] = 0.5 * (b[i][k] + b[k][i]);
    return s;
}

double scale_of(const Mat& j) {
    double m = 1;
    for (const auto& r : j)
        for (double x : r) m = std::max(m, std::fabs(x));
    return m;
}

}  // namespace

SingularTriple coass_normal_form(const Mat& j, double tol) {
    check_shape(j, 3, 4, "coass_normal_form");
    CalPlane<double> plane{PlaneKind::coassociative, coass_graph_span(j)};
    if (!is_calibrated(plane, tol).calibrated) throw Error("coass_normal_form: graph is not coassociative");

    // kernel direction of J, then g in SO(4) with g v = e0
    auto eig = jacobi_eigen(matmul(transpose(j), j));
    std::vector<double> v(4);
    for (std::size_t k = 0; k < 4; ++k) v[k] = eig.vectors[k][0];
    std::vector<double> w = v;
    w[0] -= 1.0;
    double wn = w[0] * w[0] + w[1] * w[1] + w[2] * w[2] + w[3] * w[3];
    Mat g = identity(4);
    if (wn > 1e-24)
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) g[r][c] -= 2 * w[r] * w[c] / wn;
    if (wn > 1e-24)
        for (std::size_t c = 0; c < 4; ++c) g[1][c] = -g[1][c];

    Mat jp = matmul(matmul(self_dual_action(g), j), transpose(g));
    Mat b = zeros(3, 3);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) b[r][c] = jp[r][c + 1];

    SingularTriple out;
    out.symmetry_residual = asym(b);
    if (out.symmetry_residual > 1e-6 * scale_of(j)) throw Error("coass_normal_form: reduced block is not symmetric");
    out.lambda = canonical<3>(jacobi_eigen(sym_part(b)).values);
    std::vector<double> l(out.lambda.begin(), out.lambda.end());
    auto e = elem(l);
    out.locus_residual = std::fabs(e[1] - e[3]);
    out.component = classify(l, 1e-8);
    return out;
}

SingularTriple associative_normal_form(const Mat& j, double tol) {
    check_shape(j, 3, 3, "associative_normal_form");
    CalPlane<double> plane{PlaneKind::associative, associative_graph_span(j)};
    if (!is_calibrated(plane, tol).calibrated) throw Error("associative_normal_form: graph is not associative");
    Mat b = transpose(j);
    SingularTriple out;
    out.symmetry_residual = asym(b);
    if (out.symmetry_residual > 1e-6 * scale_of(j)) throw Error("associative_normal_form: B is not symmetric");
    out.lambda = canonical<3>(jacobi_eigen(sym_part(b)).values);
    std::vector<double> l(out.lambda.begin(), out.lambda.end());
    auto e = elem(l);
    out.locus_residual = std::fabs(e[1] - e[3]);
    out.component = classify(l, 1e-8);
    return out;
}

SingularQuad cayley_normal_form(const Mat& j, double tol) {
    check_shape(j, 4, 4, "cayley_normal_form");
    CalPlane<double> plane{PlaneKind::cayley, cayley_graph_span(j)};
    if (!is_calibrated(plane, tol).calibrated) throw Error("cayley_normal_form: graph is not Cayley");

    auto svd = svd_small(j);
    std::vector<double> v0(4), u0(4);
    for (std::size_t k = 0; k < 4; ++k) {
        v0[k] = svd.v[k][0];
        u0[k] = svd.u[k][0];
    }
    Mat ox = su2_align(v0), oy = su2_align(u0);
    Mat jp = matmul(matmul(oy, j), transpose(ox));
    Mat b = zeros(3, 3);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) b[r][c] = jp[r + 1][c + 1];

    SingularQuad out;
    double offdiag = 0;
    for (std::size_t k = 1; k < 4; ++k) offdiag = std::max({offdiag, std::fabs(jp[0][k]), std::fabs(jp[k][0])});
    out.symmetry_residual = std::max(asym(b), offdiag);
    if (out.symmetry_residual > 1e-6 * scale_of(j)) throw Error("cayley_normal_form: reduced block is not symmetric");
    auto vals = jacobi_eigen(sym_part(b)).values;
    vals.push_back(jp[0][0]);
    out.lambda = canonical<4>(vals);
    std::vector<double> l(out.lambda.begin(), out.lambda.end());
    auto e = elem(l);
    out.locus_residual = std::fabs(e[1] - e[3]);
    out.component = classify(l, 1e-8);
    return out;
}

LawsonOsserman lawson_osserman(const std::vector<double>& x) {
    if (x.size() != 4) throw Error("lawson_osserman needs a point in R^4");
    double r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
    if (r2 == 0.0) throw Error("lawson_osserman: x = 0");
    double r = std::sqrt(r2);
    double c = std::sqrt(5.0) / 2.0;
    std::array<double, 3> q = {x[0] * x[0] + x[1] * x[1] - x[2] * x[2] - x[3] * x[3],
                               2 * x[1] * x[2] + 2 * x[0] * x[3],
                               2 * x[1] * x[3] - 2 * x[0] * x[2]};
    const double dq[3][4] = {{2 * x[0], 2 * x[1], -2 * x[2], -2 * x[3]},
                             {2 * x[3], 2 * x[2], 2 * x[1], 2 * x[0]},
                             {-2 * x[2], 2 * x[3], -2 * x[0], 2 * x[1]}};
    LawsonOsserman out;
    out.jac = zeros(3, 4);
    for (std::size_t i = 0; i < 3; ++i) {
        out.f.push_back(c * q[i] / r);
        for (std::size_t a = 0; a < 4; ++a) out.jac[i][a] = c * (dq[i][a] / r - q[i] * x[a] / (r2 * r));
    }
    return out;
}

}  // namespace calib
