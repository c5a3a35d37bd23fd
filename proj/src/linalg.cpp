#include "calib/linalg.hpp"

#include "calib/rat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace calib {

Mat zeros(std::size_t r, std::size_t c) { return Mat(r, std::vector<double>(c, 0.0)); }

Mat identity(std::size_t n) {
    Mat m = zeros(n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1.0;
    return m;
}

Mat transpose(const Mat& a) {
    if (a.empty()) return a;
    Mat t = zeros(a[0].size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
    return t;
}

Mat matmul(const Mat& a, const Mat& b) {
    if (a.empty() || b.empty() || a[0].size() != b.size()) throw Error("matrix shape mismatch");
    Mat c = zeros(a.size(), b[0].size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

std::vector<double> matvec(const Mat& a, const std::vector<double>& x) {
    std::vector<double> y(a.size(), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
    return y;
}

double max_abs_diff(const Mat& a, const Mat& b) {
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) m = std::max(m, std::fabs(a[i][j] - b[i][j]));
    return m;
}

EigenSym jacobi_eigen(Mat a, double tol, int max_sweeps) {
    std::size_t n = a.size();
    Mat v = identity(n);
    double scale = 0;
    for (const auto& row : a)
        for (double x : row) scale = std::max(scale, std::fabs(x));
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::fabs(a[p][q]));
        if (off <= tol * std::max(1.0, scale)) break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (a[p][q] == 0.0) continue;
                double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1), s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a[i][i] < a[j][j]; });
    EigenSym out;
    out.vectors = zeros(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        out.values.push_back(a[order[c]][order[c]]);
        for (std::size_t k = 0; k < n; ++k) out.vectors[k][c] = v[k][order[c]];
    }
    return out;
}

Svd svd_small(const Mat& a) {
    std::size_t m = a.size(), n = a[0].size();
    auto e = jacobi_eigen(matmul(transpose(a), a));
    Svd out;
    out.v = zeros(n, n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t k = 0; k < n; ++k) out.v[k][c] = e.vectors[k][n - 1 - c];
    std::size_t r = std::min(m, n);
    std::vector<std::vector<double>> ucols;
    for (std::size_t c = 0; c < r; ++c) {
        double s = std::sqrt(std::max(0.0, e.values[n - 1 - c]));
        out.s.push_back(s);
        std::vector<double> vc(n);
        for (std::size_t k = 0; k < n; ++k) vc[k] = out.v[k][c];
        auto u = matvec(a, vc);
        double nu = std::sqrt(std::inner_product(u.begin(), u.end(), u.begin(), 0.0));
        if (nu > 1e-12 * std::max(1.0, s)) {
            for (auto& x : u) x /= nu;
            ucols.push_back(u);
        }
    }
    // complete U to an orthonormal basis
    for (std::size_t i = 0; ucols.size() < m && i < m; ++i) {
        std::vector<double> w(m, 0.0);
        w[i] = 1.0;
        for (const auto& u : ucols) {
            double d = std::inner_product(w.begin(), w.end(), u.begin(), 0.0);
            for (std::size_t k = 0; k < m; ++k) w[k] -= d * u[k];
        }
        double nw = std::sqrt(std::inner_product(w.begin(), w.end(), w.begin(), 0.0));
        if (nw < 1e-8) continue;
        for (auto& x : w) x /= nw;
        ucols.push_back(w);
    }
    out.u = zeros(m, m);
    for (std::size_t c = 0; c < m; ++c)
        for (std::size_t k = 0; k < m; ++k) out.u[k][c] = ucols[c][k];
    return out;
}

}  // namespace calib
