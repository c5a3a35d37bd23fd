#include "calib/polyalg.hpp"

#include <algorithm>

namespace calib {

namespace {

void check_square(const PolyMatrix& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw Error("determinant of a non-square matrix");
}

}  // namespace

MPoly det_bareiss(const PolyMatrix& input) {
    check_square(input);
    std::size_t n = input.size();
    if (n == 0) return MPoly(1);
    PolyMatrix a = input;
    MPoly prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a[p][k].is_zero()) ++p;
            if (p == n) return MPoly(0);
            std::swap(a[k], a[p]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MPoly t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = prev.is_constant() ? t.scale(prev.constant_value().inv()) : t.exact_div(prev);
            }
            a[i][k] = MPoly(0);
        }
        prev = a[k][k];
    }
    return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

MPoly det_cofactor(const PolyMatrix& m) {
    check_square(m);
    std::size_t n = m.size();
    if (n == 0) return MPoly(1);
    if (n == 1) return m[0][0];
    MPoly s;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        PolyMatrix minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<MPoly> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[i][c]);
            minor.push_back(std::move(row));
        }
        MPoly t = m[0][j] * det_cofactor(minor);
        if (j % 2) s -= t;
        else s += t;
    }
    return s;
}

MPoly det_poly(const PolyMatrix& m) {
    MPoly d = det_bareiss(m);
    if (m.size() <= 4 && !(d == det_cofactor(m)))
        throw Error("determinant cross-check failed");
    return d;
}

MPoly elementary_symmetric(const std::vector<std::string>& vars, unsigned k) {
    // coefficient extraction from prod (1 + x_i z) via the recurrence e_k(n) = e_k(n-1) + x_n e_{k-1}(n-1)
    std::vector<MPoly> e(k + 1, MPoly(0));
    e[0] = MPoly(1);
    for (const auto& v : vars) {
        MPoly x = MPoly::var(v);
        for (unsigned j = k; j >= 1; --j) e[j] += x * e[j - 1];
    }
    return e[k];
}

bool is_symmetric(const MPoly& p, const std::vector<std::string>& sym_vars) {
    for (std::size_t i = 0; i + 1 < sym_vars.size(); ++i) {
        std::map<std::string, MPoly> swap{{sym_vars[i], MPoly::var(sym_vars[i + 1])},
                                          {sym_vars[i + 1], MPoly::var(sym_vars[i])}};
        if (!(p.substitute(swap) == p)) return false;
    }
    return true;
}

MPoly symmetric_reduce(const MPoly& p, const std::vector<std::string>& sym_vars,
                       const std::vector<std::string>& out_names) {
    std::size_t n = sym_vars.size();
    if (out_names.size() < n) throw Error("symmetric_reduce: not enough output names");
    if (!is_symmetric(p, sym_vars)) throw Error("symmetric_reduce: input is not symmetric");

    std::vector<MPoly> e, s;
    for (std::size_t k = 1; k <= n; ++k) {
        e.push_back(elementary_symmetric(sym_vars, static_cast<unsigned>(k)));
        s.push_back(MPoly::var(out_names[k - 1]));
    }
    std::vector<std::vector<MPoly>> epow(n);
    auto e_power = [&](std::size_t k, unsigned m) -> const MPoly& {
        auto& c = epow[k];
        if (c.empty()) c.push_back(MPoly(1));
        while (c.size() <= m) c.push_back(c.back() * e[k]);
        return c[m];
    };

    MPoly r = p;
    MPoly out;
    while (!r.is_zero()) {
        std::vector<int> idx;
        for (const auto& v : sym_vars) idx.push_back(r.var_index(v));
        auto sym_part = [&](const Monomial& m) {
            std::vector<unsigned> x(n, 0);
            for (std::size_t i = 0; i < n; ++i)
                if (idx[i] >= 0) x[i] = m[static_cast<std::size_t>(idx[i])];
            return x;
        };
        auto greater = [](const std::vector<unsigned>& x, const std::vector<unsigned>& y) {
            unsigned dx = 0, dy = 0;
            for (auto v : x) dx += v;
            for (auto v : y) dy += v;
            if (dx != dy) return dx > dy;
            return x > y;
        };
        std::vector<unsigned> lead;
        for (const auto& [m, c] : r.terms()) {
            auto x = sym_part(m);
            if (lead.empty() || greater(x, lead)) lead = x;
        }
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (lead[i] < lead[i + 1]) throw Error("symmetric_reduce: input is not symmetric");

        // coefficient of the leading symmetric monomial, in the extra variables
        MPoly coef;
        for (const auto& [m, c] : r.terms()) {
            if (sym_part(m) != lead) continue;
            std::vector<std::pair<std::string, unsigned>> powers;
            for (std::size_t i = 0; i < m.size(); ++i) {
                const auto& name = r.vars()[i];
                if (m[i] && std::find(sym_vars.begin(), sym_vars.end(), name) == sym_vars.end())
                    powers.emplace_back(name, m[i]);
            }
            coef += MPoly::monomial(c, powers);
        }
        MPoly in_e = coef, in_s = coef;
        for (std::size_t k = 0; k < n; ++k) {
            unsigned m = lead[k] - (k + 1 < n ? lead[k + 1] : 0);
            if (!m) continue;
            in_e *= e_power(k, m);
            in_s *= s[k].pow(m);
        }
        r -= in_e;
        out += in_s;
    }
    return out;
}

MPoly quartic_discriminant(const MPoly& a, const MPoly& b, const MPoly& c, const MPoly& d,
                           const MPoly& e) {
    MPoly a2 = a * a, a3 = a2 * a;
    MPoly b2 = b * b, b3 = b2 * b, b4 = b3 * b;
    MPoly c2 = c * c, c3 = c2 * c, c4 = c3 * c;
    MPoly d2 = d * d, d3 = d2 * d, d4 = d3 * d;
    MPoly e2 = e * e, e3 = e2 * e;
    auto k = [](long v) { return MPoly(Rat(v)); };
    return b2 * c2 * d2 - k(4) * a * c3 * d2 - k(4) * b3 * d3 + k(18) * a * b * c * d3 -
           k(27) * a2 * d4 - k(4) * b2 * c3 * e + k(16) * a * c4 * e + k(18) * b3 * c * d * e -
           k(80) * a * b * c2 * d * e - k(6) * a * b2 * d2 * e + k(144) * a2 * c * d2 * e -
           k(27) * b4 * e2 + k(144) * a * b2 * c * e2 - k(128) * a2 * c2 * e2 -
           k(192) * a2 * b * d * e2 + k(256) * a3 * e3;
}

}  // namespace calib
