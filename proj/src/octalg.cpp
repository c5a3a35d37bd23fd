#include "calib/octalg.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace calib {

namespace {

// Sorts idx in place; returns the permutation sign, or 0 on a repeated index.
int sort_with_sign(std::vector<int>& idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i)
        for (std::size_t j = i; j > 0 && idx[j - 1] > idx[j]; --j) {
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    for (std::size_t i = 1; i < idx.size(); ++i)
        if (idx[i] == idx[i - 1]) return 0;
    return sign;
}

}  // namespace

FormTable FormTable::basic(int n, int i) {
    if (i < 0 || i >= n) throw Error("coordinate index out of range");
    FormTable f(n, 1);
    f.add({i}, QuadExt(1));
    return f;
}

void FormTable::add(std::vector<int> idx, const QuadExt& c) {
    if (static_cast<int>(idx.size()) != k_) throw Error("form term has the wrong arity");
    int s = sort_with_sign(idx);
    if (s == 0 || c.is_zero()) return;
    QuadExt v = s > 0 ? c : -c;
    auto [it, inserted] = c_.emplace(idx, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) c_.erase(it);
    }
}

QuadExt FormTable::coeff(const std::vector<int>& idx) const {
    std::vector<int> s = idx;
    int sg = sort_with_sign(s);
    if (sg == 0) return QuadExt(0);
    auto it = c_.find(s);
    if (it == c_.end()) return QuadExt(0);
    return sg > 0 ? it->second : -it->second;
}

FormTable FormTable::wedge(const FormTable& o) const {
    if (n_ != o.n_) throw Error("wedge of forms on different spaces");
    FormTable r(n_, k_ + o.k_);
    for (const auto& [a, ca] : c_)
        for (const auto& [b, cb] : o.c_) {
            std::vector<int> idx = a;
            idx.insert(idx.end(), b.begin(), b.end());
            r.add(std::move(idx), ca * cb);
        }
    return r;
}

FormTable FormTable::contract(const std::vector<QuadExt>& v) const {
    if (static_cast<int>(v.size()) != n_) throw Error("contraction vector has the wrong dimension");
    if (k_ == 0) throw Error("cannot contract a 0-form");
    FormTable r(n_, k_ - 1);
    for (const auto& [idx, c] : c_)
        for (std::size_t p = 0; p < idx.size(); ++p) {
            const QuadExt& vi = v[static_cast<std::size_t>(idx[p])];
            if (vi.is_zero()) continue;
            std::vector<int> rest = idx;
            rest.erase(rest.begin() + static_cast<long>(p));
            r.add(std::move(rest), (p % 2 ? -c : c) * vi);
        }
    return r;
}

FormTable FormTable::restrict_zero(const std::vector<int>& coords) const {
    FormTable r(n_, k_);
    for (const auto& [idx, c] : c_) {
        bool touches = std::any_of(idx.begin(), idx.end(), [&](int i) {
            return std::find(coords.begin(), coords.end(), i) != coords.end();
        });
        if (!touches) r.c_.emplace(idx, c);
    }
    return r;
}

FormTable FormTable::scale(const QuadExt& s) const {
    FormTable r(n_, k_);
    if (s.is_zero()) return r;
    for (const auto& [idx, c] : c_) r.c_.emplace(idx, c * s);
    return r;
}

FormTable operator+(const FormTable& a, const FormTable& b) {
    if (a.n_ != b.n_ || a.k_ != b.k_) throw Error("adding forms of different type");
    FormTable r = a;
    for (const auto& [idx, c] : b.c_) r.add(idx, c);
    return r;
}

bool operator==(const FormTable& a, const FormTable& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.c_ == b.c_;
}

std::string FormTable::str(const std::vector<std::string>& names) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : c_) {
        bool neg = c.is_rational() && c.a().sign() < 0;
        QuadExt mag = neg ? -c : c;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        if (!(mag == QuadExt(1))) os << (mag.is_rational() ? mag.str() : "(" + mag.str() + ")") << "*";
        for (std::size_t i = 0; i < idx.size(); ++i)
            os << (i ? "^" : "") << "d" << names[static_cast<std::size_t>(idx[i])];
    }
    return os.str();
}

const std::vector<std::string>& coord_names(int n) {
    static const std::vector<std::string> r7{"x0", "x1", "x2", "x3", "y1", "y2", "y3"};
    static const std::vector<std::string> r8{"x0", "x1", "x2", "x3", "y0", "y1", "y2", "y3"};
    if (n == 7) return r7;
    if (n == 8) return r8;
    throw Error("only R^7 and R^8 coordinates are defined");
}

int coord_index(int n, const std::string& name) {
    const auto& names = coord_names(n);
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw Error("no coordinate '" + name + "' on R^" + std::to_string(n));
    return static_cast<int>(it - names.begin());
}

FormTable dform(int n, const std::string& name) { return FormTable::basic(n, coord_index(n, name)); }

namespace {

const std::array<std::array<int, 3>, 3> kCyclic{{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}};

FormTable omega(int n, int i) {
    const auto& c = kCyclic[static_cast<std::size_t>(i - 1)];
    auto dx = [n](int j) { return dform(n, "x" + std::to_string(j)); };
    return (dx(0) ^ dx(c[0])) + (dx(c[1]) ^ dx(c[2]));
}

FormTable gamma8(int i) {
    const auto& c = kCyclic[static_cast<std::size_t>(i - 1)];
    auto dy = [](int j) { return dform(8, "y" + std::to_string(j)); };
    return (dy(0) ^ dy(c[0])) + (dy(c[1]) ^ dy(c[2]));
}

FormTable build_phi() {
    auto dy = [](int j) { return dform(7, "y" + std::to_string(j)); };
    FormTable f = dy(1) ^ dy(2) ^ dy(3);
    for (int i = 1; i <= 3; ++i) f = f - (dy(i) ^ omega(7, i));
    return f;
}

FormTable build_psi() {
    auto dx = [](int j) { return dform(7, "x" + std::to_string(j)); };
    auto dy = [](int j) { return dform(7, "y" + std::to_string(j)); };
    FormTable f = dx(0) ^ dx(1) ^ dx(2) ^ dx(3);
    for (int i = 1; i <= 3; ++i) {
        const auto& c = kCyclic[static_cast<std::size_t>(i - 1)];
        f = f - (dy(c[1]) ^ dy(c[2]) ^ omega(7, i));
    }
    return f;
}

FormTable build_cayley() {
    auto d = [](const std::string& s) { return dform(8, s); };
    FormTable f = (d("x0") ^ d("x1") ^ d("x2") ^ d("x3")) + (d("y0") ^ d("y1") ^ d("y2") ^ d("y3"));
    for (int i = 1; i <= 3; ++i) f = f - (omega(8, i) ^ gamma8(i));
    return f;
}

}  // namespace

const FormTable& phi_form() {
    static const FormTable f = build_phi();
    return f;
}

const FormTable& psi_form() {
    static const FormTable f = build_psi();
    return f;
}

const FormTable& cayley_form() {
    static const FormTable f = build_cayley();
    return f;
}

std::string to_string(PlaneKind k) {
    switch (k) {
        case PlaneKind::coassociative: return "coassociative";
        case PlaneKind::associative: return "associative";
        default: return "cayley";
    }
}

namespace {

struct KindShape {
    int n, k;
};

KindShape shape(PlaneKind kind) {
    switch (kind) {
        case PlaneKind::coassociative: return {7, 4};
        case PlaneKind::associative: return {7, 3};
        default: return {8, 4};
    }
}

template <class S>
void check_span(PlaneKind kind, const std::vector<Vec<S>>& span) {
    auto [n, k] = shape(kind);
    if (static_cast<int>(span.size()) != k)
        throw Error(to_string(kind) + " plane needs " + std::to_string(k) + " spanning vectors");
    for (const auto& v : span)
        if (static_cast<int>(v.size()) != n)
            throw Error(to_string(kind) + " plane lives in R^" + std::to_string(n));
}

}  // namespace

int exact_rank(std::vector<Vec<QuadExt>> a) {
    int rank = 0;
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
        std::size_t r = static_cast<std::size_t>(rank);
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c].is_zero()) continue;
            QuadExt f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++rank;
    }
    return rank;
}

std::vector<Vec<double>> orthonormalize(const std::vector<Vec<double>>& vs, double tol) {
    std::vector<Vec<double>> out;
    for (const auto& v : vs) {
        Vec<double> w = v;
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& e : out) {
                double d = dot(w, e);
                for (std::size_t i = 0; i < w.size(); ++i) w[i] -= d * e[i];
            }
        double nv = std::sqrt(dot(v, v)), nw = std::sqrt(dot(w, w));
        if (nw <= tol * std::max(1.0, nv)) throw Error("spanning vectors are linearly dependent");
        for (auto& x : w) x /= nw;
        out.push_back(std::move(w));
    }
    return out;
}

CalResult is_calibrated(const CalPlane<QuadExt>& p) {
    check_span(p.kind, p.span);
    const auto& u = p.span;
    if (exact_rank(u) != static_cast<int>(u.size())) throw Error("spanning vectors are linearly dependent");
    CalResult r;
    auto sgn = [](const QuadExt& x) { return x.sign(); };
    switch (p.kind) {
        case PlaneKind::coassociative: {
            for (int a = 0; a < 4; ++a)
                for (int b = a + 1; b < 4; ++b)
                    for (int c = b + 1; c < 4; ++c)
                        if (!evaluate<QuadExt>(phi_form(), {u[static_cast<std::size_t>(a)], u[static_cast<std::size_t>(b)], u[static_cast<std::size_t>(c)]}).is_zero())
                            return r;
            r.sign = sgn(evaluate<QuadExt>(psi_form(), u));
            break;
        }
        case PlaneKind::associative: {
            for (const auto& x : associator(u[0], u[1], u[2]))
                if (!x.is_zero()) return r;
            r.sign = sgn(evaluate<QuadExt>(phi_form(), u));
            break;
        }
        case PlaneKind::cayley: {
            auto rows = u;
            rows.push_back(triple_cross8(u[0], u[1], u[2]));
            if (exact_rank(rows) != 4) return r;
            r.sign = sgn(evaluate<QuadExt>(cayley_form(), u));
            break;
        }
    }
    r.calibrated = true;
    return r;
}

CalResult is_calibrated(const CalPlane<double>& p, double tol) {
    check_span(p.kind, p.span);
    auto e = orthonormalize(p.span);
    CalResult r;
    double cal = 0;
    switch (p.kind) {
        case PlaneKind::coassociative:
            for (int a = 0; a < 4; ++a)
                for (int b = a + 1; b < 4; ++b)
                    for (int c = b + 1; c < 4; ++c)
                        r.residual = std::max(r.residual, std::fabs(evaluate<double>(phi_form(), {e[static_cast<std::size_t>(a)], e[static_cast<std::size_t>(b)], e[static_cast<std::size_t>(c)]})));
            cal = evaluate<double>(psi_form(), e);
            break;
        case PlaneKind::associative:
            for (double x : associator(e[0], e[1], e[2])) r.residual = std::max(r.residual, std::fabs(x));
            cal = evaluate<double>(phi_form(), e);
            break;
        case PlaneKind::cayley: {
            auto t = triple_cross8(e[0], e[1], e[2]);
            auto perp = t;
            for (const auto& b : e) {
                double d = dot(t, b);
                for (std::size_t i = 0; i < perp.size(); ++i) perp[i] -= d * b[i];
            }
            r.residual = std::sqrt(dot(perp, perp));
            cal = evaluate<double>(cayley_form(), e);
            break;
        }
    }
    r.calibrated = r.residual <= tol;
    if (r.calibrated) r.sign = cal > 0 ? 1 : -1;
    return r;
}

namespace {

template <class S>
S sigma(const std::vector<S>& l, int k) {
    // elementary symmetric value via the product recurrence
    std::vector<S> e(static_cast<std::size_t>(k) + 1, S(0));
    e[0] = S(1);
    for (const auto& x : l)
        for (int j = k; j >= 1; --j) e[static_cast<std::size_t>(j)] = e[static_cast<std::size_t>(j)] + x * e[static_cast<std::size_t>(j - 1)];
    return e[static_cast<std::size_t>(k)];
}

void check_frame_params(PlaneKind kind, std::size_t nl, int delta) {
    if (kind == PlaneKind::associative) throw Error("adapted frames are defined for coassociative and Cayley planes");
    std::size_t want = kind == PlaneKind::coassociative ? 3 : 4;
    if (nl != want) throw Error("frame needs " + std::to_string(want) + " singular values");
    if (delta != 1 && delta != -1) throw Error("delta must be +1 or -1");
}

bool cayley_cs0(const std::vector<double>& l) {
    for (std::size_t i = 0; i < 4; ++i) {
        std::vector<double> rest;
        for (std::size_t j = 0; j < 4; ++j)
            if (j != i) rest.push_back(l[j]);
        if (!(sigma(rest, 2) < 1.0)) return false;
    }
    return true;
}

}  // namespace

std::vector<Vec<double>> calibrated_frame(PlaneKind kind, const std::vector<double>& l, int delta) {
    check_frame_params(kind, l.size(), delta);
    double s1 = sigma(l, 1), s3 = sigma(l, 3);
    if (std::fabs(s1 - s3) > 1e-8 * (1 + std::fabs(s1))) throw Error("singular values are off the locus");
    if (kind == PlaneKind::cayley) {
        if (delta != 1) throw Error("Cayley frames carry no sign");
        if (!cayley_cs0(l)) throw Error("Cayley frame is defined on the CS0 component only");
        std::vector<Vec<double>> f(8, Vec<double>(8, 0.0));
        for (std::size_t i = 0; i < 4; ++i) {
            double n = std::sqrt(1 + l[i] * l[i]);
            f[i][i] = 1 / n;
            f[i][4 + i] = l[i] / n;
            f[4 + i][4 + i] = 1 / n;
            f[4 + i][i] = -l[i] / n;
        }
        return f;
    }
    std::vector<Vec<double>> f(7, Vec<double>(7, 0.0));
    double d = delta;
    f[0][0] = d;
    for (std::size_t i = 1; i <= 3; ++i) {
        double li = l[i - 1], n = std::sqrt(1 + li * li);
        f[i][i] = 1 / n;
        f[i][3 + i] = li / n;
        f[3 + i][3 + i] = d / n;
        f[3 + i][i] = -d * li / n;
    }
    return f;
}

ExactFrame calibrated_frame_exact(PlaneKind kind, const std::vector<QuadExt>& l, int delta) {
    check_frame_params(kind, l.size(), delta);
    if (!(sigma(l, 1) == sigma(l, 3))) throw Error("singular values are off the locus");
    ExactFrame out;
    QuadExt d(delta);
    if (kind == PlaneKind::cayley) {
        if (delta != 1) throw Error("Cayley frames carry no sign");
        for (std::size_t i = 0; i < 4; ++i) {
            std::vector<QuadExt> rest;
            for (std::size_t j = 0; j < 4; ++j)
                if (j != i) rest.push_back(l[j]);
            if (!(sigma(rest, 2) < QuadExt(1))) throw Error("Cayley frame is defined on the CS0 component only");
        }
        out.vectors.assign(8, Vec<QuadExt>(8, QuadExt(0)));
        out.squared_norms.assign(8, QuadExt(1));
        for (std::size_t i = 0; i < 4; ++i) {
            out.vectors[i][i] = QuadExt(1);
            out.vectors[i][4 + i] = l[i];
            out.vectors[4 + i][4 + i] = QuadExt(1);
            out.vectors[4 + i][i] = -l[i];
            out.squared_norms[i] = out.squared_norms[4 + i] = QuadExt(1) + l[i] * l[i];
        }
        return out;
    }
    out.vectors.assign(7, Vec<QuadExt>(7, QuadExt(0)));
    out.squared_norms.assign(7, QuadExt(1));
    out.vectors[0][0] = d;
    for (std::size_t i = 1; i <= 3; ++i) {
        const QuadExt& li = l[i - 1];
        out.vectors[i][i] = QuadExt(1);
        out.vectors[i][3 + i] = li;
        out.vectors[3 + i][3 + i] = d;
        out.vectors[3 + i][i] = -(d * li);
        out.squared_norms[i] = out.squared_norms[3 + i] = QuadExt(1) + li * li;
    }
    return out;
}

namespace {

double diff_norm(const Vec<double>& a, const Vec<double>& b) {
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
    return m;
}

double diff_norm(const Vec<QuadExt>& a, const Vec<QuadExt>& b) { return a == b ? 0.0 : 1.0; }

template <class S>
bool near(const S& a, const S& b, double tol);
template <>
bool near<double>(const double& a, const double& b, double tol) { return std::fabs(a - b) <= tol; }
template <>
bool near<QuadExt>(const QuadExt& a, const QuadExt& b, double) { return a == b; }

template <class S>
BasisCheck check_frame(FrameKind kind, const std::vector<Vec<S>>& e, double tol) {
    int n = kind == FrameKind::g2 ? 7 : 8;
    if (static_cast<int>(e.size()) != n) throw Error("frame needs " + std::to_string(n) + " vectors");
    for (const auto& v : e)
        if (static_cast<int>(v.size()) != n) throw Error("frame vector has the wrong dimension");
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (!near<S>(dot(e[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(j)]), S(i == j ? 1 : 0), tol))
                throw Error("frame is not orthonormal");
    const FormTable& table = kind == FrameKind::g2 ? phi_form() : cayley_form();
    BasisCheck out;
    auto compare = [&](std::vector<int> inputs, const Vec<S>& got, const std::function<QuadExt(int)>& coeff) {
        ++out.relations;
        Vec<S> want(static_cast<std::size_t>(n), S(0));
        int target = -1;
        QuadExt tc(0);
        for (int z = 0; z < n; ++z) {
            QuadExt c = coeff(z);
            if (c.is_zero()) continue;
            target = z;
            tc = c;
            for (int i = 0; i < n; ++i) want[static_cast<std::size_t>(i)] = want[static_cast<std::size_t>(i)] + scalar_of<S>(c) * e[static_cast<std::size_t>(z)][static_cast<std::size_t>(i)];
        }
        double err = diff_norm(got, want);
        if (err > tol) out.violations.push_back({std::move(inputs), target, tc, err});
    };
    if (kind == FrameKind::g2) {
        for (int i = 0; i < 7; ++i)
            for (int j = i + 1; j < 7; ++j)
                compare({i, j}, cross7(e[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(j)]),
                        [&](int z) { return table.coeff({i, j, z}); });
    } else {
        for (int i = 0; i < 8; ++i)
            for (int j = i + 1; j < 8; ++j)
                for (int k = j + 1; k < 8; ++k)
                    compare({i, j, k},
                            triple_cross8(e[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(j)], e[static_cast<std::size_t>(k)]),
                            [&](int z) { return table.coeff({z, i, j, k}); });
    }
    out.ok = out.violations.empty();
    return out;
}

}  // namespace

BasisCheck basis_check(FrameKind kind, const std::vector<Vec<double>>& frame, double tol) {
    return check_frame<double>(kind, frame, tol);
}

BasisCheck basis_check(FrameKind kind, const std::vector<Vec<QuadExt>>& frame) {
    return check_frame<QuadExt>(kind, frame, 0.0);
}

SlagIdentity parse_slag_identity(const std::string& s) {
    if (s == "coass_x0") return SlagIdentity::coass_x0;
    if (s == "coass_phase") return SlagIdentity::coass_phase;
    if (s == "cayley_assoc") return SlagIdentity::cayley_assoc;
    if (s == "cayley_phase") return SlagIdentity::cayley_phase;
    throw Error("unknown reduction identity '" + s + "'");
}

std::string to_string(SlagIdentity id) {
    switch (id) {
        case SlagIdentity::coass_x0: return "coass_x0";
        case SlagIdentity::coass_phase: return "coass_phase";
        case SlagIdentity::cayley_assoc: return "cayley_assoc";
        default: return "cayley_phase";
    }
}

namespace {

struct CForm {
    FormTable re, im;
};

CForm cwedge(const CForm& a, const CForm& b) {
    return {(a.re ^ b.re) - (a.im ^ b.im), (a.re ^ b.im) + (a.im ^ b.re)};
}

// (dx1 + i dy1) ^ ... ^ (dx_k + i dy_k)
CForm complex_volume(int n, int k) {
    CForm z{dform(n, "x1"), dform(n, "y1")};
    for (int j = 2; j <= k; ++j) z = cwedge(z, {dform(n, "x" + std::to_string(j)), dform(n, "y" + std::to_string(j))});
    return z;
}

Vec<QuadExt> coord_vec(int n, const std::vector<std::pair<std::string, QuadExt>>& parts) {
    Vec<QuadExt> v(static_cast<std::size_t>(n), QuadExt(0));
    for (const auto& [name, c] : parts) v[static_cast<std::size_t>(coord_index(n, name))] += c;
    return v;
}

}  // namespace

SlagResult slag_reduction(SlagIdentity id, const Rat& lambda) {
    SlagResult r;
    QuadExt l(lambda);
    switch (id) {
        case SlagIdentity::coass_x0: {
            r.lhs = psi_form().contract(coord_vec(7, {{"x0", 1}}));
            r.rhs = complex_volume(7, 3).re;
            break;
        }
        case SlagIdentity::coass_phase: {
            // sqrt(1+l^2) e^{i(pi + arctan l)} = -(1 + i l)
            r.lhs = psi_form().contract(coord_vec(7, {{"x3", 1}, {"y3", l}})).contract(coord_vec(7, {{"x0", 1}}));
            CForm z = complex_volume(7, 2);
            r.rhs = -(z.re - z.im.scale(l));
            break;
        }
        case SlagIdentity::cayley_assoc: {
            r.lhs = cayley_form().contract(coord_vec(8, {{"x0", 1}}));
            FormTable f = dform(8, "x1") ^ dform(8, "x2") ^ dform(8, "x3");
            for (int i = 1; i <= 3; ++i) f = f - (dform(8, "x" + std::to_string(i)) ^ gamma8(i));
            r.rhs = f;
            break;
        }
        case SlagIdentity::cayley_phase: {
            // sqrt(1+l^2) e^{i arctan l} = 1 + i l
            int x0 = coord_index(8, "x0"), y0 = coord_index(8, "y0");
            r.lhs = cayley_form().contract(coord_vec(8, {{"x0", 1}, {"y0", l}})).restrict_zero({x0, y0});
            CForm z = complex_volume(8, 3);
            r.rhs = z.re - z.im.scale(l);
            break;
        }
    }
    r.holds = r.lhs == r.rhs;
    return r;
}

}  // namespace calib
