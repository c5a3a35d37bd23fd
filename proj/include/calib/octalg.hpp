#pragma once

#include "calib/quadext.hpp"

#include <array>
#include <cmath>
#include <map>
#include <string>
#include <vector>

namespace calib {

// Constant-coefficient k-form on R^n; keys are strictly increasing index tuples.
class FormTable {
public:
    FormTable() = default;
    FormTable(int n, int k) : n_(n), k_(k) {}

    static FormTable basic(int n, int i);  // dx_i
    static FormTable zero(int n, int k) { return FormTable(n, k); }

    int dim() const { return n_; }
    int arity() const { return k_; }
    const std::map<std::vector<int>, QuadExt>& coeffs() const { return c_; }
    QuadExt coeff(const std::vector<int>& idx) const;  // any order; alternating sign applied
    void add(std::vector<int> idx, const QuadExt& c);

    FormTable wedge(const FormTable& o) const;
    FormTable contract(const std::vector<QuadExt>& v) const;  // iota(v)
    // Pullback to {x_i = 0 for i in coords}: drops every term touching them.
    FormTable restrict_zero(const std::vector<int>& coords) const;
    FormTable scale(const QuadExt& s) const;

    FormTable operator-() const { return scale(QuadExt(-1)); }
    friend FormTable operator+(const FormTable& a, const FormTable& b);
    friend FormTable operator-(const FormTable& a, const FormTable& b) { return a + (-b); }
    friend bool operator==(const FormTable& a, const FormTable& b);

    std::string str(const std::vector<std::string>& names) const;

private:
    int n_ = 0, k_ = 0;
    std::map<std::vector<int>, QuadExt> c_;
};

inline FormTable operator^(const FormTable& a, const FormTable& b) { return a.wedge(b); }

// Coordinates: R^7 = (x0,x1,x2,x3,y1,y2,y3), R^8 = (x0..x3,y0..y3).
const std::vector<std::string>& coord_names(int n);
int coord_index(int n, const std::string& name);
FormTable dform(int n, const std::string& name);

const FormTable& phi_form();  // 3-form on R^7
const FormTable& psi_form();  // 4-form on R^7
const FormTable& cayley_form();  // 4-form on R^8

template <class S>
using Vec = std::vector<S>;

template <class S>
S scalar_of(const QuadExt& q);
template <>
inline QuadExt scalar_of<QuadExt>(const QuadExt& q) { return q; }
template <>
inline double scalar_of<double>(const QuadExt& q) { return q.to_double(); }

template <class S>
S det_small(std::vector<std::vector<S>> a) {
    std::size_t n = a.size();
    if (n == 1) return a[0][0];
    if (n == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
    S s = S(0);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<S>> m;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<S> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(a[i][c]);
            m.push_back(std::move(row));
        }
        S t = a[0][j] * det_small(std::move(m));
        s = (j % 2) ? s - t : s + t;
    }
    return s;
}

// F(v_1, ..., v_k) = sum_I c_I det(v_a[I_b]).
template <class S>
S evaluate(const FormTable& f, const std::vector<Vec<S>>& vs) {
    if (static_cast<int>(vs.size()) != f.arity()) throw Error("form arity mismatch");
    for (const auto& v : vs)
        if (static_cast<int>(v.size()) != f.dim()) throw Error("vector dimension mismatch");
    S s = S(0);
    std::size_t k = vs.size();
    for (const auto& [idx, c] : f.coeffs()) {
        std::vector<std::vector<S>> m(k, std::vector<S>(k));
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) m[a][b] = vs[a][static_cast<std::size_t>(idx[b])];
        s = s + scalar_of<S>(c) * det_small(std::move(m));
    }
    return s;
}

template <class S>
Vec<S> basis_vec(int n, int i) {
    Vec<S> v(static_cast<std::size_t>(n), S(0));
    v[static_cast<std::size_t>(i)] = S(1);
    return v;
}

template <class S>
S dot(const Vec<S>& u, const Vec<S>& v) {
    S s = S(0);
    for (std::size_t i = 0; i < u.size(); ++i) s = s + u[i] * v[i];
    return s;
}

template <class S>
Vec<S> cross7(const Vec<S>& u, const Vec<S>& v) {
    if (u.size() != 7 || v.size() != 7) throw Error("cross product needs vectors in R^7");
    Vec<S> r(7, S(0));
    for (int c = 0; c < 7; ++c) r[static_cast<std::size_t>(c)] = evaluate<S>(phi_form(), {u, v, basis_vec<S>(7, c)});
    return r;
}

template <class S>
Vec<S> associator(const Vec<S>& u, const Vec<S>& v, const Vec<S>& w) {
    if (u.size() != 7 || v.size() != 7 || w.size() != 7) throw Error("associator needs vectors in R^7");
    Vec<S> r(7, S(0));
    for (int z = 0; z < 7; ++z)
        r[static_cast<std::size_t>(z)] = S(2) * evaluate<S>(psi_form(), {basis_vec<S>(7, z), u, v, w});
    return r;
}

template <class S>
Vec<S> triple_cross8(const Vec<S>& u, const Vec<S>& v, const Vec<S>& w) {
    if (u.size() != 8 || v.size() != 8 || w.size() != 8) throw Error("triple cross product needs vectors in R^8");
    Vec<S> r(8, S(0));
    for (int z = 0; z < 8; ++z)
        r[static_cast<std::size_t>(z)] = evaluate<S>(cayley_form(), {basis_vec<S>(8, z), u, v, w});
    return r;
}

enum class PlaneKind { coassociative, associative, cayley };
std::string to_string(PlaneKind k);

template <class S>
struct CalPlane {
    PlaneKind kind;
    std::vector<Vec<S>> span;
};

struct CalResult {
    bool calibrated = false;
    int sign = 0;           // orientation sign of the calibration when calibrated
    double residual = 0.0;  // float mode only
};

CalResult is_calibrated(const CalPlane<QuadExt>& p);
CalResult is_calibrated(const CalPlane<double>& p, double tol = 1e-9);

// Gram-Schmidt; throws on a dependent set.
std::vector<Vec<double>> orthonormalize(const std::vector<Vec<double>>& vs, double tol = 1e-12);
int exact_rank(std::vector<Vec<QuadExt>> rows);

// Normalized adapted frames. Coassociative: e0 = delta dx0, e_i = (dx_i + l_i dy_i)/n_i,
// e_{3+i} = delta (dy_i - l_i dx_i)/n_i. Cayley: e_i = (dx_i + l_i dy_i)/n_i,
// e_{4+i} = (dy_i - l_i dx_i)/n_i, i = 0..3.
std::vector<Vec<double>> calibrated_frame(PlaneKind kind, const std::vector<double>& lambda, int delta = 1);

// Same frames with the 1/sqrt(1 + l^2) factors left out; squared norms returned separately.
struct ExactFrame {
    std::vector<Vec<QuadExt>> vectors;
    std::vector<QuadExt> squared_norms;
};
ExactFrame calibrated_frame_exact(PlaneKind kind, const std::vector<QuadExt>& lambda, int delta = 1);

enum class FrameKind { g2, spin7 };

struct FrameViolation {
    std::vector<int> inputs;  // e_i x e_j (g2) or e_i x e_j x e_k (spin7)
    int target = -1;          // index of the coordinate vector expected in the table
    QuadExt expected_coeff;
    double error = 0.0;
};

struct BasisCheck {
    bool ok = true;
    std::size_t relations = 0;
    std::vector<FrameViolation> violations;
};

BasisCheck basis_check(FrameKind kind, const std::vector<Vec<double>>& frame, double tol = 1e-9);
BasisCheck basis_check(FrameKind kind, const std::vector<Vec<QuadExt>>& frame);

enum class SlagIdentity { coass_x0, coass_phase, cayley_assoc, cayley_phase };
SlagIdentity parse_slag_identity(const std::string& s);
std::string to_string(SlagIdentity id);

struct SlagResult {
    bool holds = false;
    FormTable lhs, rhs;  // both multiplied by sqrt(1 + l^2) for the phase identities
};

SlagResult slag_reduction(SlagIdentity id, const Rat& lambda = Rat(0));

}  // namespace calib
