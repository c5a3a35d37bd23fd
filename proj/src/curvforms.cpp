#include "calib/curvforms.hpp"

#include "calib/catalog.hpp"
#include "calib/octalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace calib {

std::string to_string(SffKind k) {
    switch (k) {
        case SffKind::coassociative: return "coass";
        case SffKind::associative: return "assoc";
        case SffKind::cayley: return "cayley";
    }
    return "?";
}

SffKind parse_sff_kind(const std::string& s) {
    if (s == "coass" || s == "coassociative") return SffKind::coassociative;
    if (s == "assoc" || s == "associative") return SffKind::associative;
    if (s == "cayley") return SffKind::cayley;
    throw Error("unknown kind: " + s);
}

std::string entry_name(int alpha, int i, int j) {
    if (i > j) std::swap(i, j);
    return "h" + std::to_string(alpha) + std::to_string(i) + std::to_string(j);
}

namespace {

struct Ranges {
    std::vector<int> normals, tangents;
};

Ranges ranges(SffKind k) {
    switch (k) {
        case SffKind::coassociative: return {{4, 5, 6}, {0, 1, 2, 3}};
        case SffKind::associative: return {{0, 1, 2, 3}, {4, 5, 6}};
        case SffKind::cayley: return {{4, 5, 6, 7}, {0, 1, 2, 3}};
    }
    throw Error("bad kind");
}

// A relation is a list of (sign, alpha, tangent) with the free tangent index appended.
using RelTerm = std::array<int, 3>;
using RelShape = std::vector<RelTerm>;

const std::vector<RelShape>& relation_shapes(SffKind k) {
    static const std::vector<RelShape> coass = {
        {{1, 4, 1}, {1, 5, 2}, {1, 6, 3}},
        {{1, 4, 0}, {1, 5, 3}, {-1, 6, 2}},
        {{1, 4, 3}, {-1, 5, 0}, {-1, 6, 1}},
        {{1, 4, 2}, {-1, 5, 1}, {1, 6, 0}},
    };
    static const std::vector<RelShape> assoc = {
        {{1, 1, 4}, {1, 2, 5}, {1, 3, 6}},
        {{1, 0, 4}, {1, 3, 5}, {-1, 2, 6}},
        {{1, 3, 4}, {-1, 0, 5}, {-1, 1, 6}},
        {{1, 2, 4}, {-1, 1, 5}, {1, 0, 6}},
    };
    static const std::vector<RelShape> cayley = {
        {{1, 4, 0}, {1, 5, 1}, {1, 6, 2}, {1, 7, 3}},
        {{1, 4, 1}, {-1, 5, 0}, {-1, 6, 3}, {1, 7, 2}},
        {{1, 4, 2}, {1, 5, 3}, {-1, 6, 0}, {-1, 7, 1}},
        {{1, 4, 3}, {-1, 5, 2}, {1, 6, 1}, {-1, 7, 0}},
    };
    switch (k) {
        case SffKind::coassociative: return coass;
        case SffKind::associative: return assoc;
        case SffKind::cayley: return cayley;
    }
    throw Error("bad kind");
}

std::vector<SffEntry> unknowns_of(SffKind k) {
    auto r = ranges(k);
    std::vector<SffEntry> out;
    for (int a : r.normals)
        for (std::size_t x = 0; x < r.tangents.size(); ++x)
            for (std::size_t y = x; y < r.tangents.size(); ++y) out.push_back({a, r.tangents[x], r.tangents[y]});
    return out;
}

std::size_t unknown_index(const std::vector<SffEntry>& u, int a, int i, int j) {
    if (i > j) std::swap(i, j);
    for (std::size_t n = 0; n < u.size(); ++n)
        if (u[n].alpha == a && u[n].i == i && u[n].j == j) return n;
    throw Error("no such entry");
}

std::vector<std::vector<Rat>> relation_rows(SffKind k, const std::vector<SffEntry>& u) {
    std::vector<std::vector<Rat>> rows;
    for (int t : ranges(k).tangents)
        for (const auto& shape : relation_shapes(k)) {
            std::vector<Rat> row(u.size(), Rat(0));
            for (const auto& [sg, a, i] : shape) {
                auto n = unknown_index(u, a, i, t);
                row[n] = row[n] + Rat(sg);
            }
            rows.push_back(row);
        }
    return rows;
}

struct Rref {
    std::vector<std::vector<Rat>> rows;
    std::vector<std::size_t> pivots;
};

Rref rref(std::vector<std::vector<Rat>> m, std::size_t cols) {
    Rref out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c].is_zero()) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        Rat inv = m[r][c].inv();
        for (auto& x : m[r]) x = x * inv;
        for (std::size_t q = 0; q < m.size(); ++q) {
            if (q == r || m[q][c].is_zero()) continue;
            Rat f = m[q][c];
            for (std::size_t k = 0; k < cols; ++k) m[q][k] = m[q][k] - f * m[r][k];
        }
        out.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    out.rows = std::move(m);
    return out;
}

std::vector<std::vector<Rat>> kernel_of(const Rref& e, std::size_t cols) {
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[f] = Rat(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rows[r][f];
        basis.push_back(v);
    }
    return basis;
}

}  // namespace

ConstraintSpace sff_constraint_space(SffKind kind) {
    ConstraintSpace cs{kind, unknowns_of(kind), {}, 0, {}};
    cs.relations = relation_rows(kind, cs.unknowns);
    auto e = rref(cs.relations, cs.unknowns.size());
    cs.rank = e.pivots.size();
    cs.kernel = kernel_of(e, cs.unknowns.size());
    return cs;
}

RemovalReport constraint_space_without(SffKind kind, std::size_t relation) {
    auto u = unknowns_of(kind);
    auto rows = relation_rows(kind, u);
    if (relation >= rows.size()) throw Error("relation index out of range");
    std::size_t full_rank = rref(rows, u.size()).pivots.size();
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(relation));
    std::size_t rank = rref(rows, u.size()).pivots.size();
    return {relation, u.size() - rank, rank < full_rank};
}

MPoly SffTensor::h(int alpha, int i, int j) const {
    if (i > j) std::swap(i, j);
    auto it = h_.find({alpha, i, j});
    return it == h_.end() ? MPoly(0) : it->second;
}

void SffTensor::set(int alpha, int i, int j, const MPoly& v) {
    if (i > j) std::swap(i, j);
    h_[{alpha, i, j}] = v;
}

std::vector<MPoly> SffTensor::relation_values() const {
    std::vector<MPoly> out;
    for (int t : ranges(kind_).tangents)
        for (const auto& shape : relation_shapes(kind_)) {
            MPoly s(0);
            for (const auto& [sg, a, i] : shape) s = s + MPoly(sg) * h(a, i, t);
            out.push_back(s);
        }
    return out;
}

namespace {

struct Slot {
    int sign, alpha, i, j;
};

// Group layout: each entry names a tensor component and the sign it carries.
const std::vector<std::vector<Slot>>& group_layout(SffKind k) {
    static const std::vector<std::vector<Slot>> coass = {
        {{1, 4, 2, 3}, {1, 5, 3, 1}, {1, 6, 1, 2}},
        {{1, 5, 0, 3}, {1, 5, 1, 2}, {1, 6, 0, 2}, {1, 6, 3, 1}},
        {{1, 6, 0, 1}, {1, 6, 2, 3}, {1, 4, 0, 3}, {1, 4, 1, 2}},
        {{1, 4, 0, 2}, {1, 4, 3, 1}, {1, 5, 0, 1}, {1, 5, 2, 3}},
    };
    static const std::vector<std::vector<Slot>> cayley = {
        {{1, 5, 2, 3}, {1, 6, 1, 3}, {1, 7, 1, 2}, {1, 5, 0, 1}, {1, 6, 0, 2}, {1, 7, 0, 3}},
        {{1, 6, 0, 3}, {1, 7, 0, 2}, {1, 4, 2, 3}, {-1, 6, 1, 2}, {-1, 7, 1, 3}, {-1, 4, 0, 1}},
        {{1, 7, 0, 1}, {1, 4, 1, 3}, {1, 5, 0, 3}, {1, 7, 2, 3}, {1, 4, 0, 2}, {1, 5, 1, 2}},
        {{-1, 4, 1, 2}, {-1, 5, 0, 2}, {-1, 6, 0, 1}, {1, 4, 0, 3}, {1, 5, 1, 3}, {1, 6, 2, 3}},
    };
    if (k == SffKind::coassociative) return coass;
    if (k == SffKind::cayley) return cayley;
    throw Error("no grouping for the associative kind");
}

struct Dependent {
    int alpha, i, j;
    std::vector<std::pair<int, std::array<int, 3>>> terms;
};

const std::vector<Dependent>& dependents(SffKind k) {
    static const std::vector<Dependent> coass = {
        {4, 0, 1, {{1, {6, 1, 2}}, {-1, {5, 1, 3}}}},
        {5, 0, 2, {{1, {4, 2, 3}}, {-1, {6, 1, 2}}}},
        {6, 0, 3, {{1, {5, 1, 3}}, {-1, {4, 2, 3}}}},
        {4, 0, 0, {{-1, {5, 0, 3}}, {1, {6, 0, 2}}}},
        {4, 1, 1, {{-1, {5, 1, 2}}, {-1, {6, 1, 3}}}},
        {4, 2, 2, {{1, {5, 1, 2}}, {-1, {6, 0, 2}}}},
        {4, 3, 3, {{1, {5, 0, 3}}, {1, {6, 1, 3}}}},
        {5, 0, 0, {{-1, {6, 0, 1}}, {1, {4, 0, 3}}}},
        {5, 1, 1, {{1, {6, 0, 1}}, {1, {4, 1, 2}}}},
        {5, 2, 2, {{-1, {6, 2, 3}}, {-1, {4, 1, 2}}}},
        {5, 3, 3, {{1, {6, 2, 3}}, {-1, {4, 0, 3}}}},
        {6, 0, 0, {{-1, {4, 0, 2}}, {1, {5, 0, 1}}}},
        {6, 1, 1, {{1, {4, 1, 3}}, {-1, {5, 0, 1}}}},
        {6, 2, 2, {{1, {4, 0, 2}}, {1, {5, 2, 3}}}},
        {6, 3, 3, {{-1, {4, 1, 3}}, {-1, {5, 2, 3}}}},
    };
    // Solved from the Cayley relations and checked against the kernel basis.
    static const std::vector<Dependent> cayley = {
        {4, 0, 0, {{-1, {5, 0, 1}}, {-1, {6, 0, 2}}, {-1, {7, 0, 3}}}},
        {4, 1, 1, {{1, {5, 0, 1}}, {1, {6, 1, 3}}, {-1, {7, 1, 2}}}},
        {4, 2, 2, {{-1, {5, 2, 3}}, {1, {6, 0, 2}}, {1, {7, 1, 2}}}},
        {4, 3, 3, {{1, {5, 2, 3}}, {-1, {6, 1, 3}}, {1, {7, 0, 3}}}},
        {5, 0, 0, {{1, {4, 0, 1}}, {-1, {6, 0, 3}}, {1, {7, 0, 2}}}},
        {5, 1, 1, {{-1, {4, 0, 1}}, {-1, {6, 1, 2}}, {-1, {7, 1, 3}}}},
        {5, 2, 2, {{1, {4, 2, 3}}, {1, {6, 1, 2}}, {-1, {7, 0, 2}}}},
        {5, 3, 3, {{-1, {4, 2, 3}}, {1, {6, 0, 3}}, {1, {7, 1, 3}}}},
        {6, 0, 0, {{1, {4, 0, 2}}, {1, {5, 0, 3}}, {-1, {7, 0, 1}}}},
        {6, 1, 1, {{-1, {4, 1, 3}}, {1, {5, 1, 2}}, {1, {7, 0, 1}}}},
        {6, 2, 2, {{-1, {4, 0, 2}}, {-1, {5, 1, 2}}, {-1, {7, 2, 3}}}},
        {6, 3, 3, {{1, {4, 1, 3}}, {-1, {5, 0, 3}}, {1, {7, 2, 3}}}},
        {7, 0, 0, {{1, {4, 0, 3}}, {-1, {5, 0, 2}}, {1, {6, 0, 1}}}},
        {7, 1, 1, {{1, {4, 1, 2}}, {1, {5, 1, 3}}, {-1, {6, 0, 1}}}},
        {7, 2, 2, {{-1, {4, 1, 2}}, {1, {5, 0, 2}}, {1, {6, 2, 3}}}},
        {7, 3, 3, {{-1, {4, 0, 3}}, {-1, {5, 1, 3}}, {-1, {6, 2, 3}}}},
    };
    if (k == SffKind::coassociative) return coass;
    if (k == SffKind::cayley) return cayley;
    throw Error("no grouping for the associative kind");
}

}  // namespace

GroupedVec grouped_symbols(SffKind kind) {
    GroupedVec g;
    for (const auto& grp : group_layout(kind)) {
        std::vector<MPoly> v;
        for (const auto& s : grp) v.push_back(MPoly(s.sign) * MPoly::var(entry_name(s.alpha, s.i, s.j)));
        g.push_back(v);
    }
    return g;
}

SffTensor group_dependents(SffKind kind, const GroupedVec& free) {
    const auto& layout = group_layout(kind);
    if (free.size() != layout.size()) throw Error("group_dependents: wrong number of groups");
    SffTensor t(kind);
    for (std::size_t g = 0; g < layout.size(); ++g) {
        if (free[g].size() != layout[g].size()) throw Error("group_dependents: wrong group size");
        for (std::size_t n = 0; n < layout[g].size(); ++n) {
            const auto& s = layout[g][n];
            t.set(s.alpha, s.i, s.j, MPoly(s.sign) * free[g][n]);
        }
    }
    for (const auto& d : dependents(kind)) {
        MPoly v(0);
        for (const auto& [sg, idx] : d.terms) v = v + MPoly(sg) * t.h(idx[0], idx[1], idx[2]);
        t.set(d.alpha, d.i, d.j, v);
    }
    return t;
}

PolyMatrix build_quadform(QuadFormKind kind, const std::vector<MPoly>& args) {
    auto one = MPoly(1);
    if (kind == QuadFormKind::L0 || kind == QuadFormKind::L) {
        if (args.size() != 3) throw Error("build_quadform: L0 and L take three arguments");
        const MPoly &l = args[0], &m = args[1], &n = args[2];
        if (kind == QuadFormKind::L0) {
            MPoly a01 = MPoly(-2) + l * m - n * n, a02 = MPoly(-2) + n * l - m * m, a12 = MPoly(-2) + m * n - l * l;
            return {{MPoly(6) + m * m + n * n, a01, a02},
                    {a01, MPoly(6) + n * n + l * l, a12},
                    {a02, a12, MPoly(6) + l * l + m * m}};
        }
        MPoly a02 = -one + m * n, a03 = one + n * l, a12 = -one - l * m, a13 = one + l * l;
        return {{MPoly(4), MPoly(0), a02, a03},
                {MPoly(0), MPoly(4) + pow(l + m, 2), a12, a13},
                {a02, a12, MPoly(4), MPoly(0)},
                {a03, a13, MPoly(0), MPoly(4) + pow(l + n, 2)}};
    }
    if (args.size() != 4) throw Error("build_quadform: M takes four arguments");
    const MPoly &e = args[0], &l = args[1], &m = args[2], &n = args[3];
    MPoly a01 = -one + l * m, a02 = -one + n * l, a12 = -one + m * n;
    MPoly el = e * l, em = e * m, en = e * n, ee = one + e * e;
    return {{MPoly(4), a01, a02, MPoly(0), -one - em, one + en},
            {a01, MPoly(4), a12, one + el, MPoly(0), -one - en},
            {a02, a12, MPoly(4), -one - el, one + em, MPoly(0)},
            {MPoly(0), one + el, -one - el, MPoly(4) + pow(e + l, 2), ee, ee},
            {-one - em, MPoly(0), one + em, ee, MPoly(4) + pow(e + m, 2), ee},
            {one + en, -one - en, MPoly(0), ee, ee, MPoly(4) + pow(e + n, 2)}};
}

MPoly laplacian_raw(const SffTensor& h, const std::vector<MPoly>& lambda) {
    auto r = ranges(h.kind());
    if (h.kind() == SffKind::associative) throw Error("laplacian_raw: not defined for the associative kind");
    // normal paired with tangent a: coass 3 + a (a = 1..3), Cayley 4 + a (a = 0..3)
    std::vector<std::pair<int, int>> pairs;  // (tangent, normal)
    if (h.kind() == SffKind::coassociative) {
        if (lambda.size() != 3) throw Error("laplacian_raw: need three singular values");
        for (int a = 1; a <= 3; ++a) pairs.push_back({a, 3 + a});
    } else {
        if (lambda.size() != 4) throw Error("laplacian_raw: need four singular values");
        for (int a = 0; a <= 3; ++a) pairs.push_back({a, 4 + a});
    }
    MPoly s(0);
    for (int a : r.normals)
        for (int i : r.tangents)
            for (int j : r.tangents) s = s + h.h(a, i, j) * h.h(a, i, j);
    for (int k : r.tangents)
        for (std::size_t x = 0; x < pairs.size(); ++x)
            for (std::size_t y = 0; y < pairs.size(); ++y) {
                auto [ta, na] = pairs[x];
                auto [tb, nb] = pairs[y];
                s = s + lambda[x] * lambda[y] * h.h(na, tb, k) * h.h(nb, ta, k);
            }
    return s;
}

static MPoly quad(const PolyMatrix& m, const std::vector<MPoly>& v) {
    MPoly s(0);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) s = s + v[i] * m[i][j] * v[j];
    return s;
}

MPoly laplacian_blocks(SffKind kind, const GroupedVec& free, const std::vector<MPoly>& l) {
    if (kind == SffKind::coassociative) {
        if (l.size() != 3 || free.size() != 4) throw Error("laplacian_blocks: shape mismatch");
        return quad(build_quadform(QuadFormKind::L0, {l[0], l[1], l[2]}), free[0]) +
               quad(build_quadform(QuadFormKind::L, {l[0], l[1], l[2]}), free[1]) +
               quad(build_quadform(QuadFormKind::L, {l[1], l[2], l[0]}), free[2]) +
               quad(build_quadform(QuadFormKind::L, {l[2], l[0], l[1]}), free[3]);
    }
    if (kind == SffKind::cayley) {
        if (l.size() != 4 || free.size() != 4) throw Error("laplacian_blocks: shape mismatch");
        MPoly s(0);
        for (std::size_t g = 0; g < 4; ++g)
            s = s + quad(build_quadform(QuadFormKind::M, {l[g], l[(g + 1) % 4], l[(g + 2) % 4], l[(g + 3) % 4]}),
                         free[g]);
        return s;
    }
    throw Error("laplacian_blocks: not defined for the associative kind");
}

bool laplacian_quadform_identity(SffKind kind) {
    std::vector<MPoly> l;
    std::size_t n = kind == SffKind::coassociative ? 3 : 4;
    for (std::size_t i = 0; i < n; ++i)
        l.push_back(MPoly::var("l" + std::to_string(kind == SffKind::coassociative ? i + 1 : i)));
    auto g = grouped_symbols(kind);
    return laplacian_raw(group_dependents(kind, g), l) == laplacian_blocks(kind, g, l);
}

SffNumeric random_constrained_sff(SffKind kind, std::mt19937_64& rng) {
    if (kind == SffKind::associative) throw Error("random_constrained_sff: tangent indices 0..3 only");
    static const ConstraintSpace coass = sff_constraint_space(SffKind::coassociative);
    static const ConstraintSpace cay = sff_constraint_space(SffKind::cayley);
    const ConstraintSpace& cs = kind == SffKind::coassociative ? coass : cay;
    std::normal_distribution<double> nd;
    std::vector<double> x(cs.unknowns.size(), 0.0);
    for (const auto& b : cs.kernel) {
        double c = nd(rng);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += c * b[i].to_double();
    }
    SffNumeric h{};
    for (std::size_t n = 0; n < x.size(); ++n) {
        const auto& e = cs.unknowns[n];
        h[static_cast<std::size_t>(e.alpha)][static_cast<std::size_t>(e.i)][static_cast<std::size_t>(e.j)] = x[n];
        h[static_cast<std::size_t>(e.alpha)][static_cast<std::size_t>(e.j)][static_cast<std::size_t>(e.i)] = x[n];
    }
    return h;
}

double wang_specialization_check(SffKind kind, const std::vector<double>& lambda, const SffNumeric& h) {
    std::vector<Vec<double>> frame;
    std::vector<int> normals;
    int delta = 1;
    if (kind == SffKind::coassociative) {
        if (lambda.size() != 3) throw Error("wang check: need three singular values");
        delta = lambda[0] * lambda[1] < 1 ? 1 : -1;
        frame = calibrated_frame(PlaneKind::coassociative, lambda, delta);
        normals = {4, 5, 6};
    } else if (kind == SffKind::cayley) {
        if (lambda.size() != 4) throw Error("wang check: need four singular values");
        frame = calibrated_frame(PlaneKind::cayley, lambda, 1);
        normals = {4, 5, 6, 7};
    } else {
        throw Error("wang check: not defined for the associative kind");
    }
    auto omega = [&](const std::vector<Vec<double>>& vs) {
        std::vector<std::vector<double>> m(4, std::vector<double>(4));
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = 0; b < 4; ++b) m[a][b] = vs[a][b];
        return delta * det_small(m);
    };
    std::vector<Vec<double>> tang(frame.begin(), frame.begin() + 4);
    double om = omega(tang);
    auto H = [&](int a, int i, int j) {
        return h[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    };
    double sq = 0;
    for (int a : normals)
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) sq += H(a, i, j) * H(a, i, j);
    double lap = -om * sq;
    for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                for (int a : normals)
                    for (int b : normals) {
                        auto vs = tang;
                        vs[static_cast<std::size_t>(i)] = frame[static_cast<std::size_t>(a)];
                        vs[static_cast<std::size_t>(j)] = frame[static_cast<std::size_t>(b)];
                        lap += 2 * omega(vs) * H(a, i, k) * H(b, j, k);
                    }
    double grad2 = 0;
    for (int k = 0; k < 4; ++k) {
        double g = 0;
        for (int i = 0; i < 4; ++i)
            for (int a : normals) {
                auto vs = tang;
                vs[static_cast<std::size_t>(i)] = frame[static_cast<std::size_t>(a)];
                g += omega(vs) * H(a, i, k);
            }
        grad2 += g * g;
    }
    double lhs = (-om * lap + grad2) / (om * om);

    std::vector<std::pair<int, int>> pairs;
    if (kind == SffKind::coassociative)
        for (int a = 1; a <= 3; ++a) pairs.push_back({a, 3 + a});
    else
        for (int a = 0; a <= 3; ++a) pairs.push_back({a, 4 + a});
    double rhs = sq;
    for (int k = 0; k < 4; ++k)
        for (std::size_t x = 0; x < pairs.size(); ++x)
            for (std::size_t y = 0; y < pairs.size(); ++y)
                rhs += lambda[x] * lambda[y] * H(pairs[x].second, pairs[y].first, k) * H(pairs[y].second, pairs[x].first, k);
    return std::fabs(lhs - rhs);
}

namespace {

MPoly L(const char* n) { return MPoly::var(n); }

RatFunc lift3_rf() {
    return RatFunc(L("l1") + L("l2"), L("l1") * L("l2") - MPoly(1));
}

RatFunc on_locus(const MPoly& p) { return substitute(p, "l3", lift3_rf()); }

std::string first_difference(const MPoly& d) {
    if (d.is_zero()) return "";
    const auto& [mono, c] = *d.terms().begin();
    MPoly lead = MPoly::monomial(c, {});
    for (std::size_t i = 0; i < mono.size(); ++i)
        if (mono[i]) lead = lead * MPoly::var(d.vars()[i]).pow(mono[i]);
    return lead.str();
}

}  // namespace

const MPoly& det_L0_poly() {
    static const MPoly d = det_poly(build_quadform(QuadFormKind::L0, {L("l1"), L("l2"), L("l3")}));
    return d;
}

const MPoly& det_M_reduced() {
    static const MPoly f = [] {
        MPoly d = det_poly(build_quadform(QuadFormKind::M, {L("w"), L("l1"), L("l2"), L("l3")}));
        MPoly r = symmetric_reduce(d, {"l1", "l2", "l3"});
        r = r.substitute("s3", L("s1") + L("w") * (MPoly(1) - L("s2")));
        return r.scale(QuadExt(Rat(1, 4)));
    }();
    return f;
}

std::vector<IdentityCheck> det_identity_suite(SffKind kind) {
    std::vector<IdentityCheck> out;
    MPoly l1 = L("l1"), l2 = L("l2"), l3 = L("l3");
    MPoly sig1 = l1 + l2 + l3, sig2 = l1 * l2 + l1 * l3 + l2 * l3;
    if (kind == SffKind::coassociative) {
        {
            MPoly rhs = catalog::det_L0_sigma().substitute({{"sigma1", sig1}, {"sigma2", sig2}});
            RatFunc diff = on_locus(det_L0_poly() - rhs);
            bool ok = diff.num().is_zero();
            out.push_back({"bL0_1", ok, ok ? "det L0 matches on s1 = s3" : "residual numerator " + diff.num().str()});
        }
        MPoly detL = det_poly(build_quadform(QuadFormKind::L, {l3, l1, l2}));
        MPoly t = l1 * l2, one(1);
        {
            RatFunc lhs = on_locus(detL) * RatFunc(pow(one - t, 2)) -
                          on_locus(MPoly(4) * (one - t) * (-sig2) * (MPoly(8) - sig2 * sig2));
            RatFunc rhs = on_locus(catalog::ell1().substitute({{"s", -sig2}, {"t", t}}));
            bool ok = lhs == rhs;
            out.push_back({"bL_1", ok, ok ? "det L (1-t)^2 - 4(1-t)s(8-s^2) = l1(s,t)" : "mismatch"});
        }
        {
            RatFunc lhs = on_locus(detL) * RatFunc(pow(one - t, 4));
            RatFunc rhs(catalog::det_L_ut().substitute({{"u", pow(l1 - l2, 2)}, {"t", t}}));
            bool ok = lhs == rhs;
            out.push_back({"bL_3", ok, ok ? "det L (1-t)^4 matches the u,t form" : "mismatch"});
        }
        return out;
    }
    if (kind == SffKind::cayley) {
        MPoly diff = det_M_reduced() - catalog::f_cayley();
        bool ok = diff.is_zero();
        out.push_back({"detM_f", ok,
                       ok ? "det M = 4 f" : "det M/4 - f = " + diff.str() + "; first differing term " + first_difference(diff)});
        MPoly vand = pow(l1 - l2, 2) * pow(l2 - l3, 2) * pow(l3 - l1, 2);
        MPoly g = symmetric_reduce(vand, {"l1", "l2", "l3"});
        g = g.substitute("s3", L("s1") + L("w") * (MPoly(1) - L("s2")));
        MPoly dg = g - catalog::g_cayley();
        out.push_back({"disc_g", dg.is_zero(), dg.is_zero() ? "discriminant product = g" : "difference " + dg.str()});
        return out;
    }
    throw Error("det_identity_suite: not defined for the associative kind");
}

}  // namespace calib
