#include "calib/region.hpp"

#include "calib/curvforms.hpp"
#include "calib/normalform.hpp"
#include "calib/octalg.hpp"
#include "calib/theoremsuite.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

namespace calib {

namespace {

using LD = long double;

// Polynomial in (a, b, c) compiled to exponent triples.
struct CompiledPoly {
    struct Term {
        LD c;
        unsigned e[3];
    };
    std::vector<Term> terms;

    explicit CompiledPoly(const MPoly& p) {
        static const char* names[3] = {"a", "b", "c"};
        for (const auto& [m, q] : p.terms()) {
            Term t{static_cast<LD>(q.to_double()), {0, 0, 0}};
            for (std::size_t i = 0; i < m.size(); ++i) {
                int k = -1;
                for (int j = 0; j < 3; ++j)
                    if (p.vars()[i] == names[j]) k = j;
                if (k < 0) throw Error("unexpected variable " + p.vars()[i]);
                t.e[k] = m[i];
            }
            terms.push_back(t);
        }
    }
    LD eval(LD a, LD b, LD c) const {
        LD s = 0;
        for (const auto& t : terms) {
            LD v = t.c;
            for (unsigned k = 0; k < t.e[0]; ++k) v *= a;
            for (unsigned k = 0; k < t.e[1]; ++k) v *= b;
            for (unsigned k = 0; k < t.e[2]; ++k) v *= c;
            s += v;
        }
        return s;
    }
};

struct CompiledMatrix {
    std::vector<std::vector<CompiledPoly>> e;
    explicit CompiledMatrix(QuadFormKind k) {
        auto m = build_quadform(k, {MPoly::var("a"), MPoly::var("b"), MPoly::var("c")});
        for (const auto& row : m) {
            std::vector<CompiledPoly> r;
            for (const auto& x : row) r.emplace_back(x);
            e.push_back(std::move(r));
        }
    }
    LD det(LD a, LD b, LD c) const {
        std::vector<std::vector<LD>> m;
        for (const auto& row : e) {
            std::vector<LD> r;
            for (const auto& x : row) r.push_back(x.eval(a, b, c));
            m.push_back(std::move(r));
        }
        return det_small(std::move(m));
    }
};

const CompiledMatrix& mat_L0() {
    static const CompiledMatrix m(QuadFormKind::L0);
    return m;
}
const CompiledMatrix& mat_L() {
    static const CompiledMatrix m(QuadFormKind::L);
    return m;
}

LD lift3_ld(LD a, LD b) { return (a + b) / (a * b - 1); }

using Fn = std::function<LD(LD, LD)>;
using Mask = std::function<bool(LD, LD)>;

struct Curve {
    std::string id;
    bool solid;
    Fn g;
    Mask mask;
};

LD pair_product(const std::string& pair, LD a, LD b) {
    LD c = lift3_ld(a, b);
    if (pair == "l1l2") return a * b;
    if (pair == "l2l3") return b * c;
    return a * c;
}

LD det_value(const std::string& id, LD a, LD b) {
    LD c = lift3_ld(a, b);
    if (id == "detL0") return mat_L0().det(a, b, c);
    if (id == "detL_1") return mat_L().det(a, b, c);
    if (id == "detL_2") return mat_L().det(b, c, a);
    return mat_L().det(c, a, b);
}

LD sigma2_value(LD a, LD b) { return a * b + (a + b) * lift3_ld(a, b); }

LD tau_minus(const Rat& eps) {
    static const double tau_mid = [] {
        auto e = tau_enclosure(Rat(1, 1000000000));
        return ((e.lo + e.hi) / Rat(2)).to_double();
    }();
    return static_cast<LD>(tau_mid) - static_cast<LD>(eps.to_double());
}

LD sigma2_level(const Rat& eps) { return -2 * std::sqrt(2.0L) + static_cast<LD>(eps.to_double()); }

std::vector<Curve> curves_for(int figure, const Rat& eps) {
    Mask cg0 = [](LD a, LD b) { return a * b < 1; };
    Mask cgp = [](LD a, LD b) { return a > 0 && b > 0 && a * b > 1; };
    Mask any = [](LD, LD) { return true; };
    std::vector<Curve> out;
    const std::vector<std::string> dets = {"detL0", "detL_1", "detL_2", "detL_3"};
    const std::vector<std::string> pairs = {"l1l2", "l2l3", "l1l3"};
    LD level = sigma2_level(eps);
    Fn sig = [level](LD a, LD b) { return sigma2_value(a, b) - level; };
    if (figure == 1) {
        out.push_back({"sigma2", true, sig, cg0});
        for (const auto& p : pairs)
            for (int s : {1, -1}) {
                std::string id = p + (s > 0 ? "=1" : "=-1");
                Mask m = (p == "l1l2" && s > 0) ? any : cg0;  // l1 l2 = 1 bounds CG0
                out.push_back({id, false, [p, s](LD a, LD b) { return pair_product(p, a, b) - s; }, m});
            }
    } else if (figure == 2) {
        out.push_back({"sigma2", true, sig, cg0});
        for (const auto& d : dets) out.push_back({d, false, [d](LD a, LD b) { return det_value(d, a, b); }, cg0});
    } else if (figure == 3) {
        LD T = tau_minus(eps);
        for (const auto& p : pairs)
            out.push_back({p + "=tau-eps", true, [p, T](LD a, LD b) { return pair_product(p, a, b) - T; }, cgp});
        for (const auto& d : dets) out.push_back({d, false, [d](LD a, LD b) { return det_value(d, a, b); }, cgp});
    } else {
        throw Error("figure must be 1, 2 or 3");
    }
    return out;
}

bool finite(LD x) { return std::isfinite(static_cast<double>(x)); }

// Bisects f on [lo, hi] (sign change) down to adjacent doubles.
double bisect(const std::function<LD(LD)>& f, double lo, double hi, LD flo) {
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        LD fm = f(mid);
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return std::fabs(static_cast<double>(f(lo))) <= std::fabs(static_cast<double>(f(hi))) ? lo : hi;
}

}  // namespace

std::string swapped_curve_id(const std::string& id) {
    if (id == "detL_1") return "detL_2";
    if (id == "detL_2") return "detL_1";
    if (id.rfind("l2l3", 0) == 0) return "l1l3" + id.substr(4);
    if (id.rfind("l1l3", 0) == 0) return "l2l3" + id.substr(4);
    return id;
}

double curve_value(int figure, const std::string& curve_id, double l1, double l2, const Rat& eps) {
    for (const auto& c : curves_for(figure, eps))
        if (c.id == curve_id) return static_cast<double>(c.g(l1, l2));
    throw Error("unknown curve " + curve_id);
}

std::vector<double> region_determinants(double l1, double l2) {
    std::vector<double> out;
    for (const char* d : {"detL0", "detL_1", "detL_2", "detL_3"}) out.push_back(static_cast<double>(det_value(d, l1, l2)));
    return out;
}

std::vector<CurvePoint> region_curves(const RegionConfig& cfg) {
    if (cfg.resolution < 2 || cfg.resolution > 4096) throw Error("resolution must lie in [2, 4096]");
    const int n = cfg.resolution, last = n - 1;
    std::vector<double> x(static_cast<std::size_t>(n));
    // Integer numerators keep the grid exactly symmetric about 0.
    for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = (12.0 * i - 6.0 * last) / last;

    std::vector<CurvePoint> out;
    for (const auto& cv : curves_for(cfg.figure, cfg.eps)) {
        std::vector<LD> val(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
        std::vector<char> ok(val.size());
        auto at = [n](int i, int j) { return static_cast<std::size_t>(j) * static_cast<std::size_t>(n) + static_cast<std::size_t>(i); };
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) {
                LD a = x[static_cast<std::size_t>(i)], b = x[static_cast<std::size_t>(j)];
                LD v = (a * b == 1) ? LD(NAN) : cv.g(a, b);
                val[at(i, j)] = v;
                ok[at(i, j)] = finite(v) && cv.mask(a, b);
            }
        auto emit = [&](double a, double b) {
            if (!cv.mask(a, b)) return;
            LD g = cv.g(a, b);
            if (!finite(g) || std::fabs(static_cast<double>(g)) > kRegionTol) return;
            out.push_back({cfg.figure, cv.id, a, b, std::fabs(static_cast<double>(g)), cv.solid});
        };
        // Edges along l1, then along l2.
        for (int j = 0; j < n; ++j)
            for (int i = 0; i + 1 < n; ++i) {
                std::size_t p = at(i, j), q = at(i + 1, j);
                if (!ok[p] || !ok[q] || (val[p] < 0) == (val[q] < 0)) continue;
                double b = x[static_cast<std::size_t>(j)];
                auto f = [&](LD a) { return cv.g(a, b); };
                emit(bisect(f, x[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(i + 1)], val[p]), b);
            }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j + 1 < n; ++j) {
                std::size_t p = at(i, j), q = at(i, j + 1);
                if (!ok[p] || !ok[q] || (val[p] < 0) == (val[q] < 0)) continue;
                double a = x[static_cast<std::size_t>(i)];
                auto f = [&](LD b) { return cv.g(a, b); };
                emit(a, bisect(f, x[static_cast<std::size_t>(j)], x[static_cast<std::size_t>(j + 1)], val[p]));
            }
    }
    return out;
}

bool swap_symmetric(const std::vector<CurvePoint>& pts, double tol) {
    std::map<std::string, std::vector<std::pair<double, double>>> by;
    for (const auto& p : pts) by[p.curve_id].push_back({p.l1, p.l2});
    for (auto& [k, v] : by) std::sort(v.begin(), v.end());
    for (const auto& p : pts) {
        auto it = by.find(swapped_curve_id(p.curve_id));
        if (it == by.end()) return false;
        const auto& v = it->second;
        auto lo = std::lower_bound(v.begin(), v.end(), std::make_pair(p.l2 - tol, -1e300));
        bool found = false;
        for (; lo != v.end() && lo->first <= p.l2 + tol; ++lo)
            if (std::fabs(lo->second - p.l1) <= tol) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

std::string region_csv(const std::vector<CurvePoint>& pts) {
    std::ostringstream os;
    os.precision(17);
    os << "figure,curve_id,lambda1,lambda2\n";
    for (const auto& p : pts) os << p.figure << "," << p.curve_id << "," << p.l1 << "," << p.l2 << "\n";
    return os.str();
}

}  // namespace calib
