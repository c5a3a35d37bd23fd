#pragma once

#include "calib/rat.hpp"

#include <map>
#include <string>
#include <vector>

namespace calib {

// Sampled points of the figure curves over the (l1, l2) window [-6, 6]^2 with
// l3 = lift3(l1, l2).
struct CurvePoint {
    int figure = 0;
    std::string curve_id;
    double l1 = 0.0, l2 = 0.0;
    double residual = 0.0;  // |g| at the emitted point
    bool solid = false;
};

struct RegionConfig {
    int figure = 1;
    Rat eps{1, 10};
    int resolution = 400;
};

// Figure 1: sigma2 = -2 sqrt 2 + eps on CG0 (solid), l_i l_j = +-1 (dotted).
// Figure 2: sigma2 level (solid) and the zero loci of det L0 and the three det L on CG0 (dotted).
// Figure 3: l_i l_j = tau - eps (solid) and the same determinant loci on CG+ (dotted).
std::vector<CurvePoint> region_curves(const RegionConfig& cfg);

// Residual tolerance for emitted points.
constexpr double kRegionTol = 1e-8;

// Curve id under l1 <-> l2.
std::string swapped_curve_id(const std::string& id);

// Every point (a, b) on curve c has a partner (b, a) on swapped_curve_id(c) within tol.
bool swap_symmetric(const std::vector<CurvePoint>& pts, double tol = 1e-9);

// Defining function of a curve at (l1, l2); used to re-check emitted points.
double curve_value(int figure, const std::string& curve_id, double l1, double l2, const Rat& eps);

// det L0 and the three det L at (l1, l2, lift3(l1, l2)).
std::vector<double> region_determinants(double l1, double l2);

std::string region_csv(const std::vector<CurvePoint>& pts);

}  // namespace calib
