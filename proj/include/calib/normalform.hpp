#pragma once

#include "calib/linalg.hpp"
#include "calib/quadext.hpp"

#include <array>
#include <string>
#include <vector>

namespace calib {

enum class Component { CG0, CGplus, CGminus, CS0, CSplus, CSminus };
std::string to_string(Component c);

struct SingularTriple {
    std::array<double, 3> lambda{};  // descending
    Component component = Component::CG0;
    double locus_residual = 0.0;     // |s1 - s3|
    double symmetry_residual = 0.0;  // max |B - B^T| of the reduced block
};

struct SingularQuad {
    std::array<double, 4> lambda{};  // descending
    Component component = Component::CS0;
    double locus_residual = 0.0;
    double symmetry_residual = 0.0;
};

// (l1 + l2) / (l1 l2 - 1)
QuadExt lift3(const QuadExt& l1, const QuadExt& l2);
double lift3(double l1, double l2);
// (s1 - s3) / (s2 - 1) of the triple (l1, l2, l3)
QuadExt lift4(const QuadExt& l1, const QuadExt& l2, const QuadExt& l3);
double lift4(double l1, double l2, double l3);

// Elementary symmetric values e_0..e_n.
std::vector<double> elementary_values(const std::vector<double>& l);
std::vector<QuadExt> elementary_values(const std::vector<QuadExt>& l);

// Size 3 -> CG*, size 4 -> CS*. Throws off the locus or in no component.
Component classify(const std::vector<double>& lambda, double tol = 1e-8);
Component classify(const std::vector<QuadExt>& lambda);

// J is 3x4 (y = J x over R^4), 3x3 (x = J^T-graph over the y-space) or 4x4 (y = J x).
SingularTriple coass_normal_form(const Mat& j, double tol = 1e-9);
SingularTriple associative_normal_form(const Mat& j, double tol = 1e-9);
SingularQuad cayley_normal_form(const Mat& j, double tol = 1e-9);

// Tangent spans of the graphs above, in the coordinates of octalg.
std::vector<std::vector<double>> coass_graph_span(const Mat& j);
std::vector<std::vector<double>> associative_graph_span(const Mat& j);
std::vector<std::vector<double>> cayley_graph_span(const Mat& j);

// SO(3) matrix A with (g, A) preserving phi: g^* w^i = sum_j A_ij w^j.
Mat self_dual_action(const Mat& g);
// Left multiplication by conj(X(v)) on quaternions; maps the unit vector v to e0.
Mat su2_align(const std::vector<double>& v);

struct LawsonOsserman {
    std::vector<double> f;  // R^3
    Mat jac;                // 3x4
};
LawsonOsserman lawson_osserman(const std::vector<double>& x);

}  // namespace calib
