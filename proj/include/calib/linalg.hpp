#pragma once

#include <vector>

namespace calib {

using Mat = std::vector<std::vector<double>>;

Mat zeros(std::size_t r, std::size_t c);
Mat identity(std::size_t n);
Mat transpose(const Mat& a);
Mat matmul(const Mat& a, const Mat& b);
std::vector<double> matvec(const Mat& a, const std::vector<double>& x);
double max_abs_diff(const Mat& a, const Mat& b);

struct EigenSym {
    std::vector<double> values;  // ascending
    Mat vectors;                 // columns
};

// Cyclic Jacobi rotations until the off-diagonal mass drops below tol.
EigenSym jacobi_eigen(Mat a, double tol = 1e-13, int max_sweeps = 100);

struct Svd {
    Mat u;                     // m x m
    std::vector<double> s;     // min(m, n), descending
    Mat v;                     // n x n, columns
};

// Right singular vectors from the Jacobi eigenbasis of A^T A.
Svd svd_small(const Mat& a);

}  // namespace calib
