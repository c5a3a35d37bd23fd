#pragma once

#include "calib/mpoly.hpp"

#include <string>
#include <vector>

namespace calib {

using PolyMatrix = std::vector<std::vector<MPoly>>;

// Fraction-free elimination with exact division; for n <= 4 the result is
// also compared against cofactor expansion.
MPoly det_poly(const PolyMatrix& m);
MPoly det_bareiss(const PolyMatrix& m);
MPoly det_cofactor(const PolyMatrix& m);

// Elementary symmetric polynomial of degree k in the named variables.
MPoly elementary_symmetric(const std::vector<std::string>& vars, unsigned k);

// Rewrites a polynomial symmetric in sym_vars as a polynomial in the
// elementary symmetric functions, named by out_names (s1, s2, ...). Any other
// variable is carried along as a coefficient.
MPoly symmetric_reduce(const MPoly& p, const std::vector<std::string>& sym_vars,
                       const std::vector<std::string>& out_names = {"s1", "s2", "s3"});

bool is_symmetric(const MPoly& p, const std::vector<std::string>& sym_vars);

// 16-term discriminant of a x^4 + b x^3 + c x^2 + d x + e.
MPoly quartic_discriminant(const MPoly& a, const MPoly& b, const MPoly& c, const MPoly& d,
                           const MPoly& e);

}  // namespace calib
