#pragma once

#include "calib/mpoly.hpp"

namespace calib::catalog {

// Variables: sigma1, sigma2 (coassociative symmetric functions), s, t, u
// (reduced coordinates), s1, s2, w (Cayley), v (the level parameter varpi).

MPoly det_L0_sigma();         // det L0 in sigma1, sigma2 on the locus
MPoly ell1();                 // l1(s, t)
MPoly ell1_s2_coeff();        // -t^4 + 2t^3 + 12t^2 + 16t - 20
MPoly ell1_at_zero();         // l1(0, t)
MPoly ell1_antidiagonal();    // l1(s, -s), factored form
MPoly ell1_edge_quotient();   // l1(2 sqrt 2, t) / (2 sqrt 2 + t)
MPoly step4_quartic();        // (384 - 96 sigma2 - ... - sigma2^4) / 3
MPoly det_L_ut();             // det L (1 - t)^4 in u, t
MPoly ell2();                 // l2(u, t)
MPoly quad_coeff_neg();       // t^4 - 2t^3 + 20t + 20
MPoly lin_coeff_neg();        // 6t^6 - 16t^5 - ...
MPoly const_coeff_neg();      // t^8 + 10t^7 - ...
MPoly tau_poly();             // t^6 - 6t^5 + 6t^4 + 16t^3 - 77t^2 + 204t - 192

MPoly f_cayley();             // as displayed
MPoly g_cayley();
MPoly quartic_coeff(char which);  // 'a'..'e' in w, v
MPoly q_coeff(int j);             // q_0, q_1, q_2 in w
MPoly delta_at_zero();            // Delta(0, v), factored form
MPoly r0_scaled();                // r_0 / (2^4 3^3) as displayed
MPoly s2_display();               // in w
MPoly s1_display();
MPoly s2_tilde();                 // in u
MPoly s1_tilde();

}  // namespace calib::catalog
