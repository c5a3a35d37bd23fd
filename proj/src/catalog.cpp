#include "calib/catalog.hpp"

namespace calib::catalog {

#define CATALOG_ENTRY(name, text)             \
    MPoly name() {                            \
        static MPoly p = MPoly::parse(text);  \
        return p;                             \
    }

CATALOG_ENTRY(det_L0_sigma,
              "4*(2*sqrt(2) + sigma2)*(2*sqrt(2) - sigma2)*(4 - sigma2) + sigma1^2*(40 - (3 - sigma2)^2)")
CATALOG_ENTRY(ell1,
              "s^2*(-t^4 + 2*t^3 + 12*t^2 + 16*t - 20) + 2*s*(2*t^5 - 7*t^4 - 24*t^3 + 68*t^2 - 42*t + 12)"
              " + (4*t^6 - 4*t^5 - 93*t^4 + 78*t^3 + 240*t^2 - 408*t + 192)")
CATALOG_ENTRY(ell1_s2_coeff, "-t^4 + 2*t^3 + 12*t^2 + 16*t - 20")
CATALOG_ENTRY(ell1_at_zero, "4*t^6 - 4*t^5 - 93*t^4 + 78*t^3 + 240*t^2 - 408*t + 192")
CATALOG_ENTRY(ell1_antidiagonal, "(1 + s)*(2 + s)*(2*sqrt(2) + s)*(2*sqrt(2) - s)*(s^2 + 9*s + 12)")
CATALOG_ENTRY(ell1_edge_quotient,
              "4*t^5 - 4*t^4 - (101 + 20*sqrt(2))*t^3 + (174 + 106*sqrt(2))*t^2 - (88 + 76*sqrt(2))*t"
              " + (24 + 8*sqrt(2))")
CATALOG_ENTRY(step4_quartic, "(384 - 96*sigma2 - 17*sigma2^2 + 18*sigma2^3 - sigma2^4)/3")
CATALOG_ENTRY(det_L_ut,
              "-4*u^3 - u^2*(t^4 - 2*t^3 + 20*t + 20) + u*(-6*t^6 + 16*t^5 + 58*t^4 - 152*t^3 + 200*t^2 - 292*t + 56)"
              " + (-t^8 - 10*t^7 + 18*t^6 + 248*t^5 - 233*t^4 - 310*t^3 + 608*t^2 - 624*t + 192)")
CATALOG_ENTRY(ell2,
              "-u^2*(t^4 - 2*t^3 + 20*t + 20) + u*(-6*t^6 + 16*t^5 + 58*t^4 - 152*t^3 + 200*t^2 - 292*t + 56)"
              " + (-2*t^8 - 20*t^7 + 36*t^6 + 496*t^5 - 466*t^4 - 745*t^3 + 1891*t^2 - 2463*t + 1113)/2")
CATALOG_ENTRY(quad_coeff_neg, "t^4 - 2*t^3 + 20*t + 20")
CATALOG_ENTRY(lin_coeff_neg, "6*t^6 - 16*t^5 - 58*t^4 + 152*t^3 - 200*t^2 + 292*t - 56")
CATALOG_ENTRY(const_coeff_neg, "t^8 + 10*t^7 - 18*t^6 - 248*t^5 + 233*t^4 + 310*t^3 - 608*t^2 + 624*t - 192")
CATALOG_ENTRY(tau_poly, "t^6 - 6*t^5 + 6*t^4 + 16*t^3 - 77*t^2 + 204*t - 192")

CATALOG_ENTRY(f_cayley,
              "14*(w^2 + 1)*s1^4 + 4*(-5*w^3 + 2*w)*s1^3*s2 + (8*w^4 - 39*w^2 + 1)*s1^2*s2^2"
              " + 8*(2*w^3 - 3*w)*s1*s2^3 + 4*(w^2 - 1)*s2^4 + 4*(9*w^3 + 2*w)*s1^3"
              " + (-39*w^4 + 76*w^2 - 41)*s1^2*s2 + 2*(2*w^5 - 49*w^3 + 57*w)*s1*s2^2"
              " + 4*(w^6 + 6*w^4 - 14*w^2 + 9)*s2^3 + (-17*w^4 + 39*w^2 + 164)*s1^2"
              " + (w^5 - 32*w^3 - 62*w)*s1*s2 + 3*(3*w^4 + 19*w^2 - 16)*s2^2"
              " + 2*(-7*w^5 + 57*w^3 - 10*w)*s1 + (-3*w^6 - 8*w^4 + 207*w^2 - 216)*s2"
              " + (w^6 + 21*w^4 + 32*w^2 + 432)")
CATALOG_ENTRY(g_cayley,
              "-4*s1^4 + 4*w*s1^3*s2 + s1^2*s2^2 - 4*w*s1^3 + 18*s1^2*s2 - 18*w*s1*s2^2 - 4*s2^3"
              " - 27*s1^2 + 72*w*s1*s2 - 27*w^2*s2^2 - 54*w*s1 + 54*w^2*s2 - 27*w^2")

MPoly quartic_coeff(char which) {
    static const MPoly a = MPoly::parse("18*w^8 + 101*w^4 + 147*w^2 + 294");
    static const MPoly b = MPoly::parse("4*(3*v - 2)*w^7 + (-296*v + 377)*w^5 - 42*(v - 19)*w^3 - 21*(6*v - 49)*w");
    static const MPoly c = MPoly::parse(
        "162*w^10 - 108*(v - 9)*w^8 - 3*(2*v^2 + 252*v - 583)*w^6 + (-356*v^2 + 591*v + 2052)*w^4"
        " + 21*(9*v^2 + 44*v + 53)*w^2 + 21*(v^2 + 41*v + 164)");
    static const MPoly d = MPoly::parse(
        "324*(v + 1)*w^9 - 9*(24*v^2 - 168*v - 163)*w^7 - 6*(218*v^2 - 296*v - 159)*w^5"
        " + 21*(70*v^2 + 146*v - 93)*w^3 + 42*(4*v^3 + 3*v^2 - 17*v + 98)*w");
    static const MPoly e = MPoly::parse(
        "162*(v + 1)^2*w^8 - 3*(36*v^3 - 180*v^2 - 381*v - 187)*w^6 + (-584*v^3 + 189*v^2 + 168*v + 441)*w^4"
        " + 21*(4*v^4 + 56*v^3 + 57*v^2 - 207*v + 32)*w^2 + 84*(3 + v)*(6 + v)*(6 - v^2)");
    switch (which) {
        case 'a': return a;
        case 'b': return b;
        case 'c': return c;
        case 'd': return d;
        case 'e': return e;
    }
    throw Error("quartic_coeff: expected one of a..e");
}

MPoly q_coeff(int j) {
    static const MPoly q0 = MPoly::parse(
        "3*(2700096 + 1163799*w^2 + 1330364*w^4 + 1062698*w^6 + 1580412*w^8 + 903159*w^10 + 429824*w^12"
        " + 127520*w^14 + 46656*w^16 + 7776*w^18)");
    static const MPoly q1 = MPoly::parse(
        "3*(3543876 + 2815344*w^2 + 3011589*w^4 + 1886493*w^6 + 1951477*w^8 + 905359*w^10 + 411694*w^12"
        " + 82400*w^14 + 40176*w^16 + 7776*w^18)");
    static const MPoly q2 = MPoly::parse(
        "13471668 + 16035642*w^2 + 10141992*w^4 + 4948839*w^6 + 4735126*w^8 + 1238577*w^10 + 993492*w^12"
        " + 103740*w^14 + 101088*w^16 + 23328*w^18");
    switch (j) {
        case 0: return q0;
        case 1: return q1;
        case 2: return q2;
    }
    throw Error("q_coeff: index out of range");
}

CATALOG_ENTRY(delta_at_zero,
              "2^7*3^6*7^7*(3 + v)*(6 + v)*(6 - v^2)*(2704 + 1352*v + 4697*v^2 + 2098*v^3 + 225*v^4)^2")
CATALOG_ENTRY(r0_scaled,
              "1385917274395600128 + 17882051877103563072*w^2 + 34045174584434955312*w^4"
              " + 37514728151471928924*w^6 + 45171938822844834756*w^8 + 56967180342756234327*w^10"
              " + 64089597886958676060*w^12 + 62394851560231359960*w^14 + 57166154554106018456*w^16"
              " + 50558926859757015672*w^18 + 41555918902612042992*w^20 + 31350500674098250736*w^22"
              " + 21809242957716591384*w^24 + 14077181559906761562*w^26 + 8343090076003475816*w^28"
              " + 4478601647575856184*w^30 + 2153781244629264384*w^32 + 917430601362808380*w^34"
              " + 342862102135296960*w^36 + 111690528108904404*w^38 + 31346704386587268*w^40"
              " + 7373775300428007*w^42 + 1388666535802524*w^44 + 196789706537040*w^46"
              " + 19301707065096*w^48 + 1145559339252*w^50 + 30304891584*w^52")
CATALOG_ENTRY(s2_display,
              "10368*w^36*(80813044224*w^16 + 16087971538656*w^12 - 108674110379376*w^8"
              " - 1558904597746992*w^4 + 11809499692540555)")
CATALOG_ENTRY(s1_display,
              "1296*w^34*(17336846866176*w^16 + 223883373358080*w^12 - 3827466501483744*w^8"
              " - 26665451576093568*w^4 + 724970964850265675)")
CATALOG_ENTRY(s2_tilde,
              "80813044224*u^4 + 16087971538656*u^3 - 108674110379376*u^2 - 1558904597746992*u"
              " + 11809499692540555")
CATALOG_ENTRY(s1_tilde,
              "17336846866176*u^4 + 223883373358080*u^3 - 3827466501483744*u^2 - 26665451576093568*u"
              " + 724970964850265675")

}  // namespace calib::catalog
