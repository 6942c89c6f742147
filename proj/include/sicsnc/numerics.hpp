#pragma once

#include <functional>

namespace sicsnc {

struct SeriesControl {
    double rel_tol = 1e-14;
    long max_terms = 1000000;
};

// Upper incomplete gamma Gamma(a,z) = int_z^inf t^{a-1} e^{-t} dt, a > 0, z >= 0.
// Power series below z = a+1, Lentz continued fraction above.
double upper_incomplete_gamma(double a, double z);

// Gauss hypergeometric 2F1(1, b; c; z) on |z| < 1 by direct series.
double gauss_2f1_1bc(double b, double c, double z, const SeriesControl& ctl = {});

// Adaptive Simpson quadrature with absolute tolerance. `hi` may be +infinity,
// handled with the substitution x = lo + t/(1-t).
double adaptive_quadrature(const std::function<double(double)>& f, double lo, double hi,
                           double tol);

struct MaxResult {
    double argmax = 0.0;
    double max = 0.0;
};

// Grid pre-scan followed by golden-section refinement of the best bracket.
// Returns the best point found; unimodality is not assumed.
MaxResult maximize_1d(const std::function<double(double)>& f, double lo, double hi,
                      double tol, int prescan = 64);

} // namespace sicsnc
