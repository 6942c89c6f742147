#include "sicsnc/numerics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace sicsnc {

namespace {

// regularized lower gamma P(a,z) by series, valid for z < a+1
double lower_gamma_series(double a, double z) {
    double term = 1.0 / a;
    double sum = term;
    double ap = a;
    for (long k = 0; k < 1000; ++k) {
        ap += 1.0;
        term *= z / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * std::numeric_limits<double>::epsilon())
            break;
    }
    return sum * std::exp(-z + a * std::log(z) - std::lgamma(a));
}

// regularized upper gamma Q(a,z) by Lentz continued fraction, valid for z >= a+1
double upper_gamma_cf(double a, double z) {
    const double eps = std::numeric_limits<double>::epsilon();
    const double tiny = std::numeric_limits<double>::min() / eps;
    double b = z + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (long i = 1; i < 1000; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) <= eps) break;
    }
    return std::exp(-z + a * std::log(z) - std::lgamma(a)) * h;
}

} // namespace

double upper_incomplete_gamma(double a, double z) {
    if (!(a > 0.0) || !(z >= 0.0))
        throw std::domain_error("upper_incomplete_gamma: need a > 0 and z >= 0");
    const double lg = std::lgamma(a);
    if (z == 0.0) return std::exp(lg);
    if (z < a + 1.0) return (1.0 - lower_gamma_series(a, z)) * std::exp(lg);
    return upper_gamma_cf(a, z) * std::exp(lg);
}

double gauss_2f1_1bc(double b, double c, double z, const SeriesControl& ctl) {
    if (!(std::fabs(z) < 1.0))
        throw std::domain_error("gauss_2f1_1bc: series requires |z| < 1");
    if (!(c > 0.0))
        throw std::domain_error("gauss_2f1_1bc: need c > 0");
    double term = 1.0;
    double sum = 1.0;
    for (long k = 0; k < ctl.max_terms; ++k) {
        const double kk = static_cast<double>(k);
        term *= (b + kk) / (c + kk) * z;
        sum += term;
        if (std::fabs(term) <= ctl.rel_tol * std::fabs(sum)) return sum;
    }
    throw std::runtime_error("gauss_2f1_1bc: series did not converge");
}

namespace {

struct SimpsonState {
    const std::function<double(double)>* f;
    long evals = 0;
    long max_evals = 2000000;
};

double eval(SimpsonState& st, double x) {
    if (++st.evals > st.max_evals)
        throw std::runtime_error("adaptive_quadrature: evaluation budget exceeded");
    const double v = (*st.f)(x);
    return std::isfinite(v) ? v : 0.0;
}

double simpson_rec(SimpsonState& st, double a, double b, double fa, double fm, double fb,
                   double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = eval(st, lm);
    const double frm = eval(st, rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0)
        throw std::runtime_error("adaptive_quadrature: max subdivision depth reached");
    if (std::fabs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_rec(st, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
         + simpson_rec(st, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double simpson(SimpsonState& st, double a, double b, double tol) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = eval(st, a);
    const double fm = eval(st, m);
    const double fb = eval(st, b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(st, a, b, fa, fm, fb, whole, tol, 48);
}

} // namespace

double adaptive_quadrature(const std::function<double(double)>& f, double lo, double hi,
                           double tol) {
    if (!(tol > 0.0)) throw std::domain_error("adaptive_quadrature: tol must be > 0");
    SimpsonState st{&f};
    if (std::isinf(hi)) {
        // x = lo + t/(1-t), dx = dt/(1-t)^2
        auto g = [&](double t) {
            if (t >= 1.0) return 0.0;
            const double om = 1.0 - t;
            return f(lo + t / om) / (om * om);
        };
        std::function<double(double)> gf = g;
        SimpsonState st2{&gf};
        return simpson(st2, 0.0, 1.0, tol);
    }
    return simpson(st, lo, hi, tol);
}

MaxResult maximize_1d(const std::function<double(double)>& f, double lo, double hi,
                      double tol, int prescan) {
    if (!(lo < hi)) throw std::domain_error("maximize_1d: need lo < hi");
    if (prescan < 2) prescan = 2;

    std::vector<double> xs(static_cast<std::size_t>(prescan) + 1);
    std::vector<double> fs(xs.size());
    int best = 0;
    for (int i = 0; i <= prescan; ++i) {
        xs[i] = lo + (hi - lo) * static_cast<double>(i) / prescan;
        fs[i] = f(xs[i]);
        if (fs[i] > fs[best]) best = i;
    }

    double a = xs[best > 0 ? best - 1 : 0];
    double b = xs[best < prescan ? best + 1 : prescan];
    MaxResult result{xs[best], fs[best]};

    // golden-section on the bracket around the pre-scan winner
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > tol) {
        if (f1 >= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    const double xm = 0.5 * (a + b);
    const double fm = f(xm);
    if (fm > result.max) result = {xm, fm};
    if (f1 > result.max) result = {x1, f1};
    if (f2 > result.max) result = {x2, f2};
    return result;
}

} // namespace sicsnc
