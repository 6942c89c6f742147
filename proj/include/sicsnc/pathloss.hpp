#pragma once

#include <cmath>

namespace sicsnc {

// Power path loss ell(r) = max{1, r/r0}^{-beta}, an exact power law beyond the
// reference distance r0. C and Cprime are the power-law envelope constants
// (Cprime r^-beta <= ell(r) <= C r^-beta past r0); for this family with r0 = 1
// both are 1 and the envelope is tight.
struct PathLossModel {
    double beta = 4.0;
    double r0 = 1.0;
    double C = 1.0;
    double Cprime = 1.0;

    double operator()(double r) const {
        if (r <= r0) return 1.0;
        return std::pow(r / r0, -beta);
    }
};

inline double pathloss(const PathLossModel& model, double r) { return model(r); }

} // namespace sicsnc
