#pragma once

namespace nodesense::prediction {

/// A strictly positive position value observed at time t. Positions
/// follow a multiplicative model, so zero and negative values are
/// rejected rather than clamped.
struct PositionSample {
    double t = 0.0;
    double p = 1.0;
};

struct MeanTriple {
    double am = 0.0;
    double hm = 0.0;
    double gm = 0.0;
};

/// Geometric-mean interpolation: for positions following M e^{at}, the
/// sample at the midway time (t1+t2)/2 has position sqrt(p1 p2).
PositionSample predict_midway(const PositionSample& s1, const PositionSample& s2);

/// Continuation of the geometric progression to the next equidistant
/// time: t = 2 t2 - t1, p = p2^2 / p1.
PositionSample predict_extrapolated(const PositionSample& s1, const PositionSample& s2);

/// Arithmetic, harmonic and geometric means of two positive times.
/// gm = sqrt(am * hm), which equals sqrt(t1 t2); both routes are
/// computed and cross-checked internally.
MeanTriple am_hm_gm(double t1, double t2);

}  // namespace nodesense::prediction
