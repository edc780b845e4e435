#pragma once

#include <random>
#include <vector>

#include "solk/perron.hpp"
#include "solk/presentation.hpp"

namespace solk {

// Point on the wedge graph in measure coordinates: pos in [0, v_edge).
struct GraphPoint {
    int edge = 0;
    long double pos = 0.0L;
};

// Truncated inverse-limit point (x_0, ..., x_N), f(x_{i+1}) = x_i.
struct SolenoidPoint {
    std::vector<GraphPoint> coords;
    int depth() const { return static_cast<int>(coords.size()) - 1; }
};

struct BracketResult {
    SolenoidPoint point;
    int certified_depth = 0;
};

struct DistBound {
    long double lo = 0.0L; // partial sum of the metric series
    long double hi = 0.0L; // lo + tail bound
};

struct ContractionReport {
    std::vector<long double> ratios;
    long double max_ratio = 0.0L;
    bool coincident = false; // x == y to working precision
};

// PL realization of an oriented presentation: each edge is an interval of
// length v_i and f has constant slope lambda.  Verification harness; all
// positions are long doubles seeded from the certified Perron data.
class Solenoid {
public:
    Solenoid(const GraphPresentation& oriented, const PerronData& pd);

    int edge_count() const { return static_cast<int>(measure_.size()); }
    long double lambda() const { return lambda_; }
    long double measure(int edge) const { return measure_[edge]; }
    long double lambda0() const { return 1.0L / lambda_; }
    long double tail_bound(int depth) const;

    GraphPoint apply_f(const GraphPoint& p) const;
    std::vector<GraphPoint> preimages(const GraphPoint& p) const;

    SolenoidPoint shift_forward(const SolenoidPoint& x) const;
    SolenoidPoint shift_backward(const SolenoidPoint& x) const;

    // Measure of the smallest connecting interval on the wedge.
    long double d0(const GraphPoint& a, const GraphPoint& b) const;
    DistBound metric(const SolenoidPoint& x, const SolenoidPoint& y) const;

    // [x, y]: head of x, tail selected among iterated preimages of x_0
    // nearest to the tail of y, certified unique per level.
    BracketResult bracket(const SolenoidPoint& x, const SolenoidPoint& y) const;

    ContractionReport stable_contraction(const SolenoidPoint& x, const SolenoidPoint& y,
                                         int steps) const;

    SolenoidPoint random_point(std::mt19937_64& rng, int depth) const;
    // Same head as x, preimage branches deviating at depths > split_depth.
    SolenoidPoint random_stable_companion(const SolenoidPoint& x, std::mt19937_64& rng,
                                          int split_depth) const;
    // y_0 within delta of x_0, deeper coords tracking x.
    SolenoidPoint random_nearby(const SolenoidPoint& x, std::mt19937_64& rng,
                                long double delta) const;

    bool consistent(const SolenoidPoint& x, long double tol = 1e-12L) const;

private:
    GraphPresentation pres_;
    long double lambda_ = 0.0L;
    std::vector<long double> measure_;
    std::vector<std::vector<long double>> cuts_; // per edge, word cut points
};

} // namespace solk
