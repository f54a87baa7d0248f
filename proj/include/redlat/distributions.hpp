#pragma once

#include <variant>
#include <vector>

#include "redlat/rng.hpp"

namespace redlat {

// Shifted exponential SExp(D, mu): a positive minimum time D plus an
// exponential tail with rate mu. The shift stored here is per task.
struct ShiftedExp {
    double shift;  // D > 0
    double rate;   // mu > 0

    ShiftedExp(double shift_, double rate_);
};

// Pareto(lambda, alpha): scale lambda > 0, tail index alpha > 1 so the
// mean (and every expected value downstream) is finite.
struct ParetoDist {
    double scale;  // lambda
    double index;  // alpha

    ParetoDist(double scale_, double index_);
};

// Empirical distribution over observed lifetimes; samples are stored
// sorted and draws resample the atoms directly (no smoothing).
struct EmpiricalDist {
    explicit EmpiricalDist(std::vector<double> samples_);

    const std::vector<double>& samples() const { return sorted_; }

private:
    std::vector<double> sorted_;
};

using TaskTimeModel = std::variant<ShiftedExp, ParetoDist, EmpiricalDist>;

// Pr{X > t}; 1 for t below the distribution minimum. For the empirical
// model this is the fraction of samples strictly greater than t.
double tail(const TaskTimeModel& model, double t);

// Pr{X <= t}.
double cdf(const TaskTimeModel& model, double t);

// Inverse-CDF draw (uniform atom pick for the empirical model).
double sample(const TaskTimeModel& model, Xoshiro256& rng);

double mean(const TaskTimeModel& model);

// Smallest value the model can produce (D, lambda, or the least sample).
double min_value(const TaskTimeModel& model);

}  // namespace redlat
