#include "redlat/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace redlat {

ShiftedExp::ShiftedExp(double shift_, double rate_) : shift(shift_), rate(rate_) {
    if (!(shift > 0.0) || !std::isfinite(shift)) {
        throw std::invalid_argument("ShiftedExp: shift must be positive");
    }
    if (!(rate > 0.0) || !std::isfinite(rate)) {
        throw std::invalid_argument("ShiftedExp: rate must be positive");
    }
}

ParetoDist::ParetoDist(double scale_, double index_) : scale(scale_), index(index_) {
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw std::invalid_argument("ParetoDist: scale must be positive");
    }
    if (!(index > 1.0) || !std::isfinite(index)) {
        throw std::invalid_argument("ParetoDist: tail index must exceed 1");
    }
}

EmpiricalDist::EmpiricalDist(std::vector<double> samples_) : sorted_(std::move(samples_)) {
    if (sorted_.empty()) {
        throw std::invalid_argument("EmpiricalDist: sample set is empty");
    }
    for (double s : sorted_) {
        if (!(s > 0.0) || !std::isfinite(s)) {
            throw std::invalid_argument("EmpiricalDist: samples must be positive");
        }
    }
    std::sort(sorted_.begin(), sorted_.end());
}

double tail(const TaskTimeModel& model, double t) {
    if (t < 0.0) {
        throw std::invalid_argument("tail: t must be >= 0");
    }
    struct Visitor {
        double t;
        double operator()(const ShiftedExp& d) const {
            if (t <= d.shift) return 1.0;
            return std::exp(-d.rate * (t - d.shift));
        }
        double operator()(const ParetoDist& d) const {
            if (t <= d.scale) return 1.0;
            return std::exp(d.index * std::log(d.scale / t));
        }
        double operator()(const EmpiricalDist& d) const {
            const auto& s = d.samples();
            const auto above = s.end() - std::upper_bound(s.begin(), s.end(), t);
            return static_cast<double>(above) / static_cast<double>(s.size());
        }
    };
    return std::visit(Visitor{t}, model);
}

double cdf(const TaskTimeModel& model, double t) {
    return 1.0 - tail(model, t);
}

double sample(const TaskTimeModel& model, Xoshiro256& rng) {
    struct Visitor {
        Xoshiro256& rng;
        double operator()(const ShiftedExp& d) const {
            return d.shift - std::log(rng.uniform()) / d.rate;
        }
        double operator()(const ParetoDist& d) const {
            return d.scale * std::exp(-std::log(rng.uniform()) / d.index);
        }
        double operator()(const EmpiricalDist& d) const {
            const auto& s = d.samples();
            auto idx = static_cast<std::size_t>(rng.uniform() * static_cast<double>(s.size()));
            if (idx >= s.size()) idx = s.size() - 1;  // uniform() may return 1
            return s[idx];
        }
    };
    return std::visit(Visitor{rng}, model);
}

double mean(const TaskTimeModel& model) {
    struct Visitor {
        double operator()(const ShiftedExp& d) const { return d.shift + 1.0 / d.rate; }
        double operator()(const ParetoDist& d) const {
            return d.scale * d.index / (d.index - 1.0);
        }
        double operator()(const EmpiricalDist& d) const {
            double sum = 0.0;
            for (double s : d.samples()) sum += s;
            return sum / static_cast<double>(d.samples().size());
        }
    };
    return std::visit(Visitor{}, model);
}

double min_value(const TaskTimeModel& model) {
    struct Visitor {
        double operator()(const ShiftedExp& d) const { return d.shift; }
        double operator()(const ParetoDist& d) const { return d.scale; }
        double operator()(const EmpiricalDist& d) const { return d.samples().front(); }
    };
    return std::visit(Visitor{}, model);
}

}  // namespace redlat
