#pragma once

#include <optional>

namespace redlat {

enum class RedundancyKind { None, Replicate, Code };

// Job shape: k tasks plus the redundancy policy applied at time delay.
// Replicate adds `extra_replicas` clones per remaining task; Code adds
// `total_tasks - k` parity tasks, any k completions finishing the job.
// With `relaunch`, tasks still running at `delay` are cancelled and fresh
// copies started in their place.
struct RedundancyPlan {
    int tasks = 1;  // k
    RedundancyKind kind = RedundancyKind::None;
    int extra_replicas = 0;  // c, Replicate only
    int total_tasks = 0;     // n, Code only (n >= k)
    double delay = 0.0;      // may be +inf when relaunch is false
    bool relaunch = false;
    bool cancel = true;  // cancellation policy tag; reported metrics carry both costs

    // Throws std::invalid_argument on violated invariants.
    void validate() const;

    // Degenerate-redundancy normalization: Replicate(0) and Code(n=k)
    // collapse to None, and an infinite delay without relaunch means the
    // policy never fires at all.
    RedundancyPlan canonical() const;
};

// Expected latency and the two expected cost variants; second moments and
// standard deviations are carried only where a closed form provides them.
struct Metrics {
    double latency = 0.0;
    double cost_cancel = 0.0;
    double cost_nocancel = 0.0;
    std::optional<double> latency_sq;
    std::optional<double> cost_sq;  // second moment of the cancellation cost
    std::optional<double> sd_latency;
    std::optional<double> sd_cost;
};

}  // namespace redlat
