#include "redlat/plan.hpp"

#include <cmath>
#include <stdexcept>

namespace redlat {

void RedundancyPlan::validate() const {
    if (tasks < 1) {
        throw std::invalid_argument("plan: task count must be >= 1");
    }
    if (kind == RedundancyKind::Replicate && extra_replicas < 0) {
        throw std::invalid_argument("plan: replica count must be >= 0");
    }
    if (kind == RedundancyKind::Code && total_tasks < tasks) {
        throw std::invalid_argument("plan: coded total must satisfy n >= k");
    }
    if (std::isnan(delay) || delay < 0.0) {
        throw std::invalid_argument("plan: delay must be >= 0");
    }
    if (relaunch && std::isinf(delay)) {
        throw std::invalid_argument("plan: relaunch requires a finite delay");
    }
}

RedundancyPlan RedundancyPlan::canonical() const {
    validate();
    RedundancyPlan p = *this;
    if (p.kind == RedundancyKind::Replicate && p.extra_replicas == 0) {
        p.kind = RedundancyKind::None;
    }
    if (p.kind == RedundancyKind::Code && p.total_tasks == p.tasks) {
        p.kind = RedundancyKind::None;
        p.total_tasks = 0;
    }
    if (std::isinf(p.delay)) {
        // never fires
        p.kind = RedundancyKind::None;
        p.extra_replicas = 0;
        p.total_tasks = 0;
        p.delay = 0.0;
        p.relaunch = false;
    }
    if (p.kind == RedundancyKind::None && !p.relaunch) {
        p.delay = 0.0;  // delay is meaningless without a policy to fire
        p.extra_replicas = 0;
        p.total_tasks = 0;
    }
    return p;
}

}  // namespace redlat
