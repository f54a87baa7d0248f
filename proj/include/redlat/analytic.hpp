#pragma once

#include <stdexcept>

#include "redlat/plan.hpp"

// Closed forms for expected latency and cost of redundant / relaunched job
// execution under shifted-exponential and Pareto task lifetimes, plus the
// derived optima (baseline-cost redundancy ceilings, optimal relaunch delay).

namespace redlat {

// Raised when a plan/distribution pair has no implemented closed form
// (the simulator still covers such plans).
struct UnsupportedCombination : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Expected completion time of k Pareto(lambda, alpha) tasks with no
// redundancy and no relaunch: lambda * k! * G(1-1/a) / G(k+1-1/a).
double g_norelaunch(int k, double lambda, double alpha);

// --- zero-delay redundancy -------------------------------------------------
// SExp operations take the job-level shift D and use D/k per task.

Metrics zd_replicated_sexp(int k, int c, double D, double mu);
Metrics zd_coded_sexp(int k, int n, double D, double mu);
Metrics zd_replicated_pareto(int k, int c, double lambda, double alpha);
Metrics zd_coded_pareto(int k, int n, double lambda, double alpha);

// --- joint order-statistic moments ------------------------------------------

// E[X_{n:i} X_{n:j}] for X ~ Exp(mu), 1 <= i <= j <= n.
double joint_osm_exp(int n, int i, int j, double mu);

// E[X_{n:i} X_{n:j}] for X ~ Pareto(lambda, alpha), 1 <= i <= j <= n.
// Requires alpha > max{2/(n-i+1), 1/(n-j+1)} for the moment to exist.
double joint_osm_pareto(int n, int i, int j, double lambda, double alpha);

// Second moments (and standard deviations) of latency and cancellation
// cost for zero-delay plans. The plan must carry Replicate or Code and no
// relaunch/delay.
Metrics second_moments_sexp(const RedundancyPlan& plan, double D, double mu);
Metrics second_moments_pareto(const RedundancyPlan& plan, double lambda, double alpha);

// --- minimum latency at baseline cost ---------------------------------------

struct BaselineReplicated {
    int c_max;           // largest c whose cost does not exceed the c=0 cost
    double latency_min;  // expected latency at c_max
};
BaselineReplicated baseline_min_latency_replicated(int k, double lambda, double alpha);

struct BaselineCoded {
    int n_max;           // largest n with E[C_(k,n)] <= E[C_(k,k)]
    double latency_min;  // expected latency at n_max
    double upper_bound;  // lambda*alpha + g(k, alpha)
    // Largest n > k with E[T(n)] <= lambda*alpha + E[T(k)]/(n-k); an
    // alternate reading of the threshold rule, reported for comparison.
    int n_max_latency_rule;
};
BaselineCoded baseline_min_latency_coded(int k, double lambda, double alpha);

// --- task relaunch, Pareto lifetimes ----------------------------------------

// Pr{T > t} for k tasks with relaunch at delta and no redundancy.
double relaunch_tail(int k, double lambda, double alpha, double delta, double t);

// Expected latency and cost with relaunch at delta, no redundancy. With no
// redundancy nothing is left running at job completion, so both cost
// variants coincide. delta may be +inf (never relaunch), which equals the
// delta = 0 system exactly.
Metrics relaunch_metrics(int k, double lambda, double alpha, double delta);

struct RelaunchDerived {
    double q;                 // fraction expected to finish before delta_star
    double g;                 // no-relaunch expected latency
    double delta_star;        // closed-form approximate optimal delay
    double p_star;            // approximate expected fraction relaunched
    double alpha_sufficient;  // ln(k+1)/ln 4 tail-heaviness threshold
    double delta_exact;       // numerically minimized delay
};
RelaunchDerived opt_relaunch(int k, double lambda, double alpha);

// Redundancy combined with relaunch at delta.
Metrics relaunch_replicated_metrics(int k, int c, double delta, double lambda, double alpha);
Metrics relaunch_coded_metrics(int k, int n, double delta, double lambda, double alpha);

// --- plan dispatch (used by the CLI) ----------------------------------------

// Evaluate whichever closed form covers the plan; throws
// UnsupportedCombination when none does (delayed redundancy without
// relaunch, or relaunch under SExp lifetimes).
Metrics evaluate_pareto(const RedundancyPlan& plan, double lambda, double alpha,
                        bool with_moments = false);
Metrics evaluate_sexp(const RedundancyPlan& plan, double D, double mu,
                      bool with_moments = false);

}  // namespace redlat
