#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rri/interval.hpp"
#include "rri/poly.hpp"

namespace rri {

/* Subdivision work item.  n_exp encodes the Newton speed N = 2^(2^n_exp),
 * so n_exp = 1 is the slowest speed N = 4. */
struct ActiveTask {
    OpenInterval interval;
    int n_exp = 1;
    int depth = 0;
};

enum class RootKind { isolating_interval, exact_point };

/* Either an open isolating interval with exactly one root strictly inside
 * and non-root endpoints, or an exact dyadic root hit by a subdivision
 * point. */
class RootDescriptor {
public:
    static RootDescriptor isolating(OpenInterval I) { return RootDescriptor(std::move(I)); }
    static RootDescriptor point(Dyadic p) { return RootDescriptor(std::move(p)); }

    RootKind kind() const { return kind_; }
    bool is_point() const { return kind_ == RootKind::exact_point; }

    const OpenInterval& interval() const { return *interval_; }
    const Dyadic& point() const { return *point_; }

    /* lower/upper bound of the described root's location */
    const Dyadic& position_low() const { return is_point() ? *point_ : interval_->lower(); }
    const Dyadic& position_high() const { return is_point() ? *point_ : interval_->upper(); }

private:
    explicit RootDescriptor(OpenInterval I)
        : kind_(RootKind::isolating_interval), interval_(std::move(I)) {}
    explicit RootDescriptor(Dyadic p) : kind_(RootKind::exact_point), point_(std::move(p)) {}

    RootKind kind_;
    std::optional<OpenInterval> interval_;
    std::optional<Dyadic> point_;
};

struct SubdivisionStats {
    std::int64_t tree_size = 0;        /* intervals var-counted as main-loop nodes */
    std::int64_t quadratic_steps = 0;  /* accepted boundary/Newton candidates */
    std::int64_t linear_steps = 0;     /* bisections */
    std::int64_t discarded = 0;        /* var == 0 nodes */
    std::int64_t var_calls = 0;        /* all var() invocations, probes included */
    int max_n_exp = 1;
    int max_depth = 0;
};

struct IsolationResult {
    std::vector<RootDescriptor> roots;  /* sorted, pairwise disjoint */
    SubdivisionStats stats;
};

/* One subdivision step, reported to the optional observer: a quadratic step
 * keeps a single candidate of width w/N, a linear step bisects. */
struct SubdivisionEvent {
    enum class Kind { quadratic, linear };
    Kind kind;
    OpenInterval parent;
    int parent_n_exp;
    int parent_depth;
    std::vector<ActiveTask> children;
};

struct IsolatorOptions {
    /* isolation domain; defaults to cauchy_interval(f).  Endpoints must not
     * be roots and the width must be a power of two. */
    std::optional<OpenInterval> interval;
    std::function<void(const SubdivisionEvent&)> observer;
};

/* (-2^(tau+1), 2^(tau+1)) for tau = coefficient_bitsize(f); contains every
 * real root of f strictly.  Requires f nonzero. */
OpenInterval cauchy_interval(const BigIntPoly& f);

enum class IntervalEnd { lower, upper };

struct NewtonCandidate {
    mpz_class grid_index;   /* clamped k in [2, 4N-2] */
    OpenInterval window;    /* (a + (k-2)w/4N, a + (k+2)w/4N), width w/N */
};

/* Newton step from one endpoint t of I: lambda = t - v*f(t)/f'(t), snapped
 * onto the grid of 4N subdivision points of I and widened by 2 grid cells
 * on each side.  All arithmetic exact; lambda itself is never formed.
 * Returns nothing when f'(t) = 0.  Caller guarantees f(t) != 0. */
std::optional<NewtonCandidate> newton_snap(const BigIntPoly& f, const OpenInterval& I, int v,
                                           int n_exp, IntervalEnd end);

/* Newton-accelerated Descartes isolation.  Requires deg f >= 1 and f
 * square-free. */
IsolationResult dsc2(const BigIntPoly& f, const IsolatorOptions& options = {});

/* Plain bisection Descartes baseline, same contracts. */
IsolationResult dsc_classic(const BigIntPoly& f, const IsolatorOptions& options = {});

}  // namespace rri
