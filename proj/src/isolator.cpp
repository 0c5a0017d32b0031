#include "rri/isolator.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "rri/sign_variations.hpp"

namespace rri {

namespace {

/* 2^n_exp as a plain integer; the shift amounts derived from it must stay
 * machine-sized for GMP, which caps the usable speeds far beyond anything a
 * terminating run can reach. */
std::int64_t log2_N(int n_exp) {
    if (n_exp < 1) throw std::invalid_argument("n_exp must be at least 1");
    if (n_exp > 40) throw std::overflow_error("Newton speed exponent out of range");
    return std::int64_t{1} << n_exp;
}

/* floor(num * 2^s / den) with floor division toward -infinity */
mpz_class floor_scaled_quotient(mpz_class num, mpz_class den, std::int64_t s) {
    if (s >= 0)
        mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(s));
    else
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-s));
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

}  // namespace

OpenInterval cauchy_interval(const BigIntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("cauchy_interval: zero polynomial");
    const int tau = coefficient_bitsize(f);
    return OpenInterval(-Dyadic::power_of_two(tau + 1), Dyadic::power_of_two(tau + 1));
}

std::optional<NewtonCandidate> newton_snap(const BigIntPoly& f, const OpenInterval& I, int v,
                                           int n_exp, IntervalEnd end) {
    if (v < 2) throw std::invalid_argument("newton_snap: requires v >= 2");
    const Dyadic& t = end == IntervalEnd::lower ? I.lower() : I.upper();
    const Dyadic ft = poly_eval(f, t);
    if (ft.is_zero()) throw std::invalid_argument("newton_snap: f vanishes at the endpoint");
    const Dyadic dft = poly_eval(poly_derivative(f), t);
    if (dft.is_zero()) return std::nullopt;

    const Dyadic w = I.width();
    if (!w.is_power_of_two())
        throw std::invalid_argument("newton_snap: interval width must be a power of two");
    const std::int64_t log4N = 2 + log2_N(n_exp);

    /* 4N*(lambda - a)/w = [t == b: 4N] - 4N*v*f(t) / (f'(t) * w); the floor
     * is taken exactly on the cross-multiplied form. */
    const std::int64_t s = ft.exponent() - dft.exponent() - w.exponent() + log4N;
    mpz_class k = floor_scaled_quotient(mpz_class(-v) * ft.mantissa(), dft.mantissa(), s);
    mpz_class four_n = 1;
    mpz_mul_2exp(four_n.get_mpz_t(), four_n.get_mpz_t(), static_cast<mp_bitcnt_t>(log4N));
    if (end == IntervalEnd::upper) k += four_n;

    if (k < 2) k = 2;
    if (k > four_n - 2) k = four_n - 2;

    const std::int64_t cell = w.exponent() - log4N;  /* w/(4N) = 2^cell */
    const Dyadic lo = I.lower() + Dyadic(k - 2, cell);
    const Dyadic hi = I.lower() + Dyadic(k + 2, cell);
    return NewtonCandidate{std::move(k), OpenInterval(lo, hi)};
}

namespace {

class Engine {
public:
    Engine(const BigIntPoly& f, const IsolatorOptions& options, bool use_newton)
        : f_(f), options_(options), use_newton_(use_newton) {}

    IsolationResult run() {
        if (f_.degree() < 1)
            throw std::invalid_argument("isolate: degree must be at least 1");
        const OpenInterval start = options_.interval ? *options_.interval : cauchy_interval(f_);
        if (!start.width().is_power_of_two())
            throw std::invalid_argument("isolate: interval width must be a power of two");
        if (poly_eval(f_, start.lower()).is_zero() || poly_eval(f_, start.upper()).is_zero())
            throw std::invalid_argument("isolate: interval endpoint is a root");

        stack_.push_back(ActiveTask{start, 1, 0});
        while (!stack_.empty()) {
            ActiveTask task = std::move(stack_.back());
            stack_.pop_back();
            process(task);
        }

        IsolationResult result;
        result.stats = stats_;
        for (const auto& I : intervals_) {
            /* a var = 1 interval whose single root is already recorded as an
             * exact point (a rejected candidate endpoint that stayed in
             * play) describes no new root */
            auto it = points_.upper_bound(I.lower());
            if (it != points_.end() && *it < I.upper()) continue;
            result.roots.push_back(RootDescriptor::isolating(I));
        }
        for (const auto& p : points_) result.roots.push_back(RootDescriptor::point(p));
        std::sort(result.roots.begin(), result.roots.end(),
                  [](const RootDescriptor& x, const RootDescriptor& y) {
                      return x.position_low() < y.position_low();
                  });
        return result;
    }

private:
    void process(const ActiveTask& task) {
        const int v = var(f_, task.interval);
        ++stats_.tree_size;
        ++stats_.var_calls;
        stats_.max_n_exp = std::max(stats_.max_n_exp, task.n_exp);
        stats_.max_depth = std::max(stats_.max_depth, task.depth);

        if (v == 0) {
            ++stats_.discarded;
            return;
        }
        if (v == 1) {
            if (!poly_eval(f_, task.interval.lower()).is_zero() &&
                !poly_eval(f_, task.interval.upper()).is_zero()) {
                intervals_.push_back(task.interval);
                return;
            }
            /* a root sits on an endpoint (always an already recorded
             * subdivision point); bisect until the interior root separates
             * from it so the descriptor invariant holds */
            bisect(task);
            return;
        }
        if (use_newton_ && quadratic_step(task, v)) return;
        bisect(task);
    }

    /* Step 3(a)/3(b): boundary windows first, then Newton windows.  Returns
     * true when one candidate of width w/N inherits all v variations. */
    bool quadratic_step(const ActiveTask& task, int v) {
        const OpenInterval& I = task.interval;
        const Dyadic w = I.width();
        const std::int64_t wn_exp = w.exponent() - log2_N(task.n_exp);  /* w/N = 2^wn_exp */
        const Dyadic step = Dyadic::power_of_two(wn_exp);

        const Dyadic p1 = I.lower() + step;
        const Dyadic p2 = I.upper() - step;
        const OpenInterval B1(I.lower(), p1), B2(p2, I.upper());

        /* boundary test: both probes are counted; at most one can carry all
         * v variations since B1, B2 are disjoint */
        int v1 = -1, v2 = -1;
        if (poly_eval(f_, p1).is_zero())
            record_point(p1);
        else {
            v1 = var(f_, B1);
            ++stats_.var_calls;
        }
        if (poly_eval(f_, p2).is_zero())
            record_point(p2);
        else {
            v2 = var(f_, B2);
            ++stats_.var_calls;
        }
        if (v1 == v && v2 == v)
            throw std::logic_error("boundary windows cannot both carry all variations");
        if (v1 == v) return accept(task, B1);
        if (v2 == v) return accept(task, B2);

        /* Newton test: try the window snapped from each endpoint, lower
         * first; skip an endpoint where f or f' vanishes */
        for (const IntervalEnd end : {IntervalEnd::lower, IntervalEnd::upper}) {
            const Dyadic& t = end == IntervalEnd::lower ? I.lower() : I.upper();
            if (poly_eval(f_, t).is_zero()) continue;
            const auto cand = newton_snap(f_, I, v, task.n_exp, end);
            if (!cand) continue;
            if (reject_new_endpoint(I, cand->window.lower()) ||
                reject_new_endpoint(I, cand->window.upper()))
                continue;
            const int vc = var(f_, cand->window);
            ++stats_.var_calls;
            if (vc == v) return accept(task, cand->window);
        }
        return false;
    }

    /* candidate endpoints interior to I must be non-roots; an exact hit is
     * recorded (the root would sit on the boundary of the discarded region
     * otherwise) and the candidate dropped */
    bool reject_new_endpoint(const OpenInterval& I, const Dyadic& p) {
        if (p == I.lower() || p == I.upper()) return false;
        if (!poly_eval(f_, p).is_zero()) return false;
        record_point(p);
        return true;
    }

    bool accept(const ActiveTask& task, const OpenInterval& child) {
        ++stats_.quadratic_steps;
        ActiveTask next{child, task.n_exp + 1, task.depth + 1};
        notify(SubdivisionEvent::Kind::quadratic, task, {next});
        stack_.push_back(std::move(next));
        return true;
    }

    void bisect(const ActiveTask& task) {
        const Dyadic m = task.interval.midpoint();
        if (poly_eval(f_, m).is_zero()) record_point(m);
        ++stats_.linear_steps;
        const int n_exp = std::max(1, task.n_exp - 1);
        ActiveTask left{OpenInterval(task.interval.lower(), m), n_exp, task.depth + 1};
        ActiveTask right{OpenInterval(m, task.interval.upper()), n_exp, task.depth + 1};
        notify(SubdivisionEvent::Kind::linear, task, {left, right});
        stack_.push_back(std::move(right));
        stack_.push_back(std::move(left));  /* popped first: left-to-right sweep */
    }

    void record_point(const Dyadic& p) { points_.insert(p); }

    void notify(SubdivisionEvent::Kind kind, const ActiveTask& parent,
                std::vector<ActiveTask> children) {
        if (!options_.observer) return;
        options_.observer(SubdivisionEvent{kind, parent.interval, parent.n_exp, parent.depth,
                                           std::move(children)});
    }

    const BigIntPoly& f_;
    const IsolatorOptions& options_;
    bool use_newton_;
    SubdivisionStats stats_;
    std::vector<ActiveTask> stack_;
    std::vector<OpenInterval> intervals_;
    std::set<Dyadic> points_;
};

}  // namespace

IsolationResult dsc2(const BigIntPoly& f, const IsolatorOptions& options) {
    return Engine(f, options, true).run();
}

IsolationResult dsc_classic(const BigIntPoly& f, const IsolatorOptions& options) {
    return Engine(f, options, false).run();
}

}  // namespace rri
