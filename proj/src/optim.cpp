#include "greedylab/optim.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

#include "greedylab/greedy.hpp"

namespace greedylab {

namespace {

double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Golden-section minimization of a convex g over [lo, hi].  On exact ties the
// bracket shrinks from both ends, so flat valleys collapse to their center;
// for coordinate-symmetric objectives that center is the projection value.
template <typename G>
std::pair<double, double> golden_section(G&& g, double lo, double hi, double xtol) {
    constexpr double invphi = 0.6180339887498949;
    double c = hi - invphi * (hi - lo);
    double d = lo + invphi * (hi - lo);
    double gc = g(c), gd = g(d);
    int it = 0;
    while (hi - lo > xtol && it++ < 200) {
        if (gc < gd) {
            hi = d;
            d = c;
            gd = gc;
            c = hi - invphi * (hi - lo);
            gc = g(c);
        } else if (gc > gd) {
            lo = c;
            c = d;
            gc = gd;
            d = lo + invphi * (hi - lo);
            gd = g(d);
        } else {
            lo = c;
            hi = d;
            c = hi - invphi * (hi - lo);
            d = lo + invphi * (hi - lo);
            gc = g(c);
            gd = g(d);
        }
    }
    double mid = 0.5 * (lo + hi);
    return {mid, g(mid)};
}

}  // namespace

MinimizeResult min_norm_over_coeffs(const NormModel& model, const CoefVec& x, const IndexSet& A,
                                    const MinimizeOptions& opts) {
    MinimizeResult out;
    const int k = static_cast<int>(A.size());
    if (k == 0) {
        out.value = model.norm(x);
        return out;
    }
    if (A.max() > model.window())
        throw std::invalid_argument("min_norm_over_coeffs: set exceeds the model window");

    if (model.is_lattice() && !opts.force_numeric) {
        CoefVec y(model.window());
        for (int n = 1; n <= std::min(x.window(), model.window()); ++n) y.set(n, x.at(n));
        out.coeffs.reserve(static_cast<size_t>(k));
        for (int n : A) {
            out.coeffs.push_back(y.at(n));
            y.set(n, 0.0);
        }
        out.value = model.norm(y);
        out.used_shortcut = true;
        return out;
    }

    const double xnorm = model.norm(x);
    const double radius = 4.0 * std::max(1.0, model.frame_bounds().c2) * xnorm + 1.0;
    const double xtol = std::max(opts.tol * 1e-3, 1e-13 * (1.0 + 2.0 * radius));

    CoefVec y(model.window());
    for (int n = 1; n <= std::min(x.window(), model.window()); ++n) y.set(n, x.at(n));
    std::vector<double> xa;
    for (int n : A) xa.push_back(x.at(n));

    std::vector<double> b(static_cast<size_t>(k), 0.0);
    auto apply = [&](const std::vector<double>& bb) {
        for (int i = 0; i < k; ++i)
            y.set(A[static_cast<size_t>(i)], xa[static_cast<size_t>(i)] - bb[static_cast<size_t>(i)]);
    };

    std::mt19937_64 rng(opts.seed);
    double best_value = xnorm;  // b = 0 is always a candidate
    std::vector<double> best_b(static_cast<size_t>(k), 0.0);

    for (int restart = 0; restart < std::max(1, opts.restarts); ++restart) {
        if (restart == 0 && opts.projection_start) {
            b = xa;
        } else if (restart <= 1) {
            std::fill(b.begin(), b.end(), 0.0);
        } else {
            for (double& v : b) v = (2.0 * unit_double(rng) - 1.0) * 0.5 * radius;
        }
        apply(b);
        double cur = model.norm(y);
        int used = 0;
        while (used < opts.max_iters) {
            double before = cur;
            for (int i = 0; i < k && used < opts.max_iters; ++i, ++used) {
                const int n = A[static_cast<size_t>(i)];
                auto g = [&](double t) {
                    y.set(n, xa[static_cast<size_t>(i)] - t);
                    return model.norm(y);
                };
                auto [t, gt] = golden_section(g, -radius, radius, xtol);
                b[static_cast<size_t>(i)] = t;
                y.set(n, xa[static_cast<size_t>(i)] - t);
                cur = gt;
            }
            if (before - cur < opts.tol / 10.0) break;
        }
        if (cur < best_value) {
            best_value = cur;
            best_b = b;
        }
    }

    out.value = best_value;
    out.coeffs = std::move(best_b);
    return out;
}

CoefVec cga(const NormModel& model, const CoefVec& x, int m, const MinimizeOptions& opts) {
    IndexSet A = greedy_set(x, m);
    MinimizeResult r = min_norm_over_coeffs(model, x, A, opts);
    CoefVec out(x.window());
    for (int i = 0; i < A.size(); ++i) out.set(A[i], r.coeffs[static_cast<size_t>(i)]);
    return out;
}

namespace {

SigmaResult sigma_impl(const NormModel& model, const CoefVec& x, const Weight& w, double delta,
                       const SigmaOptions& opts, bool projections_only) {
    SigmaResult out;
    const int W = std::min(model.window(), x.window());
    const bool shortcut = projections_only || model.is_lattice();

    // Residual maintained incrementally along the DFS when projections decide.
    CoefVec y(model.window());
    for (int n = 1; n <= std::min(x.window(), model.window()); ++n) y.set(n, x.at(n));
    if (x.window() > model.window()) {
        for (int n = model.window() + 1; n <= x.window(); ++n)
            if (x.at(n) != 0.0)
                throw std::invalid_argument("sigma: support exceeds the model window");
    }

    std::vector<int> current, best;
    long long visited = 0;
    bool stop = false;

    auto evaluate = [&]() {
        double value;
        if (shortcut) {
            value = model.norm(y);
        } else {
            value = min_norm_over_coeffs(model, x, IndexSet(current), opts.minimize).value;
        }
        if (visited == 0 || value < out.value) {
            out.value = value;
            best = current;
        }
        ++visited;
        if (visited >= opts.budget) stop = true;
    };

    std::function<void(int, double)> rec = [&](int start, double wsum) {
        if (stop) return;
        evaluate();
        if (stop) return;
        for (int n = start; n <= W; ++n) {
            double wn = w.at(n);
            if (wsum + wn > delta) continue;
            current.push_back(n);
            double keep = y.at(n);
            y.set(n, 0.0);
            rec(n + 1, wsum + wn);
            y.set(n, keep);
            current.pop_back();
            if (stop) break;
        }
    };
    rec(1, 0.0);
    out.best_set = IndexSet(best);
    out.budget_exhausted = stop;
    return out;
}

}  // namespace

SigmaResult sigma_w(const NormModel& model, const CoefVec& x, const Weight& w, double delta,
                    const SigmaOptions& opts) {
    return sigma_impl(model, x, w, delta, opts, false);
}

SigmaResult sigma_w_tilde(const NormModel& model, const CoefVec& x, const Weight& w, double delta,
                          const SigmaOptions& opts) {
    return sigma_impl(model, x, w, delta, opts, true);
}

}  // namespace greedylab
