#pragma once

#include <vector>

#include "greedylab/spaces.hpp"
#include "greedylab/types.hpp"
#include "greedylab/weights.hpp"

namespace greedylab {

struct MinimizeOptions {
    double tol = 1e-9;     // stop a restart when a full sweep improves less than tol/10
    int restarts = 5;
    int max_iters = 10000;  // coordinate minimizations per restart
    bool projection_start = true;  // seed the first restart with the projection
    bool force_numeric = false;    // bypass the lattice shortcut
    unsigned long long seed = 12345;
};

struct MinimizeResult {
    double value = 0.0;
    std::vector<double> coeffs;  // aligned with A in increasing index order
    bool used_shortcut = false;
};

// min over b of ||x - sum_{n in A} b_n e_n||.  In a lattice the projection
// coefficients are optimal; otherwise cyclic coordinate descent with a
// golden-section line search (the objective is convex in each coordinate).
MinimizeResult min_norm_over_coeffs(const NormModel& model, const CoefVec& x, const IndexSet& A,
                                    const MinimizeOptions& opts = {});

// Chebyshev greedy approximand over the canonical greedy set of size m.
CoefVec cga(const NormModel& model, const CoefVec& x, int m, const MinimizeOptions& opts = {});

struct SigmaOptions {
    long long budget = 2000000;  // subsets examined before giving up
    MinimizeOptions minimize;    // used per subset when coefficients are free
};

struct SigmaResult {
    double value = 0.0;
    IndexSet best_set;
    bool budget_exhausted = false;  // value is only an upper bound when set
};

// Weighted best approximation sigma^w_delta(x): free coefficients over sets
// with w(A) <= delta.  Enumerates by depth-first extension with larger
// indices; a branch is pruned once its weight exceeds delta.
SigmaResult sigma_w(const NormModel& model, const CoefVec& x, const Weight& w, double delta,
                    const SigmaOptions& opts = {});

// Projection variant: only P_A x competes.
SigmaResult sigma_w_tilde(const NormModel& model, const CoefVec& x, const Weight& w, double delta,
                          const SigmaOptions& opts = {});

}  // namespace greedylab
