#pragma once

#include <string>
#include <vector>

#include "greedylab/optim.hpp"
#include "greedylab/spaces.hpp"
#include "greedylab/types.hpp"
#include "greedylab/weights.hpp"

namespace greedylab {

// Finite quantifier domain for all constant searches.  Enumeration order is
// deterministic given the seed; estimates can only grow as random_count grows.
struct SearchFamily {
    int window = 12;
    std::vector<double> grid = {0.0, 0.25, -0.25, 0.5, -0.5, 1.0, -1.0};
    int max_support = 6;
    int random_count = 200;
    unsigned long long seed = 744073709;
    int pair_size_cap = 4;   // |A|, |B| in indicator pairs
    int sign_cap = 6;        // free sign bits enumerated exhaustively
    int greedy_cap = 64;     // greedy sets per (x, m)
    long long sigma_budget = 2000000;
    double min_tol = 1e-9;   // numeric minimizer tolerance inside sigma searches
};

// Deterministic candidate vectors: singletons, flat and alternating blocks,
// exhaustive small grids, decaying profiles, model-specific extremal patterns,
// then seeded random vectors.
std::vector<CoefVec> vector_family(const SearchFamily& family);

// Sign patterns of length n; exhaustive up to 2^cap_bits choices, otherwise a
// fixed deterministic sample.  fix_first pins the leading sign to +1 (valid
// whenever the evaluation is invariant under a global flip).
std::vector<SignPattern> sign_patterns(int n, int cap_bits, unsigned long long seed,
                                       bool fix_first);

// x / sup|x_n|; requires a nonzero vector.
CoefVec scaled_to_unit_sup(const CoefVec& x);

// Deterministic candidate index sets within the window.
std::vector<IndexSet> set_pool(const SearchFamily& family);

struct IndicatorPair {
    IndexSet A, B;  // measure(w, A) <= measure(w, B), and w(A\B) <= w(B\A)
};

// Ordered pairs from the pool admitted for democracy-type searches.  The
// second condition keeps every sign-split of A admissible as a Property (A)
// instance, which the relation checks rely on.
std::vector<IndicatorPair> admitted_pairs(const SearchFamily& family, const Weight& w);

struct Witness {
    CoefVec x{1};
    IndexSet A, B;
    SignPattern eps, eta;
    int m = 0;
    double t = 0.0;  // t / lambda / delta, as the formula requires
    double numerator = 0.0;
    double denominator = 0.0;
    std::string formula;
};

struct Estimate {
    std::string name;
    double value = 0.0;
    Witness witness;
    long long instance_count = 0;
    bool truncated = false;          // an enumeration cap was hit
    bool budget_exhausted = false;   // a sigma search ran out of budget
    bool skipped_unsupported = false;
};

// Names: Kb Ku Cq Cd Cs Ca Cc Cu propD bidem Cg Cal Csg Cp D(m) d(m).
// The last two require the m argument.
Estimate estimate(const NormModel& model, const Weight& w, const std::string& name,
                  const SearchFamily& family, int m = 0);

// Recompute an estimate's value from its stored witness.
double replay_witness(const NormModel& model, const Weight& w, const Estimate& est);

struct DemocracyTable {
    std::vector<double> upper;  // D(m) = sup over |A| <= m, index m-1
    std::vector<double> lower;  // d(m) = inf over |A| >= m (within the window)
    bool full_signs = false;    // every sign pattern was enumerated
    long long evaluations = 0;
};

// Exhaustive D(m)/d(m) over the model window; sign patterns are exhausted up
// to a global flip when sign_cap >= window - 1, sampled otherwise.
DemocracyTable democracy_table(const NormModel& model, int max_m, int sign_cap);

}  // namespace greedylab
