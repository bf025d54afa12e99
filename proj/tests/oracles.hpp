#pragma once

// Reference computations used to pin expected values.  Everything here is a
// direct transcription of a defining formula, deliberately sharing no code
// with the library: partition maxima are enumerated rather than folded into
// a recurrence, interval membership is decided by midpoints, and best
// m-term errors come from sorted-tail arithmetic.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "greedylab/types.hpp"
#include "greedylab/weights.hpp"

namespace oracle {

// sup over consecutive-block tilings of [1, n] of (sum |block sum|^q)^(1/q).
// Dropping a tail never helps (every term is nonnegative), so full tilings
// suffice; they are enumerated recursively, one block end at a time.
// Every composition of [0, m) into consecutive blocks, encoded by break
// bits.  Block sums and the block-power total both accumulate left to
// right, the same association the dynamic program uses.
inline double james_norm(const std::vector<double>& a, double q) {
    const size_t m = a.size();
    if (m == 0) return 0.0;
    double best = 0.0;
    for (unsigned long long cuts = 0; cuts < (1ULL << (m - 1)); ++cuts) {
        double total = 0.0, sum = 0.0;
        for (size_t i = 0; i < m; ++i) {
            sum += a[i];
            if (i + 1 == m || (cuts >> i & 1ULL)) {
                total += std::pow(std::fabs(sum), q);
                sum = 0.0;
            }
        }
        best = std::max(best, total);
    }
    return std::pow(best, 1.0 / q);
}

// sup over A with |A|^2 <= min A of sum_A |a_n|; subsets of the support are
// enough because the admissible family is hereditary.
inline double schreier_norm(const std::vector<double>& a) {
    std::vector<int> supp;  // 1-based indices
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0.0) supp.push_back(static_cast<int>(i) + 1);
    const int s = static_cast<int>(supp.size());
    double best = 0.0;
    for (std::uint64_t mask = 1; mask < (1ULL << s); ++mask) {
        int count = 0, minidx = 0;
        double sum = 0.0;
        for (int i = 0; i < s; ++i) {
            if (!(mask >> i & 1)) continue;
            if (count == 0) minidx = supp[static_cast<size_t>(i)];
            ++count;
            sum += std::fabs(a[static_cast<size_t>(supp[static_cast<size_t>(i)] - 1)]);
        }
        if (static_cast<long long>(count) * count <= minidx) best = std::max(best, sum);
    }
    return best;
}

// Integral of (sum over levels |a_I|^q |I|^{-q} chi_I)^(1/q) over [0,1].
// The integrand is constant on the finest-level cells; the interval of each
// coarser level containing a cell is found through the cell midpoint.
inline double f1q_norm(const std::vector<double>& a, double q, const std::vector<int>& levels) {
    const int kmax = levels.back();
    const long long cells = 1LL << kmax;
    double integral = 0.0;
    for (long long c = 0; c < cells; ++c) {
        double mid = (static_cast<double>(c) + 0.5) / static_cast<double>(cells);
        double s = 0.0;
        long long offset = 0;
        for (int k : levels) {
            long long idx = static_cast<long long>(std::floor(mid * static_cast<double>(1LL << k)));
            double coeff = a[static_cast<size_t>(offset + idx)];
            if (coeff != 0.0) s += std::pow(std::fabs(coeff) * static_cast<double>(1LL << k), q);
            offset += 1LL << k;
        }
        integral += (s == 0.0 ? 0.0 : std::pow(s, 1.0 / q)) / static_cast<double>(cells);
    }
    return integral;
}

// Closed form for the paired basis E_{2n-1} = (e_n/2, -f_n/2),
// E_{2n} = (e_n/4, 3f_n/4) inside l1 (+)_inf c0.
inline double ebasis_norm(const std::vector<double>& a) {
    double l1 = 0.0, c0 = 0.0;
    for (size_t k = 0; 2 * k < a.size(); ++k) {
        double odd = a[2 * k];
        double even = 2 * k + 1 < a.size() ? a[2 * k + 1] : 0.0;
        l1 += std::fabs(0.5 * odd + 0.25 * even);
        c0 = std::max(c0, std::fabs(-0.5 * odd + 0.75 * even));
    }
    return l1 + c0;
}

// Classical best m-term error in lp: drop the m largest moduli, combine the
// rest.  p may be infinity.
inline double lp_best_m_term(std::vector<double> a, double p, int m) {
    for (double& v : a) v = std::fabs(v);
    std::sort(a.begin(), a.end(), std::greater<double>());
    if (m >= static_cast<int>(a.size())) return 0.0;
    if (std::isinf(p)) return a[static_cast<size_t>(m)];
    double s = 0.0;
    for (size_t i = static_cast<size_t>(m); i < a.size(); ++i) s += std::pow(a[i], p);
    return std::pow(s, 1.0 / p);
}

// All greedy sets of size m: subsets whose smallest modulus dominates every
// modulus outside.
inline std::vector<greedylab::IndexSet> greedy_sets(const greedylab::CoefVec& x, int m) {
    const int W = x.window();
    std::vector<greedylab::IndexSet> out;
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(pick.size()) == m) {
            double inner = std::numeric_limits<double>::infinity();
            for (int n : pick) inner = std::min(inner, std::fabs(x.at(n)));
            double outer = 0.0;
            for (int n = 1; n <= W; ++n) {
                bool in = std::find(pick.begin(), pick.end(), n) != pick.end();
                if (!in) outer = std::max(outer, std::fabs(x.at(n)));
            }
            if (inner >= outer) out.emplace_back(pick);
            return;
        }
        for (int n = start; n <= W; ++n) {
            pick.push_back(n);
            rec(n + 1);
            pick.pop_back();
        }
    };
    rec(1);
    return out;
}

// Largest |A| with max A < min B and w(A) <= w(B), by enumerating every
// admissible pair inside the window.
inline int sw_index(const greedylab::Weight& w, int window) {
    int best = 0;
    for (int t = 1; t < window; ++t) {
        // A ranges over subsets of [1, t] containing t; B over subsets of (t, window].
        const int left = t, right = window - t;
        for (std::uint64_t am = 0; am < (1ULL << (left - 1)); ++am) {
            double wa = 0.0;
            int sa = 1;
            for (int i = 0; i < left - 1; ++i)
                if (am >> i & 1) {
                    wa += w.at(i + 1);
                    ++sa;
                }
            wa += w.at(t);
            if (sa <= best) continue;
            for (std::uint64_t bm = 1; bm < (1ULL << right); ++bm) {
                double wb = 0.0;
                for (int i = 0; i < right; ++i)
                    if (bm >> i & 1) wb += w.at(t + 1 + i);
                if (wa <= wb) {
                    best = sa;
                    break;
                }
            }
        }
    }
    return best;
}

}  // namespace oracle
