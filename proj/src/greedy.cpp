#include "greedylab/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace greedylab {

std::vector<int> greedy_ordering(const CoefVec& x) {
    std::vector<int> order(static_cast<size_t>(x.window()));
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        double va = std::abs(x.at(a)), vb = std::abs(x.at(b));
        if (va != vb) return va > vb;
        return a < b;
    });
    return order;
}

IndexSet greedy_set(const CoefVec& x, int m) {
    if (m < 0 || m > x.window())
        throw std::invalid_argument("greedy_set: m out of range");
    auto order = greedy_ordering(x);
    return IndexSet(std::vector<int>(order.begin(), order.begin() + m));
}

GreedySets all_greedy_sets(const CoefVec& x, int m, int cap) {
    if (m < 0 || m > x.window())
        throw std::invalid_argument("all_greedy_sets: m out of range");
    if (cap < 1) throw std::invalid_argument("all_greedy_sets: cap must be >= 1");
    GreedySets out;
    if (m == 0) {
        out.sets.emplace_back();
        return out;
    }
    auto order = greedy_ordering(x);
    const double threshold = std::abs(x.at(order[static_cast<size_t>(m - 1)]));

    std::vector<int> forced, ties;
    for (int n = 1; n <= x.window(); ++n) {
        double v = std::abs(x.at(n));
        if (v > threshold) forced.push_back(n);
        else if (v == threshold) ties.push_back(n);
    }
    const int r = m - static_cast<int>(forced.size());
    const int t = static_cast<int>(ties.size());

    // Lexicographic combinations of r tie indices; the first one (smallest
    // indices) reproduces the canonical greedy set.
    std::vector<int> pick(static_cast<size_t>(r));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        std::vector<int> elems = forced;
        for (int i : pick) elems.push_back(ties[static_cast<size_t>(i)]);
        out.sets.emplace_back(std::move(elems));
        if (static_cast<int>(out.sets.size()) >= cap) break;
        int i = r - 1;
        while (i >= 0 && pick[static_cast<size_t>(i)] == t - r + i) --i;
        if (i < 0) break;
        ++pick[static_cast<size_t>(i)];
        for (int j = i + 1; j < r; ++j)
            pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
    }
    if (static_cast<int>(out.sets.size()) >= cap && r > 0) {
        int i = r - 1;
        while (i >= 0 && pick[static_cast<size_t>(i)] == t - r + i) --i;
        out.truncated = (i >= 0);
    }
    return out;
}

CoefVec project(const CoefVec& x, const IndexSet& A) {
    CoefVec out(x.window());
    for (int n : A) {
        if (n > x.window())
            throw std::invalid_argument("project: index beyond the window");
        out.set(n, x.at(n));
    }
    return out;
}

CoefVec residual(const CoefVec& x, const IndexSet& A) {
    CoefVec out = x;
    for (int n : A) {
        if (n > x.window())
            throw std::invalid_argument("residual: index beyond the window");
        out.set(n, 0.0);
    }
    return out;
}

CoefVec tga(const CoefVec& x, int m) { return project(x, greedy_set(x, m)); }

CoefVec partial_sum(const CoefVec& x, int m) {
    if (m < 0) throw std::invalid_argument("partial_sum: m must be >= 0");
    CoefVec out(x.window());
    for (int n = 1; n <= std::min(m, x.window()); ++n) out.set(n, x.at(n));
    return out;
}

CoefVec truncate(const CoefVec& x, double lambda) {
    if (lambda < 0.0) throw std::invalid_argument("truncate: lambda must be >= 0");
    CoefVec out(x.window());
    for (int n = 1; n <= x.window(); ++n) {
        double v = x.at(n);
        if (std::abs(v) > lambda) out.set(n, v > 0.0 ? lambda : -lambda);
        else out.set(n, v);
    }
    return out;
}

}  // namespace greedylab
