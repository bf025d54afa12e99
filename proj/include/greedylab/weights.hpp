#pragma once

#include <utility>
#include <vector>

#include "greedylab/types.hpp"

namespace greedylab {

// Positive weight sequence w = (w_n), given by a closed-form descriptor.
// Kinds: constant c; power n^(-theta); geometric r^n; explicit list with a
// constant tail beyond the listed values.
class Weight {
public:
    enum class Kind { Constant, Power, Geometric, Explicit };

    static Weight constant(double c);
    static Weight power(double theta);
    static Weight geometric(double r);
    static Weight explicit_list(std::vector<double> values, double tail);

    double at(int n) const;  // w_n, n >= 1

    Kind kind() const { return kind_; }
    double param() const { return param_; }  // c, theta, or r
    const std::vector<double>& values() const { return values_; }
    double tail() const { return tail_; }

    // True when the descriptor guarantees w_1 >= w_2 >= ...
    bool nonincreasing() const;

    bool operator==(const Weight& o) const;

    // Total order on descriptors; used to pick a canonical orientation in
    // equivalence_constants.
    static int compare(const Weight& a, const Weight& b);

private:
    Kind kind_ = Kind::Constant;
    double param_ = 1.0;
    std::vector<double> values_;
    double tail_ = 1.0;
};

// w(A) = sum of w_n over A, accumulated in increasing index order.
double measure(const Weight& w, const IndexSet& A);

// Tightest (a, b) with a*v_n <= w_n <= b*v_n for all n <= window.  The two
// orientations return exact reciprocals: the ratios are computed once in a
// canonical argument order and inverted for the other direction.
std::pair<double, double> equivalence_constants(const Weight& v, const Weight& w, int window);

struct SwResult {
    int value = 0;        // largest |A| admitting A < B within the window with w(A) <= w(B)
    bool saturated = false;  // the maximizer hit the structural limit |A| = window-1
};

// Window-restricted variant of the weight gap index: the largest n such that
// some A, B within [1, window] satisfy |A| = n, max A < min B, w(A) <= w(B).
// Exact: for each split t the best B is (t, window] and the best A of a given
// size takes the smallest-weight indices of [1, t].
SwResult s_w_window(const Weight& w, int window);

}  // namespace greedylab
