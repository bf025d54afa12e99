#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace greedylab {

// Finite set of basis indices. Elements are 1-based, kept strictly increasing.
class IndexSet {
public:
    IndexSet() = default;

    explicit IndexSet(std::vector<int> elems) : elems_(std::move(elems)) {
        std::sort(elems_.begin(), elems_.end());
        elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
        if (!elems_.empty() && elems_.front() < 1)
            throw std::invalid_argument("IndexSet: indices must be >= 1");
    }

    // Closed interval [lo, hi]; empty when hi < lo.
    static IndexSet interval(int lo, int hi) {
        IndexSet s;
        if (lo < 1) throw std::invalid_argument("IndexSet::interval: lo must be >= 1");
        for (int n = lo; n <= hi; ++n) s.elems_.push_back(n);
        return s;
    }

    bool empty() const { return elems_.empty(); }
    int size() const { return static_cast<int>(elems_.size()); }
    int operator[](int i) const { return elems_[static_cast<size_t>(i)]; }
    int min() const { return elems_.front(); }
    int max() const { return elems_.back(); }

    bool contains(int n) const {
        return std::binary_search(elems_.begin(), elems_.end(), n);
    }

    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }
    const std::vector<int>& elems() const { return elems_; }

    bool operator==(const IndexSet& o) const { return elems_ == o.elems_; }
    bool operator<(const IndexSet& o) const { return elems_ < o.elems_; }

    // max(*this) < min(other); vacuously true when either side is empty.
    bool strictly_before(const IndexSet& other) const {
        return empty() || other.empty() || max() < other.min();
    }

    bool disjoint_with(const IndexSet& other) const {
        auto a = elems_.begin();
        auto b = other.elems_.begin();
        while (a != elems_.end() && b != other.elems_.end()) {
            if (*a < *b) ++a;
            else if (*b < *a) ++b;
            else return false;
        }
        return true;
    }

    IndexSet unioned(const IndexSet& other) const {
        std::vector<int> out;
        std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(),
                       other.elems_.end(), std::back_inserter(out));
        IndexSet s;
        s.elems_ = std::move(out);
        return s;
    }

    IndexSet intersect(const IndexSet& other) const {
        std::vector<int> out;
        std::set_intersection(elems_.begin(), elems_.end(), other.elems_.begin(),
                              other.elems_.end(), std::back_inserter(out));
        IndexSet s;
        s.elems_ = std::move(out);
        return s;
    }

    IndexSet minus(const IndexSet& other) const {
        std::vector<int> out;
        std::set_difference(elems_.begin(), elems_.end(), other.elems_.begin(),
                            other.elems_.end(), std::back_inserter(out));
        IndexSet s;
        s.elems_ = std::move(out);
        return s;
    }

private:
    std::vector<int> elems_;
};

// Signs (+1/-1) aligned with the elements of an IndexSet.
struct SignPattern {
    std::vector<int> signs;  // each entry +1 or -1

    SignPattern() = default;
    explicit SignPattern(std::vector<int> s) : signs(std::move(s)) {
        for (int v : signs)
            if (v != 1 && v != -1)
                throw std::invalid_argument("SignPattern: entries must be +1 or -1");
    }

    static SignPattern ones(int n) { return SignPattern(std::vector<int>(static_cast<size_t>(n), 1)); }

    static SignPattern alternating(int n) {
        std::vector<int> s(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) s[static_cast<size_t>(i)] = (i % 2 == 0) ? 1 : -1;
        return SignPattern(std::move(s));
    }

    int size() const { return static_cast<int>(signs.size()); }
    int operator[](int i) const { return signs[static_cast<size_t>(i)]; }
    bool operator==(const SignPattern& o) const { return signs == o.signs; }
};

// Finitely supported coefficient vector on a window [1, window].
// Coordinate n is stored at coeffs()[n-1].
class CoefVec {
public:
    CoefVec() = default;
    explicit CoefVec(int window) : c_(static_cast<size_t>(window), 0.0) {
        if (window < 0) throw std::invalid_argument("CoefVec: negative window");
    }

    static CoefVec from_coeffs(std::vector<double> coeffs) {
        CoefVec x;
        x.c_ = std::move(coeffs);
        return x;
    }

    int window() const { return static_cast<int>(c_.size()); }

    double at(int n) const {
        if (n < 1) throw std::invalid_argument("CoefVec::at: index must be >= 1");
        if (n > window()) return 0.0;
        return c_[static_cast<size_t>(n - 1)];
    }

    void set(int n, double v) {
        if (n < 1 || n > window())
            throw std::invalid_argument("CoefVec::set: index out of window");
        c_[static_cast<size_t>(n - 1)] = v;
    }

    const std::vector<double>& coeffs() const { return c_; }
    std::vector<double>& coeffs() { return c_; }

    IndexSet support() const {
        std::vector<int> s;
        for (int n = 1; n <= window(); ++n)
            if (c_[static_cast<size_t>(n - 1)] != 0.0) s.push_back(n);
        return IndexSet(std::move(s));
    }

    double sup_abs() const {
        double m = 0.0;
        for (double v : c_) m = std::max(m, std::abs(v));
        return m;
    }

    bool operator==(const CoefVec& o) const { return c_ == o.c_; }

private:
    std::vector<double> c_;
};

// Indicator vector with signs: sum over A of eps_i e_{A_i}, laid out on [1, window].
inline CoefVec indicator(const IndexSet& A, const SignPattern& eps, int window) {
    if (eps.size() != A.size())
        throw std::invalid_argument("indicator: sign pattern length mismatch");
    if (!A.empty() && A.max() > window)
        throw std::invalid_argument("indicator: set exceeds window");
    CoefVec x(window);
    for (int i = 0; i < A.size(); ++i) x.set(A[i], eps[i]);
    return x;
}

inline CoefVec indicator(const IndexSet& A, int window) {
    return indicator(A, SignPattern::ones(A.size()), window);
}

}  // namespace greedylab
