#include "greedylab/weights.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace greedylab {

Weight Weight::constant(double c) {
    if (!(c > 0.0)) throw std::invalid_argument("Weight::constant: c must be positive");
    Weight w;
    w.kind_ = Kind::Constant;
    w.param_ = c;
    return w;
}

Weight Weight::power(double theta) {
    if (!(theta >= 0.0)) throw std::invalid_argument("Weight::power: theta must be >= 0");
    Weight w;
    w.kind_ = Kind::Power;
    w.param_ = theta;
    return w;
}

Weight Weight::geometric(double r) {
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("Weight::geometric: r must be in (0,1)");
    Weight w;
    w.kind_ = Kind::Geometric;
    w.param_ = r;
    return w;
}

Weight Weight::explicit_list(std::vector<double> values, double tail) {
    for (double v : values)
        if (!(v > 0.0)) throw std::invalid_argument("Weight::explicit_list: values must be positive");
    if (!(tail > 0.0)) throw std::invalid_argument("Weight::explicit_list: tail must be positive");
    Weight w;
    w.kind_ = Kind::Explicit;
    w.values_ = std::move(values);
    w.tail_ = tail;
    return w;
}

double Weight::at(int n) const {
    if (n < 1) throw std::invalid_argument("Weight::at: index must be >= 1");
    switch (kind_) {
        case Kind::Constant: return param_;
        case Kind::Power: return std::pow(static_cast<double>(n), -param_);
        case Kind::Geometric: return std::pow(param_, static_cast<double>(n));
        case Kind::Explicit:
            if (static_cast<size_t>(n) <= values_.size()) return values_[static_cast<size_t>(n - 1)];
            return tail_;
    }
    return param_;
}

bool Weight::nonincreasing() const {
    switch (kind_) {
        case Kind::Constant: return true;
        case Kind::Power: return true;      // theta >= 0
        case Kind::Geometric: return true;  // r in (0,1)
        case Kind::Explicit: {
            for (size_t i = 1; i < values_.size(); ++i)
                if (values_[i] > values_[i - 1]) return false;
            return values_.empty() || tail_ <= values_.back();
        }
    }
    return false;
}

bool Weight::operator==(const Weight& o) const {
    return kind_ == o.kind_ && param_ == o.param_ && values_ == o.values_ && tail_ == o.tail_;
}

int Weight::compare(const Weight& a, const Weight& b) {
    auto rank = [](Kind k) { return static_cast<int>(k); };
    if (rank(a.kind_) != rank(b.kind_)) return rank(a.kind_) < rank(b.kind_) ? -1 : 1;
    if (a.param_ != b.param_) return a.param_ < b.param_ ? -1 : 1;
    if (a.values_ != b.values_) return a.values_ < b.values_ ? -1 : 1;
    if (a.tail_ != b.tail_) return a.tail_ < b.tail_ ? -1 : 1;
    return 0;
}

double measure(const Weight& w, const IndexSet& A) {
    double s = 0.0;
    for (int n : A) s += w.at(n);
    return s;
}

std::pair<double, double> equivalence_constants(const Weight& v, const Weight& w, int window) {
    if (window < 1) throw std::invalid_argument("equivalence_constants: window must be >= 1");
    const bool canonical = Weight::compare(v, w) <= 0;
    const Weight& num = canonical ? w : v;
    const Weight& den = canonical ? v : w;
    double lo = num.at(1) / den.at(1);
    double hi = lo;
    for (int n = 2; n <= window; ++n) {
        double r = num.at(n) / den.at(n);
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    if (canonical) return {lo, hi};
    return {1.0 / hi, 1.0 / lo};
}

SwResult s_w_window(const Weight& w, int window) {
    if (window < 2) throw std::invalid_argument("s_w_window: window must be >= 2");
    std::vector<double> wt(static_cast<size_t>(window) + 1, 0.0);
    for (int n = 1; n <= window; ++n) wt[static_cast<size_t>(n)] = w.at(n);

    int best = 0;
    for (int t = 1; t < window; ++t) {
        double tail = 0.0;
        for (int n = t + 1; n <= window; ++n) tail += wt[static_cast<size_t>(n)];
        std::vector<double> head(wt.begin() + 1, wt.begin() + 1 + t);
        std::sort(head.begin(), head.end());
        double acc = 0.0;
        int k = 0;
        while (k < t && acc + head[static_cast<size_t>(k)] <= tail) {
            acc += head[static_cast<size_t>(k)];
            ++k;
        }
        best = std::max(best, k);
    }
    return {best, best >= window - 1};
}

}  // namespace greedylab
