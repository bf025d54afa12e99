#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "greedylab/types.hpp"
#include "greedylab/weights.hpp"

namespace greedylab {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Description tree for a sequence-space norm.  Leaves are concrete norms;
// dsum_inf / dsum_l1 split the window into contiguous blocks; max_of lays all
// parts over the same coordinates.  Weighted leaves index their weight by the
// position inside the leaf's own range, so a block behaves like a fresh copy
// of the space.
struct SpaceNode {
    enum class Kind {
        Lp,          // (sum |a_n|^p)^(1/p), p in [1, inf]
        WeightedLp,  // (sum |a_n|^p w_n)^(1/p), p in [1, inf)
        DsumInf,     // max over parts (disjoint contiguous blocks)
        DsumL1,      // sum over parts (disjoint contiguous blocks)
        MaxOf,       // max over parts (same coordinates)
        Schreier,    // sup over admissible sets A (|A| <= sqrt(min A)) of sum_A |a_n|
        James,       // sup over consecutive block partitions of (sum |block sum|^q)^(1/q)
        F1q,         // dyadic-interval norm at the listed levels
        RosenthalWoo,  // (sum |a_n|^q)^(1/q) max (sum |a_n|^p w_n)^(1/p)
        RwSumming,   // (sum |a_n|^q)^(1/q) max sup_j |sum_{n>=j} a_n w_n|
        Ebasis,      // paired basis of l1 (+)_inf c0; see eval for the expansion
    };

    Kind kind = Kind::Lp;
    double p = 2.0;
    double q = 2.0;
    Weight weight = Weight::constant(1.0);
    std::vector<int> levels;       // F1q only; strictly increasing, >= 0
    std::vector<SpaceNode> parts;  // combinators only
    int dim = 0;                   // optional explicit size inside a dsum; 0 = infer

    static SpaceNode lp(double p);
    static SpaceNode weighted_lp(double p, Weight w);
    static SpaceNode dsum_inf(std::vector<SpaceNode> parts);
    static SpaceNode dsum_l1(std::vector<SpaceNode> parts);
    static SpaceNode max_of(std::vector<SpaceNode> parts);
    static SpaceNode schreier();
    static SpaceNode james(double q);
    static SpaceNode f1q(double q, std::vector<int> levels);
    static SpaceNode rosenthal_woo(double q, double p, Weight w);
    static SpaceNode rw_summing(double q, Weight w);
    static SpaceNode ebasis();
};

struct FrameBounds {
    double c1 = 1.0;  // min_n ||e_n||
    double c2 = 1.0;  // max_n of ||e_n|| and ||e_n^*|| (lower bound when not closed form)
    bool exact = false;
};

// A SpaceNode resolved against a finite window.  Immutable after construction;
// safe to share across threads.
class NormModel {
public:
    NormModel(SpaceNode spec, int window);

    int window() const { return window_; }
    const SpaceNode& spec() const { return spec_; }

    // ||x||.  x may have a smaller window (zero padding); coordinates beyond
    // the model window must vanish.
    double norm(const CoefVec& x) const;

    // Norm of the functional with coefficients f, when a closed form exists.
    std::optional<double> dual_norm(const CoefVec& f) const;

    bool is_lattice() const { return lattice_; }
    bool has_dual_closed_form() const { return dual_closed_; }

    FrameBounds frame_bounds() const { return frame_; }

    // Analytically known constants; absent when nothing is declared.
    std::optional<double> known_Kb() const;
    std::optional<double> known_Ku() const;
    std::optional<double> known_Cq() const;
    std::optional<double> known_Ca(const Weight& w) const;
    std::optional<double> known_Cs(const Weight& w) const;
    std::optional<double> known_Cc(const Weight& w) const;

    // Human-readable coordinate layout (block ranges, f1q interval mapping).
    std::string describe_layout() const;

private:
    struct Resolved {
        SpaceNode::Kind kind = SpaceNode::Kind::Lp;
        double p = 2.0, q = 2.0;
        int lo = 0, hi = 0;                // inclusive global range
        std::vector<Resolved> parts;
        std::vector<double> wcache;        // weight values over the local range
        std::vector<int> isqrt;            // schreier: floor(sqrt(m)) per local m
        std::vector<int> levels;           // f1q
        std::vector<long long> offsets;    // f1q: local offset of each level block
    };

    void resolve(const SpaceNode& n, int lo, int hi, Resolved& out);
    double eval(const Resolved& r, const double* c) const;
    double eval_dual(const Resolved& r, const double* c) const;
    void compute_frame_bounds();
    double dual_probe_lower_bound(int n) const;

    SpaceNode spec_;
    int window_ = 0;
    Resolved root_;
    bool lattice_ = false;
    bool dual_closed_ = false;
    FrameBounds frame_;
};

}  // namespace greedylab
