#include "greedylab/constants.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "greedylab/greedy.hpp"

namespace greedylab {

namespace {

int bounded(std::mt19937_64& rng, int n) {
    return static_cast<int>(rng() % static_cast<unsigned long long>(n));
}

}  // namespace

std::vector<SignPattern> sign_patterns(int n, int cap_bits, unsigned long long seed,
                                       bool fix_first) {
    std::vector<SignPattern> out;
    if (n == 0) {
        out.emplace_back(std::vector<int>{});
        return out;
    }
    const int free_bits = fix_first ? n - 1 : n;
    auto from_bits = [&](unsigned long long bits) {
        std::vector<int> s(static_cast<size_t>(n), 1);
        for (int i = 0; i < free_bits; ++i)
            if (bits >> i & 1ULL) s[static_cast<size_t>(fix_first ? i + 1 : i)] = -1;
        return SignPattern(std::move(s));
    };
    if (free_bits <= cap_bits) {
        for (unsigned long long bits = 0; bits < (1ULL << free_bits); ++bits)
            out.push_back(from_bits(bits));
        return out;
    }
    std::set<unsigned long long> seen;
    auto add = [&](unsigned long long bits) {
        bits &= (1ULL << free_bits) - 1;
        if (seen.insert(bits).second) out.push_back(from_bits(bits));
    };
    add(0);  // all plus
    unsigned long long alt = 0;
    for (int i = 0; i < free_bits; i += 2) alt |= 1ULL << i;
    add(alt);
    std::mt19937_64 rng(seed);
    const size_t want = 1ULL << cap_bits;
    while (out.size() < want) add(rng());
    return out;
}

CoefVec scaled_to_unit_sup(const CoefVec& x) {
    double sup = x.sup_abs();
    if (sup == 0.0) throw std::invalid_argument("scaled_to_unit_sup: zero vector");
    CoefVec y(x.window());
    for (int n = 1; n <= x.window(); ++n)
        if (x.at(n) != 0.0) y.set(n, x.at(n) / sup);
    return y;
}

std::vector<CoefVec> vector_family(const SearchFamily& family) {
    const int W = family.window;
    std::vector<CoefVec> out;
    std::set<std::vector<double>> seen;
    auto add = [&](const CoefVec& x) {
        if (x.support().empty()) return;
        if (seen.insert(x.coeffs()).second) out.push_back(x);
    };

    for (int n = 1; n <= W; ++n) {
        CoefVec x(W);
        x.set(n, 1.0);
        add(x);
    }
    for (int k = 1; k <= std::min(8, W); ++k) {
        CoefVec x(W);
        for (int n = 1; n <= k; ++n) x.set(n, 1.0);
        add(x);
    }
    for (int k = 2; k <= std::min(8, W); ++k) {
        CoefVec x(W);
        for (int n = 1; n <= k; ++n) x.set(n, n % 2 == 1 ? 1.0 : -1.0);
        add(x);
    }

    std::vector<double> nz;
    for (double g : family.grid)
        if (g != 0.0) nz.push_back(g);
    if (W >= 2) {
        for (double a : family.grid)
            for (double b : family.grid) {
                if (a == 0.0 && b == 0.0) continue;
                CoefVec x(W);
                x.set(1, a);
                x.set(2, b);
                add(x);
            }
    }
    if (W >= 3) {
        for (double a : family.grid)
            for (double b : family.grid)
                for (double c : family.grid) {
                    if (a == 0.0 && b == 0.0 && c == 0.0) continue;
                    CoefVec x(W);
                    x.set(1, a);
                    x.set(2, b);
                    x.set(3, c);
                    add(x);
                }
    }

    {
        CoefVec geo(W), har(W), quad(W), lin(W);
        for (int n = 1; n <= W; ++n) {
            geo.set(n, std::ldexp(1.0, 1 - n));
            har.set(n, 1.0 / n);
            quad.set(n, 1.0 / (static_cast<double>(n) * n));
            lin.set(n, static_cast<double>(W + 1 - n) / W);
        }
        add(geo);
        add(har);
        add(quad);
        add(lin);
    }

    // Extremal patterns from the model zoo: late Schreier blocks and the
    // paired +-2/-1 vector whose expansion collapses in the E-basis.
    for (int N = 2; N * N + N <= W; ++N) {
        CoefVec x(W);
        for (int n = N * N + 1; n <= N * N + N; ++n) x.set(n, 1.0);
        add(x);
    }
    for (int N = 1; 2 * N <= W; ++N) {
        CoefVec z(W), flat(W);
        for (int n = 1; n <= N; ++n) {
            z.set(2 * n, 2.0);
            z.set(2 * n - 1, -1.0);
        }
        for (int n = 1; n <= 2 * N; ++n) flat.set(n, 1.0);
        add(z);
        add(flat);
    }

    std::mt19937_64 rng(family.seed);
    std::vector<int> idx(static_cast<size_t>(W));
    for (int i = 0; i < family.random_count; ++i) {
        int s = 1 + bounded(rng, std::min(family.max_support, W));
        for (int j = 0; j < W; ++j) idx[static_cast<size_t>(j)] = j + 1;
        CoefVec x(W);
        for (int j = 0; j < s; ++j) {
            int pick = j + bounded(rng, W - j);
            std::swap(idx[static_cast<size_t>(j)], idx[static_cast<size_t>(pick)]);
            x.set(idx[static_cast<size_t>(j)], nz[static_cast<size_t>(bounded(rng, static_cast<int>(nz.size())))]);
        }
        add(x);
    }
    return out;
}

std::vector<IndexSet> set_pool(const SearchFamily& family) {
    const int W = family.window;
    std::vector<IndexSet> out;
    std::set<std::vector<int>> seen;
    auto add = [&](std::vector<int> v) {
        if (v.empty()) return;
        IndexSet s(std::move(v));
        if (s.max() > W) return;
        if (seen.insert(s.elems()).second) out.push_back(s);
    };

    for (int n = 1; n <= W; ++n) add({n});
    for (int k = 1; k <= W; ++k) {
        std::vector<int> v;
        for (int n = 1; n <= k; ++n) v.push_back(n);
        add(v);
    }
    for (int len = 2; len <= family.pair_size_cap; ++len)
        for (int a = 1; a + len - 1 <= W; ++a) {
            std::vector<int> v;
            for (int n = a; n < a + len; ++n) v.push_back(n);
            add(v);
        }
    for (int N = 2; N * N + N <= W; ++N) {
        std::vector<int> v;
        for (int n = N * N + 1; n <= N * N + N; ++n) v.push_back(n);
        add(v);
    }
    {
        std::vector<int> odds, evens;
        for (int n = 1; n <= W && static_cast<int>(odds.size()) < 6; n += 2) odds.push_back(n);
        for (int n = 2; n <= W && static_cast<int>(evens.size()) < 6; n += 2) evens.push_back(n);
        add(odds);
        add(evens);
    }
    {
        const int base = std::min(W, 2 * family.pair_size_cap);
        for (unsigned mask = 1; mask < (1u << base); ++mask) {
            if (__builtin_popcount(mask) > family.pair_size_cap) continue;
            std::vector<int> v;
            for (int n = 1; n <= base; ++n)
                if (mask >> (n - 1) & 1u) v.push_back(n);
            add(v);
        }
    }
    std::mt19937_64 rng(family.seed ^ 0x5e7f00fULL);
    for (int i = 0; i < 30; ++i) {
        int s = 1 + bounded(rng, family.pair_size_cap);
        std::set<int> v;
        while (static_cast<int>(v.size()) < s) v.insert(1 + bounded(rng, W));
        add(std::vector<int>(v.begin(), v.end()));
    }
    return out;
}

std::vector<IndicatorPair> admitted_pairs(const SearchFamily& family, const Weight& w) {
    auto pool = set_pool(family);
    std::vector<IndicatorPair> out;
    for (const auto& A : pool) {
        if (static_cast<int>(A.size()) > family.pair_size_cap) continue;
        for (const auto& B : pool) {
            if (static_cast<int>(B.size()) > family.pair_size_cap) continue;
            if (measure(w, A) > measure(w, B)) continue;
            if (measure(w, A.minus(B)) > measure(w, B.minus(A))) continue;
            out.push_back({A, B});
        }
    }
    return out;
}

namespace {

struct Best {
    double value = 0.0;
    Witness wit;
    long long count = 0;

    void offer(double num, double den, Witness&& cand) {
        if (den < 1e-12) return;
        ++count;
        double r = num / den;
        if (r > value) {
            value = r;
            wit = std::move(cand);
            wit.numerator = num;
            wit.denominator = den;
        }
    }
};

// Subsets of the support, smallest first, capped; includes the empty set.
std::vector<IndexSet> support_subsets(const IndexSet& supp, int size_cap, int count_cap) {
    std::vector<IndexSet> out;
    out.emplace_back();
    const int n = static_cast<int>(supp.size());
    if (n <= 16) {
        std::vector<std::vector<int>> by_size(static_cast<size_t>(size_cap) + 1);
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            int pc = __builtin_popcount(mask);
            if (pc > size_cap) continue;
            by_size[static_cast<size_t>(pc)].push_back(static_cast<int>(mask));
        }
        for (int k = 1; k <= size_cap && static_cast<int>(out.size()) < count_cap; ++k)
            for (int mask : by_size[static_cast<size_t>(k)]) {
                std::vector<int> v;
                for (int i = 0; i < n; ++i)
                    if (mask >> i & 1) v.push_back(supp[i]);
                out.emplace_back(std::move(v));
                if (static_cast<int>(out.size()) >= count_cap) break;
            }
    } else {
        for (int i = 0; i < supp.size() && static_cast<int>(out.size()) < count_cap; ++i)
            out.emplace_back(std::vector<int>{supp[i]});
    }
    return out;
}

using Vectors = std::vector<CoefVec>;

Estimate est_Kb(const NormModel& model, const SearchFamily& family, const Vectors& xs) {
    Estimate est;
    Best best;
    for (const auto& x : xs) {
        double xn = model.norm(x);
        for (int m = 1; m <= model.window(); ++m) {
            Witness wt;
            wt.x = x;
            wt.m = m;
            wt.formula = "norm(S_m x)/norm(x)";
            best.offer(model.norm(partial_sum(x, m)), xn, std::move(wt));
        }
    }
    est.value = best.value;
    est.witness = best.wit;
    est.instance_count = best.count;
    (void)family;
    return est;
}

Estimate est_Ku(const NormModel& model, const SearchFamily& family, const Vectors& xs) {
    Estimate est;
    Best best;
    for (const auto& x : xs) {
        double xn = model.norm(x);
        for (const auto& A : support_subsets(x.support(), 2 * family.pair_size_cap, 256)) {
            Witness wt;
            wt.x = x;
            wt.A = A;
            wt.formula = "norm(x - P_A x)/norm(x)";
            best.offer(model.norm(residual(x, A)), xn, std::move(wt));
        }
    }
    est.value = best.value;
    est.witness = best.wit;
    est.instance_count = best.count;
    return est;
}

Estimate est_Cq(const NormModel& model, const SearchFamily& family, const Vectors& xs) {
    Estimate est;
    Best best;
    for (const auto& x : xs) {
        double xn = model.norm(x);
        // m = 0 is included: the empty greedy set gives the trivial ratio 1.
        for (int m = 0; m <= model.window(); ++m) {
            auto gs = all_greedy_sets(x, m, family.greedy_cap);
            if (gs.truncated) est.truncated = true;
            for (const auto& G : gs.sets) {
                Witness wt;
                wt.x = x;
                wt.A = G;
                wt.m = m;
                wt.formula = "norm(x - P_G x)/norm(x)";
                best.offer(model.norm(residual(x, G)), xn, std::move(wt));
            }
        }
    }
    est.value = best.value;
    est.witness = best.wit;
    est.instance_count = best.count;
    return est;
}

Estimate est_Cd(const NormModel& model, const SearchFamily& family, const Weight& w) {
    Estimate est;
    Best best;
    for (const auto& pr : admitted_pairs(family, w)) {
        Witness wt;
        wt.A = pr.A;
        wt.B = pr.B;
        wt.formula = "norm(1_A)/norm(1_B)";
        best.offer(model.norm(indicator(pr.A, model.window())),
                   model.norm(indicator(pr.B, model.window())), std::move(wt));
    }
    est.value = best.value;
    est.witness = best.wit;
    est.instance_count = best.count;
    return est;
}

Estimate est_Cs(const NormModel& model, const SearchFamily& family, const Weight& w) {
    Estimate est;
    Best best;
    for (const auto& pr : admitted_pairs(family, w)) {
        auto epss = sign_patterns(static_cast<int>(pr.A.size()), family.sign_cap / 2,
                                  family.seed ^ 11, true);
        auto etas = sign_patterns(static_cast<int>(pr.B.size()), family.sign_cap / 2,
                                  family.seed ^ 13, true);
        for (const auto& eps : epss) {
            double num = model.norm(indicator(pr.A, eps, model.window()));
            for (const auto& eta : etas) {
                Witness wt;
                wt.A = pr.A;
                wt.B = pr.B;
                wt.eps = eps;
                wt.eta = eta;
                wt.formula = "norm(1_{eps A})/norm(1_{eta B})";
                best.offer(num, model.norm(indicator(pr.B, eta, model.window())), std::move(wt));
            }
        }
    }
    est.value = best.value;
    est.witness = best.wit;
    est.instance_count = best.count;
    return est;
}

Estimate est_Ca(const NormModel& model, const SearchFamily& family, const Weight& w,
                const Vectors& xs) {
    Estimate est;
    Best best;
    auto pool = set_pool(family);
    for (const auto& raw : xs) {
        CoefVec x = scaled_to_unit_sup(raw);
        double num = model.norm(x);
        IndexSet supp = x.support();
        auto asets = support_subsets(supp, family.pair_size_cap, 32);
        std::vector<const IndexSet*> bsets;
        for (const auto& B : pool) {
            if (static_cast<int>(B.size()) > family.pair_size_cap) continue;
            if (!B.disjoint_with(supp)) continue;
            bsets.push_back(&B);
            if (static_cast<int>(bsets.size()) >= 16) break;
        }
        for (const auto& A : asets) {
            double wA = measure(w, A);
            for (const IndexSet* B : bsets) {
                if (wA > measure(w, *B)) continue;
                for (const auto& eta :
                     sign_patterns(static_cast<int>(B->size()), 3, family.seed ^ 17, false)) {
                    CoefVec y = residual(x, A);
                    for (int i = 0; i < B->size(); ++i) y.set((*B)[i], eta[i]);
                    Witness wt;
                    wt.x = x;
                    wt.A = A;
                    wt.B = *B;
                    wt.eta = eta;
                    wt.formula = "norm(x)/norm(x - P_A x + 1_{eta B})";
                    best.offer(num, model.norm(y), std::move(wt));
                }
            }
        }
    }
    est.value = best.value;
    est.witness = best.wit;
    est.instance_count = best.count;
    return est;
}

Estimate est_Cc(const NormModel& model, const SearchFamily& family, const Weight& w) {
    Estimate est;
    Best best;
    const int W = std::min(model.window(), 16);
    if (model.window() > 16) est.truncated = true;
    std::vector<double> normcache(1u << W, -1.0);
    auto icache = [&](unsigned mask) {
        double& slot = normcache[mask];
        if (slot < 0.0) {
            std::vector<int> v;
            for (int n = 1; n <= W; ++n)
                if (mask >> (n - 1) & 1u) v.push_back(n);
            slot = model.norm(indicator(IndexSet(v), model.window()));
        }
        return slot;
    };
    std::vector<double> wv(static_cast<size_t>(W) + 1);
    for (int n = 1; n <= W; ++n) wv[static_cast<size_t>(n)] = w.at(n);
    for (unsigned amask = 1; amask < (1u << W); ++amask) {
        int maxA = 32 - __builtin_clz(amask);
        if (maxA >= W) continue;
        double wA = 0.0;
        for (int n = 1; n <= maxA; ++n)
            if (amask >> (n - 1) & 1u) wA += wv[static_cast<size_t>(n)];
        unsigned tail = ~0u << maxA;
        unsigned space = (~0u >> (32 - W)) & tail;
        for (unsigned bmask = space; bmask; bmask = (bmask - 1) & space) {
            double wB = 0.0;
            for (int n = maxA + 1; n <= W; ++n)
                if (bmask >> (n - 1) & 1u) wB += wv[static_cast<size_t>(n)];
            if (wA > wB) continue;
            std::vector<int> av, bv;
            for (int n = 1; n <= W; ++n) {
                if (amask >> (n - 1) & 1u) av.push_back(n);
                if (bmask >> (n - 1) & 1u) bv.push_back(n);
            }
            Witness wt;
            wt.A = IndexSet(av);
            wt.B = IndexSet(bv);
            wt.formula = "norm(1_A)/norm(1_B), A<B";
            best.offer(icache(amask), icache(bmask), std::move(wt));
        }
    }
    (void)family;
    est.value = best.value;
    est.witness = best.wit;
    est.instance_count = best.count;
    return est;
}

Estimate est_Cu(const NormModel& model, const SearchFamily& family, const Vectors& xs) {
    Estimate est;
    Best best;
    for (const auto& x : xs) {
        double xn = model.norm(x);
        for (int m = 1; m <= model.window(); ++m) {
            auto gs = all_greedy_sets(x, m, family.greedy_cap);
            if (gs.truncated) est.truncated = true;
            for (const auto& L : gs.sets) {
                double alpha = kInf;
                for (int n : L) alpha = std::min(alpha, std::abs(x.at(n)));
                if (alpha <= 0.0) continue;
                for (const auto& eps : sign_patterns(static_cast<int>(L.size()),
                                                     std::min(family.sign_cap, 5),
                                                     family.seed ^ 19, true)) {
                    Witness wt;
                    wt.x = x;
                    wt.A = L;
                    wt.eps = eps;
                    wt.t = alpha;
                    wt.formula = "min_L|x| * norm(1_{eps L})/norm(x)";
                    best.offer(alpha * model.norm(indicator(L, eps, model.window())), xn,
                               std::move(wt));
                }
            }
        }
    }
    est.value = best.value;
    est.witness = best.wit;
    est.instance_count = best.count;
    return est;
}

Estimate est_propD(const NormModel& model, const Vectors& xs) {
    Estimate est;
    Best best;
    for (const auto& x : xs) {
        IndexSet A = x.support();
        double alpha = kInf;
        for (int n : A) alpha = std::min(alpha, std::abs(x.at(n)));
        Witness wt;
        wt.x = x;
        wt.A = A;
        wt.t = alpha;
        wt.formula = "min_A|x| * norm(1_A)/norm(x)";
        best.offer(alpha * model.norm(indicator(A, model.window())), model.norm(x),
                   std::move(wt));
    }
    est.value = best.value;
    est.witness = best.wit;
    est.instance_count = best.count;
    return est;
}

Estimate est_bidem(const NormModel& model, const SearchFamily& family) {
    Estimate est;
    if (!model.has_dual_closed_form()) {
        est.skipped_unsupported = true;
        return est;
    }
    Best best;
    for (const auto& A : set_pool(family)) {
        if (static_cast<int>(A.size()) > 2 * family.pair_size_cap) continue;
        auto epss = sign_patterns(static_cast<int>(A.size()), family.sign_cap / 2,
                                  family.seed ^ 23, true);
        for (const auto& eps : epss)
            for (const auto& eta : epss) {
                double num = model.norm(indicator(A, eps, model.window())) *
                             *model.dual_norm(indicator(A, eta, model.window()));
                Witness wt;
                wt.A = A;
                wt.eps = eps;
                wt.eta = eta;
                wt.formula = "norm(1_{eps A}) * dual_norm(1_{eta A})/|A|";
                best.offer(num, static_cast<double>(A.size()), std::move(wt));
            }
    }
    est.value = best.value;
    est.witness = best.wit;
    est.instance_count = best.count;
    return est;
}

// Shared skeleton for Cg / Cal / Csg: greedy (or Chebyshev) error against the
// weighted benchmark at delta = w(G).
Estimate est_greedy_vs_sigma(const NormModel& model, const SearchFamily& family, const Weight& w,
                             const Vectors& xs, const std::string& which) {
    Estimate est;
    Best best;
    SigmaOptions sopts;
    sopts.budget = family.sigma_budget;
    MinimizeOptions mini;
    mini.restarts = 2;
    mini.max_iters = 2000;
    mini.tol = family.min_tol;
    sopts.minimize = mini;
    for (const auto& x : xs) {
        std::map<unsigned long long, SigmaResult> cache;
        for (int m = 1; m <= model.window(); ++m) {
            auto gs = all_greedy_sets(x, m, family.greedy_cap);
            if (gs.truncated) est.truncated = true;
            for (const auto& G : gs.sets) {
                double delta = measure(w, G);
                unsigned long long key;
                static_assert(sizeof(key) == sizeof(delta));
                std::memcpy(&key, &delta, sizeof(key));
                auto it = cache.find(key);
                if (it == cache.end()) {
                    SigmaResult sr = (which == "Cal")
                                         ? sigma_w_tilde(model, x, w, delta, sopts)
                                         : sigma_w(model, x, w, delta, sopts);
                    it = cache.emplace(key, std::move(sr)).first;
                }
                const SigmaResult& sr = it->second;
                if (sr.budget_exhausted) est.budget_exhausted = true;
                double num;
                if (which == "Csg" && !model.is_lattice())
                    num = min_norm_over_coeffs(model, x, G, mini).value;
                else
                    num = model.norm(residual(x, G));
                if (sr.value < 1e-12) {
                    if (num > 1e-9)
                        throw std::logic_error("greedy-vs-sigma: zero benchmark with "
                                               "nonvanishing error");
                    continue;
                }
                Witness wt;
                wt.x = x;
                wt.A = G;
                wt.m = m;
                wt.t = delta;
                wt.formula = (which == "Cal") ? "norm(x - P_G x)/sigma_tilde_w(delta)"
                             : (which == "Csg") ? "cheb_error(x, G)/sigma_w(delta)"
                                                : "norm(x - P_G x)/sigma_w(delta)";
                best.offer(num, sr.value, std::move(wt));
            }
        }
    }
    est.value = best.value;
    est.witness = best.wit;
    est.instance_count = best.count;
    return est;
}

Estimate est_Cp(const NormModel& model, const SearchFamily& family, const Weight& w,
                const Vectors& xs) {
    Estimate est;
    Best best;
    std::vector<double> prefix(static_cast<size_t>(model.window()) + 1, 0.0);
    for (int n = 1; n <= model.window(); ++n)
        prefix[static_cast<size_t>(n)] = prefix[static_cast<size_t>(n - 1)] + w.at(n);
    for (const auto& x : xs) {
        std::vector<double> tail_norm(static_cast<size_t>(model.window()) + 1, -1.0);
        auto tail = [&](int m) {
            double& slot = tail_norm[static_cast<size_t>(m)];
            if (slot < 0.0) {
                CoefVec y(x.window());
                for (int n = m + 1; n <= x.window(); ++n) y.set(n, x.at(n));
                slot = model.norm(y);
            }
            return slot;
        };
        for (int r = 1; r <= model.window(); ++r) {
            auto gs = all_greedy_sets(x, r, family.greedy_cap);
            if (gs.truncated) est.truncated = true;
            for (const auto& G : gs.sets) {
                double wG = measure(w, G);
                double num = -1.0;
                for (int m = 1; m <= model.window(); ++m) {
                    if (prefix[static_cast<size_t>(m)] > wG) continue;
                    if (num < 0.0) num = model.norm(residual(x, G));
                    double den = tail(m);
                    if (den < 1e-12) {
                        if (num > 1e-9)
                            throw std::logic_error("Cp: zero tail with nonvanishing error");
                        continue;
                    }
                    Witness wt;
                    wt.x = x;
                    wt.A = G;
                    wt.m = m;
                    wt.formula = "norm(x - P_G x)/norm(x - S_m x)";
                    best.offer(num, den, std::move(wt));
                }
            }
        }
    }
    est.value = best.value;
    est.witness = best.wit;
    est.instance_count = best.count;
    return est;
}

struct DemoWitness {
    unsigned mask = 0;
    std::vector<int> signs;
};

DemocracyTable democracy_impl(const NormModel& model, int max_m, int sign_cap,
                              std::vector<DemoWitness>* up_wit,
                              std::vector<DemoWitness>* low_wit) {
    const int W = model.window();
    if (W > 20) throw std::invalid_argument("democracy_table: window too large for exhaustion");
    if (max_m < 1 || max_m > W) throw std::invalid_argument("democracy_table: bad m range");
    DemocracyTable table;
    table.full_signs = (sign_cap >= W - 1);
    std::vector<double> bmax(static_cast<size_t>(W) + 1, 0.0);
    std::vector<double> bmin(static_cast<size_t>(W) + 1, kInf);
    std::vector<DemoWitness> wmax(static_cast<size_t>(W) + 1), wmin(static_cast<size_t>(W) + 1);

    CoefVec x(W);
    std::vector<int> members;
    for (unsigned mask = 1; mask < (1u << W); ++mask) {
        members.clear();
        for (int n = 1; n <= W; ++n)
            if (mask >> (n - 1) & 1u) members.push_back(n);
        const int k = static_cast<int>(members.size());
        auto record = [&](const std::vector<int>& signs) {
            for (int i = 0; i < k; ++i)
                x.set(members[static_cast<size_t>(i)], signs[static_cast<size_t>(i)]);
            double v = model.norm(x);
            ++table.evaluations;
            if (v > bmax[static_cast<size_t>(k)]) {
                bmax[static_cast<size_t>(k)] = v;
                wmax[static_cast<size_t>(k)] = {mask, signs};
            }
            if (v < bmin[static_cast<size_t>(k)]) {
                bmin[static_cast<size_t>(k)] = v;
                wmin[static_cast<size_t>(k)] = {mask, signs};
            }
            for (int i = 0; i < k; ++i) x.set(members[static_cast<size_t>(i)], 0.0);
        };
        if (k - 1 <= sign_cap) {
            // Exhaustive up to a global flip: the leading sign stays +1.
            // Gray-coded so each step flips a single coordinate in place.
            double* buf = x.coeffs().data();
            for (int i = 0; i < k; ++i) buf[members[static_cast<size_t>(i)] - 1] = 1.0;
            double lmax = bmax[static_cast<size_t>(k)];
            double lmin = bmin[static_cast<size_t>(k)];
            auto signs_of = [&](unsigned long long gray) {
                std::vector<int> signs(static_cast<size_t>(k), 1);
                for (int i = 0; i < k - 1; ++i)
                    if (gray >> i & 1ULL) signs[static_cast<size_t>(i + 1)] = -1;
                return signs;
            };
            const unsigned long long total = 1ULL << (k - 1);
            unsigned long long gray = 0;
            for (unsigned long long it = 0;; ++it) {
                double v = model.norm(x);
                if (v > lmax) {
                    lmax = v;
                    wmax[static_cast<size_t>(k)] = {mask, signs_of(gray)};
                }
                if (v < lmin) {
                    lmin = v;
                    wmin[static_cast<size_t>(k)] = {mask, signs_of(gray)};
                }
                if (it + 1 == total) break;
                unsigned long long next = (it + 1) ^ ((it + 1) >> 1);
                int flip = __builtin_ctzll(gray ^ next);
                gray = next;
                double* slot = buf + (members[static_cast<size_t>(flip + 1)] - 1);
                *slot = -*slot;
            }
            table.evaluations += static_cast<long long>(total);
            bmax[static_cast<size_t>(k)] = lmax;
            bmin[static_cast<size_t>(k)] = lmin;
            for (int i = 0; i < k; ++i) buf[members[static_cast<size_t>(i)] - 1] = 0.0;
        } else {
            for (const auto& pat : sign_patterns(k, sign_cap, 0x9e3779b9ULL ^ mask, true))
                record(pat.signs);
        }
    }
    table.upper.resize(static_cast<size_t>(max_m));
    table.lower.resize(static_cast<size_t>(max_m));
    double running = 0.0;
    for (int m = 1; m <= max_m; ++m) {
        running = std::max(running, bmax[static_cast<size_t>(m)]);
        table.upper[static_cast<size_t>(m - 1)] = running;
    }
    for (int m = 1; m <= max_m; ++m) {
        double v = kInf;
        int arg = -1;
        for (int k = m; k <= W; ++k)
            if (bmin[static_cast<size_t>(k)] < v) {
                v = bmin[static_cast<size_t>(k)];
                arg = k;
            }
        table.lower[static_cast<size_t>(m - 1)] = v;
        if (low_wit) (*low_wit)[static_cast<size_t>(m - 1)] = wmin[static_cast<size_t>(arg)];
    }
    if (up_wit) {
        double run = 0.0;
        int arg = 1;
        for (int m = 1; m <= max_m; ++m) {
            if (bmax[static_cast<size_t>(m)] > run) {
                run = bmax[static_cast<size_t>(m)];
                arg = m;
            }
            (*up_wit)[static_cast<size_t>(m - 1)] = wmax[static_cast<size_t>(arg)];
        }
    }
    return table;
}

Witness demo_witness(const DemoWitness& dw, int W) {
    Witness wt;
    std::vector<int> members;
    for (int n = 1; n <= W; ++n)
        if (dw.mask >> (n - 1) & 1u) members.push_back(n);
    wt.A = IndexSet(members);
    wt.eps = SignPattern(dw.signs);
    wt.formula = "norm(1_{eps A})";
    return wt;
}

}  // namespace

DemocracyTable democracy_table(const NormModel& model, int max_m, int sign_cap) {
    return democracy_impl(model, max_m, sign_cap, nullptr, nullptr);
}

Estimate estimate(const NormModel& model, const Weight& w, const std::string& name,
                  const SearchFamily& family, int m) {
    if (model.window() != family.window)
        throw std::invalid_argument("estimate: family window must match the model window");
    Estimate est;
    if (name == "D(m)" || name == "d(m)") {
        std::vector<DemoWitness> up(static_cast<size_t>(m)), low(static_cast<size_t>(m));
        auto table = democracy_impl(model, m, family.sign_cap, &up, &low);
        est.name = name;
        est.instance_count = table.evaluations;
        est.truncated = !table.full_signs;
        if (name == "D(m)") {
            est.value = table.upper[static_cast<size_t>(m - 1)];
            est.witness = demo_witness(up[static_cast<size_t>(m - 1)], model.window());
        } else {
            est.value = table.lower[static_cast<size_t>(m - 1)];
            est.witness = demo_witness(low[static_cast<size_t>(m - 1)], model.window());
        }
        est.witness.m = m;
        est.witness.numerator = est.value;
        est.witness.denominator = 1.0;
        return est;
    }

    Vectors xs = vector_family(family);
    if (name == "Kb") est = est_Kb(model, family, xs);
    else if (name == "Ku") est = est_Ku(model, family, xs);
    else if (name == "Cq") est = est_Cq(model, family, xs);
    else if (name == "Cd") est = est_Cd(model, family, w);
    else if (name == "Cs") est = est_Cs(model, family, w);
    else if (name == "Ca") est = est_Ca(model, family, w, xs);
    else if (name == "Cc") est = est_Cc(model, family, w);
    else if (name == "Cu") est = est_Cu(model, family, xs);
    else if (name == "propD") est = est_propD(model, xs);
    else if (name == "bidem") est = est_bidem(model, family);
    else if (name == "Cg" || name == "Cal" || name == "Csg")
        est = est_greedy_vs_sigma(model, family, w, xs, name);
    else if (name == "Cp") est = est_Cp(model, family, w, xs);
    else throw std::invalid_argument("estimate: unknown constant name " + name);
    est.name = name;
    return est;
}

double replay_witness(const NormModel& model, const Weight& w, const Estimate& est) {
    const Witness& wt = est.witness;
    const std::string& name = est.name;
    auto ind = [&](const IndexSet& S, const SignPattern& sg) {
        return sg.size() == S.size() ? indicator(S, sg, model.window())
                                     : indicator(S, model.window());
    };
    if (name == "Kb") return model.norm(partial_sum(wt.x, wt.m)) / model.norm(wt.x);
    if (name == "Ku" || name == "Cq")
        return model.norm(residual(wt.x, wt.A)) / model.norm(wt.x);
    if (name == "Cd" || name == "Cc")
        return model.norm(indicator(wt.A, model.window())) /
               model.norm(indicator(wt.B, model.window()));
    if (name == "Cs")
        return model.norm(ind(wt.A, wt.eps)) / model.norm(ind(wt.B, wt.eta));
    if (name == "Ca") {
        CoefVec y = residual(wt.x, wt.A);
        for (int i = 0; i < wt.B.size(); ++i) y.set(wt.B[i], wt.eta[i]);
        return model.norm(wt.x) / model.norm(y);
    }
    if (name == "Cu") return wt.t * model.norm(ind(wt.A, wt.eps)) / model.norm(wt.x);
    if (name == "propD")
        return wt.t * model.norm(indicator(wt.A, model.window())) / model.norm(wt.x);
    if (name == "bidem")
        return model.norm(ind(wt.A, wt.eps)) * *model.dual_norm(ind(wt.A, wt.eta)) /
               static_cast<double>(wt.A.size());
    if (name == "Cg" || name == "Cal" || name == "Csg") {
        SigmaOptions sopts;
        MinimizeOptions mini;
        mini.restarts = 2;
        mini.max_iters = 2000;
        sopts.minimize = mini;
        double num;
        if (name == "Csg" && !model.is_lattice())
            num = min_norm_over_coeffs(model, wt.x, wt.A, mini).value;
        else
            num = model.norm(residual(wt.x, wt.A));
        SigmaResult sr = (name == "Cal") ? sigma_w_tilde(model, wt.x, w, wt.t, sopts)
                                         : sigma_w(model, wt.x, w, wt.t, sopts);
        return num / sr.value;
    }
    if (name == "Cp") {
        CoefVec tail(wt.x.window());
        for (int n = wt.m + 1; n <= wt.x.window(); ++n) tail.set(n, wt.x.at(n));
        return model.norm(residual(wt.x, wt.A)) / model.norm(tail);
    }
    if (name == "D(m)" || name == "d(m)") return model.norm(ind(wt.A, wt.eps));
    throw std::invalid_argument("replay_witness: unknown constant name " + name);
}

}  // namespace greedylab
