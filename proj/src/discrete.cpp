#include "spherequant/discrete.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "spherequant/frechet.hpp"

namespace spherequant {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double point_dist(const SpherePoint& a, const SpherePoint& b, PointMetric metric) {
    if (metric == PointMetric::Geodesic) return geodesic_distance(a, b);
    return (a.vec() - b.vec()).norm();
}

// deterministic uniform double in [0, 1)
double uniform01(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

void check_codebook(const DiscreteMeasure& mu, const Codebook& cb) {
    if (cb.codepoints.empty()) throw std::invalid_argument("codebook is empty");
    if (!(cb.order > 0.0)) throw std::invalid_argument("order r must be positive");
    for (const auto& a : cb.codepoints)
        if (std::abs(a.rho - mu.rho()) > 1e-12 * std::max(a.rho, mu.rho()))
            throw std::invalid_argument("codebook radius does not match the measure");
}

// ---- weighted D^2 seeding -------------------------------------------------

std::vector<SpherePoint> seed_codebook(const DiscreteMeasure& mu, int n, std::uint64_t seed,
                                       PointMetric metric) {
    const std::size_t m = mu.size();
    std::mt19937_64 rng(seed);
    std::vector<SpherePoint> seeds;
    seeds.reserve(n);

    auto sample_categorical = [&](const std::vector<double>& mass, double total) {
        const double u = uniform01(rng) * total;
        double cum = 0.0;
        for (std::size_t i = 0; i < mass.size(); ++i) {
            cum += mass[i];
            if (u < cum) return i;
        }
        return mass.size() - 1;
    };

    seeds.push_back(mu.points[sample_categorical(mu.weights, 1.0)]);
    std::vector<double> d2(m);
    while (int(seeds.size()) < n) {
        std::vector<double> mass(m);
        double total = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            double best = kInf;
            for (const auto& s : seeds) best = std::min(best, point_dist(mu.points[i], s, metric));
            d2[i] = best * best;
            mass[i] = mu.weights[i] * d2[i];
            total += mass[i];
        }
        std::size_t pick;
        if (total > 0.0) {
            pick = sample_categorical(mass, total);
        } else {
            pick = std::size_t(std::max_element(d2.begin(), d2.end()) - d2.begin());
        }
        seeds.push_back(mu.points[pick]);
    }
    return seeds;
}

}  // namespace

VoronoiPartition voronoi_assign(const DiscreteMeasure& mu, const Codebook& cb, PointMetric metric) {
    check_codebook(mu, cb);
    VoronoiPartition part;
    part.assignment.resize(mu.size());
    part.cluster_mass.assign(cb.codepoints.size(), 0.0);
    for (std::size_t i = 0; i < mu.size(); ++i) {
        int best = 0;
        double best_d = point_dist(mu.points[i], cb.codepoints[0], metric);
        for (std::size_t j = 1; j < cb.codepoints.size(); ++j) {
            const double d = point_dist(mu.points[i], cb.codepoints[j], metric);
            if (d < best_d) {
                best_d = d;
                best = int(j);
            }
        }
        part.assignment[i] = best;
        part.cluster_mass[best] += mu.weights[i];
    }
    return part;
}

double distortion(const DiscreteMeasure& mu, const Codebook& cb, PointMetric metric) {
    check_codebook(mu, cb);
    double v = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        double best = kInf;
        for (const auto& a : cb.codepoints)
            best = std::min(best, point_dist(mu.points[i], a, metric));
        v += mu.weights[i] * std::pow(best, cb.order);
    }
    return v;
}

namespace {

double cluster_cost(const DiscreteMeasure& mu, const std::vector<std::size_t>& members,
                    const SpherePoint& center, PointMetric metric) {
    double c = 0.0;
    for (std::size_t i : members) {
        const double d = point_dist(mu.points[i], center, metric);
        c += mu.weights[i] * d * d;
    }
    return c;
}

// best representative among the cluster's own points (lowest index on ties)
SpherePoint best_member_center(const DiscreteMeasure& mu, const std::vector<std::size_t>& members,
                               PointMetric metric) {
    SpherePoint best = mu.points[members.front()];
    double best_cost = cluster_cost(mu, members, best, metric);
    for (std::size_t k = 1; k < members.size(); ++k) {
        const SpherePoint& cand = mu.points[members[k]];
        const double c = cluster_cost(mu, members, cand, metric);
        if (c < best_cost) {
            best_cost = c;
            best = cand;
        }
    }
    return best;
}

SpherePoint update_center(const DiscreteMeasure& mu, const std::vector<std::size_t>& members,
                          const SpherePoint& current, CentroidMode mode, PointMetric metric) {
    if (members.size() == 1) return mu.points[members.front()];
    if (mode == CentroidMode::Extrinsic) {
        Vec3 mean{0.0, 0.0, 0.0};
        double mass = 0.0;
        for (std::size_t i : members) {
            mean = mean + mu.weights[i] * mu.points[i].vec();
            mass += mu.weights[i];
        }
        if (mean.norm() <= 1e-12 * mass) return best_member_center(mu, members, metric);
        return SpherePoint::project(mean, mu.rho());
    }
    // intrinsic: Karcher mean of the renormalized cluster, warm-started
    std::vector<SpherePoint> pts;
    std::vector<double> w;
    double mass = 0.0;
    for (std::size_t i : members) mass += mu.weights[i];
    for (std::size_t i : members) {
        pts.push_back(mu.points[i]);
        w.push_back(mu.weights[i] / mass);
    }
    double sum = 0.0;
    for (double x : w) sum += x;
    for (double& x : w) x /= sum;
    try {
        const auto sub = make_measure(std::move(pts), std::move(w));
        const auto res = intrinsic_mean(sub, current, {1.0, 1e-12, 100});
        if (res.point) return *res.point;
    } catch (const std::exception&) {
        // antipodal pathology inside the cluster: keep the current center
    }
    return current;
}

}  // namespace

QuantizationResult lloyd(const DiscreteMeasure& mu, const LloydOptions& opts) {
    const std::size_t m = mu.size();
    if (opts.n < 1) throw std::invalid_argument("n must be >= 1");
    if (!(opts.tol >= 0.0)) throw std::invalid_argument("tol must be >= 0");
    if (opts.max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");

    QuantizationResult res;
    res.seed = opts.seed;
    res.codebook.order = 2.0;

    if (std::size_t(opts.n) >= m) {
        // one codepoint per data point; the rest duplicate existing ones
        for (int j = 0; j < opts.n; ++j) res.codebook.codepoints.push_back(mu.points[j % m]);
        res.partition.assignment.resize(m);
        res.partition.cluster_mass.assign(opts.n, 0.0);
        for (std::size_t i = 0; i < m; ++i) {
            res.partition.assignment[i] = int(i);
            res.partition.cluster_mass[i] = mu.weights[i];
        }
        res.distortion = 0.0;
        res.converged = true;
        res.distortion_history = {0.0};
        return res;
    }

    if (opts.init) {
        check_codebook(mu, *opts.init);
        if (int(opts.init->codepoints.size()) != opts.n)
            throw std::invalid_argument("initial codebook size does not match n");
        res.codebook.codepoints = opts.init->codepoints;
    } else {
        res.codebook.codepoints = seed_codebook(mu, opts.n, opts.seed, opts.metric);
    }

    auto& cps = res.codebook.codepoints;

    auto alternate = [&]() {  // assign/update until the distortion settles
        double prev_v = kInf;
        res.converged = false;
        while (res.iterations < opts.max_iter) {
            ++res.iterations;
            auto part = voronoi_assign(mu, res.codebook, opts.metric);

            // repair empty clusters with the worst-served data point
            std::vector<double> contrib(m);
            for (std::size_t i = 0; i < m; ++i) {
                const double d = point_dist(mu.points[i], cps[part.assignment[i]], opts.metric);
                contrib[i] = mu.weights[i] * d * d;
            }
            for (std::size_t j = 0; j < cps.size(); ++j) {
                if (part.cluster_mass[j] > 0.0) continue;
                const std::size_t worst =
                    std::size_t(std::max_element(contrib.begin(), contrib.end()) - contrib.begin());
                part.cluster_mass[part.assignment[worst]] -= mu.weights[worst];
                part.assignment[worst] = int(j);
                part.cluster_mass[j] = mu.weights[worst];
                cps[j] = mu.points[worst];
                contrib[worst] = 0.0;
            }

            std::vector<std::vector<std::size_t>> members(cps.size());
            for (std::size_t i = 0; i < m; ++i) members[part.assignment[i]].push_back(i);

            for (std::size_t j = 0; j < cps.size(); ++j) {
                if (members[j].empty()) continue;
                const SpherePoint cand =
                    update_center(mu, members[j], cps[j], opts.mode, opts.metric);
                const double old_cost = cluster_cost(mu, members[j], cps[j], opts.metric);
                const double new_cost = cluster_cost(mu, members[j], cand, opts.metric);
                if (new_cost <= old_cost) cps[j] = cand;
            }

            double v = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                const double d = point_dist(mu.points[i], cps[part.assignment[i]], opts.metric);
                v += mu.weights[i] * d * d;
            }
            res.distortion_history.push_back(v);
            if (prev_v != kInf && prev_v - v <= opts.tol * std::max(prev_v, 1e-300)) {
                res.converged = true;
                break;
            }
            prev_v = v;
        }
    };

    // Single-point relocation polish. Plain alternation stalls on tie-locked
    // partitions: with uniformly spaced data the shared boundary point of
    // adjacent blocks of sizes k and k+2 is exactly equidistant from both
    // centers, and equal-size neighbors trade boundary points at exactly
    // zero cost, so a deficit can sit far from the surplus that would cancel
    // it. We migrate single points to their nearest other cluster whenever
    // re-optimized centers strictly lower the total cost, and when no strict
    // move exists we search chains of up to three zero-cost moves that
    // unlock one, reverting the chain otherwise. First-improvement in index
    // order keeps runs deterministic.
    struct Reloc {
        std::vector<SpherePoint> cps;
        std::vector<int> assign;
        std::vector<std::vector<std::size_t>> members;
        std::vector<double> cost;
    };

    auto reloc_init = [&]() {
        Reloc st;
        st.cps = cps;
        st.assign = voronoi_assign(mu, res.codebook, opts.metric).assignment;
        st.members.resize(cps.size());
        for (std::size_t i = 0; i < m; ++i) st.members[st.assign[i]].push_back(i);
        st.cost.resize(cps.size());
        for (std::size_t j = 0; j < cps.size(); ++j)
            st.cost[j] = cluster_cost(mu, st.members[j], st.cps[j], opts.metric);
        return st;
    };

    auto nearest_other = [&](const Reloc& st, std::size_t i) {
        std::size_t best = st.cps.size();
        double best_d = kInf;
        for (std::size_t j = 0; j < st.cps.size(); ++j) {
            if (int(j) == st.assign[i]) continue;
            const double d = point_dist(mu.points[i], st.cps[j], opts.metric);
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        return best;
    };

    struct MoveEval {
        double gain;
        double tol;
        SpherePoint ca, cb;
        std::vector<std::size_t> from, to;
    };
    auto eval_move = [&](const Reloc& st, std::size_t i, std::size_t b) {
        const std::size_t a = std::size_t(st.assign[i]);
        MoveEval ev{0.0, 0.0, st.cps[a], st.cps[b], st.members[a], st.members[b]};
        ev.from.erase(std::find(ev.from.begin(), ev.from.end(), i));
        ev.to.insert(std::lower_bound(ev.to.begin(), ev.to.end(), i), i);
        ev.ca = update_center(mu, ev.from, st.cps[a], opts.mode, opts.metric);
        ev.cb = update_center(mu, ev.to, st.cps[b], opts.mode, opts.metric);
        const double next = cluster_cost(mu, ev.from, ev.ca, opts.metric) +
                            cluster_cost(mu, ev.to, ev.cb, opts.metric);
        const double curr = st.cost[a] + st.cost[b];
        ev.gain = next - curr;
        ev.tol = 1e-13 * std::max(1.0, curr);
        return ev;
    };

    auto apply_move = [&](Reloc& st, std::size_t i, std::size_t b, MoveEval&& ev) {
        const std::size_t a = std::size_t(st.assign[i]);
        st.members[a] = std::move(ev.from);
        st.members[b] = std::move(ev.to);
        st.cps[a] = ev.ca;
        st.cps[b] = ev.cb;
        st.cost[a] = cluster_cost(mu, st.members[a], st.cps[a], opts.metric);
        st.cost[b] = cluster_cost(mu, st.members[b], st.cps[b], opts.metric);
        st.assign[i] = int(b);
    };

    auto strict_move = [&](Reloc& st) {
        for (std::size_t i = 0; i < m; ++i) {
            if (st.members[st.assign[i]].size() <= 1) continue;
            const std::size_t b = nearest_other(st, i);
            if (b == st.cps.size()) continue;
            auto ev = eval_move(st, i, b);
            if (ev.gain < -ev.tol) {
                apply_move(st, i, b, std::move(ev));
                return true;
            }
        }
        return false;
    };

    std::function<bool(Reloc&, std::vector<std::size_t>&, int, int&)> chain =
        [&](Reloc& st, std::vector<std::size_t>& moved, int depth, int& budget) -> bool {
        if (strict_move(st)) return true;
        if (depth >= 3) return false;
        for (std::size_t i = 0; i < m && budget > 0; ++i) {
            if (std::find(moved.begin(), moved.end(), i) != moved.end()) continue;
            if (st.members[st.assign[i]].size() <= 1) continue;
            const std::size_t b = nearest_other(st, i);
            if (b == st.cps.size()) continue;
            auto ev = eval_move(st, i, b);
            if (std::abs(ev.gain) > ev.tol) continue;
            --budget;
            Reloc snapshot = st;
            apply_move(st, i, b, std::move(ev));
            moved.push_back(i);
            if (chain(st, moved, depth + 1, budget)) return true;
            moved.pop_back();
            st = std::move(snapshot);
        }
        return false;
    };

    auto refine = [&]() {
        Reloc st = reloc_init();
        bool any = false;
        while (strict_move(st)) any = true;
        int budget = 128;
        std::vector<std::size_t> moved;
        while (budget > 0) {
            moved.clear();
            if (!chain(st, moved, 0, budget)) break;
            any = true;
            while (strict_move(st)) {}
        }
        if (any) {
            cps = st.cps;
            double v = 0.0;
            for (double c : st.cost) v += c;
            res.distortion_history.push_back(v);
        }
        return any;
    };

    alternate();
    for (int round = 0; round < 8 && refine(); ++round) alternate();

    res.partition = voronoi_assign(mu, res.codebook, opts.metric);
    double v = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double d = point_dist(mu.points[i], cps[res.partition.assignment[i]], opts.metric);
        v += mu.weights[i] * d * d;
    }
    res.distortion = v;
    return res;
}

QuantizationResult lloyd_best_of(const DiscreteMeasure& mu, LloydOptions opts, int restarts) {
    if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");
    QuantizationResult best;
    bool have = false;
    const std::uint64_t base = opts.seed;
    for (int t = 0; t < restarts; ++t) {
        opts.seed = base + std::uint64_t(t);
        auto r = lloyd(mu, opts);
        if (!have || r.distortion < best.distortion) {
            best = std::move(r);
            have = true;
        }
    }
    return best;
}

// ---- one-dimensional machinery on supports --------------------------------

double block_center(std::span<const double> arclen, std::span<const double> weights) {
    if (arclen.empty()) throw std::invalid_argument("block is empty");
    if (arclen.size() != weights.size())
        throw std::invalid_argument("coordinates and weights differ in length");
    double wsum = 0.0, swsum = 0.0;
    for (std::size_t i = 0; i < arclen.size(); ++i) {
        if (i > 0 && arclen[i] < arclen[i - 1]) throw std::invalid_argument("block is unordered");
        if (!(weights[i] > 0.0)) throw std::invalid_argument("weights must be positive");
        wsum += weights[i];
        swsum += weights[i] * arclen[i];
    }
    return swsum / wsum;
}

namespace {

// O(1) block cost/mean queries from prefix sums of (w, w*s, w*s^2),
// algebraically centered at the block's first coordinate.
class PrefixCost {
  public:
    PrefixCost(const std::vector<double>& s, const std::vector<double>& w) : s_(s) {
        const std::size_t m = s.size();
        pw_.assign(m + 1, 0.0);
        pws_.assign(m + 1, 0.0);
        pws2_.assign(m + 1, 0.0);
        for (std::size_t i = 0; i < m; ++i) {
            pw_[i + 1] = pw_[i] + w[i];
            pws_[i + 1] = pws_[i] + w[i] * s[i];
            pws2_[i + 1] = pws2_[i] + w[i] * s[i] * s[i];
        }
    }

    double weight(std::size_t i, std::size_t j) const { return pw_[j + 1] - pw_[i]; }

    double mean(std::size_t i, std::size_t j) const {
        const double c = s_[i];
        const double w = weight(i, j);
        const double a = (pws_[j + 1] - pws_[i]) - c * w;
        return c + a / w;
    }

    double cost(std::size_t i, std::size_t j) const {
        if (i == j) return 0.0;
        const double c = s_[i];
        const double w = weight(i, j);
        const double s1 = pws_[j + 1] - pws_[i];
        const double a = s1 - c * w;
        const double b = (pws2_[j + 1] - pws2_[i]) - 2.0 * c * s1 + c * c * w;
        return std::max(0.0, b - a * a / w);
    }

  private:
    const std::vector<double>& s_;
    std::vector<double> pw_, pws_, pws2_;
};

struct LinearDpResult {
    double total = 0.0;
    std::vector<std::pair<std::size_t, std::size_t>> blocks;  // inclusive index ranges
};

LinearDpResult linear_dp(const PrefixCost& cost, std::size_t m, std::size_t k) {
    std::vector<std::vector<double>> dp(k + 1, std::vector<double>(m + 1, kInf));
    std::vector<std::vector<std::size_t>> from(k + 1, std::vector<std::size_t>(m + 1, 0));
    dp[0][0] = 0.0;
    for (std::size_t b = 1; b <= k; ++b) {
        for (std::size_t j = b; j <= m - (k - b); ++j) {
            for (std::size_t i = b - 1; i < j; ++i) {
                if (dp[b - 1][i] == kInf) continue;
                const double v = dp[b - 1][i] + cost.cost(i, j - 1);
                if (v < dp[b][j]) {
                    dp[b][j] = v;
                    from[b][j] = i;
                }
            }
        }
    }
    LinearDpResult res;
    res.total = dp[k][m];
    std::size_t j = m;
    for (std::size_t b = k; b > 0; --b) {
        const std::size_t i = from[b][j];
        res.blocks.emplace_back(i, j - 1);
        j = i;
    }
    std::reverse(res.blocks.begin(), res.blocks.end());
    return res;
}

void validate_curve_measure(const CurveMeasure& mu) {
    if (mu.arclen.empty()) throw std::invalid_argument("measure is empty");
    if (mu.arclen.size() != mu.weights.size())
        throw std::invalid_argument("coordinates and weights differ in length");
    for (std::size_t i = 0; i < mu.arclen.size(); ++i) {
        if (!(mu.weights[i] > 0.0)) throw std::invalid_argument("weights must be positive");
        if (i > 0 && mu.arclen[i] < mu.arclen[i - 1])
            throw std::invalid_argument("measure must be ordered by arc length");
    }
}

QuantizationResult zero_distortion_result(const CurveMeasure& mu) {
    QuantizationResult res;
    res.codebook.order = 2.0;
    for (double s : mu.arclen) res.codebook.codepoints.push_back(mu.support.point_at(s));
    res.partition.assignment.resize(mu.size());
    res.partition.cluster_mass = mu.weights;
    for (std::size_t i = 0; i < mu.size(); ++i) res.partition.assignment[i] = int(i);
    res.distortion = 0.0;
    res.converged = true;
    return res;
}

QuantizationResult result_from_blocks(const CurveMeasure& mu, const PrefixCost& cost,
                                      const LinearDpResult& dp) {
    QuantizationResult res;
    res.codebook.order = 2.0;
    res.partition.assignment.resize(mu.size());
    res.converged = true;
    res.distortion = dp.total;
    for (std::size_t b = 0; b < dp.blocks.size(); ++b) {
        const auto [i, j] = dp.blocks[b];
        res.codebook.codepoints.push_back(mu.support.point_at(cost.mean(i, j)));
        res.partition.cluster_mass.push_back(cost.weight(i, j));
        for (std::size_t t = i; t <= j; ++t) res.partition.assignment[t] = int(b);
    }
    return res;
}

}  // namespace

QuantizationResult contiguous_dp(const CurveMeasure& mu, int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (mu.support.kind() != SupportKind::GreatArc)
        throw std::invalid_argument("contiguous_dp expects a great-arc support");
    validate_curve_measure(mu);
    const std::size_t m = mu.size();
    if (std::size_t(n) >= m) return zero_distortion_result(mu);

    const PrefixCost cost(mu.arclen, mu.weights);
    const auto dp = linear_dp(cost, m, std::size_t(n));
    return result_from_blocks(mu, cost, dp);
}

QuantizationResult circular_contiguous_dp(const CurveMeasure& mu, int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (!mu.support.is_circle())
        throw std::invalid_argument("circular_contiguous_dp expects a circle support");
    validate_curve_measure(mu);
    const std::size_t m = mu.size();
    const double L = mu.support.length();
    if (mu.arclen.back() >= L)
        throw std::invalid_argument("circle coordinates must lie in [0, L)");
    if (std::size_t(n) >= m) return zero_distortion_result(mu);

    auto rotate_coords = [&](std::size_t cut) {
        std::vector<double> t(m), w(m);
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t src = (cut + i) % m;
            t[i] = mu.arclen[src] - mu.arclen[cut];
            if (t[i] < 0.0) t[i] += L;
            w[i] = mu.weights[src];
        }
        return std::pair(std::move(t), std::move(w));
    };

    if (n == 1) {
        // wrapped single-center: the optimum is a stationary mean of one of the
        // m cyclic linearizations; evaluate the wrapped cost of each candidate
        double best_cost = kInf;
        double best_center = 0.0;
        for (std::size_t cut = 0; cut < m; ++cut) {
            auto [t, w] = rotate_coords(cut);
            double wsum = 0.0, swsum = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                wsum += w[i];
                swsum += w[i] * t[i];
            }
            double center = mu.arclen[cut] + swsum / wsum;
            if (center >= L) center -= L;
            double c = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                const double d = mu.support.curve_distance(mu.arclen[i], center);
                c += mu.weights[i] * d * d;
            }
            if (c < best_cost) {
                best_cost = c;
                best_center = center;
            }
        }
        QuantizationResult res;
        res.codebook.order = 2.0;
        res.codebook.codepoints.push_back(mu.support.point_at(best_center));
        res.partition.assignment.assign(m, 0);
        res.partition.cluster_mass = {1.0};
        res.distortion = best_cost;
        res.converged = true;
        return res;
    }

    double best_total = kInf;
    std::size_t best_cut = 0;
    LinearDpResult best_dp;
    for (std::size_t cut = 0; cut < m; ++cut) {
        auto [t, w] = rotate_coords(cut);
        const PrefixCost cost(t, w);
        auto dp = linear_dp(cost, m, std::size_t(n));
        if (dp.total < best_total) {
            best_total = dp.total;
            best_cut = cut;
            best_dp = std::move(dp);
        }
    }

    auto [t, w] = rotate_coords(best_cut);
    const PrefixCost cost(t, w);
    QuantizationResult res;
    res.codebook.order = 2.0;
    res.partition.assignment.resize(m);
    res.converged = true;
    res.distortion = best_dp.total;
    for (std::size_t b = 0; b < best_dp.blocks.size(); ++b) {
        const auto [i, j] = best_dp.blocks[b];
        double center = mu.arclen[best_cut] + cost.mean(i, j);
        if (center >= L) center -= L;
        res.codebook.codepoints.push_back(mu.support.point_at(center));
        res.partition.cluster_mass.push_back(cost.weight(i, j));
        for (std::size_t r = i; r <= j; ++r)
            res.partition.assignment[(best_cut + r) % m] = int(b);
    }
    return res;
}

// ---- exhaustive oracles ----------------------------------------------------

namespace {

void check_brute_force_size(std::size_t m, int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (m > 12 || n > 4)
        throw std::invalid_argument("brute force instance too large (m <= 12, n <= 4)");
}

// Enumerates set partitions of {0..m-1} into at most n blocks via restricted
// growth strings; calls visit(labels, num_blocks).
template <class Visit>
void for_each_partition(std::size_t m, int n, Visit&& visit) {
    std::vector<int> labels(m, 0);
    auto rec = [&](auto&& self, std::size_t i, int used) -> void {
        if (i == m) {
            visit(labels, used);
            return;
        }
        for (int b = 0; b < used; ++b) {
            labels[i] = b;
            self(self, i + 1, used);
        }
        if (used < n) {
            labels[i] = used;
            self(self, i + 1, used + 1);
        }
    };
    rec(rec, 1, 1);  // point 0 always opens block 0
}

}  // namespace

QuantizationResult brute_force_optimal(const DiscreteMeasure& mu, int n, CandidateMode mode) {
    check_brute_force_size(mu.size(), n);
    const std::size_t m = mu.size();

    double best_total = kInf;
    std::vector<int> best_labels;
    std::vector<SpherePoint> best_centers;

    for_each_partition(m, n, [&](const std::vector<int>& labels, int used) {
        std::vector<std::vector<std::size_t>> members(used);
        for (std::size_t i = 0; i < m; ++i) members[labels[i]].push_back(i);
        double total = 0.0;
        std::vector<SpherePoint> centers;
        centers.reserve(used);
        for (int b = 0; b < used && total < best_total; ++b) {
            SpherePoint center = mu.points[members[b].front()];
            if (members[b].size() > 1) {
                if (mode == CandidateMode::DataPoints) {
                    center = best_member_center(mu, members[b], PointMetric::Geodesic);
                } else {
                    center = update_center(mu, members[b], center, CentroidMode::Extrinsic,
                                           PointMetric::Geodesic);
                }
            }
            total += cluster_cost(mu, members[b], center, PointMetric::Geodesic);
            centers.push_back(center);
        }
        if (total < best_total && int(centers.size()) == used) {
            best_total = total;
            best_labels = labels;
            best_centers = std::move(centers);
        }
    });

    QuantizationResult res;
    res.codebook.order = 2.0;
    res.codebook.codepoints = best_centers;
    res.partition.assignment = best_labels;
    res.partition.cluster_mass.assign(best_centers.size(), 0.0);
    for (std::size_t i = 0; i < m; ++i)
        res.partition.cluster_mass[best_labels[i]] += mu.weights[i];
    res.distortion = best_total;
    res.converged = true;
    return res;
}

QuantizationResult brute_force_optimal(const CurveMeasure& mu, int n, CandidateMode mode) {
    check_brute_force_size(mu.size(), n);
    validate_curve_measure(mu);
    if (mode == CandidateMode::BlockCenters && mu.support.is_circle())
        throw std::invalid_argument("block-center brute force requires an arc support");
    const std::size_t m = mu.size();
    const PrefixCost prefix(mu.arclen, mu.weights);

    auto direct_cost = [&](const std::vector<std::size_t>& members, double center) {
        double c = 0.0;
        for (std::size_t i : members) {
            const double d = mu.support.curve_distance(mu.arclen[i], center);
            c += mu.weights[i] * d * d;
        }
        return c;
    };

    // same centered formula as PrefixCost, for non-contiguous clusters
    auto scattered_cost = [&](const std::vector<std::size_t>& members, double& mean_out) {
        const double c = mu.arclen[members.front()];
        double w = 0.0, a = 0.0, b = 0.0;
        for (std::size_t i : members) {
            const double d = mu.arclen[i] - c;
            w += mu.weights[i];
            a += mu.weights[i] * d;
            b += mu.weights[i] * d * d;
        }
        mean_out = c + a / w;
        return std::max(0.0, b - a * a / w);
    };

    double best_total = kInf;
    std::vector<int> best_labels;
    std::vector<double> best_centers;

    for_each_partition(m, n, [&](const std::vector<int>& labels, int used) {
        std::vector<std::vector<std::size_t>> members(used);
        for (std::size_t i = 0; i < m; ++i) members[labels[i]].push_back(i);
        double total = 0.0;
        std::vector<double> centers(used);
        for (int b = 0; b < used; ++b) {
            const auto& mem = members[b];
            if (mem.size() == 1) {
                centers[b] = mu.arclen[mem.front()];
                continue;
            }
            if (mode == CandidateMode::DataPoints) {
                double best_c = kInf;
                for (std::size_t cand : mem) {
                    const double c = direct_cost(mem, mu.arclen[cand]);
                    if (c < best_c) {
                        best_c = c;
                        centers[b] = mu.arclen[cand];
                    }
                }
                total += best_c;
            } else {
                const bool contiguous = mem.back() - mem.front() + 1 == mem.size();
                if (contiguous) {
                    total += prefix.cost(mem.front(), mem.back());
                    centers[b] = prefix.mean(mem.front(), mem.back());
                } else {
                    total += scattered_cost(mem, centers[b]);
                }
            }
        }
        if (total < best_total) {
            best_total = total;
            best_labels = labels;
            best_centers = centers;
        }
    });

    QuantizationResult res;
    res.codebook.order = 2.0;
    for (double c : best_centers) res.codebook.codepoints.push_back(mu.support.point_at(c));
    res.partition.assignment = best_labels;
    res.partition.cluster_mass.assign(best_centers.size(), 0.0);
    for (std::size_t i = 0; i < m; ++i)
        res.partition.cluster_mass[best_labels[i]] += mu.weights[i];
    res.distortion = best_total;
    res.converged = true;
    return res;
}

}  // namespace spherequant
