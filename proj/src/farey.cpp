#include "teichlab/farey.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <unordered_map>

namespace teichlab {

namespace {

constexpr i64 kMaxBound = 1'000'000'000;  // keeps packed (p, q) keys in 32 bits

i64 height(const Slope& s) { return std::max(s.p < 0 ? -s.p : s.p, s.q); }

bool in_universe(const Slope& s, i64 bound) { return height(s) <= bound; }

std::uint64_t pack(const Slope& s) {
    return (std::uint64_t)(std::uint32_t)(std::int32_t)s.p << 32 |
           (std::uint32_t)(std::int32_t)s.q;
}

void validate_params(const FareyParams& params) {
    if (params.threshold != 1 && params.threshold != 2)
        throw std::invalid_argument("threshold must be 1 (torus) or 2 (four-punctured sphere)");
}

// Extended gcd on coprime (p, q): returns (x, y) with p x + q y = 1.
std::pair<i64, i64> bezout(i64 p, i64 q) {
    i64 r0 = p, r1 = q, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (r1 != 0) {
        i64 k = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - k * r1);
        std::tie(x0, x1) = std::make_pair(x1, x0 - k * x1);
        std::tie(y0, y1) = std::make_pair(y1, y0 - k * y1);
    }
    if (r0 == -1) {
        x0 = -x0;
        y0 = -y0;
    }
    return {x0, y0};
}

// Enumerates the neighbors of v inside the bounded universe.  The solutions
// of det(v, w) = +T form the single affine family w = (r0 + k p, s0 + k q),
// and the det = -T solutions are their negatives, so canonicalizing this one
// family yields every neighboring slope exactly once.
template <typename F>
void fan_for_each(const Slope& v, i64 bound, i64 t, F&& fn) {
    auto [x, y] = bezout(v.p, v.q);
    i64 r0 = -t * y, s0 = t * x;

    // k range where |r0 + k p| <= bound and |s0 + k q| <= bound
    i64 lo = LLONG_MIN, hi = LLONG_MAX;
    auto clamp = [&](i64 base, i64 step) {
        if (step == 0) {
            if (base > bound || base < -bound) {
                lo = 1;
                hi = 0;
            }
            return;
        }
        // divide with floors so the interval is exact
        i64 a = -bound - base, b = bound - base;
        if (step < 0) {
            std::swap(a, b);
            a = -a;
            b = -b;
            base = -base;
            step = -step;
        }
        auto floordiv = [](i64 n, i64 d) { return n >= 0 ? n / d : -((-n + d - 1) / d); };
        auto ceildiv = [](i64 n, i64 d) { return n >= 0 ? (n + d - 1) / d : -(-n / d); };
        lo = std::max(lo, ceildiv(a, step));
        hi = std::min(hi, floordiv(b, step));
    };
    clamp(r0, v.p);
    clamp(s0, v.q);
    for (i64 k = lo; k <= hi; ++k) {
        i64 r = r0 + k * v.p, s = s0 + k * v.q;
        if (t == 2 && (r & 1) == 0 && (s & 1) == 0) continue;  // gcd 2, not a slope
        fn(Slope::of(r, s));
    }
}

// Any two distinct slopes have at most two common neighbors in the full
// graph; they solve det(a, w) = e1 T, det(b, w) = e2 T, and the sign pairs
// (e1, e2) and (-e1, -e2) give the same slope.  Returns true when a common
// neighbor exists inside the bounded universe.
bool common_neighbor_within(const Slope& a, const Slope& b, i64 t, i64 bound) {
    i64 det = checked_cross(a.p, a.q, b.p, b.q);
    for (int e2 : {1, -1}) {
        i64 rn = t * (a.p * -(i64)e2 + b.p);  // T(e1 p_b - e2 p_a), e1 = 1
        i64 sn = t * (b.q - e2 * a.q);        // T(e1 q_b - e2 q_a)
        if (rn % det || sn % det) continue;
        i64 r = rn / det, s = sn / det;
        if (gcd64(r, s) != 1) continue;
        if (in_universe(Slope::of(r, s), bound)) return true;
    }
    return false;
}

// Graph distance between a and b within the bounded universe, or -1 when b
// is unreachable there.  Grows exact-distance levels around the endpoint
// with the larger height (its fans are smaller); thanks to the O(1) tests
// for distance <= 2, a level radius of d - 2 suffices for distance d.
int search(const Slope& a, const Slope& b, i64 t, i64 bound, std::size_t cap) {
    if (a == b) return 0;
    if (intersection(a, b) == t) return 1;
    if (common_neighbor_within(a, b, t, bound)) return 2;

    const Slope& seed = height(a) >= height(b) ? a : b;
    const Slope& other = height(a) >= height(b) ? b : a;

    std::unordered_set<std::uint64_t> visited;
    visited.insert(pack(seed));
    std::vector<Slope> level{seed};
    for (int r = 1;; ++r) {
        std::vector<Slope> next;
        for (const Slope& v : level)
            fan_for_each(v, bound, t, [&](const Slope& w) {
                if (visited.insert(pack(w)).second) next.push_back(w);
            });
        if (next.empty()) return -1;
        if (visited.size() > cap)
            throw OverflowError("farey search exceeded vertex cap at bound " +
                                std::to_string(bound));
        int best = INT_MAX;
        for (const Slope& w : next) {
            if (w == other) {
                best = r;  // cannot beat r at this level
                break;
            }
            if (intersection(w, other) == t)
                best = std::min(best, r + 1);
            else if (best > r + 2 && common_neighbor_within(w, other, t, bound))
                best = r + 2;
        }
        if (best != INT_MAX) return best;
        level = std::move(next);
    }
}

// Multi-target variant of `search`: one level growth around the source
// resolves every target.  Exactness per target b at level r:
//   - membership b in L_r fires first and gives d = r (earlier levels
//     already tested membership, so r is minimal);
//   - otherwise a hit fan(b) /\ L_r != {} gives d = r + 1: it shows some
//     neighbor of b at exact distance r, so d <= r + 1, while b not in
//     L_{<=r} gives d >= r + 1.  Had d been smaller, the same test would
//     have fired at the earlier level of a geodesic neighbor of b.
// Unreachable targets (universe exhausted) come back as -1.
std::vector<int> multi_search(const Slope& a, const std::vector<Slope>& targets, i64 t, i64 bound,
                              std::size_t cap) {
    std::vector<int> out(targets.size(), -1);
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        const Slope& b = targets[i];
        if (b == a)
            out[i] = 0;
        else if (intersection(a, b) == t)
            out[i] = 1;
        else if (common_neighbor_within(a, b, t, bound))
            out[i] = 2;
        else
            open.push_back(i);
    }
    if (open.empty()) return out;

    std::vector<std::vector<std::uint64_t>> fans(targets.size());
    for (std::size_t i : open)
        fan_for_each(targets[i], bound, t, [&](const Slope& w) { fans[i].push_back(pack(w)); });

    std::unordered_set<std::uint64_t> visited;
    visited.insert(pack(a));
    std::vector<Slope> level{a};
    for (int r = 1; !open.empty(); ++r) {
        std::unordered_set<std::uint64_t> here;
        std::vector<Slope> next;
        for (const Slope& v : level)
            fan_for_each(v, bound, t, [&](const Slope& w) {
                if (visited.insert(pack(w)).second) {
                    next.push_back(w);
                    here.insert(pack(w));
                }
            });
        if (next.empty()) return out;  // leftovers unreachable, stay -1
        if (visited.size() > cap)
            throw OverflowError("farey search exceeded vertex cap at bound " +
                                std::to_string(bound));
        std::vector<std::size_t> still;
        for (std::size_t i : open) {
            if (here.count(pack(targets[i]))) {
                out[i] = r;
            } else {
                bool adj = false;
                for (std::uint64_t k : fans[i])
                    if (here.count(k)) {
                        adj = true;
                        break;
                    }
                if (adj)
                    out[i] = r + 1;
                else
                    still.push_back(i);
            }
        }
        open = std::move(still);
        level = std::move(next);
    }
    return out;
}

void validate_inputs(const Slope& a, const Slope& b, const FareyParams& params, i64 bound) {
    validate_params(params);
    if (bound < 1 || bound > kMaxBound)
        throw std::invalid_argument("denom_bound out of range [1, 1e9]");
    if (!in_universe(a, bound) || !in_universe(b, bound))
        throw std::invalid_argument("slope exceeds denom_bound " + std::to_string(bound));
    if (params.threshold == 2 && (intersection(a, b) & 1))
        throw std::runtime_error(
            "no path: slopes of different parity classes are disconnected at threshold 2");
}

int distance_at(const Slope& a, const Slope& b, const FareyParams& params,
                const FareyOptions& opts, i64 bound) {
    int d = search(a, b, params.threshold, bound, opts.vertex_cap);
    if (d < 0)
        throw std::runtime_error("no path within denom_bound " + std::to_string(bound));
    if (opts.verify_insensitivity) {
        int d2 = search(a, b, params.threshold, 2 * bound, opts.vertex_cap);
        if (d2 != d)
            throw std::runtime_error("farey_distance unstable under bound doubling (" +
                                     std::to_string(d) + " at " + std::to_string(bound) + ", " +
                                     std::to_string(d2) + " at doubled bound); raise denom_bound");
    }
    return d;
}

}  // namespace

bool adjacent(const Slope& a, const Slope& b, const FareyParams& params) {
    validate_params(params);
    if (a == b) return false;  // degenerate: a curve is not adjacent to itself
    return intersection(a, b) == params.threshold;
}

i64 default_denom_bound(const Slope& a, const Slope& b) {
    i64 h = std::max({height(a), height(b), (i64)1});
    return checked_mul(4, checked_mul(h, h));
}

int farey_distance(const Slope& a, const Slope& b, const FareyParams& params,
                   const FareyOptions& opts) {
    i64 bound = opts.denom_bound ? opts.denom_bound : default_denom_bound(a, b);
    validate_inputs(a, b, params, bound);
    return distance_at(a, b, params, opts, bound);
}

std::vector<int> farey_distances_from(const Slope& source, const std::vector<Slope>& targets,
                                      const FareyParams& params, const FareyOptions& opts) {
    i64 bound = opts.denom_bound;
    if (!bound) {
        i64 h = std::max(height(source), (i64)1);
        for (const Slope& b : targets) h = std::max(h, height(b));
        bound = checked_mul(4, checked_mul(h, h));
    }
    for (const Slope& b : targets) validate_inputs(source, b, params, bound);
    if (targets.empty()) {
        validate_inputs(source, source, params, bound);
        return {};
    }
    std::vector<int> d = multi_search(source, targets, params.threshold, bound, opts.vertex_cap);
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] < 0)
            throw std::runtime_error("no path to " + targets[i].str() + " within denom_bound " +
                                     std::to_string(bound));
    if (opts.verify_insensitivity) {
        std::vector<int> d2 =
            multi_search(source, targets, params.threshold, 2 * bound, opts.vertex_cap);
        if (d2 != d)
            throw std::runtime_error(
                "farey_distances_from unstable under bound doubling; raise denom_bound");
    }
    return d;
}

std::vector<Slope> geodesic_path(const Slope& a, const Slope& b, const FareyParams& params,
                                 const FareyOptions& opts) {
    i64 bound = opts.denom_bound ? opts.denom_bound : default_denom_bound(a, b);
    validate_inputs(a, b, params, bound);
    int d = distance_at(a, b, params, opts, bound);

    std::vector<Slope> path{a};
    Slope cur = a;
    for (int remaining = d; remaining > 1; --remaining) {
        auto fan = neighbor_fan(cur, bound, params);
        bool stepped = false;
        for (const Slope& w : fan) {
            if (search(w, b, params.threshold, bound, opts.vertex_cap) == remaining - 1) {
                path.push_back(w);
                cur = w;
                stepped = true;
                break;
            }
        }
        if (!stepped) throw std::logic_error("geodesic reconstruction failed");
    }
    if (d > 0) path.push_back(b);
    return path;
}

std::vector<Slope> neighbor_fan(const Slope& v, i64 denom_bound, const FareyParams& params) {
    validate_params(params);
    std::vector<Slope> fan;
    fan_for_each(v, denom_bound, params.threshold, [&](const Slope& w) { fan.push_back(w); });
    std::sort(fan.begin(), fan.end(), qp_less);
    return fan;
}

FareyBall ball(const Slope& center, int radius, const FareyParams& params, i64 denom_bound,
               std::size_t vertex_cap) {
    validate_params(params);
    i64 bound = denom_bound ? denom_bound : default_denom_bound(center, center);
    if (radius < 0) throw std::invalid_argument("ball radius must be >= 0");
    if (!in_universe(center, bound))
        throw std::invalid_argument("center exceeds denom_bound " + std::to_string(bound));

    std::unordered_map<std::uint64_t, int> dist;
    dist.emplace(pack(center), 0);
    std::vector<Slope> frontier{center}, all{center};
    for (int r = 1; r <= radius && !frontier.empty(); ++r) {
        std::vector<Slope> next;
        for (const Slope& v : frontier)
            fan_for_each(v, bound, params.threshold, [&](const Slope& w) {
                if (dist.emplace(pack(w), r).second) next.push_back(w);
            });
        if (dist.size() > vertex_cap)
            throw OverflowError("farey ball exceeded vertex cap (" + std::to_string(vertex_cap) +
                                " vertices)");
        all.insert(all.end(), next.begin(), next.end());
        frontier = std::move(next);
    }

    FareyBall out;
    out.center = center;
    out.radius = radius;
    out.denom_bound = bound;
    std::sort(all.begin(), all.end(), qp_less);
    out.vertices = std::move(all);
    out.dist.reserve(out.vertices.size());
    std::unordered_map<std::uint64_t, std::size_t> index;
    for (std::size_t i = 0; i < out.vertices.size(); ++i) {
        index.emplace(pack(out.vertices[i]), i);
        out.dist.push_back(dist.at(pack(out.vertices[i])));
    }
    for (std::size_t i = 0; i < out.vertices.size(); ++i)
        fan_for_each(out.vertices[i], bound, params.threshold, [&](const Slope& w) {
            auto it = index.find(pack(w));
            if (it != index.end() && it->second > i) out.edges.emplace_back(i, it->second);
        });
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

}  // namespace teichlab
