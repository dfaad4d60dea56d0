#include "folner/hamming.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace folner {

namespace {

int hamming_dist(uint32_t a, uint32_t b, int d, int m) {
    if (d == 2) return __builtin_popcount(a ^ b);
    int dist = 0;
    for (int j = 0; j < m; j++) {
        if (a % d != b % d) dist++;
        a /= static_cast<uint32_t>(d);
        b /= static_cast<uint32_t>(d);
    }
    return dist;
}

uint32_t pow_u(int d, int m) {
    uint32_t r = 1;
    for (int j = 0; j < m; j++) r *= static_cast<uint32_t>(d);
    return r;
}

}  // namespace

long long hamming_edge_count(const HammingSubset& S) {
    long long e = 0;
    for (size_t i = 0; i < S.verts.size(); i++)
        for (size_t j = i + 1; j < S.verts.size(); j++)
            if (hamming_dist(S.verts[i], S.verts[j], S.d, S.m) == 1) e++;
    return e;
}

HammingSubset cubal_set(long long k, int m) {
    if (k < 0 || k > (1LL << m)) throw std::domain_error("cubal_set: k must be in [0, 2^m]");
    HammingSubset S;
    S.m = m;
    S.d = 2;
    S.verts.reserve(static_cast<size_t>(k));
    for (long long v = 0; v < k; v++) S.verts.push_back(static_cast<uint32_t>(v));
    return S;
}

namespace {

struct Subcube {
    uint32_t base = 0;  // fixed coordinates' values, free coordinates zero
    uint32_t free = 0;  // mask of free coordinates
};

// all vertices of the subcube
std::vector<uint32_t> cube_vertices(const Subcube& c, int m) {
    std::vector<uint32_t> out{c.base};
    for (int j = 0; j < m; j++)
        if (c.free & (1u << j)) {
            size_t n = out.size();
            for (size_t i = 0; i < n; i++) out.push_back(out[i] | (1u << j));
        }
    return out;
}

bool cubal_rec(std::vector<uint32_t> rest, const std::vector<std::vector<uint32_t>>& chosen, int m) {
    if (rest.empty()) return true;
    long long k = static_cast<long long>(rest.size());
    int c = 0;
    while ((1LL << (c + 1)) <= k) c++;  // largest 2^c <= k
    // enumerate c-subcubes contained in rest
    std::vector<uint32_t> restSorted = rest;
    std::sort(restSorted.begin(), restSorted.end());
    auto inRest = [&](uint32_t v) { return std::binary_search(restSorted.begin(), restSorted.end(), v); };
    // choose free-coordinate mask with popcount c
    for (uint32_t freemask = 0; freemask < (1u << m); freemask++) {
        if (__builtin_popcount(freemask) != c) continue;
        for (uint32_t v : restSorted) {
            if (v & freemask) continue;  // base has zeros on free coords
            Subcube cube{v, freemask};
            auto cv = cube_vertices(cube, m);
            if (!std::all_of(cv.begin(), cv.end(), inRest)) continue;
            // this cube (smaller) must lie in the neighborhood of every
            // previously placed (larger) cube
            bool nb_ok = true;
            for (const auto& big : chosen) {
                for (uint32_t u : cv) {
                    bool has = false;
                    for (uint32_t w : big)
                        if (__builtin_popcount(u ^ w) == 1) {
                            has = true;
                            break;
                        }
                    if (!has) {
                        nb_ok = false;
                        break;
                    }
                }
                if (!nb_ok) break;
            }
            if (!nb_ok) continue;
            std::vector<uint32_t> rest2;
            for (uint32_t u : restSorted)
                if (!std::binary_search(cv.begin(), cv.end(), u)) rest2.push_back(u);
            auto chosen2 = chosen;
            std::sort(cv.begin(), cv.end());
            chosen2.push_back(cv);
            if (cubal_rec(std::move(rest2), chosen2, m)) return true;
        }
    }
    return false;
}

}  // namespace

bool is_cubal(const HammingSubset& S) {
    if (S.d != 2) throw std::domain_error("is_cubal: binary cubes only");
    return cubal_rec(S.verts, {}, S.m);
}

namespace {

// canonical form under coordinate permutations x per-coordinate symbol permutations
std::vector<uint32_t> hamming_canonical(const std::vector<uint32_t>& verts, int d, int m) {
    std::vector<int> perm(static_cast<size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<uint32_t> pw(static_cast<size_t>(m));
    for (int j = 0; j < m; j++) pw[static_cast<size_t>(j)] = pow_u(d, j);
    std::vector<uint32_t> best;
    // iterate coordinate permutations
    do {
        // iterate symbol permutation per coordinate: d!^m combinations
        std::vector<std::vector<int>> symperms;
        {
            std::vector<int> sp(static_cast<size_t>(d));
            std::iota(sp.begin(), sp.end(), 0);
            do symperms.push_back(sp);
            while (std::next_permutation(sp.begin(), sp.end()));
        }
        size_t total = 1;
        for (int j = 0; j < m; j++) total *= symperms.size();
        for (size_t code = 0; code < total; code++) {
            size_t c = code;
            std::vector<const std::vector<int>*> sel(static_cast<size_t>(m));
            for (int j = 0; j < m; j++) {
                sel[static_cast<size_t>(j)] = &symperms[c % symperms.size()];
                c /= symperms.size();
            }
            std::vector<uint32_t> img;
            img.reserve(verts.size());
            for (uint32_t v : verts) {
                uint32_t w = 0;
                uint32_t t = v;
                for (int j = 0; j < m; j++) {
                    int sym = static_cast<int>(t % static_cast<uint32_t>(d));
                    t /= static_cast<uint32_t>(d);
                    w += static_cast<uint32_t>((*sel[static_cast<size_t>(j)])[static_cast<size_t>(sym)]) *
                         pw[static_cast<size_t>(perm[static_cast<size_t>(j)])];
                }
                img.push_back(w);
            }
            std::sort(img.begin(), img.end());
            if (best.empty() || img < best) best = std::move(img);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

MaxEdgesResult brute_force_max_edges(int V_count, int d, int m, long long work_budget) {
    uint32_t n = pow_u(d, m);
    if (n > 64) throw std::domain_error("brute_force_max_edges: d^m too large");
    if (V_count < 1 || static_cast<uint32_t>(V_count) > n)
        throw std::domain_error("brute_force_max_edges: V_count out of range");
    // work estimate C(n, V_count)
    double est = 1;
    for (int i = 0; i < V_count; i++) est = est * (n - i) / (i + 1);
    if (est > static_cast<double>(work_budget)) throw std::domain_error("brute_force_max_edges: work budget exceeded");

    std::vector<uint64_t> adj(n, 0);
    for (uint32_t a = 0; a < n; a++)
        for (uint32_t b = 0; b < n; b++)
            if (a != b && hamming_dist(a, b, d, m) == 1) adj[a] |= 1ull << b;

    MaxEdgesResult res;
    std::vector<std::vector<uint32_t>> rawWitnesses;
    std::vector<uint32_t> cur;
    cur.reserve(static_cast<size_t>(V_count));
    // DFS over combinations with running edge count
    auto rec = [&](auto&& self, uint32_t next, uint64_t mask, long long edges) -> void {
        if (static_cast<int>(cur.size()) == V_count) {
            if (edges > res.max_edges) {
                res.max_edges = edges;
                res.maximizer_count = 1;
                rawWitnesses.assign(1, cur);
            } else if (edges == res.max_edges) {
                res.maximizer_count++;
                if (rawWitnesses.size() < 4096) rawWitnesses.push_back(cur);
            }
            return;
        }
        uint32_t need = static_cast<uint32_t>(V_count) - static_cast<uint32_t>(cur.size());
        for (uint32_t v = next; v + need <= n; v++) {
            cur.push_back(v);
            self(self, v + 1, mask | (1ull << v), edges + __builtin_popcountll(adj[v] & mask));
            cur.pop_back();
        }
    };
    rec(rec, 0, 0, 0);

    // reduce witnesses up to symmetry
    std::vector<std::vector<uint32_t>> canon;
    for (auto& w : rawWitnesses) {
        auto c = hamming_canonical(w, d, m);
        if (std::find(canon.begin(), canon.end(), c) == canon.end()) canon.push_back(c);
    }
    std::sort(canon.begin(), canon.end());
    for (auto& c : canon) {
        HammingSubset S;
        S.d = d;
        S.m = m;
        S.verts = c;
        res.witnesses.push_back(std::move(S));
    }
    return res;
}

double edge_bound(long long V, int d) {
    if (V < 1 || d < 2) throw std::domain_error("edge_bound: V >= 1, d >= 2");
    if (V == 1) return 0.0;
    return 0.5 * (d - 1) * static_cast<double>(V) * (std::log(static_cast<double>(V)) / std::log(static_cast<double>(d)));
}

namespace {

// returns j >= 0 with V = d^j, or -1
int power_log(long long V, int d) {
    long long t = 1;
    int j = 0;
    while (t < V) {
        t *= d;
        j++;
        if (t > V) return -1;
    }
    return t == V ? j : -1;
}

}  // namespace

bool edge_bound_holds(long long edges, long long V, int d) {
    int j = power_log(V, d);
    if (j >= 0) return 2 * edges <= static_cast<long long>(d - 1) * V * j;
    return static_cast<double>(edges) <= edge_bound(V, d) + 1e-9;
}

bool edge_bound_tight(long long edges, long long V, int d) {
    int j = power_log(V, d);
    if (j >= 0) return 2 * edges == static_cast<long long>(d - 1) * V * j;
    return std::abs(static_cast<double>(edges) - edge_bound(V, d)) <= 1e-9;
}

double kkt_objective(const std::vector<double>& v, int d) {
    if (static_cast<int>(v.size()) != d) throw std::domain_error("kkt_objective: need d entries");
    double sum = 0;
    for (double x : v) {
        if (x < 0) throw std::domain_error("kkt_objective: negative entry");
        sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-12) throw std::domain_error("kkt_objective: entries must sum to 1");
    double C = (d - 1) / (2.0 * std::log(static_cast<double>(d)));
    double f = 0;
    for (double x : v)
        if (x > 0) f += C * x * std::log(x);
    for (size_t i = 0; i < v.size(); i++)
        for (size_t j = i + 1; j < v.size(); j++) f += std::min(v[i], v[j]);
    return f;
}

namespace {

void grid_rec(int d, int parts_left, long long units_left, long long n, double step, std::vector<long long>& ks,
              KktGridReport& rep) {
    if (parts_left == 1) {
        if (units_left < 1) return;
        ks.push_back(units_left);
        std::vector<double> v(ks.size());
        // renormalize exactly: v_i = k_i / n
        for (size_t i = 0; i < ks.size(); i++) v[i] = static_cast<double>(ks[i]) / static_cast<double>(n);
        double f = kkt_objective(v, d);
        rep.grid_points++;
        if (rep.argmax.empty() || f > rep.max_value) {
            rep.max_value = f;
            rep.argmax = v;
        }
        if (f > -1e-6) {
            double uni = 1.0 / d;
            for (double x : v)
                if (std::abs(x - uni) > 2 * step + 1e-12) rep.near_zero_local = false;
        }
        ks.pop_back();
        return;
    }
    for (long long k = 1; k + parts_left - 1 <= units_left; k++) {
        ks.push_back(k);
        grid_rec(d, parts_left - 1, units_left - k, n, step, ks, rep);
        ks.pop_back();
    }
}

}  // namespace

KktGridReport kkt_grid_check(int d, double step) {
    if (d < 2 || d > 6) throw std::domain_error("kkt_grid_check: d in [2,6]");
    if (step < 1e-3) throw std::domain_error("kkt_grid_check: step >= 1e-3");
    KktGridReport rep;
    rep.d = d;
    rep.step = step;
    rep.max_value = -1e300;
    rep.near_zero_local = true;
    long long n = std::llround(1.0 / step);
    std::vector<long long> ks;
    grid_rec(d, d, n, n, step, ks, rep);
    rep.max_ok = rep.max_value <= 1e-9;
    return rep;
}

}  // namespace folner
