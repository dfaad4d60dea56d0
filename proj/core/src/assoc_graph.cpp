#include "folner/assoc_graph.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>

#include "folner/boundary.hpp"
#include "folner/standard_sets.hpp"

namespace folner {

std::string lamp_config_to_string(const LampConfig& c) {
    if (c.is_zero()) return "e";
    std::string s = std::to_string(c.offset);
    s += ':';
    for (uint8_t v : c.word) s += v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + v - 10);
    return s;
}

LampAssocGraph assoc_subgraph_lamp(const FiniteSubset& F) {
    if (!F.model.is_lamp()) throw std::domain_error("assoc_subgraph_lamp: lamplighter sets only");
    int d = F.model.d();
    std::map<LampConfig, int> index;
    std::vector<std::pair<LampConfig, LampConfig>> raw;
    for (const auto& ge : F.elems) {
        const auto& x = std::get<LampElement>(ge);
        index.emplace(x.cfg, 0);
        for (int s = 1; s < d; s++) {
            LampElement y = lamp_flip(x, static_cast<uint8_t>(s), d);
            index.emplace(y.cfg, 0);
            raw.emplace_back(x.cfg, y.cfg);
        }
    }
    LampAssocGraph g;
    g.vertices.reserve(index.size());
    for (auto& [cfg, id] : index) {
        id = static_cast<int>(g.vertices.size());
        g.vertices.push_back(cfg);
    }
    g.edges.reserve(raw.size());
    for (auto& [a, b] : raw) g.edges.emplace_back(index.at(a), index.at(b));
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

std::vector<int> leaves(const LampAssocGraph& g) {
    std::vector<int> indeg(g.vertices.size(), 0), outdeg(g.vertices.size(), 0);
    for (auto& [a, b] : g.edges) {
        outdeg[static_cast<size_t>(a)]++;
        indeg[static_cast<size_t>(b)]++;
    }
    std::vector<int> out;
    for (size_t v = 0; v < g.vertices.size(); v++)
        if (indeg[v] == 1 && outdeg[v] == 0) out.push_back(static_cast<int>(v));
    return out;
}

LampInequalityReport check_lamp_inequality(const FiniteSubset& F) {
    LampInequalityReport r;
    LampAssocGraph g = assoc_subgraph_lamp(F);
    r.vertex_count = static_cast<long long>(g.vertices.size());
    r.leaf_count = static_cast<long long>(leaves(g).size());
    r.outer = static_cast<long long>(outer_boundary_set(F).size());
    r.holds = r.outer >= 2 * r.vertex_count - r.leaf_count;
    return r;
}

BsAssocGraph assoc_subgraph_bs(const FiniteSubset& F) {
    if (F.model.is_lamp()) throw std::domain_error("assoc_subgraph_bs: BS sets only");
    auto cmp = [](const PadicRational& a, const PadicRational& b) { return padic_cmp(a, b) == std::strong_ordering::less; };
    std::map<PadicRational, int, decltype(cmp)> index(cmp);
    std::vector<std::pair<PadicRational, PadicRational>> raw;
    for (const auto& ge : F.elems) {
        const auto& x = std::get<BSElement>(ge);
        index.emplace(x.f, 0);
        for (int sg : {+1, -1}) {
            PadicRational t = padic_add_pow(x.f, static_cast<long>(x.level), sg);
            index.emplace(t, 0);
            raw.emplace_back(x.f, t);
        }
    }
    BsAssocGraph g;
    g.vertices.reserve(index.size());
    for (auto& [v, id] : index) {
        id = static_cast<int>(g.vertices.size());
        g.vertices.push_back(v);
    }
    std::set<std::pair<int, int>> dir;
    for (auto& [a, b] : raw) dir.emplace(index.at(a), index.at(b));
    g.directed_edges.assign(dir.begin(), dir.end());
    std::set<int> redv;
    for (auto& e : g.directed_edges) {
        if (dir.count({e.second, e.first})) {
            if (e.first < e.second) {
                g.undirected.push_back(e);
                redv.insert(e.first);
                redv.insert(e.second);
            }
        } else {
            g.oneway.push_back(e);
        }
    }
    g.reduction_vertices.assign(redv.begin(), redv.end());
    return g;
}

OrbitCount orbit_count(const std::vector<long long>& vertices) {
    OrbitCount oc;
    std::set<long long> vs(vertices.begin(), vertices.end());
    if (vs.size() < 2) return oc;
    long long span = *vs.rbegin() - *vs.begin();
    for (int i = 0; (1LL << i) <= span; i++) {
        long long step = 1LL << i;
        long long chains = 0;
        for (long long v : vs) {
            if (vs.count(v - step)) continue;  // not a chain start
            if (vs.count(v + step)) chains++;  // length >= 2
        }
        if (chains > 0) oc.per_step.emplace_back(i, chains);
        oc.total += chains;
    }
    return oc;
}

std::vector<long long> dyadic_to_integer_vertices(const std::vector<PadicRational>& vs) {
    std::vector<long long> out;
    if (vs.empty()) return out;
    uint32_t emax = 0;
    for (const auto& v : vs) {
        if (v.p != 2) throw std::domain_error("dyadic_to_integer_vertices: base-2 values only");
        emax = std::max(emax, v.e);
    }
    std::vector<mpz_class> ints;
    ints.reserve(vs.size());
    for (const auto& v : vs) {
        mpz_class z = v.m << (emax - v.e);
        ints.push_back(std::move(z));
    }
    // strip the common power of 2
    unsigned long common = ~0ul;
    for (const auto& z : ints) {
        if (z == 0) continue;
        common = std::min(common, mpz_scan1(z.get_mpz_t(), 0));
    }
    if (common != ~0ul && common > 0)
        for (auto& z : ints) z >>= common;
    mpz_class mn = *std::min_element(ints.begin(), ints.end());
    for (auto& z : ints) {
        mpz_class t = z - mn;
        if (!t.fits_slong_p()) throw std::overflow_error("dyadic_to_integer_vertices: normalized value out of range");
        out.push_back(t.get_si());
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long e_formula(long long n) {
    if (n < 1) throw std::domain_error("e_formula: n >= 1");
    if (n == 1) return 0;
    int k = 0;
    while ((1LL << k) < n) k++;  // smallest k with 2^k >= n, i.e. 2^(k-1) < n <= 2^k
    return k * n - (1LL << k) + 1;
}

long long e_interval_brute(long long n) {
    long long e = 0;
    for (long long diff = 1; diff < n; diff <<= 1) e += n - diff;
    return e;
}

long long o_interval(long long n) {
    std::vector<long long> vs;
    vs.reserve(static_cast<size_t>(n));
    for (long long v = 1; v <= n; v++) vs.push_back(v);
    return orbit_count(vs).total;
}

BsBoundsReport check_bs_bounds(const FiniteSubset& F) {
    if (F.model.is_lamp() || F.model.p() != 2)
        throw std::domain_error("check_bs_bounds: BS(1,2) sets only");
    BsBoundsReport r;
    r.F_size = static_cast<long long>(F.size());
    BoundaryReport b = boundaries(F);
    r.edge_ratio = b.edge_ratio;
    r.hypothesis_met = b.edge_ratio <= 1;
    BsAssocGraph g = assoc_subgraph_bs(F);
    r.reduction_edges = static_cast<long long>(g.undirected.size());
    r.reduction_vertices = static_cast<long long>(g.reduction_vertices.size());
    r.oneway = static_cast<long long>(g.oneway.size());
    std::vector<PadicRational> redvals;
    for (int i : g.reduction_vertices) redvals.push_back(g.vertices[static_cast<size_t>(i)]);
    OrbitCount oc;
    if (!redvals.empty()) oc = orbit_count(dyadic_to_integer_vertices(redvals));
    r.orbits = oc.total;
    BsEdgeSplit split = bs_edge_split(F);
    r.a_edges = split.a_edges;
    r.b_edges = split.b_edges;

    long long E = static_cast<long long>(g.directed_edges.size());
    r.identities = E == 2 * r.F_size && E == r.oneway + 2 * r.reduction_edges && r.b_edges == r.oneway &&
                   r.oneway >= 2 * r.orbits;
    if (!r.hypothesis_met) return r;
    r.size_bound = r.F_size >= r.reduction_edges + r.orbits;
    if (r.reduction_edges + r.orbits > 0) {
        mpq_class bound = make_ratio(2 * (r.reduction_vertices + r.orbits), r.reduction_edges + r.orbits);
        bound.canonicalize();
        r.ratio_bound = r.edge_ratio >= bound;
    }
    r.a_bound = r.a_edges >= 2 * r.reduction_vertices;
    return r;
}

CorollaryQuotient corollary_quotient(long long n) {
    if (n < 1) throw std::domain_error("corollary_quotient: n >= 1");
    CorollaryQuotient q;
    if (n == 1) {
        q.value = 1;
        q.degenerate = true;
        return q;
    }
    q.value = make_ratio(2 * n - 1, e_formula(n) + n - 1);
    q.value.canonicalize();
    return q;
}

void dump_graph(std::ostream& os, const LampAssocGraph& g) {
    for (auto& [a, b] : g.edges)
        os << lamp_config_to_string(g.vertices[static_cast<size_t>(a)]) << " -> "
           << lamp_config_to_string(g.vertices[static_cast<size_t>(b)]) << "\n";
}

void dump_graph(std::ostream& os, const BsAssocGraph& g) {
    for (auto& [a, b] : g.directed_edges)
        os << padic_to_string(g.vertices[static_cast<size_t>(a)]) << " -> "
           << padic_to_string(g.vertices[static_cast<size_t>(b)]) << "\n";
    for (auto& [a, b] : g.undirected)
        os << padic_to_string(g.vertices[static_cast<size_t>(a)]) << " -- "
           << padic_to_string(g.vertices[static_cast<size_t>(b)]) << "\n";
}

}  // namespace folner
