#include "folner/search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "folner/boundary.hpp"
#include "folner/standard_sets.hpp"

namespace folner {

std::string to_string(BoundaryKind k) {
    switch (k) {
        case BoundaryKind::Inner: return "inner";
        case BoundaryKind::Outer: return "outer";
        case BoundaryKind::Edge: return "edge";
    }
    return "?";
}

BoundaryKind boundary_kind_from_string(const std::string& s) {
    if (s == "inner") return BoundaryKind::Inner;
    if (s == "outer") return BoundaryKind::Outer;
    if (s == "edge") return BoundaryKind::Edge;
    throw std::invalid_argument("boundary kind: expected inner|outer|edge, got \"" + s + "\"");
}

namespace {

struct ElemHasher {
    size_t operator()(const GroupElement& x) const { return element_hash(x); }
};

bool elem_less(const GroupElement& a, const GroupElement& b) {
    return element_cmp(a, b) == std::strong_ordering::less;
}

// Vertices of a ball around the identity, indexed layer by layer with each
// layer sorted; deterministic across runs.
std::vector<GroupElement> ball_vertices(const GroupModel& model, int radius) {
    std::unordered_map<GroupElement, int, ElemHasher> seen;
    std::vector<GroupElement> order{identity_element(model)};
    seen.emplace(order.front(), 0);
    std::vector<GroupElement> frontier = order;
    for (int r = 1; r <= radius; r++) {
        std::vector<GroupElement> next;
        for (const auto& x : frontier)
            for (auto& y : neighbors(x, model))
                if (!seen.count(y)) {
                    seen.emplace(y, r);
                    next.push_back(std::move(y));
                }
        std::sort(next.begin(), next.end(), elem_less);
        order.insert(order.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return order;
}

// ---------------------------------------------------------------------------
// shared result plumbing
// ---------------------------------------------------------------------------

struct Candidate {
    int size;
    long long value;
    std::vector<int> verts;
};

struct TaskResult {
    std::vector<long long> best;  // per size
    std::vector<Candidate> candidates;
    long long nodes = 0;
    std::vector<int> completed;
};

struct SharedState {
    std::vector<std::atomic<long long>> inc;  // per-size incumbents
    std::atomic<long long> nodes{0};
    std::atomic<bool> stop{false};
    long long budget = 0;
    bool tighten_enabled = true;  // enumeration keeps incumbents open so nothing is pruned

    explicit SharedState(int smax, long long node_budget) : inc(static_cast<size_t>(smax) + 1), budget(node_budget) {
        for (auto& a : inc) a.store((1LL << 62), std::memory_order_relaxed);
    }
    void tighten(int s, long long v) {
        if (!tighten_enabled) return;
        auto& a = inc[static_cast<size_t>(s)];
        long long cur = a.load(std::memory_order_relaxed);
        while (v < cur && !a.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
        }
    }
    long long max_inc_from(int s_lo, int s_hi) const {
        long long m = -1;
        for (int s = s_lo; s <= s_hi; s++) m = std::max(m, inc[static_cast<size_t>(s)].load(std::memory_order_relaxed));
        return m;
    }
    // called with a local node count delta; returns false once the budget is gone
    bool spend(long long& local, TaskResult& tr) {
        local++;
        tr.nodes++;
        if ((local & 0xfff) == 0) {
            if (nodes.fetch_add(local, std::memory_order_relaxed) + local > budget) stop.store(true, std::memory_order_relaxed);
            local = 0;
        }
        return !stop.load(std::memory_order_relaxed);
    }
};

// ---------------------------------------------------------------------------
// exhaustive engine: all subsets of a fixed ambient vertex set, bitmask DFS
// ---------------------------------------------------------------------------

class ExhaustiveEngine {
  public:
    ExhaustiveEngine(const GroupModel& model, std::vector<GroupElement> ambient, BoundaryKind kind, int smax)
        : model_(model), kind_(kind), smax_(smax), U_(std::move(ambient)) {
        std::unordered_map<GroupElement, int, ElemHasher> xi;
        X_ = U_;
        for (size_t i = 0; i < X_.size(); i++) xi.emplace(X_[i], static_cast<int>(i));
        for (const auto& u : U_)
            for (auto& y : neighbors(u, model_))
                if (!xi.count(y)) {
                    xi.emplace(y, static_cast<int>(X_.size()));
                    X_.push_back(y);
                }
        nU_ = static_cast<int>(U_.size());
        nX_ = static_cast<int>(X_.size());
        if (nX_ > 4096) throw std::domain_error("exhaustive search: ambient too large (" + std::to_string(nX_) + " vertices)");
        W_ = (nX_ + 63) / 64;
        deg_ = model_.degree();
        nbr_.assign(static_cast<size_t>(nU_) * W_, 0);
        pref_.assign(static_cast<size_t>(nU_) * W_, 0);
        notU_.assign(static_cast<size_t>(W_), ~0ull);
        for (int i = 0; i < nU_; i++) notU_[static_cast<size_t>(i >> 6)] &= ~(1ull << (i & 63));
        // indices beyond nX_ are unused; keep them off
        for (int i = nX_; i < W_ * 64; i++) notU_[static_cast<size_t>(i >> 6)] &= ~(1ull << (i & 63));
        for (int v = 0; v < nU_; v++) {
            for (auto& y : neighbors(U_[static_cast<size_t>(v)], model_)) set_bit(&nbr_[wrow(v)], xi.at(y));
            if (v > 0) std::copy(&pref_[wrow(v - 1)], &pref_[wrow(v - 1)] + W_, &pref_[wrow(v)]);
            set_bit(&pref_[wrow(v)], v);
        }
    }

    int prefix_count() const { return nU_; }
    const std::vector<GroupElement>& ambient() const { return U_; }

    void run_task(int first, SharedState& sh, TaskResult& tr) const {
        std::vector<uint64_t> A(static_cast<size_t>(W_), 0), NB(static_cast<size_t>(W_), 0);
        std::vector<int> list;
        long long local = 0;
        set_bit(A.data(), first);
        for (int w = 0; w < W_; w++) NB[static_cast<size_t>(w)] |= nbr_[wrow(first) + static_cast<size_t>(w)];
        list.push_back(first);
        if (!visit(first, list, A, NB, sh, tr, local)) return;
        dfs(first, list, A, NB, sh, tr, local);
        sh.nodes.fetch_add(local, std::memory_order_relaxed);
        if (!sh.stop.load(std::memory_order_relaxed)) tr.completed.push_back(first);
    }

  private:
    size_t wrow(int v) const { return static_cast<size_t>(v) * static_cast<size_t>(W_); }
    static void set_bit(uint64_t* w, int i) { w[i >> 6] |= 1ull << (i & 63); }

    long long value(const std::vector<int>& list, const std::vector<uint64_t>& A, const std::vector<uint64_t>& NB) const {
        switch (kind_) {
            case BoundaryKind::Outer: {
                long long s = 0;
                for (int w = 0; w < W_; w++) s += __builtin_popcountll(NB[static_cast<size_t>(w)] & ~A[static_cast<size_t>(w)]);
                return s;
            }
            case BoundaryKind::Inner: {
                long long s = 0;
                for (int v : list) {
                    const uint64_t* nv = &nbr_[wrow(v)];
                    bool cut = false;
                    for (int w = 0; w < W_ && !cut; w++) cut = (nv[w] & ~A[static_cast<size_t>(w)]) != 0;
                    if (cut) s++;
                }
                return s;
            }
            case BoundaryKind::Edge: {
                long long s = 0;
                for (int v : list) {
                    const uint64_t* nv = &nbr_[wrow(v)];
                    for (int w = 0; w < W_; w++) s += __builtin_popcountll(nv[w] & ~A[static_cast<size_t>(w)]);
                }
                return s;
            }
        }
        return 0;
    }

    // sound lower bound on the boundary of every strict extension within smax_
    long long future_bound(int last, const std::vector<int>& list, const std::vector<uint64_t>& A,
                           const std::vector<uint64_t>& NB) const {
        const uint64_t* pf = &pref_[wrow(last)];
        int picks_left = smax_ - static_cast<int>(list.size());
        switch (kind_) {
            case BoundaryKind::Outer: {
                long long definite = 0, exposed = 0;
                for (int w = 0; w < W_; w++) {
                    uint64_t out = NB[static_cast<size_t>(w)] & ~A[static_cast<size_t>(w)];
                    uint64_t dec = notU_[static_cast<size_t>(w)] | pf[w];
                    definite += __builtin_popcountll(out & dec);
                    exposed += __builtin_popcountll(out & ~dec);
                }
                return definite + std::max<long long>(0, exposed - picks_left);
            }
            case BoundaryKind::Inner: {
                long long definite = 0;
                for (int v : list) {
                    const uint64_t* nv = &nbr_[wrow(v)];
                    bool cut = false;
                    for (int w = 0; w < W_ && !cut; w++)
                        cut = (nv[w] & ~A[static_cast<size_t>(w)] & (notU_[static_cast<size_t>(w)] | pf[w])) != 0;
                    if (cut) definite++;
                }
                return definite;
            }
            case BoundaryKind::Edge: {
                long long definite = 0, exposed = 0;
                for (int v : list) {
                    const uint64_t* nv = &nbr_[wrow(v)];
                    for (int w = 0; w < W_; w++) {
                        uint64_t out = nv[w] & ~A[static_cast<size_t>(w)];
                        uint64_t dec = notU_[static_cast<size_t>(w)] | pf[w];
                        definite += __builtin_popcountll(out & dec);
                        exposed += __builtin_popcountll(out & ~dec);
                    }
                }
                return definite + std::max<long long>(0, exposed - static_cast<long long>(deg_) * picks_left);
            }
        }
        return 0;
    }

    bool visit(int /*last*/, const std::vector<int>& list, const std::vector<uint64_t>& A, const std::vector<uint64_t>& NB,
               SharedState& sh, TaskResult& tr, long long& local) const {
        long long val = value(list, A, NB);
        int s = static_cast<int>(list.size());
        if (val <= sh.inc[static_cast<size_t>(s)].load(std::memory_order_relaxed)) {
            sh.tighten(s, val);
            tr.candidates.push_back({s, val, list});
        }
        if (val < tr.best[static_cast<size_t>(s)]) tr.best[static_cast<size_t>(s)] = val;
        return sh.spend(local, tr);
    }

    void dfs(int last, std::vector<int>& list, std::vector<uint64_t>& A, std::vector<uint64_t>& NB, SharedState& sh,
             TaskResult& tr, long long& local) const {
        if (static_cast<int>(list.size()) >= smax_) return;
        long long lb = future_bound(last, list, A, NB);
        if (lb > sh.max_inc_from(static_cast<int>(list.size()) + 1, smax_)) return;
        std::vector<uint64_t> NB2(static_cast<size_t>(W_));
        for (int v = last + 1; v < nU_; v++) {
            set_bit(A.data(), v);
            for (int w = 0; w < W_; w++) NB2[static_cast<size_t>(w)] = NB[static_cast<size_t>(w)] | nbr_[wrow(v) + static_cast<size_t>(w)];
            list.push_back(v);
            bool go = visit(v, list, A, NB2, sh, tr, local);
            if (go) {
                std::swap(NB, NB2);
                dfs(v, list, A, NB, sh, tr, local);
                std::swap(NB, NB2);
            }
            list.pop_back();
            A[static_cast<size_t>(v >> 6)] &= ~(1ull << (v & 63));
            if (!go) return;
        }
    }

    GroupModel model_;
    BoundaryKind kind_;
    int smax_;
    std::vector<GroupElement> U_, X_;
    int nU_ = 0, nX_ = 0, W_ = 0, deg_ = 0;
    std::vector<uint64_t> nbr_, pref_, notU_;
};

// ---------------------------------------------------------------------------
// connected engine: id-rooted connected-set enumeration over a ball universe
// ---------------------------------------------------------------------------

class ConnectedEngine {
  public:
    ConnectedEngine(const GroupModel& model, BoundaryKind kind, int smax)
        : model_(model), kind_(kind), smax_(smax), verts_(ball_vertices(model, smax)) {
        std::unordered_map<GroupElement, int, ElemHasher> index;
        for (size_t i = 0; i < verts_.size(); i++) index.emplace(verts_[i], static_cast<int>(i));
        int n = static_cast<int>(verts_.size());
        deg_ = model.degree();
        adj_.assign(static_cast<size_t>(n) * static_cast<size_t>(deg_), -1);
        for (int i = 0; i < n; i++) {
            auto nb = neighbors(verts_[static_cast<size_t>(i)], model);
            for (size_t j = 0; j < nb.size(); j++) {
                auto it = index.find(nb[j]);
                adj_[static_cast<size_t>(i) * static_cast<size_t>(deg_) + j] = it == index.end() ? -1 : it->second;
            }
        }
        root_ext_.clear();
        for (int j = 0; j < deg_; j++) {
            int u = adj_[static_cast<size_t>(j)];
            if (u >= 0) root_ext_.push_back(u);
        }
        std::sort(root_ext_.begin(), root_ext_.end());
    }

    int prefix_count() const { return static_cast<int>(root_ext_.size()); }
    const std::vector<GroupElement>& universe() const { return verts_; }

    // task -1: just the root singleton; task i >= 0: include root_ext_[i] with
    // root_ext_[0..i-1] banned
    void run_task(int task, SharedState& sh, TaskResult& tr) const {
        State st(static_cast<int>(verts_.size()), deg_);
        long long local = 0;
        add(st, 0);
        if (task < 0) {
            visit(st, sh, tr, local);
            sh.nodes.fetch_add(local, std::memory_order_relaxed);
            if (!sh.stop.load(std::memory_order_relaxed)) tr.completed.push_back(task);
            return;
        }
        for (int j = 0; j < task; j++) ban(st, root_ext_[static_cast<size_t>(j)]);
        int v = root_ext_[static_cast<size_t>(task)];
        add(st, v);
        bool go = visit(st, sh, tr, local);
        if (go) {
            std::vector<int> ext;
            for (size_t j = static_cast<size_t>(task) + 1; j < root_ext_.size(); j++) ext.push_back(root_ext_[j]);
            push_new_neighbors(st, v, ext);
            rec(st, ext, sh, tr, local);
        }
        sh.nodes.fetch_add(local, std::memory_order_relaxed);
        if (!sh.stop.load(std::memory_order_relaxed)) tr.completed.push_back(task);
    }

  private:
    struct State {
        std::vector<uint8_t> inA, banned, inExt;
        std::vector<int> outdeg, banadj, outercnt;
        std::vector<int> list;
        long long innerCnt = 0, defInner = 0;
        long long outerCnt = 0, defOuter = 0;
        long long edgeCut = 0, defEdge = 0;
        State(int n, int) : inA(n, 0), banned(n, 0), inExt(n, 0), outdeg(n, 0), banadj(n, 0), outercnt(n, 0) {}
    };

    const int* row(int v) const { return &adj_[static_cast<size_t>(v) * static_cast<size_t>(deg_)]; }

    // Invariants: outercnt[u] = |N(u) n A| for every u; outdeg[v] = neighbors
    // of v outside A (members only); banadj[v] = banned or out-of-universe
    // neighbors (members only). innerCnt = members with outdeg > 0; outerCnt =
    // non-members with outercnt > 0; edgeCut = crossing edges; def* = the
    // permanent (banned/out-of-universe) parts of each count.
    void add(State& st, int v) const {
        // v leaves the outer set
        if (st.outercnt[static_cast<size_t>(v)] > 0) st.outerCnt--;
        st.inA[static_cast<size_t>(v)] = 1;
        st.list.push_back(v);
        int od = 0, ba = 0, inA_nbrs = 0;
        const int* r = row(v);
        for (int j = 0; j < deg_; j++) {
            int u = r[j];
            if (u < 0) {
                od++;
                ba++;
                continue;
            }
            if (st.inA[static_cast<size_t>(u)]) {
                inA_nbrs++;
                st.outercnt[static_cast<size_t>(u)]++;
                if (--st.outdeg[static_cast<size_t>(u)] == 0) st.innerCnt--;
            } else {
                od++;
                if (st.banned[static_cast<size_t>(u)]) ba++;
                if (st.outercnt[static_cast<size_t>(u)]++ == 0) {
                    st.outerCnt++;
                    if (st.banned[static_cast<size_t>(u)]) st.defOuter++;
                }
            }
        }
        st.outdeg[static_cast<size_t>(v)] = od;
        if (od > 0) st.innerCnt++;
        st.banadj[static_cast<size_t>(v)] = ba;
        if (ba > 0) st.defInner++;
        st.edgeCut += deg_ - 2 * inA_nbrs;
        st.defEdge += ba;
    }

    void rem(State& st, int v) const {
        const int* r = row(v);
        int inA_nbrs = 0, ba = st.banadj[static_cast<size_t>(v)];
        if (st.outdeg[static_cast<size_t>(v)] > 0) st.innerCnt--;
        st.outdeg[static_cast<size_t>(v)] = 0;
        st.banadj[static_cast<size_t>(v)] = 0;
        if (ba > 0) st.defInner--;
        st.inA[static_cast<size_t>(v)] = 0;
        st.list.pop_back();
        for (int j = 0; j < deg_; j++) {
            int u = r[j];
            if (u < 0) continue;
            if (st.inA[static_cast<size_t>(u)]) {
                inA_nbrs++;
                st.outercnt[static_cast<size_t>(u)]--;
                if (st.outdeg[static_cast<size_t>(u)]++ == 0) st.innerCnt++;
            } else {
                if (--st.outercnt[static_cast<size_t>(u)] == 0) {
                    st.outerCnt--;
                    if (st.banned[static_cast<size_t>(u)]) st.defOuter--;
                }
            }
        }
        if (st.outercnt[static_cast<size_t>(v)] > 0) st.outerCnt++;
        st.edgeCut -= deg_ - 2 * inA_nbrs;
        st.defEdge -= ba;
    }

    void ban(State& st, int v) const {
        st.banned[static_cast<size_t>(v)] = 1;
        if (st.outercnt[static_cast<size_t>(v)] > 0) st.defOuter++;
        const int* r = row(v);
        for (int j = 0; j < deg_; j++) {
            int u = r[j];
            if (u >= 0 && st.inA[static_cast<size_t>(u)]) {
                if (st.banadj[static_cast<size_t>(u)]++ == 0) st.defInner++;
                st.defEdge++;
            }
        }
    }

    void unban(State& st, int v) const {
        st.banned[static_cast<size_t>(v)] = 0;
        if (st.outercnt[static_cast<size_t>(v)] > 0) st.defOuter--;
        const int* r = row(v);
        for (int j = 0; j < deg_; j++) {
            int u = r[j];
            if (u >= 0 && st.inA[static_cast<size_t>(u)]) {
                if (--st.banadj[static_cast<size_t>(u)] == 0) st.defInner--;
                st.defEdge--;
            }
        }
    }

    long long value(const State& st) const {
        switch (kind_) {
            case BoundaryKind::Inner: return st.innerCnt;
            case BoundaryKind::Outer: return st.outerCnt;
            case BoundaryKind::Edge: return st.edgeCut;
        }
        return 0;
    }
    long long definite(const State& st) const {
        switch (kind_) {
            case BoundaryKind::Inner: return st.defInner;
            case BoundaryKind::Outer: return st.defOuter;
            case BoundaryKind::Edge: return st.defEdge;
        }
        return 0;
    }

    bool visit(State& st, SharedState& sh, TaskResult& tr, long long& local) const {
        long long val = value(st);
        int s = static_cast<int>(st.list.size());
        if (val <= sh.inc[static_cast<size_t>(s)].load(std::memory_order_relaxed)) {
            sh.tighten(s, val);
            tr.candidates.push_back({s, val, st.list});
        }
        if (val < tr.best[static_cast<size_t>(s)]) tr.best[static_cast<size_t>(s)] = val;
        return sh.spend(local, tr);
    }

    void push_new_neighbors(const State& st, int v, std::vector<int>& ext) const {
        const int* r = row(v);
        for (int j = 0; j < deg_; j++) {
            int u = r[j];
            if (u < 0 || st.inA[static_cast<size_t>(u)] || st.banned[static_cast<size_t>(u)]) continue;
            if (std::find(ext.begin(), ext.end(), u) == ext.end()) ext.push_back(u);
        }
    }

    void rec(State& st, const std::vector<int>& ext, SharedState& sh, TaskResult& tr, long long& local) const {
        if (static_cast<int>(st.list.size()) >= smax_) return;
        int s = static_cast<int>(st.list.size());
        if (definite(st) > sh.max_inc_from(s + 1, smax_)) return;
        std::vector<int> bannedHere;
        for (size_t i = 0; i < ext.size(); i++) {
            int v = ext[i];
            if (st.banned[static_cast<size_t>(v)]) continue;  // banned by an outer level
            add(st, v);
            bool go = visit(st, sh, tr, local);
            if (go && static_cast<int>(st.list.size()) < smax_) {
                std::vector<int> ext2(ext.begin() + static_cast<long>(i) + 1, ext.end());
                push_new_neighbors(st, v, ext2);
                rec(st, ext2, sh, tr, local);
            }
            rem(st, v);
            if (!go) break;
            ban(st, v);
            bannedHere.push_back(v);
        }
        for (auto it = bannedHere.rbegin(); it != bannedHere.rend(); ++it) unban(st, *it);
    }

    GroupModel model_;
    BoundaryKind kind_;
    int smax_;
    std::vector<GroupElement> verts_;
    int deg_ = 0;
    std::vector<int> adj_;
    std::vector<int> root_ext_;
};

// ---------------------------------------------------------------------------
// driver
// ---------------------------------------------------------------------------

template <class Engine>
void run_parallel(const Engine& eng, const SearchProblem& problem, SharedState& sh, std::vector<TaskResult>& results,
                  int first_task) {
    int tasks = eng.prefix_count();
    results.resize(static_cast<size_t>(tasks - first_task));
    std::atomic<int> next{first_task};
    int workers = std::max(1, problem.workers);
    auto work = [&] {
        for (;;) {
            int t = next.fetch_add(1);
            if (t >= tasks) return;
            if (problem.skip_prefixes.count(t)) continue;
            TaskResult& tr = results[static_cast<size_t>(t - first_task)];
            tr.best.assign(static_cast<size_t>(problem.size_limit) + 1, (1LL << 62));
            eng.run_task(t, sh, tr);
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; i++) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
}

FiniteSubset materialize(const GroupModel& model, const std::vector<GroupElement>& universe, const std::vector<int>& idx) {
    FiniteSubset F;
    F.model = model;
    for (int i : idx) F.elems.push_back(universe[static_cast<size_t>(i)]);
    F.normalize();
    return F;
}

void assemble_report(OptimalityReport& rep, const std::vector<GroupElement>& universe,
                     const std::vector<TaskResult>& results, const SharedState& sh) {
    const SearchProblem& pr = rep.problem;
    int smax = pr.size_limit;
    rep.per_size.assign(static_cast<size_t>(smax) + 1, SizeResult{});
    std::vector<long long> mins(static_cast<size_t>(smax) + 1, (1LL << 62));
    for (const auto& tr : results) {
        rep.nodes_visited += tr.nodes;
        for (int s = 1; s <= smax && s < static_cast<int>(tr.best.size()); s++)
            mins[static_cast<size_t>(s)] = std::min(mins[static_cast<size_t>(s)], tr.best[static_cast<size_t>(s)]);
        for (int c : tr.completed) rep.completed_prefixes.push_back(c);
    }
    rep.budget_exhausted = sh.stop.load();
    std::sort(rep.completed_prefixes.begin(), rep.completed_prefixes.end());
    for (int s = 1; s <= smax; s++) {
        SizeResult& r = rep.per_size[static_cast<size_t>(s)];
        r.size = s;
        r.exact = !rep.budget_exhausted;
        if (mins[static_cast<size_t>(s)] < (1LL << 62)) {
            r.min_boundary = mins[static_cast<size_t>(s)];
            r.ratio = make_ratio(r.min_boundary, s);
            r.ratio.canonicalize();
        }
    }
    // witnesses: canonical forms of candidates attaining the final minima
    for (const auto& tr : results)
        for (const auto& c : tr.candidates) {
            if (c.size > smax) continue;
            SizeResult& r = rep.per_size[static_cast<size_t>(c.size)];
            if (c.value != r.min_boundary) continue;
            FiniteSubset w = canonical_form(materialize(pr.model, universe, c.verts));
            bool dup = false;
            for (const auto& have : r.witnesses)
                if (have == w) {
                    dup = true;
                    break;
                }
            if (!dup) r.witnesses.push_back(std::move(w));
        }
    for (int s = 1; s <= smax; s++) {
        auto& ws = rep.per_size[static_cast<size_t>(s)].witnesses;
        std::sort(ws.begin(), ws.end(), [](const FiniteSubset& a, const FiniteSubset& b) { return a.less_than(b); });
    }
}

void composition_pass(OptimalityReport& rep) {
    // inner and edge boundaries are additive over connected components placed
    // far apart, so the overall minimum per cardinality is the multiset
    // composition of connected minima
    int smax = rep.problem.size_limit;
    std::vector<long long> comp(static_cast<size_t>(smax) + 1, (1LL << 62));
    for (int s = 1; s <= smax; s++) {
        long long m = rep.per_size[static_cast<size_t>(s)].min_boundary;
        if (m >= 0) comp[static_cast<size_t>(s)] = m;
        for (int j = 1; j < s; j++) {
            long long a = comp[static_cast<size_t>(j)];
            long long b = rep.per_size[static_cast<size_t>(s - j)].min_boundary;
            if (a < (1LL << 62) && b >= 0) comp[static_cast<size_t>(s)] = std::min(comp[static_cast<size_t>(s)], a + b);
        }
        SizeResult& r = rep.per_size[static_cast<size_t>(s)];
        r.includes_disconnected = true;
        if (comp[static_cast<size_t>(s)] < r.min_boundary) {
            r.disconnected_ties = true;  // a strictly better disconnected set exists
            r.min_boundary = comp[static_cast<size_t>(s)];
            r.ratio = make_ratio(r.min_boundary, s);
            r.ratio.canonicalize();
            r.witnesses.clear();
        } else if (r.min_boundary >= 0) {
            for (int j = 1; j < s; j++) {
                long long a = comp[static_cast<size_t>(j)];
                long long b = rep.per_size[static_cast<size_t>(s - j)].min_boundary;
                if (a < (1LL << 62) && b >= 0 && a + b == r.min_boundary) r.disconnected_ties = true;
            }
        }
    }
}

void optimality_flags(OptimalityReport& rep) {
    int smax = rep.problem.size_limit;
    for (int s = 1; s <= smax; s++) {
        SizeResult& r = rep.per_size[static_cast<size_t>(s)];
        if (r.min_boundary < 0 || !r.exact) continue;
        bool strict = true;
        for (int j = 1; j < s; j++) {
            const SizeResult& q = rep.per_size[static_cast<size_t>(j)];
            if (q.min_boundary < 0 || !q.exact || !(q.ratio > r.ratio)) {
                strict = false;
                break;
            }
        }
        r.strictly_better_than_smaller = strict;
        r.optimal = strict;
    }
}

}  // namespace

void enumerate_connected_subsets(const GroupModel& model, int size_limit,
                                 const std::function<void(const FiniteSubset&)>& emit, long long node_budget) {
    SearchProblem pr;
    pr.model = model;
    pr.kind = BoundaryKind::Edge;
    pr.size_limit = size_limit;
    pr.node_budget = node_budget;
    ConnectedEngine eng(model, pr.kind, size_limit);
    SharedState sh(size_limit, node_budget);
    sh.tighten_enabled = false;  // no pruning: every class must be seen
    std::vector<TaskResult> results;
    run_parallel(eng, pr, sh, results, -1);
    if (sh.stop.load()) throw BudgetExceeded("enumerate_connected_subsets: node budget exceeded");
    std::vector<FiniteSubset> classes;
    for (const auto& tr : results)
        for (const auto& c : tr.candidates) {
            FiniteSubset F = materialize(model, eng.universe(), c.verts);
            FiniteSubset canon = canonical_form(F);
            if (canon == F) classes.push_back(std::move(canon));
        }
    std::sort(classes.begin(), classes.end(), [](const FiniteSubset& a, const FiniteSubset& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.less_than(b);
    });
    for (const auto& F : classes) emit(F);
}

OptimalityReport min_boundary_ratio(const SearchProblem& problem) {
    if (problem.size_limit < 1) throw std::domain_error("min_boundary_ratio: size_limit >= 1");
    OptimalityReport rep;
    rep.problem = problem;
    SharedState sh(problem.size_limit, problem.node_budget);
    std::vector<TaskResult> results;
    if (problem.mode == SearchMode::Exhaustive) {
        std::vector<GroupElement> ambient;
        if (problem.ambient.type == SearchAmbient::Type::Ball) {
            ambient = ball_vertices(problem.model, problem.ambient.ball_radius);
        } else {
            if (!problem.model.is_lamp()) throw std::domain_error("box ambient: lamplighter models only");
            ambient = lamp_box_set(problem.model.d(), problem.ambient.cursor_lo, problem.ambient.cursor_hi,
                                   problem.ambient.supp_lo, problem.ambient.supp_hi)
                          .elems;
        }
        ExhaustiveEngine eng(problem.model, std::move(ambient), problem.kind, problem.size_limit);
        rep.prefix_count = eng.prefix_count();
        run_parallel(eng, problem, sh, results, 0);
        assemble_report(rep, eng.ambient(), results, sh);
        rep.oracle_sound = true;  // exhaustive over its ambient, all subsets
    } else {
        ConnectedEngine eng(problem.model, problem.kind, problem.size_limit);
        rep.prefix_count = eng.prefix_count();
        std::vector<TaskResult> rootres(1);
        rootres[0].best.assign(static_cast<size_t>(problem.size_limit) + 1, (1LL << 62));
        eng.run_task(-1, sh, rootres[0]);  // the singleton {id}
        run_parallel(eng, problem, sh, results, 0);
        results.insert(results.begin(), std::move(rootres[0]));
        assemble_report(rep, eng.universe(), results, sh);
        if (problem.kind == BoundaryKind::Outer) {
            rep.oracle_sound = false;  // outer boundaries of components may overlap
        } else {
            composition_pass(rep);
        }
    }
    optimality_flags(rep);
    return rep;
}

CorrespondenceReport verify_closure_correspondence(const OptimalityReport& outer, const OptimalityReport& inner) {
    if (outer.problem.kind != BoundaryKind::Outer || inner.problem.kind != BoundaryKind::Inner)
        throw std::domain_error("verify_closure_correspondence: need an outer and an inner report");
    CorrespondenceReport rep;
    for (int s = 1; s <= outer.problem.size_limit; s++) {
        const SizeResult& o = outer.per_size[static_cast<size_t>(s)];
        if (!o.optimal || o.witnesses.empty()) continue;
        CorrespondenceEntry e;
        e.outer_size = s;
        e.outer_min = o.min_boundary;
        int cs = s + static_cast<int>(o.min_boundary);
        e.closure_size = cs;
        if (cs > inner.problem.size_limit) continue;  // outside the searched inner range
        const SizeResult& in = inner.per_size[static_cast<size_t>(cs)];
        // closures of outer witnesses, canonicalized
        std::vector<FiniteSubset> closures;
        for (const auto& w : o.witnesses) {
            FiniteSubset cl = canonical_form(closure(w));
            if (static_cast<int>(cl.size()) != cs)
                throw std::runtime_error("closure correspondence: unexpected closure size");
            bool dup = false;
            for (auto& have : closures) dup = dup || have == cl;
            if (!dup) closures.push_back(std::move(cl));
        }
        e.closure_attains_inner_min = false;
        for (const auto& cl : closures) {
            long long iv = inner_boundary_size(cl);
            if (iv == in.min_boundary) e.closure_attains_inner_min = true;
        }
        e.closure_inner_optimal = in.optimal && e.closure_attains_inner_min;
        e.all_inner_witnesses_are_closures = true;
        for (const auto& iw : in.witnesses) {
            bool found = false;
            for (const auto& cl : closures) found = found || cl == iw;
            if (!found) e.all_inner_witnesses_are_closures = false;
        }
        rep.holds = rep.holds && e.ok();
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

CorrespondenceReport verify_closure_correspondence(const GroupModel& model, int outer_size_limit, int ball_radius,
                                                   int workers) {
    SearchProblem po;
    po.model = model;
    po.kind = BoundaryKind::Outer;
    po.size_limit = outer_size_limit;
    po.mode = SearchMode::Exhaustive;
    po.ambient.type = SearchAmbient::Type::Ball;
    po.ambient.ball_radius = ball_radius;
    po.workers = workers;
    OptimalityReport outer = min_boundary_ratio(po);
    // the closure of a size-s outer witness has s + min_outer(s) elements
    int inner_limit = 0;
    for (int s = 1; s <= outer_size_limit; s++) {
        const SizeResult& o = outer.per_size[static_cast<size_t>(s)];
        if (o.min_boundary >= 0) inner_limit = std::max(inner_limit, s + static_cast<int>(o.min_boundary));
    }
    SearchProblem pi;
    pi.model = model;
    pi.kind = BoundaryKind::Inner;
    pi.size_limit = inner_limit;
    pi.mode = SearchMode::ConnectedOnly;
    pi.workers = workers;
    OptimalityReport inner = min_boundary_ratio(pi);
    return verify_closure_correspondence(outer, inner);
}

}  // namespace folner
