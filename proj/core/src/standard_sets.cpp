#include "folner/standard_sets.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace folner {

namespace {

void check_budget(const mpz_class& size, long long budget, const char* what) {
    if (size > mpz_of(budget)) throw BudgetExceeded(std::string(what) + ": element budget exceeded (" + size.get_str() + " > " + std::to_string(budget) + ")");
}

mpz_class zpow(long base, unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
    return r;
}

// all configs with support inside [lo, hi], symbols < d, appended as (k, cfg)
void emit_configs_rec(int d, int32_t lo, int32_t hi, int32_t pos, LampConfig& cur, const std::vector<int32_t>& cursors,
                      std::vector<GroupElement>& out) {
    if (pos > hi) {
        LampConfig norm = normalize(cur);
        for (int32_t k : cursors) {
            LampElement e;
            e.pos = k;
            e.cfg = norm;
            out.emplace_back(std::move(e));
        }
        return;
    }
    for (uint8_t v = 0; v < d; v++) {
        cur.word[static_cast<size_t>(pos - lo)] = v;
        emit_configs_rec(d, lo, hi, pos + 1, cur, cursors, out);
    }
}

FiniteSubset lamp_box(int d, int32_t klo, int32_t khi, int32_t slo, int32_t shi, long long budget, const char* what) {
    if (d < 2) throw std::domain_error("lamplighter set: d must be >= 2");
    mpz_class size = (khi - klo + 1) * zpow(d, static_cast<unsigned long>(shi - slo + 1));
    check_budget(size, budget, what);
    GroupModel m;
    m.kind = GroupModel::Kind::Lamplighter;
    m.param = d;
    FiniteSubset F;
    F.model = m;
    F.elems.reserve(static_cast<size_t>(size.get_ui()));
    std::vector<int32_t> cursors;
    for (int32_t k = klo; k <= khi; k++) cursors.push_back(k);
    LampConfig cur;
    cur.offset = slo;
    cur.word.assign(static_cast<size_t>(shi - slo + 1), 0);
    emit_configs_rec(d, slo, shi, slo, cur, cursors, F.elems);
    F.normalize();
    return F;
}

}  // namespace

FiniteSubset lamp_box_set(int d, int cursor_lo, int cursor_hi, int supp_lo, int supp_hi, long long element_budget) {
    if (cursor_hi < cursor_lo || supp_hi < supp_lo) throw std::domain_error("lamp_box_set: empty box");
    return lamp_box(d, cursor_lo, cursor_hi, supp_lo, supp_hi, element_budget, "lamp_box_set");
}

FiniteSubset standard_set_lamp(int d, int n, long long element_budget) {
    if (n < 1) throw std::domain_error("standard_set_lamp: n must be >= 1");
    return lamp_box(d, 1, n, 1, n, element_budget, "standard_set_lamp");
}

FiniteSubset standard_closure_lamp(int d, int n, long long element_budget) {
    if (n < 1) throw std::domain_error("standard_closure_lamp: n must be >= 1");
    return lamp_box(d, 0, n + 1, 1, n, element_budget, "standard_closure_lamp");
}

FiniteSubset sws_standard_set(int n, long long element_budget) {
    if (n < 1) throw std::domain_error("sws_standard_set: n must be >= 1");
    FiniteSubset F = lamp_box(2, 1, n, 0, n + 1, element_budget, "sws_standard_set");
    F.model.kind = GroupModel::Kind::LamplighterSws;
    return F;
}

FiniteSubset standard_set_bs(int p, int n, long long element_budget) {
    if (p < 2) throw std::domain_error("standard_set_bs: p must be >= 2");
    if (n < 1) throw std::domain_error("standard_set_bs: n must be >= 1");
    mpz_class size = n * zpow(p, static_cast<unsigned long>(n));
    check_budget(size, element_budget, "standard_set_bs");
    GroupModel m;
    m.kind = GroupModel::Kind::BaumslagSolitar;
    m.param = p;
    FiniteSubset F;
    F.model = m;
    mpz_class pn = zpow(p, static_cast<unsigned long>(n));
    for (int k = 0; k < n; k++) {
        for (mpz_class f = 0; f < pn; f++) {
            BSElement e;
            e.level = k;
            e.f.p = p;
            e.f.m = f;
            F.elems.emplace_back(std::move(e));
        }
    }
    F.normalize();
    return F;
}

mpz_class fol_value(int d, long long n) {
    if (d < 2) throw std::domain_error("fol_value: d must be >= 2");
    if (n < d)
        throw std::domain_error("fol_value: the closed form requires n >= d; use the search oracle below that");
    return mpz_of(2 * n) * zpow(d, static_cast<unsigned long>(2 * (n - 1)));
}

int SeriesResidual::degree() const {
    for (int j = static_cast<int>(pd_coeffs.size()) - 1; j >= 0; j--)
        if (pd_coeffs[static_cast<size_t>(j)] != 0) return j;
    return -1;
}

std::vector<mpz_class> fol_series_coefficients(int d, int N) {
    // 2x / (1 - d^2 x)^2 - x, by long division against 1 - 2d^2 x + d^4 x^2:
    // a_n = 2 d^2 a_{n-1} - d^4 a_{n-2} + 2 [n==1]
    mpz_class d2 = mpz_class(d) * d;
    mpz_class d4 = d2 * d2;
    std::vector<mpz_class> a(static_cast<size_t>(N) + 1, 0);
    for (int n = 1; n <= N; n++) {
        mpz_class v = 2 * d2 * a[static_cast<size_t>(n - 1)];
        if (n >= 2) v -= d4 * a[static_cast<size_t>(n - 2)];
        if (n == 1) v += 2;
        a[static_cast<size_t>(n)] = v;
    }
    std::vector<mpz_class> out;
    for (int n = 1; n <= N; n++) {
        mpz_class c = a[static_cast<size_t>(n)];
        if (n == 1) c -= 1;  // the "- x" term
        out.push_back(c);
    }
    return out;
}

SeriesResidual fol_series_check(int d, int N, const std::vector<mpz_class>& small_values) {
    if (d < 2) throw std::domain_error("fol_series_check: d must be >= 2");
    if (N < d) throw std::domain_error("fol_series_check: N must be >= d");
    if (static_cast<int>(small_values.size()) != d - 1)
        throw std::domain_error("fol_series_check: need Fol(n) for 1 <= n < d (" + std::to_string(d - 1) + " values)");
    auto coeffs = fol_series_coefficients(d, N);
    // check the closed form against the division route wherever the formula applies
    for (int n = 1; n <= N; n++) {
        if (n != 1 && n < d) continue;
        mpz_class expect = n == 1 ? mpz_class(1) : fol_value(d, n);
        if (coeffs[static_cast<size_t>(n - 1)] != expect)
            throw std::runtime_error("fol_series_check: residual at n=" + std::to_string(n));
    }
    if (small_values[0] != 1)
        throw std::runtime_error("fol_series_check: Fol(1) must be 1");
    SeriesResidual r;
    r.d = d;
    for (int n = 2; n <= d - 1; n++)
        r.pd_coeffs.push_back(small_values[static_cast<size_t>(n - 1)] - coeffs[static_cast<size_t>(n - 1)]);
    if (r.degree() > d - 3) throw std::runtime_error("fol_series_check: deg P_D exceeds d-3");
    return r;
}

BsEdgeSplit bs_edge_split(const FiniteSubset& F) {
    if (F.model.is_lamp()) throw std::domain_error("bs_edge_split: BS sets only");
    struct H {
        size_t operator()(const GroupElement& x) const { return element_hash(x); }
    };
    std::unordered_set<GroupElement, H> in(F.elems.begin(), F.elems.end());
    BsEdgeSplit s;
    for (const auto& ge : F.elems) {
        const auto& x = std::get<BSElement>(ge);
        for (int dl : {-1, +1}) {
            BSElement y = x;
            y.level += dl;
            if (!in.count(GroupElement(y))) s.a_edges++;
        }
        for (int sg : {-1, +1}) {
            BSElement y = x;
            y.f = padic_add_pow(x.f, static_cast<long>(x.level), sg);
            if (!in.count(GroupElement(y))) s.b_edges++;
        }
    }
    return s;
}

BsCounterexampleReport bs_counterexample(int p, long long element_budget) {
    if (p % 3 != 0) throw std::domain_error("bs_counterexample: p must be divisible by 3");
    if (p < 36 || p > 60) throw std::domain_error("bs_counterexample: p out of the verified range [36, 60]");
    BsCounterexampleReport r;
    r.p = p;
    long q = p / 3;
    mpz_class q4 = zpow(q, 4), q3 = zpow(q, 3), p3 = zpow(p, 3);
    r.F_size = 4 * q4;
    r.F3_size = 3 * p3;
    r.a_edges = 2 * q4;
    r.b_edges = 8 * q3;
    r.ratio_F = mpq_class(1, 2) + mpq_class(6, p);
    r.ratio_F.canonicalize();
    // (2/3) (p - p^-3)/(p - 1) = (2/3) (p^4 - 1) / (p^3 (p - 1))
    r.ratio_F3 = mpq_class(2 * (zpow(p, 4) - 1), 3 * p3 * (p - 1));
    r.ratio_F3.canonicalize();
    r.size_ok = r.F_size <= r.F3_size;
    r.strict = r.ratio_F < r.ratio_F3;

    // construct F explicitly and enumerate the boundary
    check_budget(r.F_size + r.F3_size, element_budget, "bs_counterexample");
    GroupModel m;
    m.kind = GroupModel::Kind::BaumslagSolitar;
    m.param = p;
    FiniteSubset F;
    F.model = m;
    for (int k = 0; k <= 3; k++)
        for (long e0 = 0; e0 < q; e0++)
            for (long e1 = 0; e1 < q; e1++)
                for (long e2 = 0; e2 < q; e2++)
                    for (long e3 = 0; e3 < q; e3++) {
                        BSElement e;
                        e.level = k;
                        e.f.p = p;
                        e.f.m = ((mpz_class(e3) * p + e2) * p + e1) * p + e0;
                        F.elems.emplace_back(std::move(e));
                    }
    F.normalize();
    BsEdgeSplit split = bs_edge_split(F);
    BoundaryReport rep = boundaries(F);
    bool ok = mpz_class(static_cast<long>(F.size())) == r.F_size;
    ok = ok && mpz_of(split.a_edges) == r.a_edges && mpz_of(split.b_edges) == r.b_edges;
    ok = ok && mpz_of(rep.edge_size) == r.a_edges + r.b_edges;
    ok = ok && rep.edge_ratio == r.ratio_F;

    // the standard F_3 for comparison, fully enumerated as well
    FiniteSubset F3 = standard_set_bs(p, 3, element_budget);
    BoundaryReport rep3 = boundaries(F3);
    ok = ok && mpz_class(static_cast<long>(F3.size())) == r.F3_size;
    ok = ok && rep3.edge_ratio == r.ratio_F3;
    r.enumeration_ok = ok;
    if (!ok) throw std::runtime_error("bs_counterexample: formula/enumeration mismatch at p=" + std::to_string(p));
    return r;
}

}  // namespace folner
