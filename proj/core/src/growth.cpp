#include "folner/growth.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "folner/standard_sets.hpp"

namespace folner {

namespace {

struct ElemHasher {
    size_t operator()(const GroupElement& x) const { return element_hash(x); }
};

}  // namespace

GrowthTable ball_volume(const GroupModel& model, int radius, long long state_budget) {
    GrowthTable t;
    t.model = model;
    std::unordered_set<GroupElement, ElemHasher> seen;
    std::vector<GroupElement> frontier{identity_element(model)};
    seen.insert(frontier.front());
    t.volumes.push_back(1);
    for (int r = 1; r <= radius; r++) {
        std::vector<GroupElement> next;
        for (const auto& x : frontier)
            for (auto& y : neighbors(x, model))
                if (seen.insert(y).second) {
                    next.push_back(std::move(y));
                    if (static_cast<long long>(seen.size()) > state_budget) {
                        t.complete = false;
                        return t;
                    }
                }
        frontier = std::move(next);
        t.volumes.push_back(static_cast<long>(seen.size()));
    }
    return t;
}

int phi(const GrowthTable& table, const mpz_class& lambda) {
    for (size_t r = 0; r < table.volumes.size(); r++)
        if (table.volumes[r] > lambda) return static_cast<int>(r);
    throw std::runtime_error("phi: growth table too short for lambda=" + lambda.get_str() +
                             " (max V=" + table.volumes.back().get_str() + "); extend the BFS radius");
}

ReducedWordCounts reduced_word_count(int d, int n) {
    if (d < 2 || n < 0) throw std::domain_error("reduced_word_count: d >= 2, n >= 0");
    ReducedWordCounts rc;
    rc.exact.resize(static_cast<size_t>(n) + 1);
    rc.exact[0] = 1;
    if (n >= 1) rc.exact[1] = d;
    for (int k = 2; k <= n; k++)
        rc.exact[static_cast<size_t>(k)] = rc.exact[static_cast<size_t>(k - 1)] + (d - 1) * rc.exact[static_cast<size_t>(k - 2)];
    rc.cumulative.resize(rc.exact.size());
    mpz_class s = 0;
    for (size_t k = 0; k < rc.exact.size(); k++) {
        s += rc.exact[k];
        rc.cumulative[k] = s;
    }
    return rc;
}

ExactGrowthRate growth_rate_exact(int d) {
    if (d < 2) throw std::domain_error("growth_rate_exact: d >= 2");
    ExactGrowthRate r;
    r.radicand = 4L * d - 3;
    r.value = (1.0 + std::sqrt(static_cast<double>(r.radicand))) / 2.0;
    long s = std::lround(std::sqrt(static_cast<double>(r.radicand)));
    if (s * s == r.radicand) {
        r.is_integer = (1 + s) % 2 == 0;
        if (r.is_integer) r.integer_value = (1 + s) / 2;
    }
    r.description = "(1+sqrt(" + std::to_string(r.radicand) + "))/2";
    return r;
}

double ln_mpz(const mpz_class& v) {
    if (v <= 0) throw std::domain_error("ln_mpz: positive values only");
    long exp = 0;
    double m = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::log(m) + static_cast<double>(exp) * std::log(2.0);
}

CscReport csc_constant(int d) {
    CscReport rep;
    rep.d = d;
    rep.rate = growth_rate_exact(d);
    rep.constant = 2.0 * std::log(static_cast<double>(d)) / std::log(rep.rate.value);
    rep.fol_exponent_target = 2.0 * std::log(static_cast<double>(d));
    const long long probe = 4096;
    rep.fol_exponent = ln_mpz(fol_value(d, probe)) / static_cast<double>(probe);
    rep.exponent_converges = std::abs(rep.fol_exponent - rep.fol_exponent_target) < 0.02;
    return rep;
}

CscInstanceReport csc_instance_check(const FiniteSubset& F, const GrowthTable& table) {
    if (F.model != table.model) throw std::domain_error("csc_instance_check: model mismatch");
    CscInstanceReport r;
    r.F_size = static_cast<long long>(F.size());
    r.inner_ratio = make_ratio(inner_boundary_size(F), r.F_size);
    r.inner_ratio.canonicalize();
    int S = F.model.generator_count();
    int phi2 = phi(table, mpz_of(2 * r.F_size));
    r.bound_original = make_ratio(1, 8LL * S * phi2);
    r.bound_original.canonicalize();
    r.bound_sharp = make_ratio(1, 2LL * phi2);
    r.bound_sharp.canonicalize();
    r.original_ok = r.inner_ratio >= r.bound_original;
    r.sharp_ok = r.inner_ratio >= r.bound_sharp;
    r.lambda_ok = true;
    for (int lambda : {2, 4, 8}) {
        int ph = phi(table, mpz_of(static_cast<long long>(lambda) * r.F_size));
        mpq_class b = make_ratio(lambda - 1, static_cast<long long>(lambda) * ph);
        b.canonicalize();
        if (r.inner_ratio < b) r.lambda_ok = false;
        r.bounds_lambda.emplace_back(lambda, b);
    }
    return r;
}

SwsReport sws_checks(int n, long long state_budget) {
    if (n < 1) throw std::domain_error("sws_checks: n >= 1");
    SwsReport rep;
    rep.n = n;
    FiniteSubset F = sws_standard_set(n);
    BoundaryReport b = boundaries(F);
    rep.outer_ratio = b.outer_ratio;
    rep.ratio_ok = b.outer_ratio == make_ratio(2, n);
    GroupModel m;
    m.kind = GroupModel::Kind::LamplighterSws;
    rep.table = ball_volume(m, n, state_budget);
    rep.sandwich_ok = rep.table.complete;
    for (int r = 1; r <= rep.table.radius() && rep.sandwich_ok; r++) {
        mpz_class lo = mpz_class(1) << r;
        mpz_class hi = mpz_class(8) * r * r * r * (mpz_class(1) << r);
        const mpz_class& V = rep.table.volumes[static_cast<size_t>(r)];
        if (V < lo || V > hi) rep.sandwich_ok = false;
    }
    return rep;
}

}  // namespace folner
