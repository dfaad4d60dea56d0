#include "folner/boundary.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace folner {

namespace {

struct ElemHasher {
    size_t operator()(const GroupElement& x) const { return element_hash(x); }
};

}  // namespace

std::string rat_str(const mpq_class& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string BoundaryReport::csv_row(const GroupModel& model) const {
    std::ostringstream os;
    os << model.to_string() << "," << set_size << "," << inner_size << "," << outer_size << "," << edge_size << ","
       << rat_str(inner_ratio) << "," << rat_str(outer_ratio) << "," << rat_str(edge_ratio);
    return os.str();
}

BoundaryReport boundaries(const FiniteSubset& F) {
    if (F.empty()) throw std::domain_error("boundaries: empty set");
    std::unordered_set<GroupElement, ElemHasher> in(F.elems.begin(), F.elems.end());
    std::unordered_set<GroupElement, ElemHasher> outer;
    BoundaryReport r;
    r.set_size = static_cast<long long>(F.size());
    for (const auto& x : F.elems) {
        bool is_inner = false;
        for (const auto& y : neighbors(x, F.model)) {
            if (in.count(y)) continue;
            is_inner = true;
            r.edge_size++;
            outer.insert(y);
        }
        if (is_inner) r.inner_size++;
    }
    r.outer_size = static_cast<long long>(outer.size());
    r.inner_ratio = make_ratio(r.inner_size, r.set_size);
    r.outer_ratio = make_ratio(r.outer_size, r.set_size);
    r.edge_ratio = make_ratio(r.edge_size, r.set_size);
    r.inner_ratio.canonicalize();
    r.outer_ratio.canonicalize();
    r.edge_ratio.canonicalize();
    return r;
}

long long inner_boundary_size(const FiniteSubset& F) {
    if (F.empty()) throw std::domain_error("inner_boundary_size: empty set");
    std::unordered_set<GroupElement, ElemHasher> in(F.elems.begin(), F.elems.end());
    long long inner = 0;
    for (const auto& x : F.elems) {
        for (const auto& y : neighbors(x, F.model)) {
            if (!in.count(y)) {
                inner++;
                break;
            }
        }
    }
    return inner;
}

FiniteSubset outer_boundary_set(const FiniteSubset& F) {
    std::unordered_set<GroupElement, ElemHasher> in(F.elems.begin(), F.elems.end());
    FiniteSubset out;
    out.model = F.model;
    std::unordered_set<GroupElement, ElemHasher> seen;
    for (const auto& x : F.elems)
        for (const auto& y : neighbors(x, F.model))
            if (!in.count(y) && seen.insert(y).second) out.elems.push_back(y);
    out.normalize();
    return out;
}

FiniteSubset closure(const FiniteSubset& F) {
    FiniteSubset out = outer_boundary_set(F);
    out.elems.insert(out.elems.end(), F.elems.begin(), F.elems.end());
    out.normalize();
    return out;
}

bool folner_test(const FiniteSubset& F, long long n) {
    if (F.empty()) throw std::domain_error("folner_test: empty set");
    if (n < 1) throw std::domain_error("folner_test: n must be >= 1");
    mpq_class ratio = make_ratio(inner_boundary_size(F), static_cast<long long>(F.size()));
    ratio.canonicalize();
    return ratio <= make_ratio(1, n);
}

}  // namespace folner
