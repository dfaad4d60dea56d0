#include "folner/subset.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace folner {

static bool elem_less(const GroupElement& a, const GroupElement& b) {
    return element_cmp(a, b) == std::strong_ordering::less;
}

bool FiniteSubset::contains(const GroupElement& x) const {
    auto it = std::lower_bound(elems.begin(), elems.end(), x, elem_less);
    return it != elems.end() && *it == x;
}

void FiniteSubset::normalize() {
    std::sort(elems.begin(), elems.end(), elem_less);
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
}

bool FiniteSubset::less_than(const FiniteSubset& other) const {
    return std::lexicographical_compare(elems.begin(), elems.end(), other.elems.begin(), other.elems.end(), elem_less);
}

FiniteSubset make_subset(const GroupModel& model, std::vector<GroupElement> elems) {
    FiniteSubset F{model, std::move(elems)};
    F.normalize();
    return F;
}

FiniteSubset translate(const FiniteSubset& F, int64_t k) {
    FiniteSubset out;
    out.model = F.model;
    out.elems.reserve(F.elems.size());
    for (const auto& x : F.elems) out.elems.push_back(element_translate(x, k));
    out.normalize();
    return out;
}

FiniteSubset left_mul(const GroupElement& g, const FiniteSubset& F, const GroupModel& model) {
    FiniteSubset out;
    out.model = F.model;
    out.elems.reserve(F.elems.size());
    for (const auto& x : F.elems) out.elems.push_back(element_mul(g, x, model));
    out.normalize();
    return out;
}

FiniteSubset canonical_form(const FiniteSubset& F) {
    if (F.empty()) return F;
    FiniteSubset best;
    bool have = false;
    for (const auto& x : F.elems) {
        GroupElement xi = element_inv(x, F.model);
        FiniteSubset cand = left_mul(xi, F, F.model);
        if (!have || cand.less_than(best)) {
            best = std::move(cand);
            have = true;
        }
    }
    return best;
}

void write_subset(std::ostream& os, const FiniteSubset& F) {
    os << "model " << F.model.to_string() << "\n";
    for (const auto& x : F.elems) os << element_to_string(x) << "\n";
}

FiniteSubset read_subset(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("subset: empty input");
    if (line.rfind("model ", 0) != 0) throw std::invalid_argument("subset: first line must be `model <spec>`");
    FiniteSubset F;
    F.model = GroupModel::parse(line.substr(6));
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        F.elems.push_back(element_from_string(line, F.model));
    }
    F.normalize();
    return F;
}

}  // namespace folner
