#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "folner/group.hpp"

namespace folner {

/// A finite set of group elements, kept sorted and deduplicated.
struct FiniteSubset {
    GroupModel model;
    std::vector<GroupElement> elems;

    size_t size() const { return elems.size(); }
    bool empty() const { return elems.empty(); }
    bool contains(const GroupElement& x) const;

    /// Sort + dedup; call after bulk insertion.
    void normalize();

    friend bool operator==(const FiniteSubset& a, const FiniteSubset& b) {
        return a.model == b.model && a.elems == b.elems;
    }
    bool less_than(const FiniteSubset& other) const;
};

FiniteSubset make_subset(const GroupModel& model, std::vector<GroupElement> elems);

/// Left multiplication by t^k (resp. (k,0)); a Cayley-graph automorphism,
/// so all boundary sizes are preserved. Mixed models are rejected upstream.
FiniteSubset translate(const FiniteSubset& F, int64_t k);

/// Left multiplication by an arbitrary group element.
FiniteSubset left_mul(const GroupElement& g, const FiniteSubset& F, const GroupModel& model);

/// Canonical representative of F under left translation: the lexicographically
/// least of the sorted element lists of { x^-1 F : x in F }. Every candidate
/// contains the identity, so canonical sets always do.
FiniteSubset canonical_form(const FiniteSubset& F);

/// One serialized element per line, preceded by a header line `model <spec>`.
void write_subset(std::ostream& os, const FiniteSubset& F);
FiniteSubset read_subset(std::istream& is);

}  // namespace folner
