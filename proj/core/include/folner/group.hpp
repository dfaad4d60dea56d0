#pragma once

#include <compare>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "folner/bs.hpp"
#include "folner/lamp.hpp"

namespace folner {

/// Which Cayley graph we work in:
///  - Lamplighter(d):    Z wr Z/dZ with S_D = {t} u {delta_i : i != 0}
///  - LamplighterSws:    Z wr Z/2Z with {t, d, td, dt, dtd} (switch-walk-switch)
///  - BaumslagSolitar(p): BS(1,p) with {a, b}
struct GroupModel {
    enum class Kind { Lamplighter, LamplighterSws, BaumslagSolitar };
    Kind kind = Kind::Lamplighter;
    int param = 2;  // d for lamplighter models (sws fixes d = 2), p for BS

    int d() const { return kind == Kind::LamplighterSws ? 2 : param; }
    int p() const { return param; }
    bool is_lamp() const { return kind != Kind::BaumslagSolitar; }

    /// Number of generators in S (without inverses): d for S_D, 5 for sws, 2 for BS.
    int generator_count() const;

    /// Degree of the (simple, undirected) Cayley graph at every vertex.
    int degree() const;

    std::string to_string() const;
    /// Parse "lamp:d", "lamp-sws" or "bs:p".
    static GroupModel parse(const std::string& spec);

    friend bool operator==(const GroupModel&, const GroupModel&) = default;
};

using GroupElement = std::variant<LampElement, BSElement>;

GroupElement identity_element(const GroupModel& model);
std::strong_ordering element_cmp(const GroupElement& a, const GroupElement& b);
size_t element_hash(const GroupElement& x);
std::string element_to_string(const GroupElement& x);
GroupElement element_from_string(const std::string& s, const GroupModel& model);

GroupElement element_mul(const GroupElement& x, const GroupElement& y, const GroupModel& model);
GroupElement element_inv(const GroupElement& x, const GroupModel& model);
/// Left multiplication by t^k (lamplighter) resp. (k, 0) (BS).
GroupElement element_translate(const GroupElement& x, int64_t k);

/// The generating set S (without inverses) as group elements.
std::vector<GroupElement> generators(const GroupModel& model);

/// Deduplicated Cayley neighbors {x s : s in S u S^-1}.
/// Lamplighter(d): exactly d+1 neighbors. Sws: 9. BS: 4.
std::vector<LampElement> lamp_neighbors(const LampElement& x, const GroupModel& model);
std::vector<BSElement> bs_neighbors(const BSElement& x, int p);
std::vector<GroupElement> neighbors(const GroupElement& x, const GroupModel& model);

}  // namespace folner
