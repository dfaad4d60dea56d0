#include "folner/random_sets.hpp"

#include "folner/boundary.hpp"

namespace folner {

FiniteSubset random_lamp_set(int d, int max_size, int window, Rng& rng) {
    GroupModel m;
    m.kind = GroupModel::Kind::Lamplighter;
    m.param = d;
    FiniteSubset F;
    F.model = m;
    int size = 1 + static_cast<int>(rand_below(rng, static_cast<uint64_t>(max_size)));
    int span = 2 * window + 1;
    for (int i = 0; i < size; i++) {
        LampElement e;
        e.pos = static_cast<int32_t>(rand_below(rng, static_cast<uint64_t>(span))) - window;
        LampConfig c;
        c.offset = -window;
        c.word.resize(static_cast<size_t>(span));
        // geometric-ish support density: each cell lit with probability 1/4
        for (auto& v : c.word)
            if (rand_below(rng, 4) == 0) v = static_cast<uint8_t>(1 + rand_below(rng, static_cast<uint64_t>(d - 1)));
        e.cfg = normalize(std::move(c));
        F.elems.emplace_back(std::move(e));
    }
    F.normalize();
    return F;
}

FiniteSubset random_bs_set(int p, int max_size, int level_window, int mant_window, Rng& rng) {
    GroupModel m;
    m.kind = GroupModel::Kind::BaumslagSolitar;
    m.param = p;
    FiniteSubset F;
    F.model = m;
    int size = 1 + static_cast<int>(rand_below(rng, static_cast<uint64_t>(max_size)));
    for (int i = 0; i < size; i++) {
        BSElement e;
        e.level = static_cast<int64_t>(rand_below(rng, static_cast<uint64_t>(2 * level_window + 1))) - level_window;
        e.f.p = p;
        e.f.m = static_cast<long>(rand_below(rng, static_cast<uint64_t>(2 * mant_window + 1))) - mant_window;
        e.f.e = static_cast<uint32_t>(rand_below(rng, static_cast<uint64_t>(level_window + 1)));
        e.f = padic_normalize(e.f);
        F.elems.emplace_back(std::move(e));
    }
    F.normalize();
    return F;
}

FiniteSubset random_connected_set(const GroupModel& model, int size, Rng& rng) {
    FiniteSubset F;
    F.model = model;
    F.elems.push_back(identity_element(model));
    while (static_cast<int>(F.elems.size()) < size) {
        const GroupElement& base = F.elems[rand_below(rng, F.elems.size())];
        auto nb = neighbors(base, model);
        const GroupElement& pick = nb[rand_below(rng, nb.size())];
        bool found = false;
        for (const auto& x : F.elems)
            if (x == pick) {
                found = true;
                break;
            }
        if (!found) F.elems.push_back(pick);
    }
    F.normalize();
    return F;
}

FiniteSubset random_bs_set_ratio_le1(Rng& rng) {
    GroupModel m;
    m.kind = GroupModel::Kind::BaumslagSolitar;
    m.param = 2;
    for (;;) {
        // a level-box: levels [0,h), translations j*step with j in [0,c)
        int h = 4 + static_cast<int>(rand_below(rng, 2));                       // 4 or 5
        long cmin = h == 4 ? 15 : 21;                                           // smallest c with box ratio <= 1
        long c = cmin + static_cast<long>(rand_below(rng, 26));
        FiniteSubset F;
        F.model = m;
        for (int k = 0; k < h; k++)
            for (long j = 0; j < c; j++) {
                BSElement e;
                e.level = k;
                e.f.p = 2;
                e.f.m = j;
                F.elems.emplace_back(std::move(e));
            }
        F.normalize();
        // random dyadic translation, then a few random element swaps
        F = translate(F, static_cast<int64_t>(rand_below(rng, 5)) - 2);
        int perturb = static_cast<int>(rand_below(rng, 4));
        for (int i = 0; i < perturb; i++) {
            const GroupElement& base = F.elems[rand_below(rng, F.elems.size())];
            auto nb = neighbors(base, m);
            const GroupElement& pick = nb[rand_below(rng, nb.size())];
            if (!F.contains(pick)) F.elems.push_back(pick);
            F.normalize();
        }
        for (int i = 0; i < perturb && F.elems.size() > 2; i++)
            F.elems.erase(F.elems.begin() + static_cast<long>(rand_below(rng, F.elems.size())));
        if (boundaries(F).edge_ratio <= 1) return F;
    }
}

}  // namespace folner
