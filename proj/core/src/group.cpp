#include "folner/group.hpp"

#include <algorithm>
#include <charconv>

namespace folner {

int GroupModel::generator_count() const {
    switch (kind) {
        case Kind::Lamplighter: return param;  // t plus d-1 lamp switches
        case Kind::LamplighterSws: return 5;
        case Kind::BaumslagSolitar: return 2;
    }
    return 0;
}

int GroupModel::degree() const {
    switch (kind) {
        case Kind::Lamplighter: return param + 1;
        case Kind::LamplighterSws: return 9;
        case Kind::BaumslagSolitar: return 4;
    }
    return 0;
}

std::string GroupModel::to_string() const {
    switch (kind) {
        case Kind::Lamplighter: return "lamp:" + std::to_string(param);
        case Kind::LamplighterSws: return "lamp-sws";
        case Kind::BaumslagSolitar: return "bs:" + std::to_string(param);
    }
    return "?";
}

GroupModel GroupModel::parse(const std::string& spec) {
    GroupModel m;
    if (spec == "lamp-sws") {
        m.kind = Kind::LamplighterSws;
        m.param = 2;
        return m;
    }
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("model spec: expected lamp:d, lamp-sws or bs:p, got \"" + spec + "\"");
    std::string head = spec.substr(0, colon);
    int v = 0;
    const char* b = spec.data();
    auto [q, ec] = std::from_chars(b + colon + 1, b + spec.size(), v);
    if (ec != std::errc{} || q != b + spec.size() || v < 2)
        throw std::invalid_argument("model spec: bad parameter in \"" + spec + "\"");
    if (head == "lamp") {
        m.kind = Kind::Lamplighter;
    } else if (head == "bs") {
        m.kind = Kind::BaumslagSolitar;
    } else {
        throw std::invalid_argument("model spec: unknown model \"" + head + "\"");
    }
    m.param = v;
    return m;
}

GroupElement identity_element(const GroupModel& model) {
    if (model.is_lamp()) return LampElement{};
    BSElement e;
    e.f.p = model.p();
    return e;
}

std::strong_ordering element_cmp(const GroupElement& a, const GroupElement& b) {
    if (a.index() != b.index()) return a.index() <=> b.index();
    if (std::holds_alternative<LampElement>(a))
        return std::get<LampElement>(a) <=> std::get<LampElement>(b);
    return bs_cmp(std::get<BSElement>(a), std::get<BSElement>(b));
}

size_t element_hash(const GroupElement& x) {
    if (std::holds_alternative<LampElement>(x)) return lamp_hash(std::get<LampElement>(x));
    return bs_hash(std::get<BSElement>(x));
}

std::string element_to_string(const GroupElement& x) {
    if (std::holds_alternative<LampElement>(x)) return lamp_to_string(std::get<LampElement>(x));
    return bs_to_string(std::get<BSElement>(x));
}

GroupElement element_from_string(const std::string& s, const GroupModel& model) {
    if (model.is_lamp()) return lamp_from_string(s, model.d());
    return bs_from_string(s, model.p());
}

GroupElement element_mul(const GroupElement& x, const GroupElement& y, const GroupModel& model) {
    if (model.is_lamp()) return lamp_mul(std::get<LampElement>(x), std::get<LampElement>(y), model.d());
    return bs_mul(std::get<BSElement>(x), std::get<BSElement>(y));
}

GroupElement element_inv(const GroupElement& x, const GroupModel& model) {
    if (model.is_lamp()) return lamp_inv(std::get<LampElement>(x), model.d());
    return bs_inv(std::get<BSElement>(x));
}

GroupElement element_translate(const GroupElement& x, int64_t k) {
    if (std::holds_alternative<LampElement>(x))
        return lamp_translate(std::get<LampElement>(x), static_cast<int32_t>(k));
    return bs_translate(std::get<BSElement>(x), k);
}

std::vector<GroupElement> generators(const GroupModel& model) {
    std::vector<GroupElement> out;
    if (model.kind == GroupModel::Kind::Lamplighter) {
        LampElement t;
        t.pos = 1;
        out.emplace_back(t);
        for (int s = 1; s < model.d(); s++) {
            LampElement del;
            del.cfg.offset = 0;
            del.cfg.word.assign(1, static_cast<uint8_t>(s));
            out.emplace_back(del);
        }
    } else if (model.kind == GroupModel::Kind::LamplighterSws) {
        LampElement t;
        t.pos = 1;
        LampElement del;
        del.cfg.word.assign(1, 1);
        out.emplace_back(t);
        out.emplace_back(del);
        out.emplace_back(lamp_mul(t, del, 2));
        out.emplace_back(lamp_mul(del, t, 2));
        out.emplace_back(lamp_mul(lamp_mul(del, t, 2), del, 2));
    } else {
        BSElement a;
        a.level = -1;
        a.f.p = model.p();
        BSElement b;
        b.f.p = model.p();
        b.f.m = 1;
        out.emplace_back(a);
        out.emplace_back(b);
    }
    return out;
}

std::vector<LampElement> lamp_neighbors(const LampElement& x, const GroupModel& model) {
    if (!model.is_lamp()) throw std::domain_error("lamp_neighbors: not a lamplighter model");
    std::vector<LampElement> out;
    if (model.kind == GroupModel::Kind::Lamplighter) {
        out.reserve(static_cast<size_t>(model.d()) + 1);
        out.push_back(lamp_translate(x, 1));
        out.push_back(lamp_translate(x, -1));
        for (int s = 1; s < model.d(); s++) out.push_back(lamp_flip(x, static_cast<uint8_t>(s), model.d()));
        return out;
    }
    // sws: products with S u S^-1, deduplicated
    static const std::vector<LampElement> sws_dirs = [] {
        GroupModel m;
        m.kind = GroupModel::Kind::LamplighterSws;
        std::vector<LampElement> dirs;
        for (const auto& g : generators(m)) {
            const auto& ge = std::get<LampElement>(g);
            for (const auto& h : {ge, lamp_inv(ge, 2)})
                if (std::find(dirs.begin(), dirs.end(), h) == dirs.end()) dirs.push_back(h);
        }
        std::sort(dirs.begin(), dirs.end());
        return dirs;
    }();
    out.reserve(sws_dirs.size());
    for (const auto& g : sws_dirs) out.push_back(lamp_mul(x, g, 2));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<BSElement> bs_neighbors(const BSElement& x, int p) {
    std::vector<BSElement> out;
    out.reserve(4);
    BSElement down = x;
    down.level = x.level - 1;
    BSElement up = x;
    up.level = x.level + 1;
    out.push_back(std::move(down));
    out.push_back(std::move(up));
    BSElement plus = x;
    plus.f = padic_add_pow(x.f, static_cast<long>(x.level), +1);
    BSElement minus = x;
    minus.f = padic_add_pow(x.f, static_cast<long>(x.level), -1);
    out.push_back(std::move(plus));
    out.push_back(std::move(minus));
    return out;
}

std::vector<GroupElement> neighbors(const GroupElement& x, const GroupModel& model) {
    std::vector<GroupElement> out;
    if (model.is_lamp()) {
        for (auto& y : lamp_neighbors(std::get<LampElement>(x), model)) out.emplace_back(std::move(y));
    } else {
        for (auto& y : bs_neighbors(std::get<BSElement>(x), model.p())) out.emplace_back(std::move(y));
    }
    return out;
}

}  // namespace folner
