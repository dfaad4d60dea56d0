#include "folner/lamp.hpp"

#include <algorithm>
#include <charconv>

namespace folner {

LampConfig normalize(LampConfig cfg) {
    size_t lo = 0, hi = cfg.word.size();
    while (lo < hi && cfg.word[lo] == 0) lo++;
    while (hi > lo && cfg.word[hi - 1] == 0) hi--;
    if (lo == hi) return LampConfig{};
    LampConfig out;
    out.offset = cfg.offset + static_cast<int32_t>(lo);
    out.word.assign(cfg.word.begin() + static_cast<long>(lo), cfg.word.begin() + static_cast<long>(hi));
    return out;
}

static void check_symbols(const LampConfig& c, int d) {
    for (uint8_t v : c.word)
        if (v >= d) throw std::domain_error("lamp symbol out of range for alphabet size d");
}

LampElement lamp_mul(const LampElement& x, const LampElement& y, int d) {
    if (d < 2) throw std::domain_error("alphabet size d must be >= 2");
    check_symbols(x.cfg, d);
    check_symbols(y.cfg, d);
    LampElement out;
    out.pos = x.pos + y.pos;
    if (y.cfg.is_zero()) {
        out.cfg = x.cfg;
        return out;
    }
    // window covering both supports; y's support is shifted by x.pos
    int32_t ylo = y.cfg.support_min() + x.pos;
    int32_t yhi = y.cfg.support_max() + x.pos;
    int32_t lo = ylo, hi = yhi;
    if (!x.cfg.is_zero()) {
        lo = std::min(lo, x.cfg.support_min());
        hi = std::max(hi, x.cfg.support_max());
    }
    LampConfig c;
    c.offset = lo;
    c.word.assign(static_cast<size_t>(hi - lo + 1), 0);
    for (int32_t p = lo; p <= hi; p++) {
        int v = x.cfg.at(p) + y.cfg.at(p - x.pos);
        c.word[static_cast<size_t>(p - lo)] = static_cast<uint8_t>(v % d);
    }
    out.cfg = normalize(std::move(c));
    return out;
}

LampElement lamp_inv(const LampElement& x, int d) {
    check_symbols(x.cfg, d);
    LampElement out;
    out.pos = -x.pos;
    if (x.cfg.is_zero()) return out;
    LampConfig c;
    c.offset = x.cfg.offset - x.pos;
    c.word.resize(x.cfg.word.size());
    for (size_t i = 0; i < c.word.size(); i++)
        c.word[i] = static_cast<uint8_t>((d - x.cfg.word[i]) % d);
    out.cfg = normalize(std::move(c));
    return out;
}

LampElement lamp_translate(const LampElement& x, int32_t k) {
    LampElement out = x;
    out.pos += k;
    if (!out.cfg.is_zero()) out.cfg.offset += k;
    return out;
}

LampElement lamp_flip(const LampElement& x, uint8_t s, int d) {
    LampElement out = x;
    LampConfig& c = out.cfg;
    if (c.is_zero()) {
        c.offset = x.pos;
        c.word.assign(1, 0);
    } else if (x.pos < c.support_min()) {
        std::vector<uint8_t> w(static_cast<size_t>(c.support_max() - x.pos + 1), 0);
        std::copy(c.word.begin(), c.word.end(), w.begin() + (c.support_min() - x.pos));
        c.word = std::move(w);
        c.offset = x.pos;
    } else if (x.pos > c.support_max()) {
        c.word.resize(static_cast<size_t>(x.pos - c.support_min() + 1), 0);
    }
    size_t i = static_cast<size_t>(x.pos - c.offset);
    c.word[i] = static_cast<uint8_t>((c.word[i] + s) % d);
    out.cfg = normalize(std::move(c));
    return out;
}

size_t lamp_hash(const LampElement& x) {
    uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<uint32_t>(x.pos);
    h *= 0xbf58476d1ce4e5b9ull;
    h ^= static_cast<uint32_t>(x.cfg.offset) + (h << 6) + (h >> 2);
    for (uint8_t v : x.cfg.word) {
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h *= 0x94d049bb133111ebull;
    }
    return static_cast<size_t>(h ^ (h >> 31));
}

static char digit_char(uint8_t v) { return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + v - 10); }

static int digit_val(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    return -1;
}

std::string lamp_to_string(const LampElement& x) {
    std::string s = std::to_string(x.pos);
    s += '|';
    if (x.cfg.is_zero()) {
        s += 'e';
        return s;
    }
    s += std::to_string(x.cfg.offset);
    s += ':';
    for (uint8_t v : x.cfg.word) s += digit_char(v);
    return s;
}

LampElement lamp_from_string(const std::string& s, int d) {
    auto bar = s.find('|');
    if (bar == std::string::npos) throw std::invalid_argument("lamp element: missing '|' in \"" + s + "\"");
    LampElement out;
    {
        const char* b = s.data();
        auto [p, ec] = std::from_chars(b, b + bar, out.pos);
        if (ec != std::errc{} || p != b + bar) throw std::invalid_argument("lamp element: bad position in \"" + s + "\"");
    }
    std::string rest = s.substr(bar + 1);
    if (rest == "e" || rest.empty()) return out;
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("lamp element: missing ':' in \"" + s + "\"");
    {
        const char* b = rest.data();
        auto [p, ec] = std::from_chars(b, b + colon, out.cfg.offset);
        if (ec != std::errc{} || p != b + colon) throw std::invalid_argument("lamp element: bad offset in \"" + s + "\"");
    }
    for (size_t i = colon + 1; i < rest.size(); i++) {
        int v = digit_val(rest[i]);
        if (v < 0 || v >= d) throw std::invalid_argument("lamp element: bad digit in \"" + s + "\"");
        out.cfg.word.push_back(static_cast<uint8_t>(v));
    }
    if (out.cfg.word.empty()) throw std::invalid_argument("lamp element: empty digit word in \"" + s + "\"");
    LampElement norm = out;
    norm.cfg = normalize(out.cfg);
    if (norm.cfg != out.cfg) throw std::invalid_argument("lamp element: config not normalized in \"" + s + "\"");
    return out;
}

}  // namespace folner
