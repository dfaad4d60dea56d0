#include "folner/bs.hpp"

#include <charconv>

namespace folner {

PadicRational padic_normalize(PadicRational v) {
    if (v.m == 0) {
        v.e = 0;
        return v;
    }
    while (v.e > 0 && mpz_divisible_ui_p(v.m.get_mpz_t(), static_cast<unsigned long>(v.p))) {
        mpz_divexact_ui(v.m.get_mpz_t(), v.m.get_mpz_t(), static_cast<unsigned long>(v.p));
        v.e--;
    }
    return v;
}

static mpz_class pow_p(int32_t p, unsigned long k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), k);
    return r;
}

PadicRational padic_add_pow(const PadicRational& v, long n, long s) {
    PadicRational out = v;
    long ne = n + static_cast<long>(v.e);
    if (ne >= 0) {
        out.m += s * pow_p(v.p, static_cast<unsigned long>(ne));
    } else {
        // rescale to denominator p^(-n)
        out.m = v.m * pow_p(v.p, static_cast<unsigned long>(-ne)) + s;
        out.e = static_cast<uint32_t>(-n);
    }
    return padic_normalize(std::move(out));
}

PadicRational padic_mul_pow(const PadicRational& v, long k) {
    PadicRational out = v;
    if (v.m == 0) return out;
    if (k >= 0) {
        long red = std::min<long>(k, v.e);
        out.e = static_cast<uint32_t>(v.e - red);
        if (k > red) out.m = v.m * pow_p(v.p, static_cast<unsigned long>(k - red));
    } else {
        out.e = static_cast<uint32_t>(v.e + static_cast<unsigned long>(-k));
        out = padic_normalize(std::move(out));
    }
    return out;
}

PadicRational padic_add(const PadicRational& a, const PadicRational& b) {
    if (a.p != b.p) throw std::domain_error("padic add: mismatched base");
    PadicRational out;
    out.p = a.p;
    uint32_t e = std::max(a.e, b.e);
    out.e = e;
    out.m = a.m * pow_p(a.p, e - a.e) + b.m * pow_p(a.p, e - b.e);
    return padic_normalize(std::move(out));
}

PadicRational padic_neg(const PadicRational& v) {
    PadicRational out = v;
    out.m = -v.m;
    return out;
}

std::strong_ordering padic_cmp(const PadicRational& a, const PadicRational& b) {
    if (a.e != b.e) return a.e <=> b.e;
    int c = mpz_cmp(a.m.get_mpz_t(), b.m.get_mpz_t());
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string padic_to_string(const PadicRational& v) {
    std::string s = v.m.get_str();
    if (v.e != 0) {
        s += '/';
        s += std::to_string(v.p);
        s += '^';
        s += std::to_string(v.e);
    }
    return s;
}

PadicRational padic_from_string(const std::string& s, int p) {
    PadicRational out;
    out.p = p;
    auto slash = s.find('/');
    std::string mant = s.substr(0, slash);
    if (mant.empty() || mpz_set_str(out.m.get_mpz_t(), mant.c_str(), 10) != 0)
        throw std::invalid_argument("padic: bad mantissa in \"" + s + "\"");
    if (slash != std::string::npos) {
        auto caret = s.find('^', slash);
        if (caret == std::string::npos) throw std::invalid_argument("padic: missing '^' in \"" + s + "\"");
        int base = 0;
        const char* b = s.data();
        auto [q, ec] = std::from_chars(b + slash + 1, b + caret, base);
        if (ec != std::errc{} || q != b + caret || base != p)
            throw std::invalid_argument("padic: base mismatch in \"" + s + "\"");
        auto [q2, ec2] = std::from_chars(b + caret + 1, b + s.size(), out.e);
        if (ec2 != std::errc{} || q2 != b + s.size())
            throw std::invalid_argument("padic: bad exponent in \"" + s + "\"");
    }
    PadicRational norm = padic_normalize(out);
    if (!(norm == out)) throw std::invalid_argument("padic: not in reduced form: \"" + s + "\"");
    return out;
}

std::strong_ordering bs_cmp(const BSElement& a, const BSElement& b) {
    if (a.level != b.level) return a.level <=> b.level;
    return padic_cmp(a.f, b.f);
}

BSElement bs_mul(const BSElement& x, const BSElement& y) {
    if (x.f.p != y.f.p) throw std::domain_error("bs mul: mismatched base");
    BSElement out;
    out.level = x.level + y.level;
    out.f = padic_add(x.f, padic_mul_pow(y.f, static_cast<long>(x.level)));
    return out;
}

BSElement bs_inv(const BSElement& x) {
    BSElement out;
    out.level = -x.level;
    out.f = padic_mul_pow(padic_neg(x.f), static_cast<long>(-x.level));
    return out;
}

BSElement bs_translate(const BSElement& x, int64_t k) {
    BSElement out;
    out.level = x.level + k;
    out.f = padic_mul_pow(x.f, static_cast<long>(k));
    return out;
}

size_t bs_hash(const BSElement& x) {
    uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<uint64_t>(x.level);
    h *= 0xbf58476d1ce4e5b9ull;
    h ^= x.f.e + (h << 6) + (h >> 2);
    size_t limbs = mpz_size(x.f.m.get_mpz_t());
    h ^= limbs * 0x94d049bb133111ebull;
    for (size_t i = 0; i < limbs; i++) {
        h ^= mpz_getlimbn(x.f.m.get_mpz_t(), static_cast<mp_size_t>(i)) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    if (mpz_sgn(x.f.m.get_mpz_t()) < 0) h = ~h;
    return static_cast<size_t>(h ^ (h >> 31));
}

std::string bs_to_string(const BSElement& x) {
    return std::to_string(x.level) + "|" + padic_to_string(x.f);
}

BSElement bs_from_string(const std::string& s, int p) {
    auto bar = s.find('|');
    if (bar == std::string::npos) throw std::invalid_argument("bs element: missing '|' in \"" + s + "\"");
    BSElement out;
    const char* b = s.data();
    auto [q, ec] = std::from_chars(b, b + bar, out.level);
    if (ec != std::errc{} || q != b + bar) throw std::invalid_argument("bs element: bad level in \"" + s + "\"");
    out.f = padic_from_string(s.substr(bar + 1), p);
    return out;
}

}  // namespace folner
