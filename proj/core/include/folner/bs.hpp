#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace folner {

/// An element of Z[1/p] in canonical reduced form m * p^(-e):
/// m = 0 implies e = 0; otherwise e = 0 or p does not divide m.
struct PadicRational {
    mpz_class m;
    uint32_t e = 0;
    int32_t p = 2;

    bool is_zero() const { return m == 0; }

    friend bool operator==(const PadicRational& a, const PadicRational& b) {
        return a.p == b.p && a.e == b.e && a.m == b.m;
    }
};

/// Reduce to canonical form (strip common powers of p).
PadicRational padic_normalize(PadicRational v);

/// v + s * p^n for s in {+1,-1} (or any small integer), exact.
PadicRational padic_add_pow(const PadicRational& v, long n, long s);

/// v * p^k, exact (k may be negative).
PadicRational padic_mul_pow(const PadicRational& v, long k);

PadicRational padic_add(const PadicRational& a, const PadicRational& b);
PadicRational padic_neg(const PadicRational& v);

/// Structural total order (e, then m); used for canonical forms.
std::strong_ordering padic_cmp(const PadicRational& a, const PadicRational& b);

/// `m` when e = 0, else `m/p^e`.
std::string padic_to_string(const PadicRational& v);
PadicRational padic_from_string(const std::string& s, int p);

/// An element (level, translation) of BS(1,p) ~ Z x| Z[1/p],
/// acting as x -> p^level * x + translation.
struct BSElement {
    int64_t level = 0;
    PadicRational f;

    bool is_identity() const { return level == 0 && f.is_zero(); }

    friend bool operator==(const BSElement&, const BSElement&) = default;
};

std::strong_ordering bs_cmp(const BSElement& a, const BSElement& b);

/// Group law (n,f)(n',f') = (n+n', f + p^n f').
BSElement bs_mul(const BSElement& x, const BSElement& y);
BSElement bs_inv(const BSElement& x);

/// Left translation by (k, 0): (k+n, p^k f).
BSElement bs_translate(const BSElement& x, int64_t k);

size_t bs_hash(const BSElement& x);

/// `level|translation` with the translation as in padic_to_string.
std::string bs_to_string(const BSElement& x);
BSElement bs_from_string(const std::string& s, int p);

}  // namespace folner
