#pragma once

#include <cstdint>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace folner {

/// A finitely supported lamp configuration f : Z -> Z/dZ, stored as a trimmed
/// dense window. `word` is empty (the zero configuration) or has nonzero
/// first and last entries; `offset` is the position of word[0].
struct LampConfig {
    int32_t offset = 0;
    std::vector<uint8_t> word;

    bool is_zero() const { return word.empty(); }
    int32_t support_min() const { return offset; }
    int32_t support_max() const { return offset + static_cast<int32_t>(word.size()) - 1; }

    /// Value at position x (0 outside the stored window).
    uint8_t at(int32_t x) const {
        int64_t i = static_cast<int64_t>(x) - offset;
        if (i < 0 || i >= static_cast<int64_t>(word.size())) return 0;
        return word[static_cast<size_t>(i)];
    }

    size_t support_size() const {
        size_t n = 0;
        for (uint8_t v : word)
            if (v) n++;
        return n;
    }

    friend bool operator==(const LampConfig&, const LampConfig&) = default;
    friend std::strong_ordering operator<=>(const LampConfig& a, const LampConfig& b) {
        if (a.offset != b.offset) return a.offset <=> b.offset;
        return a.word <=> b.word;
    }
};

/// Trim leading/trailing zeros so the invariant holds. Idempotent.
LampConfig normalize(LampConfig cfg);

/// An element (pos, config) of Z wr Z/dZ.
struct LampElement {
    int32_t pos = 0;
    LampConfig cfg;

    bool is_identity() const { return pos == 0 && cfg.is_zero(); }

    friend bool operator==(const LampElement&, const LampElement&) = default;
    friend std::strong_ordering operator<=>(const LampElement& a, const LampElement& b) {
        if (a.pos != b.pos) return a.pos <=> b.pos;
        return a.cfg <=> b.cfg;
    }
};

/// Group law (a,f)(a',f') = (a+a', x -> f(x)+f'(x-a) mod d).
/// Throws std::domain_error if a symbol of either factor is >= d.
LampElement lamp_mul(const LampElement& x, const LampElement& y, int d);

/// Inverse of (a,f): (-a, x -> -f(x+a) mod d).
LampElement lamp_inv(const LampElement& x, int d);

/// Left translation by t^k: (k,0)*(a,f) = (a+k, x -> f(x-k)).
LampElement lamp_translate(const LampElement& x, int32_t k);

/// Flip the lamp under the cursor by symbol s (1 <= s < d).
LampElement lamp_flip(const LampElement& x, uint8_t s, int d);

size_t lamp_hash(const LampElement& x);

/// Textual form `pos|e` (zero config) or `pos|offset:digits`, digits base d
/// written from offset upward, alphabet 0-9a-z.
std::string lamp_to_string(const LampElement& x);
LampElement lamp_from_string(const std::string& s, int d);

}  // namespace folner
