#pragma once

#include <cassert>
#include <cstdint>

namespace ffmzv {

// Arithmetic in F_q for q in {2, 3, 4}.  Elements are stored as small
// integers; for q = 4 the residues are 0, 1, 2 = w, 3 = w+1 with
// w^2 + w + 1 = 0.
struct Gf {
    uint8_t q = 2;

    constexpr bool operator==(const Gf&) const = default;

    uint8_t p() const { return q == 4 ? 2 : q; }

    uint8_t add(uint8_t a, uint8_t b) const {
        switch (q) {
            case 3: { uint8_t s = uint8_t(a + b); return s >= 3 ? uint8_t(s - 3) : s; }
            default: return a ^ b;  // characteristic 2: addition is xor
        }
    }
    uint8_t neg(uint8_t a) const { return q == 3 ? uint8_t(a ? 3 - a : 0) : a; }
    uint8_t sub(uint8_t a, uint8_t b) const { return add(a, neg(b)); }
    uint8_t mul(uint8_t a, uint8_t b) const {
        switch (q) {
            case 2: return a & b;
            case 3: return uint8_t((a * b) % 3);
            default: {
                if (!a || !b) return 0;
                // the multiplicative group of F_4 is cyclic on {1, w, w+1}
                static constexpr uint8_t t[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
                return t[a - 1][b - 1];
            }
        }
    }
    uint8_t inv(uint8_t a) const {
        assert(a != 0);
        switch (q) {
            case 2: return 1;
            case 3: return a;
            default: return a == 1 ? 1 : (a == 2 ? 3 : 2);
        }
    }
    uint8_t div(uint8_t a, uint8_t b) const { return mul(a, inv(b)); }
    // a -> a^p, the Frobenius of the prime field
    uint8_t frob(uint8_t a) const { return q == 4 ? mul(a, a) : a; }
    uint8_t pow(uint8_t a, long e) const {
        if (a == 0) return 0;
        // the multiplicative group has order q-1
        long r = e % (q - 1);
        if (r < 0) r += q - 1;
        uint8_t acc = 1;
        for (long i = 0; i < r; ++i) acc = mul(acc, a);
        return acc;
    }
};

}  // namespace ffmzv
