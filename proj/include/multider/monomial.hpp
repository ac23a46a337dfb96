#pragma once

#include <cstdint>
#include <vector>

#include "multider/vars.hpp"

namespace multider {

/// A monomial exponent vector packed into one 128-bit key: eight 16-bit
/// fields, one per variable slot, each storing exponent + kExpBias. The
/// first variable occupies the most significant field, so unsigned integer
/// comparison of keys is exactly the lexicographic order on exponent
/// vectors under the global variable order.
using MonoKey = unsigned __int128;

namespace mono {

constexpr int kFieldBits = 16;
constexpr long kExpBias = 1 << 15;
constexpr long kMaxAbsExp = 16000;

inline int shift_of(int var) { return (Vars::kMaxVars - 1 - var) * kFieldBits; }

inline long exponent(MonoKey k, int var) {
    return static_cast<long>((k >> shift_of(var)) & 0xffffu) - kExpBias;
}

/// Key of the constant monomial (all exponents zero).
inline MonoKey one() {
    MonoKey k = 0;
    for (int v = 0; v < Vars::kMaxVars; ++v)
        k |= static_cast<MonoKey>(kExpBias) << shift_of(v);
    return k;
}

inline MonoKey encode(const std::vector<int>& exps) {
    MonoKey k = 0;
    for (int v = 0; v < Vars::kMaxVars; ++v) {
        long e = v < static_cast<int>(exps.size()) ? exps[v] : 0;
        if (e < -kMaxAbsExp || e > kMaxAbsExp)
            throw DomainError("monomial exponent out of supported range");
        k |= static_cast<MonoKey>(e + kExpBias) << shift_of(v);
    }
    return k;
}

inline std::vector<int> decode(MonoKey k, int nvars) {
    std::vector<int> exps(nvars);
    for (int v = 0; v < nvars; ++v) exps[v] = static_cast<int>(exponent(k, v));
    return exps;
}

inline MonoKey mul(MonoKey a, MonoKey b) {
    MonoKey out = 0;
    for (int v = 0; v < Vars::kMaxVars; ++v) {
        int sh = shift_of(v);
        uint32_t s = static_cast<uint32_t>((a >> sh) & 0xffffu) +
                     static_cast<uint32_t>((b >> sh) & 0xffffu);
        s -= kExpBias;
        if (s >= (1u << kFieldBits)) throw DomainError("monomial exponent overflow");
        out |= static_cast<MonoKey>(s) << sh;
    }
    return out;
}

/// a / b, allowing negative result exponents (Laurent quotient).
inline MonoKey div(MonoKey a, MonoKey b) {
    MonoKey out = 0;
    for (int v = 0; v < Vars::kMaxVars; ++v) {
        int sh = shift_of(v);
        int32_t s = static_cast<int32_t>((a >> sh) & 0xffffu) -
                    static_cast<int32_t>((b >> sh) & 0xffffu) + kExpBias;
        if (s < 0 || s >= (1 << kFieldBits)) throw DomainError("monomial exponent overflow");
        out |= static_cast<MonoKey>(static_cast<uint32_t>(s)) << sh;
    }
    return out;
}

/// True iff b divides a within the polynomial ring (componentwise <=).
inline bool divides(MonoKey b, MonoKey a) {
    for (int v = 0; v < Vars::kMaxVars; ++v) {
        int sh = shift_of(v);
        if (((a >> sh) & 0xffffu) < ((b >> sh) & 0xffffu)) return false;
    }
    return true;
}

inline bool is_polynomial(MonoKey k) {
    for (int v = 0; v < Vars::kMaxVars; ++v)
        if (((k >> shift_of(v)) & 0xffffu) < static_cast<uint32_t>(kExpBias)) return false;
    return true;
}

inline long total_degree(MonoKey k, int nvars) {
    long d = 0;
    for (int v = 0; v < nvars; ++v) d += exponent(k, v);
    return d;
}

/// Key with variable `var` raised to power e, all others zero.
inline MonoKey power_of_var(int var, long e) {
    if (e < -kMaxAbsExp || e > kMaxAbsExp)
        throw DomainError("monomial exponent out of supported range");
    MonoKey k = one();
    int sh = shift_of(var);
    k &= ~(static_cast<MonoKey>(0xffffu) << sh);
    k |= static_cast<MonoKey>(e + kExpBias) << sh;
    return k;
}

} // namespace mono
} // namespace multider
