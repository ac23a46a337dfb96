#pragma once

#include <string>

#include "multider/errors.hpp"

namespace multider {

/// Ambient variable set: x1..x_ell, then optionally the integration variable t,
/// then optionally the coning variable z. The listed order is the global
/// variable order used for lexicographic comparisons (x1 has highest priority).
struct Vars {
    int ell = 0;
    bool with_t = false;
    bool with_z = false;

    static constexpr int kMaxVars = 8;

    int count() const { return ell + (with_t ? 1 : 0) + (with_z ? 1 : 0); }

    int t_index() const {
        if (!with_t) throw DomainError("variable set has no t");
        return ell;
    }
    int z_index() const {
        if (!with_z) throw DomainError("variable set has no z");
        return ell + (with_t ? 1 : 0);
    }

    std::string name(int i) const {
        if (i < 0 || i >= count()) throw DomainError("variable index out of range");
        if (i < ell) return "x" + std::to_string(i + 1);
        if (with_t && i == ell) return "t";
        return "z";
    }

    /// -1 when the name does not belong to this set.
    int index_of(const std::string& name) const {
        if (name == "t") return with_t ? ell : -1;
        if (name == "z") return with_z ? z_index() : -1;
        if (name.size() >= 2 && name[0] == 'x') {
            int k = 0;
            for (size_t j = 1; j < name.size(); ++j) {
                if (name[j] < '0' || name[j] > '9') return -1;
                k = k * 10 + (name[j] - '0');
            }
            if (k >= 1 && k <= ell) return k - 1;
        }
        return -1;
    }

    friend bool operator==(const Vars& a, const Vars& b) {
        return a.ell == b.ell && a.with_t == b.with_t && a.with_z == b.with_z;
    }
    friend bool operator!=(const Vars& a, const Vars& b) { return !(a == b); }

    std::string describe() const {
        std::string s = "{x1..x" + std::to_string(ell);
        if (with_t) s += ",t";
        if (with_z) s += ",z";
        return s + "}";
    }

    void validate() const {
        if (ell < 0 || count() < 1 || count() > kMaxVars)
            throw DomainError("variable set " + describe() + " unsupported (need 1.." +
                              std::to_string(kMaxVars) + " variables)");
    }
};

} // namespace multider
