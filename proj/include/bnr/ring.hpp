#pragma once

// F2[H] arithmetic. A polynomial is a bit vector of coefficients over the
// two-element field, packed into 64-bit words; bit k = coefficient of H^k.
// Canonical form: no trailing zero words.

#include <cstdint>
#include <string>
#include <vector>

namespace bnr {

struct hpoly {
    std::vector<std::uint64_t> w;

    hpoly() = default;
    static hpoly zero() { return {}; }
    static hpoly one() { return monomial(0); }
    static hpoly monomial(int k) {
        hpoly p;
        p.w.resize(static_cast<std::size_t>(k) / 64 + 1, 0);
        p.w[static_cast<std::size_t>(k) / 64] = 1ull << (k % 64);
        return p;
    }

    bool is_zero() const { return w.empty(); }
    bool is_one() const { return w.size() == 1 && w[0] == 1; }

    void trim() {
        while (!w.empty() && w.back() == 0) w.pop_back();
    }

    bool coeff(int k) const {
        std::size_t b = static_cast<std::size_t>(k) / 64;
        if (b >= w.size()) return false;
        return (w[b] >> (k % 64)) & 1;
    }

    // degree of the lowest nonzero term; -1 on zero
    int valuation() const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i]) return static_cast<int>(64 * i) + __builtin_ctzll(w[i]);
        return -1;
    }
    int degree() const {
        for (std::size_t i = w.size(); i-- > 0;)
            if (w[i]) return static_cast<int>(64 * i) + 63 - __builtin_clzll(w[i]);
        return -1;
    }

    friend bool operator==(const hpoly& a, const hpoly& b) { return a.w == b.w; }
    friend bool operator!=(const hpoly& a, const hpoly& b) { return !(a == b); }
};

inline hpoly operator+(const hpoly& a, const hpoly& b) {
    hpoly r;
    r.w.resize(std::max(a.w.size(), b.w.size()), 0);
    for (std::size_t i = 0; i < r.w.size(); ++i) {
        std::uint64_t x = i < a.w.size() ? a.w[i] : 0;
        std::uint64_t y = i < b.w.size() ? b.w[i] : 0;
        r.w[i] = x ^ y;
    }
    r.trim();
    return r;
}

// carry-less (XOR) multiplication
inline hpoly operator*(const hpoly& a, const hpoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    hpoly r;
    r.w.assign(a.w.size() + b.w.size(), 0);
    for (std::size_t i = 0; i < a.w.size(); ++i) {
        std::uint64_t x = a.w[i];
        while (x) {
            int k = __builtin_ctzll(x);
            x &= x - 1;
            for (std::size_t j = 0; j < b.w.size(); ++j) {
                std::uint64_t y = b.w[j];
                r.w[i + j] ^= y << k;
                if (k) r.w[i + j + 1] ^= y >> (64 - k);
            }
        }
    }
    r.trim();
    return r;
}

inline hpoly ring_mul(const hpoly& a, const hpoly& b) { return a * b; }
inline hpoly ring_add(const hpoly& a, const hpoly& b) { return a + b; }

// multiply by H^k
inline hpoly hshift(const hpoly& a, int k) { return a * hpoly::monomial(k); }

// truncate mod H^n
inline hpoly truncated(const hpoly& a, int n) {
    hpoly r = a;
    std::size_t nb = (static_cast<std::size_t>(n) + 63) / 64;
    if (r.w.size() > nb) r.w.resize(nb);
    if (!r.w.empty() && n % 64) r.w.back() &= (1ull << (n % 64)) - 1;
    r.trim();
    return r;
}

inline std::string to_string(const hpoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int k = 0; k <= p.degree(); ++k) {
        if (!p.coeff(k)) continue;
        if (!s.empty()) s += "+";
        if (k == 0) s += "1";
        else if (k == 1) s += "H";
        else s += "H^" + std::to_string(k);
    }
    return s;
}

} // namespace bnr
