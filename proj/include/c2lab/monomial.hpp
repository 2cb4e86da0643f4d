#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace c2lab {

// Exponent vector packed 4 bits per variable, variable 0 in the most
// significant nibble, so that unsigned comparison of (hi, lo) is the
// lexicographic monomial order with x0 > x1 > ... > x31.
//
// Everything in the pipeline stays within exponent 7 per variable
// (graph polynomials are multilinear, reduced polynomials quadratic,
// discriminants quartic), so nibble arithmetic never carries.
struct Monomial {
    static constexpr int max_vars = 32;

    std::uint64_t hi = 0;  // variables 0..15
    std::uint64_t lo = 0;  // variables 16..31

    static Monomial one() { return {}; }

    static Monomial var(int v, unsigned e = 1) {
        Monomial m;
        m.set(v, e);
        return m;
    }

    unsigned get(int v) const {
        if (v < 16) return (hi >> ((15 - v) * 4)) & 0xf;
        return (lo >> ((31 - v) * 4)) & 0xf;
    }

    void set(int v, unsigned e) {
        if (v < 0 || v >= max_vars) throw std::out_of_range("Monomial: variable index");
        if (e > 15) throw std::overflow_error("Monomial: exponent > 15");
        if (v < 16) {
            int s = (15 - v) * 4;
            hi = (hi & ~(0xfULL << s)) | (std::uint64_t(e) << s);
        } else {
            int s = (31 - v) * 4;
            lo = (lo & ~(0xfULL << s)) | (std::uint64_t(e) << s);
        }
    }

    bool is_one() const { return hi == 0 && lo == 0; }

    unsigned total_degree() const {
        unsigned d = 0;
        for (std::uint64_t w : {hi, lo})
            for (int i = 0; i < 16; ++i) d += (w >> (i * 4)) & 0xf;
        return d;
    }

    // product; nibble overflow is a logic error upstream
    Monomial operator*(const Monomial& o) const {
        Monomial r;
        r.hi = hi + o.hi;
        r.lo = lo + o.lo;
        return r;
    }

    bool divisible_by(const Monomial& o) const {
        for (int v = 0; v < max_vars; ++v)
            if (get(v) < o.get(v)) return false;
        return true;
    }

    Monomial operator/(const Monomial& o) const {
        Monomial r;
        r.hi = hi - o.hi;
        r.lo = lo - o.lo;
        return r;
    }

    auto operator<=>(const Monomial& o) const {
        if (auto c = hi <=> o.hi; c != 0) return c;
        return lo <=> o.lo;
    }
    bool operator==(const Monomial&) const = default;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::uint64_t x = m.hi * 0x9e3779b97f4a7c15ULL ^ (m.lo + 0x7f4a7c15u);
        x ^= x >> 29;
        x *= 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 32;
        return static_cast<std::size_t>(x);
    }
};

}  // namespace c2lab
