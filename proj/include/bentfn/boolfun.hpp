#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bentfn/common.hpp"
#include "bentfn/field.hpp"

namespace bentfn {

// Boolean function f: F_2^n -> F_2 as a bit-packed truth table, bit x = f(x).
struct BoolFun {
    int n = 0;
    std::vector<uint64_t> bits;

    BoolFun() = default;
    explicit BoolFun(int n_) : n(n_), bits(((size_t(1) << n_) + 63) / 64, 0) {}

    size_t size() const { return size_t(1) << n; }
    int get(size_t x) const { return int(bits[x >> 6] >> (x & 63)) & 1; }
    void set(size_t x, int b) {
        if (b)
            bits[x >> 6] |= uint64_t(1) << (x & 63);
        else
            bits[x >> 6] &= ~(uint64_t(1) << (x & 63));
    }
};

// Signed Walsh spectrum, values[lambda] = sum_x (-1)^(f(x) + <lambda, x>)
// with the dot-product pairing on bit vectors. Any non-degenerate pairing
// (e.g. Tr(lambda x)) gives the same spectrum up to a permutation of
// lambda, so bentness and amplitudes are unaffected by the choice.
// 64-bit accumulators: exact for every n <= 24.
using WalshSpectrum = std::vector<int64_t>;

// In-place fast Walsh-Hadamard butterfly, O(n 2^n).
inline void fwht(std::vector<int64_t>& v) {
    const size_t size = v.size();
    for (size_t h = 1; h < size; h <<= 1) {
        for (size_t i = 0; i < size; i += h << 1) {
            for (size_t j = i; j < i + h; ++j) {
                int64_t a = v[j], b = v[j + h];
                v[j] = a + b;
                v[j + h] = a - b;
            }
        }
    }
}

inline WalshSpectrum walsh_spectrum(const BoolFun& f) {
    WalshSpectrum v(f.size());
    for (size_t x = 0; x < f.size(); ++x) v[x] = f.get(x) ? -1 : 1;
    fwht(v);
    return v;
}

inline int64_t max_abs_walsh(const WalshSpectrum& w) {
    int64_t m = 0;
    for (int64_t x : w)
        if ((x < 0 ? -x : x) > m) m = x < 0 ? -x : x;
    return m;
}

inline int64_t nonlinearity(const BoolFun& f) {
    return (int64_t(1) << (f.n - 1)) - max_abs_walsh(walsh_spectrum(f)) / 2;
}

inline bool is_bent(const WalshSpectrum& w, int n) {
    if (n % 2 != 0) return false;
    const int64_t target = int64_t(1) << (n / 2);
    for (int64_t x : w)
        if (x != target && x != -target) return false;
    return true;
}

inline bool is_bent(const BoolFun& f) { return is_bent(walsh_spectrum(f), f.n); }

// The unique t with all nonzero |W| = 2^((n+t)/2), if the spectrum is
// plateaued; nullopt otherwise. Bent functions report t = 0.
inline std::optional<int> plateaued_amplitude(const WalshSpectrum& w, int n) {
    int64_t mag = 0;
    for (int64_t x : w) {
        int64_t a = x < 0 ? -x : x;
        if (a == 0) continue;
        if (mag == 0) mag = a;
        else if (a != mag) return std::nullopt;
    }
    // mag > 0 always: Parseval forces a nonzero value.
    int bit = 0;
    while ((int64_t(1) << bit) < mag) ++bit;
    if ((int64_t(1) << bit) != mag) return std::nullopt; // not a power of two
    int t = 2 * bit - n;
    if (t < 0 || t > n) return std::nullopt;
    return t;
}

inline std::optional<int> plateaued_amplitude(const BoolFun& f) {
    return plateaued_amplitude(walsh_spectrum(f), f.n);
}

} // namespace bentfn
