#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bentfn/boolfun.hpp"
#include "bentfn/common.hpp"
#include "bentfn/field.hpp"

namespace bentfn {

// Value table of F: F_{2^n} -> F_{2^m}, table[x] = F(x) in field encoding.
struct VecFun {
    int n = 0;
    int m = 0;
    std::vector<Elem> table;

    VecFun() = default;
    VecFun(int n_, int m_) : n(n_), m(m_), table(size_t(1) << n_, 0) {}
    size_t size() const { return size_t(1) << n; }
};

// table[x] = sum of coeff * x^exponent over the given terms.
inline VecFun from_univariate(const FieldCtx& ctx,
                              const std::vector<std::pair<Elem, uint64_t>>& terms) {
    VecFun f(ctx.n, ctx.n);
    for (uint32_t x = 0; x < ctx.order(); ++x) {
        Elem acc = 0;
        for (const auto& [c, e] : terms) acc ^= mul(ctx, c, pow_elem(ctx, x, e));
        f.table[x] = acc;
    }
    return f;
}

// Component Tr^m_1(v F(x)). out_ctx is the field of degree m the outputs
// live in (equal to the input field for (n,n)-functions).
inline BoolFun component(const FieldCtx& out_ctx, const VecFun& f, Elem v) {
    BoolFun g(f.n);
    for (size_t x = 0; x < f.size(); ++x)
        g.set(x, tr1(out_ctx, mul(out_ctx, v, f.table[x])));
    return g;
}

// A set of distinct values is an F_2-subspace iff it contains 0 and its
// size equals 2^rank. Rank via an echelon basis indexed by leading bit.
inline bool is_xor_closed_subspace(const std::vector<Elem>& members) {
    bool has_zero = false;
    Elem basis[32] = {};
    int rank = 0;
    for (Elem s : members) {
        if (s == 0) has_zero = true;
        for (int bit = 31; bit >= 0 && s; --bit) {
            if (!(s >> bit & 1)) continue;
            if (basis[bit]) {
                s ^= basis[bit];
            } else {
                basis[bit] = s;
                ++rank;
                s = 0;
            }
        }
    }
    return has_zero && members.size() == (size_t(1) << rank);
}

struct CensusReport {
    int n = 0;
    uint64_t bent_count = 0;
    std::vector<Elem> nonbent; // sorted; v = 0 is always present
    bool is_subspace = false;
    bool is_max = false;
};

constexpr int kDefaultCensusGuard = 16;

// Classifies every component of an (n,n)-function as bent or not.
inline CensusReport bent_census(const FieldCtx& out_ctx, const VecFun& f,
                                int guard = kDefaultCensusGuard) {
    if (f.n > guard) throw error("census too large");
    CensusReport rep;
    rep.n = f.n;
    for (uint32_t v = 0; v < (uint32_t(1) << f.m); ++v) {
        if (is_bent(component(out_ctx, f, v)))
            ++rep.bent_count;
        else
            rep.nonbent.push_back(v);
    }
    rep.is_subspace = is_xor_closed_subspace(rep.nonbent);
    rep.is_max = f.n % 2 == 0 && f.n == f.m &&
                 rep.bent_count == (uint64_t(1) << f.n) - (uint64_t(1) << (f.n / 2));
    return rep;
}

// counts[t] = number of v (including v = 0) whose component is t-plateaued.
struct AmplitudeHistogram {
    std::map<int, uint64_t> counts;
};

inline AmplitudeHistogram amplitude_histogram(const FieldCtx& out_ctx, const VecFun& f,
                                              int guard = kDefaultCensusGuard) {
    if (f.n > guard) throw error("census too large");
    AmplitudeHistogram h;
    std::string offenders;
    for (uint32_t v = 0; v < (uint32_t(1) << f.m); ++v) {
        auto t = plateaued_amplitude(component(out_ctx, f, v));
        if (!t) {
            if (!offenders.empty()) offenders += ",";
            offenders += std::to_string(v);
        } else {
            ++h.counts[*t];
        }
    }
    if (!offenders.empty()) throw error("not plateaued: v in {" + offenders + "}");
    return h;
}

// Sum of W_F^4(u, v) over ALL u and v, v = 0 included (its slice is 2^(4n)).
inline uint64_t fourth_moment(const FieldCtx& out_ctx, const VecFun& f,
                              int guard = kDefaultCensusGuard) {
    if (f.n > guard) throw error("census too large");
    unsigned __int128 total = 0;
    for (uint32_t v = 0; v < (uint32_t(1) << f.m); ++v) {
        WalshSpectrum w = walsh_spectrum(component(out_ctx, f, v));
        for (int64_t x : w) {
            unsigned __int128 sq = (unsigned __int128)(x * x);
            total += sq * sq;
        }
    }
    if (total >> 64) throw error("fourth moment overflow");
    return uint64_t(total);
}

// Brute-force differential uniformity for an (n,n)-function.
inline uint64_t differential_uniformity(const VecFun& f) {
    std::vector<uint32_t> cnt(f.size());
    uint64_t best = 0;
    for (uint32_t a = 1; a < f.size(); ++a) {
        std::fill(cnt.begin(), cnt.end(), 0);
        for (uint32_t x = 0; x < f.size(); ++x) ++cnt[f.table[x] ^ f.table[x ^ a]];
        for (uint32_t c : cnt)
            if (c > best) best = c;
    }
    return best;
}

struct ExclusionReport {
    bool is_apn = false;
    bool is_vectorial_plateaued = false;
    uint64_t n0 = 0;          // number of bent components, v = 0 excluded by amplitude
    int n0_mod4 = -1;
    bool is_max = false;
    bool hypotheses_hold = false; // is_apn && is_vectorial_plateaued
    bool claim_holds = false;     // N_0 = 2 mod 4 and not max, when hypotheses hold
};

// APN plateaued functions never reach the maximum bent-component count:
// their N_0 is 2 mod 4 while 2^n - 2^(n/2) is 0 mod 4 for n >= 4.
inline ExclusionReport verify_apn_plateaued_exclusion(const FieldCtx& out_ctx,
                                                      const VecFun& f,
                                                      int guard = kDefaultCensusGuard) {
    ExclusionReport rep;
    rep.is_apn = differential_uniformity(f) == 2;
    try {
        AmplitudeHistogram h = amplitude_histogram(out_ctx, f, guard);
        rep.is_vectorial_plateaued = true;
        auto it = h.counts.find(0);
        rep.n0 = it == h.counts.end() ? 0 : it->second;
        rep.n0_mod4 = int(rep.n0 % 4);
        rep.is_max = rep.n0 == (uint64_t(1) << f.n) - (uint64_t(1) << (f.n / 2));
    } catch (const error&) {
        rep.is_vectorial_plateaued = false;
    }
    rep.hypotheses_hold = rep.is_apn && rep.is_vectorial_plateaued;
    rep.claim_holds = rep.hypotheses_hold && rep.n0_mod4 == 2 && !rep.is_max;
    return rep;
}

} // namespace bentfn
