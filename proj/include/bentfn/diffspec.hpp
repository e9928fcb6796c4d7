#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "bentfn/common.hpp"
#include "bentfn/constructions.hpp"
#include "bentfn/field.hpp"
#include "bentfn/vectorial.hpp"

namespace bentfn {

// One row of the differential spectrum: the counts delta_F(a, b) over b for
// a fixed nonzero a. Full 2^n x 2^n tables are never materialized.
struct DeltaRow {
    Elem a = 0;
    std::map<uint64_t, uint64_t> histogram; // delta value -> number of b
    std::vector<Elem> support;              // b with delta > 0, sorted
};

inline DeltaRow delta_row(const VecFun& f, Elem a) {
    if (a == 0) throw error("a must be nonzero");
    DeltaRow row;
    row.a = a;
    std::vector<uint32_t> cnt(size_t(1) << f.m, 0);
    for (uint32_t x = 0; x < f.size(); ++x) ++cnt[f.table[x] ^ f.table[x ^ a]];
    for (uint32_t b = 0; b < cnt.size(); ++b) {
        if (cnt[b]) {
            ++row.histogram[cnt[b]];
            row.support.push_back(b);
        }
    }
    return row;
}

struct Uniformity {
    uint64_t delta = 0;
    bool is_apn = false;
};

inline Uniformity uniformity(const VecFun& f) {
    Uniformity u;
    u.delta = differential_uniformity(f);
    u.is_apn = u.delta == 2;
    return u;
}

struct SpectrumVerdict {
    Verdict verdict = Verdict::Fail;
    Elem bad_a = 0; // first offending row on FAIL
};

// Differential spectrum of the binomial x^(2^i)(x + x^(2^k)):
// rows with a in F*_{2^k} take values {0, 2^k}, with 2^k only at b in
// F_{2^k}; all other rows take values {0, 2^gcd(i,k)}.
inline SpectrumVerdict verify_binomial_spectrum(const FieldCtx& ctx2k, int i, int k,
                                                int guard = kDefaultCensusGuard) {
    if (ctx2k.n != 2 * k) throw error("field degree must be 2k");
    if (ctx2k.n > guard) throw error("census too large");
    FamilyParams p{k, i, k, {}};
    VecFun g = build_G(ctx2k, p);
    const uint64_t dk = uint64_t(1) << k;
    const uint64_t dg = uint64_t(1) << std::gcd(i, k);
    SpectrumVerdict v;
    for (uint32_t a = 1; a < ctx2k.order(); ++a) {
        DeltaRow row = delta_row(g, a);
        bool a_in_k = in_subfield(ctx2k, a, k);
        for (const auto& [val, n_b] : row.histogram) {
            if (val != (a_in_k ? dk : dg)) {
                v.bad_a = a;
                return v;
            }
        }
        if (a_in_k)
            for (Elem b : row.support)
                if (!in_subfield(ctx2k, b, k)) {
                    v.bad_a = a;
                    return v;
                }
    }
    v.verdict = Verdict::Pass;
    return v;
}

struct AnomalyReport {
    Verdict verdict = Verdict::Vacuous;
    Elem witness_a = 0;                     // set on PASS
    std::map<uint64_t, Elem> witness_b;     // one b per observed delta value
    uint64_t root_count = 0;                // used by the general verifier
    bool claim_applicable = false;
};

// For the trinomial family with t1 = 1, gcd(t2, k) != 1, i = t2: some row
// a outside F_{2^k} with a + a^(2^k) = 1 has every delta in {0, 2}, a value
// the binomial's spectrum never takes there.
inline AnomalyReport verify_delta2_anomaly(const FieldCtx& ctx2k, int k, int t2,
                                           int guard = kDefaultCensusGuard) {
    if (ctx2k.n != 2 * k) throw error("field degree must be 2k");
    if (ctx2k.n > guard) throw error("census too large");
    if (std::gcd(t2, k) == 1) throw error("gcd(t2,k) must not be 1");
    FamilyParams p{k, t2, k, {{1, 1}, {1, t2}}};
    AnomalyReport rep;
    if (!preconditions_hold(ctx2k, p)) return rep;
    rep.claim_applicable = true;
    VecFun g = build_G(ctx2k, p);
    rep.verdict = Verdict::Fail;
    for (uint32_t a = 0; a < ctx2k.order(); ++a) {
        if (in_subfield(ctx2k, a, k)) continue;
        Elem tau = a ^ frob_pow(ctx2k, a, k);
        if (tau == 0 || frob_pow(ctx2k, tau, 1) != tau) continue;
        DeltaRow row = delta_row(g, a);
        bool all_two = true;
        for (const auto& [val, n_b] : row.histogram)
            if (val != 2) all_two = false;
        if (all_two) {
            rep.verdict = Verdict::Pass;
            rep.witness_a = a;
            for (Elem b : row.support) rep.witness_b.emplace(2, b);
            break;
        }
    }
    return rep;
}

// General anomaly: with gamma = 1 terms, if the kernel size R of
// z -> sum_j z^(2^t_j) + z + z^(2^i) on F_{2^k} differs from 2^gcd(i,k),
// some row a with Tr^{2k}_k(a) = 1 never takes the value 2^gcd(i,k).
inline AnomalyReport verify_general_anomaly(const FieldCtx& ctx2k, int k, int i,
                                            const std::vector<int>& ts,
                                            int guard = kDefaultCensusGuard) {
    if (ctx2k.n != 2 * k) throw error("field degree must be 2k");
    if (ctx2k.n > guard) throw error("census too large");
    FamilyParams p{k, i, k, {}};
    for (int t : ts) p.terms.emplace_back(1, t);
    AnomalyReport rep;
    if (!preconditions_hold(ctx2k, p)) return rep;

    for (Elem z : subfield_elements(ctx2k, k)) {
        Elem v = z ^ frob_pow(ctx2k, z, ((i % k) + k) % k);
        for (int t : ts) v ^= frob_pow(ctx2k, z, t);
        if (v == 0) ++rep.root_count;
    }
    const uint64_t dg = uint64_t(1) << std::gcd(i, k);
    if (rep.root_count == dg) {
        rep.verdict = Verdict::Pass; // the claim makes no statement here
        return rep;
    }
    rep.claim_applicable = true;
    VecFun g = build_G(ctx2k, p);
    rep.verdict = Verdict::Fail;
    for (uint32_t a = 0; a < ctx2k.order(); ++a) {
        if (trace_to(ctx2k, a, k) != 1) continue;
        DeltaRow row = delta_row(g, a);
        if (!row.histogram.count(dg)) {
            rep.verdict = Verdict::Pass;
            rep.witness_a = a;
            std::vector<uint32_t> cnt(g.size(), 0);
            for (uint32_t x = 0; x < g.size(); ++x) ++cnt[g.table[x] ^ g.table[x ^ a]];
            for (uint32_t b = 0; b < cnt.size(); ++b)
                if (cnt[b]) rep.witness_b.emplace(cnt[b], b);
            break;
        }
    }
    return rep;
}

} // namespace bentfn
