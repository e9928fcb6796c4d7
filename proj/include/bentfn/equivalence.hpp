#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bentfn/common.hpp"
#include "bentfn/rng.hpp"
#include "bentfn/vectorial.hpp"

namespace bentfn {

// Square bit matrix over F_2, one uint64_t row per output bit.
struct BitMatrix {
    int dim = 0;
    std::vector<uint64_t> rows;

    BitMatrix() = default;
    explicit BitMatrix(int d) : dim(d), rows(size_t(d), 0) {}

    static BitMatrix identity(int d) {
        BitMatrix m(d);
        for (int i = 0; i < d; ++i) m.rows[i] = uint64_t(1) << i;
        return m;
    }

    uint64_t apply(uint64_t x) const {
        uint64_t y = 0;
        for (int i = 0; i < dim; ++i)
            y |= uint64_t(__builtin_parityll(rows[i] & x)) << i;
        return y;
    }
};

inline int rank(BitMatrix m) {
    int r = 0;
    for (int col = 0; col < m.dim; ++col) {
        int pivot = -1;
        for (int i = r; i < m.dim; ++i)
            if (m.rows[i] >> col & 1) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m.rows[r], m.rows[pivot]);
        for (int i = 0; i < m.dim; ++i)
            if (i != r && (m.rows[i] >> col & 1)) m.rows[i] ^= m.rows[r];
        ++r;
    }
    return r;
}

inline bool is_invertible(const BitMatrix& m) { return rank(m) == m.dim; }

// Gauss-Jordan inverse; the matrix must be invertible.
inline BitMatrix inverse(const BitMatrix& m) {
    BitMatrix a = m, inv = BitMatrix::identity(m.dim);
    for (int col = 0; col < a.dim; ++col) {
        int pivot = -1;
        for (int i = col; i < a.dim; ++i)
            if (a.rows[i] >> col & 1) {
                pivot = i;
                break;
            }
        if (pivot < 0) throw error("matrix not invertible");
        std::swap(a.rows[col], a.rows[pivot]);
        std::swap(inv.rows[col], inv.rows[pivot]);
        for (int i = 0; i < a.dim; ++i) {
            if (i != col && (a.rows[i] >> col & 1)) {
                a.rows[i] ^= a.rows[col];
                inv.rows[i] ^= inv.rows[col];
            }
        }
    }
    return inv;
}

// Affine map x -> Mx + c.
struct Affine {
    BitMatrix mat;
    uint64_t c = 0;

    uint64_t apply(uint64_t x) const { return mat.apply(x) ^ c; }
};

inline Affine affine_inverse(const Affine& a) {
    BitMatrix mi = inverse(a.mat);
    return Affine{mi, mi.apply(a.c)};
}

// f then g, as a single affine map.
inline Affine compose(const Affine& g, const Affine& f) {
    Affine r;
    r.mat = BitMatrix(f.mat.dim);
    for (int i = 0; i < f.mat.dim; ++i) {
        // rows of g.mat * f.mat
        uint64_t row = 0;
        for (int j = 0; j < f.mat.dim; ++j)
            if (__builtin_parityll(g.mat.rows[i] & (f.mat.apply(uint64_t(1) << j))))
                row |= uint64_t(1) << j;
        r.mat.rows[i] = row;
    }
    r.c = g.apply(f.c);
    return r;
}

// EA transform F' = outer . F . inner + add, with outer and inner affine
// permutations of F_2^n and add an arbitrary affine map.
struct EATriple {
    Affine outer;
    Affine inner;
    Affine add;
};

inline VecFun apply_ea(const VecFun& f, const EATriple& t) {
    VecFun out(f.n, f.m);
    for (uint32_t x = 0; x < f.size(); ++x)
        out.table[x] = Elem(t.outer.apply(f.table[t.inner.apply(x)]) ^ t.add.apply(x));
    return out;
}

inline EATriple ea_inverse(const EATriple& t) {
    EATriple r;
    r.inner = affine_inverse(t.inner);
    BitMatrix om_inv = inverse(t.outer.mat);
    r.outer = Affine{om_inv, om_inv.apply(t.outer.c)};
    // F(y) = outer^-1(F'(inner^-1 y)) + outer_lin^-1(add(inner^-1 y));
    // fold the linear image of add into the additive part.
    Affine add_pulled = compose(Affine{om_inv, 0}, compose(t.add, r.inner));
    r.add = add_pulled;
    return r;
}

// Invertible affine map of F_2^(n+m) acting on function graphs {(x, F(x))}
// with x in the low n bits and F(x) in the high m bits.
struct AffineMap2n {
    Affine map; // dimension n + m
};

// Image of the graph under the map; nullopt when the image is not the graph
// of a function (a legitimate outcome for most affine permutations).
inline std::optional<VecFun> apply_ccz(const VecFun& f, const AffineMap2n& m) {
    if (m.map.mat.dim != f.n + f.m) throw error("dimension mismatch");
    VecFun out(f.n, f.m);
    std::vector<uint8_t> seen(f.size(), 0);
    const uint64_t xmask = (uint64_t(1) << f.n) - 1;
    for (uint32_t x = 0; x < f.size(); ++x) {
        uint64_t q = m.map.apply(uint64_t(x) | (uint64_t(f.table[x]) << f.n));
        uint64_t x2 = q & xmask;
        if (seen[x2]) return std::nullopt;
        seen[x2] = 1;
        out.table[x2] = Elem(q >> f.n);
    }
    return out;
}

inline BitMatrix random_invertible(int dim, SplitMix64& rng) {
    for (;;) {
        BitMatrix m(dim);
        const uint64_t mask = dim == 64 ? ~uint64_t(0) : (uint64_t(1) << dim) - 1;
        for (int i = 0; i < dim; ++i) m.rows[i] = rng.next() & mask;
        if (is_invertible(m)) return m;
    }
}

inline Affine random_affine_perm(int dim, SplitMix64& rng) {
    const uint64_t mask = (uint64_t(1) << dim) - 1;
    return Affine{random_invertible(dim, rng), rng.next() & mask};
}

inline EATriple random_ea(int n, SplitMix64& rng) {
    EATriple t;
    t.outer = random_affine_perm(n, rng);
    t.inner = random_affine_perm(n, rng);
    const uint64_t mask = (uint64_t(1) << n) - 1;
    BitMatrix a(n);
    for (int i = 0; i < n; ++i) a.rows[i] = rng.next() & mask;
    t.add = Affine{a, rng.next() & mask};
    return t;
}

inline AffineMap2n random_ccz(int n, SplitMix64& rng) {
    return AffineMap2n{random_affine_perm(2 * n, rng)};
}

// Embeds an EA triple as the graph map (x, y) -> (inner^-1 x,
// outer(y) + add(inner^-1 x)); always yields a function graph.
inline AffineMap2n ccz_from_ea(const EATriple& t, int n) {
    Affine inner_inv = affine_inverse(t.inner);
    Affine shifted = compose(t.add, inner_inv);
    AffineMap2n m;
    m.map.mat = BitMatrix(2 * n);
    for (int i = 0; i < n; ++i) {
        m.map.mat.rows[i] = inner_inv.mat.rows[i];
        uint64_t hi = uint64_t(t.outer.mat.rows[i]) << n;
        m.map.mat.rows[n + i] = hi | shifted.mat.rows[i];
    }
    m.map.c = uint64_t(inner_inv.c) | (uint64_t(t.outer.c ^ shifted.c) << n);
    return m;
}

enum class EquivMode { EA, CCZ };

struct InvarianceTrial {
    int index = 0;
    bool accepted = false; // CCZ sample produced a function graph
    uint64_t bent_count = 0;
    bool is_max = false;
};

struct InvarianceReport {
    Verdict verdict = Verdict::Vacuous;
    uint64_t baseline_bent_count = 0;
    bool baseline_is_max = false;
    std::vector<InvarianceTrial> trials;
    int violations = 0;
};

constexpr int kCczRetryCap = 1000;

// Samples transforms and checks that the maximum-bent-component property is
// preserved; EA transforms must additionally preserve the exact bent count.
inline InvarianceReport invariance_experiment(const FieldCtx& ctx, const VecFun& f,
                                              EquivMode mode, int trials, uint64_t seed,
                                              int guard = kDefaultCensusGuard,
                                              int retry_cap = kCczRetryCap) {
    if (f.n % 2 != 0) throw error("n must be even");
    InvarianceReport rep;
    CensusReport base = bent_census(ctx, f, guard);
    rep.baseline_bent_count = base.bent_count;
    rep.baseline_is_max = base.is_max;
    if (trials == 0) return rep;

    SplitMix64 rng(seed);
    rep.verdict = Verdict::Pass;
    for (int t = 0; t < trials; ++t) {
        InvarianceTrial trial;
        trial.index = t;
        VecFun g;
        if (mode == EquivMode::EA) {
            g = apply_ea(f, random_ea(f.n, rng));
            trial.accepted = true;
        } else {
            for (int r = 0; r < retry_cap; ++r) {
                auto img = apply_ccz(f, random_ccz(f.n, rng));
                if (img) {
                    g = *img;
                    trial.accepted = true;
                    break;
                }
            }
        }
        if (trial.accepted) {
            CensusReport c = bent_census(ctx, g, guard);
            trial.bent_count = c.bent_count;
            trial.is_max = c.is_max;
            bool ok = c.is_max == base.is_max &&
                      (mode != EquivMode::EA || c.bent_count == base.bent_count);
            if (!ok) {
                ++rep.violations;
                rep.verdict = Verdict::Fail;
            }
        }
        rep.trials.push_back(trial);
    }
    if (mode == EquivMode::CCZ) {
        bool any = false;
        for (const auto& t : rep.trials) any = any || t.accepted;
        if (!any && rep.verdict == Verdict::Pass) rep.verdict = Verdict::Vacuous;
    }
    return rep;
}

} // namespace bentfn
