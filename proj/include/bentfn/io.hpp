#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "bentfn/boolfun.hpp"
#include "bentfn/common.hpp"
#include "bentfn/constructions.hpp"
#include "bentfn/field.hpp"
#include "bentfn/vectorial.hpp"

namespace bentfn {

struct FieldSpec {
    int n = 0;
    std::optional<uint32_t> poly;
};

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

inline uint64_t parse_uint(const std::string& s) {
    uint64_t v = 0;
    int base = 10;
    const char* b = s.data();
    const char* e = s.data() + s.size();
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
        base = 16;
        b += 2;
    }
    auto res = std::from_chars(b, e, v, base);
    if (res.ec != std::errc() || res.ptr != e) throw error("malformed integer: " + s);
    return v;
}

} // namespace detail

// "n=<int>,poly=0x<hex>"; poly is optional.
inline FieldSpec parse_field_spec(const std::string& s) {
    FieldSpec spec;
    for (const auto& part : detail::split(s, ',')) {
        auto kv = detail::split(part, '=');
        if (kv.size() != 2) throw error("malformed field spec: " + s);
        if (kv[0] == "n")
            spec.n = int(detail::parse_uint(kv[1]));
        else if (kv[0] == "poly")
            spec.poly = uint32_t(detail::parse_uint(kv[1]));
        else
            throw error("malformed field spec: " + s);
    }
    if (spec.n == 0) throw error("field spec missing n");
    return spec;
}

// "k=<int>,i=<int>,e=<int>[,terms=g1:t1;g2:t2]"; gamma values in hex or
// decimal, encoded in the ambient field F_{2^{2k}}.
inline FamilyParams parse_family_spec(const std::string& s) {
    FamilyParams p;
    bool have_k = false;
    for (const auto& part : detail::split(s, ',')) {
        auto kv = detail::split(part, '=');
        if (kv.size() != 2) throw error("malformed family spec: " + s);
        if (kv[0] == "k") {
            p.k = int(detail::parse_uint(kv[1]));
            have_k = true;
        } else if (kv[0] == "i") {
            p.i = int(detail::parse_uint(kv[1]));
        } else if (kv[0] == "e") {
            p.e = int(detail::parse_uint(kv[1]));
        } else if (kv[0] == "terms") {
            for (const auto& term : detail::split(kv[1], ';')) {
                auto gt = detail::split(term, ':');
                if (gt.size() != 2) throw error("malformed terms: " + kv[1]);
                p.terms.emplace_back(Elem(detail::parse_uint(gt[0])),
                                     int(detail::parse_uint(gt[1])));
            }
        } else {
            throw error("malformed family spec: " + s);
        }
    }
    if (!have_k) throw error("family spec missing k");
    if (p.e == 0) p.e = p.k;
    return p;
}

// Truth-table format: header "n=<int>", then one hex string of 2^n bits,
// LSB-first (bit of x = f(x)), 4 bits per hex digit.
inline void write_boolfun(std::ostream& os, const BoolFun& f) {
    os << "n=" << f.n << "\n";
    const size_t digits = (f.size() + 3) / 4;
    std::string hex(digits, '0');
    for (size_t d = 0; d < digits; ++d) {
        int nib = 0;
        for (int b = 0; b < 4; ++b) {
            size_t x = 4 * d + b;
            if (x < f.size() && f.get(x)) nib |= 1 << b;
        }
        hex[d] = "0123456789abcdef"[nib];
    }
    os << hex << "\n";
}

inline BoolFun read_boolfun(std::istream& is) {
    std::string header, line;
    if (!std::getline(is, header) || header.rfind("n=", 0) != 0)
        throw error("truth table: missing n= header");
    int n = int(detail::parse_uint(header.substr(2)));
    if (!std::getline(is, line)) throw error("truth table: missing data line");
    BoolFun f(n);
    if (line.size() * 4 < f.size()) throw error("truth table: too short");
    for (size_t x = 0; x < f.size(); ++x) {
        char c = line[x / 4];
        int nib = c >= 'a' ? c - 'a' + 10 : (c >= 'A' ? c - 'A' + 10 : c - '0');
        f.set(x, nib >> (x % 4) & 1);
    }
    return f;
}

// Function-table format: header "n=<int>,m=<int>", then 2^n lines, line x
// holding F(x) in hex.
inline void write_vecfun(std::ostream& os, const VecFun& f) {
    os << "n=" << f.n << ",m=" << f.m << "\n" << std::hex;
    for (Elem v : f.table) os << "0x" << v << "\n";
    os << std::dec;
}

inline VecFun read_vecfun(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) throw error("function table: empty file");
    int n = -1, m = -1;
    for (const auto& part : detail::split(header, ',')) {
        auto kv = detail::split(part, '=');
        if (kv.size() != 2) throw error("function table: bad header");
        if (kv[0] == "n") n = int(detail::parse_uint(kv[1]));
        if (kv[0] == "m") m = int(detail::parse_uint(kv[1]));
    }
    if (n < 0) throw error("function table: bad header");
    if (m < 0) m = n;
    VecFun f(n, m);
    std::string line;
    for (size_t x = 0; x < f.size(); ++x) {
        if (!std::getline(is, line)) throw error("function table: too short");
        uint64_t v = detail::parse_uint(line);
        if (v >> m) throw error("function table: value out of range");
        f.table[x] = Elem(v);
    }
    return f;
}

inline VecFun read_vecfun_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open " + path);
    return read_vecfun(in);
}

} // namespace bentfn
