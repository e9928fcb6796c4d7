// bentfn: census, spectra, constructions and theorem-verification campaigns
// for vectorial Boolean functions over F_{2^n}.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bentfn/boolfun.hpp"
#include "bentfn/campaign.hpp"
#include "bentfn/common.hpp"
#include "bentfn/constructions.hpp"
#include "bentfn/diffspec.hpp"
#include "bentfn/equivalence.hpp"
#include "bentfn/field.hpp"
#include "bentfn/io.hpp"
#include "bentfn/vectorial.hpp"

using json = nlohmann::ordered_json;
using namespace bentfn;

namespace {

constexpr const char* kVersion = "bentfn 0.1.0";

// Exit codes: 0 success/PASS, 1 theorem FAIL, 2 usage error, 3 guard hit.
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

std::string hex(uint64_t v) {
    std::ostringstream os;
    os << "0x" << std::hex << v;
    return os.str();
}

json hex_list(const std::vector<Elem>& xs) {
    json a = json::array();
    for (Elem x : xs) a.push_back(hex(x));
    return a;
}

json field_json(const FieldCtx& ctx) {
    return json{{"n", ctx.n}, {"poly", hex(ctx.poly)}};
}

json report_header(const FieldCtx& ctx, std::optional<uint64_t> seed = std::nullopt) {
    json h{{"tool", kVersion}, {"field", field_json(ctx)}};
    if (seed) h["seed"] = *seed;
    return h;
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path);
    if (!os) throw error("cannot write " + out_path);
    os << text;
}

void emit_json(const std::string& out_path, const json& j) {
    emit(out_path, j.dump(2) + "\n");
}

// Flags shared by every function-consuming subcommand. The function comes
// from exactly one of: a table file, a family spec "k=..,i=..[,e=..,terms=..]",
// or "gold<d>" for the power map x^d (which needs --n or --field).
struct FnFlags {
    std::string fn;
    std::string field; // "n=<int>,poly=0x<hex>"
    int n = 0;         // shorthand for --field "n=<int>"
    int guard = kDefaultCensusGuard;

    void attach(CLI::App* cmd, bool need_fn = true) {
        auto* f = cmd->add_option("--fn", fn,
                                  "function: table file, family spec, or gold<d>");
        if (need_fn) f->required();
        cmd->add_option("--field", field, "field spec n=<int>,poly=0x<hex>");
        cmd->add_option("--n", n, "field degree (default polynomial)");
        cmd->add_option("--guard", guard, "max n for exhaustive passes");
    }

    std::optional<FieldSpec> field_spec() const {
        if (!field.empty() && n != 0) throw error("give --field or --n, not both");
        if (!field.empty()) return parse_field_spec(field);
        if (n != 0) return FieldSpec{n, std::nullopt};
        return std::nullopt;
    }
};

uint64_t parse_num(const std::string& s) { return bentfn::detail::parse_uint(s); }

struct LoadedFn {
    VecFun f;
    FieldCtx in_ctx;  // degree n
    FieldCtx out_ctx; // degree m; components live here
};

LoadedFn load_fn(const FnFlags& flags) {
    auto spec = flags.field_spec();
    LoadedFn out;
    if (flags.fn.rfind("gold", 0) == 0) {
        uint64_t d = parse_num(flags.fn.substr(4));
        if (!spec) throw error("gold<d> needs --n or --field");
        out.in_ctx = ctx_build(spec->n, spec->poly);
        out.f = from_univariate(out.in_ctx, {{1, d}});
    } else if (flags.fn.find("k=") != std::string::npos) {
        FamilyParams p = parse_family_spec(flags.fn);
        int n = 2 * p.k;
        if (spec && spec->n != n) throw error("field degree must be 2k");
        out.in_ctx = ctx_build(n, spec ? spec->poly : std::nullopt);
        out.f = build_G(out.in_ctx, p);
    } else {
        out.f = read_vecfun_file(flags.fn);
        if (spec && spec->n != out.f.n) throw error("field spec does not match table");
        out.in_ctx = ctx_build(out.f.n, spec ? spec->poly : std::nullopt);
    }
    // Components Tr^m_1(vF) live in the output field of degree m. A custom
    // polynomial only applies when input and output fields coincide.
    out.out_ctx = out.f.m == out.f.n ? out.in_ctx : ctx_build(out.f.m);
    return out;
}

json census_json(const CensusReport& rep) {
    return json{{"n", rep.n},
                {"bent_count", rep.bent_count},
                {"nonbent", hex_list(rep.nonbent)},
                {"is_subspace", rep.is_subspace},
                {"is_max", rep.is_max}};
}

int run_census(const FnFlags& flags, const std::string& out_path) {
    LoadedFn lf = load_fn(flags);
    if (lf.f.n % 2 != 0) throw error("census requires even n");
    CensusReport rep = bent_census(lf.out_ctx, lf.f, flags.guard);
    json j{{"header", report_header(lf.in_ctx)}, {"census", census_json(rep)}};
    emit_json(out_path, j);
    return kExitPass;
}

int run_analyze(const FnFlags& flags, const std::string& out_path) {
    LoadedFn lf = load_fn(flags);
    json j{{"header", report_header(lf.in_ctx)}, {"n", lf.f.n}, {"m", lf.f.m}};
    Uniformity u = uniformity(lf.f);
    j["uniformity"] = json{{"delta", u.delta}, {"is_apn", u.is_apn}};
    if (lf.f.n % 2 == 0) j["census"] = census_json(bent_census(lf.out_ctx, lf.f, flags.guard));
    try {
        AmplitudeHistogram h = amplitude_histogram(lf.out_ctx, lf.f, flags.guard);
        json counts = json::object();
        for (auto [t, c] : h.counts) counts[std::to_string(t)] = c;
        j["plateaued"] = true;
        j["amplitude_histogram"] = counts;
    } catch (const error& e) {
        if (std::string(e.what()).rfind("not plateaued", 0) != 0) throw;
        j["plateaued"] = false;
    }
    j["fourth_moment"] = fourth_moment(lf.out_ctx, lf.f, flags.guard);
    emit_json(out_path, j);
    return kExitPass;
}

int run_diffspec(const FnFlags& flags, const std::string& row_arg,
                 const std::string& out_path) {
    LoadedFn lf = load_fn(flags);
    if (!row_arg.empty()) {
        Elem a = Elem(parse_num(row_arg));
        DeltaRow row = delta_row(lf.f, a);
        std::ostringstream csv;
        csv << "b_hex,delta\n";
        std::vector<uint32_t> cnt(size_t(1) << lf.f.m, 0);
        for (uint32_t x = 0; x < lf.f.size(); ++x)
            ++cnt[lf.f.table[x] ^ lf.f.table[x ^ a]];
        for (Elem b : row.support) csv << hex(b) << "," << cnt[b] << "\n";
        emit(out_path, csv.str());
        return kExitPass;
    }
    Uniformity u = uniformity(lf.f);
    json hist = json::object();
    for (uint32_t a = 1; a < lf.f.size(); ++a)
        for (auto [val, n_b] : delta_row(lf.f, a).histogram)
            hist[std::to_string(val)] = hist.value(std::to_string(val), uint64_t(0)) + n_b;
    json j{{"header", report_header(lf.in_ctx)},
           {"delta", u.delta},
           {"is_apn", u.is_apn},
           {"delta_histogram", hist}};
    emit_json(out_path, j);
    return kExitPass;
}

int run_construct(int k, int i, int e, const std::string& terms_arg,
                  const std::string& alpha_arg, const std::string& field_arg,
                  const std::string& out_path) {
    FamilyParams p;
    p.k = k;
    p.i = i;
    p.e = e == 0 ? k : e;
    if (!terms_arg.empty()) {
        for (const auto& term : bentfn::detail::split(terms_arg, ',')) {
            auto gt = bentfn::detail::split(term, ':');
            if (gt.size() != 2) throw error("malformed terms: " + terms_arg);
            p.terms.emplace_back(Elem(parse_num(gt[0])), int(parse_num(gt[1])));
        }
    }
    std::optional<uint32_t> poly;
    if (!field_arg.empty()) {
        FieldSpec spec = parse_field_spec(field_arg);
        if (spec.n != 2 * k) throw error("field degree must be 2k");
        poly = spec.poly;
    }
    FieldCtx ctx2k = ctx_build(2 * k, poly);
    std::ostringstream os;
    if (!alpha_arg.empty()) {
        FieldCtx ctxk = ctx_build(k);
        VecFun f = to_vectorial_bent(ctx2k, ctxk, Elem(parse_num(alpha_arg)), p);
        write_vecfun(os, f);
    } else {
        write_vecfun(os, build_G(ctx2k, p));
    }
    emit(out_path, os.str());
    return kExitPass;
}

int run_equiv(const FnFlags& flags, const std::string& mode_arg, int trials,
              uint64_t seed, const std::string& out_path) {
    EquivMode mode;
    if (mode_arg == "ea")
        mode = EquivMode::EA;
    else if (mode_arg == "ccz")
        mode = EquivMode::CCZ;
    else
        throw error("mode must be ea or ccz");
    LoadedFn lf = load_fn(flags);
    if (lf.f.m != lf.f.n) throw error("equiv needs an (n,n)-function");
    InvarianceReport rep =
        invariance_experiment(lf.out_ctx, lf.f, mode, trials, seed, flags.guard);
    json trials_j = json::array();
    for (const auto& t : rep.trials)
        trials_j.push_back(json{{"index", t.index},
                                {"accepted", t.accepted},
                                {"bent_count", t.bent_count},
                                {"is_max", t.is_max}});
    json j{{"header", report_header(lf.in_ctx, seed)},
           {"mode", mode_arg},
           {"baseline_bent_count", rep.baseline_bent_count},
           {"baseline_is_max", rep.baseline_is_max},
           {"trials", trials_j},
           {"violations", rep.violations},
           {"verdict", to_string(rep.verdict)}};
    emit_json(out_path, j);
    return rep.verdict == Verdict::Fail ? kExitFail : kExitPass;
}

json witness_json(const AnomalyReport& rep) {
    json w = json::object();
    for (auto [val, b] : rep.witness_b) w[std::to_string(val)] = hex(b);
    return json{{"verdict", to_string(rep.verdict)},
                {"claim_applicable", rep.claim_applicable},
                {"witness_a", hex(rep.witness_a)},
                {"witness_b", w},
                {"root_count", rep.root_count}};
}

json scan_json(const char* name, int kmax, const ScanStats& s) {
    return json{{"scan", name},
                {"kmax", kmax},
                {"instances", s.instances},
                {"pass", s.pass},
                {"fail", s.fail},
                {"vacuous", s.vacuous},
                {"nonvacuous_with_terms", s.nonvacuous_with_terms},
                {"missing_witness", s.missing_witness},
                {"counterexamples", s.counterexamples},
                {"failures", s.failures}};
}

struct VerifyFlags {
    std::string theorem;
    std::string family;
    int kmax = 4;
    int i = 0;
    int k = 0;
    int t2 = 0;
    std::string ts;
    FnFlags fn;
    std::string out_path;
};

int run_verify(const VerifyFlags& v) {
    json j{{"header", json{{"tool", kVersion}}}};
    Verdict verdict = Verdict::Pass;

    if (v.family == "general" || v.theorem == "general-scan") {
        ScanStats s = general_family_scan(v.kmax, v.fn.guard);
        j["report"] = scan_json("general-family", v.kmax, s);
        verdict = s.fail ? Verdict::Fail : Verdict::Pass;
    } else if (v.theorem == "alpha-family") {
        if (v.family.empty()) throw error("alpha-family needs --family");
        FamilyParams p = parse_family_spec(v.family);
        auto spec = v.fn.field_spec();
        FieldCtx ctx = ctx_build(2 * p.k, spec ? spec->poly : std::nullopt);
        TheoremReport rep = verify_bent_alpha_theorem(ctx, p, v.fn.guard);
        j["header"] = report_header(ctx);
        j["report"] = json{{"verdict", to_string(rep.verdict)},
                           {"bent_count", rep.bent_count},
                           {"nonbent_alphas", hex_list(rep.nonbent_alphas)},
                           {"predicted", hex_list(rep.predicted)}};
        verdict = rep.verdict;
    } else if (v.theorem == "apn-plateaued") {
        LoadedFn lf = load_fn(v.fn);
        ExclusionReport rep = verify_apn_plateaued_exclusion(lf.out_ctx, lf.f, v.fn.guard);
        verdict = !rep.hypotheses_hold ? Verdict::Vacuous
                  : rep.claim_holds    ? Verdict::Pass
                                       : Verdict::Fail;
        j["header"] = report_header(lf.in_ctx);
        j["report"] = json{{"is_apn", rep.is_apn},
                           {"is_vectorial_plateaued", rep.is_vectorial_plateaued},
                           {"n0", rep.n0},
                           {"n0_mod4", rep.n0_mod4},
                           {"is_max", rep.is_max},
                           {"verdict", to_string(verdict)}};
    } else if (v.theorem == "binomial-diff") {
        if (v.k <= 0) throw error("binomial-diff needs --k");
        auto spec = v.fn.field_spec();
        FieldCtx ctx = ctx_build(2 * v.k, spec ? spec->poly : std::nullopt);
        SpectrumVerdict rep = verify_binomial_spectrum(ctx, v.i, v.k, v.fn.guard);
        j["header"] = report_header(ctx);
        j["report"] = json{{"verdict", to_string(rep.verdict)}, {"bad_a", hex(rep.bad_a)}};
        verdict = rep.verdict;
    } else if (v.theorem == "delta2-anomaly") {
        if (v.k <= 0) throw error("delta2-anomaly needs --k");
        if (v.t2 > 0) {
            FieldCtx ctx = ctx_build(2 * v.k);
            AnomalyReport rep = verify_delta2_anomaly(ctx, v.k, v.t2, v.fn.guard);
            j["header"] = report_header(ctx);
            j["report"] = witness_json(rep);
            verdict = rep.verdict;
        } else {
            ScanStats s = delta2_anomaly_scan(v.k, v.fn.guard);
            j["report"] = scan_json("delta2-anomaly", v.k, s);
            verdict = s.fail ? Verdict::Fail : Verdict::Pass;
        }
    } else if (v.theorem == "general-anomaly") {
        if (v.k <= 0) throw error("general-anomaly needs --k");
        if (!v.ts.empty()) {
            std::vector<int> ts;
            for (const auto& t : bentfn::detail::split(v.ts, ','))
                ts.push_back(int(parse_num(t)));
            FieldCtx ctx = ctx_build(2 * v.k);
            AnomalyReport rep = verify_general_anomaly(ctx, v.k, v.i, ts, v.fn.guard);
            j["header"] = report_header(ctx);
            j["report"] = witness_json(rep);
            verdict = rep.verdict;
        } else {
            ScanStats s = general_anomaly_scan(v.k, v.fn.guard);
            j["report"] = scan_json("general-anomaly", v.k, s);
            verdict = s.fail ? Verdict::Fail : Verdict::Pass;
        }
    } else {
        throw error("unknown theorem: " + v.theorem);
    }

    emit_json(v.out_path, j);
    return verdict == Verdict::Fail ? kExitFail : kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bent-component analysis of vectorial Boolean functions"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string out_path;

    auto* census = app.add_subcommand("census", "classify every component as bent or not");
    FnFlags census_fn;
    census_fn.attach(census);
    census->add_option("--out", out_path, "output file (default stdout)");

    auto* analyze = app.add_subcommand("analyze", "uniformity, census, amplitudes, moment");
    FnFlags analyze_fn;
    analyze_fn.attach(analyze);
    analyze->add_option("--out", out_path);

    auto* diffspec = app.add_subcommand("diffspec", "differential spectrum");
    FnFlags diffspec_fn;
    diffspec_fn.attach(diffspec);
    std::string row_arg;
    diffspec->add_option("--row", row_arg, "emit the CSV row for this a (hex)");
    diffspec->add_option("--out", out_path);

    auto* construct = app.add_subcommand("construct", "emit a family member's table");
    int c_k = 0, c_i = 0, c_e = 0;
    std::string c_terms, c_alpha, c_field;
    construct->add_option("--k", c_k)->required();
    construct->add_option("--i", c_i);
    construct->add_option("--e", c_e, "defaults to k");
    construct->add_option("--terms", c_terms, "g1:t1,g2:t2");
    construct->add_option("--alpha", c_alpha, "emit the (2k,k) bent lift for this alpha");
    construct->add_option("--field", c_field);
    construct->add_option("--out", out_path);

    auto* equiv = app.add_subcommand("equiv", "EA/CCZ invariance experiment");
    FnFlags equiv_fn;
    equiv_fn.attach(equiv);
    std::string mode_arg = "ea";
    int trials = 20;
    uint64_t seed = 0;
    equiv->add_option("--mode", mode_arg, "ea|ccz");
    equiv->add_option("--trials", trials);
    equiv->add_option("--seed", seed);
    equiv->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify", "theorem verifiers and campaigns");
    VerifyFlags vf;
    verify->add_option("--theorem", vf.theorem,
                       "alpha-family|apn-plateaued|binomial-diff|delta2-anomaly|"
                       "general-anomaly");
    verify->add_option("--family", vf.family, "family spec, or 'general' for the scan");
    verify->add_option("--kmax", vf.kmax, "scan bound for --family general");
    verify->add_option("--i", vf.i);
    verify->add_option("--k", vf.k);
    verify->add_option("--t2", vf.t2);
    verify->add_option("--ts", vf.ts, "comma-separated t_j list");
    vf.fn.attach(verify, /*need_fn=*/false);
    verify->add_option("--out", vf.out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*census) return run_census(census_fn, out_path);
        if (*analyze) return run_analyze(analyze_fn, out_path);
        if (*diffspec) return run_diffspec(diffspec_fn, row_arg, out_path);
        if (*construct)
            return run_construct(c_k, c_i, c_e, c_terms, c_alpha, c_field, out_path);
        if (*equiv) return run_equiv(equiv_fn, mode_arg, trials, seed, out_path);
        if (*verify) return run_verify(vf);
    } catch (const error& e) {
        std::string msg = e.what();
        std::cerr << "error: " << msg << "\n";
        bool guard = msg.find("too large") != std::string::npos ||
                     msg.find("overflow") != std::string::npos;
        return guard ? kExitGuard : kExitUsage;
    }
    return kExitUsage;
}
