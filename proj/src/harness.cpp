#include "qf/harness.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "qf/combinatorics.hpp"
#include "qf/random_forms.hpp"

namespace qf {

namespace {

[[noreturn]] void reject(const std::string& message) { throw std::invalid_argument(message); }

long long require_param(const std::string& id, const Params& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) reject(id + " requires parameter '" + key + "'");
    return it->second;
}

long long param_or(const Params& params, const std::string& key, long long fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

const std::vector<std::string>& allowed_keys(const std::string& id) {
    static const std::map<std::string, std::vector<std::string>> table = {
        {"S4", {"h", "k"}},
        {"S5", {"h", "k"}},
        {"N1", {"h", "k"}},
        {"N2", {"h", "k"}},
        {"L1", {"m", "k", "sign"}},
        {"L2", {"p", "r"}},
        {"L3", {"r", "s"}},
        {"R1", {"r", "s"}},
        {"GV", {"p", "q", "r"}},
        {"P1", {"n"}},
        {"P10", {"n", "k"}},
        {"P11", {"n", "k"}},
        {"P12", {"n", "k"}},
        {"LT", {"n", "k"}},
        {"S3EQ", {"seed", "k", "max_dim", "max_classes", "max_atoms"}},
    };
    auto it = table.find(id);
    if (it == table.end()) reject("unknown identity id '" + id + "'");
    return it->second;
}

void validate_params(const std::string& id, const Params& params) {
    const std::vector<std::string>& keys = allowed_keys(id);
    for (const auto& [key, value] : params) {
        if (key == "mode") {
            if (value != 0 && value != 1)
                reject("parameter 'mode' must be 0 (generic) or 1 (minus_one_square)");
            continue;
        }
        if (key == "expect_mismatch") {
            if (value != 0 && value != 1) reject("parameter 'expect_mismatch' must be 0 or 1");
            continue;
        }
        if (std::find(keys.begin(), keys.end(), key) == keys.end())
            reject(id + " does not take parameter '" + key + "'");
    }

    auto hyp_power_pair = [&](bool odd_k) {
        if (require_param(id, params, "h") < 1) reject(id + " requires h >= 1");
        long long k = require_param(id, params, "k");
        if (odd_k && (k < 1 || k % 2 == 0)) reject(id + " requires odd k >= 1");
        if (!odd_k && (k < 0 || k % 2 != 0)) reject(id + " requires even k >= 0");
    };

    if (id == "S4" || id == "N1") {
        hyp_power_pair(true);
    } else if (id == "S5" || id == "N2") {
        hyp_power_pair(false);
    } else if (id == "L1") {
        if (require_param(id, params, "m") < 0) reject("L1 requires m >= 0");
        if (require_param(id, params, "k") < 0) reject("L1 requires k >= 0");
        long long sign = require_param(id, params, "sign");
        if (sign != 1 && sign != -1) reject("L1 requires sign 1 or -1");
    } else if (id == "L2") {
        if (require_param(id, params, "p") < 0) reject("L2 requires p >= 0");
        if (require_param(id, params, "r") < 0) reject("L2 requires r >= 0");
    } else if (id == "L3") {
        long long r = require_param(id, params, "r");
        long long s = require_param(id, params, "s");
        if (s < 1 || s > r) reject("L3 requires 1 <= s <= r");
    } else if (id == "R1") {
        if (require_param(id, params, "r") < 1) reject("R1 requires r >= 1");
        if (require_param(id, params, "s") < 1) reject("R1 requires s >= 1");
    } else if (id == "GV") {
        for (const char* key : {"p", "q", "r"})
            if (require_param(id, params, key) < 0)
                reject(std::string("GV requires ") + key + " >= 0");
    } else if (id == "P1") {
        if (require_param(id, params, "n") < 1) reject("P1 requires n >= 1");
    } else if (id == "P10") {
        long long n = require_param(id, params, "n");
        if (n < 1 || n % 2 == 0) reject("P10 requires odd n >= 1");
        if (require_param(id, params, "k") < 0) reject("P10 requires k >= 0");
    } else if (id == "P11") {
        long long n = require_param(id, params, "n");
        if (n < 2 || n % 2 != 0) reject("P11 requires even n >= 2");
        long long k = require_param(id, params, "k");
        if (k < 1 || k % 2 == 0) reject("P11 requires odd k >= 1");
    } else if (id == "P12") {
        long long n = require_param(id, params, "n");
        if (n < 2 || n % 2 != 0) reject("P12 requires even n >= 2");
        long long k = require_param(id, params, "k");
        if (k < 0 || k % 2 != 0) reject("P12 requires even k >= 0");
    } else if (id == "LT") {
        if (require_param(id, params, "n") < 1) reject("LT requires n >= 1");
        if (require_param(id, params, "k") < 0) reject("LT requires k >= 0");
    } else if (id == "S3EQ") {
        if (require_param(id, params, "seed") < 0) reject("S3EQ requires seed >= 0");
        if (require_param(id, params, "k") < 0) reject("S3EQ requires k >= 0");
        if (param_or(params, "max_dim", 1) < 1) reject("S3EQ requires max_dim >= 1");
        if (param_or(params, "max_classes", 1) < 1) reject("S3EQ requires max_classes >= 1");
        long long atoms = param_or(params, "max_atoms", 1);
        if (atoms < 1 || atoms > 26) reject("S3EQ requires max_atoms between 1 and 26");
    }
}

FieldMode resolve_mode(const Params& params, const VerifyOptions& options, FieldMode fallback) {
    if (options.mode_override) return *options.mode_override;
    auto it = params.find("mode");
    if (it != params.end())
        return it->second == 0 ? FieldMode::Generic : FieldMode::MinusOneSquare;
    return fallback;
}

NormalForm encode_integer(const BigInt& v, FieldMode mode) {
    DiagonalForm f = v >= 0 ? DiagonalForm::single(SquareClass::identity(), v)
                            : DiagonalForm::single(SquareClass::minus_one(), -v);
    return normalize(f, mode);
}

/// The exact multiset embedded as a NormalForm without Witt reduction, so that
/// equality of the embeddings is equality of the forms.
NormalForm embed_exact(const DiagonalForm& f, FieldMode mode) {
    NormalForm nf;
    nf.mode = mode;
    nf.residue = f.entries();
    nf.hyp = 0;
    nf.dim = f.dim();
    return nf;
}

struct Sides {
    NormalForm lhs;
    NormalForm rhs;
    FieldMode mode = FieldMode::Generic;
};

Sides from_forms(const DiagonalForm& lhs, const DiagonalForm& rhs, FieldMode mode) {
    return {normalize(lhs, mode), normalize(rhs, mode), mode};
}

Sides compute_hyp_power(const std::string& id, const Params& params,
                        const VerifyOptions& options) {
    FieldMode mode = resolve_mode(params, options, FieldMode::Generic);
    long long h = params.at("h");
    long long k = params.at("k");
    DiagonalForm base = DiagonalForm::hyperbolic(h);
    bool ext = id == "S4" || id == "S5";
    DiagonalForm engine = ext ? exterior_power(base, k) : symmetric_power(base, k);
    DiagonalForm closed =
        ext ? ext_power_hyperbolic_closed(h, k) : sym_power_hyperbolic_closed(h, k);
    return from_forms(engine, closed, mode);
}

Sides compute_block_basis(const Params& params, const VerifyOptions& options) {
    FieldMode mode = resolve_mode(params, options, FieldMode::Generic);
    long long m = params.at("m");
    long long k = params.at("k");
    SquareClass c =
        params.at("sign") < 0 ? SquareClass::minus_one() : SquareClass::identity();
    DiagonalForm base = DiagonalForm::single(c, m);
    DiagonalForm engine = exterior_power(base, k).perp(symmetric_power(base, k));
    SquareClass ck = c.power(k);
    BigInt sym_count = k == 0 ? BigInt(1) : comb::binomial(m + k - 1, k);
    DiagonalForm closed = DiagonalForm::single(ck, comb::binomial(m, k))
                              .perp(DiagonalForm::single(ck, sym_count));
    return from_forms(engine, closed, mode);
}

Sides compute_numeric(const std::string& id, const Params& params,
                      const VerifyOptions& options) {
    FieldMode mode = resolve_mode(params, options, FieldMode::Generic);
    BigInt lhs;
    BigInt rhs;
    if (id == "L2") {
        comb::IdentityCheck c = comb::vandermonde_alternating(params.at("p"), params.at("r"));
        lhs = c.lhs;
        rhs = c.rhs;
    } else if (id == "L3") {
        BigInt r = params.at("r");
        BigInt s = params.at("s");
        lhs = comb::binomial(r - 1, s) + comb::binomial(r - 1, s - 1);
        rhs = comb::binomial(r, s);
    } else if (id == "R1") {
        BigInt r = params.at("r");
        BigInt s = params.at("s");
        lhs = s * comb::binomial(r, s);
        rhs = r * comb::binomial(r - 1, s - 1);
    } else {
        comb::IdentityCheck c =
            comb::generalized_vandermonde(params.at("p"), params.at("q"), params.at("r"));
        lhs = c.lhs;
        rhs = c.rhs;
    }
    return {encode_integer(lhs, mode), encode_integer(rhs, mode), mode};
}

OddDegreeSign sign_convention(const VerifyOptions& options) {
    return options.broken_p1_exponent ? OddDegreeSign::HalfCeil : OddDegreeSign::HalfFloor;
}

Sides compute_trace_shape(const Params& params, const VerifyOptions& options) {
    long long n = params.at("n");
    TraceParams tp = TraceParams::make(n);
    FieldMode mode = resolve_mode(params, options, FieldMode::Generic);

    NormalForm expected;
    expected.mode = mode;
    expected.dim = BigInt(n) * n;
    if (n % 2 != 0) {
        SquareClass sign = SquareClass::minus_one().power((n - 1) / 2).canonical(mode);
        expected.residue[sign] = 1;
        expected.hyp = (BigInt(n) * n - 1) / 2;
    } else {
        DiagonalForm qs = tp.qs();
        for (const auto& [cls, mult] : qs.entries())
            expected.residue[cls.canonical(mode)] += mult;
        expected.hyp = tp.m();
    }
    NormalForm actual = normalize(trace_form(tp, sign_convention(options)), mode);
    return {actual, expected, mode};
}

Sides compute_trace_power(const std::string& id, const Params& params,
                          const VerifyOptions& options) {
    long long n = params.at("n");
    long long k = params.at("k");
    TraceParams tp = TraceParams::make(n);
    FieldMode mode = resolve_mode(params, options, trace_required_mode(tp));
    DiagonalForm ts = trace_form(tp, sign_convention(options));
    DiagonalForm engine = id == "LT" ? exterior_power(ts, k) : symmetric_power(ts, k);
    ModedForm closed =
        id == "LT" ? ext_power_trace_closed(tp, k) : sym_power_trace_closed(tp, k);
    return from_forms(engine, closed.form, mode);
}

Sides compute_route_equivalence(const Params& params, const VerifyOptions& options) {
    FieldMode mode = resolve_mode(params, options, FieldMode::Generic);
    RandomFormSpec spec;
    spec.max_atoms = static_cast<unsigned>(param_or(params, "max_atoms", spec.max_atoms));
    spec.max_classes = static_cast<unsigned>(param_or(params, "max_classes", spec.max_classes));
    spec.max_dim = static_cast<unsigned>(param_or(params, "max_dim", spec.max_dim));
    DiagonalForm f = random_form(static_cast<std::uint64_t>(params.at("seed")), spec);
    long long k = params.at("k");

    DiagonalForm sym_conv = symmetric_power(f, k);
    DiagonalForm sym_via_ext = symmetric_power_via_exterior(f, k);

    std::vector<std::pair<DiagonalForm, DiagonalForm>> routes;
    routes.emplace_back(sym_conv, sym_via_ext);
    try {
        routes.emplace_back(sym_conv, naive_symmetric_power(f, k, options.naive_cap));
    } catch (const std::domain_error&) {
    }
    try {
        routes.emplace_back(exterior_power(f, k), naive_exterior_power(f, k, options.naive_cap));
    } catch (const std::domain_error&) {
    }
    for (const auto& [first, second] : routes)
        if (!(first == second)) return {embed_exact(first, mode), embed_exact(second, mode), mode};
    return {normalize(sym_conv, mode), normalize(sym_via_ext, mode), mode};
}

Sides compute_cell(const std::string& id, const Params& params, const VerifyOptions& options) {
    if (id == "S4" || id == "S5" || id == "N1" || id == "N2")
        return compute_hyp_power(id, params, options);
    if (id == "L1") return compute_block_basis(params, options);
    if (id == "L2" || id == "L3" || id == "R1" || id == "GV")
        return compute_numeric(id, params, options);
    if (id == "P1") return compute_trace_shape(params, options);
    if (id == "P10" || id == "P11" || id == "P12" || id == "LT")
        return compute_trace_power(id, params, options);
    return compute_route_equivalence(params, options);
}

std::vector<long long> range_with_parity(long long lo, long long hi, int parity) {
    std::vector<long long> out;
    for (long long v = lo; v <= hi; ++v)
        if (v % 2 == parity) out.push_back(v);
    return out;
}

std::vector<long long> range_inclusive(long long lo, long long hi) {
    std::vector<long long> out;
    for (long long v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

using Overrides = std::map<std::string, std::vector<long long>>;

std::vector<long long> pick(const Overrides& overrides, const std::string& key,
                            std::vector<long long> fallback) {
    auto it = overrides.find(key);
    return it == overrides.end() ? std::move(fallback) : it->second;
}

std::vector<Params> cells_for(const std::string& id, const SuiteConfig& config,
                              const Overrides& overrides) {
    std::vector<Params> cells;
    auto degrees = [&]() {
        std::vector<long long> all = config.odd_degrees;
        all.insert(all.end(), config.even_degrees.begin(), config.even_degrees.end());
        std::sort(all.begin(), all.end());
        return all;
    };

    if (id == "S4" || id == "S5") {
        bool odd = id == "S4";
        for (long long h : pick(overrides, "h", range_inclusive(1, config.ext_hyp_h_max)))
            for (long long k : pick(overrides, "k",
                                    range_with_parity(odd ? 1 : 0, 2 * h + 2 - odd, odd ? 1 : 0)))
                cells.push_back({{"h", h}, {"k", k}});
    } else if (id == "N1" || id == "N2") {
        bool odd = id == "N1";
        for (long long h : pick(overrides, "h", range_inclusive(1, config.sym_hyp_h_max)))
            for (long long k : pick(overrides, "k",
                                    range_with_parity(odd ? 1 : 0, config.sym_hyp_k_max, odd)))
                cells.push_back({{"h", h}, {"k", k}});
    } else if (id == "L1") {
        for (long long m : pick(overrides, "m", range_inclusive(1, config.unit_power_m_max)))
            for (long long k : pick(overrides, "k", range_inclusive(0, config.unit_power_k_max)))
                for (long long sign : pick(overrides, "sign", {1, -1}))
                    cells.push_back({{"m", m}, {"k", k}, {"sign", sign}});
    } else if (id == "L2") {
        for (long long p : pick(overrides, "p", range_inclusive(1, config.comb_p_max)))
            for (long long r : pick(overrides, "r", range_inclusive(0, config.comb_r_max)))
                cells.push_back({{"p", p}, {"r", r}});
    } else if (id == "L3" || id == "R1") {
        for (long long r : pick(overrides, "r", range_inclusive(1, config.comb_r_max)))
            for (long long s : pick(overrides, "s", range_inclusive(1, r)))
                cells.push_back({{"r", r}, {"s", s}});
    } else if (id == "GV") {
        for (long long p : pick(overrides, "p", range_inclusive(1, config.gv_pq_max)))
            for (long long q : pick(overrides, "q", range_inclusive(1, config.gv_pq_max)))
                for (long long r : pick(overrides, "r", range_inclusive(1, config.comb_r_max)))
                    cells.push_back({{"p", p}, {"q", q}, {"r", r}});
    } else if (id == "P1") {
        for (long long n : pick(overrides, "n", degrees())) cells.push_back({{"n", n}});
    } else if (id == "P10") {
        for (long long n : pick(overrides, "n", config.odd_degrees))
            for (long long k : pick(overrides, "k", range_inclusive(0, config.sym_trace_odd_k_max)))
                cells.push_back({{"n", n}, {"k", k}});
    } else if (id == "P11") {
        for (long long n : pick(overrides, "n", config.even_degrees))
            for (long long k :
                 pick(overrides, "k", range_with_parity(1, config.sym_trace_even_k_max, 1)))
                cells.push_back({{"n", n}, {"k", k}});
    } else if (id == "P12") {
        for (long long n : pick(overrides, "n", config.even_degrees))
            for (long long k :
                 pick(overrides, "k", range_with_parity(0, config.sym_trace_even_k_max, 0)))
                cells.push_back({{"n", n}, {"k", k}});
        if (config.include_negative && overrides.empty())
            cells.push_back({{"n", 4}, {"k", 4}, {"mode", 0}, {"expect_mismatch", 1}});
    } else if (id == "LT") {
        for (long long n : pick(overrides, "n", config.ext_trace_degrees)) {
            long long k_hi = std::min(n * n + 1, config.ext_trace_k_max);
            for (long long k : pick(overrides, "k", range_inclusive(0, k_hi)))
                cells.push_back({{"n", n}, {"k", k}});
        }
    } else if (id == "S3EQ") {
        std::vector<long long> seeds;
        for (unsigned i = 0; i < config.random_samples; ++i)
            seeds.push_back(static_cast<long long>(config.seed + i));
        for (long long seed : pick(overrides, "seed", seeds))
            for (long long k : pick(overrides, "k", range_inclusive(0, config.random_k_max)))
                for (long long dim : pick(overrides, "max_dim", {config.random_max_dim}))
                    for (long long classes :
                         pick(overrides, "max_classes", {config.random_max_classes}))
                        for (long long atoms :
                             pick(overrides, "max_atoms", {config.random_max_atoms}))
                            cells.push_back({{"seed", seed},
                                             {"k", k},
                                             {"max_dim", dim},
                                             {"max_classes", classes},
                                             {"max_atoms", atoms}});
    }
    return cells;
}

}  // namespace

IdentityReport verify(const std::string& identity_id, const Params& params,
                      const VerifyOptions& options) {
    validate_params(identity_id, params);

    IdentityReport report;
    report.identity_id = identity_id;
    report.params = params;

    auto start = std::chrono::steady_clock::now();
    Sides sides = compute_cell(identity_id, params, options);
    report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::steady_clock::now() - start);

    report.mode = sides.mode;
    report.lhs_nf = std::move(sides.lhs);
    report.rhs_nf = std::move(sides.rhs);
    bool equal = report.lhs_nf == report.rhs_nf;
    bool expect_mismatch = param_or(params, "expect_mismatch", 0) == 1;
    report.passed = equal != expect_mismatch;
    return report;
}

const std::vector<std::string>& registered_identities() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (std::string_view id : kClosedFormIdentityIds) out.emplace_back(id);
        out.emplace_back("S3EQ");
        return out;
    }();
    return ids;
}

std::vector<Params> identity_cells(const std::string& identity_id, const SuiteConfig& config,
                                   const std::map<std::string, std::vector<long long>>& overrides) {
    const std::vector<std::string>& keys = allowed_keys(identity_id);
    for (const auto& [key, values] : overrides) {
        if (std::find(keys.begin(), keys.end(), key) == keys.end())
            reject(identity_id + " does not take parameter '" + key + "'");
        if (values.empty()) reject("empty value list for parameter '" + key + "'");
    }
    std::vector<Params> cells = cells_for(identity_id, config, overrides);
    for (const Params& cell : cells) validate_params(identity_id, cell);
    return cells;
}

SuiteResult run_suite(const SuiteConfig& config) {
    const std::vector<std::string> ids =
        config.identities ? *config.identities : registered_identities();

    VerifyOptions options;
    options.broken_p1_exponent = config.broken_p1_exponent;
    options.naive_cap = config.naive_cap;

    SuiteResult result;
    for (const std::string& id : ids)
        for (const Params& params : identity_cells(id, config))
            result.reports.push_back(verify(id, params, options));

    std::sort(result.reports.begin(), result.reports.end(),
              [](const IdentityReport& a, const IdentityReport& b) {
                  if (a.identity_id != b.identity_id) return a.identity_id < b.identity_id;
                  if (a.params != b.params) return a.params < b.params;
                  return static_cast<int>(a.mode) < static_cast<int>(b.mode);
              });
    for (const IdentityReport& report : result.reports)
        if (!report.passed) result.all_passed = false;
    return result;
}

}  // namespace qf
