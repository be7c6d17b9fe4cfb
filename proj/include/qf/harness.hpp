#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qf/closed_forms.hpp"
#include "qf/normal_form.hpp"
#include "qf/power.hpp"

namespace qf {

using Params = std::map<std::string, long long>;

/**
 * Outcome of one verification cell. For regular cells passed <=> lhs_nf == rhs_nf;
 * cells with params["expect_mismatch"] = 1 invert that (they assert a documented
 * failure, e.g. a mode requirement). For the purely numeric identities the two
 * sides are encoded as v x <1> (v >= 0) resp. (-v) x <-1>.
 */
struct IdentityReport {
    std::string identity_id;
    Params params;
    FieldMode mode = FieldMode::Generic;
    bool passed = false;
    NormalForm lhs_nf;
    NormalForm rhs_nf;
    std::chrono::nanoseconds elapsed{0};

    bool same_outcome(const IdentityReport& rhs) const {
        return identity_id == rhs.identity_id && params == rhs.params && mode == rhs.mode &&
               passed == rhs.passed && lhs_nf == rhs.lhs_nf && rhs_nf == rhs.rhs_nf;
    }
};

struct VerifyOptions {
    std::optional<FieldMode> mode_override;
    /// Evaluate odd-degree trace forms with the inconsistent ceil(n/2) sign exponent.
    bool broken_p1_exponent = false;
    unsigned long long naive_cap = kDefaultEnumerationCap;
};

/**
 * Run one identity cell. Unknown ids and parameter-domain violations throw
 * std::invalid_argument naming the constraint.
 */
IdentityReport verify(const std::string& identity_id, const Params& params,
                      const VerifyOptions& options = {});

/// Sweep ranges; the defaults reproduce the full acceptance configuration.
struct SuiteConfig {
    /// Ids to sweep; nullopt means every registered id, an empty list means none.
    std::optional<std::vector<std::string>> identities;

    long long sym_hyp_h_max = 13;
    long long sym_hyp_k_max = 10;
    long long ext_hyp_h_max = 12;
    std::vector<long long> odd_degrees = {1, 3, 5, 7, 9};
    std::vector<long long> even_degrees = {2, 4, 6, 8};
    std::vector<long long> ext_trace_degrees = {1, 2, 3, 4, 5, 6, 7, 8};
    long long sym_trace_odd_k_max = 8;
    long long sym_trace_even_k_max = 7;
    long long ext_trace_k_max = 8;
    long long unit_power_m_max = 20;
    long long unit_power_k_max = 12;
    long long comb_p_max = 30;
    long long comb_r_max = 30;
    long long gv_pq_max = 20;
    unsigned random_samples = 200;
    std::uint64_t seed = 42;
    long long random_k_max = 8;
    long long random_max_dim = 40;
    long long random_max_classes = 8;
    long long random_max_atoms = 4;
    unsigned long long naive_cap = 100'000;
    /// Include the documented expected-failure cell (P12 at n=4, k=4 in Generic).
    bool include_negative = true;
    bool broken_p1_exponent = false;
};

struct SuiteResult {
    std::vector<IdentityReport> reports;
    bool all_passed = true;
};

/// Deterministic: reports ordered by (identity_id, params, mode); elapsed excluded
/// from any comparison. An empty id list yields an empty, vacuously passing result.
SuiteResult run_suite(const SuiteConfig& config = {});

/// Registered ids: the closed-form identity ids plus the route-equivalence id "S3EQ".
const std::vector<std::string>& registered_identities();

/**
 * Cells an id contributes to a sweep. `overrides` pins parameters to explicit value
 * lists (as the CLI flags do); pinned values are validated, unpinned ones come from
 * the config defaults.
 */
std::vector<Params> identity_cells(const std::string& identity_id, const SuiteConfig& config,
                                   const std::map<std::string, std::vector<long long>>& overrides = {});

}  // namespace qf
