#ifndef COSPROD_VERIFY_SUITE_HPP
#define COSPROD_VERIFY_SUITE_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <cosprod/precision/policy.hpp>
#include <cosprod/precision/rational.hpp>
#include <cosprod/precision/real.hpp>

namespace cosprod
{

enum class IdentityStatus { verified, inconclusive, mismatch };

std::string_view to_string(IdentityStatus status);

/// One side of an identity: an exact rational or a ball.
using Side = std::variant<Rational, Real>;

/// Both sides of an identity as computed at one precision.
struct Evaluation {
    Side lhs;
    Side rhs;
    std::string note;
};

struct SuiteOptions {
    PrecisionPolicy policy;
    unsigned long depth = 10000; ///< continued fraction depth cap
    unsigned jobs = 1;           ///< worker threads; does not affect the reports
};

struct IdentityCase {
    std::string id;
    std::string description;
    /// Whether doubling the working precision can shrink the radii.
    bool precision_limited;
    std::function<Evaluation(const PrecisionPolicy &, unsigned long depth)> evaluate;
};

struct SideText {
    std::string value;
    std::string radius;
};

struct IdentityReport {
    std::string identity_id;
    SideText lhs;
    SideText rhs;
    std::string gap;
    IdentityStatus status;
    Bits precision_bits;
    long elapsed_ms;
    std::string note;
};

/// Every identity, sorted by id.
const std::vector<IdentityCase> &identity_catalog();

/// True when `pattern` selects `id`: a glob match, or `id` starting with `pattern` followed by '-'.
bool identity_matches(std::string_view pattern, std::string_view id);

/// Status from the two sides: mismatch if disjoint, verified if they overlap
/// and both radii are at most `tolerance`, inconclusive otherwise. Two exact
/// sides are verified when equal and a mismatch otherwise.
IdentityStatus classify(const Side &lhs, const Side &rhs, const Real &tolerance);

/// Runs one identity, doubling the precision on an inconclusive result up to
/// PrecisionPolicy::max_escalation_bits when the case is precision limited.
IdentityReport run_identity(const IdentityCase &item, const SuiteOptions &options);

/// Runs the selected identities in catalog order. Throws UsageError when the
/// pattern selects nothing.
std::vector<IdentityReport> run_suite(const std::optional<std::string> &filter, const SuiteOptions &options);

/// {version, policy: {precision_bits, tolerance, depth}, reports: [...]}.
std::string reports_to_json(const std::vector<IdentityReport> &reports, const SuiteOptions &options,
                            std::string_view tolerance_text);

/// Header identity_id,lhs,rhs,gap,status,precision_bits,elapsed_ms then one row per report.
std::string reports_to_csv(const std::vector<IdentityReport> &reports);

bool any_mismatch(const std::vector<IdentityReport> &reports);

} // namespace cosprod

#endif
