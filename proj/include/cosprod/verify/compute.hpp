#ifndef COSPROD_VERIFY_COMPUTE_HPP
#define COSPROD_VERIFY_COMPUTE_HPP

#include <string>
#include <utility>
#include <vector>

#include <cosprod/precision/policy.hpp>

namespace cosprod
{

/// Printed value plus provenance lines (strategy, terms, depth).
struct ComputeResult {
    std::string value;
    std::vector<std::pair<std::string, std::string>> details;
};

struct ComputeTarget {
    std::string name;
    std::string arguments;
    std::string description;
};

/// Every target accepted by compute().
const std::vector<ComputeTarget> &compute_targets();

/// Evaluates `words[0]` with arguments `words[1..]`.
///
/// Exact results print as "n" or "n/d"; balls print as "mid +/- radius".
/// Throws UsageError on an unknown target or malformed arguments.
ComputeResult compute(const std::vector<std::string> &words, const PrecisionPolicy &policy, unsigned long depth);

} // namespace cosprod

#endif
