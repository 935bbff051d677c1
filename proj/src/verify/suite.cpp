#include <cosprod/verify/suite.hpp>

#include <atomic>
#include <chrono>
#include <fnmatch.h>
#include <sstream>
#include <thread>

#include <json.hpp>

#include <cosprod/precision/errors.hpp>

namespace cosprod
{

namespace
{

Bits side_bits(const Side &side)
{
    return std::holds_alternative<Real>(side) ? std::get<Real>(side).precision() : 0;
}

Real as_real(const Side &side, Bits bits)
{
    if (const Real *r = std::get_if<Real>(&side)) {
        return *r;
    }
    return Real::from_rational(std::get<Rational>(side), bits);
}

SideText describe(const Side &side)
{
    if (const Rational *q = std::get_if<Rational>(&side)) {
        return SideText{q->to_string(), "0"};
    }
    const Real &r = std::get<Real>(side);
    return SideText{r.mid_string(), r.rad_string()};
}

std::string gap_text(const Side &lhs, const Side &rhs)
{
    if (std::holds_alternative<Rational>(lhs) && std::holds_alternative<Rational>(rhs)) {
        Rational d = std::get<Rational>(lhs) - std::get<Rational>(rhs);
        return (d.sign() < 0 ? -d : d).to_string();
    }
    const Bits bits = std::max(side_bits(lhs), side_bits(rhs)) + 64;
    const BigFloat gap = interval_gap(as_real(lhs, bits), as_real(rhs, bits));
    return gap.is_zero() ? "0" : gap.to_scientific(6);
}

bool radius_within(const Side &side, const Real &tolerance)
{
    const Real *r = std::get_if<Real>(&side);
    return r == nullptr || radius_at_most(*r, tolerance);
}

} // namespace

std::string_view to_string(IdentityStatus status)
{
    switch (status) {
        case IdentityStatus::verified:
            return "verified";
        case IdentityStatus::inconclusive:
            return "inconclusive";
        case IdentityStatus::mismatch:
            return "mismatch";
    }
    return "?";
}

bool identity_matches(std::string_view pattern, std::string_view id)
{
    const std::string p(pattern);
    const std::string s(id);
    if (fnmatch(p.c_str(), s.c_str(), 0) == 0) {
        return true;
    }
    return s.size() > p.size() && s.compare(0, p.size(), p) == 0 && s[p.size()] == '-';
}

IdentityStatus classify(const Side &lhs, const Side &rhs, const Real &tolerance)
{
    if (std::holds_alternative<Rational>(lhs) && std::holds_alternative<Rational>(rhs)) {
        return std::get<Rational>(lhs) == std::get<Rational>(rhs) ? IdentityStatus::verified : IdentityStatus::mismatch;
    }
    const Bits bits = std::max(side_bits(lhs), side_bits(rhs)) + 64;
    if (!as_real(lhs, bits).overlaps(as_real(rhs, bits))) {
        return IdentityStatus::mismatch;
    }
    return radius_within(lhs, tolerance) && radius_within(rhs, tolerance) ? IdentityStatus::verified
                                                                           : IdentityStatus::inconclusive;
}

IdentityReport run_identity(const IdentityCase &item, const SuiteOptions &options)
{
    using Clock = std::chrono::steady_clock;
    const auto start = Clock::now();
    PrecisionPolicy policy = options.policy;
    IdentityReport report{item.id, {}, {}, "", IdentityStatus::inconclusive, policy.working_bits(), 0, ""};
    for (;;) {
        report.precision_bits = policy.working_bits();
        try {
            const Evaluation e = item.evaluate(policy, options.depth);
            report.lhs = describe(e.lhs);
            report.rhs = describe(e.rhs);
            report.gap = gap_text(e.lhs, e.rhs);
            report.status = classify(e.lhs, e.rhs, policy.target_tolerance());
            report.note = e.note;
        } catch (const std::exception &error) {
            report.lhs = report.rhs = SideText{"", ""};
            report.gap = "";
            report.status = IdentityStatus::inconclusive;
            report.note = std::string("evaluation failed: ") + error.what();
        }
        const Bits next = policy.working_bits() * 2;
        if (report.status != IdentityStatus::inconclusive || !item.precision_limited ||
            next > PrecisionPolicy::max_escalation_bits) {
            break;
        }
        policy = policy.with_bits(next);
    }
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    return report;
}

std::vector<IdentityReport> run_suite(const std::optional<std::string> &filter, const SuiteOptions &options)
{
    std::vector<const IdentityCase *> selected;
    for (const IdentityCase &item : identity_catalog()) {
        if (!filter || identity_matches(*filter, item.id)) {
            selected.push_back(&item);
        }
    }
    if (selected.empty()) {
        throw UsageError("no identity matches '" + filter.value_or("") + "'");
    }

    std::vector<IdentityReport> reports(selected.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < selected.size(); i = next++) {
            reports[i] = run_identity(*selected[i], options);
        }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(selected.size())));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) {
        pool.emplace_back(worker);
    }
    worker();
    for (std::thread &t : pool) {
        t.join();
    }
    return reports;
}

std::string reports_to_json(const std::vector<IdentityReport> &reports, const SuiteOptions &options,
                            std::string_view tolerance_text)
{
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["version"] = "1.0";
    doc["policy"] = {{"precision_bits", options.policy.working_bits()},
                     {"tolerance", std::string(tolerance_text)},
                     {"depth", options.depth}};
    ordered_json list = ordered_json::array();
    for (const IdentityReport &r : reports) {
        list.push_back({{"identity_id", r.identity_id},
                        {"lhs", {{"value", r.lhs.value}, {"radius", r.lhs.radius}}},
                        {"rhs", {{"value", r.rhs.value}, {"radius", r.rhs.radius}}},
                        {"gap", r.gap},
                        {"status", std::string(to_string(r.status))},
                        {"precision_bits", r.precision_bits},
                        {"elapsed_ms", r.elapsed_ms},
                        {"note", r.note}});
    }
    doc["reports"] = std::move(list);
    return doc.dump(2) + "\n";
}

std::string reports_to_csv(const std::vector<IdentityReport> &reports)
{
    const auto side = [](const SideText &s) { return s.value + " +/- " + s.radius; };
    std::ostringstream out;
    out << "identity_id,lhs,rhs,gap,status,precision_bits,elapsed_ms\n";
    for (const IdentityReport &r : reports) {
        out << r.identity_id << ',' << side(r.lhs) << ',' << side(r.rhs) << ',' << r.gap << ','
            << to_string(r.status) << ',' << r.precision_bits << ',' << r.elapsed_ms << '\n';
    }
    return out.str();
}

bool any_mismatch(const std::vector<IdentityReport> &reports)
{
    for (const IdentityReport &r : reports) {
        if (r.status == IdentityStatus::mismatch) {
            return true;
        }
    }
    return false;
}

} // namespace cosprod
