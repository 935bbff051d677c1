#include <doctest.h>

#include <regex>
#include <set>

#include <cosprod/precision/constants.hpp>
#include <cosprod/precision/errors.hpp>
#include <cosprod/verify/arguments.hpp>
#include <cosprod/verify/compute.hpp>
#include <cosprod/verify/suite.hpp>

using namespace cosprod;

namespace
{

SuiteOptions options(unsigned jobs = 1)
{
    return SuiteOptions{PrecisionPolicy(256, "1e-30"), 10000, jobs};
}

std::string strip_elapsed(const std::string &json)
{
    return std::regex_replace(json, std::regex("\"elapsed_ms\": [0-9]+"), "\"elapsed_ms\": 0");
}

} // namespace

TEST_SUITE("verify")
{
    TEST_CASE("status classification follows overlap and radius")
    {
        const Real tol = Real::from_decimal("1e-30", 128);
        const Real a = Real::from_rational(Rational(1, 3), 256);
        CHECK(classify(a, Rational(1, 3), tol) == IdentityStatus::verified);
        CHECK(classify(a, Rational(1, 2), tol) == IdentityStatus::mismatch);
        const Real wide = a.add_error(BigFloat(64, 1));
        CHECK(classify(wide, Rational(1, 2), tol) == IdentityStatus::inconclusive);
        CHECK(classify(Rational(2), Rational(2), tol) == IdentityStatus::verified);
        CHECK(classify(Rational(2), Rational(3), tol) == IdentityStatus::mismatch);
    }

    TEST_CASE("identity patterns")
    {
        CHECK(identity_matches("eq20", "eq20"));
        CHECK_FALSE(identity_matches("eq2", "eq20"));
        CHECK(identity_matches("thm2.3", "thm2.3-n4"));
        CHECK(identity_matches("thm2.*-n1", "thm2.6-n1"));
        CHECK_FALSE(identity_matches("thm2.3", "thm2.4-n0"));
    }

    TEST_CASE("catalog ids are unique and sorted")
    {
        const auto &catalog = identity_catalog();
        std::set<std::string> ids;
        for (std::size_t i = 0; i < catalog.size(); ++i) {
            CHECK(ids.insert(catalog[i].id).second);
            if (i > 0) {
                CHECK(catalog[i - 1].id < catalog[i].id);
            }
        }
        for (const char *id : {"eq20", "thm2.4-n0", "thm2.6-n1", "thm2.6-n2", "thm2.1", "eq18-pi/4", "thm2.3-n8"}) {
            CHECK(ids.count(id) == 1);
        }
    }

    TEST_CASE("eq20 is verified with zero gap")
    {
        const auto reports = run_suite(std::string("eq20"), options());
        REQUIRE(reports.size() == 1);
        CHECK(reports[0].status == IdentityStatus::verified);
        CHECK(reports[0].gap == "0");
        CHECK(reports[0].lhs.value == "1/3");
    }

    TEST_CASE("pi squared series with n = 0 is verified at 256 bits")
    {
        const auto reports = run_suite(std::string("thm2.4-n0"), options());
        REQUIRE(reports.size() == 1);
        CHECK(reports[0].status == IdentityStatus::verified);
        CHECK(reports[0].precision_bits == 256);
    }

    TEST_CASE("tanh/tan continued fraction report records the reading")
    {
        SuiteOptions o = options();
        o.depth = 4001;
        const auto reports = run_suite(std::string("thm2.6-n1"), o);
        REQUIRE(reports.size() == 1);
        CHECK(reports[0].status != IdentityStatus::mismatch);
        CHECK(reports[0].note.find("resolved reading: leading (2n+1)^2+1, signed value") != std::string::npos);
    }

    TEST_CASE("unknown patterns are usage errors")
    {
        CHECK_THROWS_AS(run_suite(std::string("eq999"), options()), UsageError);
    }

    TEST_CASE("reports are deterministic across runs and thread counts")
    {
        const std::optional<std::string> filter("eq1*");
        const SuiteOptions one = options(1);
        const SuiteOptions four = options(4);
        const std::string a = reports_to_json(run_suite(filter, one), one, "1e-30");
        const std::string b = reports_to_json(run_suite(filter, four), four, "1e-30");
        CHECK(strip_elapsed(a) == strip_elapsed(b));
        CHECK(a.find("\"policy\"") != std::string::npos);
        const std::string csv = reports_to_csv(run_suite(std::string("eq20"), one));
        CHECK(csv.rfind("identity_id,lhs,rhs,gap,status,precision_bits,elapsed_ms\neq20,1/3 +/- 0,1/3 +/- 0,0,verified,256,",
                        0) == 0);
    }

    TEST_CASE("escalation stops at the cap for precision-limited cases")
    {
        SuiteOptions o = options();
        o.policy = PrecisionPolicy(256, "1e-200");
        const auto reports = run_suite(std::string("eq18-x1/3"), o);
        REQUIRE(reports.size() == 1);
        CHECK(reports[0].status == IdentityStatus::verified);
        CHECK(reports[0].precision_bits == 1024);
    }

    TEST_CASE("point arguments")
    {
        const Real quarter = parse_real_argument("pi/4", 128);
        CHECK(quarter.overlaps(ldexp(pi(128), -2)));
        CHECK(parse_real_argument("3*pi/10", 128).overlaps(pi(128) * 3 / 10));
        CHECK(parse_real_argument("1/3", 128).contains(Rational(1, 3)));
        CHECK(parse_real_argument("0.25", 128).contains(Rational(1, 4)));
        CHECK(parse_real_argument("-pi", 128).overlaps(-pi(128)));
        CHECK_THROWS_AS(parse_real_argument("pie", 128), UsageError);
        CHECK_THROWS_AS(parse_real_argument("x", 128), UsageError);
        CHECK_THROWS_AS(parse_count("-1", "n"), UsageError);
    }

    TEST_CASE("compute examples")
    {
        const PrecisionPolicy p(128, "1e-30");
        CHECK(compute({"euler_number", "19"}, p, 100).value == "221930581/4");
        CHECK(compute({"bernoulli", "20"}, p, 100).value == "-174611/330");
        // Published digits of pi.
        const std::string digits = "3.14159265358979323846264338327950288";
        CHECK(compute({"pi"}, p, 100).value.rfind(digits, 0) == 0);
        CHECK_THROWS_AS(compute({"nothing"}, p, 100), UsageError);
        CHECK_THROWS_AS(compute({"hurwitz", "3"}, p, 100), UsageError);
        CHECK_THROWS_AS(compute({"tanh_series", "2"}, p, 100), UsageError);
        for (const ComputeTarget &t : compute_targets()) {
            CHECK_FALSE(t.description.empty());
        }
    }
}
