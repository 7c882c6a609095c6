#include "toric/maximality.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace toric;

TEST_CASE("projective space of dimension four")
{
    const auto rep = run_check(projective_fan(4));
    CHECK(rep.verdict == Verdict::maximal_certified);
    CHECK(rep.betti_real_sum == 5);
    CHECK(rep.e2_sum == 5);
    CHECK(rep.fan.cone_counts == std::vector<std::size_t>{1, 5, 10, 10, 5});
    CHECK(rep.pages.size() == 7);
}

TEST_CASE("fourth power of the projective line")
{
    const auto p1 = projective_fan(1);
    const auto sq = product_fan(p1, p1);
    const auto rep = run_check(product_fan(sq, sq));
    CHECK(rep.verdict == Verdict::maximal_certified);
    CHECK(rep.betti_real == std::vector<std::size_t>{1, 4, 6, 4, 1});
    CHECK(rep.e2_sum == 16);
}

TEST_CASE("low dimensions are certified")
{
    for (const auto& f : {projective_fan(3), hirzebruch_fan(2), weighted_p112_fan(), point_fan()}) {
        const auto rep = run_check(f);
        CHECK(rep.verdict == Verdict::maximal_certified);
        CHECK(rep.betti_real_sum <= rep.e2_sum);
    }
}

TEST_CASE("page bound in the report")
{
    const auto f = projective_fan(2);
    CHECK(run_check(f, 1).pages.size() == 2);
    CHECK(run_check(f, 6).pages.size() == 7);
    CHECK(run_check(f, 1).verdict == Verdict::maximal_certified);
}

TEST_CASE("reports serialise canonically")
{
    const auto rep = run_check(hirzebruch_fan(1));
    const auto text = report_to_json(rep);
    CHECK(text.find("\"verdict\": \"maximal_certified\"") != std::string::npos);
    CHECK(report_from_json(text) == rep);
    CHECK(report_to_json(report_from_json(text)) == text);
    CHECK(report_to_json(run_check(hirzebruch_fan(1))) == text);
    // Keys in sorted order.
    const auto b = text.find("\"betti_real\""), d = text.find("\"degenerate_at_one\""), v = text.find("\"verdict\"");
    CHECK(b < d);
    CHECK(d < v);

    auto path = std::filesystem::temp_directory_path() / "toric_report_test.json";
    emit_report(rep, path.string());
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == text);
    std::filesystem::remove(path);
    CHECK_THROWS(emit_report(rep, "/nonexistent-dir/x/report.json"));
}

TEST_CASE("verdict strings")
{
    auto rep = run_check(projective_fan(1));
    rep.degenerate_at_one = false;
    rep.verdict = Verdict::undetermined;
    const auto text = report_to_json(rep);
    CHECK(text.find("\"verdict\": \"undetermined\"") != std::string::npos);
    CHECK(report_from_json(text).verdict == Verdict::undetermined);
    CHECK_THROWS_AS(verdict_from_string("not_maximal"), std::invalid_argument);
}

TEST_CASE("corpus generation")
{
    const auto one = generate_corpus(1, 1, 1);
    REQUIRE(one.size() == 1);
    CHECK(fan_to_json(one[0].fan) == fan_to_json(projective_fan(1)));

    const auto a = generate_corpus(7, 50, 4), b = generate_corpus(7, 50, 4);
    REQUIRE(a.size() == 50);
    std::set<std::string> distinct;
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].name == b[i].name);
        CHECK(fan_to_json(a[i].fan) == fan_to_json(b[i].fan));
        CHECK(a[i].fan.n == 4);
        CHECK(validate_fan(a[i].fan).empty());
        CHECK(is_complete(a[i].fan));
        distinct.insert(fan_to_json(a[i].fan));
    }
    CHECK(distinct.size() == 50);
    CHECK(fan_to_json(generate_corpus(8, 50, 4).back().fan) != fan_to_json(a.back().fan));

    CHECK_THROWS_AS(generate_corpus(1, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(generate_corpus(1, 1, 7), std::invalid_argument);
    CHECK_THROWS_AS(generate_corpus(1, 0, 2), std::invalid_argument);
}

TEST_CASE("base fans")
{
    CHECK(base_fans(1).size() == 1);
    CHECK(base_fans(2).size() == 7);
    // projective(3), P1 x dim-2 builtins, P1^3
    CHECK(base_fans(3).size() == 1 + 6 + 1);
    for (const auto& e : base_fans(4)) {
        CHECK(e.fan.n == 4);
        CHECK(validate_fan(e.fan).empty());
    }
}
