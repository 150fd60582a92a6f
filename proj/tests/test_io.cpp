#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <functional>
#include <random>

#include "lch/dga_io.hpp"
#include "lch/report.hpp"
#include "support.hpp"

using namespace lch;

namespace {

Error error_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e;
    }
    FAIL("no error raised");
    return Error(Errc::InvalidParams, "");
}

}  // namespace

TEST_CASE("parse_dga examples") {
    const auto p = parse_dga("gen a 3\ngen b 1\ndiff a = b.b\ndiff b = 0\n");
    CHECK(p == testing::cp2());
    const auto x = parse_dga("gen x 1");
    CHECK(x.differential("x").is_zero());
    const auto named = parse_dga("# header\ndga cp2  # name\n\ngen a 3\ngen b 1\ndiff a=b . b\n");
    CHECK(named.name() == "cp2");
    CHECK(named == testing::cp2());
    const auto unit = parse_dga("gen u 0\ngen c 1\ndiff c = 1 + u.u\n");
    CHECK(unit.differential("c") == Polynomial::one() + Polynomial(Word{"u", "u"}));
    const auto dipped = parse_dga("gen b[m2] 1\ngen b[s2] 3\ndiff b[s2] = b[m2].b[m2]\n");
    CHECK(dipped.size() == 2);
}

TEST_CASE("parse_dga errors") {
    CHECK(error_of([] { parse_dga("gen a 3\ndiff z = a"); }).code() == Errc::UnknownGenerator);
    const auto syntax = error_of([] { parse_dga("gen a 3\ngen b 1\ndiff a = b..b\n"); });
    CHECK(syntax.code() == Errc::SyntaxError);
    CHECK(std::string(syntax.what()).find("line 3") != std::string::npos);
    CHECK(std::string(syntax.what()).find("column") != std::string::npos);
    CHECK(error_of([] { parse_dga("gen a x"); }).code() == Errc::SyntaxError);
    CHECK(error_of([] { parse_dga("gen a"); }).code() == Errc::SyntaxError);
    CHECK(error_of([] { parse_dga("generator a 1"); }).code() == Errc::SyntaxError);
    CHECK(error_of([] { parse_dga("gen a 1\ndiff a 0"); }).code() == Errc::SyntaxError);
    CHECK(error_of([] { parse_dga("gen a 1\ngen a 2"); }).code() == Errc::DuplicateId);
    CHECK(error_of([] { parse_dga("gen a 1\ndiff a = 0\ndiff a = 0"); }).code() == Errc::SyntaxError);
    CHECK(error_of([] { parse_dga("gen 1a 1"); }).code() == Errc::SyntaxError);
    CHECK(error_of([] { parse_dga("gen a 3\ngen b 1\ndiff a = b"); }).code() == Errc::InhomogeneousDifferential);
    CHECK(error_of([] { parse_dga("gen a 3\ndiff a = q.q"); }).code() == Errc::UnknownGeneratorInDifferential);
}

TEST_CASE("parse_polynomial") {
    CHECK(parse_polynomial("0").is_zero());
    CHECK(parse_polynomial("1") == Polynomial::one());
    CHECK(parse_polynomial("a.b + b.a") == Polynomial::from_words({Word{"a", "b"}, Word{"b", "a"}}));
    CHECK(parse_polynomial("a + a").is_zero());
    CHECK(error_of([] { parse_polynomial("a +"); }).code() == Errc::SyntaxError);
    CHECK(error_of([] { parse_polynomial(""); }).code() == Errc::SyntaxError);
}

TEST_CASE("serialize round trip") {
    CHECK(serialize(testing::cp2()) == "gen a 3\ngen b 1\ndiff a = b.b\ndiff b = 0\n");
    std::mt19937_64 rng(20240611);
    for (int round = 0; round < 100; ++round) {
        auto p = testing::random_presentation(rng, 5, -1, 3, 3);
        if (round % 3 == 0) p.set_name("random" + std::to_string(round));
        const auto text = serialize(p);
        const auto q = parse_dga(text);
        CHECK(q == p);
        CHECK(q.name() == p.name());
        CHECK(serialize(q) == text);
    }
}

TEST_CASE("classes") {
    const auto c = parse_classes("a diagram\nb minimum # comment\n\nh handle\nb[m1] dip_upper\n");
    CHECK(c.size() == 4);
    CHECK(c.at("a") == GeneratorClass::Diagram);
    CHECK(c.at("b[m1]") == GeneratorClass::DipUpper);
    CHECK(error_of([] { parse_classes("a upper"); }).code() == Errc::SyntaxError);
    CHECK(error_of([] { parse_classes("a diagram minimum"); }).code() == Errc::SyntaxError);
    CHECK(error_of([] { parse_classes("a diagram\na minimum"); }).code() == Errc::SyntaxError);
}

TEST_CASE("path tables") {
    const auto t = parse_path_table("endpoints b 1 2\npair 1 2 0 0 0 0 0 2 forward\npair 2 1 1 0 0 0 1 0 reverse\n");
    CHECK(t.endpoints.at("b") == std::pair{1, 2});
    CHECK(k_function(t.pairs, 1, 2) == 2);
    CHECK(k_function(t.pairs, 2, 1) == 1 - 1);
    CHECK(error_of([] { parse_path_table("pair 1 2 0 0 0 0 0 2 sideways"); }).code() == Errc::SyntaxError);
    CHECK(error_of([] { parse_path_table("endpoints b 1"); }).code() == Errc::SyntaxError);
}

TEST_CASE("files and reports") {
    const auto dir = std::filesystem::temp_directory_path() / "lch_test_io";
    std::filesystem::create_directories(dir);
    const auto path = dir / "cp2.dga";
    write_text_file_atomic(path, serialize(testing::cp2()));
    CHECK(parse_dga(read_text_file(path)) == testing::cp2());
    CHECK(error_of([&] { read_text_file(dir / "missing.dga"); }).code() == Errc::InvalidBundle);

    Report r;
    r.command = "check";
    r.add_stage({"d-squared", Status::Pass, {"ok"}});
    CHECK(r.status == Status::Pass);
    r.add_stage({"taxonomy", Status::Fail, {"bad"}});
    CHECK(r.status == Status::Fail);
    r.data["presentation"] = presentation_json(testing::cp2());
    write_report(dir / "report.json", r);
    const auto j = nlohmann::json::parse(read_text_file(dir / "report.json"));
    CHECK(j["schema"] == kReportSchema);
    CHECK(j["status"] == "fail");
    CHECK(j["stages"].size() == 2);
    CHECK(j["stages"][1]["name"] == "taxonomy");
    CHECK(j["data"]["presentation"]["generators"][0]["id"] == "a");
    CHECK(j["data"]["presentation"]["generators"][0]["differential"] == "b.b");
    CHECK(render_text(r).find("taxonomy") != std::string::npos);
    std::filesystem::remove_all(dir);
}
