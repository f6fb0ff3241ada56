#include <doctest.h>

#include "chh/report.hpp"
#include "chh/series.hpp"

using namespace chh;

namespace {

RunConfig basisConfig() {
    RunConfig cfg;
    cfg.command = "basis";
    cfg.s = 1;
    cfg.charge = 1;
    cfg.maxDegree = 2;
    cfg.format = "json";
    return cfg;
}

}  // namespace

TEST_CASE("basis report matches the golden JSON and is byte-stable") {
    const RunConfig cfg = basisConfig();
    const std::string a = renderJson(runBasis(cfg));
    const std::string b = renderJson(runBasis(cfg));
    CHECK(a == b);
    CHECK(a ==
          R"({"config":{"charge":1,"command":"basis","format":"json","max_degree":2,"s":1},)"
          R"("convention":"absolute","dims":{"0":"1","1":"1","2":"1"},"warnings":[]})");
}

TEST_CASE("hh report carries both conventions in charge 2") {
    RunConfig cfg;
    cfg.command = "hh";
    cfg.s = 2;
    cfg.r = 1;
    cfg.charge = 2;
    cfg.maxDegree = 9;
    cfg.method = "formula";
    cfg.format = "json";
    const Report report = runHH(cfg);
    CHECK(report.convention == "comodule");
    REQUIRE(report.series.has_value());
    // The emitted comodule polynomial is the U(2) example polynomial.
    Series absolute(9);
    for (const auto& [d, v] : report.dims) absolute.setCoeff(d, Rational::fromString(v));
    CHECK(mul(*report.series, psB2(9)) == absolute);
    CHECK(*report.series == Series::polynomial({1, 3, 5, 10, 15, 12, 7, 6, 4, 1}, 9));

    // complex and closed-form methods agree byte-for-byte.
    RunConfig viaComplex = cfg;
    viaComplex.method = "complex";
    RunConfig viaClosed = cfg;
    viaClosed.method = "closed-form";
    const std::string base = renderJson(report);
    auto stripMethod = [](std::string s, const std::string& m) {
        const std::string needle = "\"method\":\"" + m + "\"";
        const size_t at = s.find(needle);
        REQUIRE(at != std::string::npos);
        return s.replace(at, needle.size(), "\"method\":*");
    };
    CHECK(stripMethod(renderJson(runHH(viaComplex)), "complex") == stripMethod(base, "formula"));
    CHECK(stripMethod(renderJson(runHH(viaClosed)), "closed-form") == stripMethod(base, "formula"));
}

TEST_CASE("poincare reports") {
    RunConfig cfg;
    cfg.command = "poincare";
    cfg.target = "hom-u2";
    cfg.s = 3;
    cfg.r = 1;
    cfg.format = "json";
    const Report report = runPoincare(cfg);
    REQUIRE(report.series.has_value());
    CHECK(report.series->truncation() == 13);
    CHECK(report.convention == "comodule");

    RunConfig rep = cfg;
    rep.target = "rep-f2-u2";
    rep.s = 2;
    rep.r = 0;
    const Report repReport = runPoincare(rep);
    CHECK(*repReport.series == Series::polynomial({1, 2, 1}, 2));

    RunConfig bad = rep;
    bad.s = 3;
    CHECK_THROWS_AS(runPoincare(bad), UsageError);

    RunConfig clipped = cfg;
    clipped.maxDegree = 5;
    clipped.maxDegreeSet = true;
    CHECK_THROWS_AS(runPoincare(clipped), TruncationError);
}

TEST_CASE("usage guards") {
    RunConfig cfg;
    cfg.command = "hh";
    cfg.charge = 3;
    CHECK_THROWS_AS(runHH(cfg), UsageError);
    cfg.charge = 1;
    cfg.method = "closed-form";
    CHECK_THROWS_AS(runHH(cfg), UsageError);
}
