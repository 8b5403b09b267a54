#include <doctest.h>

#include <random>
#include <sstream>

#include "subsel/errors.hpp"
#include "subsel/io.hpp"

using namespace subsel;
using namespace subsel::io;

TEST_CASE("csv parsing") {
    auto s = parse_points_csv("# header\n0,1\n\n 1 , 0 \r\n0.5,0.5\n");
    REQUIRE(s.size() == 3);
    CHECK(s.dim() == 2);
    CHECK(s[1][0] == 1.0);
    CHECK(s[2][1] == 0.5);

    auto neg = parse_points_csv("1,2\n3,4\n", true);
    CHECK(neg[0][0] == -1.0);
    CHECK(neg[1][1] == -4.0);

    try {
        parse_points_csv("0,1\n1,0\n1,2,3\n");
        FAIL("ragged row accepted");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_points_csv("0,abc\n"), InputError);
    CHECK_THROWS_AS(parse_points_csv("0,nan\n"), InputError);
    CHECK_THROWS_AS(parse_points_csv("1\n"), InputError);
    CHECK_THROWS_AS(parse_points_csv("# nothing\n"), InputError);
}

TEST_CASE("json parsing") {
    auto a = parse_points_json("[[0,1],[1,0]]");
    auto b = parse_points_json(R"({"points": [[0,1],[1,0]]})");
    REQUIRE(a.size() == 2);
    CHECK(b[1][0] == 1.0);
    CHECK(parse_points_json("[[2,3]]", true)[0][1] == -3.0);
    CHECK_THROWS_AS(parse_points_json("[[0,1],[1]]"), InputError);
    CHECK_THROWS_AS(parse_points_json("[[0,\"x\"]]"), InputError);
    CHECK_THROWS_AS(parse_points_json("{"), InputError);
    CHECK_THROWS_AS(parse_points_json("[]"), InputError);
}

TEST_CASE("csv round trip is exact") {
    std::mt19937_64 gen(1);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    PointSet s(3);
    for (int i = 0; i < 200; ++i) s.push_back(std::vector<double>{u(gen), u(gen) * 1e-9, 1.0 / (i + 1)});
    std::ostringstream out;
    write_points_csv(out, s, false, "some header");
    auto back = parse_points_csv(out.str());
    REQUIRE(back.size() == s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t d = 0; d < 3; ++d) CHECK(back[i][d] == s[i][d]);

    std::ostringstream negated;
    write_points_csv(negated, s, true);
    auto twice = parse_points_csv(negated.str(), true);
    CHECK(twice[7][0] == s[7][0]);
}

TEST_CASE("reference points") {
    auto r = parse_reference("1.1,1.1");
    CHECK(r.dim() == 2);
    CHECK(r[0] == 1.1);
    CHECK_THROWS_AS(parse_reference("1.1,x"), InvalidArgument);

    CHECK(auto_reference(2, 9)[0] == 1.125);
    CHECK(auto_reference(2, 9).dim() == 2);
    auto r5 = auto_reference(5, 9);
    CHECK(r5.dim() == 5);
    CHECK(r5[4] == 2.0);
    // Three objectives, k = 10: lattice H = 3 has exactly 10 points.
    CHECK(auto_reference(3, 10)[0] == doctest::Approx(1.0 + 1.0 / 3.0));
}

TEST_CASE("run record round trip") {
    RunRecord rec;
    rec.spec.indicator = Indicator::hv;
    rec.spec.strategy = Strategy::ga;
    rec.spec.k = 3;
    rec.spec.reference = ReferencePoint{1.1, 1.1};
    rec.spec.seed = 77;
    rec.provenance = "points.csv";
    rec.maximize = true;
    rec.result.mask = SubsetMask::from_indices(6, std::vector<std::size_t>{5, 0, 2});
    rec.result.indicator_value = 0.123456789012345678;
    rec.result.history = {0.1, 0.12, 0.123456789012345678};
    rec.result.seed = 77;
    rec.result.rng = "mt19937_64";
    rec.selected = PointSet{{-0.1, -0.9}, {-0.5, -0.5}, {-0.9, -0.1}};
    rec.wall_time = 0.25;
    rec.tool_version = tool_version();

    const auto text = run_record_json(rec);
    CHECK(text.find("\"mask\"") != std::string::npos);
    auto back = parse_run_record(text);
    CHECK(back.result.mask.indices() == std::vector<std::size_t>{0, 2, 5});
    CHECK(back.result.indicator_value == rec.result.indicator_value);
    CHECK(back.result.history == rec.result.history);
    CHECK(back.result.history.size() == 3);
    CHECK(back.spec.indicator == Indicator::hv);
    CHECK(back.spec.strategy == Strategy::ga);
    CHECK(back.spec.k == 3);
    REQUIRE(back.spec.reference.has_value());
    CHECK((*back.spec.reference)[1] == 1.1);
    CHECK(back.spec.seed == 77);
    CHECK(back.maximize);
    CHECK(back.provenance == "points.csv");
    CHECK(back.selected[2][0] == -0.9);
    CHECK(back.result.rng == "mt19937_64");

    CHECK_THROWS_AS(parse_run_record("{\"version\": 99}"), InputError);
    CHECK_THROWS_AS(parse_run_record("not json"), InputError);
}

TEST_CASE("pipeline documents") {
    auto doc = parse_pipeline(R"({"seed": 5, "stages": [
        {"strategy": "distance", "k": 100},
        {"strategy": "ga", "indicator": "igdplus", "k": 9, "mu": 50, "generations": 10}]})");
    REQUIRE(doc.stages.size() == 2);
    CHECK(doc.seed == 5u);
    CHECK(doc.stages[0].strategy == Strategy::distance);
    CHECK(doc.stages[0].k == 100);
    CHECK(doc.stages[1].indicator == Indicator::igd_plus);
    CHECK(doc.stages[1].ga.population == 50);
    CHECK(doc.stages[1].ga.generations == 10);
    CHECK_THROWS_AS(parse_pipeline(R"({"stages": []})"), InputError);
    CHECK_THROWS_AS(parse_pipeline(R"({"stages": [{"strategy": "magic", "k": 3}]})"), InputError);
}

TEST_CASE("svg plots") {
    PointSet s{{0, 1}, {0.5, 0.5}, {1, 0}};
    std::vector<std::size_t> sel{1};
    auto svg = render_svg(s, sel, {"demo", {}});
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("series-all") != std::string::npos);
    CHECK(svg.find("series-selected") != std::string::npos);
    CHECK(svg.find("demo") != std::string::npos);

    PointSet s3{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
    auto svg3 = render_svg(s3, sel, {});
    std::size_t panels = 0;
    for (auto pos = svg3.find("class=\"panel\""); pos != std::string::npos; pos = svg3.find("class=\"panel\"", pos + 1))
        ++panels;
    CHECK(panels == 3);
}
