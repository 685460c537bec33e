#include <doctest.h>

#include <random>

#include "afscope/error.hpp"
#include "afscope/formats.hpp"
#include "afscope/json_output.hpp"
#include "afscope/layout.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace afscope;

namespace {

Layout layout_of(const Framework& fw) { return layered_layout(fw, grounded(fw)); }

json::Json layout_doc(const Framework& fw) {
  return json::Json::parse(fixtures::render_base(fw).layout_json);
}

}  // namespace

TEST_CASE("chain layers follow lengths") {
  auto fw = parse_apx("arg(a). arg(b). arg(c). att(a,b). att(b,c).");
  auto l = layout_of(fw);
  CHECK(l.layer == std::vector<std::optional<std::uint32_t>>{0u, 1u, 2u});
  CHECK(l.band.empty());
  CHECK(l.order == std::vector<std::vector<ArgIndex>>{{0}, {1}, {2}});
  CHECK(l.display_name == std::vector<std::string>{"a.0", "b.1", "c.2"});
}

TEST_CASE("mutual attack sits in the band") {
  auto fw = parse_apx("arg(m). arg(o). att(m,o). att(o,m).");
  auto l = layout_of(fw);
  CHECK(l.band == std::vector<ArgIndex>{0, 1});
  CHECK(l.order.empty());
  CHECK(l.display_name == std::vector<std::string>{"m", "o"});
}

TEST_CASE("single argument") {
  auto fw = parse_apx("arg(a).");
  auto l = layout_of(fw);
  CHECK(l.layer[0] == 0u);
  CHECK(l.display_name[0] == "a.0");
  auto dot = fixtures::render_base(fw).dot;
  CHECK(dot.find("subgraph layer_0") != std::string::npos);
  CHECK(dot.find("\"a\" [label=\"a.0\", fillcolor=\"#4C8BF5\"]") != std::string::npos);
}

TEST_CASE("barycenter orders a layer by its lower neighbours") {
  // Layer 0: p, q (declaration order). r is attacked by q, s by p, so the
  // barycenter pass puts s before r even though r is declared first.
  auto fw = parse_apx("arg(p). arg(q). arg(r). arg(s). att(q,r). att(p,s).");
  auto l = layout_of(fw);
  REQUIRE(l.order.size() == 2);
  CHECK(l.order[0] == std::vector<ArgIndex>{0, 1});
  CHECK(l.order[1] == std::vector<ArgIndex>{3, 2});
}

TEST_CASE("dot styling of the chain") {
  auto dot = fixtures::render_base(parse_apx("arg(a). arg(b). arg(c). att(a,b). att(b,c).")).dot;
  CHECK(dot.find("subgraph layer_2") != std::string::npos);
  CHECK(dot.find("\"a\" -> \"b\" [class=\"primary\", color=\"#4C8BF5\", style=solid]") !=
        std::string::npos);
  CHECK(dot.find("\"b\" -> \"c\" [class=\"failed\", color=\"#F5A94C\", style=solid]") !=
        std::string::npos);
  CHECK(dot.find("\"b\" [label=\"b.1\", fillcolor=\"#F5A94C\"]") != std::string::npos);
}

TEST_CASE("dot overlay: resolved nodes light and dashed, critical edge red") {
  auto fw = parse_apx("arg(m). arg(o). att(m,o). att(o,m).");
  auto dot = fixtures::render_overlay(fw, 0, 0).dot;
  CHECK(dot.find("\"m\" [label=\"m\", fillcolor=\"#4C8BF566\", style=\"filled,dashed\"]") !=
        std::string::npos);
  CHECK(dot.find("\"o\" [label=\"o\", fillcolor=\"#F5A94C66\", style=\"filled,dashed\"]") !=
        std::string::npos);
  CHECK(dot.find("\"o\" -> \"m\" [class=\"suspended\", color=\"#D62828\", style=bold]") !=
        std::string::npos);
  CHECK(dot.find("subgraph undec_band") != std::string::npos);
}

TEST_CASE("layout json") {
  auto single = layout_doc(parse_apx("arg(a)."));
  CHECK(single["layers"]["a"] == 0);
  CHECK(single["band"].empty());

  auto mutual = parse_apx("arg(m). arg(o). att(m,o). att(o,m).");
  auto doc = layout_doc(mutual);
  CHECK(doc["band"] == json::Json::array({"m", "o"}));
  CHECK(doc["lengths"]["m"] == "inf");
  for (const auto& e : doc["edges"]) {
    CHECK(e["class"] == "contested");
    CHECK(e["suspended"] == false);
  }
  CHECK(doc["resolved"].empty());

  auto overlay = json::Json::parse(fixtures::render_overlay(mutual, 0, 0).layout_json);
  CHECK(overlay["resolved"] == json::Json::array({"m", "o"}));
  CHECK(overlay["labels"]["m"] == "in");
  CHECK(overlay["edges"][1]["suspended"] == true);
}

TEST_CASE("annotations travel in the layout json and the dot tooltip") {
  auto fw = parse_json(
      R"({"arguments":[{"id":"m","annotation":{"text":"mere pursuit is not enough","url":"https://example.org/m"}},{"id":"o"}],"attacks":[["m","o"],["o","m"]]})");
  auto rendered = fixtures::render_base(fw);
  auto doc = json::Json::parse(rendered.layout_json);
  CHECK(doc["annotations"]["m"]["text"] == "mere pursuit is not enough");
  CHECK_FALSE(doc["annotations"].contains("o"));
  CHECK(rendered.dot.find("tooltip=\"mere pursuit is not enough\", URL=\"https://example.org/m\"") !=
        std::string::npos);
}

TEST_CASE("property: layers equal lengths and primary edges climb one layer") {
  std::mt19937 rng(31337);
  for (int i = 0; i < 200; ++i) {
    auto fw = oracle::random_framework(rng, 12);
    auto g = grounded(fw);
    auto l = layered_layout(fw, g);
    auto cls = classify_edges(fw, g.labelling, g.lengths);
    std::size_t placed = 0;
    for (ArgIndex x = 0; x < fw.size(); ++x) {
      CHECK(l.layer[x].has_value() == g.lengths[x].is_finite());
      if (l.layer[x]) CHECK(*l.layer[x] == g.lengths[x].value());
    }
    for (std::size_t k = 0; k < l.order.size(); ++k)
      for (ArgIndex x : l.order[k]) {
        CHECK(l.layer[x] == k);
        ++placed;
      }
    CHECK(placed + l.band.size() == fw.size());
    CHECK(l.band == g.undec_set);
    for (AttackIndex a = 0; a < fw.attacks().size(); ++a)
      if (cls.classes[a] == EdgeClass::kPrimary)
        CHECK(*l.layer[fw.attacks()[a].target] == *l.layer[fw.attacks()[a].source] + 1);

    CHECK(export_dot(fw, g, cls) == export_dot(fw, g, cls));
  }
}

TEST_CASE("goldens") {
  for (const auto& f : fixtures::all()) {
    auto fw = parse_apx(f.apx);
    auto r = fixtures::render_base(fw);
    CHECK_MESSAGE(fixtures::matches_golden(AFSCOPE_GOLDEN_DIR, f.name + ".dot", r.dot), f.name);
    CHECK_MESSAGE(fixtures::matches_golden(AFSCOPE_GOLDEN_DIR, f.name + ".layout.json", r.layout_json),
                  f.name);
  }
  auto overlay = fixtures::render_overlay(parse_apx(fixtures::all()[1].apx), 0, 0);
  CHECK(fixtures::matches_golden(AFSCOPE_GOLDEN_DIR, "mutual.s0.d0.dot", overlay.dot));
  CHECK(fixtures::matches_golden(AFSCOPE_GOLDEN_DIR, "mutual.s0.d0.layout.json", overlay.layout_json));
}

TEST_CASE("what-if views") {
  auto mutual = parse_apx(fixtures::all()[1].apx);
  auto om = *mutual.find_attack("o", "m");
  // Suspending the critical set by hand reproduces the explained overlay.
  auto by_hand = fixtures::render(mutual, what_if_view(mutual, std::vector{om}));
  auto explained = fixtures::render_overlay(mutual, 0, 0);
  CHECK(by_hand.dot == explained.dot);
  CHECK(by_hand.layout_json == explained.layout_json);

  auto nothing = fixtures::render(mutual, what_if_view(mutual, {}));
  CHECK(nothing.layout_json == fixtures::render_base(mutual).layout_json);
  CHECK(nothing.dot == fixtures::render_base(mutual).dot);

  // Suspending a decided attack relayers the whole chain.
  auto chain = parse_apx(fixtures::all()[0].apx);
  auto v = what_if_view(chain, std::vector{*chain.find_attack("a", "b")});
  CHECK_FALSE(v.overlay);
  auto doc = json::Json::parse(v.layout_json(chain));
  CHECK(doc["layers"]["b"] == 0);
  CHECK(doc["labels"]["c"] == "out");
  CHECK(doc["edges"][0]["suspended"] == true);
}

TEST_CASE("solution view rejects a missing critical set") {
  auto mutual = parse_apx(fixtures::all()[1].apx);
  CHECK_THROWS_AS(solution_view(mutual, explain(mutual, 0), 1), OutOfRange);
}

TEST_CASE("dot escapes quotes and newlines in annotations") {
  auto fw = parse_json(
      R"({"arguments":[{"id":"a","annotation":{"text":"say \"no\"\nthen leave"}}]})");
  auto dot = fixtures::render_base(fw).dot;
  CHECK(dot.find(R"(tooltip="say \"no\"\nthen leave")") != std::string::npos);
}
