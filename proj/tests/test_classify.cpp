#include <doctest.h>

#include <random>

#include "afscope/classify.hpp"
#include "afscope/error.hpp"
#include "afscope/formats.hpp"
#include "afscope/grounded.hpp"
#include "support/oracles.hpp"

using namespace afscope;

namespace {

EdgeClass class_of(const Framework& fw, const EdgeClassification& c, const char* s, const char* t) {
  return *c.classes.at(*fw.find_attack(s, t));
}

EdgeClassification classify_grounded(const Framework& fw) {
  auto r = grounded(fw);
  return classify_edges(fw, r.labelling, r.lengths);
}

}  // namespace

TEST_CASE("chain: primary then failed") {
  auto fw = parse_apx("arg(a). arg(b). arg(c). att(a,b). att(b,c).");
  auto c = classify_grounded(fw);
  CHECK(class_of(fw, c, "a", "b") == EdgeClass::kPrimary);
  CHECK(class_of(fw, c, "b", "c") == EdgeClass::kFailed);
}

TEST_CASE("attack between two OUT arguments is a blunder") {
  auto fw = parse_apx("arg(a). arg(b). arg(c). att(a,b). att(a,c). att(b,c).");
  auto c = classify_grounded(fw);
  CHECK(class_of(fw, c, "a", "b") == EdgeClass::kPrimary);
  CHECK(class_of(fw, c, "a", "c") == EdgeClass::kPrimary);
  CHECK(class_of(fw, c, "b", "c") == EdgeClass::kBlunder);
}

TEST_CASE("F.4 fixture: back edge f->b is secondary") {
  auto fw = parse_apx(
      "arg(v). arg(b). arg(c). arg(d). arg(f). "
      "att(v,b). att(b,c). att(c,d). att(d,f). att(f,b).");
  auto c = classify_grounded(fw);
  CHECK(class_of(fw, c, "v", "b") == EdgeClass::kPrimary);
  CHECK(class_of(fw, c, "b", "c") == EdgeClass::kFailed);
  CHECK(class_of(fw, c, "c", "d") == EdgeClass::kPrimary);
  CHECK(class_of(fw, c, "d", "f") == EdgeClass::kFailed);
  CHECK(class_of(fw, c, "f", "b") == EdgeClass::kSecondary);
}

TEST_CASE("mutual attack: contested under grounded") {
  auto fw = parse_apx("arg(m). arg(o). att(m,o). att(o,m).");
  auto c = classify_grounded(fw);
  CHECK(class_of(fw, c, "m", "o") == EdgeClass::kContested);
  CHECK(class_of(fw, c, "o", "m") == EdgeClass::kContested);
}

TEST_CASE("mutual attack: stable S1 with suspension-derived lengths") {
  auto fw = parse_apx("arg(m). arg(o). att(m,o). att(o,m).");
  auto resolved = grounded_after_suspension(fw, std::vector{*fw.find_attack("o", "m")});
  auto c = classify_edges(fw, resolved.labelling, resolved.lengths);
  CHECK(class_of(fw, c, "m", "o") == EdgeClass::kPrimary);
  CHECK(class_of(fw, c, "o", "m") == EdgeClass::kFailed);
}

TEST_CASE("undecided attacker of an OUT argument is moot") {
  auto fw = parse_apx("arg(a). arg(b). arg(s). att(a,b). att(s,s). att(s,b).");
  auto c = classify_grounded(fw);
  CHECK(class_of(fw, c, "s", "b") == EdgeClass::kMoot);
  CHECK(class_of(fw, c, "s", "s") == EdgeClass::kContested);
}

TEST_CASE("inconsistent inputs are rejected") {
  auto fw = parse_apx("arg(a). arg(b). att(a,b).");
  auto r = grounded(fw);
  CHECK_THROWS_AS(classify_edges(fw, Labelling(std::vector{Label::kIn, Label::kIn}), r.lengths),
                  InvalidInput);
  LengthMap bad_parity{Length(0), Length(2)};
  CHECK_THROWS_AS(classify_edges(fw, r.labelling, bad_parity), InvalidInput);
  LengthMap finite_undec{Length(0), Length::infinite()};
  CHECK_THROWS_AS(classify_edges(fw, r.labelling, finite_undec), InvalidInput);
  CHECK_THROWS_AS(classify_edges(fw, r.labelling, r.lengths, std::vector<AttackIndex>{3}),
                  InvalidInput);
}

TEST_CASE("suspended attacks are left unclassified") {
  auto fw = parse_apx("arg(m). arg(o). att(m,o). att(o,m).");
  auto om = *fw.find_attack("o", "m");
  auto r = grounded_after_suspension(fw, std::vector{om});
  auto c = classify_edges(fw, r.labelling, r.lengths, std::vector{om});
  CHECK(c.is_suspended(om));
  CHECK(class_of(fw, c, "m", "o") == EdgeClass::kPrimary);
}

TEST_CASE("property: primary witnesses, length steps, provenance") {
  std::mt19937 rng(77);
  for (int i = 0; i < 300; ++i) {
    auto fw = oracle::random_framework(rng, 12);
    auto r = grounded(fw);
    auto c = classify_edges(fw, r.labelling, r.lengths);
    const auto& attacks = fw.attacks();

    std::vector<bool> has_primary(fw.size(), false);
    std::vector<bool> drop(attacks.size(), false);
    for (AttackIndex a = 0; a < attacks.size(); ++a) {
      REQUIRE(c.classes[a].has_value());
      auto [x, y] = attacks[a];
      switch (*c.classes[a]) {
        case EdgeClass::kPrimary:
          has_primary[y] = true;
          CHECK(r.lengths[y].value() == r.lengths[x].value() + 1);
          break;
        case EdgeClass::kSecondary:
          CHECK(r.lengths[y].value() + 1 <= r.lengths[x].value());
          drop[a] = true;
          break;
        case EdgeClass::kBlunder:
          drop[a] = true;
          break;
        default:
          break;
      }
    }
    for (ArgIndex x = 0; x < fw.size(); ++x)
      if (r.labelling[x] == Label::kOut) CHECK(has_primary[x]);

    // Dropping blunders and secondary attacks keeps the decided part intact.
    auto reduced = oracle::Graph(fw, drop);
    oracle::Labels reduced_labels;
    auto reduced_len = oracle::round_lengths(reduced, &reduced_labels);
    for (ArgIndex x = 0; x < fw.size(); ++x) {
      if (r.labelling[x] == Label::kUndec) continue;
      CHECK(reduced_labels[x] == static_cast<oracle::Lab>(r.labelling[x]));
      CHECK(reduced_len[x] == std::int64_t(r.lengths[x].value()));
    }
  }
}
