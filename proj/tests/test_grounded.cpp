#include <doctest.h>

#include <random>

#include "afscope/error.hpp"
#include "afscope/formats.hpp"
#include "afscope/grounded.hpp"
#include "support/oracles.hpp"

using namespace afscope;

namespace {

std::vector<Label> labels_of(const GroundedResult& r) { return r.labelling.labels(); }

std::vector<std::int64_t> flat_lengths(const LengthMap& lens) {
  std::vector<std::int64_t> out;
  for (auto l : lens) out.push_back(l.is_finite() ? std::int64_t(l.value()) : oracle::kInf);
  return out;
}

const auto IN = Label::kIn;
const auto OUT = Label::kOut;
const auto UNDEC = Label::kUndec;

}  // namespace

TEST_CASE("single unattacked argument is IN at length 0") {
  auto r = grounded(parse_apx("arg(a)."));
  CHECK(labels_of(r) == std::vector{IN});
  CHECK(r.lengths[0] == Length(0));
  CHECK(r.undec_set.empty());
}

TEST_CASE("mutual attack is undecided") {
  auto r = grounded(parse_apx("arg(m). arg(o). att(m,o). att(o,m)."));
  CHECK(labels_of(r) == std::vector{UNDEC, UNDEC});
  CHECK_FALSE(r.lengths[0].is_finite());
  CHECK(r.undec_set == std::vector<ArgIndex>{0, 1});
}

TEST_CASE("chain a->b->c") {
  auto fw = parse_apx("arg(a). arg(b). arg(c). att(a,b). att(b,c).");
  auto r = grounded(fw);
  CHECK(labels_of(r) == std::vector{IN, OUT, IN});
  CHECK(flat_lengths(r.lengths) == std::vector<std::int64_t>{0, 1, 2});
}

TEST_CASE("odd cycle is entirely undecided") {
  auto r = grounded(parse_apx("arg(a). arg(b). arg(c). att(a,b). att(b,c). att(c,a)."));
  CHECK(r.undec_set.size() == 3);
}

TEST_CASE("self-attacking argument is UNDEC") {
  auto r = grounded(parse_apx("arg(s). att(s,s)."));
  CHECK(labels_of(r) == std::vector{UNDEC});
}

TEST_CASE("fan of unattacked attackers defeats at length 1") {
  auto fw = parse_apx("arg(v). arg(w). arg(y). arg(b). att(v,b). att(w,b). att(y,b).");
  auto r = grounded(fw);
  CHECK(flat_lengths(r.lengths) == std::vector<std::int64_t>{0, 0, 0, 1});
  CHECK(r.labelling[3] == OUT);
}

TEST_CASE("F.4 fixture: v->b->c->d->f with back edge f->b") {
  auto fw = parse_apx(
      "arg(v). arg(b). arg(c). arg(d). arg(f). "
      "att(v,b). att(b,c). att(c,d). att(d,f). att(f,b).");
  auto r = grounded(fw);
  CHECK(labels_of(r) == std::vector{IN, OUT, IN, OUT, IN});
  CHECK(flat_lengths(r.lengths) == std::vector<std::int64_t>{0, 1, 2, 3, 4});
}

TEST_CASE("lengths() validates its labelling") {
  auto fw = parse_apx("arg(a). arg(b). att(a,b).");
  CHECK_THROWS_AS(lengths(fw, Labelling(std::vector{OUT, IN})), InvalidInput);
  CHECK_THROWS_AS(lengths(fw, Labelling(std::vector{IN})), InvalidInput);
  auto ok = lengths(fw, Labelling(std::vector{IN, OUT}));
  CHECK(flat_lengths(ok) == std::vector<std::int64_t>{0, 1});
}

TEST_CASE("suspension") {
  auto fw = parse_apx("arg(m). arg(o). att(m,o). att(o,m).");
  auto om = *fw.find_attack("o", "m");
  auto mo = *fw.find_attack("m", "o");

  auto s1 = grounded_after_suspension(fw, std::vector{om});
  CHECK(labels_of(s1) == std::vector{IN, OUT});
  CHECK(flat_lengths(s1.lengths) == std::vector<std::int64_t>{0, 1});

  auto s2 = grounded_after_suspension(fw, std::vector{mo});
  CHECK(labels_of(s2) == std::vector{OUT, IN});

  CHECK(grounded_after_suspension(fw, {}) == grounded(fw));
  CHECK(fw.attacks().size() == 2);  // input untouched
  CHECK_THROWS_AS(grounded_after_suspension(fw, std::vector<AttackIndex>{7}), InvalidInput);
}

TEST_CASE("property: grounded equals the Kleene oracle, lengths equal round stamps") {
  std::mt19937 rng(1234);
  for (int i = 0; i < 400; ++i) {
    auto fw = oracle::random_framework(rng, 14);
    oracle::Graph g(fw);
    auto r = grounded(fw);
    std::size_t rounds = 0;
    auto expected = oracle::kleene_grounded(g, &rounds);
    REQUIRE(expected.size() == fw.size());
    CHECK(oracle::to_oracle(r.labelling) == expected);
    CHECK(rounds <= fw.size());

    oracle::Labels stamped;
    auto stamps = oracle::round_lengths(g, &stamped);
    CHECK(stamped == expected);
    CHECK(flat_lengths(r.lengths) == stamps);

    for (ArgIndex x = 0; x < fw.size(); ++x) {
      auto l = r.lengths[x];
      CHECK(l.is_finite() == (r.labelling[x] != UNDEC));
      if (!l.is_finite()) continue;
      CHECK(l.value() <= fw.size());
      CHECK(l.value() % 2 == (r.labelling[x] == OUT ? 1u : 0u));
      CHECK((l.value() == 0) == fw.attackers_of(x).empty());
    }
  }
}

TEST_CASE("property: suspension locality inside the undecided region") {
  std::mt19937 rng(99);
  for (int i = 0; i < 300; ++i) {
    auto fw = oracle::random_framework(rng, 12);
    auto base = grounded(fw);
    std::vector<AttackIndex> inside;
    for (AttackIndex a = 0; a < fw.attacks().size(); ++a) {
      auto [s, t] = fw.attacks()[a];
      if (base.labelling[s] == UNDEC && base.labelling[t] == UNDEC && rng() % 2) inside.push_back(a);
    }
    auto after = grounded_after_suspension(fw, inside);
    for (ArgIndex x = 0; x < fw.size(); ++x) {
      if (base.labelling[x] == UNDEC) continue;
      CHECK(after.labelling[x] == base.labelling[x]);
    }
  }
}
