#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "openpi/bisim.hpp"
#include "openpi/sat.hpp"
#include "support.hpp"

using namespace openpi;
using namespace testing_support;

namespace {
Verdict V(const char* p, const char* q) { return open_bisim_top(P(p), P(q)); }
}  // namespace

TEST_CASE("bisimilar pairs carry a checkable relation") {
  for (auto [p, q] : std::vector<std::pair<const char*, const char*>>{
           {"nu x. a!x", "nu x. a!x.[x=a]tau"},
           {"tau + tau", "tau"},
           {"a!b | c(x)", "a!b.c(x) + c(x).a!b + [a=c]tau"},
           {"nu z. (a!z | a(x).x!x)", "tau.nu z. z!z + nu z. a!z.a(x).x!x + a(x).nu z.(a!z | x!x)"},
           {"[x=x]tau", "tau"},
           {"a(y).[x=y]tau + a(y)", "a(y) + a(y).[x=y]tau + a(y).[y=x]tau"},
       }) {
    Verdict v = V(p, q);
    CHECK_MESSAGE(v.bisimilar, p, " vs ", q);
    std::string why;
    CHECK_MESSAGE(check_open_bisimulation(v.relation, &why), why);
    CHECK(!v.relation.empty());
  }
}

TEST_CASE("non-bisimilar pairs carry a valid strategy") {
  for (auto [p, q] : std::vector<std::pair<const char*, const char*>>{
           {"[x=y]tau", "tau"},
           {"[x=y]tau", "0"},
           {"tau.[x=y]tau + tau + tau.tau", "tau + tau.tau"},
           {"a(x).tau + a(x) + a(x).[x=a]tau", "a(x).tau + a(x)"},
           {"nu x. a!x.a(y).tau", "nu x. a!x.a(y).[x=y]tau"},
           {"a!a", "a!b"},
           {"a!b | c(x)", "a!b.c(x) + c(x).a!b"},
           {"nu x. a!x.a(y).[x=y]tau + nu x. a!x.a(y)", "nu x. a!x.a(y)"},
       }) {
    Verdict v = V(p, q);
    CHECK_MESSAGE(!v.bisimilar, p, " vs ", q);
    REQUIRE(v.strategy);
    std::string why;
    CHECK_MESSAGE(validate_strategy(v.strategy, &why), why);
  }
}

TEST_CASE("base strategy shapes") {
  Verdict v = V("[x=y]tau", "tau");
  REQUIRE(v.strategy);
  CHECK(v.strategy->leader == Side::Right);
  CHECK(v.strategy->sigma.is_identity());
  CHECK(v.strategy->responses.empty());

  Verdict w = V("[x=y]tau", "0");
  REQUIRE(w.strategy);
  CHECK(w.strategy->leader == Side::Left);
  CHECK(w.strategy->sigma == Substitution{{N("y"), N("x")}});
}

TEST_CASE("inductive strategy has one subtree per response") {
  Verdict v = V("tau.[x=y]tau + tau + tau.tau", "tau + tau.tau");
  REQUIRE(v.strategy);
  CHECK(v.strategy->leader == Side::Left);
  CHECK(v.strategy->label == Label::tau());
  CHECK(v.strategy->responses.size() == 2);
}

TEST_CASE("open bisimilarity is symmetric and reflexive") {
  for (const char* p : {"a(x).[x=a]tau + nu z. a!z", "tau.[x=y]tau + tau", "nu b. a!b.a(x).[x=b]x!x"}) {
    CHECK(V(p, p).bisimilar);
  }
  CHECK(V("tau + tau.tau", "tau.[x=y]tau + tau + tau.tau").bisimilar ==
        V("tau.[x=y]tau + tau + tau.tau", "tau + tau.tau").bisimilar);
}

TEST_CASE("private names") {
  CHECK(!V("nu b. a!b.a(x).[x=b]x!x", "nu b. a!b.a(x).x!x").bisimilar);
  CHECK(V("nu b. a!b.[a=b]tau", "nu b. a!b").bisimilar);
}

TEST_CASE("history is checked") {
  CHECK_THROWS_AS(open_bisim(P("a!b"), P("0"), History::parse("a^i")), IllFormedJudgement);
}
