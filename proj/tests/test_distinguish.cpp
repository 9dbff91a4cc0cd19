#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "openpi/distinguish.hpp"
#include "openpi/sat.hpp"
#include "support.hpp"

using namespace openpi;
using namespace testing_support;

namespace {
FormulaPair D(const char* p, const char* q) {
  auto r = distinguish_pair(P(p), P(q));
  REQUIRE(std::holds_alternative<FormulaPair>(r));
  return std::get<FormulaPair>(r);
}
void check_verified(const char* p, const char* q, const FormulaPair& f) {
  CHECK(f.verified);
  CHECK(sat_top(P(p), f.left));
  CHECK(!sat_top(P(q), f.left));
  CHECK(sat_top(P(q), f.right));
  CHECK(!sat_top(P(p), f.right));
}
}  // namespace

TEST_CASE("base case with the identity") {
  auto f = D("[x=y]tau", "tau");
  check_verified("[x=y]tau", "tau", f);
  CHECK(alpha_eq(f.left, F("[tau](x = y)")));
  CHECK(alpha_eq(f.right, F("<tau>tt")));
}

TEST_CASE("base case under a substitution") {
  auto f = D("[x=y]tau", "0");
  check_verified("[x=y]tau", "0", f);
  CHECK(alpha_eq(f.left, F("x = y => <tau>tt")));
  CHECK(alpha_eq(f.right, F("[tau]ff")));
}

TEST_CASE("inductive case") {
  const char* p = "tau.[x=y]tau + tau + tau.tau";
  const char* q = "tau + tau.tau";
  auto f = D(p, q);
  check_verified(p, q, f);
  CHECK(alpha_eq(f.left, F("<tau>((x = y => <tau>tt) /\\ [tau](x = y))")));
  CHECK(alpha_eq(f.right, F("[tau]([tau]ff \\/ <tau>tt)")));
}

TEST_CASE("private names") {
  const char* p = "nu x. a!x.a(y).tau";
  const char* q = "nu x. a!x.a(y).[x=y]tau";
  auto f = D(p, q);
  check_verified(p, q, f);
  CHECK(alpha_eq(f.left, F("<a!(x)><a(y)><tau>tt")));
  CHECK(alpha_eq(f.right, F("[a!(x)][a(y)][tau](x = y)")));
}

TEST_CASE("several guarded summands give a disjunctive postcondition") {
  auto f = D("[x=y]tau + [w=z]tau", "tau");
  check_verified("[x=y]tau + [w=z]tau", "tau", f);
  CHECK(alpha_eq(f.left, F("[tau](x = y \\/ w = z)")));
}

TEST_CASE("label equalities") {
  // a!b leads, so the formula for a!a is the follower one.
  auto f = D("a!b", "a!a");
  check_verified("a!b", "a!a", f);
  CHECK(alpha_eq(f.left, F("<a!b>tt")));
  CHECK(alpha_eq(f.right, F("[a!b](a = b)")));
}

TEST_CASE("bisimilar pairs are reported") {
  auto r = distinguish_pair(P("tau + tau"), P("tau"));
  CHECK(std::holds_alternative<Bisimilar>(r));
}

TEST_CASE("a suboptimal strategy still yields a distinguishing pair") {
  // Force a strategy that leads under {y->x} although the identity suffices.
  Process l = P("[x=y]tau");
  Process r = P("tau.[x=y]tau");
  Verdict v = open_bisim_top(l, r);
  REQUIRE(!v.bisimilar);
  auto f = distinguish(v.strategy);
  CHECK(f.verified);
}

TEST_CASE("simplify applies identity laws") {
  CHECK(alpha_eq(simplify(F("a = b /\\ tt /\\ a = b")), F("a = b")));
  CHECK(alpha_eq(simplify(F("[tau](ff \\/ x = y)")), F("[tau](x = y)")));
}

TEST_CASE("a pair that does not distinguish is rejected") {
  Verdict v = open_bisim_top(P("[x=y]tau"), P("tau"));
  REQUIRE(v.strategy);
  FormulaPair bad{F("tt"), F("tt"), false};
  CHECK(!verify_pair(v.strategy->left, v.strategy->right, v.strategy->history, bad));
}
