#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "openpi/sat.hpp"
#include "support.hpp"

using namespace openpi;
using namespace testing_support;

namespace {
bool S(const char* p, const char* h, const char* f) { return sat(P(p), History::parse(h), F(f)); }
bool T(const char* p, const char* f) { return sat_top(P(p), F(f)); }
}  // namespace

TEST_CASE("boxes quantify over respectful substitutions") {
  CHECK(S("[x=y]tau", "x^i.y^i", "[tau](x = y)"));
  CHECK(!S("tau", "x^i.y^i", "[tau](x = y)"));
  CHECK(!S("tau", "x^i.y^i", "~[tau](x = y)"));
}

TEST_CASE("excluded middle fails") {
  CHECK(!T("a!b | c(x)", "<tau>tt"));
  CHECK(!T("a!b | c(x)", "~<tau>tt"));
  CHECK(!T("a!b | c(x)", "<tau>tt \\/ ~<tau>tt"));
}

TEST_CASE("private names stay distinct") {
  CHECK(S("nu x. a!x", "a^i", "<a!(x)>(x = a => <tau>tt)"));
  CHECK(S("nu x. a!x", "a^i", "<a!(x)>~(x = a)"));
  CHECK(!S("nu x. a(y)", "a^i", "<a(y)>~(y = a)"));
}

TEST_CASE("implication and box at the top level") {
  CHECK(T("[x=y]tau", "x = y => <tau>tt"));
  CHECK(!T("0", "x = y => <tau>tt"));
  CHECK(T("0", "[tau]ff"));
  CHECK(!T("[x=y]tau", "[tau]ff"));
  CHECK(T("tau + tau.tau", "[tau](<tau>tt \\/ [tau]ff)"));
  CHECK(!T("tau.[x=y]tau + tau + tau.tau", "[tau](<tau>tt \\/ [tau]ff)"));
}

TEST_CASE("input modalities extend the history with an input") {
  CHECK(T("a(x).[x=a]tau", "<a(x)>(x = a => <tau>tt)"));
  CHECK(!T("a(x).[x=a]tau", "<a(x)><tau>tt"));
  CHECK(T("a(x).[x=a]tau", "[a(x)][tau](x = a)"));
}

TEST_CASE("bound output boxes keep the extruded name apart") {
  CHECK(T("nu x. a!x.a(y).[x=y]tau", "[a!(x)][a(y)][tau](x = y)"));
  CHECK(!T("nu x. a!x.a(y).tau", "[a!(x)][a(y)][tau](x = y)"));
  CHECK(T("nu x. a!x.[x=a]tau", "[a!(x)][tau]ff"));
}

TEST_CASE("ill-formed judgements are rejected") {
  CHECK_THROWS_AS(sat(P("a!b"), History::parse("a^i"), F("tt")), IllFormedJudgement);
  CHECK_THROWS_AS(sat(P("0"), History::parse("a^i"), F("x = y")), IllFormedJudgement);
}

TEST_CASE("late box reading") {
  SatChecker late(InputBox::Late);
  Process p2 = P("a(x).tau + a(x)");
  Process p3 = P("a(x).tau + a(x) + a(x).[x=a]tau");
  History h = History::parse("a^i");
  Formula tn = F("[a(x)]((x = a /\\ [tau]ff) \\/ <tau>~~~(x = a))");
  CHECK(late.sat(p2, h, tn));
  CHECK(!late.sat(p3, h, tn));
  Formula basic = F("[a(x)](<tau>tt \\/ [tau]ff)");
  CHECK(late.sat(p3, h, basic));
  CHECK(late.sat(p2, h, basic));
  CHECK(!sat(p3, h, basic));
  CHECK(sat(p2, h, basic));
}
