#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace openpi;
using namespace testing_support;

TEST_CASE("free names of a parallel composition") {
  NameSet expected{N("a"), N("b"), N("c")};
  CHECK(free_names(P("a!b | c(x)")) == expected);
  CHECK(free_names(P("nu z. a!z")) == NameSet{N("a")});
  CHECK(free_names(P("[x=y]tau")) == NameSet{N("x"), N("y")});
  CHECK(free_names(P("a(x).x!b")) == NameSet{N("a"), N("b")});
}

TEST_CASE("substitution avoids capture") {
  Process p = apply_subst(P("nu z. a!z"), Substitution{{N("a"), N("z")}});
  CHECK(p.kind() == ProcessKind::Nu);
  CHECK(p.name1() != N("z"));
  CHECK(alpha_eq(p, P("nu w. z!w")));
  CHECK(!alpha_eq(p, P("nu w. w!w")));

  Process q = apply_subst(P("a(x).x!y"), Substitution{{N("y"), N("x")}});
  CHECK(alpha_eq(q, P("a(u).u!x")));
  CHECK(free_names(q) == NameSet{N("a"), N("x")});
}

TEST_CASE("substitution on formulae avoids capture") {
  Formula f = apply_subst(F("<a(x)>(x = y)"), Substitution{{N("y"), N("x")}});
  CHECK(alpha_eq(f, F("<a(u)>(u = x)")));
  CHECK(free_names(f) == NameSet{N("a"), N("x")});
}

TEST_CASE("alpha equivalence") {
  CHECK(alpha_eq(P("nu x. a!x.x(y).y!x"), P("nu u. a!u.u(v).v!u")));
  CHECK(!alpha_eq(P("nu x. a!x"), P("nu x. a!b")));
  CHECK(alpha_eq(F("[a!(x)]<x(y)>(x = y)"), F("[a!(u)]<u(w)>(u = w)")));
  CHECK(!alpha_eq(F("<a(x)>(x = y)"), F("<a(y)>(y = y)")));
}

TEST_CASE("box_subst nests implications with the last pair outermost") {
  Formula phi = F("<tau>tt");
  Formula f = box_subst({{N("x"), N("y")}, {N("w"), N("z")}}, phi);
  CHECK(alpha_eq(f, F("w = z => x = y => <tau>tt")));
  CHECK(alpha_eq(box_subst({}, phi), phi));
}

TEST_CASE("big_and and big_or units") {
  CHECK(big_and({}).kind() == FormulaKind::Top);
  CHECK(big_or({}).kind() == FormulaKind::Bot);
  CHECK(alpha_eq(big_or({F("x = y"), F("w = z")}), F("x = y \\/ w = z")));
  CHECK(alpha_eq(big_and({F("tt"), F("ff"), F("tt")}), F("tt /\\ (ff /\\ tt)")));
}

TEST_CASE("fresh names extend the shadowed label") {
  NameSet avoid{N("x"), N("x1")};
  CHECK(fresh_name(N("x"), avoid) == N("x2"));
  CHECK(fresh_name(N("y"), avoid) == N("y"));
  CHECK(fresh_name(N("x1"), avoid) == N("x2"));
}

TEST_CASE("substitution composition") {
  Substitution s{{N("x"), N("y")}};
  Substitution t{{N("y"), N("z")}};
  Substitution c = compose(s, t);
  CHECK(c(N("x")) == N("z"));
  CHECK(c(N("y")) == N("z"));
  CHECK(compose(Substitution{}, t) == t);
}
