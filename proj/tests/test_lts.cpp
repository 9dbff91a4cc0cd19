#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "openpi/lts.hpp"
#include "support.hpp"

using namespace openpi;
using namespace testing_support;

namespace {
bool has(const std::vector<Transition>& ts, const Label& l, const Process& residual) {
  for (auto& t : ts) {
    if (!same_label_up_to_binder(t.label, l)) continue;
    Process r = t.residual;
    if (l.is_bound()) r = apply_subst(r, Substitution{{t.label.object, l.object}});
    if (alpha_eq(r, residual)) return true;
  }
  return false;
}
}  // namespace

TEST_CASE("no communication on distinct channels") {
  auto ts = transitions(P("a!b | c(x)"));
  CHECK(ts.size() == 2);
  for (auto& t : ts) CHECK(t.label.kind != LabelKind::Tau);
}

TEST_CASE("open rule extrudes a private name") {
  auto ts = transitions(P("nu z. a!z"));
  REQUIRE(ts.size() == 1);
  CHECK(ts[0].label.kind == LabelKind::BoundOut);
  CHECK(ts[0].label.channel == N("a"));
  CHECK(ts[0].residual.kind() == ProcessKind::Nil);
}

TEST_CASE("free communication") {
  auto ts = transitions(P("a!b | a(x)"));
  CHECK(has(ts, Label::tau(), P("0 | 0")));
  auto ts2 = transitions(P("a!b | a(x).x!x"));
  CHECK(has(ts2, Label::tau(), P("0 | b!b")));
  auto ts3 = transitions(P("a(x).x!x | a!b"));
  CHECK(has(ts3, Label::tau(), P("b!b | 0")));
}

TEST_CASE("close rule") {
  auto ts = transitions(P("nu z. a!z.z!z | a(x).x(y)"));
  CHECK(has(ts, Label::tau(), P("nu z. (z!z | z(y))")));
}

TEST_CASE("scope extrusion is blocked on the restricted channel") {
  CHECK(transitions(P("nu x. x!a")).empty());
  CHECK(transitions(P("nu x. x(y)")).empty());
  CHECK(transitions(P("nu x. [x=a]tau")).empty());
}

TEST_CASE("matches fire only on syntactic equality") {
  CHECK(transitions(P("[x=y]tau")).empty());
  CHECK(transitions(P("[x=x]tau")).size() == 1);
}

TEST_CASE("duplicates up to alpha are removed") {
  CHECK(transitions(P("tau + tau")).size() == 1);
  CHECK(transitions(P("a(x).x!x + a(y).y!y")).size() == 1);
  CHECK(transitions(P("a(x) + a(x).tau")).size() == 2);
}

TEST_CASE("binders of transitions are fresh for the source") {
  for (const char* src : {"x(x).x!x", "a(x) + x!b", "[x=x]a(x)", "nu x. a(x).x!x", "a(x) | x!c", "nu x. (a!x | x(x))"}) {
    Process p = P(src);
    for (auto& t : transitions(p))
      if (t.label.is_bound()) CHECK_MESSAGE(!free_names(p).count(t.label.object), src);
  }
}

TEST_CASE("transitions_with_label instantiates binders and checks freshness") {
  Process p = P("a(x).x!b + a(y).y!y");
  auto rs = transitions_with_label(p, Label::in(N("a"), N("z")));
  REQUIRE(rs.size() == 2);
  CHECK(alpha_eq(rs[0], P("z!b")));
  CHECK(alpha_eq(rs[1], P("z!z")));
  CHECK_THROWS_AS(transitions_with_label(p, Label::in(N("a"), N("b"))), FreshnessViolation);
  CHECK(transitions_with_label(P("a!b + a!c"), Label::out(N("a"), N("c"))).size() == 1);
}

TEST_CASE("barbs") {
  CHECK(barbs(P("a!b | c(x) | nu z. d!z")) == NameSet{N("a"), N("c"), N("d")});
  CHECK(barbs(P("tau.a!b")).empty());
}

TEST_CASE("transitions are deterministic") {
  Process p = P("nu z. (a!z | a(x).x!x) + b(y).[y=b]tau | b!c");
  auto a = transitions(p);
  auto b = transitions(p);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].label == b[i].label);
    CHECK(a[i].residual.key() == b[i].residual.key());
  }
}
