#include "openpi/json_io.hpp"

#include <stdexcept>

namespace openpi::json_io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("malformed JSON: " + what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field ") + key);
  return j.at(key);
}

Name name_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) bad(std::string(key) + " is not a name");
  return Name(v.get<std::string>());
}

std::string tag_of(const json& j) {
  const json& t = field(j, "tag");
  if (!t.is_string()) bad("tag is not a string");
  return t.get<std::string>();
}

const char* tag_text(Tag t) { return t == Tag::Input ? "i" : "o"; }

Tag tag_from(const json& j) {
  if (j == "i") return Tag::Input;
  if (j == "o") return Tag::Output;
  bad("history tag must be \"i\" or \"o\"");
}

}  // namespace

json to_json(const Label& l) {
  switch (l.kind) {
    case LabelKind::Tau: return {{"tag", "tau"}};
    case LabelKind::Out: return {{"tag", "out"}, {"channel", l.channel.label()}, {"object", l.object.label()}};
    case LabelKind::BoundOut: return {{"tag", "bound_out"}, {"channel", l.channel.label()}, {"binder", l.object.label()}};
    case LabelKind::In: return {{"tag", "in"}, {"channel", l.channel.label()}, {"binder", l.object.label()}};
  }
  return {};
}

Label label_from_json(const json& j) {
  std::string t = tag_of(j);
  if (t == "tau") return Label::tau();
  if (t == "out") return Label::out(name_field(j, "channel"), name_field(j, "object"));
  if (t == "bound_out") return Label::bound_out(name_field(j, "channel"), name_field(j, "binder"));
  if (t == "in") return Label::in(name_field(j, "channel"), name_field(j, "binder"));
  bad("unknown label tag " + t);
}

json to_json(const Process& p) {
  switch (p.kind()) {
    case ProcessKind::Nil: return {{"tag", "nil"}};
    case ProcessKind::Nu: return {{"tag", "nu"}, {"name", p.name1().label()}, {"body", to_json(p.body())}};
    case ProcessKind::Prefix: return {{"tag", "prefix"}, {"action", to_json(p.action())}, {"cont", to_json(p.body())}};
    case ProcessKind::Match:
      return {{"tag", "match"}, {"x", p.name1().label()}, {"y", p.name2().label()}, {"body", to_json(p.body())}};
    case ProcessKind::Par: return {{"tag", "par"}, {"left", to_json(p.left())}, {"right", to_json(p.right())}};
    case ProcessKind::Sum: return {{"tag", "sum"}, {"left", to_json(p.left())}, {"right", to_json(p.right())}};
  }
  return {};
}

Process process_from_json(const json& j) {
  std::string t = tag_of(j);
  if (t == "nil") return Process::nil();
  if (t == "nu") return Process::nu(name_field(j, "name"), process_from_json(field(j, "body")));
  if (t == "prefix") {
    Label a = label_from_json(field(j, "action"));
    if (a.kind == LabelKind::BoundOut) bad("bound output is not a prefix");
    return Process::prefix(a, process_from_json(field(j, "cont")));
  }
  if (t == "match") return Process::match(name_field(j, "x"), name_field(j, "y"), process_from_json(field(j, "body")));
  if (t == "par") return Process::par(process_from_json(field(j, "left")), process_from_json(field(j, "right")));
  if (t == "sum") return Process::sum(process_from_json(field(j, "left")), process_from_json(field(j, "right")));
  bad("unknown process tag " + t);
}

json to_json(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Top: return {{"tag", "tt"}};
    case FormulaKind::Bot: return {{"tag", "ff"}};
    case FormulaKind::And: return {{"tag", "and"}, {"left", to_json(f.left())}, {"right", to_json(f.right())}};
    case FormulaKind::Or: return {{"tag", "or"}, {"left", to_json(f.left())}, {"right", to_json(f.right())}};
    case FormulaKind::Imp: return {{"tag", "imp"}, {"left", to_json(f.left())}, {"right", to_json(f.right())}};
    case FormulaKind::Eq: return {{"tag", "eq"}, {"x", f.name1().label()}, {"y", f.name2().label()}};
    case FormulaKind::Diam: return {{"tag", "diam"}, {"label", to_json(f.label())}, {"body", to_json(f.body())}};
    case FormulaKind::Box: return {{"tag", "box"}, {"label", to_json(f.label())}, {"body", to_json(f.body())}};
  }
  return {};
}

Formula formula_from_json(const json& j) {
  std::string t = tag_of(j);
  if (t == "tt") return Formula::top();
  if (t == "ff") return Formula::bot();
  if (t == "and") return Formula::conj(formula_from_json(field(j, "left")), formula_from_json(field(j, "right")));
  if (t == "or") return Formula::disj(formula_from_json(field(j, "left")), formula_from_json(field(j, "right")));
  if (t == "imp") return Formula::imp(formula_from_json(field(j, "left")), formula_from_json(field(j, "right")));
  if (t == "eq") return Formula::eq(name_field(j, "x"), name_field(j, "y"));
  if (t == "diam") return Formula::diam(label_from_json(field(j, "label")), formula_from_json(field(j, "body")));
  if (t == "box") return Formula::box(label_from_json(field(j, "label")), formula_from_json(field(j, "body")));
  bad("unknown formula tag " + t);
}

json to_json(const Substitution& s) {
  json out = json::array();
  for (auto& [from, to] : s.pairs()) out.push_back({from.label(), to.label()});
  return out;
}

Substitution substitution_from_json(const json& j) {
  if (!j.is_array()) bad("substitution is not a list");
  Substitution s;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) bad("substitution entry");
    s.set(Name(p[0].get<std::string>()), Name(p[1].get<std::string>()));
  }
  return s;
}

json to_json(const History& h) {
  json out = json::array();
  for (auto& e : h.entries()) out.push_back({e.name.label(), tag_text(e.tag)});
  return out;
}

History history_from_json(const json& j) {
  if (!j.is_array()) bad("history is not a list");
  History h;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string()) bad("history entry");
    Name x(e[0].get<std::string>());
    if (h.contains(x)) bad("repeated name in history");
    h = h.extend(x, tag_from(e[1]));
  }
  return h;
}

json to_json(const Strategy& s) {
  if (!s) return nullptr;
  json responses = json::array();
  for (auto& r : s->responses) responses.push_back({{"residual", to_json(r.residual)}, {"strategy", to_json(r.strategy)}});
  return {{"left", to_json(s->left)},
          {"right", to_json(s->right)},
          {"history", to_json(s->history)},
          {"leader", s->leader == Side::Left ? "left" : "right"},
          {"sigma", to_json(s->sigma)},
          {"label", to_json(s->label)},
          {"leader_residual", to_json(s->leader_residual)},
          {"extension", s->extension ? json(tag_text(*s->extension)) : json(nullptr)},
          {"responses", responses}};
}

Strategy strategy_from_json(const json& j) {
  if (j.is_null()) return nullptr;
  auto n = std::make_shared<StrategyNode>();
  n->left = process_from_json(field(j, "left"));
  n->right = process_from_json(field(j, "right"));
  n->history = history_from_json(field(j, "history"));
  const json& leader = field(j, "leader");
  if (leader == "left")
    n->leader = Side::Left;
  else if (leader == "right")
    n->leader = Side::Right;
  else
    bad("leader must be \"left\" or \"right\"");
  n->sigma = substitution_from_json(field(j, "sigma"));
  n->label = label_from_json(field(j, "label"));
  n->leader_residual = process_from_json(field(j, "leader_residual"));
  const json& ext = field(j, "extension");
  if (!ext.is_null()) n->extension = tag_from(ext);
  const json& rs = field(j, "responses");
  if (!rs.is_array()) bad("responses is not a list");
  for (const auto& r : rs) n->responses.push_back({process_from_json(field(r, "residual")), strategy_from_json(field(r, "strategy"))});
  return n;
}

json to_json(const Verdict& v) {
  json out = {{"verdict", v.bisimilar ? "bisimilar" : "not-bisimilar"}};
  if (v.bisimilar) {
    json rel = json::array();
    for (auto& t : v.relation)
      rel.push_back({{"left", to_json(t.left)}, {"right", to_json(t.right)}, {"history", to_json(t.history)}});
    out["relation"] = rel;
  } else {
    out["strategy"] = to_json(v.strategy);
  }
  return out;
}

Verdict verdict_from_json(const json& j) {
  Verdict v;
  const json& verdict = field(j, "verdict");
  if (verdict == "bisimilar")
    v.bisimilar = true;
  else if (verdict != "not-bisimilar")
    bad("verdict must be \"bisimilar\" or \"not-bisimilar\"");
  if (v.bisimilar) {
    if (j.contains("relation"))
      for (const auto& t : j.at("relation"))
        v.relation.push_back({process_from_json(field(t, "left")), process_from_json(field(t, "right")),
                              history_from_json(field(t, "history"))});
  } else if (j.contains("strategy")) {
    v.strategy = strategy_from_json(j.at("strategy"));
  }
  return v;
}

json to_json(const FormulaPair& f) {
  return {{"phiL", to_json(f.left)}, {"phiR", to_json(f.right)}, {"verified", f.verified}};
}

FormulaPair formula_pair_from_json(const json& j) {
  const json& v = field(j, "verified");
  if (!v.is_boolean()) bad("verified is not a boolean");
  return {formula_from_json(field(j, "phiL")), formula_from_json(field(j, "phiR")), v.get<bool>()};
}

}  // namespace openpi::json_io
