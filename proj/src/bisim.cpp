#include "openpi/bisim.hpp"

#include <unordered_set>

#include "openpi/lts.hpp"
#include "openpi/parse.hpp"
#include "openpi/sat.hpp"

namespace openpi {

History StrategyNode::child_history() const {
  History h = history.apply(sigma);
  if (extension) h = h.extend(label.object, *extension);
  return h;
}

namespace {

History relevant_history(const Process& p, const Process& q, const History& h) {
  return h.project(set_union(p.free_names(), q.free_names()));
}

std::optional<Tag> tag_of(const Label& l) {
  if (l.kind == LabelKind::BoundOut) return Tag::Output;
  if (l.kind == LabelKind::In) return Tag::Input;
  return std::nullopt;
}

}  // namespace

std::string triple_key(const Process& p, const Process& q, const History& h) {
  return p.key() + "~" + q.key() + "@" + relevant_history(p, q, h).to_string();
}

Name game_binder(const Label& label, const Process& residual, const Process& p, const Process& q, const History& h) {
  NameSet avoid = set_union(p.free_names(), q.free_names());
  avoid = set_union(avoid, h.names());
  if (!avoid.count(label.object)) return label.object;
  NameSet r = residual.free_names();
  r.erase(label.object);
  return fresh_name(label.object, set_union(avoid, r));
}

Strategy OpenBisimChecker::game(const Process& p, const Process& q, const History& h_in) {
  History h = relevant_history(p, q, h_in);
  std::string key = triple_key(p, q, h);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second.strategy;

  for (const auto& sigma : representatives(h)) {
    Process ps = apply_subst(p, sigma);
    Process qs = apply_subst(q, sigma);
    History hs = h.apply(sigma);
    for (Side side : {Side::Left, Side::Right}) {
      const Process& lead = side == Side::Left ? ps : qs;
      const Process& follow = side == Side::Left ? qs : ps;
      for (const auto& t : transitions(lead)) {
        Label label = t.label;
        Process res = t.residual;
        History h2 = hs;
        auto ext = tag_of(label);
        if (ext) {
          Name z = game_binder(label, res, ps, qs, hs);
          if (z != label.object) {
            res = apply_subst(res, Substitution{{label.object, z}});
            label = label.with_binder(z);
          }
          h2 = hs.extend(z, *ext);
        }
        std::vector<Response> losing;
        bool matched = false;
        for (const auto& r : transitions_with_label(follow, label)) {
          Strategy sub = game(res, r, h2);
          if (!sub) {
            matched = true;
            break;
          }
          losing.push_back({r, sub});
        }
        if (matched) continue;
        auto node = std::make_shared<StrategyNode>();
        node->left = p;
        node->right = q;
        node->history = h;
        node->leader = side;
        node->sigma = sigma;
        node->label = label;
        node->leader_residual = res;
        node->extension = ext;
        node->responses = std::move(losing);
        memo_[key] = {false, node};
        return node;
      }
    }
  }
  memo_[key] = {true, nullptr};
  record(p, q, h);
  return nullptr;
}

void OpenBisimChecker::record(const Process& p, const Process& q, const History& h) {
  auto add = [&](const Process& a, const Process& b, const History& hh) {
    relation_.emplace(triple_key(a, b, hh), Triple{a, b, relevant_history(a, b, hh)});
    relation_.emplace(triple_key(b, a, hh), Triple{b, a, relevant_history(a, b, hh)});
  };
  for (const auto& sigma : representatives(h))
    add(apply_subst(p, sigma), apply_subst(q, sigma), h.apply(sigma));
}

Verdict OpenBisimChecker::check(const Process& p, const Process& q, const History& h) {
  for (const NameSet* fn : {&p.free_names(), &q.free_names()})
    for (Name x : *fn)
      if (!h.contains(x)) throw IllFormedJudgement("free name " + x.label() + " is not in the history");
  Verdict v;
  v.strategy = game(p, q, h);
  v.bisimilar = !v.strategy;
  if (v.bisimilar)
    for (auto& [k, t] : relation_) v.relation.push_back(t);
  return v;
}

Verdict open_bisim(const Process& p, const Process& q, const History& h) {
  OpenBisimChecker c;
  return c.check(p, q, h);
}

Verdict open_bisim_top(const Process& p, const Process& q) { return open_bisim(p, q, top_history(p, q)); }

bool check_open_bisimulation(const std::vector<Triple>& rel, std::string* why) {
  std::unordered_set<std::string> keys;
  for (auto& t : rel) keys.insert(triple_key(t.left, t.right, t.history));
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  for (auto& t : rel) {
    History h = relevant_history(t.left, t.right, t.history);
    std::string here = to_string(t.left) + " ~ " + to_string(t.right) + " @ " + h.to_string();
    if (!keys.count(triple_key(t.right, t.left, h))) return fail("not symmetric at " + here);
    for (const auto& sigma : representatives(h))
      if (!keys.count(triple_key(apply_subst(t.left, sigma), apply_subst(t.right, sigma), h.apply(sigma))))
        return fail("not closed under " + to_string(sigma) + " at " + here);
    for (const auto& tr : transitions(t.left)) {
      Label label = tr.label;
      Process res = tr.residual;
      History h2 = h;
      if (auto ext = tag_of(label)) {
        Name z = game_binder(label, res, t.left, t.right, h);
        res = apply_subst(res, Substitution{{label.object, z}});
        label = label.with_binder(z);
        h2 = h.extend(z, *ext);
      }
      bool ok = false;
      for (const auto& r : transitions_with_label(t.right, label))
        if (keys.count(triple_key(res, r, h2))) {
          ok = true;
          break;
        }
      if (!ok) return fail("unmatched " + to_string(label) + " at " + here);
    }
  }
  return true;
}

bool validate_strategy(const Strategy& s, std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (!s) return fail("empty strategy");
  const StrategyNode& n = *s;
  std::string here = to_string(n.left) + " / " + to_string(n.right) + " @ " + n.history.to_string();
  for (const NameSet* fn : {&n.left.free_names(), &n.right.free_names()})
    for (Name x : *fn)
      if (!n.history.contains(x)) return fail("history misses " + x.label() + " at " + here);
  if (!respects(n.sigma, n.history)) return fail("substitution does not respect the history at " + here);
  Process ps = apply_subst(n.left, n.sigma);
  Process qs = apply_subst(n.right, n.sigma);
  History hs = n.history.apply(n.sigma);
  const Process& lead = n.leader == Side::Left ? ps : qs;
  const Process& follow = n.leader == Side::Left ? qs : ps;
  if (tag_of(n.label) != n.extension) return fail("extension does not match the label at " + here);
  if (n.label.is_bound()) {
    NameSet used = set_union(set_union(ps.free_names(), qs.free_names()), hs.names());
    if (used.count(n.label.object)) return fail("binder is not fresh at " + here);
  }
  bool found = false;
  for (const auto& r : transitions_with_label(lead, n.label)) found = found || alpha_eq(r, n.leader_residual);
  if (!found) return fail("leader transition does not exist at " + here);
  auto expected = transitions_with_label(follow, n.label);
  if (expected.size() != n.responses.size()) return fail("incomplete responses at " + here);
  std::unordered_set<std::string> want;
  for (auto& r : expected) want.insert(r.key());
  History child = n.child_history();
  for (const auto& resp : n.responses) {
    if (!want.count(resp.residual.key())) return fail("response is not a transition at " + here);
    if (!resp.strategy) return fail("missing subtree at " + here);
    const StrategyNode& c = *resp.strategy;
    if (!alpha_eq(c.left, n.leader_residual) || !alpha_eq(c.right, resp.residual))
      return fail("subtree is for a different pair at " + here);
    if (!(c.history == relevant_history(c.left, c.right, child))) return fail("subtree history mismatch at " + here);
    if (!validate_strategy(resp.strategy, why)) return false;
  }
  return true;
}

std::size_t strategy_size(const Strategy& s) {
  if (!s) return 0;
  std::size_t n = 1;
  for (auto& r : s->responses) n += strategy_size(r.strategy);
  return n;
}

}  // namespace openpi
