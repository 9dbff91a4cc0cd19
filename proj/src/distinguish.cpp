#include "openpi/distinguish.hpp"

#include <optional>
#include <unordered_set>

#include "openpi/lts.hpp"
#include "openpi/parse.hpp"
#include "openpi/sat.hpp"

namespace openpi {

namespace {

bool merged_by(const Substitution& theta, const std::vector<std::pair<Name, Name>>& pairs) {
  for (auto& [x, y] : pairs)
    if (theta(x) != theta(y)) return false;
  return true;
}

// Equalities guarding the follower's transitions that are not instances of
// the given responses. Substitutions range over `h`; the responses are
// instances under `base`-stronger substitutions only, and every equality must
// be false after `base`. Returns nullopt when some transition cannot be
// guarded that way.
std::optional<std::vector<std::pair<Name, Name>>> guards(const Process& follower, const History& h_full,
                                                          const Label& label, const Substitution& base,
                                                          const std::vector<std::pair<Name, Name>>& base_pairs,
                                                          const std::vector<Process>& responses) {
  NameSet rel = follower.free_names();
  for (Name x : label.free_names()) rel.insert(x);
  History h = h_full.project(rel);
  std::vector<std::pair<Name, Name>> eqs;
  for (const auto& theta : representatives(h)) {
    if (theta.is_identity() && base.is_identity()) continue;
    Process ft = apply_subst(follower, theta);
    Label lt = label.apply(theta);
    std::unordered_set<std::string> images;
    if (merged_by(theta, base_pairs))
      for (auto& r : responses) images.insert(apply_subst(r, theta).key());
    bool extra = false;
    for (auto& s : transitions_with_label(ft, lt))
      if (!images.count(s.key())) {
        extra = true;
        break;
      }
    if (!extra) continue;
    bool covered = false;
    for (auto& [u, v] : eqs) covered = covered || theta(u) == theta(v);
    if (covered) continue;
    std::optional<std::pair<Name, Name>> pick;
    const auto& es = h.entries();
    for (std::size_t i = 0; i < es.size() && !pick; ++i)
      for (std::size_t j = 0; j < i && !pick; ++j) {
        Name v = es[j].name, u = es[i].name;
        if (theta(u) == theta(v) && base(u) != base(v)) pick = std::pair{v, u};
      }
    if (!pick) return std::nullopt;
    eqs.push_back(*pick);
  }
  return eqs;
}

std::vector<Formula> eq_formulas(const std::vector<std::pair<Name, Name>>& eqs) {
  std::vector<Formula> out;
  for (auto& [a, b] : eqs) out.push_back(Formula::eq(a, b));
  return out;
}

struct Biased {
  Formula lead;
  Formula follow;
};

std::pair<Formula, Formula> build(const Strategy& s);

Biased build_biased(const StrategyNode& n) {
  std::vector<Formula> lead_parts, follow_parts;
  std::vector<Process> residuals;
  for (const auto& r : n.responses) {
    auto [a, b] = build(r.strategy);  // a for the leader residual, b for the response
    lead_parts.push_back(a);
    follow_parts.push_back(b);
    residuals.push_back(r.residual);
  }
  Label label = n.label;
  if (label.is_bound() && n.history.contains(label.object)) {
    // The binder reuses a name that sigma merged away; keep it apart from
    // the equalities stated at the node's history.
    NameSet avoid = set_union(n.history.names(), set_union(n.left.free_names(), n.right.free_names()));
    for (auto& f : lead_parts) avoid = set_union(avoid, f.free_names());
    for (auto& f : follow_parts) avoid = set_union(avoid, f.free_names());
    for (auto& r : residuals) avoid = set_union(avoid, r.free_names());
    Name z = fresh_name(label.object, avoid);
    Substitution rn{{label.object, z}};
    for (auto& f : lead_parts) f = apply_subst(f, rn);
    for (auto& f : follow_parts) f = apply_subst(f, rn);
    for (auto& r : residuals) r = apply_subst(r, rn);
    label = label.with_binder(z);
  }
  auto pairs = ordered_pairs(n.sigma, n.history);
  Biased out;
  out.lead = box_subst(pairs, Formula::diam(label, big_and(lead_parts)));

  const Process& follower = n.leader == Side::Left ? n.right : n.left;
  // Prefer a box at the node's own history; fall back to guarding it by sigma.
  if (auto eqs = guards(follower, n.history, label, n.sigma, pairs, residuals)) {
    auto parts = follow_parts;
    for (auto& e : eq_formulas(*eqs)) parts.push_back(e);
    out.follow = Formula::box(label, big_or(parts));
    return out;
  }
  Process fs = apply_subst(follower, n.sigma);
  History hs = n.history.apply(n.sigma);
  auto eqs = guards(fs, hs, label, Substitution{}, {}, residuals);
  auto parts = follow_parts;
  if (eqs)
    for (auto& e : eq_formulas(*eqs)) parts.push_back(e);
  out.follow = box_subst(pairs, Formula::box(label, big_or(parts)));
  return out;
}

std::pair<Formula, Formula> build(const Strategy& s) {
  Biased b = build_biased(*s);
  if (s->leader == Side::Left) return {b.lead, b.follow};
  return {b.follow, b.lead};
}

void flatten(const Formula& f, FormulaKind k, std::vector<Formula>& out) {
  if (f.kind() == k) {
    flatten(f.left(), k, out);
    flatten(f.right(), k, out);
  } else {
    out.push_back(f);
  }
}

}  // namespace

Formula simplify(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::And:
    case FormulaKind::Or: {
      std::vector<Formula> parts, kept;
      flatten(f, f.kind(), parts);
      FormulaKind unit = f.kind() == FormulaKind::And ? FormulaKind::Top : FormulaKind::Bot;
      std::unordered_set<std::string> seen;
      for (auto& p : parts) {
        Formula q = simplify(p);
        if (q.kind() == unit) continue;
        if (seen.insert(q.key()).second) kept.push_back(q);
      }
      return f.kind() == FormulaKind::And ? big_and(kept) : big_or(kept);
    }
    case FormulaKind::Imp: return Formula::imp(simplify(f.left()), simplify(f.right()));
    case FormulaKind::Diam: return Formula::diam(f.label(), simplify(f.body()));
    case FormulaKind::Box: return Formula::box(f.label(), simplify(f.body()));
    default: return f;
  }
}

FormulaPair construct_pair(const Strategy& s) {
  auto [l, r] = build(s);
  return {l, r, false};
}

bool verify_pair(const Process& p, const Process& q, const History& h, const FormulaPair& pair) {
  SatChecker c;
  History hx = h;
  for (const Formula* f : {&pair.left, &pair.right})
    for (Name x : ordered_free_names(*f))
      if (!hx.contains(x)) hx = hx.extend(x, Tag::Input);
  return c.sat(p, hx, pair.left) && !c.sat(q, hx, pair.left) && c.sat(q, hx, pair.right) && !c.sat(p, hx, pair.right);
}

FormulaPair distinguish(const Strategy& s) {
  if (!s) throw VerificationFailed("no strategy to distinguish");
  FormulaPair raw = construct_pair(s);
  if (!verify_pair(s->left, s->right, s->history, raw))
    throw VerificationFailed("formula pair does not distinguish " + to_string(s->left) + " and " +
                             to_string(s->right) + ": " + to_string(raw.left) + " / " + to_string(raw.right));
  FormulaPair simple{simplify(raw.left), simplify(raw.right), false};
  if (verify_pair(s->left, s->right, s->history, simple)) {
    simple.verified = true;
    return simple;
  }
  raw.verified = true;
  return raw;
}

std::variant<FormulaPair, Bisimilar> distinguish_pair(const Process& p, const Process& q) {
  Verdict v = open_bisim_top(p, q);
  if (v.bisimilar) return Bisimilar{std::move(v)};
  return distinguish(v.strategy);
}

}  // namespace openpi
