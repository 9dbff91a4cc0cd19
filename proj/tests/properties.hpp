// Randomised property checks shared by the unit tests and the acceptance
// binary. Each check returns how many instances it examined and a description
// of every instance that broke the property.
#pragma once

#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "gen.hpp"
#include "openpi/bisim.hpp"
#include "openpi/distinguish.hpp"
#include "openpi/lts.hpp"
#include "openpi/parse.hpp"
#include "openpi/sat.hpp"
#include "openpi/spectrum.hpp"

namespace testing_support {

struct Tally {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Every function from `dom` into `cod`, as substitutions.
inline std::vector<openpi::Substitution> all_functions(const std::vector<openpi::Name>& dom,
                                                       const std::vector<openpi::Name>& cod) {
  std::vector<openpi::Substitution> out;
  std::vector<std::size_t> idx(dom.size(), 0);
  while (true) {
    openpi::Substitution s;
    for (std::size_t i = 0; i < dom.size(); ++i)
      if (cod[idx[i]] != dom[i]) s.set(dom[i], cod[idx[i]]);
    out.push_back(s);
    std::size_t i = 0;
    while (i < dom.size() && ++idx[i] == cod.size()) idx[i++] = 0;
    if (i == dom.size()) break;
  }
  return out;
}

// OM satisfaction written from the clauses, with the universal quantifiers of
// implication and box ranging over every respectful function into the
// relevant names plus one fresh name.
class Oracle {
 public:
  bool sat(const openpi::Process& p, const openpi::History& h_in, const openpi::Formula& phi) {
    using namespace openpi;
    switch (phi.kind()) {
      case FormulaKind::Top: return true;
      case FormulaKind::Bot: return false;
      case FormulaKind::Eq: return phi.name1() == phi.name2();
      case FormulaKind::And: return sat(p, h_in, phi.left()) && sat(p, h_in, phi.right());
      case FormulaKind::Or: return sat(p, h_in, phi.left()) || sat(p, h_in, phi.right());
      default: break;
    }
    NameSet rel = set_union(p.free_names(), phi.free_names());
    History h = h_in.project(rel);
    std::string key = p.key() + "|" + h.to_string() + "|" + phi.key();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    std::vector<Name> dom(rel.begin(), rel.end());
    Name extra = fresh_name(Name("n"), rel);
    std::vector<Name> cod = dom;
    cod.push_back(extra);
    NameSet avoid = rel;
    avoid.insert(extra);

    bool r = true;
    if (phi.kind() == FormulaKind::Imp) {
      for (const auto& s : all_functions(dom, cod)) {
        if (!respects(s, h)) continue;
        Process ps = apply_subst(p, s);
        History hs = h.apply(s);
        if (sat(ps, hs, apply_subst(phi.left(), s)) && !sat(ps, hs, apply_subst(phi.right(), s))) {
          r = false;
          break;
        }
      }
    } else {
      auto [l, body] = freshen_modality(phi, avoid);
      auto next = [](const History& hh, const Label& ll) {
        if (ll.kind == LabelKind::BoundOut) return hh.extend(ll.object, Tag::Output);
        if (ll.kind == LabelKind::In) return hh.extend(ll.object, Tag::Input);
        return hh;
      };
      if (phi.kind() == FormulaKind::Diam) {
        r = false;
        for (const auto& q : transitions_with_label(p, l))
          if (sat(q, next(h, l), body)) {
            r = true;
            break;
          }
      } else {
        for (const auto& s : all_functions(dom, cod)) {
          if (!r) break;
          if (!respects(s, h)) continue;
          Label ls = l.apply(s);
          History hs = h.apply(s);
          for (const auto& q : transitions_with_label(apply_subst(p, s), ls))
            if (!sat(q, next(hs, ls), apply_subst(body, s))) {
              r = false;
              break;
            }
        }
      }
    }
    memo_.emplace(std::move(key), r);
    return r;
  }

 private:
  std::unordered_map<std::string, bool> memo_;
};

struct Pair {
  openpi::Process p, q;
};

struct PairPool {
  std::vector<Pair> bisimilar, distinct;
};

/// Random pairs (depth 4, names a, b, x) sorted by the open verdict: a random
/// process against another one, a small mutation of it, or a rewrite that
/// keeps it bisimilar.
inline const PairPool& random_pairs() {
  static PairPool pp = [] {
    using openpi::Process;
    PairPool out;
    Gen g(7);
    while (out.bisimilar.size() < 200 || out.distinct.size() < 200) {
      Process p = g.process(4);
      Process q;
      switch (g.uniform(0, 3)) {
        case 0: q = g.process(4); break;
        case 1: q = Process::sum(p, g.coin() ? p : Process::nil()); break;
        case 2: q = g.coin() ? Process::par(p, Process::nil()) : Process::nu(openpi::Name("z"), p); break;
        default: q = g.mutate(p); break;
      }
      bool bis = open_bisim_top(p, q).bisimilar;
      auto& bucket = bis ? out.bisimilar : out.distinct;
      if (bucket.size() < 200) bucket.push_back({p, q});
    }
    return out;
  }();
  return pp;
}

/// Representatives against every respectful function, on `n` random
/// judgements over at most four relevant names.
inline Tally oracle_agreement(std::size_t n) {
  using namespace openpi;
  Gen g(1);
  Oracle oracle;
  SatChecker checker;
  Tally t;
  while (t.checked < n) {
    Process p = g.process(3, 4);
    Formula f = g.formula(g.uniform(1, 3));
    NameSet rel = set_union(p.free_names(), f.free_names());
    if (rel.size() > 4) continue;
    History h = g.coin() ? top_history(p, f) : g.history(rel);
    ++t.checked;
    bool got = checker.sat(p, h, f);
    if (got != oracle.sat(p, h, f))
      t.failures.push_back(to_string(p) + " @ " + h.to_string() + " |= " + to_string(f) + ": engine says " +
                           (got ? "true" : "false"));
  }
  return t;
}

/// Every random non-bisimilar pair yields a pair of formulae that
/// distinguish it, checked again with sat_top.
inline Tally completeness() {
  using namespace openpi;
  Tally t;
  for (const auto& [p, q] : random_pairs().distinct) {
    ++t.checked;
    auto r = distinguish_pair(p, q);
    auto* f = std::get_if<FormulaPair>(&r);
    bool ok = f && f->verified && sat_top(p, f->left) && !sat_top(q, f->left) && sat_top(q, f->right) &&
              !sat_top(p, f->right);
    if (!ok) t.failures.push_back(to_string(p) + " vs " + to_string(q));
  }
  return t;
}

/// Bisimilar random pairs agree on `per_pair` random formulae each.
inline Tally soundness(int per_pair) {
  using namespace openpi;
  Gen g(11);
  Tally t;
  for (const auto& [p, q] : random_pairs().bisimilar) {
    SatChecker cp, cq;
    for (int i = 0; i < per_pair; ++i) {
      Formula f = g.formula(g.uniform(1, 3));
      History h = top_history(p, q);
      for (Name x : ordered_free_names(f))
        if (!h.contains(x)) h = h.extend(x, Tag::Input);
      ++t.checked;
      if (cp.sat(p, h, f) != cq.sat(q, h, f))
        t.failures.push_back(to_string(p) + " ~ " + to_string(q) + " on " + to_string(f));
    }
  }
  return t;
}

/// open => intermediate => late equivalence => late bisimilarity.
inline Tally spectrum_chain() {
  using namespace openpi;
  Tally t;
  for (const auto* set : {&random_pairs().bisimilar, &random_pairs().distinct})
    for (const auto& [p, q] : *set) {
      ++t.checked;
      bool open = open_bisim_top(p, q).bisimilar;
      bool inter = intermediate_bisim(p, q);
      bool leq = late_equiv(p, q);
      bool late = late_bisim(p, q);
      if ((open && !inter) || (inter && !leq) || (leq && !late)) {
        std::ostringstream s;
        s << to_string(p) << " / " << to_string(q) << ": open " << open << " intermediate " << inter << " late-eq "
          << leq << " late " << late;
        t.failures.push_back(s.str());
      }
    }
  return t;
}

/// Finitely many transitions, each found again by its label.
inline Tally image_finite() {
  using namespace openpi;
  Gen g(2);
  Tally t;
  for (int i = 0; i < 300; ++i) {
    Process p = g.process(4);
    auto ts = transitions(p);
    ++t.checked;
    if (ts.size() >= 64) t.failures.push_back(to_string(p) + ": too many transitions");
    for (const auto& tr : ts) {
      bool found = false;
      for (const auto& r : transitions_with_label(p, tr.label)) found = found || alpha_eq(r, tr.residual);
      if (!found) t.failures.push_back(to_string(p) + " --" + to_string(tr.label) + "--> lost");
    }
  }
  return t;
}

/// If every instance theta at or above sigma satisfies phi, then
/// box_subst(sigma, phi) holds.
inline Tally box_subst_unfolding() {
  using namespace openpi;
  Gen g(3);
  Tally t;
  for (int i = 0; i < 300; ++i) {
    Process p = g.process(3, 4);
    Formula f = g.formula(2);
    History h = top_history(p, f);
    auto reps = representatives(h);
    const Substitution& sigma = reps[g.uniform(0, static_cast<int>(reps.size()) - 1)];
    bool all = true;
    for (const auto& theta : reps) {
      bool above = true;
      for (Name x : h.names()) above = above && theta(sigma(x)) == theta(x);
      if (above) all = all && sat(apply_subst(p, theta), h.apply(theta), apply_subst(f, theta));
    }
    if (!all) continue;
    ++t.checked;
    Formula boxed = box_subst(ordered_pairs(sigma, h), f);
    if (!sat(p, h, boxed)) t.failures.push_back(to_string(p) + " |/= " + to_string(boxed));
  }
  return t;
}

/// For respectful sigma: if sigma then theta respects h, theta respects h sigma.
inline Tally composite_respects() {
  using namespace openpi;
  Gen g(4);
  std::vector<Name> names{Name("a"), Name("b"), Name("x"), Name("y")};
  std::vector<Name> cod = names;
  cod.push_back(Name("n"));
  auto fs = all_functions(names, cod);
  Tally t;
  for (int i = 0; i < 4000; ++i) {
    History h = g.history({names.begin(), names.end()});
    const auto& s = fs[g.uniform(0, static_cast<int>(fs.size()) - 1)];
    const auto& th = fs[g.uniform(0, static_cast<int>(fs.size()) - 1)];
    if (!respects(s, h) || !respects(compose(s, th), h)) continue;
    ++t.checked;
    if (!respects(th, h.apply(s))) t.failures.push_back(h.to_string() + " " + to_string(s) + " " + to_string(th));
  }
  return t;
}

/// True judgements stay true under respectful substitutions.
inline Tally monotonicity() {
  using namespace openpi;
  Gen g(5);
  Tally t;
  for (int i = 0; i < 400; ++i) {
    Process p = g.process(3, 4);
    Formula f = g.formula(g.uniform(1, 3));
    History h = g.history(set_union(p.free_names(), f.free_names()));
    if (!sat(p, h, f)) continue;
    ++t.checked;
    for (const auto& theta : representatives(h))
      if (!sat(apply_subst(p, theta), h.apply(theta), apply_subst(f, theta)))
        t.failures.push_back(to_string(p) + " @ " + h.to_string() + " |= " + to_string(f) + " lost under " +
                             to_string(theta));
  }
  return t;
}

/// A transition of P is matched by P theta for any theta avoiding its binder.
inline Tally transitions_under_substitution() {
  using namespace openpi;
  Gen g(6);
  std::vector<Name> targets{Name("a"), Name("b"), Name("x"), Name("n")};
  Tally t;
  for (int i = 0; i < 300; ++i) {
    Process p = g.process(4);
    std::vector<Name> dom(p.free_names().begin(), p.free_names().end());
    if (dom.empty()) continue;
    auto fs = all_functions(dom, targets);
    const auto& theta = fs[g.uniform(0, static_cast<int>(fs.size()) - 1)];
    Process pt = apply_subst(p, theta);
    for (const auto& tr : transitions(p)) {
      ++t.checked;
      Label l = tr.label;
      Process res = tr.residual;
      NameSet avoid = set_union(theta.domain(), pt.free_names());
      avoid.insert(targets.begin(), targets.end());
      if (l.is_bound()) std::tie(l, res) = freshen_binder(l, res, avoid);
      Process want = apply_subst(res, theta);
      bool found = false;
      for (const auto& r : transitions_with_label(pt, l.apply(theta))) found = found || alpha_eq(r, want);
      if (!found)
        t.failures.push_back(to_string(p) + " --" + to_string(l) + "--> " + to_string(res) + " under " +
                             to_string(theta));
    }
  }
  return t;
}

}  // namespace testing_support
