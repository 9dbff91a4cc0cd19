#include "openpi/spectrum.hpp"

#include "openpi/lts.hpp"
#include "openpi/sat.hpp"

namespace openpi {

namespace {

std::vector<Substitution> partitions(const NameSet& names) {
  return representatives(History::inputs(std::vector<Name>(names.begin(), names.end())));
}

std::string env_key(const NameSet& env) {
  std::string k;
  for (Name x : env) k += x.label() + ",";
  return k;
}

}  // namespace

bool ClassicalSat::sat(const Process& p, const Formula& phi) {
  std::string key = p.key() + "|" + phi.key();
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  bool r = false;
  switch (phi.kind()) {
    case FormulaKind::Top: r = true; break;
    case FormulaKind::Bot: r = false; break;
    case FormulaKind::Eq: r = phi.name1() == phi.name2(); break;
    case FormulaKind::And: r = sat(p, phi.left()) && sat(p, phi.right()); break;
    case FormulaKind::Or: r = sat(p, phi.left()) || sat(p, phi.right()); break;
    case FormulaKind::Imp: r = !sat(p, phi.left()) || sat(p, phi.right()); break;
    case FormulaKind::Diam:
    case FormulaKind::Box: {
      NameSet names = set_union(p.free_names(), phi.free_names());
      auto [label, body] = freshen_modality(phi, names);
      bool diam = phi.kind() == FormulaKind::Diam;
      // For an input, the continuation must hold for every instance of the binder.
      auto holds = [&](const Process& q) {
        if (label.kind != LabelKind::In) return sat(q, body);
        NameSet ys = names;
        ys.insert(label.object);
        for (Name y : ys) {
          Substitution s{{label.object, y}};
          if (!sat(apply_subst(q, s), apply_subst(body, s))) return false;
        }
        return true;
      };
      r = !diam;
      for (const auto& q : transitions_with_label(p, label))
        if (holds(q) == diam) {
          r = diam;
          break;
        }
      break;
    }
  }
  memo_[key] = r;
  return r;
}

bool classical_sat(const Process& p, const Formula& phi) {
  ClassicalSat c;
  return c.sat(p, phi);
}

bool late_sat(const Process& p, const Formula& phi) {
  ClassicalSat c;
  for (const auto& sigma : partitions(set_union(p.free_names(), phi.free_names())))
    if (!c.sat(apply_subst(p, sigma), apply_subst(phi, sigma))) return false;
  return true;
}

bool LateChecker::bisimilar(const Process& p, const Process& q) {
  std::string key = p.key() + "~" + q.key();
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  bool r = half(p, q) && half(q, p);
  memo_[key] = r;
  return r;
}

bool LateChecker::half(const Process& p, const Process& q) {
  NameSet names = set_union(p.free_names(), q.free_names());
  for (const auto& t : transitions(p)) {
    auto [label, res] = t.label.is_bound() ? freshen_binder(t.label, t.residual, names) : std::pair{t.label, t.residual};
    bool matched = false;
    for (const auto& r : transitions_with_label(q, label)) {
      if (label.kind == LabelKind::In) {
        NameSet ys = names;
        ys.insert(label.object);
        matched = true;
        for (Name y : ys) {
          Substitution s{{label.object, y}};
          if (!bisimilar(apply_subst(res, s), apply_subst(r, s))) {
            matched = false;
            break;
          }
        }
      } else {
        matched = bisimilar(res, r);
      }
      if (matched) break;
    }
    if (!matched) return false;
  }
  return true;
}

bool late_bisim(const Process& p, const Process& q) {
  LateChecker c;
  return c.bisimilar(p, q);
}

bool late_equiv(const Process& p, const Process& q) {
  LateChecker c;
  for (const auto& sigma : partitions(set_union(p.free_names(), q.free_names())))
    if (!c.bisimilar(apply_subst(p, sigma), apply_subst(q, sigma))) return false;
  return true;
}

bool IntermediateChecker::bisimilar(const Process& p, const Process& q, const NameEnvironment& env) {
  std::string key = p.key() + "~" + q.key() + "|" + env_key(env);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  NameSet open;
  for (Name x : set_union(p.free_names(), q.free_names()))
    if (!env.count(x)) open.insert(x);
  bool r = true;
  for (const auto& sigma : partitions(open))
    if (!step(apply_subst(p, sigma), apply_subst(q, sigma), env)) {
      r = false;
      break;
    }
  memo_[key] = r;
  return r;
}

bool IntermediateChecker::step(const Process& p, const Process& q, const NameEnvironment& env) {
  return half(p, q, env) && half(q, p, env);
}

bool IntermediateChecker::half(const Process& p, const Process& q, const NameEnvironment& env) {
  NameSet names = set_union(set_union(p.free_names(), q.free_names()), env);
  for (const auto& t : transitions(p)) {
    auto [label, res] = t.label.is_bound() ? freshen_binder(t.label, t.residual, names) : std::pair{t.label, t.residual};
    bool matched = false;
    for (const auto& r : transitions_with_label(q, label)) {
      if (label.kind == LabelKind::In) {
        NameSet ys = names;
        ys.insert(label.object);
        matched = true;
        for (Name y : ys) {
          Substitution s{{label.object, y}};
          if (!bisimilar(apply_subst(res, s), apply_subst(r, s), env)) {
            matched = false;
            break;
          }
        }
      } else if (label.kind == LabelKind::BoundOut) {
        NameEnvironment env2 = env;
        env2.insert(label.object);
        matched = bisimilar(res, r, env2);
      } else {
        matched = bisimilar(res, r, env);
      }
      if (matched) break;
    }
    if (!matched) return false;
  }
  return true;
}

bool intermediate_bisim(const Process& p, const Process& q, const NameEnvironment& env) {
  IntermediateChecker c;
  return c.bisimilar(p, q, env);
}

bool sat_late_box_input(const Process& p, const History& h, const Formula& phi) {
  SatChecker c(InputBox::Late);
  return c.sat(p, h, phi);
}

}  // namespace openpi
