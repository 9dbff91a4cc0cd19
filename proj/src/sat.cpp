#include "openpi/sat.hpp"

#include "openpi/lts.hpp"

namespace openpi {

namespace {

void push_unique(std::vector<Name>& out, Name x) {
  for (Name y : out)
    if (y == x) return;
  out.push_back(x);
}

bool bound_in(Name x, const std::vector<Name>& env) {
  for (Name y : env)
    if (y == x) return true;
  return false;
}

void collect(const Process& p, std::vector<Name>& env, std::vector<Name>& out) {
  auto use = [&](Name x) {
    if (!bound_in(x, env)) push_unique(out, x);
  };
  switch (p.kind()) {
    case ProcessKind::Nil: return;
    case ProcessKind::Nu:
      env.push_back(p.name1());
      collect(p.body(), env, out);
      env.pop_back();
      return;
    case ProcessKind::Prefix: {
      const Label& a = p.action();
      if (a.kind == LabelKind::Tau) {
        collect(p.body(), env, out);
      } else if (a.kind == LabelKind::Out) {
        use(a.channel);
        use(a.object);
        collect(p.body(), env, out);
      } else {
        use(a.channel);
        env.push_back(a.object);
        collect(p.body(), env, out);
        env.pop_back();
      }
      return;
    }
    case ProcessKind::Match:
      use(p.name1());
      use(p.name2());
      collect(p.body(), env, out);
      return;
    case ProcessKind::Par:
    case ProcessKind::Sum:
      collect(p.left(), env, out);
      collect(p.right(), env, out);
      return;
  }
}

void collect(const Formula& f, std::vector<Name>& env, std::vector<Name>& out) {
  auto use = [&](Name x) {
    if (!bound_in(x, env)) push_unique(out, x);
  };
  switch (f.kind()) {
    case FormulaKind::Top:
    case FormulaKind::Bot: return;
    case FormulaKind::Eq:
      use(f.name1());
      use(f.name2());
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Imp:
      collect(f.left(), env, out);
      collect(f.right(), env, out);
      return;
    case FormulaKind::Diam:
    case FormulaKind::Box: {
      const Label& l = f.label();
      if (l.kind != LabelKind::Tau) use(l.channel);
      if (l.kind == LabelKind::Out) use(l.object);
      if (l.is_bound()) env.push_back(l.object);
      collect(f.body(), env, out);
      if (l.is_bound()) env.pop_back();
      return;
    }
  }
}

}  // namespace

std::vector<Name> ordered_free_names(const Process& p) {
  std::vector<Name> env, out;
  collect(p, env, out);
  return out;
}

std::vector<Name> ordered_free_names(const Formula& f) {
  std::vector<Name> env, out;
  collect(f, env, out);
  return out;
}

History top_history(const Process& p, const Formula& phi) {
  auto names = ordered_free_names(p);
  for (Name x : ordered_free_names(phi)) push_unique(names, x);
  return History::inputs(names);
}

History top_history(const Process& p, const Process& q) {
  auto names = ordered_free_names(p);
  for (Name x : ordered_free_names(q)) push_unique(names, x);
  return History::inputs(names);
}

bool SatChecker::sat(const Process& p, const History& h, const Formula& phi) {
  for (const NameSet* fn : {&p.free_names(), &phi.free_names()})
    for (Name x : *fn)
      if (!h.contains(x)) throw IllFormedJudgement("free name " + x.label() + " is not in the history");
  return eval(p, h, phi);
}

bool SatChecker::eval(const Process& p, const History& h_in, const Formula& phi) {
  switch (phi.kind()) {
    case FormulaKind::Top: return true;
    case FormulaKind::Bot: return false;
    case FormulaKind::Eq: return phi.name1() == phi.name2();
    default: break;
  }
  History h = h_in.project(set_union(p.free_names(), phi.free_names()));
  std::string key = p.key();
  key += '|';
  key += h.to_string();
  key += '|';
  key += phi.key();
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  bool result = false;
  switch (phi.kind()) {
    case FormulaKind::And: result = eval(p, h, phi.left()) && eval(p, h, phi.right()); break;
    case FormulaKind::Or: result = eval(p, h, phi.left()) || eval(p, h, phi.right()); break;
    case FormulaKind::Imp: {
      result = true;
      for (const auto& s : representatives(h)) {
        Process ps = apply_subst(p, s);
        History hs = h.apply(s);
        if (eval(ps, hs, apply_subst(phi.left(), s)) && !eval(ps, hs, apply_subst(phi.right(), s))) {
          result = false;
          break;
        }
      }
      break;
    }
    case FormulaKind::Diam: {
      auto [l, body] = freshen_modality(phi, set_union(h.names(), p.free_names()));
      History hb = h;
      if (l.kind == LabelKind::BoundOut) hb = h.extend(l.object, Tag::Output);
      if (l.kind == LabelKind::In) hb = h.extend(l.object, Tag::Input);
      for (const auto& q : transitions_with_label(p, l))
        if (eval(q, hb, body)) {
          result = true;
          break;
        }
      break;
    }
    case FormulaKind::Box: result = eval_box(p, h, phi); break;
    default: break;
  }
  memo_.emplace(std::move(key), result);
  return result;
}

bool SatChecker::eval_box(const Process& p, const History& h, const Formula& phi) {
  auto [l, body] = freshen_modality(phi, set_union(h.names(), p.free_names()));
  for (const auto& s : representatives(h)) {
    Process ps = apply_subst(p, s);
    History hs = h.apply(s);
    Label ls = l.apply(s);
    Formula bs = apply_subst(body, s);
    for (const auto& q : transitions_with_label(ps, ls)) {
      bool ok;
      if (ls.kind == LabelKind::In && mode_ == InputBox::Late) {
        // Some instantiation of the binder: a known name, or a new one.
        ok = eval(q, hs.extend(ls.object, Tag::Output), bs);
        for (const auto& e : hs.entries()) {
          if (ok) break;
          Substitution w{{ls.object, e.name}};
          ok = eval(apply_subst(q, w), hs, apply_subst(bs, w));
        }
      } else if (ls.is_bound()) {
        ok = eval(q, hs.extend(ls.object, ls.kind == LabelKind::In ? Tag::Input : Tag::Output), bs);
      } else {
        ok = eval(q, hs, bs);
      }
      if (!ok) return false;
    }
  }
  return true;
}

bool sat(const Process& p, const History& h, const Formula& phi) {
  SatChecker c;
  return c.sat(p, h, phi);
}

bool sat_top(const Process& p, const Formula& phi) { return sat(p, top_history(p, phi), phi); }

}  // namespace openpi
