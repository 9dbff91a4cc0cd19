#include "openpi/lts.hpp"

#include <unordered_set>

namespace openpi {

namespace {

std::string transition_key(const Transition& t) {
  const Label& l = t.label;
  switch (l.kind) {
    case LabelKind::Tau: return "t " + t.residual.key();
    case LabelKind::Out: return "o " + l.channel.label() + " " + l.object.label() + " " + t.residual.key();
    case LabelKind::BoundOut: return "b " + l.channel.label() + " " + abstraction_key(l.object, t.residual);
    case LabelKind::In: return "i " + l.channel.label() + " " + abstraction_key(l.object, t.residual);
  }
  return {};
}

Process instantiate(const Transition& t, Name y) {
  return apply_subst(t.residual, Substitution{{t.label.object, y}});
}

void communications(const Transition& tl, const Transition& tr, const NameSet& fn, bool left_sends,
                    std::vector<Transition>& out) {
  const Transition& snd = left_sends ? tl : tr;
  const Transition& rcv = left_sends ? tr : tl;
  if (rcv.label.kind != LabelKind::In || snd.label.channel != rcv.label.channel) return;
  if (snd.label.kind == LabelKind::Out) {
    Process r = instantiate(rcv, snd.label.object);
    out.push_back({Label::tau(), left_sends ? Process::par(snd.residual, r) : Process::par(r, snd.residual)});
  } else if (snd.label.kind == LabelKind::BoundOut) {
    NameSet s_fn = snd.residual.free_names();
    s_fn.erase(snd.label.object);
    NameSet r_fn = rcv.residual.free_names();
    r_fn.erase(rcv.label.object);
    NameSet avoid = set_union(fn, set_union(s_fn, r_fn));
    Name z = fresh_name(snd.label.object, avoid);
    Process s = instantiate(snd, z);
    Process r = instantiate(rcv, z);
    out.push_back({Label::tau(), Process::nu(z, left_sends ? Process::par(s, r) : Process::par(r, s))});
  }
}

std::vector<Transition> raw(const Process& p);

std::vector<Transition> raw_node(const Process& p) {
  std::vector<Transition> out;
  switch (p.kind()) {
    case ProcessKind::Nil: break;
    case ProcessKind::Prefix: out.push_back({p.action(), p.body()}); break;
    case ProcessKind::Match:
      if (p.name1() == p.name2()) out = raw(p.body());
      break;
    case ProcessKind::Sum: {
      out = raw(p.left());
      auto r = raw(p.right());
      out.insert(out.end(), r.begin(), r.end());
      break;
    }
    case ProcessKind::Par: {
      const NameSet& fn = p.free_names();
      auto tl = raw(p.left());
      auto tr = raw(p.right());
      for (auto& t : tl) {
        auto [l, res] = freshen_binder(t.label, t.residual, fn);
        out.push_back({l, Process::par(res, p.right())});
      }
      for (auto& t : tr) {
        auto [l, res] = freshen_binder(t.label, t.residual, fn);
        out.push_back({l, Process::par(p.left(), res)});
      }
      for (auto& a : tl)
        for (auto& b : tr) {
          communications(a, b, fn, true, out);
          communications(a, b, fn, false, out);
        }
      break;
    }
    case ProcessKind::Nu: {
      Name x = p.name1();
      NameSet avoid = p.body().free_names();
      avoid.insert(x);
      for (auto& t : raw(p.body())) {
        auto [l, res] = freshen_binder(t.label, t.residual, avoid);
        if (l.kind == LabelKind::Out && l.object == x && l.channel != x) {
          out.push_back({Label::bound_out(l.channel, x), res});
        } else if (!l.names().count(x)) {
          out.push_back({l, Process::nu(x, res)});
        }
      }
      break;
    }
  }
  return out;
}

// Every transition of p has a binder fresh for p.
std::vector<Transition> raw(const Process& p) {
  auto ts = raw_node(p);
  for (auto& t : ts) {
    if (t.label.is_bound() && p.free_names().count(t.label.object)) {
      auto [l, res] = freshen_binder(t.label, t.residual, p.free_names());
      t = {l, res};
    }
  }
  return ts;
}

}  // namespace

std::vector<Transition> transitions(const Process& p) {
  std::vector<Transition> out;
  std::unordered_set<std::string> seen;
  for (auto& t : raw(p))
    if (seen.insert(transition_key(t)).second) out.push_back(std::move(t));
  return out;
}

std::vector<Process> transitions_with_label(const Process& p, const Label& l) {
  if (l.is_bound() && p.free_names().count(l.object))
    throw FreshnessViolation("binder " + l.object.label() + " is free in the source process");
  std::vector<Process> out;
  for (auto& t : transitions(p)) {
    if (!same_label_up_to_binder(t.label, l)) continue;
    if (l.is_bound())
      out.push_back(instantiate(t, l.object));
    else
      out.push_back(t.residual);
  }
  return out;
}

NameSet barbs(const Process& p) {
  NameSet r;
  for (auto& t : transitions(p))
    if (t.label.kind != LabelKind::Tau) r.insert(t.label.channel);
  return r;
}

}  // namespace openpi
