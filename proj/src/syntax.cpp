#include "openpi/syntax.hpp"

#include <cctype>
#include <deque>
#include <mutex>
#include <unordered_map>

namespace openpi {

// ---------------------------------------------------------------------------
// Name interning

namespace {

struct NameTable {
  std::mutex mu;
  std::deque<std::string> labels{""};
  std::unordered_map<std::string, std::uint32_t> ids;
};

NameTable& table() {
  static NameTable t;
  return t;
}

}  // namespace

Name::Name(std::string_view label) {
  auto& t = table();
  std::lock_guard<std::mutex> lock(t.mu);
  std::string s(label);
  auto it = t.ids.find(s);
  if (it != t.ids.end()) {
    id_ = it->second;
    label_ = &t.labels[id_];
    return;
  }
  id_ = static_cast<std::uint32_t>(t.labels.size());
  t.labels.push_back(s);
  label_ = &t.labels.back();
  t.ids.emplace(std::move(s), id_);
}

const std::string& Name::empty_label() {
  static const std::string empty;
  return empty;
}

Name fresh_name(Name hint, const NameSet& avoid) {
  if (hint.valid() && !avoid.count(hint)) return hint;
  std::string base = hint.valid() ? hint.label() : std::string("n");
  while (!base.empty() && std::isdigit(static_cast<unsigned char>(base.back()))) base.pop_back();
  if (base.empty()) base = "n";
  for (unsigned k = 1;; ++k) {
    Name candidate(base + std::to_string(k));
    if (!avoid.count(candidate)) return candidate;
  }
}

NameSet set_union(const NameSet& a, const NameSet& b) {
  NameSet r = a;
  r.insert(b.begin(), b.end());
  return r;
}

// ---------------------------------------------------------------------------
// Substitutions

Substitution::Substitution(std::initializer_list<std::pair<Name, Name>> pairs) {
  for (auto& [a, b] : pairs) set(a, b);
}

Name Substitution::operator()(Name x) const {
  auto it = map_.find(x);
  return it == map_.end() ? x : it->second;
}

void Substitution::set(Name from, Name to) {
  if (from == to)
    map_.erase(from);
  else
    map_[from] = to;
}

void Substitution::erase(Name x) { map_.erase(x); }

NameSet Substitution::domain() const {
  NameSet r;
  for (auto& [a, b] : map_) r.insert(a);
  return r;
}

NameSet Substitution::range() const {
  NameSet r;
  for (auto& [a, b] : map_) r.insert(b);
  return r;
}

Substitution compose(const Substitution& s, const Substitution& t) {
  Substitution r;
  for (auto& [a, b] : s.pairs()) r.set(a, t(b));
  for (auto& [a, b] : t.pairs())
    if (!s.in_domain(a)) r.set(a, b);
  return r;
}

// ---------------------------------------------------------------------------
// Labels

NameSet Label::names() const {
  NameSet r;
  if (kind == LabelKind::Tau) return r;
  r.insert(channel);
  r.insert(object);
  return r;
}

NameSet Label::free_names() const {
  NameSet r;
  if (kind == LabelKind::Tau) return r;
  r.insert(channel);
  if (kind == LabelKind::Out) r.insert(object);
  return r;
}

NameSet Label::bound_names() const {
  NameSet r;
  if (is_bound()) r.insert(object);
  return r;
}

Label Label::apply(const Substitution& s) const {
  switch (kind) {
    case LabelKind::Tau: return *this;
    case LabelKind::Out: return out(s(channel), s(object));
    case LabelKind::BoundOut: return bound_out(s(channel), object);
    case LabelKind::In: return in(s(channel), object);
  }
  return *this;
}

bool same_label_up_to_binder(const Label& a, const Label& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == LabelKind::Tau) return true;
  if (a.channel != b.channel) return false;
  return a.is_bound() || a.object == b.object;
}

// ---------------------------------------------------------------------------
// Processes

struct Process::Node {
  ProcessKind kind = ProcessKind::Nil;
  Name n1, n2;
  Label act;
  Process l, r;
  NameSet fn;
  std::size_t size = 1;

  // Children of leaves hold no node; Process() would recurse into nil.
  Node() : l(std::shared_ptr<const Node>()), r(std::shared_ptr<const Node>()) {}
};

Process::Process() {
  static const std::shared_ptr<const Node> nil = std::make_shared<const Node>();
  node_ = nil;
}

Process Process::nil() { return Process(); }

Process Process::nu(Name x, Process body) {
  auto n = std::make_shared<Node>();
  n->kind = ProcessKind::Nu;
  n->n1 = x;
  n->fn = body.free_names();
  n->fn.erase(x);
  n->size = 1 + body.size();
  n->l = std::move(body);
  return Process(std::move(n));
}

Process Process::prefix(Label action, Process cont) {
  if (action.kind == LabelKind::BoundOut) throw std::invalid_argument("bound output is not an action prefix");
  auto n = std::make_shared<Node>();
  n->kind = ProcessKind::Prefix;
  n->act = action;
  n->fn = cont.free_names();
  if (action.kind == LabelKind::In) n->fn.erase(action.object);
  if (action.kind != LabelKind::Tau) n->fn.insert(action.channel);
  if (action.kind == LabelKind::Out) n->fn.insert(action.object);
  n->size = 1 + cont.size();
  n->l = std::move(cont);
  return Process(std::move(n));
}

Process Process::tau(Process cont) { return prefix(Label::tau(), std::move(cont)); }
Process Process::out(Name a, Name b, Process cont) { return prefix(Label::out(a, b), std::move(cont)); }
Process Process::in(Name a, Name x, Process cont) { return prefix(Label::in(a, x), std::move(cont)); }

Process Process::match(Name x, Name y, Process body) {
  auto n = std::make_shared<Node>();
  n->kind = ProcessKind::Match;
  n->n1 = x;
  n->n2 = y;
  n->fn = body.free_names();
  n->fn.insert(x);
  n->fn.insert(y);
  n->size = 1 + body.size();
  n->l = std::move(body);
  return Process(std::move(n));
}

Process Process::par(Process l, Process r) {
  auto n = std::make_shared<Node>();
  n->kind = ProcessKind::Par;
  n->fn = set_union(l.free_names(), r.free_names());
  n->size = 1 + l.size() + r.size();
  n->l = std::move(l);
  n->r = std::move(r);
  return Process(std::move(n));
}

Process Process::sum(Process l, Process r) {
  auto n = std::make_shared<Node>();
  n->kind = ProcessKind::Sum;
  n->fn = set_union(l.free_names(), r.free_names());
  n->size = 1 + l.size() + r.size();
  n->l = std::move(l);
  n->r = std::move(r);
  return Process(std::move(n));
}

ProcessKind Process::kind() const { return node_->kind; }
Name Process::name1() const { return node_->n1; }
Name Process::name2() const { return node_->n2; }
const Label& Process::action() const { return node_->act; }
const Process& Process::left() const { return node_->l; }
const Process& Process::right() const { return node_->r; }
const NameSet& Process::free_names() const { return node_->fn; }
std::size_t Process::size() const { return node_->size; }

namespace {

void name_key(std::string& out, Name x, const std::vector<Name>& env) {
  for (std::size_t i = env.size(); i-- > 0;) {
    if (env[i] == x) {
      out += '#';
      out += std::to_string(i);
      out += ' ';
      return;
    }
  }
  out += x.label();
  out += ' ';
}

void process_key(std::string& out, const Process& p, std::vector<Name>& env) {
  switch (p.kind()) {
    case ProcessKind::Nil: out += "0 "; return;
    case ProcessKind::Nu:
      out += "(n ";
      env.push_back(p.name1());
      process_key(out, p.body(), env);
      env.pop_back();
      out += ") ";
      return;
    case ProcessKind::Prefix: {
      const Label& a = p.action();
      switch (a.kind) {
        case LabelKind::Tau:
          out += "(t ";
          process_key(out, p.body(), env);
          break;
        case LabelKind::Out:
          out += "(o ";
          name_key(out, a.channel, env);
          name_key(out, a.object, env);
          process_key(out, p.body(), env);
          break;
        default:
          out += "(i ";
          name_key(out, a.channel, env);
          env.push_back(a.object);
          process_key(out, p.body(), env);
          env.pop_back();
          break;
      }
      out += ") ";
      return;
    }
    case ProcessKind::Match:
      out += "(m ";
      name_key(out, p.name1(), env);
      name_key(out, p.name2(), env);
      process_key(out, p.body(), env);
      out += ") ";
      return;
    case ProcessKind::Par:
    case ProcessKind::Sum:
      out += p.kind() == ProcessKind::Par ? "(| " : "(+ ";
      process_key(out, p.left(), env);
      process_key(out, p.right(), env);
      out += ") ";
      return;
  }
}

}  // namespace

std::string Process::key() const {
  std::string out;
  std::vector<Name> env;
  process_key(out, *this, env);
  return out;
}

std::string abstraction_key(Name binder, const Process& body) {
  std::string out = "(a ";
  std::vector<Name> env{binder};
  process_key(out, body, env);
  out += ")";
  return out;
}

bool alpha_eq(const Process& a, const Process& b) { return a.same_node(b) || a.key() == b.key(); }

namespace {

bool touches(const NameSet& fn, const Substitution& s) {
  if (s.is_identity()) return false;
  for (auto& [a, b] : s.pairs())
    if (fn.count(a)) return true;
  return false;
}

// Prepares the substitution for going under a binder `x` over a scope whose
// free names are `fn`. Returns the binder to use.
Name under_binder(Name x, const NameSet& fn, Substitution& s) {
  s.erase(x);
  NameSet img;
  for (Name u : fn)
    if (u != x) img.insert(s(u));
  if (!img.count(x)) return x;
  NameSet avoid = set_union(fn, img);
  Name y = fresh_name(x, avoid);
  s.set(x, y);
  return y;
}

}  // namespace

Process apply_subst(const Process& p, const Substitution& s) {
  if (!touches(p.free_names(), s)) return p;
  switch (p.kind()) {
    case ProcessKind::Nil: return p;
    case ProcessKind::Nu: {
      Substitution s2 = s;
      Name x = under_binder(p.name1(), p.body().free_names(), s2);
      return Process::nu(x, apply_subst(p.body(), s2));
    }
    case ProcessKind::Prefix: {
      const Label& a = p.action();
      switch (a.kind) {
        case LabelKind::Tau: return Process::tau(apply_subst(p.body(), s));
        case LabelKind::Out: return Process::out(s(a.channel), s(a.object), apply_subst(p.body(), s));
        default: {
          Substitution s2 = s;
          Name x = under_binder(a.object, p.body().free_names(), s2);
          return Process::in(s(a.channel), x, apply_subst(p.body(), s2));
        }
      }
    }
    case ProcessKind::Match: return Process::match(s(p.name1()), s(p.name2()), apply_subst(p.body(), s));
    case ProcessKind::Par: return Process::par(apply_subst(p.left(), s), apply_subst(p.right(), s));
    case ProcessKind::Sum: return Process::sum(apply_subst(p.left(), s), apply_subst(p.right(), s));
  }
  return p;
}

std::pair<Label, Process> freshen_binder(const Label& l, const Process& residual, const NameSet& avoid) {
  if (!l.is_bound() || !avoid.count(l.object)) return {l, residual};
  Name z = fresh_name(l.object, set_union(avoid, residual.free_names()));
  return {l.with_binder(z), apply_subst(residual, Substitution{{l.object, z}})};
}

// ---------------------------------------------------------------------------
// Formulae

struct Formula::Node {
  FormulaKind kind = FormulaKind::Top;
  Name n1, n2;
  Label label;
  Formula l, r;
  NameSet fn;
  std::size_t size = 1;

  Node() : l(std::shared_ptr<const Node>()), r(std::shared_ptr<const Node>()) {}
};

Formula::Formula() {
  static const std::shared_ptr<const Node> tt = std::make_shared<const Node>();
  node_ = tt;
}

Formula Formula::top() { return Formula(); }

Formula Formula::bot() {
  static const std::shared_ptr<const Node> ff = [] {
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::Bot;
    return std::shared_ptr<const Node>(n);
  }();
  return Formula(ff);
}

Formula Formula::conj(Formula l, Formula r) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::And;
  n->fn = set_union(l.free_names(), r.free_names());
  n->size = 1 + l.size() + r.size();
  n->l = std::move(l);
  n->r = std::move(r);
  return Formula(std::move(n));
}

Formula Formula::disj(Formula l, Formula r) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Or;
  n->fn = set_union(l.free_names(), r.free_names());
  n->size = 1 + l.size() + r.size();
  n->l = std::move(l);
  n->r = std::move(r);
  return Formula(std::move(n));
}

Formula Formula::imp(Formula l, Formula r) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Imp;
  n->fn = set_union(l.free_names(), r.free_names());
  n->size = 1 + l.size() + r.size();
  n->l = std::move(l);
  n->r = std::move(r);
  return Formula(std::move(n));
}

Formula Formula::eq(Name x, Name y) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Eq;
  n->n1 = x;
  n->n2 = y;
  n->fn = {x, y};
  return Formula(std::move(n));
}

Formula Formula::diam(Label lab, Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Diam;
  n->fn = body.free_names();
  if (lab.is_bound()) n->fn.erase(lab.object);
  for (Name x : lab.free_names()) n->fn.insert(x);
  n->size = 1 + body.size();
  n->label = lab;
  n->l = std::move(body);
  return Formula(std::move(n));
}

Formula Formula::box(Label lab, Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Box;
  n->fn = body.free_names();
  if (lab.is_bound()) n->fn.erase(lab.object);
  for (Name x : lab.free_names()) n->fn.insert(x);
  n->size = 1 + body.size();
  n->label = lab;
  n->l = std::move(body);
  return Formula(std::move(n));
}

FormulaKind Formula::kind() const { return node_->kind; }
const Formula& Formula::left() const { return node_->l; }
const Formula& Formula::right() const { return node_->r; }
const Label& Formula::label() const { return node_->label; }
Name Formula::name1() const { return node_->n1; }
Name Formula::name2() const { return node_->n2; }
const NameSet& Formula::free_names() const { return node_->fn; }
std::size_t Formula::size() const { return node_->size; }

bool Formula::is_negation() const { return kind() == FormulaKind::Imp && right().kind() == FormulaKind::Bot; }

namespace {

void label_key(std::string& out, const Label& l, std::vector<Name>& env) {
  switch (l.kind) {
    case LabelKind::Tau: out += "t "; break;
    case LabelKind::Out:
      out += "o ";
      name_key(out, l.channel, env);
      name_key(out, l.object, env);
      break;
    case LabelKind::BoundOut:
      out += "b ";
      name_key(out, l.channel, env);
      break;
    case LabelKind::In:
      out += "i ";
      name_key(out, l.channel, env);
      break;
  }
}

void formula_key(std::string& out, const Formula& f, std::vector<Name>& env) {
  switch (f.kind()) {
    case FormulaKind::Top: out += "T "; return;
    case FormulaKind::Bot: out += "F "; return;
    case FormulaKind::Eq:
      out += "(= ";
      name_key(out, f.name1(), env);
      name_key(out, f.name2(), env);
      out += ") ";
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Imp:
      out += f.kind() == FormulaKind::And ? "(& " : f.kind() == FormulaKind::Or ? "(v " : "(> ";
      formula_key(out, f.left(), env);
      formula_key(out, f.right(), env);
      out += ") ";
      return;
    case FormulaKind::Diam:
    case FormulaKind::Box: {
      out += f.kind() == FormulaKind::Diam ? "(D " : "(B ";
      label_key(out, f.label(), env);
      bool bound = f.label().is_bound();
      if (bound) env.push_back(f.label().object);
      formula_key(out, f.body(), env);
      if (bound) env.pop_back();
      out += ") ";
      return;
    }
  }
}

}  // namespace

std::string Formula::key() const {
  std::string out;
  std::vector<Name> env;
  formula_key(out, *this, env);
  return out;
}

bool alpha_eq(const Formula& a, const Formula& b) { return a.key() == b.key(); }

Formula apply_subst(const Formula& f, const Substitution& s) {
  if (!touches(f.free_names(), s)) return f;
  switch (f.kind()) {
    case FormulaKind::Top:
    case FormulaKind::Bot: return f;
    case FormulaKind::Eq: return Formula::eq(s(f.name1()), s(f.name2()));
    case FormulaKind::And: return Formula::conj(apply_subst(f.left(), s), apply_subst(f.right(), s));
    case FormulaKind::Or: return Formula::disj(apply_subst(f.left(), s), apply_subst(f.right(), s));
    case FormulaKind::Imp: return Formula::imp(apply_subst(f.left(), s), apply_subst(f.right(), s));
    case FormulaKind::Diam:
    case FormulaKind::Box: {
      Label l = f.label().apply(s);
      Formula body;
      if (l.is_bound()) {
        Substitution s2 = s;
        Name z = under_binder(l.object, f.body().free_names(), s2);
        l = l.with_binder(z);
        body = apply_subst(f.body(), s2);
      } else {
        body = apply_subst(f.body(), s);
      }
      return f.kind() == FormulaKind::Diam ? Formula::diam(l, body) : Formula::box(l, body);
    }
  }
  return f;
}

std::pair<Label, Formula> freshen_modality(const Formula& f, const NameSet& avoid) {
  const Label& l = f.label();
  if (!l.is_bound() || !avoid.count(l.object)) return {l, f.body()};
  Name z = fresh_name(l.object, set_union(avoid, f.body().free_names()));
  return {l.with_binder(z), apply_subst(f.body(), Substitution{{l.object, z}})};
}

Formula box_subst(const std::vector<std::pair<Name, Name>>& pairs, Formula phi) {
  for (const auto& [x, z] : pairs) phi = Formula::imp(Formula::eq(x, z), std::move(phi));
  return phi;
}

Formula big_and(const std::vector<Formula>& fs) {
  if (fs.empty()) return Formula::top();
  Formula r = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) r = Formula::conj(fs[i], r);
  return r;
}

Formula big_or(const std::vector<Formula>& fs) {
  if (fs.empty()) return Formula::bot();
  Formula r = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) r = Formula::disj(fs[i], r);
  return r;
}

}  // namespace openpi
