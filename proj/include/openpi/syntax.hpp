// Core syntax of the finite pi-calculus and of the intuitionistic modal logic OM.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace openpi {

/// An interned name. Two names are equal iff their labels are equal.
/// Ordering is by label so that every enumeration is reproducible.
class Name {
 public:
  Name() = default;
  explicit Name(std::string_view label);

  const std::string& label() const { return *label_; }
  std::uint32_t id() const { return id_; }
  bool valid() const { return id_ != 0; }

  friend bool operator==(Name a, Name b) { return a.id_ == b.id_; }
  friend bool operator!=(Name a, Name b) { return a.id_ != b.id_; }
  friend bool operator<(Name a, Name b) { return a.id_ != b.id_ && *a.label_ < *b.label_; }

 private:
  std::uint32_t id_ = 0;
  const std::string* label_ = &empty_label();
  static const std::string& empty_label();
};

using NameSet = std::set<Name>;

/// Returns `hint` if it is not in `avoid`, otherwise the first of
/// base1, base2, ... (base = hint without trailing digits) not in `avoid`.
Name fresh_name(Name hint, const NameSet& avoid);

NameSet set_union(const NameSet& a, const NameSet& b);

// ---------------------------------------------------------------------------
// Substitutions

/// A finite map on names; identity outside its domain. Identity entries are
/// never stored.
class Substitution {
 public:
  Substitution() = default;
  Substitution(std::initializer_list<std::pair<Name, Name>> pairs);

  Name operator()(Name x) const;
  void set(Name from, Name to);
  void erase(Name x);
  bool is_identity() const { return map_.empty(); }
  bool in_domain(Name x) const { return map_.count(x) != 0; }
  NameSet domain() const;
  NameSet range() const;
  const std::map<Name, Name>& pairs() const { return map_; }
  std::size_t size() const { return map_.size(); }

  friend bool operator==(const Substitution& a, const Substitution& b) { return a.map_ == b.map_; }

 private:
  std::map<Name, Name> map_;
};

/// x(compose(s, t)) = t(s(x)).
Substitution compose(const Substitution& s, const Substitution& t);

// ---------------------------------------------------------------------------
// Labels (also used for action prefixes, which are never BoundOut)

enum class LabelKind { Tau, Out, BoundOut, In };

struct Label {
  LabelKind kind = LabelKind::Tau;
  Name channel;
  Name object;  // payload for Out, binder for BoundOut and In

  static Label tau() { return {}; }
  static Label out(Name a, Name b) { return {LabelKind::Out, a, b}; }
  static Label bound_out(Name a, Name z) { return {LabelKind::BoundOut, a, z}; }
  static Label in(Name a, Name z) { return {LabelKind::In, a, z}; }

  bool is_bound() const { return kind == LabelKind::BoundOut || kind == LabelKind::In; }
  NameSet names() const;
  NameSet free_names() const;
  NameSet bound_names() const;
  /// Applies `s` to the free names; the binder is left untouched.
  Label apply(const Substitution& s) const;
  Label with_binder(Name z) const { return {kind, channel, z}; }

  friend bool operator==(const Label& a, const Label& b) {
    return a.kind == b.kind && a.channel == b.channel && a.object == b.object;
  }
};

/// Equality of labels, comparing bound labels up to their binder.
bool same_label_up_to_binder(const Label& a, const Label& b);

// ---------------------------------------------------------------------------
// Processes

enum class ProcessKind { Nil, Nu, Prefix, Match, Par, Sum };

class Process {
 public:
  Process();  // the inactive process 0

  static Process nil();
  static Process nu(Name x, Process body);
  static Process prefix(Label action, Process cont);
  static Process tau(Process cont = Process());
  static Process out(Name a, Name b, Process cont = Process());
  static Process in(Name a, Name x, Process cont = Process());
  static Process match(Name x, Name y, Process body);
  static Process par(Process l, Process r);
  static Process sum(Process l, Process r);

  ProcessKind kind() const;
  /// Nu binder, or the left name of a match.
  Name name1() const;
  /// Right name of a match.
  Name name2() const;
  const Label& action() const;
  /// Body of Nu, Match and Prefix; left operand of Par and Sum.
  const Process& left() const;
  const Process& right() const;
  const Process& body() const { return left(); }

  const NameSet& free_names() const;
  std::size_t size() const;

  /// Alpha-canonical key: free names by label, bound names by binding depth.
  std::string key() const;

  bool same_node(const Process& o) const { return node_ == o.node_; }

 private:
  struct Node;
  explicit Process(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

inline const NameSet& free_names(const Process& p) { return p.free_names(); }
Process apply_subst(const Process& p, const Substitution& s);
bool alpha_eq(const Process& a, const Process& b);
/// Canonical key for the abstraction binding `binder` in `body`.
std::string abstraction_key(Name binder, const Process& body);

// ---------------------------------------------------------------------------
// Formulae

enum class FormulaKind { Top, Bot, And, Or, Imp, Eq, Diam, Box };

class Formula {
 public:
  Formula();  // tt

  static Formula top();
  static Formula bot();
  static Formula conj(Formula l, Formula r);
  static Formula disj(Formula l, Formula r);
  static Formula imp(Formula l, Formula r);
  static Formula neg(Formula f) { return imp(std::move(f), bot()); }
  static Formula eq(Name x, Name y);
  static Formula diam(Label l, Formula body);
  static Formula box(Label l, Formula body);

  FormulaKind kind() const;
  const Formula& left() const;
  const Formula& right() const;
  const Formula& body() const { return left(); }
  const Label& label() const;
  Name name1() const;
  Name name2() const;
  bool is_negation() const;

  const NameSet& free_names() const;
  std::size_t size() const;
  std::string key() const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

inline const NameSet& free_names(const Formula& f) { return f.free_names(); }
Formula apply_subst(const Formula& f, const Substitution& s);
bool alpha_eq(const Formula& a, const Formula& b);

/// [sigma]phi for sigma = {x1->z1,...,xn->zn}: (xn=zn) => ... => (x1=z1) => phi.
Formula box_subst(const std::vector<std::pair<Name, Name>>& pairs, Formula phi);
/// Right-nested conjunction; tt for an empty list.
Formula big_and(const std::vector<Formula>& fs);
/// Right-nested disjunction; ff for an empty list.
Formula big_or(const std::vector<Formula>& fs);

/// Renames the binder of a bound-label modality away from `avoid`.
/// Returns the (possibly renamed) label and body.
std::pair<Label, Formula> freshen_modality(const Formula& f, const NameSet& avoid);
/// Renames the binder of a bound transition (label, residual) away from `avoid`.
std::pair<Label, Process> freshen_binder(const Label& l, const Process& residual, const NameSet& avoid);

}  // namespace openpi
