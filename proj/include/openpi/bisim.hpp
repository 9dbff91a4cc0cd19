// Open bisimilarity as a game, with strategies for non-bisimilarity.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "openpi/history.hpp"
#include "openpi/syntax.hpp"

namespace openpi {

enum class Side { Left, Right };

struct StrategyNode;
using Strategy = std::shared_ptr<const StrategyNode>;

struct Response {
  Process residual;
  Strategy strategy;  // for the pair (leader residual, residual)
};

/// One step of a winning strategy for the attacker. After applying sigma
/// (respectful for `history`) the leader makes a transition with `label`;
/// every response of the other side with the same label loses, as shown by
/// the subtrees. A node without responses is a base case.
struct StrategyNode {
  Process left, right;  // the pair at this node, before sigma
  History history;
  Side leader = Side::Left;
  Substitution sigma;
  Label label;  // in terms of the names after sigma
  Process leader_residual;
  std::optional<Tag> extension;  // appended for bound labels, binder label.object
  std::vector<Response> responses;

  /// The history of the subtrees: history.sigma, extended for bound labels.
  History child_history() const;
};

struct Triple {
  Process left, right;
  History history;
};

struct Verdict {
  bool bisimilar = false;
  /// When bisimilar: a symmetric relation closed under the bisimulation
  /// clauses over representative substitutions.
  std::vector<Triple> relation;
  /// When not bisimilar.
  Strategy strategy;
};

class OpenBisimChecker {
 public:
  Verdict check(const Process& p, const Process& q, const History& h);
  bool bisimilar(const Process& p, const Process& q, const History& h) { return !game(p, q, h); }

 private:
  Strategy game(const Process& p, const Process& q, const History& h);
  void record(const Process& p, const Process& q, const History& h);

  struct Entry {
    bool bisimilar;
    Strategy strategy;
  };
  std::unordered_map<std::string, Entry> memo_;
  std::unordered_map<std::string, Triple> relation_;
};

Verdict open_bisim(const Process& p, const Process& q, const History& h);
/// Open bisimilarity at the history of inputs over fv(P) and fv(Q).
Verdict open_bisim_top(const Process& p, const Process& q);

/// Binder used when `label` (a bound label of one side) is played at (P, Q, h).
Name game_binder(const Label& label, const Process& residual, const Process& p, const Process& q, const History& h);

/// Key identifying a triple up to alpha-equivalence.
std::string triple_key(const Process& p, const Process& q, const History& h);

/// Checks that `rel` is symmetric and closed under the clauses of open
/// bisimulation. On failure returns false and sets `why`.
bool check_open_bisimulation(const std::vector<Triple>& rel, std::string* why = nullptr);

/// Checks that the strategy is well formed: respectful substitutions, real
/// transitions, complete response lists and correctly oriented subtrees.
bool validate_strategy(const Strategy& s, std::string* why = nullptr);

/// Number of nodes in a strategy tree.
std::size_t strategy_size(const Strategy& s);

}  // namespace openpi
