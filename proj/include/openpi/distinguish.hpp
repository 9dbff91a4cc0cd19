// Distinguishing formulae from strategies for non-bisimilarity.
#pragma once

#include <stdexcept>
#include <variant>

#include "openpi/bisim.hpp"
#include "openpi/syntax.hpp"

namespace openpi {

/// `left` is satisfied by the left process of the strategy root and not by
/// the right one; `right` the other way round.
struct FormulaPair {
  Formula left;
  Formula right;
  bool verified = false;
};

class VerificationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Builds the formula pair for a strategy and checks it with the satisfaction
/// relation at the root history. Throws VerificationFailed if it does not
/// distinguish.
FormulaPair distinguish(const Strategy& s);

/// Builds the pair without checking it.
FormulaPair construct_pair(const Strategy& s);

/// Checks that the pair distinguishes (p, q) at h.
bool verify_pair(const Process& p, const Process& q, const History& h, const FormulaPair& pair);

/// Identity laws (phi /\ tt, phi \/ ff) and duplicate conjuncts/disjuncts.
Formula simplify(const Formula& f);

struct Bisimilar {
  Verdict verdict;
};

/// Runs the open bisimulation game at the top-level history and, if the
/// processes differ, returns a verified formula pair.
std::variant<FormulaPair, Bisimilar> distinguish_pair(const Process& p, const Process& q);

}  // namespace openpi
