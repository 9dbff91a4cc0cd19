// Classical counterparts of OM and open bisimilarity: classical OM,
// late bisimilarity, late equivalence and intermediate bisimilarity.
#pragma once

#include <string>
#include <unordered_map>

#include "openpi/history.hpp"
#include "openpi/syntax.hpp"

namespace openpi {

/// Classical OM with free names read as distinct constants. Input binders
/// are instantiated eagerly with every name of the judgement and one fresh
/// name.
class ClassicalSat {
 public:
  bool sat(const Process& p, const Formula& phi);

 private:
  std::unordered_map<std::string, bool> memo_;
};

bool classical_sat(const Process& p, const Formula& phi);

/// Classical OM closed under all substitutions: for every partition of
/// fv(P) and fv(phi), P sigma satisfies phi sigma classically.
bool late_sat(const Process& p, const Formula& phi);

class LateChecker {
 public:
  bool bisimilar(const Process& p, const Process& q);

 private:
  bool half(const Process& p, const Process& q);
  std::unordered_map<std::string, bool> memo_;
};

bool late_bisim(const Process& p, const Process& q);

/// Late bisimilarity under every substitution of the free names.
bool late_equiv(const Process& p, const Process& q);

/// Names that intermediate bisimilarity never merges.
using NameEnvironment = NameSet;

class IntermediateChecker {
 public:
  bool bisimilar(const Process& p, const Process& q, const NameEnvironment& env);

 private:
  bool step(const Process& p, const Process& q, const NameEnvironment& env);
  bool half(const Process& p, const Process& q, const NameEnvironment& env);
  std::unordered_map<std::string, bool> memo_;
};

bool intermediate_bisim(const Process& p, const Process& q, const NameEnvironment& env = {});

/// OM satisfaction with the late reading of [a(x)].
bool sat_late_box_input(const Process& p, const History& h, const Formula& phi);

}  // namespace openpi
