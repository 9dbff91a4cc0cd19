// Satisfaction for the intuitionistic modal logic OM.
#pragma once

#include <stdexcept>
#include <string>
#include <unordered_map>

#include "openpi/history.hpp"
#include "openpi/syntax.hpp"

namespace openpi {

class IllFormedJudgement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// How [a(x)] is read: as the basic OM box or as the late box, which
/// asks for some instantiation of x after each input transition.
enum class InputBox { Basic, Late };

class SatChecker {
 public:
  explicit SatChecker(InputBox mode = InputBox::Basic) : mode_(mode) {}

  /// P |=^h phi. Throws IllFormedJudgement if a free name of P or phi is
  /// missing from h.
  bool sat(const Process& p, const History& h, const Formula& phi);

  std::size_t memo_size() const { return memo_.size(); }

 private:
  bool eval(const Process& p, const History& h, const Formula& phi);
  bool eval_box(const Process& p, const History& h, const Formula& phi);

  InputBox mode_;
  std::unordered_map<std::string, bool> memo_;
};

bool sat(const Process& p, const History& h, const Formula& phi);

/// The history listing fv(P) then fv(phi) as inputs, in first-occurrence order.
History top_history(const Process& p, const Formula& phi);
/// Inputs over fv(P) then fv(Q).
History top_history(const Process& p, const Process& q);

/// sat at the all-inputs history over fv(P) and fv(phi).
bool sat_top(const Process& p, const Formula& phi);

/// Names in first-occurrence order (left to right).
std::vector<Name> ordered_free_names(const Process& p);
std::vector<Name> ordered_free_names(const Formula& f);

}  // namespace openpi
