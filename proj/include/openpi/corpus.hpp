// Example corpus: stanzas of processes with expected verdicts and facts.
// The file format is described in docs/corpus-format.md.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "openpi/bisim.hpp"
#include "openpi/history.hpp"
#include "openpi/syntax.hpp"

namespace openpi {

class CorpusError : public std::runtime_error {
 public:
  CorpusError(std::size_t line, const std::string& msg);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

enum class Semantics { OM, Classical, Late, LateBox };

Semantics semantics_from_string(const std::string& s);  // throws std::invalid_argument
std::string to_string(Semantics s);

struct SatFact {
  Side side = Side::Left;
  std::optional<History> history;  // top-level history when absent
  Semantics semantics = Semantics::OM;
  bool expected = true;
  Formula formula;
  std::size_t line = 0;
};

struct CorpusEntry {
  std::string name;
  std::string ref;
  Process left;
  std::optional<Process> right;
  NameSet env;
  /// Relation name (open, intermediate, late-eq, late) to expected verdict.
  std::map<std::string, bool> expect;
  std::vector<SatFact> facts;
  std::optional<bool> distinguishable;  // "distinguish: verified" or "bisimilar"
  std::optional<Formula> phi_left, phi_right;
  /// Set by "disputed:"; mismatches are reported but do not fail the run.
  std::optional<std::string> disputed;
  std::size_t line = 0;
};

std::vector<CorpusEntry> parse_corpus(std::string_view text);
std::vector<CorpusEntry> load_corpus(const std::string& path);

enum class CheckStatus { Pass, Fail, Disputed };

struct CheckResult {
  std::string entry;
  std::string check;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

std::vector<CheckResult> run_entry(const CorpusEntry& e);

}  // namespace openpi
