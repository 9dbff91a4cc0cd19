// Histories of input and output names, respectful substitutions and
// representative substitutions.
#pragma once

#include <string>
#include <vector>

#include "openpi/syntax.hpp"

namespace openpi {

enum class Tag { Input, Output };

struct HistoryEntry {
  Name name;
  Tag tag;
  friend bool operator==(const HistoryEntry& a, const HistoryEntry& b) { return a.name == b.name && a.tag == b.tag; }
};

/// An ordered list of distinct names, each tagged input or output.
class History {
 public:
  History() = default;
  explicit History(std::vector<HistoryEntry> entries);

  static History inputs(const std::vector<Name>& names);

  const std::vector<HistoryEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  bool contains(Name x) const;
  NameSet names() const;

  /// Appends x; throws std::invalid_argument if x already occurs.
  History extend(Name x, Tag t) const;
  /// Applies `s` to every entry, keeping the first occurrence of merged names.
  History apply(const Substitution& s) const;
  /// Keeps only the entries whose names are in `keep`, in order.
  History project(const NameSet& keep) const;

  /// "a^i.x^o.y^i"; the empty history prints as "".
  std::string to_string() const;
  /// Inverse of to_string; throws std::invalid_argument on malformed text.
  static History parse(const std::string& text);

  friend bool operator==(const History& a, const History& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<HistoryEntry> entries_;
};

/// sigma respects h: outputs are fixed, and no name introduced before an
/// output is mapped onto it.
bool respects(const Substitution& sigma, const History& h);

/// Representative respectful substitutions over `relevant` (a superset of the
/// names of h; the extra names count as inputs preceding h). One
/// substitution per partition of the relevant names, each block mapped to its
/// earliest member, keeping those that respect h. Identity first, then by
/// increasing number of merged names.
std::vector<Substitution> representatives(const History& h, const NameSet& relevant);
std::vector<Substitution> representatives(const History& h);

/// The pairs (target, source) of an idempotent substitution, ordered by the
/// position of the source in h (names outside h last, by label).
std::vector<std::pair<Name, Name>> ordered_pairs(const Substitution& sigma, const History& h);

}  // namespace openpi
