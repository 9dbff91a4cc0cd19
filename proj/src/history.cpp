#include "openpi/history.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace openpi {

History::History(std::vector<HistoryEntry> entries) : entries_(std::move(entries)) {
  NameSet seen;
  for (auto& e : entries_)
    if (!seen.insert(e.name).second) throw std::invalid_argument("name " + e.name.label() + " occurs twice in history");
}

History History::inputs(const std::vector<Name>& names) {
  History h;
  for (Name x : names)
    if (!h.contains(x)) h.entries_.push_back({x, Tag::Input});
  return h;
}

bool History::contains(Name x) const {
  for (auto& e : entries_)
    if (e.name == x) return true;
  return false;
}

NameSet History::names() const {
  NameSet r;
  for (auto& e : entries_) r.insert(e.name);
  return r;
}

History History::extend(Name x, Tag t) const {
  if (contains(x)) throw std::invalid_argument("name " + x.label() + " already in history");
  History h = *this;
  h.entries_.push_back({x, t});
  return h;
}

History History::apply(const Substitution& s) const {
  if (s.is_identity()) return *this;
  History h;
  for (auto& e : entries_) {
    Name y = s(e.name);
    if (!h.contains(y)) h.entries_.push_back({y, e.tag});
  }
  return h;
}

History History::project(const NameSet& keep) const {
  History h;
  for (auto& e : entries_)
    if (keep.count(e.name)) h.entries_.push_back(e);
  return h;
}

std::string History::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += '.';
    out += entries_[i].name.label();
    out += entries_[i].tag == Tag::Input ? "^i" : "^o";
  }
  return out;
}

History History::parse(const std::string& text) {
  std::vector<HistoryEntry> es;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, '.')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    auto caret = item.find('^');
    if (caret == std::string::npos || caret == 0 || caret + 2 != item.size())
      throw std::invalid_argument("malformed history entry '" + item + "'");
    char t = item[caret + 1];
    if (t != 'i' && t != 'o') throw std::invalid_argument("history tag must be i or o in '" + item + "'");
    es.push_back({Name(item.substr(0, caret)), t == 'i' ? Tag::Input : Tag::Output});
  }
  return History(std::move(es));
}

bool respects(const Substitution& sigma, const History& h) {
  const auto& es = h.entries();
  for (std::size_t k = 0; k < es.size(); ++k) {
    if (es[k].tag != Tag::Output) continue;
    Name x = es[k].name;
    if (sigma(x) != x) return false;
    for (std::size_t j = 0; j < k; ++j)
      if (sigma(es[j].name) == x) return false;
  }
  return true;
}

std::vector<Substitution> representatives(const History& h, const NameSet& relevant) {
  std::vector<HistoryEntry> order;
  for (Name x : relevant)
    if (!h.contains(x)) order.push_back({x, Tag::Input});
  for (auto& e : h.entries()) order.push_back(e);
  History ext(order);
  const std::size_t n = order.size();

  std::vector<std::pair<std::size_t, Substitution>> found;
  std::vector<std::size_t> block(n, 0);
  auto next = [&]() {
    // Restricted growth strings: block[0] = 0, block[i] <= max(block[0..i-1]) + 1.
    for (std::size_t i = n; i-- > 1;) {
      std::size_t m = 0;
      for (std::size_t j = 0; j < i; ++j) m = std::max(m, block[j] + 1);
      if (block[i] < m) {
        ++block[i];
        std::fill(block.begin() + static_cast<std::ptrdiff_t>(i) + 1, block.end(), 0);
        return true;
      }
    }
    return false;
  };
  do {
    Substitution s;
    std::vector<Name> rep;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (block[i] == rep.size()) {
        rep.push_back(order[i].name);
      } else {
        // Only inputs may be merged onto an earlier name.
        if (order[i].tag == Tag::Output) ok = false;
        s.set(order[i].name, rep[block[i]]);
      }
    }
    if (ok && respects(s, ext)) found.emplace_back(n - rep.size(), std::move(s));
  } while (next());
  std::stable_sort(found.begin(), found.end(), [](auto& a, auto& b) { return a.first < b.first; });
  std::vector<Substitution> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

std::vector<Substitution> representatives(const History& h) { return representatives(h, h.names()); }

std::vector<std::pair<Name, Name>> ordered_pairs(const Substitution& sigma, const History& h) {
  std::vector<std::pair<Name, Name>> out;
  for (auto& e : h.entries())
    if (sigma.in_domain(e.name)) out.emplace_back(sigma(e.name), e.name);
  for (auto& [a, b] : sigma.pairs())
    if (!h.contains(a)) out.emplace_back(b, a);
  return out;
}

}  // namespace openpi
