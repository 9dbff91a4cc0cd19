#include "openpi/corpus.hpp"

#include <fstream>
#include <sstream>

#include "openpi/distinguish.hpp"
#include "openpi/parse.hpp"
#include "openpi/sat.hpp"
#include "openpi/spectrum.hpp"

namespace openpi {

CorpusError::CorpusError(std::size_t line, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}

Semantics semantics_from_string(const std::string& s) {
  if (s == "om") return Semantics::OM;
  if (s == "classical") return Semantics::Classical;
  if (s == "late") return Semantics::Late;
  if (s == "late-box") return Semantics::LateBox;
  throw std::invalid_argument("unknown semantics '" + s + "' (expected om, classical, late or late-box)");
}

std::string to_string(Semantics s) {
  switch (s) {
    case Semantics::OM: return "om";
    case Semantics::Classical: return "classical";
    case Semantics::Late: return "late";
    case Semantics::LateBox: return "late-box";
  }
  return "";
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// Splits off the first `n` whitespace-separated words; the remainder is the
// last element.
std::vector<std::string> split_words(const std::string& s, std::size_t n, std::size_t line) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t b = s.find_first_not_of(" \t", pos);
    if (b == std::string::npos) throw CorpusError(line, "too few fields");
    std::size_t e = s.find_first_of(" \t", b);
    if (e == std::string::npos) e = s.size();
    out.push_back(s.substr(b, e - b));
    pos = e;
  }
  std::string rest = trim(std::string_view(s).substr(pos));
  if (rest.empty()) throw CorpusError(line, "missing formula");
  out.push_back(rest);
  return out;
}

bool parse_bool(const std::string& s, std::size_t line) {
  if (s == "true" || s == "yes") return true;
  if (s == "false" || s == "no") return false;
  throw CorpusError(line, "expected true/false, got '" + s + "'");
}

Side parse_side(const std::string& s, std::size_t line) {
  if (s == "left") return Side::Left;
  if (s == "right") return Side::Right;
  throw CorpusError(line, "expected left or right, got '" + s + "'");
}

template <class F>
auto with_line(std::size_t line, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw CorpusError(line, e.what());
  } catch (const std::invalid_argument& e) {
    throw CorpusError(line, e.what());
  }
}

void finish(std::optional<CorpusEntry>& cur, std::vector<CorpusEntry>& out, std::vector<bool>& has_left) {
  if (!cur) return;
  if (cur->name.empty()) throw CorpusError(cur->line, "stanza without name");
  if (!has_left.back()) throw CorpusError(cur->line, "stanza '" + cur->name + "' without left process");
  bool pair_needed = !cur->expect.empty() || cur->distinguishable.has_value();
  if (pair_needed && !cur->right) throw CorpusError(cur->line, "stanza '" + cur->name + "' needs a right process");
  for (auto& f : cur->facts)
    if (f.side == Side::Right && !cur->right) throw CorpusError(f.line, "fact about a missing right process");
  out.push_back(std::move(*cur));
  cur.reset();
}

}  // namespace

std::vector<CorpusEntry> parse_corpus(std::string_view text) {
  std::vector<CorpusEntry> out;
  std::optional<CorpusEntry> cur;
  std::vector<bool> has_left;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string l = trim(raw);
    if (!l.empty() && l[0] == '#') continue;
    if (l.empty()) {
      finish(cur, out, has_left);
      continue;
    }
    std::size_t colon = l.find(':');
    if (colon == std::string::npos) throw CorpusError(line, "expected 'key: value'");
    std::string key = trim(std::string_view(l).substr(0, colon));
    std::string value = trim(std::string_view(l).substr(colon + 1));
    if (!cur) {
      cur.emplace();
      cur->line = line;
      has_left.push_back(false);
    }
    CorpusEntry& e = *cur;
    if (key == "name") {
      e.name = value;
    } else if (key == "ref") {
      e.ref = value;
    } else if (key == "left") {
      e.left = with_line(line, [&] { return parse_process(value); });
      has_left.back() = true;
    } else if (key == "right") {
      e.right = with_line(line, [&] { return parse_process(value); });
    } else if (key == "env") {
      std::istringstream ws(value);
      std::string w;
      while (std::getline(ws, w, ','))
        if (!trim(w).empty()) e.env.insert(Name(trim(w)));
    } else if (key == "expect") {
      std::istringstream ws(value);
      std::string w;
      while (ws >> w) {
        std::size_t eq = w.find('=');
        if (eq == std::string::npos) throw CorpusError(line, "expected relation=yes|no, got '" + w + "'");
        std::string rel = w.substr(0, eq);
        if (rel != "open" && rel != "intermediate" && rel != "late-eq" && rel != "late")
          throw CorpusError(line, "unknown relation '" + rel + "'");
        e.expect[rel] = parse_bool(w.substr(eq + 1), line);
      }
    } else if (key == "sat" || key == "sat-at") {
      bool at = key == "sat-at";
      auto ws = split_words(value, at ? 4 : 3, line);
      SatFact f;
      f.line = line;
      f.side = parse_side(ws[0], line);
      std::size_t i = 1;
      if (at) {
        const std::string& h = ws[i++];
        f.history = with_line(line, [&] { return History::parse(h == "-" ? "" : h); });
      }
      f.semantics = with_line(line, [&] { return semantics_from_string(ws[i]); });
      ++i;
      f.expected = parse_bool(ws[i++], line);
      f.formula = with_line(line, [&] { return parse_formula(ws[i]); });
      if (at && f.semantics != Semantics::OM && f.semantics != Semantics::LateBox)
        throw CorpusError(line, "sat-at needs om or late-box semantics");
      e.facts.push_back(f);
    } else if (key == "distinguish") {
      if (value == "verified")
        e.distinguishable = true;
      else if (value == "bisimilar")
        e.distinguishable = false;
      else
        throw CorpusError(line, "expected verified or bisimilar");
    } else if (key == "phiL") {
      e.phi_left = with_line(line, [&] { return parse_formula(value); });
    } else if (key == "phiR") {
      e.phi_right = with_line(line, [&] { return parse_formula(value); });
    } else if (key == "disputed") {
      e.disputed = value;
    } else {
      throw CorpusError(line, "unknown key '" + key + "'");
    }
  }
  finish(cur, out, has_left);
  return out;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_corpus(ss.str());
}

namespace {

bool eval_fact(const Process& p, const SatFact& f) {
  switch (f.semantics) {
    case Semantics::OM: return f.history ? sat(p, *f.history, f.formula) : sat_top(p, f.formula);
    case Semantics::LateBox:
      return sat_late_box_input(p, f.history ? *f.history : top_history(p, f.formula), f.formula);
    case Semantics::Classical: return classical_sat(p, f.formula);
    case Semantics::Late: return late_sat(p, f.formula);
  }
  return false;
}

bool relation_holds(const std::string& rel, const CorpusEntry& e) {
  const Process& p = e.left;
  const Process& q = *e.right;
  if (rel == "open") return open_bisim_top(p, q).bisimilar;
  if (rel == "intermediate") return intermediate_bisim(p, q, e.env);
  if (rel == "late-eq") return late_equiv(p, q);
  return late_bisim(p, q);
}

bool same_formula(const Formula& a, const Formula& b) { return alpha_eq(simplify(a), simplify(b)); }

}  // namespace

std::vector<CheckResult> run_entry(const CorpusEntry& e) {
  std::vector<CheckResult> out;
  auto add = [&](std::string check, bool ok, std::string detail) {
    CheckStatus st = ok ? CheckStatus::Pass : (e.disputed ? CheckStatus::Disputed : CheckStatus::Fail);
    if (!ok && e.disputed) detail += " (disputed: " + *e.disputed + ")";
    out.push_back({e.name, std::move(check), st, std::move(detail)});
  };
  for (auto& [rel, want] : e.expect) {
    bool got = relation_holds(rel, e);
    add(rel + (want ? " yes" : " no"), got == want, got ? "related" : "not related");
  }
  for (const auto& f : e.facts) {
    const Process& p = f.side == Side::Left ? e.left : *e.right;
    std::string check = std::string(f.side == Side::Left ? "left" : "right") + " " + to_string(f.semantics) +
                        (f.expected ? " |= " : " |/= ") + to_string(f.formula);
    try {
      bool got = eval_fact(p, f);
      add(check, got == f.expected, got ? "holds" : "does not hold");
    } catch (const std::exception& ex) {
      add(check, false, ex.what());
    }
  }
  if (e.distinguishable) {
    try {
      auto r = distinguish_pair(e.left, *e.right);
      if (auto* fp = std::get_if<FormulaPair>(&r)) {
        std::string shown = "phiL " + to_string(fp->left) + ", phiR " + to_string(fp->right);
        add("distinguish", *e.distinguishable && fp->verified, shown);
        if (e.phi_left) add("phiL " + to_string(*e.phi_left), same_formula(*e.phi_left, fp->left), to_string(fp->left));
        if (e.phi_right)
          add("phiR " + to_string(*e.phi_right), same_formula(*e.phi_right, fp->right), to_string(fp->right));
      } else {
        add("distinguish", !*e.distinguishable, "bisimilar");
      }
    } catch (const VerificationFailed& ex) {
      add("distinguish", false, ex.what());
    }
  }
  return out;
}

}  // namespace openpi
