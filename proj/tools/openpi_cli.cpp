// openpi: command-line front end.
//
// Exit status: 0 on success, 1 on a corpus mismatch or a formula pair that
// fails verification, 2 on parse and usage errors.

#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "openpi/bisim.hpp"
#include "openpi/corpus.hpp"
#include "openpi/distinguish.hpp"
#include "openpi/json_io.hpp"
#include "openpi/lts.hpp"
#include "openpi/parse.hpp"
#include "openpi/sat.hpp"
#include "openpi/spectrum.hpp"

using namespace openpi;
using json_io::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void print_strategy(std::ostream& out, const Strategy& s, int depth) {
  std::string pad(depth * 2, ' ');
  const StrategyNode& n = *s;
  out << pad << to_string(n.left) << "  vs  " << to_string(n.right);
  if (!n.history.empty()) out << "  @ " << n.history.to_string();
  out << "\n" << pad << "  " << (n.leader == Side::Left ? "left" : "right") << " leads";
  if (!n.sigma.is_identity()) out << " under " << to_string(n.sigma);
  out << " with " << to_string(n.label) << " to " << to_string(n.leader_residual);
  if (n.responses.empty()) out << "; no response";
  out << "\n";
  for (const auto& r : n.responses) {
    out << pad << "  response " << to_string(r.residual) << ":\n";
    print_strategy(out, r.strategy, depth + 2);
  }
}

NameSet parse_env(const std::string& text) {
  NameSet env;
  std::istringstream in(text);
  std::string w;
  while (std::getline(in, w, ',')) {
    auto b = w.find_first_not_of(' ');
    auto e = w.find_last_not_of(' ');
    if (b != std::string::npos) env.insert(Name(w.substr(b, e - b + 1)));
  }
  return env;
}

int cmd_trans(const std::string& src, bool as_json) {
  Process p = parse_process(src);
  auto ts = transitions(p);
  if (as_json) {
    json arr = json::array();
    for (auto& t : ts) arr.push_back({{"label", json_io::to_json(t.label)}, {"residual", json_io::to_json(t.residual)}});
    std::cout << json{{"process", json_io::to_json(p)}, {"transitions", arr}}.dump(2) << "\n";
  } else {
    for (auto& t : ts) std::cout << to_string(t.label) << " -> " << to_string(t.residual) << "\n";
  }
  return 0;
}

int cmd_sat(const std::string& psrc, const std::string& fsrc, const std::string& hist, const std::string& sem_name,
            bool as_json) {
  Process p = parse_process(psrc);
  Formula f = parse_formula(fsrc);
  Semantics sem;
  try {
    sem = semantics_from_string(sem_name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::optional<History> h;
  if (!hist.empty()) {
    if (sem == Semantics::Classical || sem == Semantics::Late)
      throw UsageError("--history only applies to the om and late-box semantics");
    try {
      h = History::parse(hist);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  bool r = false;
  try {
    switch (sem) {
      case Semantics::OM: r = h ? sat(p, *h, f) : sat_top(p, f); break;
      case Semantics::LateBox: r = sat_late_box_input(p, h ? *h : top_history(p, f), f); break;
      case Semantics::Classical: r = classical_sat(p, f); break;
      case Semantics::Late: r = late_sat(p, f); break;
    }
  } catch (const IllFormedJudgement& e) {
    throw UsageError(e.what());
  }
  if (as_json) {
    json j = {{"process", json_io::to_json(p)}, {"formula", json_io::to_json(f)}, {"semantics", sem_name}, {"result", r}};
    if (h) j["history"] = json_io::to_json(*h);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (r ? "true" : "false") << "\n";
  }
  return 0;
}

int cmd_bisim(const std::string& lsrc, const std::string& rsrc, const std::string& relation, const std::string& env_text,
              bool witness, bool as_json) {
  Process p = parse_process(lsrc);
  Process q = parse_process(rsrc);
  if (!env_text.empty() && relation != "intermediate") throw UsageError("--env only applies to --relation intermediate");
  if (relation == "open") {
    Verdict v = open_bisim_top(p, q);
    if (as_json) {
      json j = {{"relation", relation}, {"verdict", v.bisimilar ? "bisimilar" : "not-bisimilar"}};
      if (witness) j = json_io::to_json(v), j["relation"] = relation;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << (v.bisimilar ? "bisimilar" : "not bisimilar") << "\n";
      if (witness && v.strategy) print_strategy(std::cout, v.strategy, 0);
      if (witness && v.bisimilar) std::cout << v.relation.size() << " triples in the bisimulation\n";
    }
    return 0;
  }
  bool r;
  if (relation == "intermediate")
    r = intermediate_bisim(p, q, parse_env(env_text));
  else if (relation == "late")
    r = late_bisim(p, q);
  else if (relation == "late-eq")
    r = late_equiv(p, q);
  else
    throw UsageError("unknown relation '" + relation + "' (expected open, intermediate, late or late-eq)");
  if (witness) throw UsageError("--witness only applies to --relation open");
  if (as_json)
    std::cout << json{{"relation", relation}, {"verdict", r ? "bisimilar" : "not-bisimilar"}}.dump(2) << "\n";
  else
    std::cout << (r ? "bisimilar" : "not bisimilar") << "\n";
  return 0;
}

int cmd_distinguish(const std::string& lsrc, const std::string& rsrc, bool as_json) {
  Process p = parse_process(lsrc);
  Process q = parse_process(rsrc);
  auto r = distinguish_pair(p, q);
  if (auto* f = std::get_if<FormulaPair>(&r)) {
    if (as_json)
      std::cout << json_io::to_json(*f).dump(2) << "\n";
    else
      std::cout << "phiL: " << to_string(f->left) << "\nphiR: " << to_string(f->right) << "\n";
  } else {
    if (as_json)
      std::cout << json{{"verdict", "bisimilar"}}.dump(2) << "\n";
    else
      std::cout << "bisimilar\n";
  }
  return 0;
}

int cmd_corpus(const std::string& path, const std::string& filter, bool as_json) {
  auto entries = load_corpus(path);
  std::size_t pass = 0, fail = 0, disputed = 0;
  json results = json::array();
  for (const auto& e : entries) {
    if (!filter.empty() && e.name.find(filter) == std::string::npos) continue;
    for (const auto& r : run_entry(e)) {
      const char* tag = r.status == CheckStatus::Pass ? "PASS" : r.status == CheckStatus::Fail ? "FAIL" : "DISPUTED";
      (r.status == CheckStatus::Pass ? pass : r.status == CheckStatus::Fail ? fail : disputed)++;
      if (as_json)
        results.push_back({{"entry", r.entry}, {"check", r.check}, {"status", tag}, {"detail", r.detail}});
      else
        std::cout << tag << " " << r.entry << ": " << r.check << (r.status == CheckStatus::Pass ? "" : " [" + r.detail + "]")
                  << "\n";
    }
  }
  if (as_json)
    std::cout << json{{"results", results}, {"passed", pass}, {"failed", fail}, {"disputed", disputed}}.dump(2) << "\n";
  else
    std::cout << pass << " passed, " << fail << " failed, " << disputed << " disputed\n";
  return fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Open bisimilarity, OM satisfaction and distinguishing formulae for the finite pi-calculus"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  std::string p1, p2, formula, history, semantics = "om", relation = "open", env, filter, corpus_path;
  bool witness = false;

  auto* trans = app.add_subcommand("trans", "List the transitions of a process");
  trans->add_option("process", p1)->required();
  trans->add_flag("--json", as_json);

  auto* satc = app.add_subcommand("sat", "Check a satisfaction judgement");
  satc->add_option("process", p1)->required();
  satc->add_option("formula", formula)->required();
  satc->add_option("--history", history, "History such as a^i.x^o.y^i (default: inputs over the free names)");
  satc->add_option("--semantics", semantics, "om, classical, late or late-box")->capture_default_str();
  satc->add_flag("--json", as_json);

  auto* bisim = app.add_subcommand("bisim", "Decide an equivalence");
  bisim->add_option("left", p1)->required();
  bisim->add_option("right", p2)->required();
  bisim->add_option("--relation", relation, "open, intermediate, late or late-eq")->capture_default_str();
  bisim->add_option("--env", env, "Comma-separated names kept distinct (intermediate only)");
  bisim->add_flag("--witness", witness, "Print the strategy or the size of the bisimulation");
  bisim->add_flag("--json", as_json);

  auto* dist = app.add_subcommand("distinguish", "Distinguishing formula pair for two processes");
  dist->add_option("left", p1)->required();
  dist->add_option("right", p2)->required();
  dist->add_flag("--json", as_json);

  auto* corpus = app.add_subcommand("corpus", "Example corpus");
  corpus->require_subcommand(1);
  auto* run = corpus->add_subcommand("run", "Check every expectation of a corpus file");
  run->add_option("file", corpus_path)->required()->check(CLI::ExistingFile);
  run->add_option("--filter", filter, "Only entries whose name contains this text");
  run->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*trans) return cmd_trans(p1, as_json);
    if (*satc) return cmd_sat(p1, formula, history, semantics, as_json);
    if (*bisim) return cmd_bisim(p1, p2, relation, env, witness, as_json);
    if (*dist) return cmd_distinguish(p1, p2, as_json);
    if (*run) return cmd_corpus(corpus_path, filter, as_json);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const CorpusError& e) {
    std::cerr << "corpus error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const VerificationFailed& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
