#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "twoval/decompose.hpp"
#include "twoval/dominance.hpp"
#include "twoval/error.hpp"
#include "twoval/psi.hpp"
#include "twoval/verify.hpp"

using namespace twoval;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kPass = 0, kViolation = 1, kInputError = 2, kResourceError = 3 };

bool machine = false;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write " + path);
  out << text;
}

std::string profile_text(const ScfTable& f, std::size_t i) {
  return format_profile_inline(f.space().profile(i), f.space().universe());
}

// Pair (a, b) for two-valued checks: explicit labels, else the table's range.
std::pair<Alternative, Alternative> pick_pair(const ScfTable& f, const std::vector<std::string>& labels) {
  const Universe& u = f.space().universe();
  if (labels.size() == 2) return {u.find(labels[0]), u.find(labels[1])};
  const auto r = range(f);
  if (r.size() != 2) throw DomainError("table range has " + std::to_string(r.size()) + " values; expected two");
  return {r[0], r[1]};
}

int report(const std::string& command, bool ok, json detail, const std::string& human) {
  if (machine) {
    json out;
    out["command"] = command;
    out["result"] = ok ? "pass" : "fail";
    for (auto& [k, v] : detail.items()) out[k] = v;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << command << ": " << (ok ? "pass" : "fail") << "\n" << human;
  }
  return ok ? kPass : kViolation;
}

int cmd_check_csp(const std::string& file, Exec exec) {
  const ScfTable f = parse_scf(slurp(file));
  const auto m = find_manipulation(f, exec);
  if (!m) return report("check-csp", true, json::object(), "");
  json w{{"profile", profile_text(f, m->profile)},
         {"report", profile_text(f, m->report)},
         {"coalition", to_string(m->coalition)}};
  const Universe& u = f.space().universe();
  std::ostringstream h;
  h << "  P: " << w["profile"].get<std::string>() << " -> " << u.label(f.at(m->profile)) << "\n"
    << "  Q: " << w["report"].get<std::string>() << " -> " << u.label(f.at(m->report)) << "\n"
    << "  D: " << w["coalition"].get<std::string>() << "\n";
  return report("check-csp", false, json{{"witness", w}}, h.str());
}

int pair_check(const std::string& command, const ScfTable& f, Alternative a, Alternative b,
               const std::optional<PairWitness>& v) {
  if (!v) return report(command, true, json::object(), "");
  const Universe& u = f.space().universe();
  json w{{"p", profile_text(f, v->p)},
         {"f_p", u.label(f.at(v->p))},
         {"q", profile_text(f, v->q)},
         {"f_q", u.label(f.at(v->q))}};
  std::ostringstream h;
  h << "  pair: " << u.label(a) << " " << u.label(b) << "\n"
    << "  P: " << w["p"].get<std::string>() << " -> " << w["f_p"].get<std::string>() << "\n"
    << "  Q: " << w["q"].get<std::string>() << " -> " << w["f_q"].get<std::string>() << "\n";
  return report(command, false, json{{"witness", w}}, h.str());
}

int cmd_decompose(const std::string& file, const std::string& pi_file, const std::string& out,
                  const std::vector<std::string>& pair) {
  const ScfTable f = parse_scf(slurp(file));
  const auto [a, b] = pick_pair(f, pair);
  std::optional<Profile> pi;
  if (!pi_file.empty())
    pi = parse_profile(slurp(pi_file), f.space().universe(), f.space().voters());
  const PsiSpec spec = decompose(f, a, b, pi);
  spit(out, format_psi(spec));
  if (!out.empty() && out != "-") {
    if (machine)
      std::cout << json{{"command", "decompose"}, {"result", "pass"}, {"entries", spec.entries().size()}}.dump(2)
                << "\n";
    else
      std::cout << "decompose: " << spec.entries().size() << " entries written to " << out << "\n";
  }
  return kPass;
}

int cmd_roundtrip(const std::string& file, const std::vector<std::string>& pair, Exec exec) {
  const ScfTable f = parse_scf(slurp(file));
  const auto [a, b] = pick_pair(f, pair);
  const PsiSpec spec = decompose(f, a, b);
  const ScfTable g = psi_to_table(spec, exec);
  std::vector<std::size_t> diff;
  for (std::size_t i = 0; i < f.space().size(); ++i)
    if (f.at(i) != g.at(i)) diff.push_back(i);
  json detail{{"entries", spec.entries().size()}, {"profiles", f.space().size()}, {"mismatches", diff.size()}};
  std::ostringstream h;
  h << "  entries: " << spec.entries().size() << "\n  mismatches: " << diff.size() << "\n";
  for (std::size_t i : diff) h << "  P#" << i << ": " << profile_text(f, i) << "\n";
  return report("roundtrip", diff.empty(), detail, h.str());
}

int cmd_eval_psi(const std::string& spec_file, const std::string& profile_arg) {
  const PsiSpec spec = parse_psi(slurp(spec_file));
  std::ifstream probe(profile_arg);
  const Profile p = probe ? parse_profile(slurp(profile_arg), spec.universe(), spec.voters())
                          : parse_profile_inline(profile_arg, spec.universe());
  if (p.voters() != spec.voters()) throw DomainError("profile has the wrong number of voters");
  const EntryIndex idx = index(p, spec);
  const Alternative value = evaluate_psi(p, spec);
  const std::string idx_text = idx.is_infinite() ? "infinity" : std::to_string(idx.value());
  if (machine)
    std::cout << json{{"command", "eval-psi"}, {"index", idx_text}, {"value", spec.universe().label(value)}}.dump(2)
              << "\n";
  else
    std::cout << "index: " << idx_text << "\nvalue: " << spec.universe().label(value) << "\n";
  return kPass;
}

int cmd_enumerate(const std::string& what, std::size_t voters, std::size_t alts, bool strict) {
  const Universe u = Universe::standard(alts);
  json items = json::array();
  if (what == "orders") {
    for (const auto& w : strict ? enumerate_strict_orders(alts) : enumerate_weak_orders(alts))
      items.push_back(format_order(w, u));
  } else if (what == "profiles") {
    const ProfileSpace space(u, voters, strict ? Domain::strict : Domain::weak);
    for (std::size_t i = 0; i < space.size(); ++i) items.push_back(format_profile_inline(space.profile(i), u));
  } else if (what == "committees") {
    for (const auto& f : enumerate_committees(VoterSet::all(voters))) items.push_back(format_committee(f));
  } else {
    throw DomainError("unknown enumeration: " + what);
  }
  if (machine) {
    std::cout << json{{"command", "enumerate"}, {"kind", what}, {"count", items.size()}, {"items", items}}.dump(2)
              << "\n";
  } else {
    for (const auto& s : items) std::cout << s.get<std::string>() << "\n";
    std::cout << "# " << items.size() << " " << what << "\n";
  }
  return kPass;
}

int cmd_verify(std::size_t voters, std::size_t alts, std::uint64_t seed, Exec exec) {
  const RunReport r = verify_theorems(voters, alts, seed, exec);
  if (machine) {
    json out;
    out["command"] = r.command;
    out["instance"] = {{"voters", r.voters}, {"alternatives", r.alternatives}, {"pair", r.pair}};
    json counts = json::object();
    for (const auto& [k, v] : r.counts) counts[k] = v;
    counts["failures"] = r.failures();
    out["counts"] = counts;
    json checks = json::array();
    for (const auto& c : r.checks)
      checks.push_back({{"name", c.name},
                        {"checked", c.checked},
                        {"failures", c.failures},
                        {"status", c.skipped ? "skipped" : c.failures ? "fail" : "pass"},
                        {"note", c.note}});
    out["checks"] = checks;
    out["witnesses"] = r.witnesses;
    out["result"] = r.failures() == 0 ? "pass" : "fail";
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "verify-theorems |V|=" << r.voters << " |A|=" << r.alternatives << " pair " << r.pair << "\n";
    for (const auto& [k, v] : r.counts) std::cout << "  " << k << ": " << v << "\n";
    for (const auto& c : r.checks) {
      const char* status = c.skipped ? "SKIP" : c.failures ? "FAIL" : "PASS";
      std::cout << "  " << status << "  " << c.name << "  (" << c.checked << " checked, " << c.failures
                << " failures" << (c.note.empty() ? "" : "; " + c.note) << ")\n";
    }
    for (const auto& w : r.witnesses) std::cout << "  witness: " << w << "\n";
    std::cout << "  failures: " << r.failures() << "\n";
  }
  return r.failures() == 0 ? kPass : kViolation;
}

int fail(int code, const std::string& kind, const std::string& msg) {
  if (machine)
    std::cout << json{{"result", "error"}, {"kind", kind}, {"message", msg}}.dump(2) << "\n";
  std::cerr << "twoval: " << kind << ": " << msg << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-valued coalitionally strategy-proof social choice functions"};
  app.require_subcommand(1);
  app.add_flag("--machine", machine, "Structured JSON output");
  bool serial = false;
  app.add_flag("--serial", serial, "Use the serial reference scans");
  std::vector<std::string> pair;

  std::string what, file, spec_file, profile_arg, pi_file, out, example_name;
  std::size_t voters = 2, alts = 3;
  std::uint64_t seed = 0;
  bool strict = false;

  auto* enumerate = app.add_subcommand("enumerate", "List orders, profiles or committees");
  enumerate->add_option("kind", what, "orders | profiles | committees")->required()
      ->check(CLI::IsMember({"orders", "profiles", "committees"}));
  enumerate->add_option("--voters", voters, "Society size")->capture_default_str();
  enumerate->add_option("--alts", alts, "Number of alternatives")->capture_default_str();
  enumerate->add_flag("--strict", strict, "Strict orders only");

  auto* check_csp = app.add_subcommand("check-csp", "Search for a coalitional manipulation");
  check_csp->add_option("scf", file)->required();
  auto* check_compat = app.add_subcommand("check-compat", "Check compatibility with dominance");
  check_compat->add_option("scf", file)->required();
  check_compat->add_option("--pair", pair)->expected(2);
  auto* check_bbm = app.add_subcommand("check-bbm", "Check the based and monotonic conditions");
  check_bbm->add_option("scf", file)->required();
  check_bbm->add_option("--pair", pair)->expected(2);

  auto* decomp = app.add_subcommand("decompose", "Represent a CSP table as a psi spec");
  decomp->add_option("scf", file)->required();
  decomp->add_option("--pi", pi_file, "Unanimous indifference profile file");
  decomp->add_option("-o,--output", out, "Spec output file (default stdout)");
  decomp->add_option("--pair", pair)->expected(2);
  auto* roundtrip = app.add_subcommand("roundtrip", "Decompose, re-evaluate and diff");
  roundtrip->add_option("scf", file)->required();
  roundtrip->add_option("--pair", pair)->expected(2);

  auto* eval = app.add_subcommand("eval-psi", "Evaluate a psi spec on one profile");
  eval->add_option("spec", spec_file)->required();
  eval->add_option("profile", profile_arg, "Profile file or inline \"a>b, b>a\"")->required();
  auto* to_table = app.add_subcommand("psi-to-table", "Tabulate a psi spec");
  to_table->add_option("spec", spec_file)->required();
  to_table->add_option("-o,--output", out);

  auto* verify = app.add_subcommand("verify-theorems", "Run the theorem battery");
  verify->add_option("--voters", voters)->capture_default_str();
  verify->add_option("--alts", alts)->capture_default_str();
  verify->add_option("--seed", seed)->capture_default_str();

  auto* example = app.add_subcommand("example", "Print a shipped example table");
  example->add_option("name", example_name)->required()->check(CLI::IsMember({"dia", "anti"}));
  example->add_option("-o,--output", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }
  const Exec exec = serial ? Exec::serial : Exec::parallel;

  try {
    if (*enumerate) return cmd_enumerate(what, voters, alts, strict);
    if (*check_csp) return cmd_check_csp(file, exec);
    if (*check_compat) {
      const ScfTable f = parse_scf(slurp(file));
      const auto [a, b] = pick_pair(f, pair);
      return pair_check("check-compat", f, a, b, find_compatibility_violation(f, a, b, exec));
    }
    if (*check_bbm) {
      const ScfTable f = parse_scf(slurp(file));
      const auto [a, b] = pick_pair(f, pair);
      return pair_check("check-bbm", f, a, b, find_bbm_violation(f, a, b, exec));
    }
    if (*decomp) return cmd_decompose(file, pi_file, out, pair);
    if (*roundtrip) return cmd_roundtrip(file, pair, exec);
    if (*eval) return cmd_eval_psi(spec_file, profile_arg);
    if (*to_table) {
      spit(out, format_scf(psi_to_table(parse_psi(slurp(spec_file)), exec)));
      return kPass;
    }
    if (*verify) return cmd_verify(voters, alts, seed, exec);
    if (*example) {
      spit(out, format_scf(example_name == "dia" ? examples::dia() : examples::anti_rule()));
      return kPass;
    }
  } catch (const ParseError& e) {
    return fail(kInputError, "parse error", e.what());
  } catch (const NotCspError& e) {
    return fail(kViolation, "not CSP", e.what());
  } catch (const ResourceError& e) {
    return fail(kResourceError, "resource limit", e.what());
  } catch (const DomainError& e) {
    return fail(kInputError, "input error", e.what());
  }
  return kPass;
}
