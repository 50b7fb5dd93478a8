#pragma once

// Command-line front end.  Exit status: 0 = success/consistent, 1 = a
// genuine finding (brute force disagrees with the classification table, or an
// asserted identity check fails), 2 = usage or name errors, 3 = the closure
// cap was exceeded.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "strongreal/report.hpp"

namespace strongreal {

struct GroupBuild {
  Group group;
  std::string name;                       // canonical display name
  std::optional<SimpleGroupName> simple;  // present when the classifier grammar matched
};

namespace detail {

// Construction-only spellings: groups we can enumerate that are not (or not
// directly) simple-group names.  The dimension is part of the token; q is
// parenthesized: SL2(5), GL2(7), PGL2(9), SL3(3), SP4(3), SU3(3).
inline std::optional<GroupBuild> build_construction_spec(const std::string& cleaned,
                                                         std::uint64_t cap) {
  struct Entry {
    const char* token;
    Group (*build)(std::uint64_t, std::uint64_t);
    const char* display;
  };
  static const Entry entries[] = {
      {"pgl2", [](std::uint64_t q, std::uint64_t c) { return build_pgl2(q, c); }, "PGL2"},
      {"sl2", [](std::uint64_t q, std::uint64_t c) { return build_sl2(q, c); }, "SL2"},
      {"sl3", [](std::uint64_t q, std::uint64_t c) { return build_sl3(q, c); }, "SL3"},
      {"gl2", [](std::uint64_t q, std::uint64_t c) { return build_gl2(q, c); }, "GL2"},
      {"sp4", [](std::uint64_t q, std::uint64_t c) { return build_sp4(q, c); }, "SP4"},
      {"su3", [](std::uint64_t q, std::uint64_t c) { return build_su3(q, c); }, "SU3"},
  };
  for (const Entry& e : entries) {
    const std::string tok = e.token;
    if (cleaned.rfind(tok, 0) != 0) continue;
    const std::string rest = cleaned.substr(tok.size());
    if (rest.size() < 3 || rest.front() != '(' || rest.back() != ')') continue;
    std::uint64_t q = 0;
    for (char c : rest.substr(1, rest.size() - 2)) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
      q = q * 10 + static_cast<std::uint64_t>(c - '0');
      if (q > 100000) throw UnsupportedParameterError("q out of range in '" + cleaned + "'");
    }
    return GroupBuild{e.build(q, cap), std::string(e.display) + "(" + std::to_string(q) + ")",
                      std::nullopt};
  }
  return std::nullopt;
}

inline std::optional<Group> try_construct_simple(const SimpleGroupName& g, std::uint64_t cap) {
  switch (g.family) {
    case Family::PSL:
      if (g.n == 2) return build_psl2(g.q, cap);
      if (g.n == 3) return build_psl3(g.q, cap);
      return std::nullopt;
    case Family::PSU:
      if (g.n == 3) return build_psu3(g.q, cap);
      return std::nullopt;
    case Family::PSp:
      if (g.n == 4) return build_psp4(g.q, cap);
      return std::nullopt;
    case Family::Alt:
      return build_alternating(static_cast<std::uint32_t>(g.n), cap);
    default:
      return std::nullopt;
  }
}

}  // namespace detail

// A group spec is `perm:<path>`, a construction-only name, or any name the
// classifier grammar accepts whose (possibly normalized) family we can build.
inline GroupBuild resolve_group_spec(const std::string& spec, std::uint64_t cap) {
  if (spec.rfind("perm:", 0) == 0) {
    const std::string path = spec.substr(5);
    return GroupBuild{load_permutation_group(path, cap), spec, std::nullopt};
  }
  std::string cleaned;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c)))
      cleaned += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (auto built = detail::build_construction_spec(cleaned, cap)) return std::move(*built);

  const SimpleGroupName name = parse_group_name(spec);  // throws UnknownNameError
  if (auto g = detail::try_construct_simple(name, cap))
    return GroupBuild{std::move(*g), format_name(name), name};
  const SimpleGroupName canon = normalize_name(name);
  if (auto g = detail::try_construct_simple(canon, cap))
    return GroupBuild{std::move(*g), format_name(name), name};
  throw UnsupportedParameterError("group '" + format_name(name) +
                                  "' is not constructible at this scale");
}

namespace detail {

inline void print_check(std::ostream& out, const CheckReport& c, bool diagnostic) {
  out << (diagnostic ? "diagnostic " : "check ") << c.name;
  if (c.q) out << " q=" << c.q;
  if (!c.group.empty()) out << " group=" << c.group;
  out << ": " << (c.passed ? "PASS" : (diagnostic ? "counterexamples recorded" : "FAIL")) << " ("
      << c.cases << " cases, " << c.skipped << " skipped, " << c.failures.size() << " failures)"
      << "\n";
  const std::size_t limit = diagnostic ? 3 : c.failures.size();
  for (std::size_t i = 0; i < c.failures.size() && i < limit; ++i) {
    out << "  " << c.failures[i].input << "\n"
        << "    expected: " << c.failures[i].expected << "\n"
        << "    got:      " << c.failures[i].got << "\n";
  }
  if (diagnostic && c.failures.size() > limit)
    out << "  ... " << (c.failures.size() - limit) << " more\n";
}

inline int cmd_classify(const std::string& name, std::ostream& out, std::ostream& err) {
  const Verdict v = classify(name);
  if (v.outcome == Outcome::UnknownName) {
    err << "unknown group name: " << v.justification << "\n";
    return 2;
  }
  out << outcome_text(v.outcome);
  if (v.outcome == Outcome::StronglyReal) out << " (item " << v.item << ")";
  out << "\n" << v.justification << "\n";
  return 0;
}

inline int cmd_verify(const std::string& spec, const std::string& report_path,
                      const ReportConfig& cfg, unsigned workers, std::ostream& out,
                      std::ostream& err) {
  GroupBuild b = resolve_group_spec(spec, cfg.cap);
  RealityReport rr = group_strong_reality(b.group, workers);
  rr.group_name = b.name;

  std::optional<Verdict> verdict;
  bool consistent = true;
  std::vector<CheckReport> checks;
  if (b.simple) {
    verdict = classify(*b.simple);
    if (verdict->outcome == Outcome::StronglyReal) {
      consistent = rr.strongly_real;
    } else if (verdict->outcome == Outcome::NotStronglyReal) {
      consistent = !rr.strongly_real;
    }
    if (verdict->outcome == Outcome::StronglyReal ||
        verdict->outcome == Outcome::NotStronglyReal)
      checks.push_back(check_klein_four(b.group, b.name));
  }

  const ordered_json j = report_to_json(rr, cfg, b.name, spec, verdict, consistent, checks);
  if (report_path.empty()) {
    out << j.dump(2) << "\n";
  } else {
    std::ofstream file(report_path);
    if (!file) throw Error("cannot write report to '" + report_path + "'");
    file << j.dump(2) << "\n";
    out << b.name << ": order " << rr.group_order << ", " << rr.classes.size() << " classes, "
        << (rr.strongly_real ? "strongly real" : "not strongly real")
        << (verdict ? (consistent ? ", consistent with the classification"
                                  : ", INCONSISTENT with the classification")
                    : "")
        << "; report written to " << report_path << "\n";
  }
  if (!consistent)
    err << "finding: brute force and the classification table disagree on " << b.name << "\n";
  return consistent ? 0 : 1;
}

inline int cmd_check_paper(const std::string& which, std::uint64_t q, const std::string& group_spec,
                           std::uint64_t cap, std::ostream& out, std::ostream& err) {
  std::vector<CheckReport> asserted;
  std::vector<CheckReport> diagnostics;
  if (which == "sl3") {
    asserted.push_back(check_sl3_case(q));
  } else if (which == "su3") {
    asserted.push_back(check_su3_case(q));
  } else if (which == "param") {
    asserted.push_back(check_unipotent_parametrization(q));
  } else if (which == "lemma23") {
    asserted.push_back(check_lemma2_3(q, true));
    diagnostics.push_back(check_lemma2_3(q, false));
  } else if (which == "klein4") {
    if (group_spec.empty()) {
      err << "--case klein4 requires --group\n";
      return 2;
    }
    GroupBuild b = resolve_group_spec(group_spec, cap);
    asserted.push_back(check_klein_four(b.group, b.name));
  } else {
    err << "unknown check case '" << which << "'\n";
    return 2;
  }
  bool ok = true;
  for (const CheckReport& c : asserted) {
    print_check(out, c, false);
    ok = ok && c.passed;
  }
  for (const CheckReport& c : diagnostics) print_check(out, c, true);
  return ok ? 0 : 1;
}

inline int cmd_info(const std::string& spec, std::uint64_t cap, std::ostream& out) {
  GroupBuild b = resolve_group_spec(spec, cap);
  const Group& g = b.group;
  const ConjugacyData& cd = g.conjugacy();
  out << b.name << "\norder " << g.order() << "\nclasses " << cd.classes.size() << "\n";
  for (std::size_t ci = 0; ci < cd.classes.size(); ++ci) {
    const ConjugacyClass& c = cd.classes[ci];
    out << "  class " << ci << ": rep_order " << g.order_of(c.representative) << ", size "
        << c.size() << ", rep " << g.element(c.representative).to_text() << "\n";
  }
  return 0;
}

}  // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  std::uint64_t default_cap = kDefaultClosureCap;
  if (const char* env = std::getenv("STRONGREAL_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v >= 1) default_cap = v;
  }

  CLI::App app{"strong reality toolkit: brute-force verification of strong reality in small "
               "finite groups, cross-checked against the classification table",
               "strongreal"};
  app.require_subcommand(1);

  std::string classify_name;
  CLI::App* classify_cmd = app.add_subcommand("classify", "look up a simple group in the table");
  classify_cmd->add_option("name", classify_name, "group name, e.g. PSp(4,5) or A(10)")
      ->required();

  std::string verify_spec, report_path;
  std::uint64_t cap = default_cap;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  bool extended = false;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "enumerate a group and decide strong reality per class");
  verify_cmd->add_option("spec", verify_spec, "group spec, e.g. PSL2(7), SU3(3), perm:<path>")
      ->required();
  verify_cmd->add_option("--report", report_path, "write the JSON report to this path");
  verify_cmd->add_option("--cap", cap, "closure element cap");
  verify_cmd->add_option("--workers", workers, "per-class worker threads");
  verify_cmd->add_flag("--extended", extended, "mark the run as extended-suite scale");

  std::string check_case, check_group;
  std::uint64_t check_q = 0;
  std::uint64_t check_cap = default_cap;
  CLI::App* check_cmd = app.add_subcommand("check-paper", "verify the explicit identities");
  check_cmd->add_option("--case", check_case, "sl3 | su3 | param | lemma23 | klein4")->required();
  check_cmd->add_option("--q", check_q, "field size");
  check_cmd->add_option("--group", check_group, "group spec (klein4 only)");
  check_cmd->add_option("--cap", check_cap, "closure element cap");

  std::string info_spec;
  std::uint64_t info_cap = default_cap;
  CLI::App* info_cmd = app.add_subcommand("info", "print order and class table");
  info_cmd->add_option("spec", info_spec, "group spec")->required();
  info_cmd->add_option("--cap", info_cap, "closure element cap");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (classify_cmd->parsed()) return detail::cmd_classify(classify_name, out, err);
    if (verify_cmd->parsed()) {
      if (cap < 1 || workers < 1) {
        err << "cap and workers must be at least 1\n";
        return 2;
      }
      return detail::cmd_verify(verify_spec, report_path, ReportConfig{cap, extended}, workers,
                                out, err);
    }
    if (check_cmd->parsed()) {
      if (check_case != "klein4" && check_q == 0) {
        err << "--case " << check_case << " requires --q\n";
        return 2;
      }
      return detail::cmd_check_paper(check_case, check_q, check_group, check_cap, out, err);
    }
    if (info_cmd->parsed()) return detail::cmd_info(info_spec, info_cap, out);
    err << "no subcommand\n";
    return 2;
  } catch (const CapExceededError& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const UnknownNameError& e) {
    err << "unknown name: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace strongreal
