#include "ncposet/cli.hpp"

#include <cstdlib>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ncposet/comm_young.hpp"
#include "ncposet/errors.hpp"
#include "ncposet/hasse.hpp"
#include "ncposet/nc_poset.hpp"
#include "ncposet/poset.hpp"
#include "ncposet/series.hpp"
#include "ncposet/stable_ideals.hpp"
#include "ncposet/term_orders.hpp"

namespace ncposet {

namespace {

using nlohmann::json;

std::size_t default_limit() {
  if (const char* env = std::getenv("NCPOSET_LIMIT")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      // fall through to the built-in default
    }
  }
  return kDefaultLimit;
}


Bound to_bound(Letter n) { return n ? Bound(n) : std::nullopt; }

json check_json(const OrderCheck& c) {
  return {{"holds", c.holds}, {"witness", c.witness ? json(*c.witness) : json(nullptr)}};
}

std::string yes_no(const OrderCheck& c) {
  return c.holds ? "yes" : "no (" + *c.witness + ")";
}

std::vector<Word> parse_words(const std::vector<std::string>& texts, Letter n) {
  std::vector<Word> out;
  for (const auto& t : texts) {
    auto w = parse_word(t);
    w.check_bound(to_bound(n));
    out.push_back(std::move(w));
  }
  return out;
}

/// Options shared by every subcommand; filled by CLI11 before dispatch.
struct Options {
  std::size_t limit = default_limit();
  std::string poset = "nc";
  Letter n = 0;  // 0 = unbounded
  std::string dir = "up";
  std::string format = "json";
  std::uint64_t max_rank = 0;
  std::uint64_t rank_bound = 0;
  std::size_t max_degree = 0;
  std::uint64_t terms = 0;
  std::string order;
  std::string contains;
  bool verify = false;
  bool as_json = false;
  std::vector<std::string> operands;
};

int cmd_cmp(const Options& o, std::ostream& out) {
  if (o.operands.size() != 2) throw CLI::ValidationError("cmp", "expects exactly two operands");
  const PosetHandle h{parse_family(o.poset), to_bound(o.n)};
  const auto a = parse_element(h, o.operands[0]);
  const auto b = parse_element(h, o.operands[1]);
  out << to_string(compare(h, a, b)) << '\n';
  return kExitOk;
}

int cmd_covers(const Options& o, std::ostream& out) {
  if (o.operands.size() != 1) throw CLI::ValidationError("covers", "expects one word");
  const auto w = parse_words(o.operands, o.n).front();
  const auto covers = o.dir == "up" ? covers_up(w, to_bound(o.n)) : covers_down(w);
  for (const auto& c : covers) out << format_word(c) << '\n';
  return kExitOk;
}

int cmd_hasse(const Options& o, std::ostream& out) {
  const PosetHandle h{parse_family(o.poset), to_bound(o.n)};
  const auto g = hasse(h, o.max_rank, o.limit);
  if (o.format == "dot") {
    out << to_dot(g);
  } else {
    out << to_json(g).dump(2) << '\n';
  }
  return kExitOk;
}

int cmd_word_info(const std::string& name, const Options& o, std::ostream& out) {
  if (o.operands.size() != 1) throw CLI::ValidationError(name, "expects one word");
  const auto w = parse_word(o.operands.front());
  if (name == "rank") {
    out << "rank " << rank(w) << '\n' << "multirank " << format_partition(multirank(w)) << '\n';
  } else if (name == "abelianize") {
    out << format_monomial(abelianize(w)) << '\n';
  } else if (name == "sort") {
    out << format_word(sort_word(abelianize(w))) << '\n';
  } else {
    for (const auto& p : walk(w)) out << format_point(p) << '\n';
  }
  return kExitOk;
}

int cmd_closure(const Options& o, std::ostream& out) {
  const auto closed = strongly_stable_closure(minimalize(parse_words(o.operands, o.n), o.n));
  for (const auto& g : closed.gens()) out << format_word(g) << '\n';
  return kExitOk;
}

int cmd_is_stable(const Options& o, std::ostream& out) {
  const auto ideal = minimalize(parse_words(o.operands, o.n), o.n);
  const auto report = is_strongly_stable(ideal, o.rank_bound);
  if (o.as_json) {
    json witness = nullptr;
    if (report.witness) {
      witness = {format_word(report.witness->first), format_word(report.witness->second)};
    }
    out << json{{"stable", report.stable()},
                {"window_closed", report.window_closed},
                {"generators_closed", report.generators_closed},
                {"witness", witness}}
               .dump(2)
        << '\n';
  } else {
    out << (report.stable() ? "stable" : "not stable") << '\n';
    out << "generators closed: " << (report.generators_closed ? "yes" : "no") << '\n';
    if (report.witness) {
      out << "witness: " << format_word(report.witness->first) << " -> "
          << format_word(report.witness->second) << '\n';
    }
  }
  return report.stable() ? kExitOk : kExitFalse;
}

int cmd_check_order(const Options& o, std::ostream& out) {
  const auto spec = parse_order_spec(o.order);
  const auto report = validate_order(spec, o.n, o.max_degree);
  std::optional<Containment> containment;
  if (!o.contains.empty()) {
    containment = contains_poset(spec, parse_family(o.contains), o.n, o.max_degree);
  }
  if (o.as_json) {
    json j{{"order", to_string(spec)},
           {"n", o.n},
           {"max_degree", o.max_degree},
           {"checks",
            {{"total", check_json(report.total)},
             {"one_minimal", check_json(report.one_minimal)},
             {"multiplicative", check_json(report.multiplicative)},
             {"standard", check_json(report.standard)},
             {"sorted", check_json(report.sorted)},
             {"degree_compatible", check_json(report.degree_compatible)}}}};
    if (containment) {
      json witness = nullptr;
      if (containment->witness) {
        witness = {format_word(containment->witness->first),
                   format_word(containment->witness->second)};
      }
      j["contains"] = {{"poset", o.contains},
                       {"holds", containment->contained},
                       {"witness", witness}};
    }
    out << j.dump(2) << '\n';
  } else {
    out << "order " << to_string(spec) << " on x1..x" << o.n << ", degree <= " << o.max_degree
        << '\n'
        << "total: " << yes_no(report.total) << '\n'
        << "one minimal: " << yes_no(report.one_minimal) << '\n'
        << "multiplicative: " << yes_no(report.multiplicative) << '\n'
        << "standard: " << yes_no(report.standard) << '\n'
        << "sorted: " << yes_no(report.sorted) << '\n'
        << "degree-compatible: " << yes_no(report.degree_compatible) << '\n';
    if (containment) {
      out << "contains " << o.contains << ": ";
      if (containment->contained) {
        out << "yes\n";
      } else {
        out << "no (" << format_word(containment->witness->first) << " < "
            << format_word(containment->witness->second) << ")\n";
      }
    }
  }
  const bool ok = report.is_standard_term_order() && (!containment || containment->contained);
  return ok ? kExitOk : kExitFalse;
}

int cmd_series(const Options& o, std::ostream& out) {
  const auto table = rank_coefficients(to_bound(o.n), o.terms);
  std::optional<bool> verified;
  if (o.verify) verified = enumerate_by_rank(to_bound(o.n), o.terms, o.limit) == table;
  if (o.as_json) {
    json j{{"n", o.n ? json(o.n) : json(nullptr)}, {"coefficients", table.coefficients}};
    if (verified) j["verified"] = *verified;
    out << j.dump(2) << '\n';
  } else {
    for (std::size_t k = 0; k < table.coefficients.size(); ++k) {
      out << "rank " << k << ": " << table.coefficients[k] << '\n';
    }
    for (std::size_t k = 0; k < table.coefficients.size(); ++k) {
      out << (k ? " " : "") << table.coefficients[k];
    }
    out << '\n';
    if (verified) out << (*verified ? "verified" : "MISMATCH") << '\n';
  }
  return verified.value_or(true) ? kExitOk : kExitFalse;
}

int cmd_coconnection(const Options& o, std::ostream& out) {
  const auto report = check_coconnection(o.n, o.max_rank);
  if (o.as_json) {
    json laws = json::array();
    for (const auto& law : report.laws) {
      laws.push_back({{"law", law.law},
                      {"witness", law.witness ? json(*law.witness) : json(nullptr)},
                      {"status", law.holds() ? "ok" : "violated"},
                      {"checked", law.checked}});
    }
    out << json{{"n", report.n}, {"max_rank", report.max_rank}, {"laws", laws}}.dump(2) << '\n';
  } else {
    for (const auto& law : report.laws) {
      out << law.law << ": " << (law.holds() ? "ok" : "violated") << " (" << law.checked
          << " checked)";
      if (law.witness) out << " witness " << *law.witness;
      out << '\n';
    }
    out << "violations: " << report.violations() << '\n';
  }
  return report.violations() == 0 ? kExitOk : kExitFalse;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partial orders classifying non-commutative term orders", "ncposet"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--limit", o.limit, "cap on enumerated elements (env NCPOSET_LIMIT)")
      ->check(CLI::PositiveNumber);

  const auto poset_check = CLI::IsMember({"nc", "q", "p", "comm"});
  auto add_n = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("-n", o.n, "alphabet size (omit for x1, x2, ...)")
                    ->check(CLI::PositiveNumber);
    if (required) opt->required();
  };

  auto* cmp = app.add_subcommand("cmp", "compare two elements");
  cmp->add_option("--poset", o.poset)->check(poset_check);
  add_n(cmp, false);
  cmp->add_option("operands", o.operands)->required();

  auto* covers = app.add_subcommand("covers", "upper or lower covers in N");
  covers->add_option("--dir", o.dir)->check(CLI::IsMember({"up", "down"}));
  add_n(covers, false);
  covers->add_option("word", o.operands)->required();

  auto* hasse_cmd = app.add_subcommand("hasse", "Hasse diagram up to a rank");
  hasse_cmd->add_option("--poset", o.poset)->check(poset_check);
  add_n(hasse_cmd, false);
  hasse_cmd->add_option("--max-rank", o.max_rank)->required();
  hasse_cmd->add_option("--format", o.format)->check(CLI::IsMember({"dot", "json"}));

  std::vector<std::pair<std::string, CLI::App*>> word_cmds;
  for (const auto& [name, about] :
       {std::pair{"rank", "rank and multirank"}, {"abelianize", "commutative image"},
        {"sort", "sorted rearrangement"}, {"walk", "lattice walk"}}) {
    auto* sub = app.add_subcommand(name, about);
    sub->add_option("word", o.operands)->required();
    word_cmds.emplace_back(name, sub);
  }

  auto* closure = app.add_subcommand("closure", "strongly stable closure of an ideal");
  add_n(closure, true);
  closure->add_option("generators", o.operands);

  auto* stable = app.add_subcommand("is-stable", "test strong stability on a rank window");
  add_n(stable, true);
  stable->add_option("--rank-bound", o.rank_bound)->required();
  stable->add_flag("--json", o.as_json);
  stable->add_option("generators", o.operands);

  auto* check_order = app.add_subcommand("check-order", "validate a term order");
  check_order->add_option("--order", o.order)->required();
  add_n(check_order, true);
  check_order->add_option("--max-degree", o.max_degree)->required();
  check_order->add_option("--contains", o.contains)->check(CLI::IsMember({"nc", "q", "p"}));
  check_order->add_flag("--json", o.as_json);

  auto* series = app.add_subcommand("series", "rank generating function coefficients");
  add_n(series, false);
  series->add_option("--terms", o.terms)->required();
  series->add_flag("--verify", o.verify);
  series->add_flag("--json", o.as_json);

  auto* cocon = app.add_subcommand("coconnection", "check the sigma / sigma+ laws");
  add_n(cocon, true);
  cocon->add_option("--max-rank", o.max_rank)->required();
  cocon->add_flag("--json", o.as_json);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cmp->parsed()) return cmd_cmp(o, out);
    if (covers->parsed()) return cmd_covers(o, out);
    if (hasse_cmd->parsed()) return cmd_hasse(o, out);
    for (const auto& [name, sub] : word_cmds) {
      if (sub->parsed()) return cmd_word_info(name, o, out);
    }
    if (closure->parsed()) return cmd_closure(o, out);
    if (stable->parsed()) return cmd_is_stable(o, out);
    if (check_order->parsed()) return cmd_check_order(o, out);
    if (series->parsed()) return cmd_series(o, out);
    if (cocon->parsed()) return cmd_coconnection(o, out);
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ncposet
