// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ideal_sample.hpp"
#include "ncposet/cli.hpp"
#include "ncposet/comm_young.hpp"
#include "ncposet/enumerate.hpp"
#include "ncposet/hasse.hpp"
#include "ncposet/nc_poset.hpp"
#include "ncposet/series.hpp"
#include "ncposet/stable_ideals.hpp"
#include "ncposet/term_orders.hpp"
#include "ncposet/variants.hpp"
#include "oracles.hpp"

using namespace ncposet;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double seconds_limit;  // 0 = no time bound
  std::function<void(Check&)> body;
};

HasseGraph graph_from_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  if (run_cli(args, out, err) != kExitOk) throw std::runtime_error(err.str());
  return hasse_from_json(nlohmann::json::parse(out.str()));
}

const std::vector<std::pair<Letter, std::size_t>> kOracleRange{{3, 4}, {2, 5}};

void multirank_steps(Check& c, const HasseGraph& g) {
  for (const auto& [lo, hi] : g.edges) {
    const auto& a = g.vertices[lo].multirank;
    const auto& b = g.vertices[hi].multirank;
    std::uint64_t bumped = 0;
    bool monotone = true;
    for (std::size_t j = 0; j < b.length(); ++j) {
      monotone &= b.part(j) >= a.part(j);
      if (monotone) bumped += b.part(j) - a.part(j);
    }
    monotone &= a.length() <= b.length();
    c.expect(monotone && bumped == 1,
             "edge " + g.vertices[lo].label + " -> " + g.vertices[hi].label);
  }
}

std::vector<Criterion> criteria() {
  return {
      {1, "N_2 Hasse diagram to rank 4: 12 vertices, levels 1,1,2,3,5, 18 edges", 1.0,
       [](Check& c) {
         const auto g = graph_from_cli({"hasse", "--poset", "nc", "-n", "2", "--max-rank", "4"});
         c.expect(g.vertices.size() == 12, "vertex count");
         c.expect(g.level_sizes() == std::vector<std::size_t>{1, 1, 2, 3, 5}, "level sizes");
         c.expect(g.edges.size() == 18, "edge count");
         std::size_t by_search = 0;
         for (const auto& v : g.vertices) {
           if (v.rank < 4) by_search += oracle::covers_up_by_search(parse_word(v.label), 2).size();
         }
         c.expect(by_search == 18, "cover oracle edge count");
       }},
      {2, "N to rank 3: levels 1,1,2,4 with top {x1^3, x1x2, x2x1, x3}", 1.0,
       [](Check& c) {
         const auto g = graph_from_cli({"hasse", "--poset", "nc", "--max-rank", "3"});
         c.expect(g.level_sizes() == std::vector<std::size_t>{1, 1, 2, 4}, "level sizes");
         std::set<std::string> top;
         for (const auto& v : g.vertices) {
           if (v.rank == 3) top.insert(v.label);
         }
         c.expect(top == std::set<std::string>{"x1*x1*x1", "x1*x2", "x2*x1", "x3"}, "rank-3 set");
       }},
      {3, "rank generating functions equal enumeration, ranks 0-12", 10.0,
       [](Check& c) {
         const auto free = rank_coefficients(std::nullopt, 12);
         std::vector<std::uint64_t> powers{1};
         for (std::uint64_t k = 1; k <= 12; ++k) powers.push_back(std::uint64_t{1} << (k - 1));
         c.expect(free.coefficients == powers, "(1-t)/(1-2t) coefficients");
         c.expect(free == enumerate_by_rank(std::nullopt, 12), "unbounded enumeration");
         for (Letter n : {2u, 3u, 4u}) {
           c.expect(rank_coefficients(n, 12) == enumerate_by_rank(n, 12),
                    "n = " + std::to_string(n));
         }
       }},
      {4, "factor-domination nc_leq equals rule search (n=3 deg<=4, n=2 deg<=5)", 30.0,
       [](Check& c) {
         std::size_t pairs = 0;
         for (auto [n, d] : kOracleRange) {
           const auto words = words_up_to_degree(n, d);
           for (const auto& a : words) {
             for (const auto& b : words) {
               ++pairs;
               c.expect(nc_leq(a, b, n) == nc_leq_oracle(a, b, n),
                        format_word(a) + " vs " + format_word(b));
             }
           }
         }
         c.expect(pairs == 121 * 121 + 63 * 63, "pair count");
       }},
      {5, "cover counts match the closed forms on the criterion-4 range", 0.0,
       [](Check& c) {
         for (auto [n, d] : kOracleRange) {
           for (const auto& m : words_up_to_degree(n, d)) {
             for (Bound b : {Bound{}, Bound{n}}) {
               c.expect(covers_up(m, b).size() == oracle::upper_cover_count(m, b),
                        "up " + format_word(m));
             }
             c.expect(covers_down(m).size() == oracle::lower_cover_count(m),
                      "down " + format_word(m));
           }
         }
       }},
      {6, "every cover edge of criteria 1-2 steps the multirank by one unit vector", 0.0,
       [](Check& c) {
         multirank_steps(c, hasse({Family::NC, 2}, 4));
         multirank_steps(c, hasse({Family::NC, std::nullopt}, 3));
       }},
      {7, "Galois coconnection laws (n=2 rank<=6, n=3 rank<=5)", 60.0,
       [](Check& c) {
         for (auto [n, r] : {std::pair<Letter, std::uint64_t>{2, 6}, {3, 5}}) {
           const auto report = check_coconnection(n, r);
           for (const auto& law : report.laws) {
             c.expect(law.holds() && law.checked > 0,
                      law.law + " n=" + std::to_string(n) + " " + law.witness.value_or(""));
           }
         }
       }},
      {8, "Young containment equals the rule search (max letter<=3, degree<=5)", 0.0,
       [](Check& c) {
         std::vector<CommMonomial> monos;
         for (std::uint32_t a = 0; a <= 5; ++a) {
           for (std::uint32_t b = 0; a + b <= 5; ++b) {
             for (std::uint32_t d = 0; a + b + d <= 5; ++d) monos.push_back({{1, a}, {2, b}, {3, d}});
           }
         }
         for (const auto& s : monos) {
           for (const auto& t : monos) {
             c.expect(comm_leq(s, t) == comm_leq_oracle(s, t),
                      format_monomial(s) + " vs " + format_monomial(t));
           }
         }
       }},
      {9, "term orders: validation outcomes and containment of N_n / Q_n", 0.0,
       [](Check& c) {
         const TermOrderSpec lex{OrderKind::DegLeftLex, {}};
         const TermOrderSpec rev{OrderKind::DegRightLex, {}};
         const auto weight = TermOrderSpec::weighted({1, 2, 3});
         for (const auto& spec : {lex, rev, weight}) {
           for (Letter n = 1; n <= 3; ++n) {
             const auto report = validate_order(spec, n, 4);
             const auto tag = to_string(spec) + " n=" + std::to_string(n);
             c.expect(report.multiplicative.holds, tag + " multiplicative");
             c.expect(report.standard.holds, tag + " standard");
             c.expect(report.is_standard_term_order(), tag + " term order");
             c.expect(contains_poset(spec, Family::NC, n, 4).contained, tag + " contains N");
           }
         }
         for (Letter n = 1; n <= 3; ++n) {
           c.expect(validate_order(rev, n, 4).sorted.holds, "degrevlex sorted");
           c.expect(contains_poset(rev, Family::Q, n, 4).contained, "degrevlex contains Q");
         }
         const auto l3 = validate_order(lex, 3, 3);
         c.expect(l3.multiplicative.holds && l3.standard.holds && !l3.sorted.holds &&
                      l3.degree_compatible.holds,
                  "deglex flags");
         const auto r3 = validate_order(rev, 3, 3);
         c.expect(r3.multiplicative.holds && r3.standard.holds && r3.sorted.holds &&
                      r3.degree_compatible.holds,
                  "degrevlex flags");
         c.expect(validate_order(weight, 3, 3).standard.holds, "weight standard");
         c.expect(contains_poset(lex, Family::NC, 2, 4).contained, "deglex contains N_2");
         c.expect(contains_poset(rev, Family::Q, 2, 4).contained, "degrevlex contains Q_2");
         const auto miss = contains_poset(lex, Family::Q, 3, 3);
         c.expect(!miss.contained && miss.witness &&
                      miss.witness->first == Word{2, 1} && miss.witness->second == Word{1, 2},
                  "deglex misses Q_3 at (x2x1, x1x2)");
       }},
      {10, "strongly stable closure on 100 seeded ideals, rank window 8", 60.0,
       [](Check& c) {
         for (const auto& I : sample::ideals(100)) {
           const auto closed = strongly_stable_closure(I);
           const auto tag = std::to_string(I.gens().size()) + " generators, n=" + std::to_string(I.n());
           c.expect(strongly_stable_closure(closed) == closed, "idempotence, " + tag);
           for (const auto& m : words_up_to_rank(I.n(), 8)) {
             if (ideal_member(m, I)) c.expect(ideal_member(m, closed), "extensivity, " + tag);
           }
           const auto report = is_strongly_stable(closed, 8);
           c.expect(report.stable() && report.generators_closed, "filter, " + tag);
           c.expect(closed.gens() == oracle::filter_generators(I.gens(), I.n()),
                    "filter generators, " + tag);
         }
       }},
      {11, "pinned discrepancies: Q fiber not a chain; N inside P", 0.0,
       [](Check& c) {
         c.expect(compare({Family::Q, std::nullopt}, Word{2, 1, 3}, Word{1, 3, 2}) ==
                      Comparison::INCOMPARABLE,
                  "x2x1x3 vs x1x3x2 in Q");
         c.expect(compare({Family::P, std::nullopt}, Word{3}, Word{1, 1}) == Comparison::LT,
                  "x3 < x1^2 in P");
         c.expect(compare({Family::NC, std::nullopt}, Word{3}, Word{1, 1}) ==
                      Comparison::INCOMPARABLE,
                  "x3 vs x1^2 in N");
       }},
  };
}

}  // namespace

int main() {
  int failures = 0;
  for (const auto& crit : criteria()) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      crit.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (crit.seconds_limit > 0 && elapsed >= crit.seconds_limit) {
      check.expect(false, "took " + std::to_string(elapsed) + " s");
    }
    std::ostringstream line;
    line << (check.ok ? "PASS" : "FAIL") << "  criterion " << crit.id << ": " << crit.name << "  ("
         << elapsed << " s)";
    if (!check.ok) line << "  -- " << check.detail;
    std::cout << line.str() << '\n';
    failures += check.ok ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}
