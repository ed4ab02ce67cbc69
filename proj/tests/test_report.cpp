#include <doctest.h>

#include "hamclosure/errors.hpp"
#include "report.hpp"
#include "support.hpp"

using namespace hamclosure;
using hamclosure::test::named;

TEST_CASE("analysis report fields") {
  const nlohmann::json r = cli::analysis_report(named("G8"), {3, kDefaultNodeBudget});
  CHECK(r["graph6"] == "G~QKHC");
  CHECK(r["n"] == 8);
  CHECK(r["hypotheses"]["n_pq_heavy"] == true);
  CHECK(r["hypotheses"]["c_closed"] == true);
  CHECK(r["net_profile"]["nets"] == 1);
  CHECK(r["hamiltonicity"]["status"] == "hamiltonian");
  CHECK(r["theorem_status"] == "OUT-OF-RANGE");
  CHECK(r["seed"] == 3);
  CHECK(r["closures"]["c"]["edges_added"] == 0);
  CHECK(r["families"]["matches"].size() >= 1);
  CHECK(r["regions"]["regions"].size() == 6);
}

TEST_CASE("reports serialize identically across runs with sorted keys") {
  for (const NamedGraph& g : curated_graphs()) {
    const std::string a = cli::analysis_report(g.graph, {1, kDefaultNodeBudget}).dump();
    const std::string b = cli::analysis_report(g.graph, {1, kDefaultNodeBudget}).dump();
    CHECK(a == b);
    CHECK(a.find("\"closures\"") < a.find("\"graph6\""));
    CHECK(a.find("\"seed\"") < a.find("\"theorem_status\""));
  }
  const nlohmann::json claw = cli::analysis_report(complete_bipartite(1, 3), {});
  CHECK(claw["closures"]["r"].is_null());
  CHECK(claw["regions"].is_null());
}

TEST_CASE("undecided search surfaces as a budget error") {
  CHECK_THROWS_AS(cli::analysis_report(cycle_graph(12).with_edges(std::vector<Edge>{{0, 6}}), {0, 1}), BudgetExceeded);
}
