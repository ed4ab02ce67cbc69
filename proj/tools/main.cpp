// hamclosure command-line tool.

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hamclosure/closures.hpp"
#include "hamclosure/errors.hpp"
#include "hamclosure/families.hpp"
#include "hamclosure/graph_io.hpp"
#include "hamclosure/ham_oracle.hpp"
#include "hamclosure/parallel.hpp"
#include "hamclosure/patterns.hpp"
#include "hamclosure/verify.hpp"
#include "report.hpp"

using namespace hamclosure;

namespace {

enum Exit { kOk = 0, kFailed = 1, kPrecondition = 2, kBudget = 3, kParse = 4 };

int exit_code(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return kParse;
  if (dynamic_cast<const BudgetExceeded*>(&e)) return kBudget;
  if (dynamic_cast<const PreconditionError*>(&e) || dynamic_cast<const ParameterError*>(&e)) return kPrecondition;
  if (dynamic_cast<const InputError*>(&e)) return kParse;
  return kFailed;
}

std::string read_stream(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string read_file(const std::string& path) {
  if (path == "-") return read_stream(std::cin);
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return read_stream(in);
}

// Text starting with a digit or '#' is one edge list; otherwise every
// non-empty line is a graph6 string.
std::vector<std::string> split_inputs(const std::string& text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start == std::string::npos) return {};
  if (std::isdigit(static_cast<unsigned char>(text[start])) || text[start] == '#') return {text};
  std::vector<std::string> out;
  std::istringstream all(text);
  std::string line;
  while (std::getline(all, line))
    if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
  return out;
}

struct Inputs {
  std::vector<std::string> graphs;
  std::string file;

  void add_to(CLI::App* cmd) {
    cmd->add_option("graphs", graphs, "graph6 strings (default: one per line on stdin)");
    cmd->add_option("-f,--file", file, "graph6 lines or an edge list");
  }

  std::vector<std::string> texts() const {
    if (!file.empty()) return split_inputs(read_file(file));
    if (!graphs.empty()) return graphs;
    return split_inputs(read_stream(std::cin));
  }
};

struct Outcome {
  std::string out;
  std::string err;
  int code = kOk;
};

// Runs `fn` on every input concurrently and prints in input order. The exit
// code is that of the first failing input.
template <typename Fn>
int batch(const Inputs& inputs, Fn fn) {
  const std::vector<std::string> texts = inputs.texts();
  const bool multi = texts.size() > 1;
  const std::vector<Outcome> results = parallel_map(texts, [&](const std::string& text) {
    Outcome o;
    try {
      o.out = fn(parse_graph_auto(text), multi);
    } catch (const std::exception& e) {
      o.err = e.what();
      o.code = exit_code(e);
    }
    return o;
  });
  int code = kOk;
  for (const Outcome& o : results) {
    std::cout << o.out;
    if (!o.err.empty()) std::cerr << "error: " << o.err << '\n';
    if (code == kOk) code = o.code;
  }
  std::cout.flush();
  return code;
}

std::uint64_t default_budget() {
  const char* env = std::getenv("HAMCLOSURE_NODE_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultNodeBudget;
  std::size_t used = 0;
  const std::string text(env);
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || v == 0) throw ParseError("HAMCLOSURE_NODE_BUDGET must be a positive integer", used);
  return v;
}

std::string header(const Graph& g, bool multi) { return multi ? "# " + emit_graph6(g) + '\n' : std::string(); }

SelectionPolicy policy_from(const std::string& name, std::uint64_t seed) {
  if (name == "ascending") return SelectionPolicy::ascending();
  if (name == "descending") return SelectionPolicy::descending();
  return SelectionPolicy::random(seed);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamiltonicity closures, heavy nets and structural graph families"};
  app.set_version_flag("--version", std::string(cli::kToolVersion));
  app.require_subcommand(1);

  std::uint64_t budget = 0;

  // closure
  auto* closure = app.add_subcommand("closure", "Print the o-, r- or c-closure of each input graph");
  Inputs closure_in;
  closure_in.add_to(closure);
  std::string kind = "c", mode = "amended", policy = "ascending";
  bool trace = false;
  std::uint64_t closure_seed = 0;
  closure->add_option("--kind", kind, "o, r or c")->check(CLI::IsMember({"o", "r", "c"}))->capture_default_str();
  closure->add_option("--mode", mode, "c-eligibility reading")
      ->check(CLI::IsMember({"literal", "amended"}))
      ->capture_default_str();
  closure->add_option("--order", policy, "vertex selection order")
      ->check(CLI::IsMember({"ascending", "descending", "random"}))
      ->capture_default_str();
  closure->add_option("--seed", closure_seed, "seed for --order random")->capture_default_str();
  closure->add_flag("--trace", trace, "also print the step trace");

  // detect
  auto* detect = app.add_subcommand("detect", "List induced copies of a pattern, or the net heaviness profile");
  Inputs detect_in;
  detect_in.add_to(detect);
  std::string pattern;
  bool heaviness = false;
  detect->add_option("--pattern", pattern, "claw, P4, P5, P6, C3, Z1, Z2, bull, net, wounded, diamond");
  detect->add_flag("--heaviness", heaviness, "print the N-p / N-pq heaviness profile");

  // generate
  auto* generate_cmd = app.add_subcommand("generate", "Build a family member from a parameter file");
  std::string params_file;
  std::uint64_t gen_seed = 0;
  generate_cmd->add_option("--params", params_file, "parameter file, - for stdin")->required();
  generate_cmd->add_option("--seed", gen_seed, "resolves the free choices")->capture_default_str();

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  std::uint64_t verify_seed = 7;
  bool serial = false;
  verify->add_option("--suite", suite, "suite name or 'all'")->required();
  verify->add_option("--seed", verify_seed)->capture_default_str();
  verify->add_option("--budget", budget, "hamiltonicity node budget");
  verify->add_flag("--serial", serial, "run on one thread");

  // classify
  auto* classify = app.add_subcommand("classify", "Check the four hypotheses and family membership");
  Inputs classify_in;
  classify_in.add_to(classify);
  bool explain = false, as_json = false;
  std::uint64_t classify_seed = 0;
  classify->add_flag("--explain", explain, "print decompositions and certificates");
  classify->add_flag("--json", as_json, "print an AnalysisReport per input");
  classify->add_option("--seed", classify_seed, "recorded in the report")->capture_default_str();
  classify->add_option("--budget", budget, "hamiltonicity node budget");

  // convert
  auto* convert = app.add_subcommand("convert", "Convert between graph6, edge list and DOT");
  Inputs convert_in;
  convert_in.add_to(convert);
  std::string to = "graph6";
  convert->add_option("--to", to)->check(CLI::IsMember({"graph6", "edges", "dot"}))->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (budget == 0) budget = default_budget();

    if (closure->parsed()) {
      const EligibilityMode m = mode == "literal" ? EligibilityMode::Literal : EligibilityMode::Amended;
      const SelectionPolicy sel = policy_from(policy, closure_seed);
      return batch(closure_in, [&](const Graph& g, bool) {
        ClosureResult r;
        std::string warning;
        if (kind == "o") {
          r = o_closure(g, sel);
        } else if (kind == "r") {
          r = r_closure(g, sel);
        } else {
          r = c_closure(g, m, sel);
          if (closure_modes_diverge(g))
            warning = "warning: literal and amended eligibility give different c-closures for " + emit_graph6(g) + '\n';
        }
        if (!warning.empty()) std::cerr << warning;
        std::string out = emit_graph6(r.graph) + '\n';
        if (trace) out += r.trace.to_text() + '\n';
        return out;
      });
    }

    if (detect->parsed()) {
      std::optional<PatternKind> k;
      if (!pattern.empty()) {
        k = parse_pattern(pattern);
        if (!k) throw InputError("unknown pattern '" + pattern + "'");
      }
      if (!k && !heaviness) throw InputError("detect needs --pattern or --heaviness");
      return batch(detect_in, [&](const Graph& g, bool multi) {
        std::string out = header(g, multi);
        if (k)
          for (const Embedding& e : find_induced(g, *k)) {
            out += pattern_name(*k);
            for (Vertex v : e.roles) out += ' ' + std::to_string(v);
            out += '\n';
          }
        if (heaviness) {
          const NetProfile p = net_profile(g);
          out += std::string("N-pq-heavy=") + (p.pq_heavy ? "true" : "false") + " N-p-heavy=" +
                 (p.p_heavy ? "true" : "false") + '\n';
        }
        return out;
      });
    }

    if (generate_cmd->parsed()) {
      const FamilyParams p = parse_params(read_file(params_file));
      std::cout << emit_graph6(generate(p, gen_seed)) << '\n';
      return kOk;
    }

    if (verify->parsed()) {
      std::vector<std::string> names;
      if (suite == "all")
        names = suite_names();
      else
        names.push_back(suite);
      const SuiteOptions options{verify_seed, budget, !serial};
      bool all_passed = true;
      for (const std::string& name : names) {
        const SuiteResult r = run_suite(name, options);
        all_passed = all_passed && r.passed;
        std::cout << "suite " << r.name << ": " << (r.passed ? "PASS" : "FAIL") << " cases=" << r.cases
                  << " failures=" << r.failures << " seconds=" << r.seconds << '\n';
        std::cout << "  claim: " << r.claim << '\n';
        for (const std::string& row : r.table) std::cout << "  | " << row << '\n';
        for (const std::string& note : r.notes) std::cout << "  " << note << '\n';
        for (const std::string& d : r.failure_details) std::cout << "  failure: " << d << '\n';
      }
      return all_passed ? kOk : kFailed;
    }

    if (classify->parsed()) {
      const cli::ReportOptions options{classify_seed, budget};
      return batch(classify_in, [&](const Graph& g, bool) {
        if (as_json) return cli::analysis_report(g, options).dump() + '\n';
        if (explain) return cli::explain(g, options) + '\n';
        return cli::summary_line(g, options) + '\n';
      });
    }

    if (convert->parsed()) {
      return batch(convert_in, [&](const Graph& g, bool) {
        if (to == "edges") return emit_edge_list(g);
        if (to == "dot") return emit_dot(g);
        return emit_graph6(g) + '\n';
      });
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e);
  }
  return kOk;
}
