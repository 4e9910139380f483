#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "matroidlab/amalgam.hpp"
#include "matroidlab/catalog.hpp"
#include "matroidlab/completion.hpp"
#include "matroidlab/extension.hpp"
#include "matroidlab/io.hpp"
#include "matroidlab/lattice.hpp"
#include "matroidlab/line_geometry.hpp"
#include "matroidlab/modular_cut.hpp"
#include "matroidlab/modularity.hpp"

using json = nlohmann::ordered_json;
using namespace matroidlab;

namespace {

// Exit codes: 0 success / property holds, 1 property fails, 2 input error,
// 3 budget exceeded, 4 internal inconsistency.
int exit_code_for(Errc c) {
  switch (c) {
    case Errc::NotHypermodular:
    case Errc::VamosFound:
    case Errc::NonTermination:
      return 1;
    case Errc::BudgetExceeded:
      return 3;
    case Errc::InternalInvariant:
      return 4;
    default:
      return 2;
  }
}

std::string load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::ValidationError, "cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct NamedMatroid {
  std::string name;
  Matroid m;
};

NamedMatroid load_matroid(const std::string& path) {
  MatroidFile file = parse_matroid_file(load_file(path));
  return {file.name, to_matroid(file)};
}

json subset_json(Subset s) {
  json a = json::array();
  for_each_element(s, [&](int e) { a.push_back(e); });
  return a;
}

std::string label_set(const Matroid& m, Subset s) {
  std::string out = "{";
  bool first = true;
  for_each_element(s, [&](int e) {
    if (!first) out += ',';
    out += m.label_of(e);
    first = false;
  });
  return out + "}";
}

json matroid_json(const Matroid& m) {
  json j;
  j["elements"] = m.size();
  j["rank"] = m.rank();
  j["loops"] = subset_json(m.loops());
  json table = json::array();
  for (int k = 0; k <= m.rank(); ++k) {
    json level = json::array();
    for (Subset f : m.flats_of_rank(k)) level.push_back(subset_json(f));
    table.push_back(level);
  }
  j["flats_by_rank"] = table;
  return j;
}

json pair_json(const PairDefectReport& r) {
  json j;
  j["x"] = subset_json(r.x);
  j["y"] = subset_json(r.y);
  j["ranks"] = {r.rank_x, r.rank_y, r.rank_union, r.rank_meet};
  j["defect"] = r.defect;
  return j;
}

struct ReportSink {
  std::string path;
  json j;

  void flush() {
    if (path.empty()) return;
    std::ofstream out(path, std::ios::binary);
    out << j.dump(2) << "\n";
  }
};

json flat_counts_json(const Matroid& m) {
  json counts = json::array();
  for (int k = 0; k <= m.rank(); ++k)
    counts.push_back(static_cast<int>(m.flats_of_rank(k).size()));
  return counts;
}

void describe(const NamedMatroid& nm, json& j) {
  j["name"] = nm.name;
  j["elements"] = nm.m.size();
  j["rank"] = nm.m.rank();
  j["loops"] = subset_json(nm.m.loops());
  j["flat_counts"] = flat_counts_json(nm.m);
}

int cmd_validate(const std::string& path, ReportSink& report) {
  NamedMatroid nm = load_matroid(path);
  describe(nm, report.j);
  report.j["valid"] = true;
  std::cout << "valid: " << nm.name << " (n=" << nm.m.size() << ", rank=" << nm.m.rank()
            << ", flats=" << nm.m.flat_count() << ")\n";
  return 0;
}

int cmd_analyze(const std::string& path, ReportSink& report) {
  NamedMatroid nm = load_matroid(path);
  const Matroid& m = nm.m;
  describe(nm, report.j);

  bool modular = is_modular(m);
  report.j["modular"] = modular;
  long long defect = matroid_modular_defect(m);
  report.j["modular_defect"] = defect;
  std::cout << nm.name << ": n=" << m.size() << " rank=" << m.rank()
            << " loops=" << label_set(m, m.loops()) << "\n";
  std::cout << "flats by rank:";
  for (int k = 0; k <= m.rank(); ++k) std::cout << ' ' << m.flats_of_rank(k).size();
  std::cout << " (total " << m.flat_count() << ")\n";
  std::cout << "modular: " << (modular ? "yes" : "no") << "\n";
  std::cout << "modular defect: " << defect << "\n";

  if (m.rank() >= 3) {
    bool hyper = is_hypermodular(m);
    report.j["hypermodular"] = hyper;
    std::cout << "hypermodular: " << (hyper ? "yes" : "no") << "\n";
    if (!hyper) {
      auto w = hypermodularity_witness(m);
      report.j["hypermodularity_witness"] = pair_json(*w);
      std::cout << "  witness: " << label_set(m, w->x) << " " << label_set(m, w->y)
                << " defect " << w->defect << "\n";
    } else if (m.rank() == 4 && m.loopless()) {
      auto pairs = nonmodular_pairs(m);
      int plane_line = 0, line_line = 0;
      json arr = json::array();
      for (const auto& cp : pairs) {
        (cp.kind == NonModularPairKind::PlaneLine ? plane_line : line_line)++;
        json pj = pair_json(cp.pair);
        pj["kind"] = pair_kind_name(cp.kind);
        arr.push_back(pj);
      }
      report.j["nonmodular_pairs"] =
          json{{"count", pairs.size()}, {"plane_line", plane_line},
               {"line_line", line_line}, {"pairs", arr}};
      std::cout << "non-modular pairs: " << pairs.size() << " (plane-line " << plane_line
                << ", line-line " << line_line << ")\n";
    }
  } else {
    report.j["hypermodular"] = nullptr;
    std::cout << "hypermodular: n/a (rank < 3)\n";
  }
  return 0;
}

int cmd_detect_vamos(const std::string& path, ReportSink& report) {
  NamedMatroid nm = load_matroid(path);
  const Matroid& m = nm.m;
  describe(nm, report.j);
  auto arrangements = find_line_arrangements(m);
  int vamos_count = 0, anti_count = 0;
  json arr = json::array();
  for (const auto& q : arrangements) {
    (q.verdict == LineArrangementVerdict::Vamos ? vamos_count : anti_count)++;
    json qj;
    qj["verdict"] = verdict_name(q.verdict);
    json lines = json::array();
    json labels = json::array();
    for (Subset t : q.lines) {
      lines.push_back(subset_json(t));
      labels.push_back(label_set(m, t));
    }
    qj["lines"] = lines;
    qj["labels"] = labels;
    json misses = json::array();
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (!q.meets[i][j]) misses.push_back(json::array({i, j}));
    qj["non_meeting_pairs"] = misses;
    arr.push_back(qj);
  }
  report.j["vamos_count"] = vamos_count;
  report.j["anti_vamos_count"] = anti_count;
  report.j["arrangements"] = arr;
  std::cout << nm.name << ": " << vamos_count << " vamos, " << anti_count
            << " anti-vamos line arrangement(s)\n";
  for (const auto& q : arrangements) {
    std::cout << "  " << verdict_name(q.verdict) << ":";
    for (Subset t : q.lines) std::cout << ' ' << label_set(m, t);
    std::cout << "\n";
  }
  return 0;
}

int cmd_cuts(const std::string& path, ReportSink& report) {
  NamedMatroid nm = load_matroid(path);
  Matroid m = nm.m;
  describe(nm, report.j);
  int stripped = popcount(m.loops());
  if (stripped > 0) m = delete_elements(m, m.loops());
  report.j["loops_stripped"] = stripped;
  if (m.rank() != 4) fail(Errc::PreconditionViolated, "cuts needs a rank-4 matroid");
  if (auto w = hypermodularity_witness(m)) {
    fail(Errc::NotHypermodular, "hyperplanes " + subset_to_string(w->x) + " and " +
                                    subset_to_string(w->y) + " have defect " +
                                    std::to_string(w->defect));
  }

  auto cuts = nonprincipal_cuts(m);
  report.j["nonprincipal_cut_count"] = static_cast<int>(cuts.size());
  json arr = json::array();
  std::cout << nm.name << ": " << cuts.size() << " non-principal modular cut(s)";
  if (stripped) std::cout << " (" << stripped << " loop(s) stripped)";
  std::cout << "\n";
  for (const auto& cut : cuts) {
    json cj;
    cj["classification"] = cut_class_name(cut.classification);
    cj["size"] = cut.size();
    json members = json::array();
    for (Subset f : cut.members) members.push_back(subset_json(f));
    cj["members"] = members;
    json rank2 = json::array();
    for (Subset t : cut.members_of_rank(m, 2)) rank2.push_back(subset_json(t));
    cj["rank2_members"] = rank2;
    auto rep = check_proper_cut_equivalences(m, cut);
    cj["equivalences"] = json{{"proper", rep.proper},
                           {"nonprincipal_generated", rep.nonprincipal_generated},
                           {"no_rank_le_1", rep.no_rank_le_1},
                           {"rank2_partition", rep.rank2_partition},
                           {"all_equal", rep.all_equal()}};
    cj["vamos_free"] = cut_vamos_free(m, cut);
    arr.push_back(cj);
    std::cout << "  " << cut_class_name(cut.classification) << " cut, " << cut.size()
              << " members, lines:";
    for (Subset t : cut.members_of_rank(m, 2)) std::cout << ' ' << label_set(m, t);
    std::cout << "\n";
  }
  report.j["cuts"] = arr;
  return 0;
}

int cmd_complete(const std::string& path, const std::string& policy_text, bool fast,
                 const std::string& out_path, ReportSink& report) {
  NamedMatroid nm = load_matroid(path);
  CompletionOptions options;
  options.policy = PairPolicy::parse(policy_text);
  options.fast = fast;
  describe(nm, report.j);
  report.j["policy"] = options.policy.id();
  report.j["fast"] = fast;

  CompletionTrace trace = complete_with_loops(nm.m, options);
  report.j["loops_reattached"] = trace.loops_reattached;
  report.j["nonprincipal_cut_count"] = trace.nonprincipal_cut_count;
  json steps = json::array();
  for (const auto& step : trace.steps) {
    json sj;
    sj["new_element"] = step.new_element;
    sj["cut_size"] = step.cut.size();
    sj["defect_before"] = step.defect_before;
    sj["defect_after"] = step.defect_after;
    steps.push_back(sj);
  }
  report.j["steps"] = steps;
  report.j["defect_sequence"] = trace.defect_sequence;
  report.j["result"] = matroid_json(trace.result);
  report.j["result_modular"] = is_modular(trace.result);

  std::cout << nm.name << ": n=" << nm.m.size() << " defect "
            << trace.defect_sequence.front() << "\n";
  for (size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& step = trace.steps[i];
    std::cout << "step " << i + 1 << ": cut of " << step.cut.size() << " members, defect "
              << step.defect_before << " -> " << step.defect_after << "\n";
  }
  std::cout << "steps: " << trace.step_count()
            << ", non-principal cuts of input: " << trace.nonprincipal_cut_count << "\n";
  std::cout << "result: n=" << trace.result.size() << " rank=" << trace.result.rank()
            << " modular=" << (is_modular(trace.result) ? "yes" : "no") << "\n";

  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) fail(Errc::ValidationError, "cannot write file: " + out_path);
    out << serialize(trace.result, nm.name + "_completed");
  }
  return 0;
}

int cmd_amalgam(const std::string& path1, const std::string& path2, int shared,
                long long max_nodes, ReportSink& report) {
  NamedMatroid a = load_matroid(path1);
  NamedMatroid b = load_matroid(path2);
  report.j["m1"] = a.name;
  report.j["m2"] = b.name;
  report.j["shared"] = shared;
  SearchBudget budget;
  if (max_nodes > 0) budget.max_nodes = max_nodes;

  auto outcome = find_amalgam({a.m, b.m, shared}, budget);
  if (const Matroid* witness = std::get_if<Matroid>(&outcome)) {
    report.j["outcome"] = "witness";
    report.j["witness"] = matroid_json(*witness);
    std::cout << "amalgam found: n=" << witness->size() << " rank=" << witness->rank()
              << "\n";
    return 0;
  }
  const auto& cert = std::get<NoAmalgamCertificate>(outcome);
  report.j["outcome"] = "no-amalgam";
  report.j["certificate"] = json{{"nodes_explored", cert.nodes_explored}};
  std::cout << "no amalgam exists (exhaustive search, " << cert.nodes_explored
            << " nodes)\n";
  return 1;
}

int cmd_catalog(const std::string& spec, ReportSink& report) {
  Matroid m = catalog(spec);
  std::string name = spec;
  for (char& c : name)
    if (c == '(' || c == ')' || c == ',') c = '_';
  while (!name.empty() && name.back() == '_') name.pop_back();
  describe({name, m}, report.j);
  std::cout << serialize(m, name);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact matroid analysis: modularity structure, Vamos line arrangements, "
               "modular cuts, rank-4 completion, amalgams"};
  app.require_subcommand(1);

  std::string file, file2, policy = "lex", out_path, report_path, catalog_spec;
  bool fast = false;
  int shared = 0;
  long long max_nodes = 0;

  auto add_report = [&](CLI::App* cmd) {
    cmd->add_option("--report", report_path, "write a JSON report to PATH");
  };

  CLI::App* validate = app.add_subcommand("validate", "parse and validate a matroid file");
  validate->add_option("file", file)->required();
  add_report(validate);

  CLI::App* analyze = app.add_subcommand("analyze", "modularity analysis");
  analyze->add_option("file", file)->required();
  add_report(analyze);

  CLI::App* detect = app.add_subcommand("detect-vamos", "scan for Vamos line arrangements");
  detect->add_option("file", file)->required();
  add_report(detect);

  CLI::App* cuts = app.add_subcommand("cuts", "non-principal modular cuts");
  cuts->add_option("file", file)->required();
  add_report(cuts);

  CLI::App* complete_cmd = app.add_subcommand("complete", "modular completion (rank 4)");
  complete_cmd->add_option("file", file)->required();
  complete_cmd->add_option("--policy", policy, "lex | revlex | random[:SEED]");
  complete_cmd->add_flag("--fast", fast, "skip per-iteration re-verification");
  complete_cmd->add_option("--out", out_path, "write the completed matroid to PATH");
  add_report(complete_cmd);

  CLI::App* amalgam = app.add_subcommand("amalgam", "exhaustive amalgam search");
  amalgam->add_option("file1", file)->required();
  amalgam->add_option("file2", file2)->required();
  amalgam->add_option("--shared", shared, "size of the shared ground prefix")->required();
  amalgam->add_option("--max-nodes", max_nodes, "search node budget");
  add_report(amalgam);

  CLI::App* cat = app.add_subcommand("catalog", "print a catalog matroid file");
  cat->add_option("name", catalog_spec, "vamos | uniform(r,n) | boolean(n) | pg3(q)")
      ->required();
  add_report(cat);

  CLI11_PARSE(app, argc, argv);

  ReportSink report;
  report.path = report_path;
  report.j["command"] = app.get_subcommands().front()->get_name();
  if (!file.empty()) report.j["input"] = file;
  if (!file2.empty()) report.j["input2"] = file2;

  int code = 0;
  try {
    if (validate->parsed()) code = cmd_validate(file, report);
    else if (analyze->parsed()) code = cmd_analyze(file, report);
    else if (detect->parsed()) code = cmd_detect_vamos(file, report);
    else if (cuts->parsed()) code = cmd_cuts(file, report);
    else if (complete_cmd->parsed()) code = cmd_complete(file, policy, fast, out_path, report);
    else if (amalgam->parsed()) code = cmd_amalgam(file, file2, shared, max_nodes, report);
    else if (cat->parsed()) code = cmd_catalog(catalog_spec, report);
  } catch (const Error& e) {
    code = exit_code_for(e.code());
    report.j["error"] = json{{"kind", errc_name(e.code())}, {"message", e.what()}};
    std::cerr << "error: " << e.what() << "\n";
  }
  report.j["exit_code"] = code;
  report.flush();
  return code;
}
