// coxtour: command-line front end for the Coxeter tournament engine.
//
// Subcommands: check, construct, score, count, degree, neighbors, graph,
// embed, enumerate, verify. JSON goes to stdout, diagnostics to stderr.
// Exit codes: 0 success, 1 domain-level "no" or invalid input, 2 internal
// invariant violation, 64 usage errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "coxtour/embeddings.hpp"
#include "coxtour/generators.hpp"
#include "coxtour/interchange.hpp"
#include "coxtour/json_io.hpp"
#include "coxtour/oracle.hpp"
#include "coxtour/scan.hpp"
#include "coxtour/score_sequences.hpp"
#include "coxtour/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace coxtour;

constexpr int kExitUsage = 64;

// Score entries arrive as unmatched tokens because "-2" looks like a flag to
// the option parser. Anything that is not score-shaped is a usage error.
ScoreVector scores_from_extras(const std::vector<std::string>& extras, int n) {
  std::vector<std::string> entries;
  for (const auto& tok : extras) {
    try {
      parse_half_string(tok);
    } catch (const std::exception&) {
      throw CLI::ParseError("unrecognized argument '" + tok + "'", kExitUsage);
    }
    entries.push_back(tok);
  }
  if (static_cast<int>(entries.size()) != n)
    throw std::invalid_argument("expected " + std::to_string(n) + " score entries, got " +
                                std::to_string(entries.size()));
  return ScoreVector::from_halves(entries);
}

json load_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("invalid JSON in '" + path + "': " + e.what());
  }
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

int run(int argc, char** argv) {
  CLI::App app{"Coxeter tournaments on signed graphs: score sequences, neutral "
               "generators, interchange graphs and classical embeddings"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "print help for all subcommands");

  std::string family_arg, path_arg, format = "json";
  int n_arg = 0, jobs = 0;
  bool trace = false, force = false, scores_only = false;

  auto add_scored = [&](const std::string& name, const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("family", family_arg, "root system family: A, B, C or D")->required();
    sub->add_option("n", n_arg, "rank (players)")->required();
    sub->allow_extras();  // score entries, possibly negative
    return sub;
  };

  CLI::App* cmd_check = add_scored("check", "decide membership in Score(Phi)");
  CLI::App* cmd_construct = add_scored("construct", "build a tournament with the given score");
  cmd_construct->add_flag("--trace", trace, "include construction intermediates");
  CLI::App* cmd_degree = add_scored("degree", "interchange-graph degree of a score");
  CLI::App* cmd_graph = add_scored("graph", "build the interchange graph of a fiber");
  cmd_graph->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "dot"}));
  cmd_graph->add_flag("--force", force, "raise the enumeration guard");

  CLI::App* cmd_score = app.add_subcommand("score", "score of a tournament JSON file");
  cmd_score->add_option("file", path_arg, "tournament JSON path, or - for stdin")->required();
  CLI::App* cmd_count = app.add_subcommand("count", "generator counts of a tournament");
  cmd_count->add_option("file", path_arg, "tournament JSON path, or - for stdin")->required();
  CLI::App* cmd_neighbors =
      app.add_subcommand("neighbors", "interchange moves available from a tournament");
  cmd_neighbors->add_option("file", path_arg, "tournament JSON path, or - for stdin")->required();
  CLI::App* cmd_embed = app.add_subcommand("embed", "embed as a classical tournament");
  cmd_embed->add_option("file", path_arg, "tournament JSON path, or - for stdin")->required();

  CLI::App* cmd_enumerate = app.add_subcommand("enumerate", "list all tournaments (JSON lines)");
  cmd_enumerate->add_option("family", family_arg, "root system family")->required();
  cmd_enumerate->add_option("n", n_arg, "rank (players)")->required();
  cmd_enumerate->add_flag("--scores-only", scores_only, "emit one line per achieved score");
  cmd_enumerate->add_flag("--force", force, "raise the enumeration guard");

  CLI::App* cmd_verify = app.add_subcommand("verify", "run the full verification suite");
  cmd_verify->add_flag("--force", force, "include the 2^16 and 2^20 systems");
  cmd_verify->add_option("--jobs", jobs, "OpenMP thread count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

#ifdef _OPENMP
  if (jobs > 0) omp_set_num_threads(jobs);
#endif

  if (*cmd_check) {
    const RootSystem sys(family_from_string(family_arg), n_arg);
    const ScoreVector s = scores_from_extras(cmd_check->remaining(), sys.rank);
    const auto report = score_condition_report(sys, s);
    json out;
    bool valid = true;
    const char* reason = nullptr;
    json conditions;
    for (const auto& [condition, passed] : report) {
      conditions[condition_name(condition)] = passed ? "pass" : "fail";
      if (!passed && valid) {
        valid = false;
        reason = condition_name(condition);
      }
    }
    out["valid"] = valid;
    if (!valid) out["reason"] = reason;
    out["conditions"] = conditions;
    emit(out);
    return valid ? 0 : 1;
  }

  if (*cmd_construct) {
    const RootSystem sys(family_from_string(family_arg), n_arg);
    const ScoreVector s = scores_from_extras(cmd_construct->remaining(), sys.rank);
    const Constructed built = construct(sys, s);
    json out = tournament_to_json(built.tournament);
    out["score"] = score_to_json(score(built.tournament));
    if (trace) out["trace"] = trace_to_json(built.trace);
    emit(out);
    return 0;
  }

  if (*cmd_degree) {
    const RootSystem sys(family_from_string(family_arg), n_arg);
    const ScoreVector s = scores_from_extras(cmd_degree->remaining(), sys.rank);
    emit(json{{"degree", degree(sys, s)}});
    return 0;
  }

  if (*cmd_graph) {
    const RootSystem sys(family_from_string(family_arg), n_arg);
    const ScoreVector s = scores_from_extras(cmd_graph->remaining(), sys.rank);
    const InterchangeGraph g = build_interchange_graph(sys, s, force);
    if (format == "dot")
      std::cout << graph_to_dot(g);
    else
      emit(graph_to_json(g));
    return 0;
  }

  if (*cmd_score) {
    const Tournament t = tournament_from_json(load_json(path_arg));
    emit(json{{"score", score_to_json(score(t))}});
    return 0;
  }

  if (*cmd_count) {
    const Tournament t = tournament_from_json(load_json(path_arg));
    emit(counts_to_json(generator_counts(t)));
    return 0;
  }

  if (*cmd_neighbors) {
    const Tournament t = tournament_from_json(load_json(path_arg));
    json out;
    out["score"] = score_to_json(score(t));
    out["degree"] = degree(t.system, score(t));
    json list = json::array();
    for (const auto& nb : interchange_neighbors(t)) {
      json item = tournament_to_json(nb.tournament);
      item["multiplicity"] = nb.multiplicity;
      item["generator"] = generator_kind_name(nb.kind);
      list.push_back(std::move(item));
    }
    out["neighbors"] = list;
    emit(out);
    return 0;
  }

  if (*cmd_embed) {
    const Tournament t = tournament_from_json(load_json(path_arg));
    emit(embedding_to_json(embed(t)));
    return 0;
  }

  if (*cmd_enumerate) {
    const RootSystem sys(family_from_string(family_arg), n_arg);
    if (scores_only) {
      for (const auto& [key, codes] : scan::collect_fibers(sys, {true, force})) {
        const ScoreVector s{scan::unpack_score(key, sys.rank)};
        emit(json{{"score", score_to_json(s)}, {"fiber", codes.size()}});
      }
    } else {
      oracle::for_each_tournament(
          sys,
          [&](const Tournament& t) {
            json line = tournament_to_json(t);
            line["score"] = score_to_json(score(t));
            emit(line);
          },
          force);
    }
    return 0;
  }

  if (*cmd_verify) {
    const auto criteria = verify::run_acceptance({force, jobs});
    for (const auto& crit : criteria) {
      for (const auto& check : crit.checks) {
        json line;
        line["criterion"] = crit.number;
        line["check"] = check.name;
        if (!check.family.empty()) {
          line["family"] = check.family;
          line["n"] = check.rank;
        }
        line["status"] = check.pass ? "pass" : "fail";
        line["elapsed_ms"] = check.elapsed_ms;
        if (!check.info.empty()) line["info"] = check.info;
        if (!check.pass && !check.counterexample.is_null())
          line["counterexample"] = check.counterexample;
        emit(line);
      }
    }
    int failed = 0;
    for (const auto& crit : criteria)
      if (!crit.pass) ++failed;
    emit(json{{"criteria", criteria.size()}, {"failed", failed},
              {"status", failed == 0 ? "pass" : "fail"}});
    return failed == 0 ? 0 : 1;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const coxtour::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
