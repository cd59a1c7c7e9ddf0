// hookforest command-line front end: enumeration, exact counts, hook
// polynomial reports, identity sweeps, and the colored-forest bijections.
// All output is a single JSON document on stdout. Exit codes: 0 success,
// 1 falsified identity (verify), 2 usage or malformed input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "hookforest/json_io.hpp"
#include "hookforest/verify.hpp"

namespace hf = hookforest;

namespace {

hf::json read_json_arg(const std::string& arg) {
  std::string text;
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) throw hf::error("cannot open file: " + arg);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  try {
    return hf::json::parse(text);
  } catch (const hf::json::parse_error& e) {
    throw hf::error("malformed JSON in \"" + arg + "\": " + e.what());
  }
}

void emit(const hf::json& doc) { std::cout << doc.dump() << "\n"; }

std::vector<long long> parse_ll_list(const std::string& text, const char* what) {
  std::vector<long long> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stoll(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw hf::error(std::string("malformed ") + what + " entry: \"" + item + "\"");
    }
  }
  if (out.empty()) throw hf::error(std::string("empty ") + what + " list");
  return out;
}

std::vector<std::string> parse_string_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact plane-forest enumeration and hook polynomial identity toolkit"};
  app.require_subcommand(1);

  std::string type_text, mode = "both", input_arg, partition_arg, from_arg, to_arg;
  std::string k_values_text = "0,1,2", checks_text;
  long long form = 1, k = 0, ell = 1;
  bool first_tree_min = false;
  long long max_total_vertices = 7, max_degree = 4, max_n = 5;

  CLI::App* cmd_enumerate = app.add_subcommand("enumerate", "list all forests of a type");
  cmd_enumerate->add_option("--type", type_text, "degree sequence r0,r1,...")->required();

  CLI::App* cmd_count = app.add_subcommand("count", "count forests of a type");
  cmd_count->add_option("--type", type_text, "degree sequence r0,r1,...")->required();

  CLI::App* cmd_hookpoly = app.add_subcommand("hookpoly", "hook polynomial report");
  cmd_hookpoly->add_option("--type", type_text, "degree sequence r0,r1,...")->required();
  cmd_hookpoly->add_option("--form", form, "1 = binomial form, 2 = companion form")
      ->check(CLI::Range(1, 2));
  cmd_hookpoly->add_option("--mode", mode, "brute | closed | both")
      ->check(CLI::IsMember({"brute", "closed", "both"}));

  CLI::App* cmd_colored = app.add_subcommand("colored-count", "count colored labelled forests");
  cmd_colored->add_option("--type", type_text, "degree sequence r0,r1,...")->required();
  cmd_colored->add_option("-k,--k", k, "number of special colors")->required();
  cmd_colored->add_option("--partition", partition_arg, "partition JSON (file or inline)");
  cmd_colored->add_flag("--first-tree-min", first_tree_min,
                        "restrict to forests whose smallest label is in the first tree");

  CLI::App* cmd_psi = app.add_subcommand("psi", "apply the partition-swap bijection");
  cmd_psi->add_option("--input", input_arg, "colored forest JSON (file or inline)")->required();
  cmd_psi->add_option("--from", from_arg, "source partition JSON")->required();
  cmd_psi->add_option("--to", to_arg, "target partition JSON")->required();
  cmd_psi->add_option("-k,--k", k, "number of special colors")->required();

  CLI::App* cmd_encode = app.add_subcommand("encode", "colored forest -> code sequence");
  cmd_encode->add_option("--input", input_arg, "colored forest JSON (file or inline)")->required();
  cmd_encode->add_option("--partition", partition_arg, "partition JSON")->required();
  cmd_encode->add_option("-k,--k", k, "number of special colors")->required();

  CLI::App* cmd_decode = app.add_subcommand("decode", "code sequence -> colored forest");
  cmd_decode->add_option("--input", input_arg, "code sequence JSON (file or inline)")->required();
  cmd_decode->add_option("--partition", partition_arg, "partition JSON")->required();
  cmd_decode->add_option("--ell", ell, "number of trees in the forest")->required();

  CLI::App* cmd_verify = app.add_subcommand("verify", "run identity sweeps");
  cmd_verify->add_option("--max-total-vertices", max_total_vertices, "sweep bound (default 7)");
  cmd_verify->add_option("--max-degree", max_degree, "max vertex degree (default 4)");
  cmd_verify->add_option("--k-values", k_values_text, "comma list of k values (default 0,1,2)");
  cmd_verify->add_option("--max-n", max_n, "binary-tree identity bound (default 5)");
  cmd_verify->add_option("--checks", checks_text,
                         "comma list from: cpf,hookp,hookp2,ccf,propcf,cfs,psi,codes,postnikov,lascoux");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(cmd_enumerate)) {
      hf::DegreeSequence r = hf::DegreeSequence::parse(type_text);
      std::vector<hf::PlaneForest> forests = hf::enumerate_forests(r);
      hf::json out;
      out["r"] = hf::degree_sequence_to_json(r);
      out["count"] = std::to_string(forests.size());
      hf::json list = hf::json::array();
      for (const hf::PlaneForest& f : forests) list.push_back(hf::forest_to_json(f));
      out["forests"] = std::move(list);
      emit(out);
    } else if (app.got_subcommand(cmd_count)) {
      hf::DegreeSequence r = hf::DegreeSequence::parse(type_text);
      hf::json out;
      out["count"] = hf::int_to_string(hf::count_forests(r));
      emit(out);
    } else if (app.got_subcommand(cmd_hookpoly)) {
      hf::DegreeSequence r = hf::DegreeSequence::parse(type_text);
      hf::json out;
      if (mode == "both") {
        hf::HookReport report = form == 1 ? hf::verify_hookp(r) : hf::verify_hookp2(r);
        out = hf::hook_report_to_json(report);
      } else {
        out["r"] = hf::degree_sequence_to_json(r);
        if (mode == "brute") {
          out["brute"] = hf::polynomial_to_json(form == 1 ? hf::brute_hookp(r)
                                                          : hf::brute_hookp2(r));
        } else {
          out["closed"] = hf::polynomial_to_json(form == 1 ? hf::closed_hookp(r)
                                                           : hf::closed_hookp2(r));
        }
        out["count"] = hf::int_to_string(hf::count_forests(r));
      }
      emit(out);
    } else if (app.got_subcommand(cmd_colored)) {
      hf::DegreeSequence r = hf::DegreeSequence::parse(type_text);
      std::optional<hf::PartitionS> filter;
      if (!partition_arg.empty()) filter = hf::partition_from_json(read_json_arg(partition_arg));
      hf::json out;
      out["r"] = hf::degree_sequence_to_json(r);
      out["k"] = k;
      if (filter) out["partition"] = hf::partition_to_json(*filter);
      out["first_tree_min"] = first_tree_min;
      out["count"] = hf::int_to_string(hf::count_colored(r, k, filter, first_tree_min));
      emit(out);
    } else if (app.got_subcommand(cmd_psi)) {
      hf::PartitionS from = hf::partition_from_json(read_json_arg(from_arg));
      hf::PartitionS to = hf::partition_from_json(read_json_arg(to_arg));
      hf::ColoredLabelledForest forest = hf::colored_from_json(read_json_arg(input_arg), k);
      hf::PsiResult result = hf::psi(forest, from, to);
      hf::json out;
      out["case"] = hf::psi_case_name(result.applied);
      out["forest"] = hf::colored_to_json(result.forest);
      emit(out);
    } else if (app.got_subcommand(cmd_encode)) {
      hf::PartitionS s = hf::partition_from_json(read_json_arg(partition_arg));
      hf::ColoredLabelledForest forest = hf::colored_from_json(read_json_arg(input_arg), k);
      emit(hf::codes_to_json(hf::encode(forest, s)));
    } else if (app.got_subcommand(cmd_decode)) {
      hf::PartitionS s = hf::partition_from_json(read_json_arg(partition_arg));
      hf::CodeSequence codes = hf::codes_from_json(read_json_arg(input_arg));
      hf::ColoredLabelledForest forest = hf::decode(s, codes.k, ell, codes);
      emit(hf::colored_to_json(forest));
    } else if (app.got_subcommand(cmd_verify)) {
      hf::VerifySweepConfig config;
      config.max_total_vertices = max_total_vertices;
      config.max_degree = max_degree;
      config.max_n = max_n;
      config.k_values = parse_ll_list(k_values_text, "k value");
      if (!checks_text.empty()) config.checks = parse_string_list(checks_text);
      hf::VerifyReport report = hf::run_verify(config);
      emit(report.to_json());
      return report.ok() ? 0 : 1;
    }
  } catch (const hf::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
