#include "findex/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "findex/families.hpp"
#include "findex/indices.hpp"
#include "findex/transforms.hpp"
#include "findex/verifier.hpp"

namespace findex {

namespace {

Graph read_graph(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-")
    return parse_edge_list(in);
  std::ifstream file(path);
  if (!file)
    raise(errc::bad_param, "cannot open '" + path + "'");
  return parse_edge_list(file);
}

subdivision_op parse_op(const std::string& s) {
  if (s == "s") return subdivision_op::S;
  if (s == "r") return subdivision_op::R;
  if (s == "q") return subdivision_op::Q;
  if (s == "t") return subdivision_op::T;
  raise(errc::bad_param, "unknown operation '" + s + "'");
}

std::vector<int> parse_id_list(const std::string& s) {
  std::vector<int> out;
  std::string item;
  std::istringstream ss(s);
  while (std::getline(ss, item, ',')) {
    if (item.empty())
      raise(errc::bad_param, "empty id in '" + s + "'");
    std::size_t pos = 0;
    int v;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      raise(errc::bad_param, "bad vertex id '" + item + "'");
    }
    if (pos != item.size())
      raise(errc::bad_param, "bad vertex id '" + item + "'");
    out.push_back(v);
  }
  if (out.empty())
    raise(errc::bad_param, "empty id list");
  return out;
}

void print_indices(const Graph& g, const std::string& which, std::ostream& out) {
  if (which == "all") {
    out << "n " << g.vertex_count() << "\n"
        << "m " << g.edge_count() << "\n"
        << "m1 " << first_zagreb(g) << "\n"
        << "m2 " << second_zagreb(g) << "\n"
        << "f " << f_index(g) << "\n"
        << "xi4 " << general_first_zagreb(g, 4) << "\n"
        << "rezm " << redefined_zagreb(g) << "\n";
    return;
  }
  if (which == "f") {
    out << f_index(g) << "\n";
  } else if (which == "m1") {
    out << first_zagreb(g) << "\n";
  } else if (which == "m2") {
    out << second_zagreb(g) << "\n";
  } else if (which == "rezm") {
    out << redefined_zagreb(g) << "\n";
  } else if (which.rfind("xi:", 0) == 0) {
    int a;
    try {
      std::size_t pos = 0;
      a = std::stoi(which.substr(3), &pos);
      if (pos != which.size() - 3)
        throw std::invalid_argument(which);
    } catch (const std::exception&) {
      raise(errc::bad_param, "bad exponent in '" + which + "'");
    }
    out << general_first_zagreb(g, a) << "\n";
  } else {
    raise(errc::bad_param, "unknown index '" + which + "' (expected f|m1|m2|xi:A|rezm|all)");
  }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact degree-based graph indices, subdivision operations, "
               "hierarchical products, F-sums and closed-form verification"};
  app.require_subcommand(1);

  // compute
  auto* compute = app.add_subcommand("compute", "compute indices of a graph");
  std::string compute_in = "-";
  std::string compute_index = "all";
  compute->add_option("--in", compute_in, "edge-list file, or - for stdin");
  compute->add_option("--index", compute_index, "f|m1|m2|xi:A|rezm|all");

  // transform
  auto* transform = app.add_subcommand("transform", "apply S, R, Q, T or the line graph");
  std::string transform_in = "-";
  std::string transform_op;
  transform->add_option("--in", transform_in, "edge-list file, or - for stdin");
  transform->add_option("--op", transform_op, "s|r|q|t|line")->required();

  // fsum
  auto* fsum_cmd = app.add_subcommand("fsum", "F-sum of two graphs");
  fsum_cmd->set_help_flag("--help", "print help"); // frees --h for the right factor
  std::string fsum_g, fsum_h, fsum_op;
  bool fsum_allow_disconnected = false;
  fsum_cmd->add_option("--g", fsum_g, "left factor edge-list file, or - for stdin")->required();
  fsum_cmd->add_option("--h", fsum_h, "right factor edge-list file, or - for stdin")->required();
  fsum_cmd->add_option("--op", fsum_op, "s|r|q|t")->required();
  fsum_cmd->add_flag("--allow-disconnected", fsum_allow_disconnected,
                     "skip the connectivity hypothesis check");

  // hier
  auto* hier = app.add_subcommand("hier", "generalized hierarchical product");
  hier->set_help_flag("--help", "print help");
  std::string hier_g, hier_h, hier_u;
  bool hier_allow_disconnected = false;
  hier->add_option("--g", hier_g, "left factor edge-list file, or - for stdin")->required();
  hier->add_option("--h", hier_h, "right factor edge-list file, or - for stdin")->required();
  hier->add_option("--u", hier_u, "comma-separated vertex ids of U")->required();
  hier->add_flag("--allow-disconnected", hier_allow_disconnected,
                 "skip the connectivity hypothesis check");

  // family
  auto* family = app.add_subcommand("family", "generate a named graph family");
  std::string family_name_opt;
  int family_n = 0, family_m = 0;
  family->add_option("--name", family_name_opt,
                     "path|cycle|complete|star|complete_bipartite|nanotube_TUHC6|hexagonal_chain")
      ->required();
  family->add_option("--n", family_n, "primary parameter")->required();
  family->add_option("--m", family_m, "second parameter (complete_bipartite)");

  // verify
  auto* verify = app.add_subcommand("verify", "run the closed-form verification suite");
  suite_config cfg;
  std::string report_path;
  verify->add_option("--max-order", cfg.max_order, "largest random factor order");
  verify->add_option("--cases", cfg.cases_per_formula, "random cases per formula");
  verify->add_option("--seed", cfg.seed, "master seed");
  verify->add_option("--report", report_path, "write machine-readable JSONL report here");
  bool verify_allow_disconnected = false;
  verify->add_flag("--allow-disconnected", verify_allow_disconnected,
                   "draw random instances without the connectivity hypothesis");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) { // --help and friends
      app.exit(e, out, err);
      return 0;
    }
    app.exit(e, out, err);
    return 1;
  }

  try {
    if (*compute) {
      print_indices(read_graph(compute_in, in), compute_index, out);
    } else if (*transform) {
      const Graph g = read_graph(transform_in, in);
      if (transform_op == "line")
        serialize_edge_list(line_graph(g), out);
      else
        serialize_edge_list(apply_subdivision_op(g, parse_op(transform_op)).graph, out);
    } else if (*fsum_cmd) {
      if (fsum_g == "-" && fsum_h == "-")
        raise(errc::bad_param, "only one of --g/--h can read stdin");
      const Graph g = read_graph(fsum_g, in);
      const Graph h = read_graph(fsum_h, in);
      serialize_edge_list(f_sum(g, h, parse_op(fsum_op), fsum_allow_disconnected), out);
    } else if (*hier) {
      if (hier_g == "-" && hier_h == "-")
        raise(errc::bad_param, "only one of --g/--h can read stdin");
      const Graph g = read_graph(hier_g, in);
      const Graph h = read_graph(hier_h, in);
      const auto u = parse_id_list(hier_u);
      serialize_edge_list(hierarchical_product(g, u, h, hier_allow_disconnected), out);
    } else if (*family) {
      const auto kind = family_from_name(family_name_opt);
      if (!kind)
        raise(errc::bad_param, "unknown family '" + family_name_opt + "'");
      serialize_edge_list(build_family({*kind, family_n, family_m}), out);
    } else if (*verify) {
      cfg.enforce_connected = !verify_allow_disconnected;
      const auto reports = run_suite(cfg);
      write_text_report(reports, out);
      if (!report_path.empty()) {
        std::ofstream file(report_path);
        if (!file)
          raise(errc::bad_param, "cannot open '" + report_path + "' for writing");
        write_jsonl_report(reports, file);
      }
      return suite_ok(reports) ? 0 : 2;
    }
  } catch (const error& e) {
    err << "error[" << errc_name(e.code()) << "]: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

} // namespace findex
