#pragma once

// The eqav command line. run() takes the arguments after the program name
// and reports through the given streams, so tests can drive it in-process.
//
// Exit status: 0 verdict true / success, 1 verdict false, 2 usage or parse
// error, 3 deadline exceeded.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "eqav/avoidance.hpp"
#include "eqav/colored.hpp"
#include "eqav/decide.hpp"
#include "eqav/factor_graph.hpp"
#include "eqav/oracle.hpp"
#include "eqav/relation.hpp"

namespace eqav::cli {

inline constexpr int kTrue = 0;
inline constexpr int kFalse = 1;
inline constexpr int kUsage = 2;
inline constexpr int kDeadline = 3;

namespace detail {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Basis read_basis(const std::string& path, OrderKind order) {
  std::ifstream in(path);
  if (!in) throw UsageError(path + ": cannot open basis file");
  std::stringstream buf;
  buf << in.rdbuf();
  return minimize(parse_basis_text(buf.str(), path), order);
}

inline EqRel parse_arg(const std::string& text, const char* what) {
  try {
    return EqRel::parse(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string(what) + ": " + e.what() + " (token '" + e.token() + "')");
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
}

inline std::optional<std::chrono::milliseconds> deadline_of(long ms) {
  if (ms <= 0) return std::nullopt;
  return std::chrono::milliseconds(ms);
}

inline void print_witness(std::ostream& out, const Witness& w) {
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, AntichainPrefix>) {
          out << "antichain:\n";
          for (const auto& r : v.elements) out << "  " << r << "\n";
        } else if constexpr (std::is_same_v<T, JepFailure>) {
          out << "no joint extension" << (v.exhaustive ? "" : " up to length " + std::to_string(v.search_bound))
              << ": " << v.first << " " << v.second << "\n";
        } else if constexpr (std::is_same_v<T, JoinElement>) {
          out << "join: " << v.first << " " << v.second << " <= " << v.join << "\n";
        } else {
          out << "graph evidence (" << v.kind << "):";
          for (const auto& r : v.walk) out << " " << r;
          out << "\n";
        }
      },
      w);
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide well-quasi-order and atomicity of avoidance sets of equivalence relations"};
  app.require_subcommand(1);

  std::string order_text = "cons", property_text = "wqo", basis_path, dot_path;
  std::size_t witness_k = 10, length = 0, max_size = 12;
  long deadline_ms = 0;
  bool as_json = false, colored = false, show_witness = false;
  std::string small_text, big_text, a_text, b_text;

  auto* decide_cmd = app.add_subcommand("decide", "Decide wqo or atomicity");
  decide_cmd->add_option("--order", order_text, "cons or noncons")->required();
  decide_cmd->add_option("--property", property_text, "wqo or atomicity")->required();
  decide_cmd->add_option("--basis", basis_path, "Basis file")->required();
  auto* witness_opt = decide_cmd->add_option("--witness", witness_k, "Print a witness; antichain length K");
  decide_cmd->add_flag("--json", as_json, "Print the decision as JSON");
  decide_cmd->add_option("--deadline-ms", deadline_ms, "Give up witness searches after this many ms");

  auto* graph_cmd = app.add_subcommand("graph", "Write the factor graph in DOT");
  graph_cmd->add_option("--basis", basis_path, "Basis file")->required();
  graph_cmd->add_option("--dot", dot_path, "Output path ('-' for stdout)")->required();
  graph_cmd->add_flag("--colored", colored, "Write the coloured factor graph");

  auto* enum_cmd = app.add_subcommand("enumerate", "List members of a given length");
  enum_cmd->add_option("--basis", basis_path, "Basis file")->required();
  enum_cmd->add_option("--order", order_text, "cons or noncons")->required();
  enum_cmd->add_option("--length", length, "Length")->required();

  auto* embed_cmd = app.add_subcommand("check-embed", "Does SMALL embed in BIG?");
  embed_cmd->add_option("--order", order_text, "cons or noncons")->required();
  embed_cmd->add_option("small", small_text, "Relation")->required();
  embed_cmd->add_option("big", big_text, "Relation")->required();

  auto* witness_cmd = app.add_subcommand("witness", "Produce witnesses");
  witness_cmd->require_subcommand(1);
  auto* antichain_cmd = witness_cmd->add_subcommand("antichain", "Pairwise incomparable members (cons order)");
  antichain_cmd->add_option("--basis", basis_path, "Basis file")->required();
  antichain_cmd->add_option("-k", witness_k, "Number of relations")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference searches");
  oracle_cmd->require_subcommand(1);
  auto* jep_cmd = oracle_cmd->add_subcommand("jep", "Search for a joint extension of A and B");
  jep_cmd->add_option("--basis", basis_path, "Basis file")->required();
  jep_cmd->add_option("--order", order_text, "cons or noncons")->required();
  jep_cmd->add_option("--max-size", max_size, "Largest candidate length")->required();
  jep_cmd->add_option("--deadline-ms", deadline_ms, "Give up after this many ms");
  jep_cmd->add_option("a", a_text, "Relation")->required();
  jep_cmd->add_option("b", b_text, "Relation")->required();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kTrue;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*decide_cmd) {
      const OrderKind order = parse_order(order_text);
      const Property property = parse_property(property_text);
      const Basis basis = detail::read_basis(basis_path, order);
      show_witness = witness_opt->count() > 0;
      DecideOptions opts;
      opts.antichain_size = witness_k;
      opts.deadline = detail::deadline_of(deadline_ms);
      const Decision d = decide(basis, property, opts);
      if (as_json) {
        out << to_json(d).dump(2) << "\n";
      } else {
        out << to_string(property) << " (" << to_string(order) << "): " << (d.verdict ? "true" : "false")
            << "\n";
        if (show_witness && d.witness) detail::print_witness(out, *d.witness);
      }
      return d.verdict ? kTrue : kFalse;
    }
    if (*graph_cmd) {
      const Basis basis = detail::read_basis(basis_path, OrderKind::Consecutive);
      if (basis.empty()) throw detail::UsageError("the empty basis has no factor graph");
      const FactorGraph g = build(basis);
      const std::string dot = colored ? to_dot(build_colored(g)) : to_dot(g);
      if (dot_path == "-") {
        out << dot;
      } else {
        std::ofstream f(dot_path);
        if (!f) throw detail::UsageError(dot_path + ": cannot write");
        f << dot;
      }
      return kTrue;
    }
    if (*enum_cmd) {
      const Basis basis = detail::read_basis(basis_path, parse_order(order_text));
      for (const auto& r : enumerate(basis, length)) out << r << "\n";
      return kTrue;
    }
    if (*embed_cmd) {
      const OrderKind order = parse_order(order_text);
      const bool yes = embeds(detail::parse_arg(small_text, "SMALL"), detail::parse_arg(big_text, "BIG"), order);
      out << "embeds (" << to_string(order) << "): " << (yes ? "true" : "false") << "\n";
      return yes ? kTrue : kFalse;
    }
    if (*antichain_cmd) {
      const Basis basis = detail::read_basis(basis_path, OrderKind::Consecutive);
      std::vector<EqRel> rs;
      try {
        rs = antichain_prefix(basis, witness_k);
      } catch (const NotApplicable& e) {
        err << "no antichain: " << e.what() << "\n";
        return kFalse;
      }
      if (!verify_antichain(rs, OrderKind::Consecutive)) {
        err << "internal error: antichain failed verification\n";
        return kFalse;
      }
      for (const auto& r : rs) out << r << "\n";
      return kTrue;
    }
    if (*jep_cmd) {
      const OrderKind order = parse_order(order_text);
      const Basis basis = detail::read_basis(basis_path, order);
      const EqRel a = detail::parse_arg(a_text, "A"), b = detail::parse_arg(b_text, "B");
      for (const auto* r : {&a, &b}) {
        if (!avoids(*r, basis)) throw detail::UsageError(r->format() + " is not in the avoidance set");
      }
      const auto z = jep_search(a, b, basis, SearchBound{max_size, detail::deadline_of(deadline_ms)});
      if (z) {
        out << *z << "\n";
        return kTrue;
      }
      out << "none within bound " << max_size << "\n";
      return kFalse;
    }
  } catch (const DeadlineExceeded& e) {
    err << "deadline exceeded\n";
    return kDeadline;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const detail::UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace eqav::cli
