#include "agkit/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>

#include "agkit/enumerator.hpp"
#include "agkit/identity.hpp"
#include "agkit/magma.hpp"
#include "agkit/table_test.hpp"
#include "agkit/theorem_lab.hpp"

namespace agkit {

namespace {

enum class Format { Text, Kv };

// Thrown for bad flag values found after CLI11 has parsed the grammar.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

PropertySet parse_ids(const std::vector<std::string>& names) {
  PropertySet out;
  for (const auto& n : names) {
    auto id = identity_from_name(n);
    if (!id) throw UsageError("unknown identity '" + n + "'");
    out.insert(*id);
  }
  return out;
}

std::string join_elements(const std::vector<Element>& xs) {
  std::string out;
  for (auto x : xs) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

std::string describe_witness(const Witness& w) {
  std::string out;
  for (auto [var, value] : w.assignment) {
    if (!out.empty()) out += ' ';
    out += std::string(1, var) + "=" + std::to_string(value);
  }
  return out + ": " + std::to_string(w.lhs_value) +
         " != " + std::to_string(w.rhs_value);
}

void add_format(CLI::App* cmd, Format& format) {
  cmd->add_option("--format", format, "Output format: text or kv")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"text", Format::Text},
                                        {"kv", Format::Kv}}));
}

int do_classify(const std::string& path, Format format, std::ostream& out) {
  const Magma m = read_magma_file(path);
  const PropertySet props = classify(m);
  const auto left_ids = find_left_identities(m);
  if (format == Format::Kv) {
    PropertySet fails;
    for (auto id : kAllIdentities) {
      if (!props.contains(id)) fails.insert(id);
    }
    out << "order=" << m.order() << '\n'
        << "ag=" << (props.contains(IdentityId::LeftInvertive) ? 1 : 0) << '\n'
        << "satisfies=" << props.to_string() << '\n'
        << "fails=" << fails.to_string() << '\n'
        << "left_identities=" << join_elements(left_ids) << '\n';
    return kExitOk;
  }
  out << "order: " << m.order() << '\n'
      << "AG-groupoid: "
      << (props.contains(IdentityId::LeftInvertive) ? "yes" : "no") << '\n'
      << "left identities: "
      << (left_ids.empty() ? "none" : join_elements(left_ids)) << '\n'
      << "satisfies:\n";
  for (auto id : props.ids()) {
    out << "  " << std::left << std::setw(21) << name(id)
        << equation(id).to_string() << '\n';
  }
  out << "fails:\n";
  for (auto id : kAllIdentities) {
    if (props.contains(id)) continue;
    out << "  " << std::left << std::setw(21) << name(id)
        << describe_witness(*witness_failure(m, id)) << '\n';
  }
  return kExitOk;
}

int do_test(bool lad, bool show_table, const std::string& expect,
            const std::string& path, Format format, std::ostream& out) {
  const Magma m = read_magma_file(path);
  const TestReport r = lad ? lad_test(m) : rad_test(m);
  const std::string label = lad ? "LAD" : "RAD";
  if (format == Format::Kv) {
    out << "test=" << (lad ? "lad" : "rad") << '\n'
        << "verdict=" << (r.verdict ? "yes" : "no") << '\n';
    if (r.first_disagreement) {
      const auto& d = *r.first_disagreement;
      out << "first_disagreement=" << int(d.x) << ',' << int(d.a) << ','
          << int(d.b) << '\n';
    }
  } else if (show_table) {
    out << render_report(r);
  } else {
    out << "verdict: " << (r.verdict ? "" : "not ") << label << '\n';
    if (r.first_disagreement) {
      const auto& d = *r.first_disagreement;
      out << "first disagreement: x=" << int(d.x) << " a=" << int(d.a)
          << " b=" << int(d.b) << '\n';
    }
  }
  if (!expect.empty() && r.verdict != (expect == "yes")) return kExitNegative;
  return kExitOk;
}

void print_census(const CensusReport& r, Format format, std::ostream& out) {
  if (format == Format::Kv) {
    out << "order=" << r.order << '\n' << "total_ag=" << r.total_ag << '\n';
    for (const auto& [name, count] : r.per_filter) {
      out << name << '=' << count << '\n';
    }
    return;
  }
  const std::vector<std::pair<std::string, std::uint64_t>> rows = {
      {"Total (AG-groupoids)", r.total_ag},
      {"Non associative RAD AG-groupoids", r.count("rad_na")},
      {"Non associative LAD AG-groupoids", r.count("lad_na")},
      {"Non associative AD AG-groupoids", r.count("ad_na")},
  };
  out << std::left << std::setw(34) << "Order" << r.order << '\n';
  for (const auto& [label, count] : rows) {
    out << std::left << std::setw(34) << label << count << '\n';
  }
}

void print_stats(const CensusReport& r, std::ostream& err) {
  err << "order " << r.order << ": " << r.generated_nodes << " nodes, "
      << std::fixed << std::setprecision(3) << r.wall_time.count() << " s\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"agkit: AG-groupoid classification, tests and census", "agkit"};
  app.require_subcommand(1);

  Format format = Format::Text;
  std::string file;
  bool stats = false;
  unsigned jobs = 1;
  bool allow_long_run = false;
  std::size_t order = 0;
  std::size_t max_order = 4;
  std::vector<std::string> require_names;
  std::vector<std::string> forbid_names;

  auto* classify_cmd =
      app.add_subcommand("classify", "List the identities a table satisfies");
  classify_cmd->add_option("file", file, "Cayley table file")->required();
  add_format(classify_cmd, format);

  bool lad = false;
  bool rad = false;
  bool show_table = false;
  std::string expect;
  auto* test_cmd =
      app.add_subcommand("test", "Extended-table LAD or RAD membership test");
  auto* lad_flag = test_cmd->add_flag("--lad", lad, "Test for LAD");
  auto* rad_flag = test_cmd->add_flag("--rad", rad, "Test for RAD");
  lad_flag->excludes(rad_flag);
  test_cmd->add_flag("--show-table", show_table, "Render the extended table");
  test_cmd->add_option("--expect", expect, "Expected verdict")
      ->check(CLI::IsMember({"yes", "no"}));
  test_cmd->add_option("file", file, "Cayley table file")->required();
  add_format(test_cmd, format);

  auto add_search_flags = [&](CLI::App* cmd) {
    cmd->add_option("--jobs", jobs, "Worker threads")
        ->check(CLI::Range(1u, 256u));
    cmd->add_flag("--allow-long-run", allow_long_run,
                  "Permit orders of 6 and above");
    cmd->add_flag("--stats", stats, "Report search statistics on stderr");
    add_format(cmd, format);
  };

  std::string emit_dir;
  auto* enumerate_cmd = app.add_subcommand(
      "enumerate", "List AG-groupoids of one order up to isomorphism");
  enumerate_cmd->add_option("--order", order, "Order")->required();
  enumerate_cmd->add_option("--require", require_names, "Required identities")
      ->delimiter(',');
  enumerate_cmd->add_option("--forbid", forbid_names, "Forbidden identities")
      ->delimiter(',');
  enumerate_cmd->add_option("--emit-tables", emit_dir,
                            "Write one table file per class into DIR");
  add_search_flags(enumerate_cmd);

  auto* census_cmd =
      app.add_subcommand("census", "Count AG-groupoid classes of one order");
  census_cmd->add_option("--order", order, "Order")->required();
  add_search_flags(census_cmd);

  auto* implications_cmd = app.add_subcommand(
      "implications", "Check the LAD/RAD/AD implications exhaustively");
  implications_cmd->add_option("--max-order", max_order, "Largest order");
  add_search_flags(implications_cmd);

  auto* counterexample_cmd = app.add_subcommand(
      "counterexample", "Find the first class with and without given identities");
  counterexample_cmd
      ->add_option("--require", require_names, "Required identities")
      ->delimiter(',')
      ->required();
  counterexample_cmd
      ->add_option("--forbid", forbid_names, "Forbidden identities")
      ->delimiter(',');
  counterexample_cmd->add_option("--max-order", max_order, "Largest order")
      ->required();
  add_search_flags(counterexample_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "agkit: " << e.what() << '\n';
    return kExitUsage;
  }

  const EnumerationOptions options{jobs, allow_long_run};
  try {
    if (classify_cmd->parsed()) return do_classify(file, format, out);

    if (test_cmd->parsed()) {
      if (!lad && !rad) throw UsageError("test needs --lad or --rad");
      return do_test(lad, show_table, expect, file, format, out);
    }

    if (census_cmd->parsed()) {
      const CensusReport r = census(order, options);
      print_census(r, format, out);
      if (stats) print_stats(r, err);
      return kExitOk;
    }

    if (enumerate_cmd->parsed()) {
      const PropertySet required =
          parse_ids(require_names) | PropertySet{IdentityId::LeftInvertive};
      const CensusFilter filter("matching", required, parse_ids(forbid_names));
      if (!emit_dir.empty()) std::filesystem::create_directories(emit_dir);
      const CensusReport r = enumerate_ag(
          order, filter,
          [&](const Magma& m) {
            out << (format == Format::Kv ? "table=" : "") << m.linear_string()
                << '\n';
            if (emit_dir.empty()) return;
            const auto path = std::filesystem::path(emit_dir) /
                              (m.linear_string() + ".tbl");
            std::ofstream f(path, std::ios::binary);
            f << render_magma(m);
            if (!f) throw std::runtime_error(path.string() + ": write failed");
          },
          options);
      if (format == Format::Kv) {
        out << "total_ag=" << r.total_ag << '\n'
            << "matching=" << r.count("matching") << '\n';
      } else {
        out << "total AG-groupoid classes: " << r.total_ag << '\n'
            << "matching classes: " << r.count("matching") << '\n';
      }
      if (stats) print_stats(r, err);
      return kExitOk;
    }

    if (implications_cmd->parsed()) {
      const auto reports =
          check_implications(paper_implications(), max_order, options);
      bool all_hold = true;
      for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        all_hold = all_hold && r.holds();
        if (format == Format::Kv) {
          out << "implication=" << r.implication.name
              << " max_order=" << r.max_order
              << " classes=" << r.classes_checked
              << " antecedent_classes=" << r.antecedent_classes
              << " verdict=" << (r.holds() ? "holds" : "counterexample");
          if (r.counterexample) {
            out << " counterexample=" << r.counterexample->linear_string();
          }
          out << '\n';
        } else {
          if (i > 0) out << '\n';
          out << render_implication_report(r);
        }
      }
      return all_hold ? kExitOk : kExitNegative;
    }

    if (counterexample_cmd->parsed()) {
      const auto found = find_counterexample(
          parse_ids(require_names), parse_ids(forbid_names), max_order, options);
      if (format == Format::Kv) {
        out << "found=" << (found ? 1 : 0) << '\n';
        if (found) out << "table=" << found->linear_string() << '\n';
      } else if (found) {
        out << render_magma(*found);
      } else {
        out << "none up to order " << max_order << '\n';
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "agkit: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "agkit: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OrderTooLarge& e) {
    err << "agkit: " << e.what() << " (pass --allow-long-run)\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "agkit: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace agkit
