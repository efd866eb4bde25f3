// gradex: analyze group gradings on matrix rings M_n(R), with verdict
// certificates. Exit codes follow the verdict: 0 = yes, 1 = no,
// 2 = unknown; anything above 2 is an error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gradex/analysis.hpp"

namespace {

struct PropertySelection {
  gradex::Property property;
  std::optional<gradex::GroupElement> subject;
};

PropertySelection parse_property(const std::string& text, const gradex::GroupSpec& group) {
  if (text.rfind("locally-strong:", 0) == 0)
    return {gradex::Property::locally_strong,
            group.parse_element(text.substr(std::string("locally-strong:").size()))};
  if (text == "strong") return {gradex::Property::strong, std::nullopt};
  if (text == "epsilon-strong") return {gradex::Property::epsilon_strong, std::nullopt};
  if (text == "epsilon-crossed") return {gradex::Property::epsilon_crossed, std::nullopt};
  throw gradex::parse_error(
      "unknown property '" + text +
      "' (expected strong, epsilon-strong, epsilon-crossed or locally-strong:<g>)");
}

void write_output(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw gradex::error("cannot write to " + out_path);
  out << content;
}

int run_analyze_command(const std::string& config_path, const std::string& property_text,
                        const std::string& format, const std::string& out_path) {
  gradex::AnalysisReport report = gradex::run_analyze_file(config_path);
  write_output(format == "json" ? gradex::report_to_json(report) + "\n"
                                : gradex::report_to_text(report),
               out_path);

  std::string selected = property_text;
  if (selected.empty())
    selected = report.config.product_mode() ? "epsilon-strong" : "epsilon-crossed";
  PropertySelection sel = parse_property(selected, report.config.group);

  const gradex::Verdict* verdict = report.verdict_for(sel.property, sel.subject);
  gradex::Verdict fresh;
  if (verdict == nullptr && sel.property == gradex::Property::locally_strong &&
      !report.config.product_mode()) {
    // Degrees outside the unit-degree support are legal queries.
    gradex::VeryGoodGrading vg(report.config.group, report.config.tuple);
    fresh = gradex::is_locally_strong(vg, *sel.subject);
    verdict = &fresh;
  }
  if (verdict == nullptr)
    throw gradex::unsupported_operation("property '" + selected +
                                        "' is not decided for product gradings");
  return gradex::verdict_exit_code(verdict->answer);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"group gradings on matrix rings: epsilon idempotents, strongness "
               "and crossed-product certificates"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "analyze a grading config file");
  std::string config_path, property_text, out_path;
  std::string format = "text";
  analyze->add_option("config", config_path, "grading config file")->required();
  analyze->add_option("--property", property_text,
                      "verdict selecting the exit code: strong | epsilon-strong | "
                      "epsilon-crossed | locally-strong:<g> (default: epsilon-crossed, or "
                      "epsilon-strong for product gradings)");
  analyze->add_option("--format", format, "report format: text | json")
      ->check(CLI::IsMember({"text", "json"}));
  analyze->add_option("--out", out_path, "write the report to a file instead of stdout");

  auto* exhaustive = app.add_subcommand("exhaustive", "census of all degree tuples");
  std::string group_text, ring_text = "Q", csv_path;
  std::size_t census_n = 0, census_max_n = 6;
  unsigned jobs = 1;
  exhaustive->add_option("--group", group_text, "finite grading group, e.g. Z/3")->required();
  exhaustive->add_option("--n", census_n, "matrix size")->required();
  exhaustive->add_option("--ring", ring_text, "coefficient ring (default Q)");
  exhaustive->add_option("--jobs", jobs, "worker threads (0 = all cores)");
  exhaustive->add_option("--max-n", census_max_n, "raise the census size bound (default 6)");
  exhaustive->add_option("--out", csv_path, "write the CSV to a file instead of stdout");

  auto* leavitt = app.add_subcommand("leavitt-verify",
                                     "verify the invertible degree-1 matrix over L(1,2)");
  std::string leavitt_format = "text";
  leavitt->add_option("--format", leavitt_format, "report format: text | json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed())
      return run_analyze_command(config_path, property_text, format, out_path);

    if (exhaustive->parsed()) {
      if (census_n > census_max_n)
        throw gradex::domain_error("census n = " + std::to_string(census_n) +
                                   " exceeds the bound " + std::to_string(census_max_n) +
                                   " (raise with --max-n)");
      gradex::CensusSummary summary = gradex::run_exhaustive(
          gradex::GroupSpec::parse(group_text), census_n, gradex::RingSpec::parse(ring_text),
          jobs);
      std::ostream& info = csv_path.empty() ? std::cerr : std::cout;
      info << "census over " << summary.group.format() << ", n = " << summary.n << ", ring "
           << summary.ring.format() << ": " << summary.total << " tuples, "
           << summary.strong_count << " strong, " << summary.crossed_count
           << " epsilon-crossed, " << summary.neither_count << " neither\n";
      write_output(summary.to_csv(), csv_path);
      return 0;
    }

    gradex::LeavittVerifyReport report = gradex::run_leavitt_verify();
    std::cout << (leavitt_format == "json" ? report.to_json() + "\n" : report.to_text());
    return report.all_ok() ? 0 : 3;
  } catch (const gradex::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
