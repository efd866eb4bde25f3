#ifndef GRADEX_ANALYSIS_HPP
#define GRADEX_ANALYSIS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gradex/decide.hpp"

namespace gradex {

/// A grading to analyze, as read from a flat key/value config file:
///   group = Z            # grading group (position group in product mode)
///   n = 3
///   tuple = [0, -1, -2]  # degree tuple, g_1 = e
///   ring = Q             # Q | Z | F<p> | Q(i) | Q[x] | L(1,2) | L(1,2;F<p>)
///   coeff_grading = Z/2  # optional: grade the coefficients too, by the
///                        # ring's intrinsic group; the total group is then
///                        # coeff_grading x group
struct AnalyzeConfig {
  GroupSpec group;
  std::size_t n = 0;
  std::vector<GroupElement> tuple;
  RingSpec ring = RingSpec::rationals();
  std::optional<GroupSpec> coeff_grading;
  std::int64_t degree_bound = 3;  // truncation for polynomial coefficients

  bool product_mode() const;  // nontrivial coefficient grading requested
  GradingDescriptor descriptor() const;
};

AnalyzeConfig parse_config(std::istream& in, const std::string& name);
AnalyzeConfig parse_config_file(const std::string& path);

/// Everything the analyze pipeline derives from one config. Reports are
/// self-verifying: every yes/no verdict carries enough data for
/// verify_report to re-check it after a JSON round trip.
struct AnalysisReport {
  AnalyzeConfig config;
  std::vector<std::vector<GroupElement>> degree_table;  // total degree of e_{i,j}
  AxiomCheckReport axiom_check;
  Verdict epsilon_strong;

  // Populated only when the grading is very good (not product mode):
  std::optional<DegreeClasses> classes;
  std::vector<std::set<GroupElement>> row_degrees;
  std::vector<EpsilonData> epsilon_table;  // over the unit-degree support
  std::vector<Verdict> locally_strong;     // one per support degree
  std::optional<Verdict> strong;
  std::optional<Verdict> epsilon_crossed;
  std::optional<RankCertificate> rank;
  std::vector<WitnessPair> witnesses;  // when epsilon_crossed is yes

  const Verdict* verdict_for(Property p,
                             const std::optional<GroupElement>& subject = std::nullopt) const;
};

AnalysisReport run_analyze(const AnalyzeConfig& config);
AnalysisReport run_analyze_file(const std::string& path);

std::string report_to_json(const AnalysisReport& report);
AnalysisReport report_from_json(const std::string& json_text);
std::string report_to_text(const AnalysisReport& report);

std::string verdict_to_json(const Verdict& v, const GroupSpec& group, const RingSpec& ring);

/// Re-runs the certificate checks embedded in a report (typically one
/// reloaded from JSON). Returns the failed checks; empty means every
/// verdict is reproduced by its certificate.
std::vector<std::string> verify_report(const AnalysisReport& report);

struct CensusRow {
  std::vector<GroupElement> tuple;
  bool strong = false;
  bool epsilon_crossed = false;
  std::uint64_t rank_se = 0;
  std::uint64_t supp_size = 0;
};

struct CensusSummary {
  GroupSpec group;
  std::size_t n = 0;
  RingSpec ring = RingSpec::rationals();
  std::uint64_t total = 0;
  std::uint64_t strong_count = 0;
  std::uint64_t crossed_count = 0;
  std::uint64_t neither_count = 0;
  std::vector<CensusRow> rows;

  std::string to_csv() const;
};

/// Sweeps every degree tuple with g_1 = e over a finite group,
/// classifying each as strong / epsilon-crossed / neither. Rows come
/// back in lexicographic tuple order regardless of the worker count;
/// one in twenty positive verdicts is re-verified through the full
/// witness construction.
CensusSummary run_exhaustive(const GroupSpec& group, std::size_t n, const RingSpec& ring,
                             unsigned jobs = 1);

/// Builds the 3x3 matrix C = [[0,0,y1],[0,0,y2],[x1,x2,0]] over L(1,2),
/// squares it, and checks entrywise that C^2 = I and that C is
/// homogeneous of degree 1 for the Z/2 tuple (0,0,1): an invertible
/// homogeneous degree-1 element, so the grading is a crossed product
/// even though the degree classes have different sizes.
struct LeavittVerifyReport {
  GradedMatrix c;
  GradedMatrix c_squared;
  bool squared_is_identity = false;
  bool c_homogeneous_degree_one = false;
  bool squared_homogeneous_degree_zero = false;
  bool crossed_witness = false;

  bool all_ok() const {
    return squared_is_identity && c_homogeneous_degree_one &&
           squared_homogeneous_degree_zero && crossed_witness;
  }
  std::string to_text() const;
  std::string to_json() const;
};

LeavittVerifyReport run_leavitt_verify();

/// GRADEX_MAX_N environment cap on n (default 12).
std::size_t max_n_limit();

/// CLI contract: 0 = yes, 1 = no, 2 = unknown (errors exit above 2).
int verdict_exit_code(Answer a);

}  // namespace gradex

#endif
