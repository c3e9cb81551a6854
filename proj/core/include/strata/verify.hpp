#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "strata/taut_class.hpp"

namespace strata {

enum class Status { EqualDefinitive, NumericallyEquivalent, Distinct, Skipped };

std::string status_name(Status s);

struct Witness {
  std::string generator;  // canonical key of the complementary stratum
  Rational lhs, rhs;
};

struct Verdict {
  Status status = Status::Skipped;
  std::optional<Witness> witness;  // always set for Distinct
  double seconds = 0;
  std::size_t generators = 0;      // pairings evaluated

  bool equal() const { return status == Status::EqualDefinitive || status == Status::NumericallyEquivalent; }
};

// Pairs A - B against every complementary generator, one degree at a time, in
// key order; stops at the first nonzero pairing. Genus 0 verdicts are
// definitive, all others numerical.
Verdict numerical_equal(const TautClass& a, const TautClass& b, int jobs = 1);

// The weaker check against compact-type generators only, both sides first
// restricted to compact type.
Verdict numerical_equal_ct(const TautClass& a, const TautClass& b, int jobs = 1);

// Pairings of x against the given generators with early exit: returns the
// index of the first nonzero one, or keys.size().
std::size_t first_nonzero_pairing(const TautClass& x, const std::vector<std::string>& keys, int jobs,
                                  Rational* value = nullptr);

// One line per identity: "V <suite>/<id> PASS|FAIL t=<sec> [witness=...]".
struct ReportLine {
  std::string suite, id;
  bool pass = false;
  double seconds = 0;
  std::string detail;  // witness or note, may be empty
  std::string format() const;
};

struct Report {
  std::vector<ReportLine> lines;
  bool ok() const;
  // Machine-readable summary: "<suite>/<id> PASS|FAIL" per line, then a total.
  std::string summary() const;
};

struct SuiteOptions {
  int max_n = 4;
  int jobs = 1;
  bool experimental_tilde = false;
  // Called after each line is produced, for progress output.
  std::function<void(const ReportLine&)> on_line;
};

Report suite_trees(const SuiteOptions& opt);
Report suite_pixton(const SuiteOptions& opt);
Report suite_hyp(const SuiteOptions& opt);
Report suite_nct(const SuiteOptions& opt);
Report run_suite(const std::string& name, const SuiteOptions& opt);  // trees|pixton|hyp|nct|all

}  // namespace strata
