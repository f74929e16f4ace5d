#pragma once

#include "bisp/involution.hpp"
#include "bisp/series.hpp"
#include "bisp/stabilizer.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bisp {

/// Malformed or invalid problem input.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ProblemSpec {
  int r = 2;
  std::vector<Rational> a;
  std::vector<Cusp> cusps;
  int degree_bound = 0;       ///< defaults to 2n+2
  int series_truncation = 0;  ///< defaults to rn+10
  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

/// Parses one JSON problem document:
///   {"r": 2, "a": [], "cusps": [{"lambda": "0", "gamma": "1"}],
///    "degree_bound": 4, "series_truncation": 12}
/// Rationals are "p/q" strings (integers are accepted too). Throws InputError.
ProblemSpec parse_problem(const std::string& text);

/// Parses either one problem or a JSON array of problems.
std::vector<ProblemSpec> parse_problems(const std::string& text);

AiryVacuum vacuum_of(const ProblemSpec& spec);
CuspDivisor divisor_of(const ProblemSpec& spec);

enum class Mode { construct, ring, involute, verify_all };

std::string to_string(Mode m);
/// Throws InputError for an unknown name.
Mode mode_from_string(const std::string& s);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string residual;
  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct StageError {
  std::string stage;
  std::string message;
  friend bool operator==(const StageError&, const StageError&) = default;
};

struct ConstructSection {
  DiffOp kbar;
  DiffOp flat_kbar;
  Poly tau;
  Poly q;
  int sign = 1;
  Rational scale{1};
  friend bool operator==(const ConstructSection&, const ConstructSection&) = default;
};

struct RingSection {
  StabilizerBasis stabilizer;
  std::vector<RingGenerator> generators;
  std::vector<CommutatorCheck> commutators;
  int rank = 0;
  friend bool operator==(const RingSection&, const RingSection&) = default;
};

struct InvolutionSection {
  std::string status;
  std::vector<Cusp> target;
  Poly tau_beta;
  friend bool operator==(const InvolutionSection&, const InvolutionSection&) = default;
};

struct RunReport {
  ProblemSpec spec;
  Mode mode = Mode::construct;
  std::optional<ConstructSection> construct;
  std::optional<RingSection> ring;
  std::optional<InvolutionSection> involution;
  std::vector<CheckResult> checks;
  std::vector<StageError> errors;
  bool all_pass() const;
  friend bool operator==(const RunReport&, const RunReport&) = default;
};

/// Runs the stages selected by `mode`. A failing stage is recorded in
/// `errors`; stages that do not depend on it still run.
RunReport run_pipeline(const ProblemSpec& spec, Mode mode);

enum class Format { text, json };

/// Throws InputError for an unknown name.
Format format_from_string(const std::string& s);

/// Text prints operators in descending powers of D; json is loss-free and
/// byte-for-byte deterministic.
std::string emit_report(const RunReport& report, Format format);
std::string emit_reports(const std::vector<RunReport>& reports, Format format);

/// Inverse of emit_report(..., Format::json). Throws InputError.
RunReport report_from_json(const std::string& text);

}  // namespace bisp
