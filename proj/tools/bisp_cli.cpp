#include "bisp/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <sstream>
#include <utility>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw bisp::InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bispectral Darboux transformations of generalized Airy operators"};
  app.require_subcommand(1);
  std::string input;
  std::optional<int> degree_bound, series_truncation;
  std::string format = "text";
  unsigned jobs = 1;

  const std::pair<const char*, const char*> modes[] = {
      {"construct", "build Kbar, flat Kbar, tau and q"},
      {"ring", "construct, then the stabilizer and its commuting operators"},
      {"involute", "construct, then the image divisor and its identities"},
      {"verify-all", "every stage plus the series oracle, true rank and symmetry checks"},
  };
  for (const auto& [name, about] : modes) {
    auto* sub = app.add_subcommand(name, about);
    sub->add_option("input", input, "problem file (JSON object or array); standard input when omitted or -");
    sub->add_option("--degree-bound", degree_bound, "stabilizer degree bound (default 2n+2)");
    sub->add_option("--series-truncation", series_truncation, "series oracle truncation (default rn+10)");
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--jobs", jobs, "problems processed in parallel in batch mode")->check(CLI::PositiveNumber);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }
  const auto* sub = app.get_subcommands().front();

  std::vector<bisp::ProblemSpec> specs;
  bisp::Mode mode{};
  bisp::Format fmt{};
  bool batch = false;
  try {
    mode = bisp::mode_from_string(sub->get_name());
    fmt = bisp::format_from_string(format);
    const std::string text = read_input(input);
    specs = bisp::parse_problems(text);
    batch = !text.empty() && text.find_first_not_of(" \t\r\n") != std::string::npos &&
            text[text.find_first_not_of(" \t\r\n")] == '[';
    for (auto& s : specs) {
      if (degree_bound) {
        if (*degree_bound < 0) throw bisp::InputError("--degree-bound must be non-negative");
        s.degree_bound = *degree_bound;
      }
      if (series_truncation) {
        const int min = s.r * static_cast<int>(s.cusps.size()) + 2;
        if (*series_truncation < min) throw bisp::InputError("--series-truncation must be at least rn+2 = " + std::to_string(min));
        s.series_truncation = *series_truncation;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }

  std::vector<bisp::RunReport> reports(specs.size());
  for (std::size_t start = 0; start < specs.size(); start += jobs) {
    std::vector<std::future<bisp::RunReport>> work;
    for (std::size_t i = start; i < specs.size() && i < start + jobs; ++i)
      work.push_back(std::async(std::launch::async, bisp::run_pipeline, std::cref(specs[i]), mode));
    for (std::size_t i = 0; i < work.size(); ++i) reports[start + i] = work[i].get();
  }

  std::cout << (batch ? bisp::emit_reports(reports, fmt) : bisp::emit_report(reports.front(), fmt));
  for (const auto& r : reports)
    if (!r.all_pass()) return kExitFailure;
  return kExitPass;
}
