// aq: classify, verify and print Poincare polynomials of the A_q modules of SO_0(2, m).
//
// exit codes: 0 ok, 1 verification failure, 2 usage, 3 unrealizable (I, F)

#include <charconv>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "aq/classify.hpp"
#include "aq/cohomology.hpp"
#include "aq/parabolic.hpp"
#include "aq/records.hpp"
#include "aq/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kUnrealizable = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int run_classify(int m, const std::string& format) {
  const aq::HermitianRootData data(m);
  const auto records = aq::build_records(data);
  if (format == "json")
    std::cout << aq::to_json(data, records);
  else if (format == "csv")
    std::cout << aq::to_csv(records);
  else if (format == "latex")
    std::cout << aq::to_latex(data, records);
  else
    std::cout << aq::to_text(data, records);
  return kOk;
}

int run_verify(int m_max, const std::string& fault) {
  int radius = 0;
  try {
    radius = aq::grid_radius_from_env();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const aq::Enumerator enumerate = fault.empty() ? aq::Enumerator(aq::enumerate_classes) : aq::faulty_enumerator(fault);
  bool ok = true;
  for (const auto& rep : aq::verify_range(m_max, radius, enumerate)) {
    std::cout << rep.to_string();
    ok = ok && rep.ok();
  }
  std::cout << (ok ? "all checks passed" : "verification FAILED") << '\n';
  return ok ? kOk : kVerifyFailed;
}

int run_poincare(int m, std::optional<int> index, const std::string& ideal_spec, const std::string& filter_spec) {
  const aq::HermitianRootData data(m);
  aq::ParabolicClass cls;
  if (index) {
    const auto classes = aq::enumerate_classes(data);
    if (*index < 1 || static_cast<std::size_t>(*index) > classes.size())
      throw UsageError("--index must lie in 1.." + std::to_string(classes.size()));
    cls = classes[static_cast<std::size_t>(*index - 1)];
  } else {
    aq::IndexSet ideal, filter;
    try {
      ideal = aq::parse_root_set_spec(data, ideal_spec);
      filter = aq::parse_root_set_spec(data, filter_spec);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    std::optional<aq::CVector> witness;
    try {
      witness = aq::feasible_witness(aq::realizability_system(data, ideal, filter));
    } catch (const std::invalid_argument& e) {
      std::cerr << "unrealizable: " << e.what() << '\n';
      return kUnrealizable;
    }
    if (!witness) {
      std::cerr << "unrealizable: the sign system for (I, F) is infeasible, no lambda induces this pair\n";
      return kUnrealizable;
    }
    cls = {m, ideal, filter, *witness};
  }
  const auto poly = aq::poincare_two_var(data, cls);
  std::cout << "P_q(x,t) = " << poly.to_string() << '\n';
  std::cout << "P_q(t)   = " << aq::single_variable_string(poly.collapse()) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"A_q modules with nonzero (g,K)-cohomology for SO_0(2,m)"};
  app.require_subcommand(1);

  const CLI::Validator positive(
      [](const std::string& v) {
        long long n = 0;
        const auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
        const bool ok = ec == std::errc() && end == v.data() + v.size() && n >= 1;
        return ok ? std::string() : "must be a positive integer, got " + v;
      },
      "POSITIVE");

  int m = 0;
  std::string format = "text";
  auto* classify = app.add_subcommand("classify", "List every class for one m");
  classify->add_option("--m", m, "m >= 1")->required()->check(positive);
  classify->add_option("--format", format, "json, csv, latex or text")
      ->check(CLI::IsMember({"json", "csv", "latex", "text"}));

  int m_max = 0;
  std::string fault;
  auto* verify = app.add_subcommand("verify", "Check the classification for m = 1..m-max");
  verify->add_option("--m-max", m_max, "largest m")->required()->check(positive);
  verify->add_option("--inject-fault", fault, "negative control: filter-down-set")
      ->check(CLI::IsMember({"filter-down-set"}));

  int pm = 0;
  std::optional<int> index;
  std::string ideal_spec, filter_spec;
  auto* poincare = app.add_subcommand("poincare", "Two-variable Poincare polynomial of one class");
  poincare->add_option("--m", pm, "m >= 1")->required()->check(positive);
  auto* idx = poincare->add_option("--index", index, "1-based class index in canonical order");
  auto* iopt = poincare->add_option("--ideal", ideal_spec, "I as comma-separated coefficient strings, 'all' or 'none'");
  auto* fopt = poincare->add_option("--filter", filter_spec, "F in the same format");
  idx->excludes(iopt)->excludes(fopt);

  try {
    app.parse(argc, argv);
    if (poincare->parsed() && !index && !iopt->count() && !fopt->count())
      throw CLI::ValidationError("poincare", "give --index or --ideal/--filter");
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (classify->parsed()) return run_classify(m, format);
    if (verify->parsed()) return run_verify(m_max, fault);
    return run_poincare(pm, index, ideal_spec, filter_spec);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kVerifyFailed;
  }
}
