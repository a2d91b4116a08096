#pragma once
// Serialized form of a classified A_q module and the four output formats.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "aq/parabolic.hpp"
#include "aq/rootsys.hpp"

namespace aq {

using RootList = std::vector<std::vector<int>>;

struct ClassRecord {
  int index = 0;  // 1-based position in canonical order
  int m = 0;
  RootList I;
  RootList F;
  int R_plus = 0;
  int R_minus = 0;
  bool is_discrete = false;
  bool is_holomorphic_ds = false;
  std::optional<std::vector<int>> blattner;
  std::vector<int> lowest_k_type;
  std::string Yq_name;
  std::vector<long> Yq_betti;
  std::vector<std::array<long, 3>> P_q;  // [p, q, coeff], ascending (p, q)
  std::vector<std::string> witness;      // "num/den"
  RootList Phi_q;
  RootList Gamma;

  bool operator==(const ClassRecord&) const = default;
};

ClassRecord make_record(const HermitianRootData& data, const ParabolicClass& cls, int index);

/// Every class of so(2, m) in canonical order.
std::vector<ClassRecord> build_records(const HermitianRootData& data);

std::string to_json(const HermitianRootData& data, const std::vector<ClassRecord>& records);
/// Throws std::invalid_argument on a malformed document or a schema mismatch.
std::vector<ClassRecord> records_from_json(const std::string& text);

std::string to_csv(const std::vector<ClassRecord>& records);
std::vector<ClassRecord> records_from_csv(const std::string& text);

std::string to_text(const HermitianRootData& data, const std::vector<ClassRecord>& records);

/// Columns: Delta(u cap p_-) / R_-, Phi_q, Delta(u cap p_+) / R_+, Gamma, Y_q, P_q(x,t).
/// Root sets are written through their extremal generators.
std::string to_latex(const HermitianRootData& data, const std::vector<ClassRecord>& records);

/// The fields a LaTeX table carries.
struct LatexRow {
  RootList I;
  RootList F;
  int R_minus = 0;
  int R_plus = 0;
  RootList Phi_q;
  RootList Gamma;
  std::string Yq_name;
  std::vector<std::array<long, 3>> P_q;

  bool operator==(const LatexRow&) const = default;
};

LatexRow latex_view(const ClassRecord& r);
std::vector<LatexRow> rows_from_latex(const std::string& text);

/// Root set from a command-line spec: comma-separated coefficient strings
/// ("110,101"), "all", or "none" / "" for the empty set.  Throws
/// std::invalid_argument for anything that is not a noncompact positive root.
IndexSet parse_root_set_spec(const HermitianRootData& data, const std::string& spec);

/// "\phi_1+2\phi_2", "-(\phi_1+\phi_2)" and back.
std::string latex_root(const std::vector<int>& coeffs);
std::vector<int> parse_latex_root(const std::string& text, int rank);

}  // namespace aq
