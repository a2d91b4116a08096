#include "aq/records.hpp"

#include <algorithm>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "aq/classify.hpp"
#include "aq/cohomology.hpp"
#include "json.hpp"

namespace aq {

namespace {

using nlohmann::json;

constexpr const char* kSchema = "aq-classifier/1";
constexpr const char* kTimes = "\xC3\x97";

const std::vector<std::string> kFields = {"index",     "m",          "I",       "F",      "R_plus",
                                          "R_minus",   "is_discrete", "is_holomorphic_ds", "blattner",
                                          "lowest_k_type", "Yq_name", "Yq_betti", "P_q",   "witness",
                                          "Phi_q",     "Gamma"};

RootList roots_of(const HermitianRootData& data, const IndexSet& s) {
  RootList out;
  for (auto i : s) out.push_back(data.noncompact(i).coeffs);
  return out;
}

RootList coeffs_of(const std::vector<RootCoord>& roots) {
  RootList out;
  for (const auto& r : roots) out.push_back(r.coeffs);
  return out;
}

json record_to_json(const ClassRecord& r) {
  json j;
  j["index"] = r.index;
  j["m"] = r.m;
  j["I"] = r.I;
  j["F"] = r.F;
  j["R_plus"] = r.R_plus;
  j["R_minus"] = r.R_minus;
  j["is_discrete"] = r.is_discrete;
  j["is_holomorphic_ds"] = r.is_holomorphic_ds;
  j["blattner"] = r.blattner ? json(*r.blattner) : json(nullptr);
  j["lowest_k_type"] = r.lowest_k_type;
  j["Yq_name"] = r.Yq_name;
  j["Yq_betti"] = r.Yq_betti;
  j["P_q"] = r.P_q;
  j["witness"] = r.witness;
  j["Phi_q"] = r.Phi_q;
  j["Gamma"] = r.Gamma;
  return j;
}

ClassRecord record_from_json(const json& j) {
  ClassRecord r;
  j.at("index").get_to(r.index);
  j.at("m").get_to(r.m);
  j.at("I").get_to(r.I);
  j.at("F").get_to(r.F);
  j.at("R_plus").get_to(r.R_plus);
  j.at("R_minus").get_to(r.R_minus);
  j.at("is_discrete").get_to(r.is_discrete);
  j.at("is_holomorphic_ds").get_to(r.is_holomorphic_ds);
  if (!j.at("blattner").is_null()) r.blattner = j.at("blattner").get<std::vector<int>>();
  j.at("lowest_k_type").get_to(r.lowest_k_type);
  j.at("Yq_name").get_to(r.Yq_name);
  j.at("Yq_betti").get_to(r.Yq_betti);
  j.at("P_q").get_to(r.P_q);
  j.at("witness").get_to(r.witness);
  j.at("Phi_q").get_to(r.Phi_q);
  j.at("Gamma").get_to(r.Gamma);
  return r;
}

std::string csv_quote(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char ch : cell) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

std::vector<std::vector<std::string>> csv_parse(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string cell;
  bool quoted = false, any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (quoted) {
      if (ch == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        cell += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cell += ch;
      }
      continue;
    }
    if (ch == '"') {
      quoted = true;
      any = true;
    } else if (ch == ',') {
      row.push_back(std::move(cell));
      cell.clear();
      any = true;
    } else if (ch == '\n') {
      if (any || !cell.empty()) {
        row.push_back(std::move(cell));
        rows.push_back(std::move(row));
      }
      row.clear();
      cell.clear();
      any = false;
    } else if (ch != '\r') {
      cell += ch;
      any = true;
    }
  }
  if (quoted) throw std::invalid_argument("csv: unterminated quote");
  if (any || !cell.empty()) {
    row.push_back(std::move(cell));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size())
    s.replace(pos, from.size(), to);
  return s;
}

std::vector<std::string> split(const std::string& s, const std::string& sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + sep.size();
  }
  return out;
}

std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::string strip_math(const std::string& cell) {
  auto s = strip(cell);
  if (s.size() < 2 || s.front() != '$' || s.back() != '$') throw std::invalid_argument("latex: expected $...$: " + s);
  return s.substr(1, s.size() - 2);
}

std::string latex_name(const std::string& name) {
  if (name == singleton_name()) return "\\mathrm{pt}";
  return replace_all(name, kTimes, "\\times ");
}

std::string name_from_latex(const std::string& s) {
  if (s == "\\mathrm{pt}") return singleton_name();
  return replace_all(s, "\\times ", kTimes);
}

std::string latex_poly(const std::vector<std::array<long, 3>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [p, q, c] : terms) {
    if (!out.empty()) out += " + ";
    std::string body;
    if (p == 1) body += "x";
    if (p > 1) body += "x^{" + std::to_string(p) + "}";
    if (q == 1) body += "t";
    if (q > 1) body += "t^{" + std::to_string(q) + "}";
    if (c != 1 || body.empty()) out += std::to_string(c);
    out += body;
  }
  return out;
}

std::vector<std::array<long, 3>> poly_from_latex(const std::string& s) {
  static const std::regex term(R"(^(\d+)?(x(\^\{(\d+)\})?)?(t(\^\{(\d+)\})?)?$)");
  std::vector<std::array<long, 3>> out;
  if (s == "0") return out;
  for (const auto& raw : split(s, " + ")) {
    std::smatch mt;
    const auto t = strip(raw);
    if (t.empty() || !std::regex_match(t, mt, term)) throw std::invalid_argument("latex: bad monomial " + t);
    const long c = mt[1].matched ? std::stol(mt[1]) : 1;
    const long p = mt[2].matched ? (mt[4].matched ? std::stol(mt[4]) : 1) : 0;
    const long q = mt[5].matched ? (mt[7].matched ? std::stol(mt[7]) : 1) : 0;
    out.push_back({p, q, c});
  }
  return out;
}

std::string latex_set(const RootList& roots) {
  if (roots.empty()) return "\\emptyset";
  std::string out = "\\{";
  for (std::size_t i = 0; i < roots.size(); ++i) out += (i ? ", " : "") + latex_root(roots[i]);
  return out + "\\}";
}

RootList set_from_latex(const std::string& s, int rank) {
  if (s == "\\emptyset") return {};
  if (s.rfind("\\{", 0) != 0 || s.size() < 4 || s.substr(s.size() - 2) != "\\}")
    throw std::invalid_argument("latex: bad root set " + s);
  RootList out;
  for (const auto& part : split(s.substr(2, s.size() - 4), ", ")) out.push_back(parse_latex_root(strip(part), rank));
  return out;
}

// generators of a down-set (maximal elements) or up-set (minimal elements)
IndexSet extremal(const FinitePoset& poset, const IndexSet& s, bool maximal) {
  IndexSet out;
  for (auto a : s) {
    bool extreme = true;
    for (auto b : s)
      if (a != b && (maximal ? poset.leq(a, b) : poset.leq(b, a))) extreme = false;
    if (extreme) out.push_back(a);
  }
  return out;
}

IndexSet indices_of(const HermitianRootData& data, const RootList& roots) {
  IndexSet out;
  for (const auto& r : roots) {
    auto i = data.noncompact_index(RootCoord{r});
    if (!i) throw std::invalid_argument("not a noncompact positive root: " + to_string(RootCoord{r}));
    out.push_back(*i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string text_roots(const RootList& roots) {
  std::string out = "{";
  for (std::size_t i = 0; i < roots.size(); ++i) out += (i ? " " : "") + to_string(RootCoord{roots[i]});
  return out + "}";
}

}  // namespace

ClassRecord make_record(const HermitianRootData& data, const ParabolicClass& cls, int index) {
  const auto rep = make_report(data, cls);
  const auto y = betti_Yq(data, cls);
  const auto poly = poincare_two_var(data, cls);
  const auto phi = phi_q_and_gamma(data, cls);

  ClassRecord r;
  r.index = index;
  r.m = data.m();
  r.I = roots_of(data, cls.ideal);
  r.F = roots_of(data, cls.filter);
  r.R_plus = rep.r_plus;
  r.R_minus = rep.r_minus;
  r.is_discrete = rep.is_discrete;
  r.is_holomorphic_ds = rep.is_holomorphic_ds;
  r.blattner = rep.blattner;
  r.lowest_k_type = rep.lowest_k_type;
  r.Yq_name = y.name;
  r.Yq_betti = y.betti;
  for (const auto& [e, c] : poly.terms()) r.P_q.push_back({e.first, e.second, c});
  for (const auto& c : cls.witness) r.witness.push_back(to_fraction_string(c));
  r.Phi_q = coeffs_of(phi.simple);
  r.Gamma = coeffs_of(phi.gamma);
  return r;
}

std::vector<ClassRecord> build_records(const HermitianRootData& data) {
  std::vector<ClassRecord> out;
  int index = 0;
  for (const auto& cls : enumerate_classes(data)) out.push_back(make_record(data, cls, ++index));
  return out;
}

std::string to_json(const HermitianRootData& data, const std::vector<ClassRecord>& records) {
  json doc;
  doc["schema"] = kSchema;
  doc["m"] = data.m();
  doc["family"] = to_string(data.family());
  doc["rank"] = data.rank();
  doc["classes"] = json::array();
  for (const auto& r : records) doc["classes"].push_back(record_to_json(r));
  return doc.dump(2) + "\n";
}

std::vector<ClassRecord> records_from_json(const std::string& text) {
  try {
    const auto doc = json::parse(text);
    if (doc.at("schema") != kSchema) throw std::invalid_argument("unsupported schema");
    std::vector<ClassRecord> out;
    for (const auto& j : doc.at("classes")) out.push_back(record_from_json(j));
    return out;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("json: ") + e.what());
  }
}

std::string to_csv(const std::vector<ClassRecord>& records) {
  std::ostringstream out;
  for (std::size_t k = 0; k < kFields.size(); ++k) out << (k ? "," : "") << kFields[k];
  out << '\n';
  for (const auto& r : records) {
    const auto j = record_to_json(r);
    for (std::size_t k = 0; k < kFields.size(); ++k) {
      const auto& v = j.at(kFields[k]);
      out << (k ? "," : "") << csv_quote(v.is_string() ? v.get<std::string>() : v.dump());
    }
    out << '\n';
  }
  return out.str();
}

std::vector<ClassRecord> records_from_csv(const std::string& text) {
  const auto rows = csv_parse(text);
  if (rows.empty() || rows.front() != kFields) throw std::invalid_argument("csv: unexpected header");
  std::vector<ClassRecord> out;
  try {
    for (std::size_t i = 1; i < rows.size(); ++i) {
      if (rows[i].size() != kFields.size()) throw std::invalid_argument("csv: wrong number of cells");
      json j;
      for (std::size_t k = 0; k < kFields.size(); ++k)
        j[kFields[k]] = kFields[k] == "Yq_name" ? json(rows[i][k]) : json::parse(rows[i][k]);
      out.push_back(record_from_json(j));
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("csv: ") + e.what());
  }
  return out;
}

std::string to_text(const HermitianRootData& data, const std::vector<ClassRecord>& records) {
  std::ostringstream out;
  out << "so(2," << data.m() << "): " << to_string(data.family()) << data.rank() << ", |Delta_n^+| = "
      << data.noncompact_count() << '\n';
  int discrete = 0, holomorphic = 0;
  for (const auto& r : records) {
    discrete += r.is_discrete;
    holomorphic += r.is_holomorphic_ds;
    BigradedPoly p;
    for (const auto& [a, b, c] : r.P_q) p.add(static_cast<int>(a), static_cast<int>(b), c);
    out << '#' << r.index << "  I=" << text_roots(r.I) << "  F=" << text_roots(r.F) << "  (R+,R-)=(" << r.R_plus
        << ',' << r.R_minus << ')';
    if (r.is_holomorphic_ds)
      out << "  holomorphic discrete";
    else if (r.is_discrete)
      out << "  discrete";
    out << "  Y=" << r.Yq_name << "  P=" << p.to_string() << '\n';
  }
  out << records.size() << " classes, " << discrete << " discrete, " << holomorphic << " holomorphic\n";
  return out.str();
}

IndexSet parse_root_set_spec(const HermitianRootData& data, const std::string& spec) {
  const auto s = strip(spec);
  if (s == "all") return noncompact_poset(data).complement({});
  if (s.empty() || s == "none") return {};
  RootList roots;
  for (const auto& part : split(s, ",")) {
    const auto digits = strip(part);
    if (digits.size() != static_cast<std::size_t>(data.rank()) ||
        !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
      throw std::invalid_argument("root '" + digits + "' needs " + std::to_string(data.rank()) + " digits");
    std::vector<int> r;
    for (char ch : digits) r.push_back(ch - '0');
    roots.push_back(std::move(r));
  }
  auto out = indices_of(data, roots);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string latex_root(const std::vector<int>& coeffs) {
  const bool negative = std::any_of(coeffs.begin(), coeffs.end(), [](int c) { return c < 0; });
  std::string body;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const int c = negative ? -coeffs[j] : coeffs[j];
    if (c == 0) continue;
    if (!body.empty()) body += '+';
    if (c != 1) body += std::to_string(c);
    body += "\\phi_" + std::to_string(j + 1);
  }
  return negative ? "-(" + body + ")" : body;
}

std::vector<int> parse_latex_root(const std::string& text, int rank) {
  static const std::regex term(R"(^(\d+)?\\phi_(\d+)$)");
  std::string s = text;
  int sign = 1;
  if (s.rfind("-(", 0) == 0 && s.back() == ')') {
    sign = -1;
    s = s.substr(2, s.size() - 3);
  }
  std::vector<int> out(static_cast<std::size_t>(rank), 0);
  for (const auto& part : split(s, "+")) {
    std::smatch mt;
    if (!std::regex_match(part, mt, term)) throw std::invalid_argument("latex: bad root " + text);
    const int j = std::stoi(mt[2]);
    if (j < 1 || j > rank) throw std::invalid_argument("latex: simple root index out of range in " + text);
    out[static_cast<std::size_t>(j - 1)] += sign * (mt[1].matched ? std::stoi(mt[1]) : 1);
  }
  return out;
}

std::string to_latex(const HermitianRootData& data, const std::vector<ClassRecord>& records) {
  const auto poset = noncompact_poset(data);
  std::ostringstream out;
  out << "% " << kSchema << " m=" << data.m() << '\n';
  out << "\\begin{tabular}{llllll}\n";
  out << "$\\Delta(\\mathfrak{u}\\cap\\mathfrak{p}_-)$ / $R_-$ & $\\Phi_q$ & "
         "$\\Delta(\\mathfrak{u}\\cap\\mathfrak{p}_+)$ / $R_+$ & $\\Gamma$ & $Y_q$ & $P_q(x,t)$ \\\\\n\\hline\n";
  for (const auto& r : records) {
    const auto I = extremal(poset, indices_of(data, r.I), true);
    const auto F = extremal(poset, indices_of(data, r.F), false);
    auto gens = [&](const IndexSet& g, const char* rel) {
      if (g.empty()) return std::string("$\\emptyset$");
      return std::string("$") + rel + latex_set(roots_of(data, g)) + "$";
    };
    out << gens(I, "\\le") << " / " << r.R_minus << " & $" << latex_set(r.Phi_q) << "$ & " << gens(F, "\\ge")
        << " / " << r.R_plus << " & $" << latex_set(r.Gamma) << "$ & $" << latex_name(r.Yq_name) << "$ & $"
        << latex_poly(r.P_q) << "$ \\\\\n";
  }
  out << "\\end{tabular}\n";
  return out.str();
}

LatexRow latex_view(const ClassRecord& r) {
  return {r.I, r.F, r.R_minus, r.R_plus, r.Phi_q, r.Gamma, r.Yq_name, r.P_q};
}

std::vector<LatexRow> rows_from_latex(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  const std::string prefix = std::string("% ") + kSchema + " m=";
  if (line.rfind(prefix, 0) != 0) throw std::invalid_argument("latex: missing header");
  const HermitianRootData data(std::stoi(line.substr(prefix.size())));
  const auto poset = noncompact_poset(data);

  auto closed = [&](const std::string& cell, bool down, int& count) {
    const auto parts = split(cell, " / ");
    if (parts.size() != 2) throw std::invalid_argument("latex: expected 'set / count' in " + cell);
    count = std::stoi(strip(parts[1]));
    const auto body = strip_math(parts[0]);
    if (body == "\\emptyset") return RootList{};
    const std::string rel = down ? "\\le" : "\\ge";
    if (body.rfind(rel, 0) != 0) throw std::invalid_argument("latex: expected " + rel + " in " + cell);
    const auto gens = indices_of(data, set_from_latex(body.substr(rel.size()), data.rank()));
    return roots_of(data, down ? poset.down_closure(gens) : poset.up_closure(gens));
  };

  std::vector<LatexRow> out;
  std::getline(in, line);  // \begin{tabular}
  std::getline(in, line);  // column heads
  std::getline(in, line);  // \hline
  while (std::getline(in, line)) {
    if (line.rfind("\\end{tabular}", 0) == 0) break;
    const std::string tail = " \\\\";
    if (line.size() < tail.size() || line.substr(line.size() - tail.size()) != tail)
      throw std::invalid_argument("latex: row without terminator");
    const auto cells = split(line.substr(0, line.size() - tail.size()), " & ");
    if (cells.size() != 6) throw std::invalid_argument("latex: expected 6 columns");
    LatexRow row;
    row.I = closed(cells[0], true, row.R_minus);
    row.Phi_q = set_from_latex(strip_math(cells[1]), data.rank());
    row.F = closed(cells[2], false, row.R_plus);
    row.Gamma = set_from_latex(strip_math(cells[3]), data.rank());
    row.Yq_name = name_from_latex(strip_math(cells[4]));
    row.P_q = poly_from_latex(strip_math(cells[5]));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace aq
