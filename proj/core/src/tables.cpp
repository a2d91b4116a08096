#include "aq/tables.hpp"

#include <stdexcept>

#include "aq/parabolic.hpp"

namespace aq {

namespace {

// x^{p0} t^{q0} + x^{p0+1} t^{q0+1} + ... + x^{p1} t^{q1}
BigradedPoly series(int p0, int q0, int p1, int q1, int doubled_at = -1) {
  if (p1 - p0 != q1 - q0 || p1 < p0) throw std::logic_error("malformed series");
  BigradedPoly out;
  for (int s = 0; s <= p1 - p0; ++s) out.add(p0 + s, q0 + s, p0 + s == doubled_at ? 2 : 1);
  return out;
}

BigradedPoly mono(int p, int q) { return series(p, q, p, q); }

class Builder {
 public:
  explicit Builder(int m) : data_(m), poset_(noncompact_poset(data_)), l_(data_.rank()) {}

  int l() const { return l_; }
  const HermitianRootData& data() const { return data_; }

  // phi_from + ... + phi_to with 1-based labels; twice over [two_from, two_to]
  RootCoord sum(int from, int to, int two_from = 0, int two_to = -1) const {
    RootCoord r{std::vector<int>(static_cast<std::size_t>(l_), 0)};
    for (int k = from; k <= to; ++k) r.coeffs[static_cast<std::size_t>(k - 1)] += 1;
    for (int k = two_from; k <= two_to; ++k) r.coeffs[static_cast<std::size_t>(k - 1)] += 1;
    return r;
  }

  std::size_t idx(const RootCoord& r) const {
    auto i = data_.noncompact_index(r);
    if (!i) throw std::logic_error("table generator produced a non-root " + to_string(r));
    return *i;
  }

  IndexSet below(std::initializer_list<RootCoord> gens) const {
    IndexSet g;
    for (const auto& r : gens) g.push_back(idx(r));
    std::sort(g.begin(), g.end());
    return poset_.down_closure(g);
  }
  IndexSet above(std::initializer_list<RootCoord> gens) const {
    IndexSet g;
    for (const auto& r : gens) g.push_back(idx(r));
    std::sort(g.begin(), g.end());
    return poset_.up_closure(g);
  }
  IndexSet all() const { return poset_.complement({}); }

  void row(std::string label, IndexSet ideal, IndexSet filter, std::string name, std::optional<int> gamma,
           BigradedPoly poly) {
    rows_.push_back({std::move(label), std::move(ideal), std::move(filter), std::move(name), gamma,
                     std::move(poly)});
  }

  std::vector<TableRow> take() { return std::move(rows_); }

 private:
  HermitianRootData data_;
  FinitePoset poset_;
  int l_;
  std::vector<TableRow> rows_;
};

std::string lbl(const std::string& row, const std::string& rest) { return row + ", " + rest; }
std::string S(int k) { return std::to_string(k); }

std::vector<TableRow> table_b(int m) {
  Builder b(m);
  const int l = b.l();
  const std::string pt = singleton_name();
  auto a = [&](int i) { return b.sum(1, i); };
  auto bb = [&](int i) { return b.sum(1, l, i, l); };

  if (l == 1) {
    b.row("m=1, I=0, F=0", {}, {}, odd_quadric_name(1), 0, series(0, 0, 1, 1));
    b.row("m=1, I=0, F=all", {}, b.all(), pt, 1, mono(1, 0));
    b.row("m=1, I=all, F=0", b.all(), {}, pt, 1, mono(0, 1));
    return b.take();
  }

  const int n = 2 * l - 1;
  // row 1: I empty
  b.row("row 1, F=all", {}, b.all(), pt, 1, mono(n, 0));
  for (int i = 2; i <= l; ++i)
    b.row(lbl("row 1", "F>=a(" + S(i) + ")"), {}, b.above({a(i)}), projective_space_name(i), 1,
          series(n + 1 - i, 0, n, i - 1));
  b.row("row 1, F=0", {}, {}, odd_quadric_name(l), 0, series(0, 0, n, n));

  // row 2: I = <= a(i)
  for (int i = 1; i <= l - 1; ++i) {
    const auto I = b.below({a(i)});
    const std::string r = "row 2, i=" + S(i);
    b.row(lbl(r, "F>=a(" + S(i + 1) + ")"), I, b.above({a(i + 1)}), pt, 2, mono(n - i, i));
    for (int j = i + 2; j <= l; ++j)
      b.row(lbl(r, "F>=a(" + S(j) + ")"), I, b.above({a(j)}), projective_space_name(j - i), 2,
            series(2 * l - j, i, n - i, j - 1));
    b.row(lbl(r, "F>=b(" + S(i + 1) + ")"), I, b.above({bb(i + 1)}), odd_quadric_name(l - i), 1,
          series(i, i, n - i, n - i));
  }

  // row 3: I = <= a(l)
  {
    const auto I = b.below({a(l)});
    b.row("row 3, F>=b(" + S(l) + ")", I, b.above({bb(l)}), pt, 2, mono(l - 1, l));
    for (int j = 2; j <= l - 1; ++j)
      b.row("row 3, F>=b(" + S(j) + ")", I, b.above({bb(j)}), projective_space_name(l - j + 1), 2,
            series(j - 1, l, l - 1, 2 * l - j));
    b.row("row 3, F=0", I, {}, projective_space_name(l), 1, series(0, l, l - 1, n));
  }

  // row 4: I = <= b(i)
  for (int i = 3; i <= l; ++i) {
    const auto I = b.below({bb(i)});
    const std::string r = "row 4, i=" + S(i);
    b.row(lbl(r, "F>=b(" + S(i - 1) + ")"), I, b.above({bb(i - 1)}), pt, 2, mono(i - 2, n + 2 - i));
    for (int j = 2; j <= i - 2; ++j)
      b.row(lbl(r, "F>=b(" + S(j) + ")"), I, b.above({bb(j)}), projective_space_name(i - j), 2,
            series(j - 1, n + 2 - i, i - 2, 2 * l - j));
    b.row(lbl(r, "F=0"), I, {}, projective_space_name(i - 1), 1, series(0, n + 2 - i, i - 2, n));
  }

  b.row("row 5, I=all", b.all(), {}, pt, 1, mono(0, n));
  return b.take();
}

std::vector<TableRow> table_d(int m) {
  Builder b(m);
  const int l = b.l();
  const std::string pt = singleton_name();

  if (l == 2) {
    const auto p1 = b.sum(1, 1), p2 = b.sum(2, 2);
    const auto q4 = even_quadric_name(2);
    const auto p = projective_space_name(2);
    b.row("d2, (0,0)", {}, {}, q4, std::nullopt, series(0, 0, 2, 2, 1));
    b.row("d2, (0,{1})", {}, b.above({p1}), p, std::nullopt, series(1, 0, 2, 1));
    b.row("d2, (0,{2})", {}, b.above({p2}), p, std::nullopt, series(1, 0, 2, 1));
    b.row("d2, (0,all)", {}, b.all(), pt, std::nullopt, mono(2, 0));
    b.row("d2, ({1},0)", b.below({p1}), {}, p, std::nullopt, series(0, 1, 1, 2));
    b.row("d2, ({2},0)", b.below({p2}), {}, p, std::nullopt, series(0, 1, 1, 2));
    b.row("d2, ({1},{2})", b.below({p1}), b.above({p2}), pt, std::nullopt, mono(1, 1));
    b.row("d2, ({2},{1})", b.below({p2}), b.above({p1}), pt, std::nullopt, mono(1, 1));
    b.row("d2, (all,0)", b.all(), {}, pt, std::nullopt, mono(0, 2));
    return b.take();
  }

  const int n = 2 * l - 2;
  auto a = [&](int i) { return b.sum(1, i); };
  const RootCoord xi[2] = {b.sum(1, l - 1), b.sum(1, l - 2) + b.sum(l, l)};
  const RootCoord s = b.sum(1, l);
  auto d = [&](int i) { return b.sum(1, l, i, l - 2); };

  // row a: I empty
  b.row("row a, F=all", {}, b.all(), pt, 1, mono(n, 0));
  for (int i = 2; i <= l - 2; ++i)
    b.row("row a, F>=a(" + S(i) + ")", {}, b.above({a(i)}), projective_space_name(i), 1,
          series(n + 1 - i, 0, n, i - 1));
  for (int k = 0; k < 2; ++k)
    b.row("row a, F>=xi" + S(k + 1), {}, b.above({xi[k]}), projective_space_name(l), 1,
          series(l - 1, 0, n, l - 1));
  b.row("row a, F>=xi1,xi2", {}, b.above({xi[0], xi[1]}), projective_space_name(l - 1), 2,
        series(l, 0, n, l - 2));
  b.row("row a, F=0", {}, {}, even_quadric_name(l), 0, series(0, 0, n, n, l - 1));

  // row b: I = <= a(i)
  for (int i = 1; i <= l - 3; ++i) {
    const auto I = b.below({a(i)});
    const std::string r = "row b, i=" + S(i);
    b.row(lbl(r, "F>=a(" + S(i + 1) + ")"), I, b.above({a(i + 1)}), pt, 2, mono(n - i, i));
    for (int j = i + 2; j <= l - 2; ++j)
      b.row(lbl(r, "F>=a(" + S(j) + ")"), I, b.above({a(j)}), projective_space_name(j - i), 2,
            series(n + 1 - j, i, n - i, j - 1));
    for (int k = 0; k < 2; ++k)
      b.row(lbl(r, "F>=xi" + S(k + 1)), I, b.above({xi[k]}), projective_space_name(l - i), 2,
            series(l - 1, i, n - i, l - 1));
    b.row(lbl(r, "F>=xi1,xi2"), I, b.above({xi[0], xi[1]}), projective_space_name(l - 1 - i), 3,
          series(l, i, n - i, l - 2));
    const RootCoord top = i + 1 == l - 1 ? s : d(i + 1);
    b.row(lbl(r, "F>=d(" + S(i + 1) + ")"), I, b.above({top}), even_quadric_name(l - i), 1,
          series(i, i, n - i, n - i, l - 1));
  }

  // row c: I = <= a(l-2)
  {
    const auto I = b.below({a(l - 2)});
    b.row("row c, F>=xi1,xi2", I, b.above({xi[0], xi[1]}), pt, 3, mono(l, l - 2));
    for (int k = 0; k < 2; ++k)
      b.row("row c, F>=xi" + S(k + 1), I, b.above({xi[k]}), projective_space_name(2), 2,
            series(l - 1, l - 2, l, l - 1));
    b.row("row c, F>=s", I, b.above({s}), even_quadric_name(2), 1, series(l - 2, l - 2, l, l, l - 1));
  }

  // row d: I = <= xi_a
  for (int k = 0; k < 2; ++k) {
    const auto I = b.below({xi[k]});
    const std::string r = "row d, xi" + S(k + 1);
    b.row(lbl(r, "F>=xi" + S(2 - k)), I, b.above({xi[1 - k]}), pt, 2, mono(l - 1, l - 1));
    b.row(lbl(r, "F>=s"), I, b.above({s}), projective_space_name(2), 2, series(l - 2, l - 1, l - 1, l));
    for (int j = 2; j <= l - 2; ++j)
      b.row(lbl(r, "F>=d(" + S(j) + ")"), I, b.above({d(j)}), projective_space_name(l - j + 1), 2,
            series(j - 1, l - 1, l - 1, n + 1 - j));
    b.row(lbl(r, "F=0"), I, {}, projective_space_name(l), 1, series(0, l - 1, l - 1, n));
  }

  // row e: I = <= {xi1, xi2}
  {
    const auto I = b.below({xi[0], xi[1]});
    b.row("row e, F>=s", I, b.above({s}), pt, 3, mono(l - 2, l));
    for (int j = 2; j <= l - 2; ++j)
      b.row("row e, F>=d(" + S(j) + ")", I, b.above({d(j)}), projective_space_name(l - j), 3,
            series(j - 1, l, l - 2, n + 1 - j));
    b.row("row e, F=0", I, {}, projective_space_name(l - 1), 2, series(0, l, l - 2, n));
  }

  // row f: I = <= s
  if (l >= 4) {
    const auto I = b.below({s});
    b.row("row f, F>=d(" + S(l - 2) + ")", I, b.above({d(l - 2)}), pt, 2, mono(l - 3, l + 1));
    for (int j = 2; j <= l - 3; ++j)
      b.row("row f, F>=d(" + S(j) + ")", I, b.above({d(j)}), projective_space_name(l - j - 1), 2,
            series(j - 1, l + 1, l - 3, n + 1 - j));
    b.row("row f, F=0", I, {}, projective_space_name(l - 2), 1, series(0, l + 1, l - 3, n));
  }

  // row g: I = <= d(i)
  for (int i = 3; i <= l - 2; ++i) {
    const auto I = b.below({d(i)});
    const std::string r = "row g, i=" + S(i);
    b.row(lbl(r, "F>=d(" + S(i - 1) + ")"), I, b.above({d(i - 1)}), pt, 2, mono(i - 2, 2 * l - i));
    for (int j = 2; j <= i - 2; ++j)
      b.row(lbl(r, "F>=d(" + S(j) + ")"), I, b.above({d(j)}), projective_space_name(i - j), 2,
            series(j - 1, 2 * l - i, i - 2, n + 1 - j));
    b.row(lbl(r, "F=0"), I, {}, projective_space_name(i - 1), 1, series(0, 2 * l - i, i - 2, n));
  }

  b.row("row h, I=all", b.all(), {}, pt, 1, mono(0, n));
  return b.take();
}

}  // namespace

std::vector<TableRow> reference_rows(int m) {
  if (m < 1) throw std::invalid_argument("m must be a positive integer");
  return m % 2 == 1 ? table_b(m) : table_d(m);
}

}  // namespace aq
