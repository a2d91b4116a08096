#include "aq/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace aq {

std::string to_string(Family f) { return f == Family::B ? "B" : "D"; }

int RootCoord::height() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }

bool RootCoord::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; });
}

RootCoord RootCoord::operator-() const {
  RootCoord r = *this;
  for (int& c : r.coeffs) c = -c;
  return r;
}

RootCoord RootCoord::operator+(const RootCoord& other) const {
  if (other.coeffs.size() != coeffs.size()) throw std::invalid_argument("root length mismatch");
  RootCoord r = *this;
  for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += other.coeffs[i];
  return r;
}

RootCoord RootCoord::operator-(const RootCoord& other) const { return *this + (-other); }

std::string to_string(const RootCoord& r) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) os << (i ? "," : "") << r.coeffs[i];
  os << ']';
  return os.str();
}

namespace {

bool canonical_less(const RootCoord& a, const RootCoord& b) {
  if (a.height() != b.height()) return a.height() < b.height();
  return a.coeffs > b.coeffs;
}

}  // namespace

std::vector<std::vector<int>> simple_root_gram(Family family, int rank) {
  const auto l = static_cast<std::size_t>(rank);
  std::vector<std::vector<int>> g(l, std::vector<int>(l, 0));
  if (family == Family::B) {
    if (rank < 1) throw std::invalid_argument("B_l needs l >= 1");
    for (std::size_t i = 0; i < l; ++i) g[i][i] = (i + 1 == l) ? 2 : 4;
    for (std::size_t i = 0; i + 1 < l; ++i) g[i][i + 1] = g[i + 1][i] = -2;
  } else {
    if (rank < 2) throw std::invalid_argument("D_l needs l >= 2");
    for (std::size_t i = 0; i < l; ++i) g[i][i] = 2;
    if (l >= 3) {
      // chain phi_1 - ... - phi_{l-2} - phi_{l-1}, and phi_{l-2} - phi_l
      for (std::size_t i = 0; i + 2 < l; ++i) g[i][i + 1] = g[i + 1][i] = -1;
      g[l - 3][l - 1] = g[l - 1][l - 3] = -1;
    }
  }
  return g;
}

std::vector<RootCoord> positive_roots_from_cartan(Family family, int rank) {
  const auto gram = simple_root_gram(family, rank);
  const auto l = gram.size();
  // a[i][j] = <phi_i, phi_j^vee>
  std::vector<std::vector<int>> a(l, std::vector<int>(l));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) a[i][j] = 2 * gram[i][j] / gram[j][j];

  std::set<std::vector<int>> known;
  std::vector<RootCoord> layer;
  for (std::size_t i = 0; i < l; ++i) {
    RootCoord r{std::vector<int>(l, 0)};
    r.coeffs[i] = 1;
    known.insert(r.coeffs);
    layer.push_back(r);
  }
  std::vector<RootCoord> all = layer;
  while (!layer.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& beta : layer) {
      for (std::size_t j = 0; j < l; ++j) {
        // phi_j-string through beta: beta - r phi_j, ..., beta + q phi_j with r - q = <beta, phi_j^vee>
        int down = 0;
        auto probe = beta.coeffs;
        while (true) {
          probe[j] -= 1;
          if (!known.contains(probe)) break;
          ++down;
        }
        int pair = 0;
        for (std::size_t i = 0; i < l; ++i) pair += beta.coeffs[i] * a[i][j];
        if (down - pair > 0) {
          auto up = beta.coeffs;
          up[j] += 1;
          if (!known.contains(up)) next.insert(up);
        }
      }
    }
    layer.clear();
    for (const auto& c : next) {
      known.insert(c);
      layer.push_back(RootCoord{c});
    }
    all.insert(all.end(), layer.begin(), layer.end());
  }
  std::sort(all.begin(), all.end(), canonical_less);
  return all;
}

HermitianRootData::HermitianRootData(int m) : m_(m) {
  if (m < 1) throw std::invalid_argument("m must be a positive integer");
  if (m % 2 == 1) {
    family_ = Family::B;
    rank_ = (m + 1) / 2;
  } else {
    family_ = Family::D;
    rank_ = (m + 2) / 2;
  }
  gram_ = simple_root_gram(family_, rank_);
  const auto l = static_cast<std::size_t>(rank_);
  cartan_.assign(l, std::vector<int>(l));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) cartan_[i][j] = 2 * gram_[i][j] / gram_[j][j];

  pos_roots_ = positive_roots_from_cartan(family_, rank_);
  for (const auto& r : pos_roots_) {
    if (is_noncompact(r))
      noncompact_pos_.push_back(r);
    else
      compact_pos_.push_back(r);
  }
  if (m_ != 2)
    for (std::size_t j = 1; j < l; ++j) compact_simple_.push_back(j);

  for (std::size_t b = 0; b < noncompact_pos_.size(); ++b) {
    for (std::size_t g = 0; g < noncompact_pos_.size(); ++g) {
      const auto diff = noncompact_pos_[g] - noncompact_pos_[b];
      for (std::size_t j : compact_simple_) {
        if (diff == simple_root(j)) hasse_.push_back({b, g, j});
      }
    }
  }
}

std::optional<std::size_t> HermitianRootData::noncompact_index(const RootCoord& r) const {
  auto it = std::find(noncompact_pos_.begin(), noncompact_pos_.end(), r);
  if (it == noncompact_pos_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - noncompact_pos_.begin());
}

bool HermitianRootData::is_root(const RootCoord& r) const {
  if (r.coeffs.size() != static_cast<std::size_t>(rank_)) return false;
  const RootCoord pos = (r.height() < 0) ? -r : r;
  return std::binary_search(pos_roots_.begin(), pos_roots_.end(), pos, canonical_less);
}

bool HermitianRootData::is_noncompact(const RootCoord& r) const {
  if (m_ == 2) return !r.is_zero();
  return r.coeffs.at(0) != 0;
}

RootCoord HermitianRootData::simple_root(std::size_t j) const {
  RootCoord r{std::vector<int>(static_cast<std::size_t>(rank_), 0)};
  r.coeffs.at(j) = 1;
  return r;
}

int HermitianRootData::inner(const RootCoord& a, const RootCoord& b) const {
  const auto l = static_cast<std::size_t>(rank_);
  if (a.coeffs.size() != l || b.coeffs.size() != l) throw std::invalid_argument("root length mismatch");
  int s = 0;
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) s += a.coeffs[i] * gram_[i][j] * b.coeffs[j];
  return s;
}

int HermitianRootData::coroot_pairing(const RootCoord& a, const RootCoord& b) const {
  const int nb = inner(b, b);
  if (nb == 0) throw std::invalid_argument("coroot of the zero vector");
  return 2 * inner(a, b) / nb;
}

bool HermitianRootData::leq(std::size_t beta, std::size_t gamma) const {
  return aq::leq(noncompact_pos_.at(beta), noncompact_pos_.at(gamma));
}

bool leq(const RootCoord& beta, const RootCoord& gamma) {
  if (beta.coeffs.size() != gamma.coeffs.size()) throw std::invalid_argument("root length mismatch");
  for (std::size_t i = 0; i < beta.coeffs.size(); ++i)
    if (gamma.coeffs[i] < beta.coeffs[i]) return false;
  return true;
}

Rational pairing(const CVector& c, const RootCoord& beta) {
  if (c.size() != beta.coeffs.size()) throw std::invalid_argument("pairing: length mismatch");
  Rational s = 0;
  for (std::size_t j = 0; j < c.size(); ++j) s += c[j] * beta.coeffs[j];
  return s;
}

long long pairing(const std::vector<int>& c, const RootCoord& beta) {
  if (c.size() != beta.coeffs.size()) throw std::invalid_argument("pairing: length mismatch");
  long long s = 0;
  for (std::size_t j = 0; j < c.size(); ++j) s += static_cast<long long>(c[j]) * beta.coeffs[j];
  return s;
}

Rational parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(boost::multiprecision::cpp_int(text));
    boost::multiprecision::cpp_int num(text.substr(0, slash));
    boost::multiprecision::cpp_int den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a fraction: " + text);
  }
}

}  // namespace aq
