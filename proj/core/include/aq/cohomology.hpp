#pragma once

// Relative Lie algebra cohomology H^{p,q}(g, K; A_q) of each class.
//
// With N = Delta_n^+ \ (I u F) the noncompact positive roots of the Levi
// factor, Y_q is a compact Hermitian symmetric space of complex dimension |N|
// and dim H^{2j}(Y_q) is the number of order ideals of N with j elements.
// P_q(x, t) = x^{R_+} t^{R_-} sum_j b_j (x t)^j.

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "aq/parabolic.hpp"
#include "aq/rootsys.hpp"

namespace aq {

class BigradedPoly {
 public:
  using Exponent = std::pair<int, int>;  // (p, q): power of x, power of t

  BigradedPoly() = default;

  void add(int p, int q, long coeff);
  long coeff(int p, int q) const;
  const std::map<Exponent, long>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// One-variable specialization: (p, q) -> t^{p+q}.
  std::map<int, long> collapse() const;

  /// "1 + 2*x*t + x^2*t^2"; terms in ascending (p, q).
  std::string to_string() const;

  bool operator==(const BigradedPoly&) const = default;

 private:
  std::map<Exponent, long> terms_;
};

/// "1 + 2*t^2 + t^4"
std::string single_variable_string(const std::map<int, long>& poly);

enum class YqKind { Singleton, Projective, Quadric };

struct YqDescriptor {
  YqKind kind = YqKind::Singleton;
  int complex_dim = 0;
  std::vector<long> betti;  // b_j = dim H^{2j}
  std::string name;
};

struct LeviComponent {
  std::vector<RootCoord> roots;
  std::vector<bool> noncompact;
  char type = 'A';  // 'A', 'B' or 'D'
};

struct PhiQData {
  std::vector<RootCoord> positive_system;  // Delta_q^+
  std::vector<RootCoord> simple;           // Phi_q
  std::vector<RootCoord> gamma;            // Gamma, a subset of Phi_q
  std::vector<LeviComponent> levi_components;
  CVector witness;                         // minimal-support lambda
};

/// N as indices into noncompact_positive().
IndexSet levi_noncompact_poset(const HermitianRootData& data, const ParabolicClass& cls);

/// Betti numbers from order ideals of N; kind and name from identify_Yq.
YqDescriptor betti_Yq(const HermitianRootData& data, const ParabolicClass& cls);

BigradedPoly poincare_two_var(const HermitianRootData& data, const ParabolicClass& cls);

PhiQData phi_q_and_gamma(const HermitianRootData& data, const ParabolicClass& cls);

/// Name of Y_q from the Levi diagram.  Throws std::logic_error when the
/// noncompact part of the Levi diagram is not one of the shapes that occur
/// for so(2, m).
std::string identify_Yq(const HermitianRootData& data, const ParabolicClass& cls);

std::string projective_space_name(int k);  // SU(k)/S(U(1)×U(k-1))
std::string odd_quadric_name(int k);       // SO(2k+1)/(SO(2)×SO(2k-1))
std::string even_quadric_name(int k);      // SO(2k)/(SO(2)×SO(2k-2))
inline const char* singleton_name() { return "singleton"; }

/// Betti numbers b_0..b_d of the named space, from the classical formulas.
/// Throws std::invalid_argument for an unknown name.
std::vector<long> named_space_betti(const std::string& name);

}  // namespace aq
