#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quandlekit/mod_matrix.hpp"
#include "quandlekit/quandle.hpp"

namespace qk {

/// A representation of the quandle algebra on G = (Z_N)^m: one invertible eta
/// matrix and one tau matrix per ordered pair of quandle elements.
class AlgebraRep {
 public:
  /// Tables are indexed x * |X| + y. Throws InputError on shape/modulus mismatch and
  /// ValidationError naming (x,y) when some eta is not invertible mod N.
  static AlgebraRep create(std::shared_ptr<const FiniteQuandle> quandle, Modulus modulus, int dim,
                           std::vector<ModMatrix> eta, std::vector<ModMatrix> tau, std::string label = {});

  const FiniteQuandle& quandle() const noexcept { return *quandle_; }
  const std::shared_ptr<const FiniteQuandle>& quandle_ptr() const noexcept { return quandle_; }
  int order() const noexcept { return quandle_->size(); }
  Modulus modulus() const noexcept { return modulus_; }
  int dim() const noexcept { return dim_; }
  const std::string& label() const noexcept { return label_; }

  const ModMatrix& eta(int x, int y) const { return eta_[x * order() + y]; }
  const ModMatrix& tau(int x, int y) const { return tau_[x * order() + y]; }
  const ModMatrix& eta_inverse(int x, int y) const { return eta_inv_[x * order() + y]; }

  /// The group action rho when eta_{x,y} = rho(y) and tau_{x,y} = I - rho(x*y) with
  /// rho(x*y) = rho(y) rho(x) rho(y)^-1; empty otherwise.
  const std::optional<std::vector<ModMatrix>>& conj_action() const noexcept { return conj_; }
  bool is_conj_type() const noexcept { return conj_.has_value(); }

 private:
  AlgebraRep() = default;

  std::shared_ptr<const FiniteQuandle> quandle_;
  Modulus modulus_ = 1;
  int dim_ = 0;
  std::vector<ModMatrix> eta_, tau_, eta_inv_;
  std::optional<std::vector<ModMatrix>> conj_;
  std::string label_;
};

/// Checks invertibility and the four defining relations over every x, y, z:
///   (1) eta_{x*y,z} eta_{x,y} = eta_{x*z,y*z} eta_{x,z}
///   (2) eta_{x*y,z} tau_{x,y} = tau_{x*z,y*z} eta_{y,z}
///   (3) tau_{x*y,z} = eta_{x*z,y*z} tau_{x,z} + tau_{x*z,y*z} tau_{y,z}
///   (4) tau_{x,x} + eta_{x,x} = I
ValidationReport verify_relations(const AlgebraRep& rep);

/// An assignment x -> rho(x) with rho(x*y) = rho(y) rho(x) rho(y)^-1; stands in for
/// a module over the enveloping group.
class GroupRep {
 public:
  /// Throws ValidationError naming the first (x,y) that breaks consistency or
  /// the first x whose matrix is singular.
  static GroupRep create(std::shared_ptr<const FiniteQuandle> quandle, Modulus modulus, std::vector<ModMatrix> rho,
                         std::string label = {});

  const FiniteQuandle& quandle() const noexcept { return *quandle_; }
  const std::shared_ptr<const FiniteQuandle>& quandle_ptr() const noexcept { return quandle_; }
  Modulus modulus() const noexcept { return modulus_; }
  int dim() const noexcept { return rho_.front().rows(); }
  const ModMatrix& rho(int x) const { return rho_[x]; }
  const std::vector<ModMatrix>& rho_table() const noexcept { return rho_; }
  const std::string& label() const noexcept { return label_; }

 private:
  GroupRep() = default;
  std::shared_ptr<const FiniteQuandle> quandle_;
  Modulus modulus_ = 1;
  std::vector<ModMatrix> rho_;
  std::string label_;
};

/// R_3 acting on (Z_N)^3, element i as the permutation matrix of the transposition fixing i.
GroupRep perm3_group_rep(Modulus modulus);

/// Constant tables eta = t, tau = I - t (a module over Z[t, t^-1]).
AlgebraRep make_alexander_rep(std::shared_ptr<const FiniteQuandle> quandle, Modulus modulus, const ModMatrix& t);
AlgebraRep make_alexander_rep(std::shared_ptr<const FiniteQuandle> quandle, Modulus modulus, int dim, std::int64_t t);

/// eta_{x,y} = rho(y), tau_{x,y} = I - rho(x*y).
AlgebraRep make_conj_rep(const GroupRep& g);

/// A homomorphism from a finite group onto invertible matrices over Z_N.
class GroupHomomorphism {
 public:
  /// rho is indexed by group element; throws ValidationError if rho(ab) != rho(a) rho(b).
  static GroupHomomorphism create(FiniteGroup group, Modulus modulus, std::vector<ModMatrix> rho);

  const FiniteGroup& group() const noexcept { return group_; }
  Modulus modulus() const noexcept { return modulus_; }
  int dim() const noexcept { return rho_.front().rows(); }
  const ModMatrix& rho(int g) const { return rho_[g]; }

 private:
  GroupHomomorphism(FiniteGroup g, Modulus n, std::vector<ModMatrix> rho)
      : group_(std::move(g)), modulus_(n), rho_(std::move(rho)) {}
  FiniteGroup group_;
  Modulus modulus_;
  std::vector<ModMatrix> rho_;
};

/// Permutation matrices of symmetric_group(n), as a homomorphism.
GroupHomomorphism permutation_homomorphism(int n, Modulus modulus);
/// Z_n -> (Z_N)^*, generator 1 -> u (1-dimensional).
GroupHomomorphism cyclic_character(int n, Modulus modulus, std::int64_t u);

/// Braid actions (x, y) -> (y, w(x, y)) on group elements.
struct WadaVariant {
  enum class Kind { ConjPower, Core };
  Kind kind = Kind::ConjPower;
  int power = 1;

  static WadaVariant conj_power(int m) { return {Kind::ConjPower, m}; }
  static WadaVariant core() { return {Kind::Core, 1}; }
  std::string str() const;
};

/// The quandle on a closed subset of the group for w(x,y) = y^m x y^-m or y x^-1 y.
FiniteQuandle wada_quandle(const FiniteGroup& group, std::span<const int> elements, WadaVariant variant);

/// Fox-derivative tables of the Wada action, with quandle element i = elements[i]:
///   y^m x y^-m:  eta = rho(y)^m,  tau = d(y^m)/dy + rho(y)^m rho(x) d(y^-m)/dy
///   y x^-1 y:    eta = -rho(y) rho(x)^-1,  tau = I + rho(y) rho(x)^-1
/// `quandle` must match the variant on `elements` (InputError otherwise). The result
/// is returned only if verify_relations passes (ValidationError otherwise).
AlgebraRep make_wada_rep(const GroupHomomorphism& hom, std::shared_ptr<const FiniteQuandle> quandle,
                         std::span<const int> elements, WadaVariant variant);

struct BarPair {
  ModMatrix eta;
  ModMatrix tau;
};

/// eta_bar = eta^-1_{x ∗̄ y, y},  tau_bar = -eta_bar tau_{x ∗̄ y, y}.
BarPair bar(const AlgebraRep& rep, int x, int y);

}  // namespace qk
