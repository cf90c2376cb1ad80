// Monomial bases, Gram matrices and moment matrices of linear functionals.
#pragma once

#include "soscert/exactla.hpp"
#include "soscert/ring.hpp"

#include <map>
#include <optional>
#include <vector>

namespace soscert {

/// Ordered list of all monomials of one degree.
class MonomialBasis {
 public:
  /// All degree-d monomials, decreasing under `order`.
  MonomialBasis(RingPtr ring, std::uint32_t degree, OrderKind order = OrderKind::degrevlex);
  /// Explicit ordering; must list every degree-d monomial exactly once.
  MonomialBasis(RingPtr ring, std::uint32_t degree, std::vector<Monomial> monomials);

  const RingPtr& ring() const { return ring_; }
  std::uint32_t degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  std::optional<std::size_t> index_of(const Monomial& m) const;

  /// Coefficient vector of a homogeneous degree-d polynomial.
  RationalVector coordinates(const Polynomial& p) const;
  Polynomial polynomial(std::span<const Rational> coords) const;
  std::vector<std::string> labels() const;

 private:
  void build_index();

  RingPtr ring_;
  std::uint32_t degree_;
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t> index_;
};

MonomialBasis monomial_basis(const RingPtr& ring, std::uint32_t degree,
                             OrderKind order = OrderKind::degrevlex);

/// Degree-d monomials free of the last variable first (lex among them), then
/// increasing powers of the last variable, e.g. for n=5, d=2:
/// x1^2, x1x2, ..., x4^2, x1x5, ..., x4x5, x5^2.
MonomialBasis presentation_basis(const RingPtr& ring, std::uint32_t degree);

/// Number of degree-d monomials in n variables: C(n+d-1, d).
std::size_t count_monomials(std::size_t n, std::uint32_t degree);

/// mᵀ A m.
Polynomial gram_evaluate(const RationalMatrix& a, const MonomialBasis& basis);

/// Σ_k c_k c_kᵀ over the coefficient vectors c_k of the polynomials.
RationalMatrix gram_from_polys(std::span<const Polynomial> polys, const MonomialBasis& basis);

/// A linear form on degree-2d polynomials, stored by its values on a
/// degree-2d monomial basis.
struct LinearFunctional {
  MonomialBasis support;
  RationalVector values;

  Rational operator()(const Polynomial& p) const;
};

struct MomentMatrix {
  MonomialBasis basis;
  RationalMatrix matrix;
};

/// Entry (a, b) = ell(m_a * m_b).
MomentMatrix functional_to_moment(const LinearFunctional& ell, const MonomialBasis& basis);

struct MatrixSpace {
  /// Functionals spanning the space, canonical: RREF on the degree-2d
  /// values then scaled to coprime integers with a positive pivot.
  std::vector<LinearFunctional> functionals;
  std::vector<MomentMatrix> matrices;
  /// Unknowns and the constraint matrix rank of the defining system.
  std::size_t unknowns = 0;
  std::size_t constraints = 0;
  std::size_t constraint_rank = 0;

  std::size_t dimension() const { return matrices.size(); }
  /// Σ params[k] * matrices[k].
  RationalMatrix combine(std::span<const Rational> params) const;
};

/// Rows are ell(p_i * m_j) for every generator p_i and degree-d monomial
/// m_j; columns are the degree-2d monomials in decreasing degrevlex order.
RationalMatrix dual_constraint_matrix(std::span<const Polynomial> polys, const RingPtr& ring,
                                      std::uint32_t degree);

/// The moment matrices of all functionals ell with ell(p_i * q) = 0 for
/// every p_i and every degree-d q. Matrices are expressed in `basis`
/// (presentation_basis when omitted). Throws std::invalid_argument if a
/// generator is not homogeneous of degree d.
MatrixSpace dual_obstruction_space(std::span<const Polynomial> polys, const RingPtr& ring,
                                   std::uint32_t degree,
                                   std::optional<MonomialBasis> basis = std::nullopt);

struct PsdChoice {
  MomentMatrix element;
  RationalVector parameters;
};

/// First nonzero PSD member found: all-ones parameters, then ±1 sign
/// patterns until `budget` patterns were tried.
std::optional<PsdChoice> pick_psd_element(const MatrixSpace& space, std::size_t budget = 256);

}  // namespace soscert
