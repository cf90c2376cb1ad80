#include "soscert/gram.hpp"

#include "soscert/parser.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace soscert {

namespace {

std::vector<Monomial> all_monomials(std::size_t n, std::uint32_t degree) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> e(n, 0);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
    if (i + 1 == n) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (std::uint32_t k = left + 1; k-- > 0;) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, degree);
  return out;
}

}  // namespace

std::size_t count_monomials(std::size_t n, std::uint32_t degree) {
  // C(n + d - 1, d) computed incrementally; exact at every step.
  std::size_t c = 1;
  for (std::uint32_t k = 1; k <= degree; ++k) c = c * (n - 1 + k) / k;
  return c;
}

MonomialBasis::MonomialBasis(RingPtr ring, std::uint32_t degree, OrderKind order)
    : ring_(std::move(ring)), degree_(degree), monomials_(all_monomials(ring_->size(), degree)) {
  std::sort(monomials_.begin(), monomials_.end(),
            [order](const Monomial& a, const Monomial& b) { return compare(a, b, order) > 0; });
  build_index();
}

MonomialBasis::MonomialBasis(RingPtr ring, std::uint32_t degree, std::vector<Monomial> monomials)
    : ring_(std::move(ring)), degree_(degree), monomials_(std::move(monomials)) {
  for (const auto& m : monomials_) {
    if (m.size() != ring_->size() || m.degree() != degree_) {
      throw std::invalid_argument("basis monomial has wrong length or degree");
    }
  }
  build_index();
  if (index_.size() != monomials_.size()) throw std::invalid_argument("repeated basis monomial");
  if (monomials_.size() != count_monomials(ring_->size(), degree_)) {
    throw std::invalid_argument("basis is missing monomials");
  }
}

void MonomialBasis::build_index() {
  index_.clear();
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::optional<std::size_t> MonomialBasis::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

RationalVector MonomialBasis::coordinates(const Polynomial& p) const {
  require_same_ring(ring_, p.ring());
  RationalVector v(size());
  for (const auto& [m, c] : p.terms()) {
    auto idx = index_of(m);
    if (!idx) throw std::invalid_argument("polynomial has a term outside the monomial basis");
    v[*idx] = c;
  }
  return v;
}

Polynomial MonomialBasis::polynomial(std::span<const Rational> coords) const {
  if (coords.size() != size()) throw DimensionMismatch("coordinate vector length");
  Polynomial::TermMap terms;
  for (std::size_t i = 0; i < size(); ++i) {
    if (coords[i] != 0) terms.emplace(monomials_[i], coords[i]);
  }
  return Polynomial(ring_, std::move(terms));
}

std::vector<std::string> MonomialBasis::labels() const {
  std::vector<std::string> out;
  out.reserve(size());
  for (const auto& m : monomials_) out.push_back(print_monomial(m, *ring_));
  return out;
}

MonomialBasis monomial_basis(const RingPtr& ring, std::uint32_t degree, OrderKind order) {
  return MonomialBasis(ring, degree, order);
}

MonomialBasis presentation_basis(const RingPtr& ring, std::uint32_t degree) {
  auto monos = all_monomials(ring->size(), degree);
  const std::size_t last = ring->size() - 1;
  std::sort(monos.begin(), monos.end(), [last](const Monomial& a, const Monomial& b) {
    if (a[last] != b[last]) return a[last] < b[last];
    return compare(a, b, OrderKind::lex) > 0;
  });
  return MonomialBasis(ring, degree, std::move(monos));
}

Polynomial gram_evaluate(const RationalMatrix& a, const MonomialBasis& basis) {
  if (a.rows() != basis.size() || a.cols() != basis.size()) {
    throw DimensionMismatch("Gram matrix size differs from basis length");
  }
  Polynomial::TermMap terms;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      terms[basis[i] * basis[j]] += a(i, j);
    }
  }
  return Polynomial(basis.ring(), std::move(terms));
}

RationalMatrix gram_from_polys(std::span<const Polynomial> polys, const MonomialBasis& basis) {
  RationalMatrix g(basis.size(), basis.size());
  for (const auto& p : polys) {
    const RationalVector c = basis.coordinates(p);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      for (std::size_t j = 0; j < c.size(); ++j) g(i, j) += c[i] * c[j];
    }
  }
  return g;
}

Rational LinearFunctional::operator()(const Polynomial& p) const {
  Rational sum = 0;
  for (const auto& [m, c] : p.terms()) {
    auto idx = support.index_of(m);
    if (!idx) throw std::invalid_argument("functional applied to a polynomial of the wrong degree");
    sum += c * values[*idx];
  }
  return sum;
}

MomentMatrix functional_to_moment(const LinearFunctional& ell, const MonomialBasis& basis) {
  if (ell.support.degree() != 2 * basis.degree()) {
    throw std::invalid_argument("functional degree must be twice the basis degree");
  }
  require_same_ring(ell.support.ring(), basis.ring());
  MomentMatrix out{basis, RationalMatrix(basis.size(), basis.size())};
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = a; b < basis.size(); ++b) {
      const Rational v = ell.values[*ell.support.index_of(basis[a] * basis[b])];
      out.matrix(a, b) = v;
      out.matrix(b, a) = v;
    }
  }
  return out;
}

RationalMatrix MatrixSpace::combine(std::span<const Rational> params) const {
  if (params.size() != matrices.size()) throw DimensionMismatch("parameter count differs from dimension");
  if (matrices.empty()) return {};
  RationalMatrix sum(matrices[0].matrix.rows(), matrices[0].matrix.cols());
  for (std::size_t k = 0; k < params.size(); ++k) {
    RationalMatrix term = matrices[k].matrix;
    term *= params[k];
    sum = sum + term;
  }
  return sum;
}

RationalMatrix dual_constraint_matrix(std::span<const Polynomial> polys, const RingPtr& ring,
                                      std::uint32_t degree) {
  const MonomialBasis low(ring, degree);
  const MonomialBasis high(ring, 2 * degree);
  RationalMatrix c(polys.size() * low.size(), high.size());
  for (std::size_t i = 0; i < polys.size(); ++i) {
    require_same_ring(ring, polys[i].ring());
    auto h = is_homogeneous(polys[i]);
    if (!h || (!h->zero && h->degree != degree)) {
      throw std::invalid_argument("generator p" + std::to_string(i + 1) +
                                  " is not homogeneous of degree " + std::to_string(degree));
    }
    for (std::size_t j = 0; j < low.size(); ++j) {
      const std::size_t row = i * low.size() + j;
      for (const auto& [m, coef] : polys[i].terms()) c(row, *high.index_of(m * low[j])) = coef;
    }
  }
  return c;
}

MatrixSpace dual_obstruction_space(std::span<const Polynomial> polys, const RingPtr& ring,
                                   std::uint32_t degree, std::optional<MonomialBasis> basis) {
  const MonomialBasis high(ring, 2 * degree);
  const MonomialBasis low = basis ? *basis : presentation_basis(ring, degree);
  if (low.degree() != degree) throw std::invalid_argument("basis degree differs from generator degree");

  const RationalMatrix constraints = dual_constraint_matrix(polys, ring, degree);
  const KernelBasis ker = kernel(constraints);

  MatrixSpace space;
  space.unknowns = high.size();
  space.constraints = constraints.rows();
  space.constraint_rank = high.size() - ker.dimension();
  if (ker.dimension() == 0) return space;

  const RrefResult canon = rref(RationalMatrix::from_rows(ker.vectors, high.size()));
  for (std::size_t k = 0; k < canon.rank; ++k) {
    LinearFunctional ell{high, primitive_integer(canon.reduced.row(k))};
    space.matrices.push_back(functional_to_moment(ell, low));
    space.functionals.push_back(std::move(ell));
  }
  return space;
}

std::optional<PsdChoice> pick_psd_element(const MatrixSpace& space, std::size_t budget) {
  const std::size_t dim = space.dimension();
  if (dim == 0) return std::nullopt;
  const std::size_t patterns = dim >= 63 ? budget : std::min<std::size_t>(budget, std::size_t{1} << dim);
  for (std::size_t mask = 0; mask < std::max<std::size_t>(patterns, 1); ++mask) {
    RationalVector params(dim, Rational(1));
    for (std::size_t k = 0; k < dim && k < 63; ++k) {
      if ((mask >> k) & 1U) params[k] = -1;
    }
    RationalMatrix m = space.combine(params);
    if (m.is_zero()) continue;
    if (ldlt_psd(m).psd) return PsdChoice{MomentMatrix{space.matrices[0].basis, std::move(m)}, params};
  }
  return std::nullopt;
}

}  // namespace soscert
