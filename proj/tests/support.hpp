// Random generators and independent oracles shared by the test binaries.
#pragma once

#include "soscert/builtins.hpp"
#include "soscert/certify.hpp"
#include "soscert/exactla.hpp"
#include "soscert/gram.hpp"
#include "soscert/groebner.hpp"
#include "soscert/parser.hpp"
#include "soscert/ring.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace testing {

using namespace soscert;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }

  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return range(0, 1) == 1; }

  Rational rational(long num_bound = 9, long den_bound = 5) {
    Rational q(Integer(range(-num_bound, num_bound)), Integer(range(1, den_bound)));
    q.canonicalize();
    return q;
  }
  Rational nonzero_rational(long num_bound = 9, long den_bound = 5) {
    for (;;) {
      Rational q = rational(num_bound, den_bound);
      if (q != 0) return q;
    }
  }

  Monomial monomial(std::size_t n, std::uint32_t max_degree) {
    std::vector<std::uint32_t> e(n, 0);
    const auto d = static_cast<std::uint32_t>(range(0, max_degree));
    for (std::uint32_t k = 0; k < d; ++k) ++e[static_cast<std::size_t>(range(0, static_cast<long>(n) - 1))];
    return Monomial(e);
  }
  Monomial monomial_of_degree(std::size_t n, std::uint32_t degree) {
    std::vector<std::uint32_t> e(n, 0);
    for (std::uint32_t k = 0; k < degree; ++k) ++e[static_cast<std::size_t>(range(0, static_cast<long>(n) - 1))];
    return Monomial(e);
  }

  Polynomial poly(const RingPtr& ring, std::size_t max_terms, std::uint32_t max_degree) {
    Polynomial::TermMap t;
    const auto terms = static_cast<std::size_t>(range(0, static_cast<long>(max_terms)));
    for (std::size_t k = 0; k < terms; ++k) t[monomial(ring->size(), max_degree)] += rational();
    return Polynomial(ring, std::move(t));
  }
  Polynomial homogeneous(const RingPtr& ring, std::uint32_t degree, std::size_t max_terms,
                         long coeff_bound = 9, long den_bound = 5) {
    Polynomial::TermMap t;
    const auto terms = static_cast<std::size_t>(range(1, static_cast<long>(max_terms)));
    for (std::size_t k = 0; k < terms; ++k) {
      t[monomial_of_degree(ring->size(), degree)] += rational(coeff_bound, den_bound);
    }
    return Polynomial(ring, std::move(t));
  }

  RationalMatrix matrix(std::size_t rows, std::size_t cols, int zero_percent = 30) {
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (range(1, 100) > zero_percent) m(i, j) = rational();
      }
    }
    return m;
  }
  RationalMatrix symmetric(std::size_t n, int zero_percent = 30) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        if (range(1, 100) > zero_percent) m(i, j) = m(j, i) = rational();
      }
    }
    return m;
  }
  RationalVector vector(std::size_t n) {
    RationalVector v(n);
    for (auto& x : v) x = rational();
    return v;
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    std::shuffle(v.begin(), v.end(), rng_);
  }

 private:
  std::mt19937_64 rng_;
};

inline bool lowest_terms(const Rational& q) {
  return q.get_den() > 0 && gcd(q.get_num(), q.get_den()) == 1;
}

inline bool all_lowest_terms(const Polynomial& p) {
  for (const auto& [m, c] : p.terms()) {
    if (c == 0 || !lowest_terms(c)) return false;
  }
  return true;
}

// Dense exponent-keyed arithmetic written independently of Polynomial.
using NaivePoly = std::map<std::vector<std::uint32_t>, Rational>;

inline NaivePoly naive(const Polynomial& p) {
  NaivePoly out;
  for (const auto& [m, c] : p.terms()) out[m.exponents()] = c;
  return out;
}

inline NaivePoly naive_mul(const NaivePoly& a, const NaivePoly& b) {
  NaivePoly out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      std::vector<std::uint32_t> e(ma.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ma[i] + mb[i];
      out[e] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline NaivePoly naive_add(NaivePoly a, const NaivePoly& b) {
  for (const auto& [m, c] : b) a[m] += c;
  std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
  return a;
}

// a > b iff the last nonzero entry of a - b is negative (same degree).
inline int degrevlex_oracle(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;) {
    const long diff = static_cast<long>(a[i]) - static_cast<long>(b[i]);
    if (diff != 0) return diff < 0 ? 1 : -1;
  }
  return 0;
}

inline int sign(std::strong_ordering o) { return o < 0 ? -1 : o > 0 ? 1 : 0; }

// Rank by plain Gaussian elimination on a copy; no pivot bookkeeping shared
// with the library.
inline std::size_t oracle_rank(RationalMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(r, k), m(p, k));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(i, k) -= f * m(r, k);
    }
    ++r;
  }
  return r;
}

inline SosInstance builtin(std::string_view name) {
  return make_instance(std::string(name), parse_instance(*builtin_instance_text(name)));
}

}  // namespace testing
