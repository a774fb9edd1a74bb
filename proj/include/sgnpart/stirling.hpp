#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sgnpart/bigint.hpp"
#include "sgnpart/error.hpp"
#include "sgnpart/polynomial.hpp"

namespace sgnpart {

enum class triangle_kind { type_a, type_b };

inline char triangle_kind_letter(triangle_kind k) {
  return k == triangle_kind::type_a ? 'A' : 'B';
}

// Triangular table of Stirling numbers of the second kind, rows memoized
// on demand:
//   type A:  S(n,k)   = S(n-1,k-1) + k      * S(n-1,k),   S(0,0) = 1
//   type B:  S_B(n,k) = S_B(n-1,k-1) + (2k+1) * S_B(n-1,k), S_B(0,0) = 1
// The type-A numbers count partitions of [n] into k nonempty blocks; the
// type-B numbers count signed partitions of [±n] with k pairs of nonzero
// blocks (OEIS A039755). Neither recurrence is taken on faith: the test
// suite pins both against brute-force enumeration and the golden rows.
//
// Rows already built are immutable, so concurrent reads through the const
// interface are safe once a triangle has been extended far enough.
class stirling_triangle {
 public:
  explicit stirling_triangle(triangle_kind kind) : kind_(kind) {
    rows_.push_back({bigint(1)});
  }

  triangle_kind kind() const { return kind_; }

  const std::vector<bigint>& row(int n) {
    if (n < 0) fail(errc::out_of_range, "row index must be non-negative");
    extend(n);
    return rows_[static_cast<std::size_t>(n)];
  }

  const bigint& at(int n, int k) {
    if (n < 0 || k < 0 || k > n)
      fail(errc::out_of_range,
           "need 0 <= k <= n, got n=" + std::to_string(n) +
               " k=" + std::to_string(k));
    extend(n);
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

 private:
  void extend(int n) {
    while (static_cast<int>(rows_.size()) <= n) {
      const auto& prev = rows_.back();
      int pn = static_cast<int>(rows_.size());  // row being built
      std::vector<bigint> row(static_cast<std::size_t>(pn) + 1);
      for (int k = 0; k <= pn; ++k) {
        bigint v;
        if (k > 0) v += prev[static_cast<std::size_t>(k - 1)];
        if (k < pn) {
          std::int64_t mult =
              kind_ == triangle_kind::type_a ? k : 2 * static_cast<std::int64_t>(k) + 1;
          v += bigint(mult) * prev[static_cast<std::size_t>(k)];
        }
        row[static_cast<std::size_t>(k)] = std::move(v);
      }
      rows_.push_back(std::move(row));
    }
  }

  triangle_kind kind_;
  std::vector<std::vector<bigint>> rows_;
};

// Number of partitions of {1,...,n} into k nonempty blocks.
inline bigint stirling2(int n, int k) {
  stirling_triangle t(triangle_kind::type_a);
  return t.at(n, k);
}

// Number of signed partitions of {±1,...,±n} with k pairs of nonzero blocks.
inline bigint stirling2_B(int n, int k) {
  stirling_triangle t(triangle_kind::type_b);
  return t.at(n, k);
}

// x(x-1)...(x-k+1), the degree-k falling factorial; the empty product is 1.
inline polynomial falling_factorial_A(int k) {
  if (k < 0) fail(errc::out_of_range, "degree must be non-negative");
  polynomial out = polynomial::constant(1);
  for (int j = 0; j < k; ++j)
    out *= polynomial(std::vector<bigint>{bigint(-j), bigint(1)});
  return out;
}

// (x-1)(x-3)...(x-2k+1), the degree-k type-B falling factorial.
inline polynomial falling_factorial_B(int k) {
  if (k < 0) fail(errc::out_of_range, "degree must be non-negative");
  polynomial out = polynomial::constant(1);
  for (int j = 1; j <= k; ++j)
    out *= polynomial(std::vector<bigint>{bigint(-(2 * j - 1)), bigint(1)});
  return out;
}

// Direct product evaluations; a second route next to polynomial::eval.
inline bigint falling_factorial_A_at(int k, const bigint& x) {
  bigint out = 1;
  for (int j = 0; j < k; ++j) out *= x - bigint(j);
  return out;
}

inline bigint falling_factorial_B_at(int k, const bigint& x) {
  bigint out = 1;
  for (int j = 1; j <= k; ++j) out *= x - bigint(2 * j - 1);
  return out;
}

// Outcome of expanding a Stirling row against its falling-factorial basis
// and comparing with x^n coefficient by coefficient. Coefficient equality
// proves the identity for every real x, so no sampling is involved; an
// unequal result is reported, not thrown, so callers can print both sides.
struct identity_report {
  int n = 0;
  triangle_kind kind = triangle_kind::type_a;
  bool equal = false;
  polynomial lhs;  // sum over k of S(n,k) * falling factorial k
  polynomial rhs;  // x^n
};

namespace detail {

inline identity_report verify_identity(triangle_kind kind, int n) {
  if (n < 0) fail(errc::out_of_range, "n must be non-negative");
  stirling_triangle t(kind);
  const auto& row = t.row(n);
  polynomial sum;
  polynomial basis = polynomial::constant(1);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      int root = kind == triangle_kind::type_a ? k - 1 : 2 * k - 1;
      basis *= polynomial(std::vector<bigint>{bigint(-root), bigint(1)});
    }
    sum += row[static_cast<std::size_t>(k)] * basis;
  }
  identity_report rep;
  rep.n = n;
  rep.kind = kind;
  rep.lhs = std::move(sum);
  rep.rhs = polynomial::monomial(n);
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

}  // namespace detail

// Checks x^n = sum_k S(n,k) [x]_k as a polynomial identity.
inline identity_report verify_identity_A(int n) {
  return detail::verify_identity(triangle_kind::type_a, n);
}

// Checks x^n = sum_k S_B(n,k) [x]^B_k as a polynomial identity.
inline identity_report verify_identity_B(int n) {
  return detail::verify_identity(triangle_kind::type_b, n);
}

// Expands x^n in the type-B falling-factorial basis by peeling the leading
// term against the monic basis polynomials, highest degree first. The
// coefficients come out of the division alone; that they reproduce the
// type-B triangle row is the identity under test, asserted elsewhere.
inline std::vector<bigint> basis_coefficients_B(int n) {
  if (n < 0) fail(errc::out_of_range, "n must be non-negative");
  std::vector<polynomial> basis;
  basis.reserve(static_cast<std::size_t>(n) + 1);
  basis.push_back(polynomial::constant(1));
  for (int k = 1; k <= n; ++k)
    basis.push_back(basis.back() *
                    polynomial(std::vector<bigint>{bigint(-(2 * k - 1)), bigint(1)}));

  std::vector<bigint> coeffs(static_cast<std::size_t>(n) + 1);
  polynomial remainder = polynomial::monomial(n);
  for (int k = n; k >= 0; --k) {
    if (remainder.degree() > k)
      fail(errc::internal_inconsistency, "division failed to reduce degree");
    coeffs[static_cast<std::size_t>(k)] = remainder.coeff(k);
    remainder -= coeffs[static_cast<std::size_t>(k)] * basis[static_cast<std::size_t>(k)];
  }
  if (!remainder.is_zero())
    fail(errc::internal_inconsistency, "nonzero remainder after basis change");
  return coeffs;
}

// CSV rendering of a triangle: header `n\k,0,...,max_n`, one row per n,
// cells with k > n left empty.
inline std::string triangle_csv(triangle_kind kind, int max_n) {
  stirling_triangle t(kind);
  std::string out = "n\\k";
  for (int k = 0; k <= max_n; ++k) out += ',' + std::to_string(k);
  out += '\n';
  for (int n = 0; n <= max_n; ++n) {
    const auto& row = t.row(n);
    out += std::to_string(n);
    for (int k = 0; k <= max_n; ++k) {
      out += ',';
      if (k <= n) out += row[static_cast<std::size_t>(k)].to_string();
    }
    out += '\n';
  }
  return out;
}

}  // namespace sgnpart
