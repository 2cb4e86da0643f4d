#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "c2lab/monomial.hpp"

namespace c2lab {

// Sparse multivariate polynomial with exact integer coefficients.
// Terms are kept sorted in descending lexicographic order and never
// carry a zero coefficient. nvars is the ambient variable count; a
// polynomial may mention fewer variables than its ambient space.
class SparsePoly {
public:
    struct Term {
        Monomial mon;
        mpz_class coef;
    };

    SparsePoly() = default;
    explicit SparsePoly(int nvars) : nvars_(nvars) {}

    static SparsePoly constant(int nvars, const mpz_class& c);
    static SparsePoly variable(int nvars, int v);
    // from an unsorted term list (duplicates combined, zeros dropped)
    static SparsePoly from_terms(int nvars, std::vector<Term> terms);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading() const;

    bool operator==(const SparsePoly& o) const;

    SparsePoly operator-() const;
    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator-(const SparsePoly& o) const;
    SparsePoly operator*(const SparsePoly& o) const;
    SparsePoly mul_term(const Monomial& m, const mpz_class& c) const;

    // exact division; throws std::domain_error if the division leaves
    // a remainder (callers rely on Bareiss / square-root divisibility)
    SparsePoly div_exact(const SparsePoly& d) const;

    // exact integer square root; empty if the polynomial is not a
    // perfect square in Z[x]. The root returned has a positive
    // leading coefficient.
    std::optional<SparsePoly> sqrt_exact() const;

    unsigned total_degree() const;       // 0 for the zero polynomial
    unsigned degree_in(int v) const;
    bool is_homogeneous() const;
    bool mentions(int v) const { return degree_in(v) > 0; }

    // coefficient of v^e, as a polynomial not mentioning v
    SparsePoly coeff_of(int v, unsigned e) const;
    // substitute v := 0 / v := 1 (result keeps the ambient space)
    SparsePoly subst_zero(int v) const;
    SparsePoly subst_one(int v) const;

    // gcd of coefficients, positive; 0 for the zero polynomial
    mpz_class content() const;
    // negate if the lex-leading coefficient is negative
    SparsePoly canonical_sign() const;

    mpz_class eval(const std::vector<mpz_class>& point) const;

    // one term per line: "coeff x1^a1 x2^a2 ..." (1-based variables)
    std::string text() const;

private:
    int nvars_ = 0;
    std::vector<Term> terms_;

    void normalize();  // sort desc, combine, drop zeros
};

}  // namespace c2lab
