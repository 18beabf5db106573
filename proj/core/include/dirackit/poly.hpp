#pragma once

#include "dirackit/rational.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace dirackit {

/// Exponent multi-index of a monomial x_0^e_0 ... x_{n-1}^e_{n-1}.
using Exponent = std::vector<std::uint32_t>;

/// Graded lexicographic order: higher total degree first, ties broken lexicographically
/// (larger exponent of x_0 first). Only affects iteration/printing order.
struct GrlexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Multivariate polynomial with exact rational coefficients in a fixed number of variables.
///
/// The term map never stores a zero coefficient, so structural equality is polynomial
/// equality. Binary operations require both operands to have the same number of variables.
class Poly {
public:
    using TermMap = std::map<Exponent, Rational, GrlexGreater>;

    Poly() = default;
    explicit Poly(std::size_t num_vars)
      : num_vars_(num_vars) {}

    static Poly constant(std::size_t num_vars, const Rational& value);
    static Poly variable(std::size_t num_vars, std::size_t index);
    static Poly monomial(std::size_t num_vars, Exponent exponent, const Rational& coeff = 1);

    [[nodiscard]] std::size_t num_vars() const { return num_vars_; }
    [[nodiscard]] const TermMap& terms() const { return terms_; }
    [[nodiscard]] std::size_t term_count() const { return terms_.size(); }

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const;
    [[nodiscard]] Rational constant_term() const;
    [[nodiscard]] Rational coefficient(const Exponent& exponent) const;
    /// Total degree; -1 for the zero polynomial.
    [[nodiscard]] int total_degree() const;
    /// Degree in a single variable; -1 for the zero polynomial.
    [[nodiscard]] int degree_in(std::size_t var) const;

    /// Adds coeff * x^exponent, keeping the canonical form.
    void add_term(const Exponent& exponent, const Rational& coeff);

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Poly& other);
    Poly& operator*=(const Rational& scalar);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    Poly operator-() const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
    }

    /// Partial derivative with respect to x_var.
    [[nodiscard]] Poly derivative(std::size_t var) const;

    [[nodiscard]] Rational evaluate(std::span<const Rational> point) const;
    [[nodiscard]] double evaluate(std::span<const double> point) const;

    /// Substitutes x_i := subs[i]. All substitutes must share one variable count,
    /// which becomes the variable count of the result.
    [[nodiscard]] Poly compose(std::span<const Poly> subs) const;
    /// Same, with the target ring given explicitly (needed when there are no variables).
    [[nodiscard]] Poly compose(std::span<const Poly> subs, std::size_t target_vars) const;

    /// Re-embeds into a ring with more variables (new variables appended, unused).
    [[nodiscard]] Poly extend(std::size_t num_vars) const;

    /// Human-readable form using x0, x1, ... (or the given names), grlex order.
    [[nodiscard]] std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    void check_same_ring(const Poly& other) const;

    std::size_t num_vars_ = 0;
    TermMap terms_;
};

Poly pow(const Poly& base, unsigned exponent);

} // namespace dirackit
