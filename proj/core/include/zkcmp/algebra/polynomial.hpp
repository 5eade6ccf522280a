#ifndef ZKCMP_ALGEBRA_POLYNOMIAL_HPP
#define ZKCMP_ALGEBRA_POLYNOMIAL_HPP

#include <span>
#include <utility>
#include <vector>

#include "zkcmp/algebra/field.hpp"

namespace zkcmp::algebra {

/// Univariate polynomial over one of the prime fields.
/// Coefficients are stored lowest degree first, with trailing zeros trimmed;
/// the zero polynomial has no coefficients and degree() == -1.
class Polynomial {
public:
    explicit Polynomial(const FieldId& field) : field_(&field) {}
    Polynomial(std::vector<FieldElement> coefficients, const FieldId& field);

    static Polynomial constant(FieldElement c);

    int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
    bool is_zero() const noexcept { return coefficients_.empty(); }
    const FieldId& field() const noexcept { return *field_; }
    const std::vector<FieldElement>& coefficients() const noexcept { return coefficients_; }

    /// Coefficient of x^k; zero beyond the degree.
    FieldElement coeff(size_t k) const;

    FieldElement eval(const FieldElement& x) const;
    std::vector<FieldElement> eval_on_domain(std::span<const FieldElement> xs) const;

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial scaled(const FieldElement& c) const;

    /// p(s*x): multiplies coefficient k by s^k.
    Polynomial scale_argument(const FieldElement& s) const;

    /// Euclidean division: numerator = quotient * denominator + remainder,
    /// with degree(remainder) < degree(denominator).
    /// Throws std::domain_error when the denominator is zero.
    static std::pair<Polynomial, Polynomial> divrem(const Polynomial& numerator,
                                                    const Polynomial& denominator);

    /// Unique polynomial of degree < n through n points with distinct
    /// x-coordinates. Throws std::invalid_argument on duplicates.
    static Polynomial interpolate(std::span<const FieldElement> xs,
                                  std::span<const FieldElement> ys);

    /// Monic product of (x - root) over all roots; the empty product is 1.
    static Polynomial vanishing(std::span<const FieldElement> roots, const FieldId& field);

    bool operator==(const Polynomial& rhs) const;

private:
    void trim();

    std::vector<FieldElement> coefficients_;
    const FieldId* field_;
};

}  // namespace zkcmp::algebra

#endif
