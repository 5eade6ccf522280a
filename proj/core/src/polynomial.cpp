#include "zkcmp/algebra/polynomial.hpp"

#include <stdexcept>

namespace zkcmp::algebra {

namespace {

// Raw-coefficient workspace for the O(n^2) loops. Products are accumulated
// unreduced (mpz_addmul) and reduced once per output coefficient.
std::vector<mpz_class> raw_coeffs(const Polynomial& p) {
    std::vector<mpz_class> out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) out.push_back(c.value());
    return out;
}

std::vector<FieldElement> into_elements(std::vector<mpz_class> raw, const FieldId& field) {
    std::vector<FieldElement> out;
    out.reserve(raw.size());
    for (auto& v : raw) out.emplace_back(std::move(v), field);
    return out;
}

}  // namespace

Polynomial::Polynomial(std::vector<FieldElement> coefficients, const FieldId& field)
    : coefficients_(std::move(coefficients)), field_(&field) {
    for (const auto& c : coefficients_) {
        if (!(c.field() == field)) throw std::invalid_argument("coefficient field mismatch");
    }
    trim();
}

Polynomial Polynomial::constant(FieldElement c) {
    const FieldId& f = c.field();
    return {{std::move(c)}, f};
}

void Polynomial::trim() {
    while (!coefficients_.empty() && coefficients_.back().is_zero()) {
        coefficients_.pop_back();
    }
}

FieldElement Polynomial::coeff(size_t k) const {
    if (k < coefficients_.size()) return coefficients_[k];
    return FieldElement::zero(*field_);
}

FieldElement Polynomial::eval(const FieldElement& x) const {
    if (coefficients_.empty()) return FieldElement::zero(*field_);
    const mpz_class& m = field_->modulus();
    mpz_class acc = coefficients_.back().value();
    for (size_t i = coefficients_.size() - 1; i-- > 0;) {
        acc *= x.value();
        acc += coefficients_[i].value();
        mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
    }
    return {std::move(acc), *field_};
}

std::vector<FieldElement> Polynomial::eval_on_domain(std::span<const FieldElement> xs) const {
    std::vector<FieldElement> out;
    out.reserve(xs.size());
    if (coefficients_.empty()) {
        for (size_t i = 0; i < xs.size(); ++i) out.push_back(FieldElement::zero(*field_));
        return out;
    }
    const mpz_class& m = field_->modulus();
    mpz_class acc;
    for (const auto& x : xs) {
        acc = coefficients_.back().value();
        for (size_t i = coefficients_.size() - 1; i-- > 0;) {
            acc *= x.value();
            acc += coefficients_[i].value();
            mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
        }
        out.emplace_back(acc, *field_);
    }
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    if (field_ != rhs.field_) throw std::invalid_argument("polynomial field mismatch");
    const size_t n = std::max(coefficients_.size(), rhs.coefficients_.size());
    std::vector<FieldElement> out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) out.push_back(coeff(i) + rhs.coeff(i));
    return {std::move(out), *field_};
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    if (field_ != rhs.field_) throw std::invalid_argument("polynomial field mismatch");
    const size_t n = std::max(coefficients_.size(), rhs.coefficients_.size());
    std::vector<FieldElement> out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) out.push_back(coeff(i) - rhs.coeff(i));
    return {std::move(out), *field_};
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (field_ != rhs.field_) throw std::invalid_argument("polynomial field mismatch");
    if (is_zero() || rhs.is_zero()) return Polynomial(*field_);
    const auto a = raw_coeffs(*this);
    const auto b = raw_coeffs(rhs);
    std::vector<mpz_class> acc(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) {
        for (size_t j = 0; j < b.size(); ++j) {
            mpz_addmul(acc[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    return {into_elements(std::move(acc), *field_), *field_};
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
    std::vector<FieldElement> out;
    out.reserve(coefficients_.size());
    for (const auto& k : coefficients_) out.push_back(k * c);
    return {std::move(out), *field_};
}

Polynomial Polynomial::scale_argument(const FieldElement& s) const {
    std::vector<FieldElement> out;
    out.reserve(coefficients_.size());
    FieldElement power = FieldElement::one(*field_);
    for (const auto& k : coefficients_) {
        out.push_back(k * power);
        power = power * s;
    }
    return {std::move(out), *field_};
}

std::pair<Polynomial, Polynomial> Polynomial::divrem(const Polynomial& numerator,
                                                     const Polynomial& denominator) {
    if (!(numerator.field() == denominator.field())) {
        throw std::invalid_argument("polynomial field mismatch");
    }
    if (denominator.is_zero()) throw std::domain_error("polynomial division by zero");
    const FieldId& field = numerator.field();
    if (numerator.degree() < denominator.degree()) {
        return {Polynomial(field), numerator};
    }

    const mpz_class& m = field.modulus();
    std::vector<mpz_class> rem = raw_coeffs(numerator);
    const auto den = raw_coeffs(denominator);
    const size_t dd = den.size() - 1;
    const FieldElement lead_inv = denominator.coefficients().back().inv();

    std::vector<mpz_class> quot(rem.size() - dd, mpz_class(0));
    mpz_class factor;
    for (size_t k = rem.size(); k-- > dd;) {
        // eliminate rem[k]; lower rem entries stay unreduced until the end
        const size_t qi = k - dd;
        factor = rem[k] * lead_inv.value();
        mpz_mod(factor.get_mpz_t(), factor.get_mpz_t(), m.get_mpz_t());
        if (factor == 0) continue;
        quot[qi] = factor;
        for (size_t j = 0; j + 1 < den.size(); ++j) {
            mpz_submul(rem[qi + j].get_mpz_t(), factor.get_mpz_t(), den[j].get_mpz_t());
        }
    }
    rem.resize(dd);
    return {Polynomial(into_elements(std::move(quot), field), field),
            Polynomial(into_elements(std::move(rem), field), field)};
}

Polynomial Polynomial::interpolate(std::span<const FieldElement> xs,
                                   std::span<const FieldElement> ys) {
    if (xs.size() != ys.size() || xs.empty()) {
        throw std::invalid_argument("interpolation needs equal, nonzero point counts");
    }
    const FieldId& field = xs[0].field();
    const mpz_class& m = field.modulus();
    const size_t n = xs.size();

    // Master polynomial M(x) = prod (x - x_i), built incrementally.
    std::vector<mpz_class> master(n + 1, mpz_class(0));
    master[0] = 1;
    for (size_t i = 0; i < n; ++i) {
        if (!(xs[i].field() == field) || !(ys[i].field() == field)) {
            throw std::invalid_argument("interpolation point field mismatch");
        }
        const mpz_class neg_x = (-xs[i]).value();
        for (size_t k = i + 1; k-- > 0;) {
            // master[k+1] += master[k]; master[k] *= -x_i
            master[k + 1] += master[k];
            if (master[k + 1] >= m) master[k + 1] -= m;
            master[k] *= neg_x;
            mpz_mod(master[k].get_mpz_t(), master[k].get_mpz_t(), m.get_mpz_t());
        }
    }

    std::vector<mpz_class> acc(n, mpz_class(0));
    std::vector<mpz_class> basis(n, mpz_class(0));
    mpz_class denom, weight;
    for (size_t i = 0; i < n; ++i) {
        // basis = M / (x - x_i) by synthetic division, evaluated top-down.
        const mpz_class& xi = xs[i].value();
        basis[n - 1] = master[n];
        for (size_t k = n - 1; k-- > 0;) {
            basis[k] = basis[k + 1] * xi + master[k + 1];
            mpz_mod(basis[k].get_mpz_t(), basis[k].get_mpz_t(), m.get_mpz_t());
        }
        // denom = basis(x_i) = prod_{j != i} (x_i - x_j)
        denom = basis[n - 1];
        for (size_t k = n - 1; k-- > 0;) {
            denom *= xi;
            denom += basis[k];
            mpz_mod(denom.get_mpz_t(), denom.get_mpz_t(), m.get_mpz_t());
        }
        if (denom == 0) throw std::invalid_argument("duplicate x-coordinate in interpolation");
        FieldElement w = FieldElement(denom, field).inv() * ys[i];
        weight = w.value();
        for (size_t k = 0; k < n; ++k) {
            mpz_addmul(acc[k].get_mpz_t(), basis[k].get_mpz_t(), weight.get_mpz_t());
        }
    }
    return {into_elements(std::move(acc), field), field};
}

Polynomial Polynomial::vanishing(std::span<const FieldElement> roots, const FieldId& field) {
    const mpz_class& m = field.modulus();
    std::vector<mpz_class> coeffs(roots.size() + 1, mpz_class(0));
    coeffs[0] = 1;
    for (size_t i = 0; i < roots.size(); ++i) {
        if (!(roots[i].field() == field)) throw std::invalid_argument("root field mismatch");
        const mpz_class neg_r = (-roots[i]).value();
        for (size_t k = i + 1; k-- > 0;) {
            coeffs[k + 1] += coeffs[k];
            if (coeffs[k + 1] >= m) coeffs[k + 1] -= m;
            coeffs[k] *= neg_r;
            mpz_mod(coeffs[k].get_mpz_t(), coeffs[k].get_mpz_t(), m.get_mpz_t());
        }
    }
    return {into_elements(std::move(coeffs), field), field};
}

bool Polynomial::operator==(const Polynomial& rhs) const {
    return field_ == rhs.field_ && coefficients_ == rhs.coefficients_;
}

}  // namespace zkcmp::algebra
