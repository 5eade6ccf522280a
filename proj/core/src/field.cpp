#include "zkcmp/algebra/field.hpp"

#include <stdexcept>
#include <string>

namespace zkcmp::algebra {

FieldId::FieldId(const char* modulus_dec, FieldTag tag, std::string_view label)
    : modulus_(modulus_dec), tag_(tag), label_(label) {}

const FieldId& FieldId::stark_q() {
    static const FieldId id("3221225473", FieldTag::StarkQ, "stark-q");
    return id;
}

const FieldId& FieldId::snark_r() {
    static const FieldId id(
        "21888242871839275222246405745257275088548364400416034343698204186575808495617",
        FieldTag::SnarkR, "snark-r");
    return id;
}

const FieldId& FieldId::bn_base_p() {
    static const FieldId id(
        "21888242871839275222246405745257275088696311157297823662689037894645226208583",
        FieldTag::BnBaseP, "bn-base-p");
    return id;
}

FieldElement::FieldElement(mpz_class value, const FieldId& field)
    : value_(std::move(value)), field_(&field) {
    mpz_mod(value_.get_mpz_t(), value_.get_mpz_t(), field.modulus().get_mpz_t());
}

FieldElement FieldElement::from_u64(uint64_t v, const FieldId& field) {
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return {std::move(z), field};
}

void FieldElement::require_same_field(const FieldElement& rhs) const {
    if (field_ != rhs.field_) {
        throw std::invalid_argument(std::string("field mismatch: ") +
                                    std::string(field_->label()) + " vs " +
                                    std::string(rhs.field_->label()));
    }
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    require_same_field(rhs);
    mpz_class v = value_ + rhs.value_;
    if (v >= field_->modulus()) v -= field_->modulus();
    return {Reduced{}, std::move(v), field_};
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    require_same_field(rhs);
    mpz_class v = value_ - rhs.value_;
    if (v < 0) v += field_->modulus();
    return {Reduced{}, std::move(v), field_};
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    require_same_field(rhs);
    mpz_class v = value_ * rhs.value_;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), field_->modulus().get_mpz_t());
    return {Reduced{}, std::move(v), field_};
}

FieldElement FieldElement::operator-() const {
    mpz_class v = value_ == 0 ? mpz_class(0) : mpz_class(field_->modulus() - value_);
    return {Reduced{}, std::move(v), field_};
}

FieldElement FieldElement::inv() const {
    if (is_zero()) {
        throw std::domain_error("division by zero in " + std::string(field_->label()));
    }
    mpz_class v;
    if (mpz_invert(v.get_mpz_t(), value_.get_mpz_t(), field_->modulus().get_mpz_t()) == 0) {
        throw std::domain_error("non-invertible element");  // unreachable for prime modulus
    }
    return {Reduced{}, std::move(v), field_};
}

FieldElement FieldElement::pow(const mpz_class& exponent) const {
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    mpz_class v;
    mpz_powm(v.get_mpz_t(), value_.get_mpz_t(), exponent.get_mpz_t(),
             field_->modulus().get_mpz_t());
    return {Reduced{}, std::move(v), field_};
}

void FieldElement::to_bytes_be(std::span<uint8_t> out) const {
    const size_t bytes_needed = (mpz_sizeinbase(value_.get_mpz_t(), 2) + 7) / 8;
    if (value_ != 0 && bytes_needed > out.size()) {
        throw std::invalid_argument("value does not fit in " + std::to_string(out.size()) +
                                    " bytes");
    }
    std::fill(out.begin(), out.end(), uint8_t{0});
    size_t written = 0;
    mpz_export(out.data() + (out.size() - bytes_needed), &written, 1, 1, 1, 0,
               value_.get_mpz_t());
}

std::array<uint8_t, 32> FieldElement::to_bytes32() const {
    std::array<uint8_t, 32> out{};
    to_bytes_be(out);
    return out;
}

uint64_t FieldElement::to_u64() const {
    if (mpz_sizeinbase(value_.get_mpz_t(), 2) > 64) {
        throw std::invalid_argument("value does not fit in 64 bits");
    }
    uint64_t out = 0;
    mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, value_.get_mpz_t());
    return out;
}

FieldElement FieldElement::from_bytes_be(std::span<const uint8_t> bytes, const FieldId& field) {
    mpz_class z;
    if (!bytes.empty()) {
        mpz_import(z.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
    }
    return {std::move(z), field};
}

}  // namespace zkcmp::algebra
