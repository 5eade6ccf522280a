#ifndef ZKCMP_ALGEBRA_FIELD_HPP
#define ZKCMP_ALGEBRA_FIELD_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

#include <gmpxx.h>

namespace zkcmp::algebra {

enum class FieldTag : uint8_t { StarkQ, SnarkR, BnBaseP };

/// Identity of one of the three prime fields used by the proof systems.
/// Instances are process-wide singletons; elements compare field identity
/// by address.
class FieldId {
public:
    FieldId(const FieldId&) = delete;
    FieldId& operator=(const FieldId&) = delete;

    const mpz_class& modulus() const noexcept { return modulus_; }
    FieldTag tag() const noexcept { return tag_; }
    std::string_view label() const noexcept { return label_; }

    bool operator==(const FieldId& other) const noexcept { return this == &other; }

    /// 32-bit STARK field, q = 3*2^30 + 1.
    static const FieldId& stark_q();
    /// BN254 scalar field (group order r).
    static const FieldId& snark_r();
    /// BN254 base field (curve coordinate prime p).
    static const FieldId& bn_base_p();

private:
    FieldId(const char* modulus_dec, FieldTag tag, std::string_view label);

    mpz_class modulus_;
    FieldTag tag_;
    std::string_view label_;
};

/// An element of a fixed prime field, always held reduced in [0, modulus).
/// Arithmetic between elements of different fields throws
/// std::invalid_argument; inversion of zero throws std::domain_error.
class FieldElement {
public:
    FieldElement(mpz_class value, const FieldId& field);

    static FieldElement zero(const FieldId& field) { return {0, field}; }
    static FieldElement one(const FieldId& field) { return {1, field}; }
    static FieldElement from_u64(uint64_t v, const FieldId& field);

    const mpz_class& value() const noexcept { return value_; }
    const FieldId& field() const noexcept { return *field_; }
    bool is_zero() const noexcept { return value_ == 0; }

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator-() const;

    FieldElement inv() const;
    FieldElement pow(const mpz_class& exponent) const;

    bool operator==(const FieldElement& rhs) const noexcept {
        return field_ == rhs.field_ && value_ == rhs.value_;
    }
    bool operator!=(const FieldElement& rhs) const noexcept { return !(*this == rhs); }

    /// Big-endian serialization, zero-padded to `width` bytes.
    /// Throws std::invalid_argument if the value does not fit.
    void to_bytes_be(std::span<uint8_t> out) const;
    std::array<uint8_t, 32> to_bytes32() const;
    uint64_t to_u64() const;

    static FieldElement from_bytes_be(std::span<const uint8_t> bytes, const FieldId& field);

private:
    struct Reduced {};
    FieldElement(Reduced, mpz_class value, const FieldId* field)
        : value_(std::move(value)), field_(field) {}

    void require_same_field(const FieldElement& rhs) const;

    mpz_class value_;
    const FieldId* field_;
};

}  // namespace zkcmp::algebra

#endif
