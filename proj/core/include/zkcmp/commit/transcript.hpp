#ifndef ZKCMP_COMMIT_TRANSCRIPT_HPP
#define ZKCMP_COMMIT_TRANSCRIPT_HPP

#include <cstdint>
#include <string_view>

#include "zkcmp/algebra/field.hpp"
#include "zkcmp/commit/merkle.hpp"

namespace zkcmp::commit {

/// Fiat-Shamir transcript: a running SHA3-256 state evolved as
/// state' = SHA3-256(state || label || data). Labels namespace each protocol
/// message. Challenge extraction interprets the state as a big-endian
/// integer, reduces it, and then self-absorbs the label "chal" so successive
/// draws differ. Copyable value; replaying the same (label, data) sequence
/// reproduces the same challenge stream.
class Transcript {
public:
    Transcript() = default;

    void absorb(std::string_view label, std::span<const uint8_t> data);

    algebra::FieldElement challenge_field(const algebra::FieldId& field);

    /// Uniform-ish index in [0, bound); bound must be >= 1.
    uint64_t challenge_index(uint64_t bound);

    const Digest& state() const { return state_; }
    uint64_t absorb_count() const { return absorb_count_; }

private:
    void advance();

    Digest state_{};
    uint64_t absorb_count_ = 0;
};

}  // namespace zkcmp::commit

#endif
