#ifndef ZKCMP_COMMIT_MERKLE_HPP
#define ZKCMP_COMMIT_MERKLE_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "zkcmp/bytes.hpp"

namespace zkcmp::commit {

using Digest = std::array<uint8_t, 32>;

Digest sha3_256(std::span<const uint8_t> data);

/// Decommitment for one leaf: sibling digests ordered bottom-up.
struct MerklePath {
    uint32_t leaf_index = 0;
    std::vector<Digest> siblings;

    void serialize(std::vector<uint8_t>& out) const;
    static MerklePath deserialize(ByteReader& reader, size_t sibling_count);
};

/// Binary SHA3-256 hash tree with domain-separated node hashing:
/// leaves are SHA3-256(0x00 || bytes), internal nodes
/// SHA3-256(0x01 || left || right). A non-power-of-two leaf count is padded
/// by repeating the last leaf hash.
class MerkleTree {
public:
    explicit MerkleTree(const std::vector<std::vector<uint8_t>>& leaves);

    const Digest& root() const { return levels_.back()[0]; }
    size_t leaf_count() const { return leaf_count_; }
    /// Number of siblings on any path (tree height).
    size_t height() const { return levels_.size() - 1; }
    const std::vector<std::vector<Digest>>& levels() const { return levels_; }

    MerklePath open(size_t index) const;

private:
    size_t leaf_count_;
    std::vector<std::vector<Digest>> levels_;  // levels_[0] = padded leaf hashes
};

bool merkle_verify(const Digest& root, std::span<const uint8_t> leaf, const MerklePath& path);

}  // namespace zkcmp::commit

#endif
