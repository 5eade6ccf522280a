#include "zkcmp/commit/merkle.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace zkcmp::commit {

Digest sha3_256(std::span<const uint8_t> data) {
    Digest out{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha3_256(), nullptr) != 1 ||
        len != out.size()) {
        throw std::runtime_error("SHA3-256 failed");
    }
    return out;
}

namespace {

Digest hash_leaf(std::span<const uint8_t> leaf) {
    std::vector<uint8_t> buf;
    buf.reserve(leaf.size() + 1);
    buf.push_back(0x00);
    buf.insert(buf.end(), leaf.begin(), leaf.end());
    return sha3_256(buf);
}

Digest hash_internal(const Digest& left, const Digest& right) {
    std::array<uint8_t, 65> buf;
    buf[0] = 0x01;
    std::copy(left.begin(), left.end(), buf.begin() + 1);
    std::copy(right.begin(), right.end(), buf.begin() + 33);
    return sha3_256(buf);
}

}  // namespace

MerkleTree::MerkleTree(const std::vector<std::vector<uint8_t>>& leaves)
    : leaf_count_(leaves.size()) {
    if (leaves.empty()) throw std::invalid_argument("merkle tree needs at least one leaf");

    std::vector<Digest> level;
    level.reserve(leaves.size());
    for (const auto& leaf : leaves) level.push_back(hash_leaf(leaf));
    while ((level.size() & (level.size() - 1)) != 0) {
        level.push_back(level.back());
    }
    levels_.push_back(std::move(level));
    while (levels_.back().size() > 1) {
        const auto& prev = levels_.back();
        std::vector<Digest> next;
        next.reserve(prev.size() / 2);
        for (size_t i = 0; i < prev.size(); i += 2) {
            next.push_back(hash_internal(prev[i], prev[i + 1]));
        }
        levels_.push_back(std::move(next));
    }
}

MerklePath MerkleTree::open(size_t index) const {
    if (index >= leaf_count_) throw std::out_of_range("merkle leaf index out of range");
    MerklePath path;
    path.leaf_index = static_cast<uint32_t>(index);
    path.siblings.reserve(height());
    size_t pos = index;
    for (size_t lvl = 0; lvl + 1 < levels_.size(); ++lvl) {
        path.siblings.push_back(levels_[lvl][pos ^ 1]);
        pos >>= 1;
    }
    return path;
}

bool merkle_verify(const Digest& root, std::span<const uint8_t> leaf, const MerklePath& path) {
    Digest node = hash_leaf(leaf);
    size_t pos = path.leaf_index;
    for (const Digest& sibling : path.siblings) {
        node = (pos & 1) ? hash_internal(sibling, node) : hash_internal(node, sibling);
        pos >>= 1;
    }
    return node == root;
}

void MerklePath::serialize(std::vector<uint8_t>& out) const {
    write_u32_be(out, leaf_index);
    for (const Digest& d : siblings) out.insert(out.end(), d.begin(), d.end());
}

MerklePath MerklePath::deserialize(ByteReader& reader, size_t sibling_count) {
    MerklePath path;
    path.leaf_index = reader.u32_be();
    path.siblings.reserve(sibling_count);
    for (size_t i = 0; i < sibling_count; ++i) {
        auto bytes = reader.take(32);
        Digest d;
        std::copy(bytes.begin(), bytes.end(), d.begin());
        path.siblings.push_back(d);
    }
    return path;
}

}  // namespace zkcmp::commit
