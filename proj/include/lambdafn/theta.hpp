#pragma once

// Block permutations: bijections of A^k, A = {0,...,s-1}, applied blockwise to
// digit expansions. Stored as a dense table indexed by the radix-s encoding of
// the block (first digit most significant), so table order is lexicographic
// block order and application is one lookup.

#include "lambdafn/digits.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lambdafn {

using Block = Digits;

std::uint64_t encode_block(unsigned base, const Block& block);
Block decode_block(unsigned base, unsigned block_size, std::uint64_t index);

// Thrown by table validation; `kind` distinguishes the failure.
class TableError : public std::invalid_argument {
public:
    enum class Kind { OutOfRangeDigit, WrongLength, DuplicatePreimage, DuplicateImage, MissingBlock };
    TableError(Kind kind, const std::string& message)
        : std::invalid_argument(message), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

enum class Linearity : std::uint8_t { Identity, Complement, Other };

class BlockPermutation {
public:
    // Validates that `pairs` is a total bijection of A^k.
    static BlockPermutation from_table(unsigned base, unsigned block_size,
                                       const std::vector<std::pair<Block, Block>>& pairs);
    static BlockPermutation identity(unsigned base, unsigned block_size);

    // From images in preimage-index order; sizes and bijectivity validated.
    static BlockPermutation from_images(unsigned base, unsigned block_size,
                                        std::vector<std::uint32_t> images);

    unsigned base() const { return base_; }
    unsigned block_size() const { return block_size_; }
    std::uint64_t table_size() const { return table_.size(); }

    Block apply(const Block& block) const;
    std::uint32_t apply_index(std::uint32_t index) const { return table_[index]; }

    // compose(q) applies q first, then this: (p.compose(q))(b) = p(q(b)).
    BlockPermutation compose(const BlockPermutation& other) const;
    BlockPermutation inverse() const;

    bool operator==(const BlockPermutation& o) const {
        return base_ == o.base_ && block_size_ == o.block_size_ && table_ == o.table_;
    }

private:
    BlockPermutation(unsigned base, unsigned block_size, std::vector<std::uint32_t> table)
        : base_(base), block_size_(block_size), table_(std::move(table)) {}

    unsigned base_;
    unsigned block_size_;
    std::vector<std::uint32_t> table_;
};

// All blocks b with p(b) = b, in lexicographic order.
std::vector<Block> fixed_blocks(const BlockPermutation& p);

// Identity <=> p(b) = b everywhere (y = x); Complement <=> p is the digitwise
// map a -> s-1-a everywhere (y = 1-x on [0,1]); Other otherwise.
Linearity classify_linearity(const BlockPermutation& p);

// Streams all (s^k)! permutations, identity first, images in lexicographic
// order. Guarded by a cap on s^k (default 8, i.e. at most 8! = 40320 tables);
// exceeding it throws std::length_error.
class PermutationEnumerator {
public:
    PermutationEnumerator(unsigned base, unsigned block_size, std::uint64_t cap = 8);
    std::optional<BlockPermutation> next();

private:
    unsigned base_;
    unsigned block_size_;
    std::vector<std::uint32_t> images_;
    bool done_;
};

BigInt factorial(std::uint64_t n);

// Config syntax, one mapping per line after the two header lines:
//
//   s = 3
//   k = 1
//   0 -> 0
//   1 -> 2
//   2 -> 1
//
// Blocks with k > 1 are written with digits comma-separated ("1,0 -> 0,1") or,
// for bases <= 10, concatenated ("10 -> 01"). '#' starts a comment.
// Parse failures carry 1-based line numbers.
BlockPermutation parse_theta_table(std::string_view text);
std::string theta_table_text(const BlockPermutation& p);

} // namespace lambdafn
