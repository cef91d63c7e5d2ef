#include "lambdafn/theta.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lambdafn {

std::uint64_t encode_block(unsigned base, const Block& block) {
    std::uint64_t v = 0;
    for (Digit d : block) v = v * base + d;
    return v;
}

Block decode_block(unsigned base, unsigned block_size, std::uint64_t index) {
    Block b(block_size, 0);
    for (unsigned i = block_size; i-- > 0;) {
        b[i] = static_cast<Digit>(index % base);
        index /= base;
    }
    return b;
}

namespace {

std::uint64_t block_space_size(unsigned base, unsigned block_size) {
    std::uint64_t n = 1;
    for (unsigned i = 0; i < block_size; ++i) n *= base;
    return n;
}

std::string block_string(const Block& b) {
    std::string out;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(b[i]);
    }
    return out;
}

void check_block(unsigned base, unsigned block_size, const Block& b) {
    if (b.size() != block_size) {
        throw TableError(TableError::Kind::WrongLength,
                         "block (" + block_string(b) + ") must have " +
                             std::to_string(block_size) + " digits");
    }
    for (Digit d : b) {
        if (d >= base) {
            throw TableError(TableError::Kind::OutOfRangeDigit,
                             "digit " + std::to_string(d) + " out of range for base " +
                                 std::to_string(base));
        }
    }
}

} // namespace

BlockPermutation BlockPermutation::from_table(
    unsigned base, unsigned block_size, const std::vector<std::pair<Block, Block>>& pairs) {
    const std::uint64_t n = block_space_size(base, block_size);
    constexpr std::uint32_t kUnset = 0xffffffffu;
    std::vector<std::uint32_t> table(n, kUnset);
    std::vector<bool> image_used(n, false);

    for (const auto& [pre, img] : pairs) {
        check_block(base, block_size, pre);
        check_block(base, block_size, img);
        std::uint64_t pi = encode_block(base, pre);
        std::uint64_t ii = encode_block(base, img);
        if (table[pi] != kUnset) {
            throw TableError(TableError::Kind::DuplicatePreimage,
                             "block (" + block_string(pre) + ") mapped twice");
        }
        if (image_used[ii]) {
            throw TableError(TableError::Kind::DuplicateImage,
                             "image (" + block_string(img) + ") used twice; not a bijection");
        }
        table[pi] = static_cast<std::uint32_t>(ii);
        image_used[ii] = true;
    }
    for (std::uint64_t i = 0; i < n; ++i) {
        if (table[i] == kUnset) {
            throw TableError(TableError::Kind::MissingBlock,
                             "no image for block (" +
                                 block_string(decode_block(base, block_size, i)) + ")");
        }
    }
    return BlockPermutation(base, block_size, std::move(table));
}

BlockPermutation BlockPermutation::identity(unsigned base, unsigned block_size) {
    std::vector<std::uint32_t> table(block_space_size(base, block_size));
    std::iota(table.begin(), table.end(), 0u);
    return BlockPermutation(base, block_size, std::move(table));
}

BlockPermutation BlockPermutation::from_images(unsigned base, unsigned block_size,
                                               std::vector<std::uint32_t> images) {
    const std::uint64_t n = block_space_size(base, block_size);
    if (images.size() != n) {
        throw TableError(TableError::Kind::MissingBlock, "image list must cover all blocks");
    }
    std::vector<bool> used(n, false);
    for (std::uint32_t v : images) {
        if (v >= n) {
            throw TableError(TableError::Kind::OutOfRangeDigit, "image index out of range");
        }
        if (used[v]) {
            throw TableError(TableError::Kind::DuplicateImage, "image used twice");
        }
        used[v] = true;
    }
    return BlockPermutation(base, block_size, std::move(images));
}

Block BlockPermutation::apply(const Block& block) const {
    check_block(base_, block_size_, block);
    return decode_block(base_, block_size_, table_[encode_block(base_, block)]);
}

BlockPermutation BlockPermutation::compose(const BlockPermutation& other) const {
    if (base_ != other.base_ || block_size_ != other.block_size_) {
        throw std::invalid_argument("compose: dimension mismatch");
    }
    std::vector<std::uint32_t> table(table_.size());
    for (std::size_t i = 0; i < table.size(); ++i) table[i] = table_[other.table_[i]];
    return BlockPermutation(base_, block_size_, std::move(table));
}

BlockPermutation BlockPermutation::inverse() const {
    std::vector<std::uint32_t> table(table_.size());
    for (std::size_t i = 0; i < table.size(); ++i) {
        table[table_[i]] = static_cast<std::uint32_t>(i);
    }
    return BlockPermutation(base_, block_size_, std::move(table));
}

std::vector<Block> fixed_blocks(const BlockPermutation& p) {
    std::vector<Block> out;
    for (std::uint64_t i = 0; i < p.table_size(); ++i) {
        if (p.apply_index(static_cast<std::uint32_t>(i)) == i) {
            out.push_back(decode_block(p.base(), p.block_size(), i));
        }
    }
    return out;
}

Linearity classify_linearity(const BlockPermutation& p) {
    bool identity = true;
    bool complement = true;
    const std::uint64_t n = p.table_size();
    for (std::uint64_t i = 0; i < n && (identity || complement); ++i) {
        std::uint32_t img = p.apply_index(static_cast<std::uint32_t>(i));
        if (img != i) identity = false;
        Block b = decode_block(p.base(), p.block_size(), i);
        for (Digit& d : b) d = p.base() - 1 - d;
        if (img != encode_block(p.base(), b)) complement = false;
    }
    if (identity) return Linearity::Identity;
    if (complement) return Linearity::Complement;
    return Linearity::Other;
}

PermutationEnumerator::PermutationEnumerator(unsigned base, unsigned block_size,
                                             std::uint64_t cap)
    : base_(base), block_size_(block_size), done_(false) {
    std::uint64_t n = block_space_size(base, block_size);
    if (n > cap) {
        throw std::length_error("enumerate_all: s^k = " + std::to_string(n) +
                                " exceeds the enumeration cap " + std::to_string(cap));
    }
    images_.resize(n);
    std::iota(images_.begin(), images_.end(), 0u);
}

std::optional<BlockPermutation> PermutationEnumerator::next() {
    if (done_) return std::nullopt;
    BlockPermutation current = BlockPermutation::from_images(base_, block_size_, images_);
    done_ = !std::next_permutation(images_.begin(), images_.end());
    return current;
}

BigInt factorial(std::uint64_t n) {
    BigInt r = 1;
    for (std::uint64_t i = 2; i <= n; ++i) r *= i;
    return r;
}

namespace {

Block parse_block_token(unsigned base, unsigned block_size, std::string_view token,
                        std::size_t line_no) {
    auto fail = [&](const std::string& why) {
        return std::invalid_argument("theta table line " + std::to_string(line_no) + ": " + why);
    };
    Block out;
    if (token.find(',') != std::string_view::npos) {
        std::size_t pos = 0;
        while (pos <= token.size()) {
            std::size_t next = token.find(',', pos);
            if (next == std::string_view::npos) next = token.size();
            std::string part(token.substr(pos, next - pos));
            if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
                throw fail("bad digit '" + part + "'");
            }
            out.push_back(static_cast<Digit>(std::stoul(part)));
            pos = next + 1;
            if (next == token.size()) break;
        }
    } else if (block_size == 1) {
        std::string part(token);
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
            throw fail("bad digit '" + part + "'");
        }
        out.push_back(static_cast<Digit>(std::stoul(part)));
    } else {
        if (base > 10) throw fail("blocks for base > 10 must use comma-separated digits");
        for (char ch : token) {
            if (ch < '0' || ch > '9') throw fail(std::string("bad digit character '") + ch + "'");
            out.push_back(static_cast<Digit>(ch - '0'));
        }
    }
    if (out.size() != block_size) {
        throw fail("expected " + std::to_string(block_size) + " digits, got " +
                   std::to_string(out.size()));
    }
    for (Digit d : out) {
        if (d >= base) throw fail("digit " + std::to_string(d) + " out of range");
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

} // namespace

BlockPermutation parse_theta_table(std::string_view text) {
    std::optional<unsigned> s, k;
    std::vector<std::pair<Block, Block>> pairs;
    std::map<std::uint64_t, std::size_t> seen_pre, seen_img;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = trim(text.substr(pos, eol - pos));
        ++line_no;
        pos = eol + 1;
        if (line.empty() || line.front() == '#') {
            if (eol == text.size()) break;
            continue;
        }
        auto fail = [&](const std::string& why) {
            return std::invalid_argument("theta table line " + std::to_string(line_no) + ": " +
                                         why);
        };
        std::size_t arrow = line.find("->");
        if (arrow != std::string_view::npos) {
            if (!s || !k) throw fail("'s =' and 'k =' must come before the mapping lines");
            Block pre = parse_block_token(*s, *k, trim(line.substr(0, arrow)), line_no);
            Block img = parse_block_token(*s, *k, trim(line.substr(arrow + 2)), line_no);
            auto [pit, pre_fresh] = seen_pre.emplace(encode_block(*s, pre), line_no);
            if (!pre_fresh) {
                throw TableError(TableError::Kind::DuplicatePreimage,
                                 "theta table line " + std::to_string(line_no) + ": block " +
                                     "already mapped at line " + std::to_string(pit->second));
            }
            auto [iit, img_fresh] = seen_img.emplace(encode_block(*s, img), line_no);
            if (!img_fresh) {
                throw TableError(TableError::Kind::DuplicateImage,
                                 "theta table line " + std::to_string(line_no) +
                                     ": image already used at line " +
                                     std::to_string(iit->second) + "; not a bijection");
            }
            pairs.emplace_back(std::move(pre), std::move(img));
        } else {
            std::size_t eq = line.find('=');
            if (eq == std::string_view::npos) throw fail("expected 'name = value' or 'a -> b'");
            std::string name(trim(line.substr(0, eq)));
            std::string value(trim(line.substr(eq + 1)));
            if (name != "s" && name != "k") throw fail("unknown key '" + name + "'");
            unsigned parsed = 0;
            try {
                parsed = static_cast<unsigned>(std::stoul(value));
            } catch (const std::exception&) {
                throw fail("bad value '" + value + "'");
            }
            (name == "s" ? s : k) = parsed;
        }
        if (eol == text.size()) break;
    }
    if (!s || !k) throw std::invalid_argument("theta table: missing 's =' or 'k =' header");
    if (*s < 2) throw std::invalid_argument("theta table: s must be at least 2");
    if (*k < 1) throw std::invalid_argument("theta table: k must be at least 1");
    return BlockPermutation::from_table(*s, *k, pairs);
}

std::string theta_table_text(const BlockPermutation& p) {
    std::ostringstream os;
    os << "s = " << p.base() << "\n" << "k = " << p.block_size() << "\n";
    for (std::uint64_t i = 0; i < p.table_size(); ++i) {
        Block pre = decode_block(p.base(), p.block_size(), i);
        Block img = decode_block(p.base(), p.block_size(),
                                 p.apply_index(static_cast<std::uint32_t>(i)));
        os << block_string(pre) << " -> " << block_string(img) << "\n";
    }
    return os.str();
}

} // namespace lambdafn
