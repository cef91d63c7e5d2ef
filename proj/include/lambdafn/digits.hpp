#pragma once

// Eventually periodic digit expansions in two radix systems over the alphabet
// A = {0,...,s-1}:
//
//   s-adic       x = sum_{n>=1} a_n / s^n           in [0, 1]
//   nega-s-adic  x = sum_{n>=1} (-1)^n a_n / s^n    in [-s/(s+1), 1/(s+1)]
//
// A value is stored as (preperiod, period) digit vectors; every rational in
// the interval has such a representation and every such representation is a
// rational, so the round trip is exact.
//
// Representations are not unique. The admissible ("canonical") side is:
//   s-adic:      no tail of repeating (s-1); terminating numbers use the
//                terminating form.
//   nega-s-adic: no tail whose normalized period is (0,(s-1)); dual points
//                use the ((s-1),0) side.
// The two interval endpoints x = 1 and x = 1/(s+1) possess only the excluded
// form; they are representable (pre=[], per=[s-1] resp. per=[0,s-1]) but keep
// canonical() == false.

#include "lambdafn/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lambdafn {

enum class RadixKind : std::uint8_t { SAdic, NegaSAdic };

std::string_view radix_kind_name(RadixKind kind);

using Digit = std::uint32_t;
using Digits = std::vector<Digit>;

// Closed interval of representable values for a (base, kind) pair.
Rational interval_min(unsigned base, RadixKind kind);
Rational interval_max(unsigned base, RadixKind kind);

class DigitExpansion {
public:
    // Validates digit ranges and a nonempty period; throws std::invalid_argument.
    static DigitExpansion make(unsigned base, RadixKind kind, Digits preperiod, Digits period);

    unsigned base() const { return base_; }
    RadixKind kind() const { return kind_; }
    const Digits& preperiod() const { return pre_; }
    const Digits& period() const { return per_; }

    // True when the representation is normalized (primitive period, fully
    // absorbed preperiod) and is the admissible side of any dual pair.
    bool canonical() const { return canonical_; }

    // 1-indexed digit of the infinite sequence.
    Digit digit_at(std::size_t position) const;

    Rational value() const;

    bool operator==(const DigitExpansion& o) const {
        return base_ == o.base_ && kind_ == o.kind_ && pre_ == o.pre_ && per_ == o.per_;
    }

private:
    DigitExpansion(unsigned base, RadixKind kind, Digits pre, Digits per, bool canonical)
        : base_(base), kind_(kind), pre_(std::move(pre)), per_(std::move(per)),
          canonical_(canonical) {}

    unsigned base_;
    RadixKind kind_;
    Digits pre_;
    Digits per_;
    bool canonical_;
};

// Exact value by closed-form geometric summation. For nega-s-adic expansions
// with an odd period length the period is doubled internally so the sign
// pattern is periodic.
Rational rational_from_expansion(const DigitExpansion& e);

// Digit extraction; the result is normalized and canonical except for the two
// endpoint values, which only have the excluded form. Throws std::domain_error
// when q lies outside the kind's interval.
DigitExpansion expansion_from_rational(const Rational& q, unsigned base, RadixKind kind);

// Structural minimization: shrink the period to its primitive root and absorb
// preperiod digits that merely repeat it. Value-preserving.
DigitExpansion normalized(const DigitExpansion& e);

// True when the normalized form is an excluded tail: s-adic period [s-1],
// nega-s-adic period [0, s-1].
bool has_forbidden_tail(const DigitExpansion& e);

// Value-preserving rewrite onto the admissible side, normalized.
DigitExpansion canonicalize(const DigitExpansion& e);

// The second representation of the same value, when one exists (terminating
// s-adic rationals and their nega-s-adic analogs). Input must be canonical or
// an endpoint special form.
std::optional<DigitExpansion> dual_representation(const DigitExpansion& e);

// Digitwise a -> s-1-a on preperiod and period. Not canonicalized: functional
// equation checks need the raw complementary digit sequence. Values satisfy
// value(complement(e)) = 1 - value(e) (s-adic) and -(s-1)/(s+1) - value(e)
// (nega-s-adic).
DigitExpansion complement(const DigitExpansion& e);

// Value-equal expansion whose preperiod and period lengths are multiples of k
// (preperiod extended by unrolling the period, period extended to
// lcm(|period|, k)).
DigitExpansion align_blocks(const DigitExpansion& e, unsigned block_size);

// First n digits of the infinite sequence.
Digits prefix_digits(const DigitExpansion& e, std::size_t n);

// Literal syntax `s:<base>:<pos|neg>:<pre digits>:(<period digits>)`, digits
// comma-separated decimal, e.g. `s:3:pos:2:(1)` and `s:2:neg::(1,0)`.
std::string to_literal(const DigitExpansion& e);
DigitExpansion expansion_from_literal(std::string_view text);

} // namespace lambdafn
