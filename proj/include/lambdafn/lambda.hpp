#pragma once

// The six function forms built from a block permutation theta and the radix
// reinterpretation maps:
//
//   fsk        s-adic -> s-adic        blockwise theta on the digits
//   fplus      s-adic -> nega-s-adic   same digits, kind flipped
//   fplusinv   nega-s-adic -> s-adic   same digits, kind flipped
//   fplus∘fsk            s-adic -> nega-s-adic
//   fsk∘fplusinv         nega-s-adic -> s-adic
//   fplus∘fsk∘fplusinv   nega-s-adic -> nega-s-adic
//
// Only these six shapes are constructible; arbitrary towers are rejected.
// Evaluation is exact: digit-level application of the form to an eventually
// periodic expansion, with values read back as rationals.

#include "lambdafn/digits.hpp"
#include "lambdafn/theta.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lambdafn {

enum class FormKind : std::uint8_t {
    Fsk,
    FPlus,
    FPlusInv,
    FPlusAfterFsk,
    FskAfterFPlusInv,
    FPlusFskFPlusInv,
};

std::string_view form_name(FormKind form); // "fsk", "fplus∘fsk", ...
bool form_contains_fsk(FormKind form);

enum class LinearityClass : std::uint8_t { IdentityLinear, ComplementLinear, NotLinear };
std::string_view linearity_name(LinearityClass c);

class LambdaFunction {
public:
    static LambdaFunction make_fsk(BlockPermutation theta);
    static LambdaFunction make_fplus(unsigned base);
    static LambdaFunction make_fplus_inv(unsigned base);

    // `parts` in composition order, outermost first; only the three composite
    // shapes listed above are accepted. Throws std::invalid_argument.
    static LambdaFunction compose_form(const std::vector<LambdaFunction>& parts);

    FormKind form() const { return form_; }
    unsigned base() const { return base_; }
    // Block size of the embedded permutation; 1 for the pure reinterpretation maps.
    unsigned block_size() const { return theta_ ? theta_->block_size() : 1; }
    bool has_theta() const { return theta_.has_value(); }
    const BlockPermutation& theta() const;

    RadixKind domain_kind() const;
    RadixKind range_kind() const;
    Rational domain_min() const { return interval_min(base_, domain_kind()); }
    Rational domain_max() const { return interval_max(base_, domain_kind()); }

private:
    LambdaFunction(FormKind form, unsigned base, std::optional<BlockPermutation> theta)
        : form_(form), base_(base), theta_(std::move(theta)) {}

    FormKind form_;
    unsigned base_;
    std::optional<BlockPermutation> theta_;
};

// Digit-level application to any structurally valid expansion of the domain
// kind; the image keeps the aligned (non-normalized) digit layout. This is the
// raw map of the defining equations; discontinuity analysis feeds it excluded
// representations on purpose.
DigitExpansion apply_digits(const LambdaFunction& f, const DigitExpansion& e);

// Canonical-in, canonical-out evaluation. The input must be canonical or one
// of the two endpoint special forms.
DigitExpansion evaluate_expansion(const LambdaFunction& f, const DigitExpansion& e);

// Exact value of f at q under the canonical representation of q.
Rational evaluate_point(const LambdaFunction& f, const Rational& q);

// Image of a digit prefix (no rational round trip). Forms containing fsk
// require the length to be a multiple of k.
Digits evaluate_prefix(const LambdaFunction& f, const Digits& digits);

// Whole-composition linearity: x, 1-x (s-adic range) or -(s-1)/(s+1)-x
// (nega-s-adic range). Only fsk and fplus∘fsk∘fplusinv can be linear, and only
// when theta is the identity or the digitwise complement.
LinearityClass is_lambda_linear(const LambdaFunction& f);

// Function spec file:
//
//   form = fsk            # one of the six form names; '.' may replace '∘'
//   s = 3
//   k = 1                 # required iff the form contains fsk
//   theta:                # table lines follow, as in parse_theta_table
//   0 -> 0
//   1 -> 2
//   2 -> 1
LambdaFunction parse_function_spec(std::string_view text);
LambdaFunction load_function_spec(const std::string& path);
std::string function_spec_text(const LambdaFunction& f);

} // namespace lambdafn
