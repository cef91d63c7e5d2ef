#include "lambdafn/digits.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lambdafn {

std::string_view radix_kind_name(RadixKind kind) {
    return kind == RadixKind::SAdic ? "pos" : "neg";
}

Rational interval_min(unsigned base, RadixKind kind) {
    if (kind == RadixKind::SAdic) return Rational(0);
    return Rational(-static_cast<long long>(base), static_cast<long long>(base) + 1);
}

Rational interval_max(unsigned base, RadixKind kind) {
    if (kind == RadixKind::SAdic) return Rational(1);
    return Rational(1, static_cast<long long>(base) + 1);
}

namespace {

void validate_digits(unsigned base, const Digits& digits, const char* what) {
    for (Digit d : digits) {
        if (d >= base) {
            throw std::invalid_argument(std::string("DigitExpansion: ") + what +
                                        " digit " + std::to_string(d) +
                                        " out of range for base " + std::to_string(base));
        }
    }
}

// Smallest d dividing |period| with period = (first d digits)^(p/d).
std::size_t primitive_period_length(const Digits& per) {
    std::size_t p = per.size();
    for (std::size_t d = 1; d <= p; ++d) {
        if (p % d != 0) continue;
        bool ok = true;
        for (std::size_t i = d; i < p && ok; ++i) ok = per[i] == per[i - d];
        if (ok) return d;
    }
    return p;
}

bool is_normal_form(const Digits& pre, const Digits& per) {
    if (primitive_period_length(per) != per.size()) return false;
    return pre.empty() || pre.back() != per.back();
}

bool forbidden_normal_period(unsigned base, RadixKind kind, const Digits& per) {
    if (kind == RadixKind::SAdic) return per.size() == 1 && per[0] == base - 1;
    return per.size() == 2 && per[0] == 0 && per[1] == base - 1;
}

struct NormalParts {
    Digits pre;
    Digits per;
};

NormalParts normal_parts(const Digits& pre_in, const Digits& per_in) {
    NormalParts out;
    out.pre = pre_in;
    std::size_t d = primitive_period_length(per_in);
    out.per.assign(per_in.begin(), per_in.begin() + static_cast<std::ptrdiff_t>(d));
    while (!out.pre.empty() && out.pre.back() == out.per.back()) {
        out.pre.pop_back();
        std::rotate(out.per.rbegin(), out.per.rbegin() + 1, out.per.rend());
    }
    return out;
}

} // namespace

DigitExpansion DigitExpansion::make(unsigned base, RadixKind kind, Digits preperiod,
                                    Digits period) {
    if (base < 2) throw std::invalid_argument("DigitExpansion: base must be at least 2");
    if (period.empty()) throw std::invalid_argument("DigitExpansion: period must be nonempty");
    validate_digits(base, preperiod, "preperiod");
    validate_digits(base, period, "period");
    bool canonical = is_normal_form(preperiod, period) &&
                     !forbidden_normal_period(base, kind, period);
    return DigitExpansion(base, kind, std::move(preperiod), std::move(period), canonical);
}

Digit DigitExpansion::digit_at(std::size_t position) const {
    assert(position >= 1);
    if (position <= pre_.size()) return pre_[position - 1];
    return per_[(position - pre_.size() - 1) % per_.size()];
}

Rational DigitExpansion::value() const { return rational_from_expansion(*this); }

Rational rational_from_expansion(const DigitExpansion& e) {
    const BigInt s = e.base();
    const std::size_t L = e.preperiod().size();

    if (e.kind() == RadixKind::SAdic) {
        BigInt pre_num = 0;
        for (Digit d : e.preperiod()) pre_num = pre_num * s + d;
        BigInt per_num = 0;
        for (Digit d : e.period()) per_num = per_num * s + d;
        BigInt tail_den = pow_int(s, static_cast<unsigned>(e.period().size())) - 1;
        BigInt shift = pow_int(s, static_cast<unsigned>(L));
        return Rational(pre_num * tail_den + per_num, shift * tail_den);
    }

    // Nega-s-adic: signs repeat only over an even stretch of digits.
    Digits per = e.period();
    if (per.size() % 2 != 0) per.insert(per.end(), e.period().begin(), e.period().end());
    const std::size_t p = per.size();

    BigInt pre_num = 0; // sum of (-1)^i pre_i s^(L-i), position i = 1..L
    {
        std::size_t i = 1;
        for (Digit d : e.preperiod()) {
            pre_num = pre_num * s + ((i % 2 == 1) ? -BigInt(d) : BigInt(d));
            ++i;
        }
    }
    BigInt per_num = 0; // sum of (-1)^(L+j) per_j s^(p-j), position j = 1..p after preperiod
    {
        std::size_t j = 1;
        for (Digit d : per) {
            per_num = per_num * s + (((L + j) % 2 == 1) ? -BigInt(d) : BigInt(d));
            ++j;
        }
    }
    BigInt tail_den = pow_int(s, static_cast<unsigned>(p)) - 1;
    BigInt shift = pow_int(s, static_cast<unsigned>(L));
    return Rational(pre_num * tail_den + per_num, shift * tail_den);
}

namespace {

DigitExpansion finish_extraction(unsigned base, RadixKind kind, const Digits& digits,
                                 std::size_t cycle_start) {
    Digits pre(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(cycle_start));
    Digits per(digits.begin() + static_cast<std::ptrdiff_t>(cycle_start), digits.end());
    auto np = normal_parts(pre, per);
    return DigitExpansion::make(base, kind, std::move(np.pre), std::move(np.per));
}

// States of the extraction loop are numerators over the fixed denominator;
// when they fit in int64 the loop runs on machine integers with Brent cycle
// detection (constant memory) instead of bigints and a map.
constexpr std::int64_t kFastDenLimit = std::int64_t(1) << 31;

// Preperiod and cycle length of the orbit x0, g(x0), g(g(x0)), ...
template <typename Step>
std::pair<std::size_t, std::size_t> brent_cycle(std::int64_t x0, Step g) {
    std::size_t power = 1, lam = 1;
    std::int64_t tortoise = x0;
    std::int64_t hare = g(x0);
    while (tortoise != hare) {
        if (power == lam) {
            tortoise = hare;
            power *= 2;
            lam = 0;
        }
        hare = g(hare);
        ++lam;
    }
    std::int64_t a = x0, b = x0;
    for (std::size_t i = 0; i < lam; ++i) b = g(b);
    std::size_t mu = 0;
    while (a != b) {
        a = g(a);
        b = g(b);
        ++mu;
    }
    return {mu, lam};
}

template <typename Step, typename Emit>
DigitExpansion extract_with_brent(unsigned base, RadixKind kind, std::int64_t start, Step g,
                                  Emit digit_of) {
    auto [mu, lam] = brent_cycle(start, g);
    Digits digits;
    digits.reserve(mu + lam);
    std::int64_t state = start;
    for (std::size_t i = 0; i < mu + lam; ++i) {
        digits.push_back(digit_of(state));
        state = g(state);
    }
    return finish_extraction(base, kind, digits, mu);
}

DigitExpansion extract_sadic_fast(std::int64_t num, std::int64_t den, unsigned base) {
    auto step = [den, base](std::int64_t rem) { return rem * base % den; };
    auto digit_of = [den, base](std::int64_t rem) {
        return static_cast<Digit>(rem * base / den);
    };
    return extract_with_brent(base, RadixKind::SAdic, num, step, digit_of);
}

DigitExpansion extract_sadic(const Rational& q, unsigned base) {
    // Greedy digit extraction; terminating values come out terminating, so
    // the (s-1)-tail never appears (q = 1 is handled by the caller).
    if (q.denominator() < kFastDenLimit && base < (1u << 16)) {
        return extract_sadic_fast(q.numerator().convert_to<std::int64_t>(),
                                  q.denominator().convert_to<std::int64_t>(), base);
    }
    const BigInt s = base;
    const BigInt den = q.denominator();
    BigInt rem = q.numerator();

    Digits digits;
    std::map<BigInt, std::size_t> seen;
    for (;;) {
        auto [it, fresh] = seen.emplace(rem, digits.size());
        if (!fresh) return finish_extraction(base, RadixKind::SAdic, digits, it->second);
        BigInt t = rem * s;
        BigInt d = t / den;
        digits.push_back(d.convert_to<Digit>());
        rem = t - d * den;
    }
}

std::int64_t floor_div_i64(std::int64_t num, std::int64_t den) {
    std::int64_t quot = num / den;
    if (num % den != 0 && (num < 0)) --quot;
    return quot;
}

std::int64_t nega_digit_i64(std::int64_t rem, std::int64_t den, std::int64_t s) {
    std::int64_t c = -s * rem * (s + 1);
    std::int64_t hi = floor_div_i64(c + s * den, den * (s + 1));
    std::int64_t digit = hi <= s - 1 ? hi : hi - 1;
    assert(digit >= 0 && digit <= s - 1);
    return digit;
}

DigitExpansion extract_nega_fast(std::int64_t num, std::int64_t den, unsigned base) {
    const std::int64_t s = base;
    auto step = [den, s](std::int64_t rem) {
        return -s * rem - nega_digit_i64(rem, den, s) * den;
    };
    auto digit_of = [den, s](std::int64_t rem) {
        return static_cast<Digit>(nega_digit_i64(rem, den, s));
    };
    return extract_with_brent(base, RadixKind::NegaSAdic, num, step, digit_of);
}

DigitExpansion extract_nega(const Rational& q, unsigned base) {
    // Peel digits: a_n is the unique digit keeping the residual
    // x' = -s x - a_n inside [-s/(s+1), 1/(s+1)]; ties take the larger digit,
    // which selects the admissible ((s-1),0) side of dual pairs.
    if (q.denominator() < kFastDenLimit / 2 && base < (1u << 15)) {
        return extract_nega_fast(q.numerator().convert_to<std::int64_t>(),
                                 q.denominator().convert_to<std::int64_t>(), base);
    }
    const BigInt s = base;
    const BigInt den = q.denominator();
    const BigInt window = den * (s + 1);
    BigInt rem = q.numerator();

    Digits digits;
    std::map<BigInt, std::size_t> seen;
    for (;;) {
        auto [it, fresh] = seen.emplace(rem, digits.size());
        if (!fresh) return finish_extraction(base, RadixKind::NegaSAdic, digits, it->second);
        BigInt c = -s * rem * (s + 1); // -s x, scaled by den*(s+1)
        BigInt hi = floor_div(c + s * den, window);
        BigInt digit = hi <= s - 1 ? hi : hi - 1;
        assert(digit >= 0 && digit <= s - 1);
        digits.push_back(digit.convert_to<Digit>());
        rem = -s * rem - digit * den;
    }
}

} // namespace

DigitExpansion expansion_from_rational(const Rational& q, unsigned base, RadixKind kind) {
    const Rational lo = interval_min(base, kind);
    const Rational hi = interval_max(base, kind);
    if (q < lo || q > hi) {
        throw std::domain_error("expansion_from_rational: " + q.to_string() +
                                " outside the valid interval [" + lo.to_string() + ", " +
                                hi.to_string() + "] for base " + std::to_string(base) + " " +
                                std::string(radix_kind_name(kind)));
    }
    if (kind == RadixKind::SAdic) {
        if (q == hi) return DigitExpansion::make(base, kind, {}, {base - 1});
        return extract_sadic(q, base);
    }
    if (q == hi) return DigitExpansion::make(base, kind, {}, {0, base - 1});
    return extract_nega(q, base);
}

DigitExpansion normalized(const DigitExpansion& e) {
    auto np = normal_parts(e.preperiod(), e.period());
    return DigitExpansion::make(e.base(), e.kind(), std::move(np.pre), std::move(np.per));
}

bool has_forbidden_tail(const DigitExpansion& e) {
    auto np = normal_parts(e.preperiod(), e.period());
    return forbidden_normal_period(e.base(), e.kind(), np.per);
}

DigitExpansion canonicalize(const DigitExpansion& e) {
    DigitExpansion n = normalized(e);
    if (n.canonical()) return n;
    return expansion_from_rational(rational_from_expansion(n), n.base(), n.kind());
}

std::optional<DigitExpansion> dual_representation(const DigitExpansion& e) {
    DigitExpansion n = normalized(e);
    const unsigned s = n.base();
    Digits pre = n.preperiod();
    if (n.kind() == RadixKind::SAdic) {
        if (n.period() != Digits{0} || pre.empty()) return std::nullopt;
        pre.back() -= 1;
        return normalized(DigitExpansion::make(s, n.kind(), std::move(pre), {s - 1}));
    }
    if (n.period() != Digits{s - 1, 0} || pre.empty()) return std::nullopt;
    pre.back() -= 1;
    return normalized(DigitExpansion::make(s, n.kind(), std::move(pre), {0, s - 1}));
}

DigitExpansion complement(const DigitExpansion& e) {
    const Digit top = e.base() - 1;
    Digits pre = e.preperiod();
    Digits per = e.period();
    for (Digit& d : pre) d = top - d;
    for (Digit& d : per) d = top - d;
    return DigitExpansion::make(e.base(), e.kind(), std::move(pre), std::move(per));
}

DigitExpansion align_blocks(const DigitExpansion& e, unsigned block_size) {
    if (block_size == 0) throw std::invalid_argument("align_blocks: block size must be >= 1");
    const std::size_t k = block_size;
    Digits pre = e.preperiod();
    Digits per = e.period();

    // Extend the preperiod to a block boundary by unrolling period digits.
    std::size_t take = (k - pre.size() % k) % k;
    for (std::size_t i = 0; i < take; ++i) pre.push_back(per[i % per.size()]);
    if (take % per.size() != 0) {
        std::rotate(per.begin(), per.begin() + static_cast<std::ptrdiff_t>(take % per.size()),
                    per.end());
    }

    // Repeat the period up to lcm(|period|, k).
    std::size_t target = std::lcm(per.size(), k);
    Digits full;
    full.reserve(target);
    while (full.size() < target) full.insert(full.end(), per.begin(), per.end());
    return DigitExpansion::make(e.base(), e.kind(), std::move(pre), std::move(full));
}

Digits prefix_digits(const DigitExpansion& e, std::size_t n) {
    Digits out;
    out.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) out.push_back(e.digit_at(i));
    return out;
}

std::string to_literal(const DigitExpansion& e) {
    std::ostringstream os;
    os << "s:" << e.base() << ":" << radix_kind_name(e.kind()) << ":";
    for (std::size_t i = 0; i < e.preperiod().size(); ++i) {
        if (i) os << ",";
        os << e.preperiod()[i];
    }
    os << ":(";
    for (std::size_t i = 0; i < e.period().size(); ++i) {
        if (i) os << ",";
        os << e.period()[i];
    }
    os << ")";
    return os.str();
}

namespace {

Digits parse_digit_list(std::string_view text, std::string_view literal) {
    Digits out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string_view::npos) next = text.size();
        std::string token(text.substr(pos, next - pos));
        if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
            throw std::invalid_argument("expansion literal '" + std::string(literal) +
                                        "': bad digit token '" + token + "'");
        }
        out.push_back(static_cast<Digit>(std::stoul(token)));
        pos = next + 1;
    }
    return out;
}

} // namespace

DigitExpansion expansion_from_literal(std::string_view text) {
    auto fail = [&](const std::string& why) {
        return std::invalid_argument("expansion literal '" + std::string(text) + "': " + why);
    };
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (fields.size() < 4) {
        std::size_t next = text.find(':', pos);
        if (next == std::string_view::npos) throw fail("expected 5 ':'-separated fields");
        fields.push_back(text.substr(pos, next - pos));
        pos = next + 1;
    }
    fields.push_back(text.substr(pos));

    if (fields[0] != "s") throw fail("must start with 's:'");
    unsigned base = 0;
    try {
        base = static_cast<unsigned>(std::stoul(std::string(fields[1])));
    } catch (const std::exception&) {
        throw fail("bad base '" + std::string(fields[1]) + "'");
    }
    RadixKind kind;
    if (fields[2] == "pos") kind = RadixKind::SAdic;
    else if (fields[2] == "neg") kind = RadixKind::NegaSAdic;
    else throw fail("kind must be 'pos' or 'neg'");

    std::string_view per_field = fields[4];
    if (per_field.size() < 2 || per_field.front() != '(' || per_field.back() != ')') {
        throw fail("period must be parenthesized");
    }
    Digits pre = parse_digit_list(fields[3], text);
    Digits per = parse_digit_list(per_field.substr(1, per_field.size() - 2), text);
    return DigitExpansion::make(base, kind, std::move(pre), std::move(per));
}

} // namespace lambdafn
