#include "lambdafn/analysis.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <set>

namespace lambdafn {

namespace {

// Largest integer g with g^e == n, if n is a perfect e-th power.
std::optional<BigInt> exact_root(const BigInt& n, unsigned e) {
    if (n < 1) return std::nullopt;
    if (n == 1) return BigInt(1);
    BigInt lo = 1, hi = n;
    while (lo < hi) {
        BigInt mid = (lo + hi + 1) / 2;
        if (pow_int(mid, e) <= n) lo = mid;
        else hi = mid - 1;
    }
    return pow_int(lo, e) == n ? std::optional<BigInt>(lo) : std::nullopt;
}

// base = g^e with e maximal (g is then not itself a perfect power).
std::pair<BigInt, unsigned> primitive_root(const BigInt& base) {
    unsigned max_e = boost::multiprecision::msb(base) + 1;
    for (unsigned e = max_e; e >= 2; --e) {
        if (auto g = exact_root(base, e)) return {*g, e};
    }
    return {base, 1};
}

std::uint64_t checked_pow_u64(unsigned base, unsigned exp, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (r > limit / base) {
            throw std::length_error("cell count s^" + std::to_string(exp) +
                                    " exceeds the budget " + std::to_string(limit));
        }
        r *= base;
    }
    return r;
}

Digits digits_of_integer(std::uint64_t value, unsigned base, std::size_t width) {
    Digits out(width, 0);
    for (std::size_t i = width; i-- > 0;) {
        out[i] = static_cast<Digit>(value % base);
        value /= base;
    }
    return out;
}

Rational value_as_kind(unsigned base, RadixKind kind, const Digits& pre, const Digits& per) {
    return rational_from_expansion(DigitExpansion::make(base, kind, pre, per));
}

void require_form(const LambdaFunction& f, FormKind form, const char* who) {
    if (f.form() != form) {
        throw std::invalid_argument(std::string(who) + ": requires form " +
                                    std::string(form_name(form)) + ", got " +
                                    std::string(form_name(f.form())));
    }
}

} // namespace

std::optional<Rational> exact_log_ratio(const BigInt& count, const BigInt& base) {
    if (base < 2 || count < 1) throw std::invalid_argument("exact_log_ratio: need base >= 2, count >= 1");
    if (count == 1) return Rational(0);
    auto [g, e] = primitive_root(base);
    BigInt c = count;
    unsigned long a = 0;
    while (c % g == 0) {
        c /= g;
        ++a;
    }
    if (c != 1) return std::nullopt;
    return Rational(BigInt(a), BigInt(e));
}

std::string Dimension::to_string() const {
    if (exact) return exact->to_string();
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", approx);
    return buf;
}

bool Dimension::operator==(const Dimension& o) const {
    if (exact && o.exact) return *exact == *o.exact;
    if (exact || o.exact) return false;
    return approx == o.approx;
}

namespace {

double log_big(const BigInt& v) {
    if (v == 1) return 0.0;
    unsigned bits = boost::multiprecision::msb(v);
    if (bits <= 50) return std::log(v.convert_to<double>());
    BigInt shifted = v >> (bits - 50);
    return std::log(shifted.convert_to<double>()) + (bits - 50) * std::log(2.0);
}

} // namespace

Dimension make_dimension(const BigInt& count, const BigInt& base, unsigned divisor) {
    if (divisor == 0) throw std::invalid_argument("make_dimension: zero divisor");
    Dimension d;
    if (auto r = exact_log_ratio(count, base)) d.exact = *r / Rational(divisor);
    d.approx = log_big(count) / (log_big(base) * divisor);
    return d;
}

std::string_view invariant_set_class_name(InvariantSetClass c) {
    switch (c) {
        case InvariantSetClass::Empty: return "Empty";
        case InvariantSetClass::Finite: return "Finite";
        case InvariantSetClass::Continuum: return "Continuum";
    }
    return "?";
}

InvariantSetReport invariant_set_fsk(const LambdaFunction& f) {
    require_form(f, FormKind::Fsk, "invariant_set_fsk");
    const BlockPermutation& theta = f.theta();
    std::vector<Block> fixed = fixed_blocks(theta);
    InvariantSetReport report;
    report.fixed_block_count = fixed.size();
    if (fixed.empty()) {
        report.classification = InvariantSetClass::Empty;
        return report;
    }
    if (fixed.size() == 1) {
        report.classification = InvariantSetClass::Finite;
        report.points.push_back(value_as_kind(f.base(), RadixKind::SAdic, {}, fixed.front()));
        report.dimension = Dimension{Rational(0), 0.0};
        return report;
    }
    report.classification = InvariantSetClass::Continuum;
    report.dimension =
        make_dimension(BigInt(fixed.size()), BigInt(f.base()), theta.block_size());
    return report;
}

bool fplus_fixed_membership(const DigitExpansion& e) {
    if (e.kind() != RadixKind::SAdic) {
        throw std::invalid_argument("fplus_fixed_membership: expansion must be s-adic");
    }
    const Digits& pre = e.preperiod();
    for (std::size_t i = 1; i <= pre.size(); ++i) {
        if (i % 2 == 1 && pre[i - 1] != 0) return false;
    }
    const Digits& per = e.period();
    std::size_t window = std::lcm<std::size_t>(per.size(), 2);
    for (std::size_t t = 0; t < window; ++t) {
        std::size_t position = pre.size() + 1 + t;
        if (position % 2 == 1 && per[t % per.size()] != 0) return false;
    }
    return true;
}

Rational fplus_fixed_dimension(unsigned base) {
    // alpha solving s * (1/s)^(2 alpha) = 1, i.e. 2 alpha = log_s s.
    auto r = exact_log_ratio(BigInt(base), BigInt(base));
    return *r / 2;
}

EquationCheck check_eq5(const DigitExpansion& e) {
    if (e.kind() != RadixKind::SAdic) {
        throw std::invalid_argument("check_eq5: expansion must be s-adic");
    }
    const long long s = e.base();
    DigitExpansion comp = complement(e);
    EquationCheck out;
    out.lhs = value_as_kind(e.base(), RadixKind::NegaSAdic, e.preperiod(), e.period()) +
              value_as_kind(e.base(), RadixKind::NegaSAdic, comp.preperiod(), comp.period());
    out.expected = Rational(-(s - 1), s + 1);
    out.holds = out.lhs == out.expected;
    return out;
}

EquationCheck check_eq6(const DigitExpansion& e) {
    if (e.kind() != RadixKind::NegaSAdic) {
        throw std::invalid_argument("check_eq6: expansion must be nega-s-adic");
    }
    DigitExpansion comp = complement(e);
    EquationCheck out;
    out.lhs = value_as_kind(e.base(), RadixKind::SAdic, e.preperiod(), e.period()) +
              value_as_kind(e.base(), RadixKind::SAdic, comp.preperiod(), comp.period());
    out.expected = Rational(1);
    out.holds = out.lhs == out.expected;
    return out;
}

JumpReport one_sided_limits(const LambdaFunction& f, const Rational& x0) {
    DigitExpansion e = expansion_from_rational(x0, f.base(), f.domain_kind());
    std::optional<DigitExpansion> twin = dual_representation(e);
    if (!twin) {
        throw std::domain_error("one_sided_limits: " + x0.to_string() +
                                " is not a dual-representation point; the function is "
                                "continuous there");
    }
    Rational v_canonical = rational_from_expansion(apply_digits(f, e));
    Rational v_twin = rational_from_expansion(apply_digits(f, *twin));

    JumpReport report;
    report.point = x0;
    report.value = v_canonical;
    if (f.domain_kind() == RadixKind::SAdic) {
        // Approach from above shares digits with the terminating (canonical)
        // representation, from below with the (s-1)-tail twin.
        report.right_limit = v_canonical;
        report.left_limit = v_twin;
    } else {
        // Nega-s-adic: the admissible ((s-1),0)-tail side carries the left
        // limit, the excluded (0,(s-1)) twin the right.
        report.left_limit = v_canonical;
        report.right_limit = v_twin;
    }
    report.jump = report.right_limit - report.left_limit;
    return report;
}

Rational jump_closed_form(const LambdaFunction& f, const Rational& x0) {
    require_form(f, FormKind::Fsk, "jump_closed_form");
    DigitExpansion e = expansion_from_rational(x0, f.base(), f.domain_kind());
    if (normalized(e).period() != Digits{0} || e.preperiod().empty()) {
        throw std::domain_error("jump_closed_form: " + x0.to_string() +
                                " is not a terminating s-adic rational");
    }
    const unsigned s = f.base();
    const unsigned k = f.block_size();
    const Digits& beta = e.preperiod();
    const std::size_t n = beta.size();
    const std::size_t r = k * ((n - 1) / k); // last block boundary before n
    const std::size_t t = r + k;

    Block right_block(k), left_block(k);
    for (std::size_t j = r + 1; j <= t; ++j) {
        std::size_t i = j - r - 1;
        right_block[i] = j <= n ? beta[j - 1] : 0;
        left_block[i] = j < n ? beta[j - 1] : (j == n ? beta[n - 1] - 1 : s - 1);
    }
    const BlockPermutation& theta = f.theta();
    BigInt delta = theta.apply_index(static_cast<std::uint32_t>(encode_block(s, right_block)));
    BigInt gamma = theta.apply_index(static_cast<std::uint32_t>(encode_block(s, left_block)));
    BigInt zeros_img = theta.apply_index(static_cast<std::uint32_t>(
        encode_block(s, Block(k, 0))));
    BigInt tops_img = theta.apply_index(static_cast<std::uint32_t>(
        encode_block(s, Block(k, s - 1))));

    BigInt sk1 = pow_int(BigInt(s), k) - 1;
    Rational split = Rational(delta - gamma, pow_int(BigInt(s), static_cast<unsigned>(t)));
    Rational tail = Rational(zeros_img - tops_img,
                             sk1 * pow_int(BigInt(s), static_cast<unsigned>(t)));
    return split + tail;
}

namespace {

std::optional<WellDefinednessWitness> welldefinedness_search_sadic(const LambdaFunction& f,
                                                                   unsigned depth) {
    const unsigned s = f.base();
    for (unsigned n = 1; n <= depth; ++n) {
        std::uint64_t den = checked_pow_u64(s, n, UINT64_MAX / 2);
        for (std::uint64_t a = 1; a < den; ++a) {
            if (a % s == 0) continue; // already covered at a smaller denominator
            Digits pre = digits_of_integer(a, s, n);
            DigitExpansion canonical = DigitExpansion::make(s, RadixKind::SAdic, pre, {0});
            Digits twin_pre = pre;
            twin_pre.back() -= 1;
            DigitExpansion twin =
                DigitExpansion::make(s, RadixKind::SAdic, twin_pre, {s - 1});
            Rational v1 = rational_from_expansion(apply_digits(f, canonical));
            Rational v2 = rational_from_expansion(apply_digits(f, twin));
            if (v1 != v2) {
                return WellDefinednessWitness{Rational(BigInt(a), BigInt(den)), v1, v2};
            }
        }
    }
    return std::nullopt;
}

std::optional<WellDefinednessWitness> welldefinedness_search_nega(const LambdaFunction& f,
                                                                  unsigned depth) {
    const unsigned s = f.base();
    for (unsigned n = 1; n <= depth; ++n) {
        std::uint64_t combos = checked_pow_u64(s, n, UINT64_MAX / 2);
        for (std::uint64_t a = 0; a < combos; ++a) {
            Digits pre = digits_of_integer(a, s, n);
            if (pre.back() == 0) continue; // not a normalized dual form
            DigitExpansion canonical =
                DigitExpansion::make(s, RadixKind::NegaSAdic, pre, {s - 1, 0});
            Digits twin_pre = pre;
            twin_pre.back() -= 1;
            DigitExpansion twin =
                DigitExpansion::make(s, RadixKind::NegaSAdic, twin_pre, {0, s - 1});
            Rational v1 = rational_from_expansion(apply_digits(f, canonical));
            Rational v2 = rational_from_expansion(apply_digits(f, twin));
            if (v1 != v2) {
                return WellDefinednessWitness{rational_from_expansion(canonical), v1, v2};
            }
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<WellDefinednessWitness> welldefinedness_witness(const LambdaFunction& f,
                                                              unsigned depth) {
    if (f.domain_kind() == RadixKind::SAdic) return welldefinedness_search_sadic(f, depth);
    return welldefinedness_search_nega(f, depth);
}

MonotonicityWitness monotonicity_counterexample(const LambdaFunction& f, unsigned depth) {
    if (is_lambda_linear(f) != LinearityClass::NotLinear) {
        throw std::invalid_argument(
            "monotonicity_counterexample: the linear forms are monotonic");
    }
    const unsigned s = f.base();
    const Rational lo = f.domain_min();
    for (unsigned n = 1; n <= depth; ++n) {
        std::uint64_t cells = checked_pow_u64(s, n, 1u << 24);
        BigInt den = pow_int(BigInt(s), n);
        std::vector<Rational> grid, values;
        grid.reserve(cells + 1);
        values.reserve(cells + 1);
        for (std::uint64_t i = 0; i <= cells; ++i) {
            Rational x = lo + Rational(BigInt(i), den);
            grid.push_back(x);
            values.push_back(evaluate_point(f, x));
        }
        std::ptrdiff_t rise = -1, fall = -1;
        for (std::size_t i = 0; i + 1 < values.size(); ++i) {
            if (rise < 0 && values[i] < values[i + 1]) rise = static_cast<std::ptrdiff_t>(i);
            if (fall < 0 && values[i] > values[i + 1]) fall = static_cast<std::ptrdiff_t>(i);
            if (rise >= 0 && fall >= 0) break;
        }
        if (rise < 0 || fall < 0) continue;
        MonotonicityWitness w;
        if (rise < fall) {
            // Up then down: peak between the first rise and the first fall.
            std::size_t peak = static_cast<std::size_t>(rise) + 1;
            for (std::size_t i = peak; i <= static_cast<std::size_t>(fall); ++i) {
                if (values[i] > values[peak]) peak = i;
            }
            w = {grid[static_cast<std::size_t>(rise)], grid[peak],
                 grid[static_cast<std::size_t>(fall) + 1],
                 values[static_cast<std::size_t>(rise)], values[peak],
                 values[static_cast<std::size_t>(fall) + 1]};
        } else {
            std::size_t dip = static_cast<std::size_t>(fall) + 1;
            for (std::size_t i = dip; i <= static_cast<std::size_t>(rise); ++i) {
                if (values[i] < values[dip]) dip = i;
            }
            w = {grid[static_cast<std::size_t>(fall)], grid[dip],
                 grid[static_cast<std::size_t>(rise) + 1],
                 values[static_cast<std::size_t>(fall)], values[dip],
                 values[static_cast<std::size_t>(rise) + 1]};
        }
        return w;
    }
    throw std::runtime_error("monotonicity_counterexample: no witness within depth " +
                             std::to_string(depth));
}

std::optional<NoninjectivityWitness> noninjectivity_witness(const LambdaFunction& f,
                                                            unsigned depth) {
    require_form(f, FormKind::Fsk, "noninjectivity_witness");
    if (classify_linearity(f.theta()) != Linearity::Other) {
        throw std::invalid_argument(
            "noninjectivity_witness: identity/complement permutations are bijective");
    }
    const unsigned s = f.base();
    LambdaFunction inverse = LambdaFunction::make_fsk(f.theta().inverse());
    for (unsigned n = 1; n <= depth; ++n) {
        std::uint64_t den = checked_pow_u64(s, n, UINT64_MAX / 2);
        for (std::uint64_t g = 1; g < den; ++g) {
            if (g % s == 0) continue;
            Rational y{BigInt(g), BigInt(den)};
            Digits gamma = digits_of_integer(g, s, n);
            DigitExpansion y_term = DigitExpansion::make(s, RadixKind::SAdic, gamma, {0});
            Digits gamma_twin = gamma;
            gamma_twin.back() -= 1;
            DigitExpansion y_twin =
                DigitExpansion::make(s, RadixKind::SAdic, gamma_twin, {s - 1});

            Rational x1 = rational_from_expansion(apply_digits(inverse, y_term));
            Rational x2 = rational_from_expansion(apply_digits(inverse, y_twin));
            if (x1 == x2) continue;
            // The pullback produced candidate preimages; verify them through
            // the forward map under canonical representations.
            if (evaluate_point(f, x1) == y && evaluate_point(f, x2) == y) {
                return NoninjectivityWitness{x1, x2, y};
            }
        }
    }
    return std::nullopt;
}

QuotientTrace difference_quotients(const LambdaFunction& f, const DigitExpansion& x0,
                                   Digit c, unsigned depth) {
    if (x0.kind() != f.domain_kind() || x0.base() != f.base()) {
        throw std::invalid_argument("difference_quotients: x0 must lie in the domain");
    }
    if (c >= f.base()) throw std::invalid_argument("difference_quotients: digit out of range");
    if (std::find(x0.period().begin(), x0.period().end(), c) == x0.period().end()) {
        throw std::invalid_argument(
            "difference_quotients: digit c must occur infinitely often (inside the period)");
    }

    const unsigned s = f.base();
    const std::size_t L = x0.preperiod().size();
    const std::size_t p = x0.period().size();
    const unsigned k = f.block_size();

    QuotientTrace trace{x0, c, {}, {}};
    Rational x0v = rational_from_expansion(x0);
    Rational fx0 = rational_from_expansion(apply_digits(f, x0));

    for (unsigned n = 1; n <= depth; ++n) {
        if (x0.digit_at(n) != c) continue;
        for (Digit alpha = 0; alpha < s; ++alpha) {
            if (alpha == c) continue;
            Digits pre;
            Digits per;
            if (n <= L) {
                pre = x0.preperiod();
                per = x0.period();
            } else {
                pre = prefix_digits(x0, n);
                per = x0.period();
                std::size_t shift = (n - L) % p;
                std::rotate(per.begin(), per.begin() + static_cast<std::ptrdiff_t>(shift),
                            per.end());
            }
            pre[n - 1] = alpha;
            DigitExpansion xn = DigitExpansion::make(s, x0.kind(), std::move(pre),
                                                     std::move(per));
            Rational xnv = rational_from_expansion(xn);
            Rational fxn = rational_from_expansion(apply_digits(f, xn));
            trace.entries.push_back(QuotientEntry{n, alpha, (fxn - fx0) / (xnv - x0v)});
        }
    }

    // The quotient at position n depends on the surrounding block, the offset
    // of n inside it, and (on nega domains) the parity of n; all of these
    // repeat with period lcm(|period|, k, 2) once past the aligned preperiod.
    std::size_t regime_start = ((L + k - 1) / k) * k;
    std::size_t cycle = std::lcm(std::lcm(p, static_cast<std::size_t>(k)),
                                 static_cast<std::size_t>(2));
    std::size_t n_hi = 0;
    for (const QuotientEntry& entry : trace.entries) {
        if (entry.position > regime_start) n_hi = std::max<std::size_t>(n_hi, entry.position);
    }
    if (n_hi > 0) {
        std::size_t window_lo = n_hi > cycle ? n_hi - cycle : 0;
        window_lo = std::max(window_lo, regime_start);
        std::set<Rational> values;
        for (const QuotientEntry& entry : trace.entries) {
            if (entry.position > window_lo && entry.position <= n_hi) {
                values.insert(entry.quotient);
            }
        }
        trace.persistent_values.assign(values.begin(), values.end());
    }
    return trace;
}

IntegralResult lebesgue_integral_exact(const LambdaFunction& f, unsigned riemann_levels) {
    const unsigned s = f.base();
    const unsigned K = f.block_size();
    const BigInt sK = pow_int(BigInt(s), K);

    // Rank-K cells of the domain decompose f into an offset per cell plus a
    // contracted copy of f itself; theta being a bijection makes the offsets
    // sum over all blocks. Solve I = b + u*I.
    Rational b, u;
    if (f.range_kind() == RadixKind::SAdic) {
        // offsets are block values sum(b_j / s^j): total (s^K - 1)/2 over all
        // s^K blocks, contraction +s^-K.
        b = Rational(sK - 1, 2 * sK);
        u = Rational(1, sK);
    } else {
        // offsets are alternating block values: each digit position j
        // contributes s^(K-1) * s(s-1)/2 * (-1)^j s^-j over all blocks, so the
        // per-cell mean is (s-1)/2 * sum_j (-1)^j s^-j; contraction (-s)^-K.
        Rational alt; // sum_{j=1..K} (-1)^j s^-j
        for (unsigned j = 1; j <= K; ++j) {
            Rational term(1, pow_int(BigInt(s), j));
            alt += (j % 2 == 1) ? -term : term;
        }
        b = Rational(static_cast<long long>(s) - 1, 2) * alt;
        u = Rational(K % 2 == 1 ? -1 : 1, sK);
    }
    IntegralResult result;
    result.exact = b / (Rational(1) - u);
    for (unsigned m = 1; m <= riemann_levels; ++m) {
        unsigned t = m * K;
        result.riemann_estimates.emplace_back(t, riemann_midpoint_sum(f, t));
    }
    return result;
}

Rational riemann_midpoint_sum(const LambdaFunction& f, unsigned rank_digits) {
    const unsigned s = f.base();
    std::uint64_t cells = checked_pow_u64(s, rank_digits, 1u << 26);
    const BigInt den = pow_int(BigInt(s), rank_digits);
    const Rational lo = f.domain_min();
    Rational sum;
    for (std::uint64_t i = 0; i < cells; ++i) {
        Rational mid = lo + Rational(BigInt(i) * 2 + 1, den * 2);
        sum += evaluate_point(f, mid);
    }
    return sum / Rational(den);
}

namespace {

BoxCountEntry box_count_impl(const LambdaFunction& f, unsigned rank_m,
                             std::uint64_t cell_budget) {
    const unsigned s = f.base();
    const unsigned t = rank_m * f.block_size();
    const std::uint64_t cells = checked_pow_u64(s, t, cell_budget);

    // Each input cylinder maps into exactly one output cylinder (the prefix
    // map is blockwise-deterministic); counting pairs is counting inputs. The
    // enumeration's content is the bijectivity of the image prefixes.
    std::vector<bool> seen(cells, false);
    Digits in(t, 0);
    BigInt count = 0;
    for (std::uint64_t i = 0; i < cells; ++i) {
        Digits out = evaluate_prefix(f, in);
        std::uint64_t out_index = 0;
        for (Digit d : out) out_index = out_index * s + d;
        if (seen[out_index]) {
            throw std::logic_error("graph_box_count: image prefixes are not distinct");
        }
        seen[out_index] = true;
        ++count;
        for (std::size_t pos = t; pos-- > 0;) { // odometer increment
            if (++in[pos] < s) break;
            in[pos] = 0;
        }
    }
    BoxCountEntry entry;
    entry.rank_m = rank_m;
    entry.rank_digits = t;
    entry.count = count;
    entry.estimate = make_dimension(count, BigInt(s), t);
    return entry;
}

} // namespace

BoxCountEntry graph_box_count(const LambdaFunction& f, unsigned rank_m,
                              std::uint64_t cell_budget) {
    if (rank_m == 0) throw std::invalid_argument("graph_box_count: rank must be >= 1");
    return box_count_impl(f, rank_m, cell_budget);
}

BoxCountSeries graph_box_series(const LambdaFunction& f, const std::vector<unsigned>& ranks,
                                std::uint64_t cell_budget) {
    BoxCountSeries series;
    for (unsigned m : ranks) series.entries.push_back(graph_box_count(f, m, cell_budget));
    return series;
}

BoxCountEntry invariant_set_box_count(const LambdaFunction& f, unsigned rank_m) {
    InvariantSetReport report = invariant_set_fsk(f);
    if (report.classification == InvariantSetClass::Empty) {
        throw std::invalid_argument(
            "invariant_set_box_count: the invariant set is empty, nothing to count");
    }
    if (rank_m == 0) throw std::invalid_argument("invariant_set_box_count: rank must be >= 1");
    const unsigned t = rank_m * f.block_size();
    BoxCountEntry entry;
    entry.rank_m = rank_m;
    entry.rank_digits = t;
    entry.count = pow_int(BigInt(report.fixed_block_count), rank_m);
    entry.estimate = make_dimension(entry.count, BigInt(f.base()), t);
    return entry;
}

void write_box_series_csv(std::ostream& os, const BoxCountSeries& series) {
    os << "rank,side_digits,count,estimate\n";
    for (const BoxCountEntry& e : series.entries) {
        os << e.rank_m << "," << e.rank_digits << "," << e.count.str() << ","
           << e.estimate.to_string() << "\n";
    }
}

void write_graph_csv(std::ostream& os, const LambdaFunction& f, unsigned rank_m,
                     std::uint64_t cell_budget) {
    const unsigned s = f.base();
    const unsigned t = rank_m * f.block_size();
    const std::uint64_t cells = checked_pow_u64(s, t, cell_budget);
    const BigInt den = pow_int(BigInt(s), t);
    const Rational lo = f.domain_min();
    os << "# " << form_name(f.form()) << " sampled at rank-" << rank_m
       << " grid left endpoints; dual points take the canonical branch\n";
    os << "x,f_x,f_x_decimal\n";
    for (std::uint64_t i = 0; i < cells; ++i) {
        Rational x = lo + Rational(BigInt(i), den);
        Rational fx = evaluate_point(f, x);
        os << x.to_string() << "," << fx.to_string() << "," << fx.to_decimal(15) << "\n";
    }
}

} // namespace lambdafn
