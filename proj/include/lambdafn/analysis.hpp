#pragma once

// Verifiers and estimators for the analytic and fractal properties of the six
// function forms: invariant sets and their dimensions, the two reflection
// functional equations, one-sided limits and jumps at dual-representation
// points, difference-quotient traces, graph box counting, and the exact
// Lebesgue integral with midpoint Riemann cross-checks.
//
// Everything here is exact rational arithmetic; doubles appear only in
// dimension approximations next to their exact counterparts.

#include "lambdafn/digits.hpp"
#include "lambdafn/lambda.hpp"
#include "lambdafn/rational.hpp"
#include "lambdafn/theta.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lambdafn {

// log_base(count) as an exact rational when count = base^(p/q) for integers
// p, q (equivalently both are powers of a common primitive root); nullopt
// when the ratio is irrational.
std::optional<Rational> exact_log_ratio(const BigInt& count, const BigInt& base);

// A dimension value: exact rational where the defining counts are exact
// powers, otherwise the 12-digit decimal the reports fall back to.
struct Dimension {
    std::optional<Rational> exact;
    double approx = 0.0;

    std::string to_string() const;
    bool operator==(const Dimension& o) const;
};

Dimension make_dimension(const BigInt& count, const BigInt& base, unsigned divisor);

// ---------------------------------------------------------------------------
// Invariant sets

enum class InvariantSetClass : std::uint8_t { Empty, Finite, Continuum };
std::string_view invariant_set_class_name(InvariantSetClass c);

struct InvariantSetReport {
    InvariantSetClass classification = InvariantSetClass::Empty;
    std::size_t fixed_block_count = 0;      // j
    std::vector<Rational> points;           // populated when Finite
    std::optional<Dimension> dimension;     // log_s(j)/k when Continuum, 0 when
                                            // Finite, absent when Empty
};

// Classifies {x : f(x) = x} for an fsk-form function from the fixed blocks of
// its permutation: j = 0 empty, j = 1 the single point with the fixed block
// repeating, j >= 2 a continuum of dimension log_s(j)/k.
InvariantSetReport invariant_set_fsk(const LambdaFunction& f);

// Membership in {x : fplus(x) = x}: every odd-position digit is 0.
bool fplus_fixed_membership(const DigitExpansion& e);

// Dimension of that set: the alpha solving s*(1/s)^(2 alpha) = 1, always 1/2.
Rational fplus_fixed_dimension(unsigned base);

// ---------------------------------------------------------------------------
// Functional equations

struct EquationCheck {
    Rational lhs;
    Rational expected;
    bool holds = false;
};

// fplus(e) + fplus(complement e) == -(s-1)/(s+1), at digit-sequence level
// (no canonicality requirement on e). e must be s-adic.
EquationCheck check_eq5(const DigitExpansion& e);

// fplusinv(e) + fplusinv(complement e) == 1. e must be nega-s-adic.
EquationCheck check_eq6(const DigitExpansion& e);

// ---------------------------------------------------------------------------
// Discontinuities

struct JumpReport {
    Rational point;
    Rational left_limit;
    Rational right_limit;
    Rational value;
    Rational jump; // right_limit - left_limit
};

// One-sided limits at a dual-representation point x0 of f's domain, computed
// by evaluating f on both digit representations of x0. On the s-adic side the
// terminating representation carries the right limit; on the nega-s-adic side
// the admissible ((s-1),0)-tail carries the left limit. Throws
// std::domain_error when x0 is not a dual point (f is continuous there).
JumpReport one_sided_limits(const LambdaFunction& f, const Rational& x0);

// Independent closed-form route for fsk forms: blockwise image difference at
// the split block plus the repeating-image-block tail difference. Used to
// cross-check one_sided_limits; the two are computed from different formulas.
Rational jump_closed_form(const LambdaFunction& f, const Rational& x0);

// ---------------------------------------------------------------------------
// Well-definedness / monotonicity / injectivity witnesses

struct WellDefinednessWitness {
    Rational point;
    Rational value_canonical;
    Rational value_dual;
};

// Searches dual-representation points (denominator s^n, n <= depth, smallest
// denominator then smallest numerator; nega analogs in preperiod-length then
// lexicographic order) for one where the two representations evaluate
// differently. Absent for the linear forms.
std::optional<WellDefinednessWitness> welldefinedness_witness(const LambdaFunction& f,
                                                              unsigned depth = 6);

struct MonotonicityWitness {
    Rational x1, x2, x3;
    Rational f1, f2, f3; // f1 < f2 > f3 or f1 > f2 < f3
};

// Scans grid points lo + i/s^n, n = 1..depth, for a strict local extremum.
// Requires a non-linear f; throws std::runtime_error if the search space is
// exhausted (which would itself contradict non-linearity evidence).
MonotonicityWitness monotonicity_counterexample(const LambdaFunction& f, unsigned depth);

struct NoninjectivityWitness {
    Rational x1, x2;  // distinct points
    Rational image;   // common value f(x1) = f(x2)
};

// For fsk forms with theta neither identity nor complement: pulls the two
// representations of a terminating image value back through theta^-1 and
// verifies both preimages evaluate to it. Absent if no pair is found within
// depth.
std::optional<NoninjectivityWitness> noninjectivity_witness(const LambdaFunction& f,
                                                            unsigned depth);

// ---------------------------------------------------------------------------
// Difference quotients

struct QuotientEntry {
    unsigned position;  // perturbed digit position n
    Digit replacement;  // the digit substituted for c
    Rational quotient;  // (f(x_n) - f(x0)) / (x_n - x0), exact
};

struct QuotientTrace {
    DigitExpansion point;
    Digit fixed_digit = 0;
    std::vector<QuotientEntry> entries;
    // Quotient values realized in the last full pattern cycle below the depth;
    // the quotient sequence is eventually periodic, so these are exactly the
    // values occurring at infinitely many positions.
    std::vector<Rational> persistent_values;
};

// Perturbs each position n <= depth where x0 carries digit c (which must occur
// infinitely often, i.e. inside the period) to every other digit and records
// the exact difference quotients.
QuotientTrace difference_quotients(const LambdaFunction& f, const DigitExpansion& x0,
                                   Digit c, unsigned depth);

// ---------------------------------------------------------------------------
// Integral

struct IntegralResult {
    Rational exact;
    // (rank in digits t, midpoint sum over s^t cells); the sums converge to
    // `exact` at rate s^-t.
    std::vector<std::pair<unsigned, Rational>> riemann_estimates;
};

// Solves the self-similarity recursion of the form symbolically. Forms with
// s-adic range satisfy I = (s^K - 1)/(2 s^K) + s^-K I and integrate to 1/2;
// forms with nega-s-adic range satisfy I = -(s-1)/(2(s+1))(1 - u) + u I with
// u = (-s)^-K and integrate to -(s-1)/(2(s+1)), the midpoint of their range
// interval. Riemann estimates are midpoint sums at ranks m = 1..riemann_levels
// (rank in blocks; t = m*k digits).
IntegralResult lebesgue_integral_exact(const LambdaFunction& f, unsigned riemann_levels = 0);

// Midpoint sum over s^rank_digits equal cells of the domain interval.
Rational riemann_midpoint_sum(const LambdaFunction& f, unsigned rank_digits);

// ---------------------------------------------------------------------------
// Box counting

struct BoxCountEntry {
    unsigned rank_m = 0;       // rank index m
    unsigned rank_digits = 0;  // t = m*k; squares have side s^-t
    BigInt count;              // squares of rank t meeting the graph
    Dimension estimate;        // log(count) / (t log s)
};

struct BoxCountSeries {
    std::vector<BoxCountEntry> entries;
};

// Exact square count at rank m: enumerates all s^(mk) input digit cylinders,
// maps each prefix, and counts (input cell, output cell) pairs. Also verifies
// the image prefixes form a bijection. Throws std::length_error when s^(mk)
// exceeds the cell budget.
BoxCountEntry graph_box_count(const LambdaFunction& f, unsigned rank_m,
                              std::uint64_t cell_budget = 1000000);

BoxCountSeries graph_box_series(const LambdaFunction& f, const std::vector<unsigned>& ranks,
                                std::uint64_t cell_budget = 1000000);

// Rank-mk cylinder count for the invariant set of an fsk form: j^m (1 at
// every rank for the single-point set), with estimate log(j^m)/(mk log s)
// equal to the set's dimension at every rank. Empty sets are an error.
BoxCountEntry invariant_set_box_count(const LambdaFunction& f, unsigned rank_m);

// ---------------------------------------------------------------------------
// Serialization

// CSV "rank,side_digits,count,estimate"; exact estimates print as fractions.
void write_box_series_csv(std::ostream& os, const BoxCountSeries& series);

// CSV "x,f_x,f_x_decimal" sampled at the left endpoints of the rank-m grid.
// At dual points the sample takes the canonical branch (the right limit on
// s-adic domains, the left limit on nega-s-adic domains); the header says so.
void write_graph_csv(std::ostream& os, const LambdaFunction& f, unsigned rank_m,
                     std::uint64_t cell_budget = 1000000);

} // namespace lambdafn
