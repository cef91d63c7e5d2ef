#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lambdafn/analysis.hpp"
#include "oracles.hpp"

#include <random>
#include <sstream>

using namespace lambdafn;
using test::random_expansion;
using test::random_rational_in_interval;

namespace {

LambdaFunction f31() {
    return LambdaFunction::make_fsk(
        BlockPermutation::from_table(3, 1, {{{0}, {0}}, {{1}, {2}}, {{2}, {1}}}));
}

LambdaFunction f22() {
    return LambdaFunction::make_fsk(BlockPermutation::from_table(
        2, 2, {{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}, {{1, 0}, {0, 0}}, {{1, 1}, {0, 1}}}));
}

LambdaFunction half_fixed_f41() {
    // Base 4, digits 2 and 3 swapped: fixed digits {0, 1}, dimension 1/2.
    return LambdaFunction::make_fsk(BlockPermutation::from_table(
        4, 1, {{{0}, {0}}, {{1}, {1}}, {{2}, {3}}, {{3}, {2}}}));
}

BlockPermutation random_permutation(std::mt19937_64& rng, unsigned s, unsigned k) {
    std::uint64_t n = 1;
    for (unsigned i = 0; i < k; ++i) n *= s;
    std::vector<std::uint32_t> images(n);
    std::iota(images.begin(), images.end(), 0u);
    std::shuffle(images.begin(), images.end(), rng);
    return BlockPermutation::from_images(s, k, std::move(images));
}

} // namespace

TEST_CASE("exact_log_ratio") {
    CHECK(*exact_log_ratio(BigInt(2), BigInt(4)) == Rational(1, 2));
    CHECK(*exact_log_ratio(BigInt(8), BigInt(2)) == Rational(3));
    CHECK(*exact_log_ratio(BigInt(27), BigInt(9)) == Rational(3, 2));
    CHECK(*exact_log_ratio(BigInt(1), BigInt(7)) == Rational(0));
    CHECK(!exact_log_ratio(BigInt(12), BigInt(6)).has_value());
    CHECK(!exact_log_ratio(BigInt(3), BigInt(2)).has_value());
}

TEST_CASE("invariant sets of fsk forms") {
    InvariantSetReport fin = invariant_set_fsk(f31());
    CHECK(fin.classification == InvariantSetClass::Finite);
    CHECK(fin.fixed_block_count == 1);
    REQUIRE(fin.points.size() == 1);
    CHECK(fin.points[0] == Rational(0));
    CHECK(fin.dimension->exact == Rational(0));

    InvariantSetReport empty = invariant_set_fsk(f22());
    CHECK(empty.classification == InvariantSetClass::Empty);
    CHECK(empty.fixed_block_count == 0);
    CHECK(!empty.dimension.has_value());

    InvariantSetReport cont = invariant_set_fsk(half_fixed_f41());
    CHECK(cont.classification == InvariantSetClass::Continuum);
    CHECK(cont.fixed_block_count == 2);
    REQUIRE(cont.dimension.has_value());
    CHECK(cont.dimension->exact == Rational(1, 2));

    CHECK_THROWS_AS(invariant_set_fsk(LambdaFunction::make_fplus(2)), std::invalid_argument);
}

TEST_CASE("finite invariant point is the repeating fixed block") {
    // Identity on one digit of a two-digit alphabet pinned by a 3-cycle on the rest.
    LambdaFunction f = LambdaFunction::make_fsk(BlockPermutation::from_table(
        4, 1, {{{0}, {0}}, {{1}, {2}}, {{2}, {3}}, {{3}, {1}}}));
    InvariantSetReport rep = invariant_set_fsk(f);
    REQUIRE(rep.classification == InvariantSetClass::Finite);
    CHECK(rep.points[0] == Rational(0));
    CHECK(evaluate_point(f, rep.points[0]) == rep.points[0]);

    LambdaFunction g = LambdaFunction::make_fsk(BlockPermutation::from_table(
        3, 1, {{{0}, {1}}, {{1}, {0}}, {{2}, {2}}}));
    InvariantSetReport rep2 = invariant_set_fsk(g);
    REQUIRE(rep2.classification == InvariantSetClass::Finite);
    CHECK(rep2.points[0] == Rational(1)); // repeating digit 2 in base 3
    CHECK(evaluate_point(g, rep2.points[0]) == rep2.points[0]);
}

TEST_CASE("Empty and Finite classifications confirmed on a rank-6 grid") {
    // The pair-shift table has no invariant point at all; the ternary swap
    // fixes only 0.
    for (std::uint64_t i = 0; i <= 64; ++i) {
        Rational x{BigInt(i), BigInt(64)};
        CHECK(evaluate_point(f22(), x) != x);
    }
    for (std::uint64_t i = 0; i <= 729; ++i) {
        Rational x{BigInt(i), BigInt(729)};
        bool invariant = evaluate_point(f31(), x) == x;
        CHECK(invariant == (x == Rational(0)));
    }
}

TEST_CASE("invariant-set classification matches brute force at small sizes") {
    std::mt19937_64 rng(0x5eed0301);
    const std::pair<unsigned, unsigned> sizes[] = {
        {2, 1}, {3, 1}, {4, 1}, {2, 2}, {3, 2}, {2, 3}, {2, 4}}; // s^k up to 16
    for (int trial = 0; trial < 70; ++trial) {
        auto [s, k] = sizes[trial % 7];
        BlockPermutation theta = random_permutation(rng, s, k);
        LambdaFunction f = LambdaFunction::make_fsk(theta);
        InvariantSetReport rep = invariant_set_fsk(f);
        // Brute force: repeating-block points are invariant iff the block is
        // fixed; count them directly.
        std::size_t fixed = 0;
        for (std::uint64_t i = 0; i < theta.table_size(); ++i) {
            Block b = decode_block(s, k, i);
            Rational x = DigitExpansion::make(s, RadixKind::SAdic, {}, b).value();
            bool invariant = evaluate_point(f, x) == x;
            bool fixed_block = theta.apply_index(static_cast<std::uint32_t>(i)) == i;
            // A fixed block always gives an invariant point; a non-fixed block
            // can only give one accidentally through a dual representation.
            if (fixed_block) CHECK(invariant);
            if (fixed_block) ++fixed;
        }
        CHECK(fixed == rep.fixed_block_count);
    }
}

TEST_CASE("fplus fixed set membership and dimension") {
    CHECK(fplus_fixed_membership(DigitExpansion::make(2, RadixKind::SAdic, {}, {0, 1})));
    CHECK(evaluate_point(LambdaFunction::make_fplus(2), Rational(1, 3)) == Rational(1, 3));
    CHECK(!fplus_fixed_membership(DigitExpansion::make(2, RadixKind::SAdic, {1}, {0})));
    CHECK(fplus_fixed_membership(DigitExpansion::make(5, RadixKind::SAdic, {}, {0})));
    CHECK_THROWS_AS(fplus_fixed_membership(DigitExpansion::make(2, RadixKind::NegaSAdic, {}, {0})),
                    std::invalid_argument);

    for (unsigned s : {2u, 3u, 7u}) CHECK(fplus_fixed_dimension(s) == Rational(1, 2));

    // Membership must coincide with the fixed-point property of fplus.
    for (unsigned s : {2u, 3u}) {
        LambdaFunction fp = LambdaFunction::make_fplus(s);
        std::uint64_t den = 1;
        for (int i = 0; i < 6; ++i) den *= s;
        for (std::uint64_t a = 0; a <= den; ++a) {
            Rational x{BigInt(a), BigInt(den)};
            DigitExpansion e = expansion_from_rational(x, s, RadixKind::SAdic);
            CHECK(fplus_fixed_membership(e) == (evaluate_point(fp, x) == x));
        }
    }
}

TEST_CASE("functional equation (5): worked values") {
    EquationCheck a = check_eq5(DigitExpansion::make(2, RadixKind::SAdic, {}, {0, 1}));
    CHECK(a.lhs == Rational(-1, 3));
    CHECK(a.holds);

    // Self-complementary ternary sequence: both terms are -1/4, target -1/2.
    EquationCheck b = check_eq5(DigitExpansion::make(3, RadixKind::SAdic, {}, {1}));
    CHECK(b.lhs == Rational(-1, 2));
    CHECK(b.expected == Rational(-1, 2));
    CHECK(b.holds);

    EquationCheck c = check_eq5(DigitExpansion::make(2, RadixKind::SAdic, {1}, {0}));
    CHECK(c.lhs == Rational(-1, 3));
    CHECK(c.holds);
}

TEST_CASE("functional equation (6): worked values") {
    EquationCheck a = check_eq6(DigitExpansion::make(2, RadixKind::NegaSAdic, {}, {1, 0}));
    CHECK(a.lhs == Rational(1));
    CHECK(a.holds);
    EquationCheck b = check_eq6(DigitExpansion::make(6, RadixKind::NegaSAdic, {}, {0}));
    CHECK(b.holds);
    EquationCheck c = check_eq6(DigitExpansion::make(3, RadixKind::NegaSAdic, {1}, {0}));
    CHECK(c.holds);
}

TEST_CASE("functional equations hold on arbitrary digit sequences") {
    std::mt19937_64 rng(0x5eed0302);
    for (unsigned s = 2; s <= 6; ++s) {
        for (int i = 0; i < 150; ++i) {
            CHECK(check_eq5(random_expansion(rng, s, RadixKind::SAdic)).holds);
            CHECK(check_eq6(random_expansion(rng, s, RadixKind::NegaSAdic)).holds);
        }
    }
}

TEST_CASE("one-sided limits at the worked dual point") {
    JumpReport rep = one_sided_limits(f31(), Rational(1, 3));
    CHECK(rep.left_limit == Rational(1, 6));
    CHECK(rep.right_limit == Rational(2, 3));
    CHECK(rep.value == Rational(2, 3));
    CHECK(rep.jump == Rational(1, 2));
    CHECK(jump_closed_form(f31(), Rational(1, 3)) == rep.jump);

    CHECK_THROWS_WITH_AS(one_sided_limits(f31(), Rational(1, 2)),
                         doctest::Contains("continuous"), std::domain_error);
}

TEST_CASE("linear forms have zero jumps") {
    LambdaFunction identity = LambdaFunction::make_fsk(BlockPermutation::identity(3, 1));
    for (long long a : {1, 2, 4, 7}) {
        JumpReport rep = one_sided_limits(identity, Rational(a, 9));
        CHECK(rep.jump == Rational(0));
        CHECK(rep.left_limit == rep.right_limit);
        CHECK(jump_closed_form(identity, Rational(a, 9)) == Rational(0));
    }
    LambdaFunction comp = LambdaFunction::make_fsk(
        BlockPermutation::from_table(2, 1, {{{0}, {1}}, {{1}, {0}}}));
    CHECK(one_sided_limits(comp, Rational(3, 8)).jump == Rational(0));
}

TEST_CASE("closed-form jump agrees with dual evaluation") {
    std::mt19937_64 rng(0x5eed0303);
    for (int trial = 0; trial < 30; ++trial) {
        unsigned s = trial % 2 == 0 ? 2 : 3;
        unsigned k = trial % 3 == 0 ? 2 : 1;
        LambdaFunction f = LambdaFunction::make_fsk(random_permutation(rng, s, k));
        std::uniform_int_distribution<unsigned> pick_n(1, 4);
        unsigned n = pick_n(rng);
        std::uint64_t den = 1;
        for (unsigned i = 0; i < n; ++i) den *= s;
        std::uniform_int_distribution<std::uint64_t> pick_a(1, den - 1);
        std::uint64_t a = pick_a(rng);
        while (a % s == 0) a = pick_a(rng); // keep the denominator exactly s^n
        Rational x0{BigInt(a), BigInt(den)};
        JumpReport rep = one_sided_limits(f, x0);
        CHECK(jump_closed_form(f, x0) == rep.jump);
        // f is right-continuous at s-adic dual points.
        CHECK(rep.value == rep.right_limit);
    }
}

TEST_CASE("one-sided limits on a nega-s-adic domain") {
    // fplusinv at the dual point -1/6 (admissible 1,(1,0) vs excluded 0,(0,1)).
    LambdaFunction fpi = LambdaFunction::make_fplus_inv(2);
    JumpReport rep = one_sided_limits(fpi, Rational(-1, 6));
    // left: digits 1,1,0,1,0,... as s-adic = 1/2 + 1/4 + 1/16 + ... ; compute both exactly.
    Rational left = DigitExpansion::make(2, RadixKind::SAdic, {1}, {1, 0}).value();
    Rational right = DigitExpansion::make(2, RadixKind::SAdic, {0}, {0, 1}).value();
    CHECK(rep.left_limit == left);
    CHECK(rep.right_limit == right);
    CHECK(rep.value == left);
    CHECK(rep.jump == right - left);

    // Verify the one-sided pairing numerically: approach -1/6 from both sides.
    for (int m = 4; m <= 10; ++m) {
        Rational eps{1, pow_int(BigInt(2), m)};
        Rational below = evaluate_point(fpi, Rational(-1, 6) - eps);
        Rational above = evaluate_point(fpi, Rational(-1, 6) + eps);
        CHECK((below - rep.left_limit).abs() <= Rational(4) * eps);
        CHECK((above - rep.right_limit).abs() <= Rational(4) * eps);
    }
}

TEST_CASE("one-sided pairing verified by approaching the dual point") {
    // fplus at 1/2 (base 2): the terminating side carries the right limit.
    LambdaFunction fp = LambdaFunction::make_fplus(2);
    JumpReport rep = one_sided_limits(fp, Rational(1, 2));
    CHECK(rep.right_limit == Rational(-1, 2));
    CHECK(rep.left_limit == Rational(1, 6));
    CHECK(rep.jump == Rational(-2, 3));
    for (int m = 4; m <= 10; ++m) {
        Rational eps{1, pow_int(BigInt(2), m)};
        Rational below = evaluate_point(fp, Rational(1, 2) - eps);
        Rational above = evaluate_point(fp, Rational(1, 2) + eps);
        CHECK((below - rep.left_limit).abs() <= Rational(4) * eps);
        CHECK((above - rep.right_limit).abs() <= Rational(4) * eps);
    }

    // Same drill for a composite with an s-adic domain.
    LambdaFunction comp = LambdaFunction::compose_form({fp, f22()});
    JumpReport crep = one_sided_limits(comp, Rational(1, 2));
    CHECK(crep.jump == crep.right_limit - crep.left_limit);
    for (int m = 4; m <= 10; ++m) {
        Rational eps{1, pow_int(BigInt(2), m)};
        CHECK((evaluate_point(comp, Rational(1, 2) - eps) - crep.left_limit).abs() <=
              Rational(4) * eps);
        CHECK((evaluate_point(comp, Rational(1, 2) + eps) - crep.right_limit).abs() <=
              Rational(4) * eps);
    }
}

TEST_CASE("well-definedness witnesses") {
    auto w = welldefinedness_witness(f31(), 6);
    REQUIRE(w.has_value());
    CHECK(w->point == Rational(1, 3));
    CHECK(w->value_canonical == Rational(2, 3));
    CHECK(w->value_dual == Rational(1, 6));

    CHECK(!welldefinedness_witness(
               LambdaFunction::make_fsk(BlockPermutation::identity(3, 1)), 5)
               .has_value());
    CHECK(!welldefinedness_witness(
               LambdaFunction::make_fsk(
                   BlockPermutation::from_table(2, 1, {{{0}, {1}}, {{1}, {0}}})),
               5)
               .has_value());

    // fplus distinguishes the two representations everywhere.
    auto wp = welldefinedness_witness(LambdaFunction::make_fplus(2), 4);
    REQUIRE(wp.has_value());
    CHECK(wp->value_canonical != wp->value_dual);

    // Nega-domain search.
    auto wn = welldefinedness_witness(LambdaFunction::make_fplus_inv(2), 4);
    REQUIRE(wn.has_value());
    CHECK(wn->value_canonical != wn->value_dual);
}

TEST_CASE("monotonicity counterexamples") {
    LambdaFunction fp = LambdaFunction::make_fplus(2);
    MonotonicityWitness w = monotonicity_counterexample(fp, 3);
    CHECK(w.x1 < w.x2);
    CHECK(w.x2 < w.x3);
    bool peak = w.f1 < w.f2 && w.f2 > w.f3;
    bool dip = w.f1 > w.f2 && w.f2 < w.f3;
    CHECK(peak != dip);
    CHECK(evaluate_point(fp, w.x1) == w.f1);
    CHECK(evaluate_point(fp, w.x2) == w.f2);
    CHECK(evaluate_point(fp, w.x3) == w.f3);

    MonotonicityWitness w31 = monotonicity_counterexample(f31(), 2);
    CHECK(((w31.f1 < w31.f2 && w31.f2 > w31.f3) || (w31.f1 > w31.f2 && w31.f2 < w31.f3)));

    CHECK_THROWS_AS(monotonicity_counterexample(
                        LambdaFunction::make_fsk(BlockPermutation::identity(2, 1)), 3),
                    std::invalid_argument);
}

TEST_CASE("noninjectivity witnesses") {
    auto w = noninjectivity_witness(f31(), 3);
    REQUIRE(w.has_value());
    CHECK(w->x1 != w->x2);
    CHECK(evaluate_point(f31(), w->x1) == w->image);
    CHECK(evaluate_point(f31(), w->x2) == w->image);

    // The worked pair: 1/3 and 5/6 share the image 2/3.
    CHECK(evaluate_point(f31(), Rational(1, 3)) == Rational(2, 3));
    CHECK(evaluate_point(f31(), Rational(5, 6)) == Rational(2, 3));

    auto w22 = noninjectivity_witness(f22(), 3);
    REQUIRE(w22.has_value());
    CHECK(evaluate_point(f22(), w22->x1) == w22->image);
    CHECK(evaluate_point(f22(), w22->x2) == w22->image);

    CHECK_THROWS_AS(noninjectivity_witness(
                        LambdaFunction::make_fsk(BlockPermutation::identity(2, 2)), 3),
                    std::invalid_argument);
}

TEST_CASE("difference quotients: worked values") {
    DigitExpansion x0 = DigitExpansion::make(3, RadixKind::SAdic, {}, {1});
    QuotientTrace trace = difference_quotients(f31(), x0, 1, 20);
    REQUIRE(trace.persistent_values.size() == 2);
    CHECK(trace.persistent_values[0] == Rational(-1));
    CHECK(trace.persistent_values[1] == Rational(2));
    for (const QuotientEntry& e : trace.entries) {
        CHECK((e.quotient == Rational(-1) || e.quotient == Rational(2)));
    }

    LambdaFunction identity = LambdaFunction::make_fsk(BlockPermutation::identity(3, 1));
    QuotientTrace tid = difference_quotients(identity, x0, 1, 12);
    for (const QuotientEntry& e : tid.entries) CHECK(e.quotient == Rational(1));
    CHECK(tid.persistent_values == std::vector<Rational>{Rational(1)});

    LambdaFunction comp = LambdaFunction::make_fsk(
        BlockPermutation::from_table(2, 1, {{{0}, {1}}, {{1}, {0}}}));
    DigitExpansion y0 = DigitExpansion::make(2, RadixKind::SAdic, {}, {1, 0});
    QuotientTrace tc = difference_quotients(comp, y0, 1, 12);
    for (const QuotientEntry& e : tc.entries) CHECK(e.quotient == Rational(-1));
    CHECK(tc.persistent_values == std::vector<Rational>{Rational(-1)});

    CHECK_THROWS_AS(difference_quotients(f31(), DigitExpansion::make(3, RadixKind::SAdic,
                                                                     {1}, {0}),
                                         1, 10),
                    std::invalid_argument);
}

TEST_CASE("difference quotients are scale-invariant along the period") {
    std::mt19937_64 rng(0x5eed0304);
    for (int trial = 0; trial < 10; ++trial) {
        BlockPermutation theta = random_permutation(rng, 2, 2);
        if (classify_linearity(theta) != Linearity::Other) continue;
        LambdaFunction f = LambdaFunction::make_fsk(theta);
        DigitExpansion x0 = DigitExpansion::make(2, RadixKind::SAdic, {}, {1, 0});
        QuotientTrace trace = difference_quotients(f, x0, 0, 24);
        // Quotients at positions n and n + lcm(p, k, 2) coincide.
        for (const QuotientEntry& a : trace.entries) {
            for (const QuotientEntry& b : trace.entries) {
                if (b.position == a.position + 4 && a.replacement == b.replacement) {
                    CHECK(a.quotient == b.quotient);
                }
            }
        }
    }
}

TEST_CASE("exact integral per form") {
    std::mt19937_64 rng(0x5eed0305);
    for (unsigned s : {2u, 3u, 5u}) {
        long long ss = s;
        Rational nega_mid{-(ss - 1), 2 * (ss + 1)};
        for (unsigned k : {1u, 2u}) {
            BlockPermutation theta = random_permutation(rng, s, k);
            LambdaFunction fsk = LambdaFunction::make_fsk(theta);
            LambdaFunction fp = LambdaFunction::make_fplus(s);
            LambdaFunction fpi = LambdaFunction::make_fplus_inv(s);
            CHECK(lebesgue_integral_exact(fsk).exact == Rational(1, 2));
            CHECK(lebesgue_integral_exact(LambdaFunction::compose_form({fsk, fpi})).exact ==
                  Rational(1, 2));
            // Nega-range forms integrate to the midpoint of their range.
            CHECK(lebesgue_integral_exact(fp).exact == nega_mid);
            CHECK(lebesgue_integral_exact(LambdaFunction::compose_form({fp, fsk})).exact ==
                  nega_mid);
            CHECK(lebesgue_integral_exact(LambdaFunction::compose_form({fp, fsk, fpi})).exact ==
                  nega_mid);
        }
        CHECK(lebesgue_integral_exact(LambdaFunction::make_fplus_inv(s)).exact ==
              Rational(1, 2));
    }
    // The identity integrates to 1/2 like any other fsk form.
    CHECK(lebesgue_integral_exact(LambdaFunction::make_fsk(BlockPermutation::identity(2, 1)))
              .exact == Rational(1, 2));
}

TEST_CASE("riemann midpoint sums converge to the exact integral") {
    std::mt19937_64 rng(0x5eed0306);
    BlockPermutation theta = random_permutation(rng, 2, 2);
    std::vector<LambdaFunction> sample = {
        LambdaFunction::make_fsk(theta),
        LambdaFunction::make_fplus(3),
        LambdaFunction::make_fplus_inv(2),
        LambdaFunction::compose_form({LambdaFunction::make_fplus(2),
                                      LambdaFunction::make_fsk(theta)}),
    };
    for (const LambdaFunction& f : sample) {
        IntegralResult r = lebesgue_integral_exact(f, 3);
        REQUIRE(r.riemann_estimates.size() == 3);
        for (auto& [t, sum] : r.riemann_estimates) {
            // Midpoint sums at rank t differ from the integral by < s^-t.
            Rational bound{1, pow_int(BigInt(f.base()), t)};
            CHECK((sum - r.exact).abs() <= bound);
        }
    }
}

TEST_CASE("graph box counts") {
    BoxCountEntry e1 = graph_box_count(LambdaFunction::make_fplus(2), 3);
    CHECK(e1.count == BigInt(8));
    CHECK(e1.rank_digits == 3);
    CHECK(e1.estimate.exact == Rational(1));

    BoxCountEntry e2 = graph_box_count(f31(), 2);
    CHECK(e2.count == BigInt(9));
    CHECK(e2.estimate.exact == Rational(1));

    BoxCountEntry e3 = graph_box_count(f22(), 3); // rank 3 blocks = 6 digits
    CHECK(e3.count == BigInt(64));
    CHECK(e3.estimate.exact == Rational(1));

    LambdaFunction conj = LambdaFunction::compose_form(
        {LambdaFunction::make_fplus(2), f22(), LambdaFunction::make_fplus_inv(2)});
    BoxCountEntry e4 = graph_box_count(conj, 2);
    CHECK(e4.count == BigInt(16));
    CHECK(e4.estimate.exact == Rational(1));

    CHECK_THROWS_AS(graph_box_count(f31(), 20), std::length_error);

    BoxCountSeries series = graph_box_series(LambdaFunction::make_fplus_inv(3), {1, 2, 3});
    std::ostringstream os;
    write_box_series_csv(os, series);
    CHECK(os.str() ==
          "rank,side_digits,count,estimate\n1,1,3,1\n2,2,9,1\n3,3,27,1\n");
}

TEST_CASE("invariant set box counts") {
    LambdaFunction f = half_fixed_f41();
    BoxCountEntry e = invariant_set_box_count(f, 5);
    CHECK(e.count == BigInt(32));
    CHECK(e.estimate.exact == Rational(1, 2));
    for (unsigned m = 1; m <= 8; ++m) {
        CHECK(invariant_set_box_count(f, m).estimate.exact == Rational(1, 2));
    }

    // Single fixed point: one cylinder at every rank, dimension estimate 0.
    BoxCountEntry single = invariant_set_box_count(f31(), 4);
    CHECK(single.count == BigInt(1));
    CHECK(single.estimate.exact == Rational(0));

    // Identity fixes everything: the whole interval, estimate 1.
    BoxCountEntry whole =
        invariant_set_box_count(LambdaFunction::make_fsk(BlockPermutation::identity(2, 2)), 3);
    CHECK(whole.count == BigInt(64));
    CHECK(whole.estimate.exact == Rational(1));

    CHECK_THROWS_AS(invariant_set_box_count(f22(), 2), std::invalid_argument);
}

TEST_CASE("graph csv sampling") {
    std::ostringstream os;
    write_graph_csv(os, f31(), 1);
    std::string csv = os.str();
    CHECK(csv.find("x,f_x,f_x_decimal") != std::string::npos);
    CHECK(csv.find("1/3,2/3,") != std::string::npos); // canonical (right-limit) branch
    CHECK(csv.find("0,0,0.") != std::string::npos);
}
