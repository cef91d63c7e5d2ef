// Command-line front end: evaluate functions from spec files, run the
// analysis battery, and emit CSV/report artifacts.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parse errors.

#include <CLI11.hpp>

#include "lambdafn/analysis.hpp"
#include "lambdafn/digits.hpp"
#include "lambdafn/lambda.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace lambdafn;

namespace {

struct OutputTarget {
    std::string path; // empty = stdout

    void write(const std::string& content) const {
        if (path.empty()) {
            std::cout << content;
            return;
        }
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
        out << content;
    }
};

std::string interval_string(unsigned s, RadixKind kind) {
    return "[" + interval_min(s, kind).to_string() + ", " + interval_max(s, kind).to_string() +
           "]";
}

std::string function_header(const LambdaFunction& f) {
    std::ostringstream os;
    os << "record: function\n";
    os << "form: " << form_name(f.form()) << "\n";
    os << "s: " << f.base() << "\n";
    if (f.has_theta()) os << "k: " << f.block_size() << "\n";
    os << "domain: " << radix_kind_name(f.domain_kind()) << " "
       << interval_string(f.base(), f.domain_kind()) << "\n";
    os << "range: " << radix_kind_name(f.range_kind()) << " "
       << interval_string(f.base(), f.range_kind()) << "\n";
    return os.str();
}

void append_invariant_set(std::ostringstream& os, const LambdaFunction& f) {
    if (f.form() == FormKind::Fsk) {
        InvariantSetReport rep = invariant_set_fsk(f);
        os << "record: invariant-set\n";
        os << "classification: " << invariant_set_class_name(rep.classification) << "\n";
        os << "fixed-blocks: " << rep.fixed_block_count << "\n";
        for (const Rational& p : rep.points) os << "point: " << p.to_string() << "\n";
        if (rep.dimension) os << "dimension: " << rep.dimension->to_string() << "\n";
        if (rep.classification != InvariantSetClass::Empty) {
            for (unsigned m = 1; m <= 4; ++m) {
                BoxCountEntry e = invariant_set_box_count(f, m);
                os << "cylinders rank " << m << ": " << e.count.str() << " (estimate "
                   << e.estimate.to_string() << ")\n";
            }
        }
        os << "\n";
    } else if (f.form() == FormKind::FPlus || f.form() == FormKind::FPlusInv) {
        os << "record: fixed-set\n";
        os << "characterization: s-adic expansions with every odd-position digit 0\n";
        os << "dimension: " << fplus_fixed_dimension(f.base()).to_string() << "\n\n";
    } else {
        os << "record: invariant-set\n";
        os << "status: classification applies to the fsk and fplus/fplusinv forms only\n\n";
    }
}

int run_eval(const std::string& spec, const std::string& point, bool decimal,
             const OutputTarget& out) {
    LambdaFunction f = load_function_spec(spec);
    Rational x = Rational::parse(point);
    DigitExpansion e = expansion_from_rational(x, f.base(), f.domain_kind());
    DigitExpansion image = canonicalize(apply_digits(f, e));
    Rational y = rational_from_expansion(image);
    std::ostringstream os;
    os << "value: " << y.to_string() << "\n";
    os << "expansion: " << to_literal(image) << "\n";
    if (decimal) os << "decimal: " << y.to_decimal(15) << "\n";
    out.write(os.str());
    return 0;
}

int run_analyze(const std::string& spec, unsigned depth, const OutputTarget& out) {
    LambdaFunction f = load_function_spec(spec);
    std::ostringstream os;
    os << function_header(f) << "\n";

    LinearityClass lin = is_lambda_linear(f);
    os << "record: linearity\n" << "class: " << linearity_name(lin) << "\n\n";

    os << "record: welldefinedness\n";
    if (auto w = welldefinedness_witness(f, depth)) {
        os << "status: witness\n";
        os << "point: " << w->point.to_string() << "\n";
        os << "value_canonical: " << w->value_canonical.to_string() << "\n";
        os << "value_dual: " << w->value_dual.to_string() << "\n\n";
    } else {
        os << "status: absent (single-valued on dual representations)\n\n";
    }

    os << "record: monotonicity\n";
    if (lin == LinearityClass::NotLinear) {
        MonotonicityWitness w = monotonicity_counterexample(f, std::max(2u, depth / 2));
        os << "status: witness\n";
        os << "x: " << w.x1.to_string() << ", " << w.x2.to_string() << ", "
           << w.x3.to_string() << "\n";
        os << "f: " << w.f1.to_string() << ", " << w.f2.to_string() << ", "
           << w.f3.to_string() << "\n\n";
    } else {
        os << "status: skipped (linear form is monotonic)\n\n";
    }

    if (f.form() == FormKind::Fsk && lin == LinearityClass::NotLinear) {
        os << "record: noninjectivity\n";
        if (auto w = noninjectivity_witness(f, depth)) {
            os << "status: witness\n";
            os << "x1: " << w->x1.to_string() << "\n";
            os << "x2: " << w->x2.to_string() << "\n";
            os << "image: " << w->image.to_string() << "\n\n";
        } else {
            os << "status: none found within depth " << depth << "\n\n";
        }
    }

    append_invariant_set(os, f);
    out.write(os.str());
    return 0;
}

int run_invariants(const std::string& spec, const OutputTarget& out) {
    LambdaFunction f = load_function_spec(spec);
    std::ostringstream os;
    os << function_header(f) << "\n";
    append_invariant_set(os, f);
    out.write(os.str());
    return 0;
}

unsigned smallest_rank_with_cells(const LambdaFunction& f, std::uint64_t min_cells) {
    std::uint64_t cells = 1;
    for (unsigned m = 1;; ++m) {
        for (unsigned i = 0; i < f.block_size(); ++i) cells *= f.base();
        if (cells >= min_cells) return m;
    }
}

int run_integral(const std::string& spec, unsigned levels, bool decimal,
                 const OutputTarget& out) {
    LambdaFunction f = load_function_spec(spec);
    if (levels == 0) levels = smallest_rank_with_cells(f, 10000);
    IntegralResult r = lebesgue_integral_exact(f, levels);
    std::ostringstream os;
    os << "record: integral\n";
    os << "exact: " << r.exact.to_string() << "\n";
    if (decimal) os << "exact_decimal: " << r.exact.to_decimal(15) << "\n";
    for (auto& [t, sum] : r.riemann_estimates) {
        os << "riemann rank " << t << ": " << sum.to_string();
        if (decimal) os << " (" << sum.to_decimal(15) << ")";
        os << "\n";
    }
    out.write(os.str());
    return 0;
}

int run_boxdim(const std::string& spec, std::vector<unsigned> ranks, const OutputTarget& out) {
    LambdaFunction f = load_function_spec(spec);
    if (ranks.empty()) {
        std::uint64_t cells = 1;
        bool overflow = false;
        for (unsigned m = 1; !overflow; ++m) {
            for (unsigned i = 0; i < f.block_size(); ++i) {
                if (cells > 1000000ull / f.base()) {
                    overflow = true;
                    break;
                }
                cells *= f.base();
            }
            if (!overflow) ranks.push_back(m);
        }
    }
    BoxCountSeries series = graph_box_series(f, ranks);
    std::ostringstream os;
    write_box_series_csv(os, series);
    out.write(os.str());
    return 0;
}

int run_graph(const std::string& spec, const std::vector<unsigned>& ranks,
              const OutputTarget& out) {
    LambdaFunction f = load_function_spec(spec);
    unsigned m = ranks.empty() ? 2 : ranks.front();
    std::ostringstream os;
    write_graph_csv(os, f, m);
    out.write(os.str());
    return 0;
}

// ---------------------------------------------------------------------------
// verify: the per-function check battery. Deterministic output, exit 1 on any
// failing check.

class Verifier {
public:
    explicit Verifier(std::ostringstream& os) : os_(os) {}

    void check(const std::string& name, bool ok, const std::string& detail = "") {
        os_ << "check " << name << ": " << (ok ? "ok" : "FAIL");
        if (!detail.empty()) os_ << " (" << detail << ")";
        os_ << "\n";
        if (!ok) failed_ = true;
    }

    void skip(const std::string& name, const std::string& why) {
        os_ << "check " << name << ": skipped (" << why << ")\n";
    }

    bool failed() const { return failed_; }

private:
    std::ostringstream& os_;
    bool failed_ = false;
};

int run_verify(const std::string& spec, unsigned depth, const OutputTarget& out) {
    LambdaFunction f = load_function_spec(spec);
    const unsigned s = f.base();
    std::ostringstream os;
    os << function_header(f);
    LinearityClass lin = is_lambda_linear(f);
    os << "linearity: " << linearity_name(lin) << "\n";
    Verifier v(os);

    // Exactness and range containment on a deterministic grid.
    {
        bool exact_ok = true, range_ok = true;
        Rational lo = f.domain_min();
        for (int i = 0; i <= 40; ++i) {
            Rational q = lo + Rational(i, 40);
            DigitExpansion e = expansion_from_rational(q, s, f.domain_kind());
            Rational via_exp = rational_from_expansion(apply_digits(f, e));
            Rational via_pt = evaluate_point(f, q);
            exact_ok = exact_ok && via_exp == via_pt;
            range_ok = range_ok && via_pt >= interval_min(s, f.range_kind()) &&
                       via_pt <= interval_max(s, f.range_kind());
        }
        v.check("expansion/point exactness", exact_ok);
        v.check("range containment", range_ok);
    }

    // Linear closed forms.
    if (lin != LinearityClass::NotLinear) {
        bool ok = true;
        Rational lo = f.domain_min();
        long long ss = s;
        for (int i = 0; i <= 25; ++i) {
            Rational q = lo + Rational(i, 25);
            Rational y = evaluate_point(f, q);
            Rational want = lin == LinearityClass::IdentityLinear
                                ? q
                                : (f.range_kind() == RadixKind::SAdic
                                       ? Rational(1) - q
                                       : Rational(-(ss - 1), ss + 1) - q);
            ok = ok && y == want;
        }
        v.check("linear closed form", ok);
    }

    // Reflection functional equations for the pure reinterpretation maps.
    if (f.form() == FormKind::FPlus || f.form() == FormKind::FPlusInv) {
        std::mt19937_64 rng(0xa11da7a);
        bool ok = true;
        for (int i = 0; i < 100; ++i) {
            std::uniform_int_distribution<std::size_t> pre_len(0, 3), per_len(1, 4);
            std::uniform_int_distribution<Digit> digit(0, s - 1);
            Digits pre(pre_len(rng)), per(per_len(rng));
            for (Digit& d : pre) d = digit(rng);
            for (Digit& d : per) d = digit(rng);
            if (f.form() == FormKind::FPlus) {
                ok = ok &&
                     check_eq5(DigitExpansion::make(s, RadixKind::SAdic, pre, per)).holds;
            } else {
                ok = ok &&
                     check_eq6(DigitExpansion::make(s, RadixKind::NegaSAdic, pre, per)).holds;
            }
        }
        v.check(f.form() == FormKind::FPlus
                    ? "reflection equation f(x)+f(1-x)"
                    : "reflection equation f^-1(y)+f^-1(-(s-1)/(s+1)-y)",
                ok);
    }

    // Well-definedness.
    {
        auto w = welldefinedness_witness(f, depth);
        if (lin == LinearityClass::NotLinear) {
            v.check("welldefinedness witness",
                    w.has_value() && w->value_canonical != w->value_dual,
                    w ? "at " + w->point.to_string() : "none within depth");
        } else {
            v.check("single-valued on dual points", !w.has_value());
        }
    }

    // Monotonicity.
    if (lin == LinearityClass::NotLinear) {
        MonotonicityWitness w = monotonicity_counterexample(f, 4);
        bool peak = w.f1 < w.f2 && w.f2 > w.f3;
        bool dip = w.f1 > w.f2 && w.f2 < w.f3;
        bool ok = (w.x1 < w.x2 && w.x2 < w.x3) && (peak || dip);
        v.check("non-monotonicity witness", ok,
                "at " + w.x1.to_string() + ", " + w.x2.to_string() + ", " + w.x3.to_string());
    } else {
        v.skip("non-monotonicity witness", "linear form is monotonic");
    }

    // Noninjectivity for fsk with a non-linear table.
    if (f.form() == FormKind::Fsk && lin == LinearityClass::NotLinear) {
        auto w = noninjectivity_witness(f, depth);
        v.check("noninjectivity witness",
                w.has_value() && evaluate_point(f, w->x1) == w->image &&
                    evaluate_point(f, w->x2) == w->image && w->x1 != w->x2,
                w ? "f(" + w->x1.to_string() + ") = f(" + w->x2.to_string() + ") = " +
                        w->image.to_string()
                  : "none within depth");
    }

    // One-sided limits at a small dual point of the domain.
    {
        Rational x0 = f.domain_kind() == RadixKind::SAdic
                          ? Rational(1, s)
                          : DigitExpansion::make(s, RadixKind::NegaSAdic, {1}, {s - 1, 0})
                                .value();
        JumpReport rep = one_sided_limits(f, x0);
        bool consistent = rep.jump == rep.right_limit - rep.left_limit;
        if (f.domain_kind() == RadixKind::SAdic) {
            consistent = consistent && rep.value == rep.right_limit;
        } else {
            consistent = consistent && rep.value == rep.left_limit;
        }
        if (lin != LinearityClass::NotLinear) consistent = consistent && rep.jump == Rational(0);
        if (f.form() == FormKind::Fsk) {
            consistent = consistent && jump_closed_form(f, x0) == rep.jump;
        }
        v.check("one-sided limits at " + x0.to_string(), consistent,
                "jump " + rep.jump.to_string());
    }

    // Difference quotients at deterministic probe points.
    {
        std::vector<std::pair<DigitExpansion, Digit>> probes;
        probes.emplace_back(DigitExpansion::make(s, f.domain_kind(), {}, {1}), 1);
        probes.emplace_back(DigitExpansion::make(s, f.domain_kind(), {}, {0, 1}), 0);
        std::set<Rational> values;
        bool constant_ok = true;
        Rational expect = lin == LinearityClass::IdentityLinear ? Rational(1) : Rational(-1);
        for (auto& [x0, c] : probes) {
            QuotientTrace trace = difference_quotients(f, x0, c, 20);
            for (const Rational& q : trace.persistent_values) values.insert(q);
            for (const QuotientEntry& e : trace.entries) {
                constant_ok = constant_ok && e.quotient == expect;
            }
        }
        if (lin != LinearityClass::NotLinear) {
            v.check("derivative of the linear form", constant_ok,
                    "all quotients " + expect.to_string());
        } else {
            v.check("divergent difference quotients", values.size() >= 2,
                    std::to_string(values.size()) + " persistent values");
        }
    }

    // Integral: symbolic solution against the midpoint-sum route.
    {
        IntegralResult r = lebesgue_integral_exact(f);
        unsigned m = smallest_rank_with_cells(f, 1000);
        unsigned t = m * f.block_size();
        Rational sum = riemann_midpoint_sum(f, t);
        Rational bound{1, pow_int(BigInt(s), t)};
        v.check("integral riemann agreement", (sum - r.exact).abs() <= bound,
                "exact " + r.exact.to_string() + ", midpoint sum at " + std::to_string(t) +
                    " digits " + sum.to_string());
    }

    // Box counting at every rank within a small budget.
    {
        bool ok = true;
        unsigned ranks_done = 0;
        for (unsigned m = 1;; ++m) {
            BoxCountEntry e;
            try {
                e = graph_box_count(f, m, 10000);
            } catch (const std::length_error&) {
                break;
            }
            BigInt expect = pow_int(BigInt(s), e.rank_digits);
            ok = ok && e.count == expect && e.estimate.exact == Rational(1);
            ++ranks_done;
        }
        v.check("graph box counts s^(mk) with estimate 1", ok && ranks_done > 0,
                std::to_string(ranks_done) + " ranks");
    }

    // Invariant sets.
    if (f.form() == FormKind::Fsk) {
        InvariantSetReport rep = invariant_set_fsk(f);
        bool ok = true;
        std::string detail{invariant_set_class_name(rep.classification)};
        if (rep.classification == InvariantSetClass::Finite) {
            ok = evaluate_point(f, rep.points.at(0)) == rep.points.at(0);
        } else if (rep.classification == InvariantSetClass::Continuum) {
            for (unsigned m = 1; m <= 4; ++m) {
                BoxCountEntry e = invariant_set_box_count(f, m);
                ok = ok && rep.dimension && e.estimate == *rep.dimension;
            }
            detail += ", dimension " + rep.dimension->to_string();
        }
        v.check("invariant set", ok, detail);
    } else if (f.form() == FormKind::FPlus) {
        bool ok = true;
        std::uint64_t den = 1;
        for (int i = 0; i < 5; ++i) den *= s;
        for (std::uint64_t a = 0; a <= den; ++a) {
            Rational x{BigInt(a), BigInt(den)};
            DigitExpansion e = expansion_from_rational(x, s, RadixKind::SAdic);
            ok = ok && fplus_fixed_membership(e) == (evaluate_point(f, x) == x);
        }
        ok = ok && fplus_fixed_dimension(s) == Rational(1, 2);
        v.check("fixed-set membership = fixed points, dimension 1/2", ok);
    }

    os << "verify: " << (v.failed() ? "FAIL" : "PASS") << "\n";
    out.write(os.str());
    return v.failed() ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact analysis of block-permutation radix functions"};
    app.require_subcommand(1);

    std::string spec, point, out_path;
    unsigned depth = 6;
    std::vector<unsigned> ranks;
    bool decimal = false;

    auto add_common = [&](CLI::App* cmd, bool needs_point) {
        cmd->add_option("--spec", spec, "function spec file")->required();
        if (needs_point) cmd->add_option("--point", point, "argument as num/den")->required();
        cmd->add_option("--depth", depth, "search depth / series levels");
        cmd->add_option("--ranks", ranks, "grid ranks m1,m2,...")->delimiter(',');
        cmd->add_option("--out", out_path, "write output to this file");
        cmd->add_flag("--decimal", decimal, "add 15-digit decimal renderings");
        return cmd;
    };

    CLI::App* eval = add_common(app.add_subcommand("eval", "evaluate f at a point"), true);
    CLI::App* analyze =
        add_common(app.add_subcommand("analyze", "full analysis report"), false);
    CLI::App* invariants =
        add_common(app.add_subcommand("invariants", "invariant-set classification"), false);
    CLI::App* integral =
        add_common(app.add_subcommand("integral", "exact integral and Riemann series"), false);
    CLI::App* boxdim =
        add_common(app.add_subcommand("boxdim", "graph box-count series as CSV"), false);
    CLI::App* graph = add_common(app.add_subcommand("graph", "sample (x, f(x)) as CSV"), false);
    CLI::App* verify =
        add_common(app.add_subcommand("verify", "run the verification battery"), false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        app.exit(e);
        return 2;
    }

    OutputTarget target{out_path};
    try {
        if (eval->parsed()) return run_eval(spec, point, decimal, target);
        if (analyze->parsed()) return run_analyze(spec, depth, target);
        if (invariants->parsed()) return run_invariants(spec, target);
        if (integral->parsed()) {
            return run_integral(spec, ranks.empty() ? 0 : ranks.front(), decimal, target);
        }
        if (boxdim->parsed()) return run_boxdim(spec, ranks, target);
        if (graph->parsed()) return run_graph(spec, ranks, target);
        if (verify->parsed()) return run_verify(spec, depth, target);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
