#include "lambdafn/lambda.hpp"

#include <fstream>
#include <sstream>

namespace lambdafn {

std::string_view form_name(FormKind form) {
    switch (form) {
        case FormKind::Fsk: return "fsk";
        case FormKind::FPlus: return "fplus";
        case FormKind::FPlusInv: return "fplusinv";
        case FormKind::FPlusAfterFsk: return "fplus∘fsk";
        case FormKind::FskAfterFPlusInv: return "fsk∘fplusinv";
        case FormKind::FPlusFskFPlusInv: return "fplus∘fsk∘fplusinv";
    }
    return "?";
}

bool form_contains_fsk(FormKind form) {
    return form != FormKind::FPlus && form != FormKind::FPlusInv;
}

std::string_view linearity_name(LinearityClass c) {
    switch (c) {
        case LinearityClass::IdentityLinear: return "IdentityLinear";
        case LinearityClass::ComplementLinear: return "ComplementLinear";
        case LinearityClass::NotLinear: return "NotLinear";
    }
    return "?";
}

LambdaFunction LambdaFunction::make_fsk(BlockPermutation theta) {
    unsigned base = theta.base();
    return LambdaFunction(FormKind::Fsk, base, std::move(theta));
}

LambdaFunction LambdaFunction::make_fplus(unsigned base) {
    if (base < 2) throw std::invalid_argument("fplus: base must be at least 2");
    return LambdaFunction(FormKind::FPlus, base, std::nullopt);
}

LambdaFunction LambdaFunction::make_fplus_inv(unsigned base) {
    if (base < 2) throw std::invalid_argument("fplusinv: base must be at least 2");
    return LambdaFunction(FormKind::FPlusInv, base, std::nullopt);
}

LambdaFunction LambdaFunction::compose_form(const std::vector<LambdaFunction>& parts) {
    auto shape_error = [&] {
        std::string shape;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) shape += "∘";
            shape += std::string(form_name(parts[i].form()));
        }
        return std::invalid_argument("compose_form: '" + shape +
                                     "' is not one of the admissible composition shapes");
    };
    for (const LambdaFunction& part : parts) {
        if (part.form() != FormKind::Fsk && part.form() != FormKind::FPlus &&
            part.form() != FormKind::FPlusInv) {
            throw shape_error();
        }
        if (part.base() != parts.front().base()) {
            throw std::invalid_argument("compose_form: mismatched bases");
        }
    }
    auto is = [&](std::size_t i, FormKind f) { return parts[i].form() == f; };
    if (parts.size() == 2 && is(0, FormKind::FPlus) && is(1, FormKind::Fsk)) {
        return LambdaFunction(FormKind::FPlusAfterFsk, parts[0].base(), parts[1].theta());
    }
    if (parts.size() == 2 && is(0, FormKind::Fsk) && is(1, FormKind::FPlusInv)) {
        return LambdaFunction(FormKind::FskAfterFPlusInv, parts[0].base(), parts[0].theta());
    }
    if (parts.size() == 3 && is(0, FormKind::FPlus) && is(1, FormKind::Fsk) &&
        is(2, FormKind::FPlusInv)) {
        return LambdaFunction(FormKind::FPlusFskFPlusInv, parts[0].base(), parts[1].theta());
    }
    throw shape_error();
}

const BlockPermutation& LambdaFunction::theta() const {
    if (!theta_) throw std::logic_error("LambdaFunction: form has no permutation");
    return *theta_;
}

RadixKind LambdaFunction::domain_kind() const {
    switch (form_) {
        case FormKind::Fsk:
        case FormKind::FPlus:
        case FormKind::FPlusAfterFsk: return RadixKind::SAdic;
        default: return RadixKind::NegaSAdic;
    }
}

RadixKind LambdaFunction::range_kind() const {
    switch (form_) {
        case FormKind::Fsk:
        case FormKind::FPlusInv:
        case FormKind::FskAfterFPlusInv: return RadixKind::SAdic;
        default: return RadixKind::NegaSAdic;
    }
}

namespace {

DigitExpansion with_kind(const DigitExpansion& e, RadixKind kind) {
    return DigitExpansion::make(e.base(), kind, e.preperiod(), e.period());
}

DigitExpansion apply_theta_blockwise(const BlockPermutation& theta, const DigitExpansion& e) {
    const unsigned k = theta.block_size();
    DigitExpansion aligned = align_blocks(e, k);
    auto map_digits = [&](const Digits& in) {
        Digits out;
        out.reserve(in.size());
        Block block(k);
        for (std::size_t i = 0; i < in.size(); i += k) {
            std::copy(in.begin() + static_cast<std::ptrdiff_t>(i),
                      in.begin() + static_cast<std::ptrdiff_t>(i + k), block.begin());
            Block img = decode_block(theta.base(), k,
                                     theta.apply_index(static_cast<std::uint32_t>(
                                         encode_block(theta.base(), block))));
            out.insert(out.end(), img.begin(), img.end());
        }
        return out;
    };
    return DigitExpansion::make(e.base(), e.kind(), map_digits(aligned.preperiod()),
                                map_digits(aligned.period()));
}

void require_kind(const LambdaFunction& f, const DigitExpansion& e) {
    if (e.kind() != f.domain_kind()) {
        throw std::invalid_argument(std::string("kind mismatch: ") + form_name(f.form()).data() +
                                    " expects a " +
                                    std::string(radix_kind_name(f.domain_kind())) +
                                    " expansion");
    }
    if (e.base() != f.base()) {
        throw std::invalid_argument("base mismatch between function and expansion");
    }
}

// The two admitted endpoint forms (values 1 and 1/(s+1)), evaluable though not
// canonical.
bool is_endpoint_form(const DigitExpansion& e) {
    if (!e.preperiod().empty()) return false;
    if (e.kind() == RadixKind::SAdic) return e.period() == Digits{e.base() - 1};
    return e.period() == Digits{0, e.base() - 1};
}

} // namespace

DigitExpansion apply_digits(const LambdaFunction& f, const DigitExpansion& e) {
    require_kind(f, e);
    switch (f.form()) {
        case FormKind::Fsk: return apply_theta_blockwise(f.theta(), e);
        case FormKind::FPlus: return with_kind(e, RadixKind::NegaSAdic);
        case FormKind::FPlusInv: return with_kind(e, RadixKind::SAdic);
        case FormKind::FPlusAfterFsk:
            return with_kind(apply_theta_blockwise(f.theta(), e), RadixKind::NegaSAdic);
        case FormKind::FskAfterFPlusInv:
            return apply_theta_blockwise(f.theta(), with_kind(e, RadixKind::SAdic));
        case FormKind::FPlusFskFPlusInv:
            return with_kind(apply_theta_blockwise(f.theta(), with_kind(e, RadixKind::SAdic)),
                             RadixKind::NegaSAdic);
    }
    throw std::logic_error("apply_digits: unreachable");
}

DigitExpansion evaluate_expansion(const LambdaFunction& f, const DigitExpansion& e) {
    require_kind(f, e);
    if (!e.canonical() && !is_endpoint_form(e)) {
        throw std::invalid_argument("evaluate_expansion: input expansion must be canonical");
    }
    return canonicalize(apply_digits(f, e));
}

Rational evaluate_point(const LambdaFunction& f, const Rational& q) {
    DigitExpansion e = expansion_from_rational(q, f.base(), f.domain_kind());
    return rational_from_expansion(apply_digits(f, e));
}

Digits evaluate_prefix(const LambdaFunction& f, const Digits& digits) {
    for (Digit d : digits) {
        if (d >= f.base()) throw std::invalid_argument("evaluate_prefix: digit out of range");
    }
    if (!form_contains_fsk(f.form())) return digits;
    const BlockPermutation& theta = f.theta();
    const unsigned k = theta.block_size();
    if (digits.size() % k != 0) {
        throw std::invalid_argument("evaluate_prefix: length " + std::to_string(digits.size()) +
                                    " is not a multiple of the block size " + std::to_string(k));
    }
    Digits out;
    out.reserve(digits.size());
    Block block(k);
    for (std::size_t i = 0; i < digits.size(); i += k) {
        std::copy(digits.begin() + static_cast<std::ptrdiff_t>(i),
                  digits.begin() + static_cast<std::ptrdiff_t>(i + k), block.begin());
        Block img = decode_block(theta.base(), k,
                                 theta.apply_index(static_cast<std::uint32_t>(
                                     encode_block(theta.base(), block))));
        out.insert(out.end(), img.begin(), img.end());
    }
    return out;
}

LinearityClass is_lambda_linear(const LambdaFunction& f) {
    // Only the two kind-preserving shapes can reduce to a linear map; the
    // kind-flipping shapes reorder values non-monotonically.
    if (f.form() != FormKind::Fsk && f.form() != FormKind::FPlusFskFPlusInv) {
        return LinearityClass::NotLinear;
    }
    switch (classify_linearity(f.theta())) {
        case Linearity::Identity: return LinearityClass::IdentityLinear;
        case Linearity::Complement: return LinearityClass::ComplementLinear;
        case Linearity::Other: return LinearityClass::NotLinear;
    }
    return LinearityClass::NotLinear;
}

namespace {

FormKind form_from_name(std::string_view name, std::size_t line_no) {
    std::string ascii(name);
    // Accept '.' as an ASCII stand-in for the composition sign.
    auto replace_all = [&](std::string_view from, std::string_view to) {
        std::size_t at = 0;
        while ((at = ascii.find(from, at)) != std::string::npos) {
            ascii.replace(at, from.size(), to);
            at += to.size();
        }
    };
    replace_all("∘", ".");
    if (ascii == "fsk") return FormKind::Fsk;
    if (ascii == "fplus") return FormKind::FPlus;
    if (ascii == "fplusinv") return FormKind::FPlusInv;
    if (ascii == "fplus.fsk") return FormKind::FPlusAfterFsk;
    if (ascii == "fsk.fplusinv") return FormKind::FskAfterFPlusInv;
    if (ascii == "fplus.fsk.fplusinv") return FormKind::FPlusFskFPlusInv;
    throw std::invalid_argument("function spec line " + std::to_string(line_no) +
                                ": unknown form '" + std::string(name) + "'");
}

std::string_view trim_view(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

} // namespace

LambdaFunction parse_function_spec(std::string_view text) {
    std::optional<FormKind> form;
    std::optional<unsigned> s, k;
    std::string theta_lines;
    bool in_theta = false;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = trim_view(text.substr(pos, eol - pos));
        ++line_no;
        bool at_end = eol == text.size();
        pos = eol + 1;
        auto fail = [&](const std::string& why) {
            return std::invalid_argument("function spec line " + std::to_string(line_no) + ": " +
                                         why);
        };
        if (line.empty() || line.front() == '#') {
            if (at_end) break;
            continue;
        }
        if (in_theta) {
            theta_lines += std::string(line) + "\n";
        } else if (line == "theta:") {
            in_theta = true;
        } else {
            std::size_t eq = line.find('=');
            if (eq == std::string_view::npos) throw fail("expected 'name = value'");
            std::string name(trim_view(line.substr(0, eq)));
            std::string value(trim_view(line.substr(eq + 1)));
            if (!value.empty() && value.front() == '"' && value.back() == '"' &&
                value.size() >= 2) {
                value = value.substr(1, value.size() - 2);
            }
            if (name == "form") {
                form = form_from_name(value, line_no);
            } else if (name == "s" || name == "k") {
                unsigned parsed = 0;
                try {
                    parsed = static_cast<unsigned>(std::stoul(value));
                } catch (const std::exception&) {
                    throw fail("bad value '" + value + "'");
                }
                (name == "s" ? s : k) = parsed;
            } else {
                throw fail("unknown key '" + name + "'");
            }
        }
        if (at_end) break;
    }

    if (!form) throw std::invalid_argument("function spec: missing 'form ='");
    if (!s) throw std::invalid_argument("function spec: missing 's ='");

    if (!form_contains_fsk(*form)) {
        return *form == FormKind::FPlus ? LambdaFunction::make_fplus(*s)
                                        : LambdaFunction::make_fplus_inv(*s);
    }
    if (theta_lines.empty()) {
        throw std::invalid_argument("function spec: form '" + std::string(form_name(*form)) +
                                    "' requires an inline theta table");
    }
    std::string table = "s = " + std::to_string(*s) + "\n" +
                        "k = " + std::to_string(k.value_or(1)) + "\n" + theta_lines;
    BlockPermutation theta = parse_theta_table(table);
    LambdaFunction fsk = LambdaFunction::make_fsk(std::move(theta));
    switch (*form) {
        case FormKind::Fsk: return fsk;
        case FormKind::FPlusAfterFsk:
            return LambdaFunction::compose_form({LambdaFunction::make_fplus(*s), fsk});
        case FormKind::FskAfterFPlusInv:
            return LambdaFunction::compose_form({fsk, LambdaFunction::make_fplus_inv(*s)});
        default:
            return LambdaFunction::compose_form(
                {LambdaFunction::make_fplus(*s), fsk, LambdaFunction::make_fplus_inv(*s)});
    }
}

LambdaFunction load_function_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open function spec '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_function_spec(buffer.str());
}

std::string function_spec_text(const LambdaFunction& f) {
    std::ostringstream os;
    os << "form = " << form_name(f.form()) << "\n" << "s = " << f.base() << "\n";
    if (f.has_theta()) {
        os << "k = " << f.block_size() << "\n" << "theta:\n";
        std::string table = theta_table_text(f.theta());
        // Drop the two header lines; they are already present above.
        std::size_t first = table.find('\n');
        std::size_t second = table.find('\n', first + 1);
        os << table.substr(second + 1);
    }
    return os.str();
}

} // namespace lambdafn
