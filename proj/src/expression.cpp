#include "deltasym/expression.hpp"

#include <cctype>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace dsym {

namespace {

bool is_constant(const Poly& f) {
    for (const auto& [k, c] : f.terms())
        if (k.order() != 0) return false;
    return true;
}

[[noreturn]] void mix_error(const std::string& what) {
    throw Error(ErrorKind::parse, what);
}

void check_dims(std::size_t a, std::size_t b) {
    if (a != b)
        mix_error("the expression mixes dimensions " + std::to_string(a) + " and " +
                  std::to_string(b));
}

/// Brings f into the given space; only constants convert.
Poly into_space(const Poly& f, VarSpace space) {
    if (f.space() == space || f.is_zero()) return f.with_space(space);
    if (is_constant(f)) return f.with_space(space);
    mix_error("cannot mix position and momentum variables");
}

/// Coefficient space of a spinor polynomial: the space of any nonconstant
/// slot, or nullopt when every slot is constant (space is then convertible).
std::optional<VarSpace> spinor_space(const SpinorPoly<Poly>& s) {
    for (const auto& [k, v] : s.terms())
        if (!is_constant(v)) return v.space();
    return std::nullopt;
}

SpinorPoly<Poly> spinor_into_space(const SpinorPoly<Poly>& s, VarSpace space) {
    return s.map_coeffs([&](const Poly& f) { return into_space(f, space); });
}

/// Aligns the coefficient spaces of a polynomial and a spinor polynomial,
/// converting whichever side is entirely constant.
std::pair<Poly, SpinorPoly<Poly>> align(const Poly& f, const SpinorPoly<Poly>& s) {
    std::optional<VarSpace> ss = spinor_space(s);
    if (!ss) return {f, spinor_into_space(s, f.space())};
    return {into_space(f, *ss), s};
}

std::pair<SpinorPoly<Poly>, SpinorPoly<Poly>> align(const SpinorPoly<Poly>& a,
                                                    const SpinorPoly<Poly>& b) {
    std::optional<VarSpace> sa = spinor_space(a);
    std::optional<VarSpace> sb = spinor_space(b);
    VarSpace target = sa ? *sa : (sb ? *sb : VarSpace::position);
    return {spinor_into_space(a, target), spinor_into_space(b, target)};
}

std::size_t poly_dim(const SpinorPoly<Poly>& s) {
    return s.terms().empty() ? 4 : s.terms().begin()->second.dim();
}

std::size_t delta_dim(const SpinorPoly<DeltaExpansion>& s) {
    return s.terms().empty() ? 4 : s.terms().begin()->second.dim();
}

SpinorPoly<DeltaExpansion> mul_spinor_delta(const SpinorPoly<Poly>& a,
                                            const SpinorPoly<DeltaExpansion>& b) {
    SpinorPoly<DeltaExpansion> r;
    for (const auto& [ka, va] : a.terms())
        for (const auto& [kb, vb] : b.terms())
            r.add_term(SpinorKey{ka.wbar.plus(kb.wbar), ka.w.plus(kb.w)}, vb.mul_poly(va));
    return r;
}

Value add_values(const Value& lhs, const Value& rhs);

Value add_impl(const Value& lhs, const Value& rhs, bool swapped) {
    const auto* as = std::get_if<Scalar>(&lhs.data);
    const auto* ap = std::get_if<Poly>(&lhs.data);
    const auto* ad = std::get_if<DeltaExpansion>(&lhs.data);
    const auto* asp = std::get_if<SpinorPoly<Poly>>(&lhs.data);
    const auto* asd = std::get_if<SpinorPoly<DeltaExpansion>>(&lhs.data);

    if (as) {
        if (const auto* bs = std::get_if<Scalar>(&rhs.data)) return Value{*as + *bs};
        if (const auto* bp = std::get_if<Poly>(&rhs.data))
            return Value{Poly::constant(bp->dim(), bp->space(), *as) + *bp};
        if (const auto* bd = std::get_if<DeltaExpansion>(&rhs.data))
            return Value{DeltaExpansion::delta(bd->dim()) * *as + *bd};
        if (const auto* bsp = std::get_if<SpinorPoly<Poly>>(&rhs.data)) {
            VarSpace space = spinor_space(*bsp).value_or(VarSpace::position);
            Poly c = Poly::constant(poly_dim(*bsp), space, *as);
            return Value{SpinorPoly<Poly>::scalar_term(c) + *bsp};
        }
        if (const auto* bsd = std::get_if<SpinorPoly<DeltaExpansion>>(&rhs.data)) {
            DeltaExpansion c = DeltaExpansion::delta(delta_dim(*bsd)) * *as;
            return Value{SpinorPoly<DeltaExpansion>::scalar_term(c) + *bsd};
        }
    }
    if (ap) {
        if (const auto* bp = std::get_if<Poly>(&rhs.data)) {
            check_dims(ap->dim(), bp->dim());
            auto [fa, fb] =
                is_constant(*ap) ? std::make_pair(into_space(*ap, bp->space()), *bp)
                                 : std::make_pair(*ap, into_space(*bp, ap->space()));
            return Value{fa + fb};
        }
        if (std::get_if<DeltaExpansion>(&rhs.data) ||
            std::get_if<SpinorPoly<DeltaExpansion>>(&rhs.data))
            mix_error("cannot add a polynomial and a functional");
        if (const auto* bsp = std::get_if<SpinorPoly<Poly>>(&rhs.data)) {
            check_dims(ap->dim(), poly_dim(*bsp));
            auto [f, s] = align(*ap, *bsp);
            return Value{SpinorPoly<Poly>::scalar_term(f) + s};
        }
    }
    if (ad) {
        if (const auto* bd = std::get_if<DeltaExpansion>(&rhs.data)) {
            check_dims(ad->dim(), bd->dim());
            return Value{*ad + *bd};
        }
        if (std::get_if<SpinorPoly<Poly>>(&rhs.data))
            mix_error("cannot add a polynomial and a functional");
        if (const auto* bsd = std::get_if<SpinorPoly<DeltaExpansion>>(&rhs.data)) {
            check_dims(ad->dim(), delta_dim(*bsd));
            return Value{SpinorPoly<DeltaExpansion>::scalar_term(*ad) + *bsd};
        }
    }
    if (asp) {
        if (const auto* bsp = std::get_if<SpinorPoly<Poly>>(&rhs.data)) {
            check_dims(poly_dim(*asp), poly_dim(*bsp));
            auto [sa, sb] = align(*asp, *bsp);
            return Value{sa + sb};
        }
        if (std::get_if<SpinorPoly<DeltaExpansion>>(&rhs.data))
            mix_error("cannot add a polynomial and a functional");
    }
    if (asd) {
        if (const auto* bsd = std::get_if<SpinorPoly<DeltaExpansion>>(&rhs.data)) {
            check_dims(delta_dim(*asd), delta_dim(*bsd));
            return Value{*asd + *bsd};
        }
    }
    if (swapped) mix_error("these values cannot be added");
    return add_impl(rhs, lhs, true);
}

Value add_values(const Value& lhs, const Value& rhs) { return add_impl(lhs, rhs, false); }

Value mul_values(const Value& lhs, const Value& rhs);

Value mul_impl(const Value& lhs, const Value& rhs, bool swapped) {
    const auto* as = std::get_if<Scalar>(&lhs.data);
    const auto* ap = std::get_if<Poly>(&lhs.data);
    const auto* ad = std::get_if<DeltaExpansion>(&lhs.data);
    const auto* asp = std::get_if<SpinorPoly<Poly>>(&lhs.data);
    const auto* asd = std::get_if<SpinorPoly<DeltaExpansion>>(&lhs.data);

    if (as) {
        if (const auto* bs = std::get_if<Scalar>(&rhs.data)) return Value{*as * *bs};
        if (const auto* bp = std::get_if<Poly>(&rhs.data)) return Value{*bp * *as};
        if (const auto* bd = std::get_if<DeltaExpansion>(&rhs.data)) return Value{*bd * *as};
        if (const auto* bsp = std::get_if<SpinorPoly<Poly>>(&rhs.data))
            return Value{*bsp * *as};
        if (const auto* bsd = std::get_if<SpinorPoly<DeltaExpansion>>(&rhs.data))
            return Value{*bsd * *as};
    }
    if (ap) {
        if (const auto* bp = std::get_if<Poly>(&rhs.data)) {
            check_dims(ap->dim(), bp->dim());
            auto [fa, fb] =
                is_constant(*ap) ? std::make_pair(into_space(*ap, bp->space()), *bp)
                                 : std::make_pair(*ap, into_space(*bp, ap->space()));
            return Value{fa * fb};
        }
        if (const auto* bd = std::get_if<DeltaExpansion>(&rhs.data)) {
            check_dims(ap->dim(), bd->dim());
            return Value{bd->mul_poly(into_space(*ap, VarSpace::position))};
        }
        if (const auto* bsp = std::get_if<SpinorPoly<Poly>>(&rhs.data)) {
            check_dims(ap->dim(), poly_dim(*bsp));
            auto [f, s] = align(*ap, *bsp);
            return Value{s.map_coeffs([&](const Poly& g) { return g * f; })};
        }
        if (const auto* bsd = std::get_if<SpinorPoly<DeltaExpansion>>(&rhs.data)) {
            check_dims(ap->dim(), delta_dim(*bsd));
            Poly f = into_space(*ap, VarSpace::position);
            return Value{bsd->map_coeffs([&](const DeltaExpansion& v) { return v.mul_poly(f); })};
        }
    }
    if (ad) {
        if (std::get_if<DeltaExpansion>(&rhs.data) ||
            std::get_if<SpinorPoly<DeltaExpansion>>(&rhs.data))
            mix_error("cannot multiply two functionals");
        if (const auto* bsp = std::get_if<SpinorPoly<Poly>>(&rhs.data)) {
            check_dims(ad->dim(), poly_dim(*bsp));
            SpinorPoly<Poly> s = spinor_into_space(*bsp, VarSpace::position);
            return Value{s.map_coeffs([&](const Poly& g) { return ad->mul_poly(g); })};
        }
    }
    if (asp) {
        if (const auto* bsp = std::get_if<SpinorPoly<Poly>>(&rhs.data)) {
            check_dims(poly_dim(*asp), poly_dim(*bsp));
            auto [sa, sb] = align(*asp, *bsp);
            return Value{sa * sb};
        }
        if (const auto* bsd = std::get_if<SpinorPoly<DeltaExpansion>>(&rhs.data)) {
            check_dims(poly_dim(*asp), delta_dim(*bsd));
            return Value{mul_spinor_delta(spinor_into_space(*asp, VarSpace::position), *bsd)};
        }
    }
    if (asd) {
        if (std::get_if<SpinorPoly<DeltaExpansion>>(&rhs.data))
            mix_error("cannot multiply two functionals");
    }
    if (swapped) mix_error("these values cannot be multiplied");
    return mul_impl(rhs, lhs, true);
}

Value mul_values(const Value& lhs, const Value& rhs) { return mul_impl(lhs, rhs, false); }

Value pow_value(const Value& base, long e) {
    Value r{Scalar(1)};
    for (long j = 0; j < e; ++j) r = mul_values(r, base);
    return r;
}

struct Token {
    enum class Type { number, ident, lbracket, rbracket, lparen, rparen, plus, minus, star, caret, comma, end };
    Type type;
    Rational num;
    std::string text;
    std::size_t col = 0;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto digits = [&]() {
        std::string d;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            d += text[i++];
        return d;
    };
    while (i < text.size()) {
        char c = text[i];
        std::size_t col = i + 1;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = digits();
            std::string den = "1";
            if (i + 1 < text.size() && text[i] == '/' &&
                std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
                ++i;
                den = digits();
                if (den == "0")
                    throw Error(ErrorKind::parse,
                                "zero denominator at column " + std::to_string(col));
            }
            out.push_back({Token::Type::number, Rational(Integer(num), Integer(den)), "", col});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i])))
                name += text[i++];
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                name += text[i++];
            out.push_back({Token::Type::ident, Rational(0), name, col});
            continue;
        }
        Token::Type t;
        switch (c) {
        case '[': t = Token::Type::lbracket; break;
        case ']': t = Token::Type::rbracket; break;
        case '(': t = Token::Type::lparen; break;
        case ')': t = Token::Type::rparen; break;
        case '+': t = Token::Type::plus; break;
        case '-': t = Token::Type::minus; break;
        case '*': t = Token::Type::star; break;
        case '^': t = Token::Type::caret; break;
        case ',': t = Token::Type::comma; break;
        default:
            throw Error(ErrorKind::parse, std::string("unexpected character '") + c +
                                              "' at column " + std::to_string(col));
        }
        out.push_back({t, Rational(0), "", col});
        ++i;
    }
    out.push_back({Token::Type::end, Rational(0), "", text.size() + 1});
    return out;
}

class Parser {
public:
    Parser(std::vector<Token> tokens, std::size_t var_dim)
        : tokens_(std::move(tokens)), var_dim_(var_dim) {}

    Value parse() {
        Value v = expr();
        expect(Token::Type::end, "end of input");
        return v;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    Token take() { return tokens_[pos_++]; }

    [[noreturn]] void fail(const std::string& what) {
        throw Error(ErrorKind::parse,
                    what + " at column " + std::to_string(peek().col));
    }

    void expect(Token::Type t, const std::string& what) {
        if (peek().type != t) fail("expected " + what);
        ++pos_;
    }

    long take_uint(const std::string& what) {
        if (peek().type != Token::Type::number) fail("expected " + what);
        Token t = take();
        if (boost::multiprecision::denominator(t.num) != 1 || t.num < 0)
            throw Error(ErrorKind::parse, what + " must be a nonnegative integer at column " +
                                              std::to_string(t.col));
        return boost::multiprecision::numerator(t.num).convert_to<long>();
    }

    Value expr() {
        bool negate = false;
        if (peek().type == Token::Type::minus) {
            ++pos_;
            negate = true;
        }
        Value v = term();
        if (negate) v = mul_values(Value{Scalar(-1)}, v);
        while (peek().type == Token::Type::plus || peek().type == Token::Type::minus) {
            bool minus = take().type == Token::Type::minus;
            Value t = term();
            if (minus) t = mul_values(Value{Scalar(-1)}, t);
            v = add_values(v, t);
        }
        return v;
    }

    Value term() {
        Value v = factor();
        while (peek().type == Token::Type::star) {
            ++pos_;
            v = mul_values(v, factor());
        }
        return v;
    }

    Value factor() {
        Value v = atom();
        if (peek().type == Token::Type::caret) {
            ++pos_;
            long e = take_uint("the exponent");
            v = pow_value(v, e);
        }
        return v;
    }

    Value atom() {
        const Token& t = peek();
        if (t.type == Token::Type::number) return Value{Scalar(take().num)};
        if (t.type == Token::Type::lparen) {
            ++pos_;
            Value v = expr();
            expect(Token::Type::rparen, "')'");
            return v;
        }
        if (t.type == Token::Type::ident) return ident_atom();
        fail("expected a value");
    }

    Value ident_atom() {
        Token t = take();
        const std::string& name = t.text;
        if (name == "i") return Value{Scalar::i()};
        if (name == "d") return delta_literal();
        if (name == "cov") {
            expect(Token::Type::lparen, "'('");
            long s2 = take_uint("the covariant degree");
            expect(Token::Type::rparen, "')'");
            return Value{covariant_poly(static_cast<int>(s2), VarSpace::position)};
        }

        std::size_t split = 0;
        while (split < name.size() && std::isalpha(static_cast<unsigned char>(name[split])))
            ++split;
        std::string head = name.substr(0, split);
        std::string digits = name.substr(split);
        if ((head == "x" || head == "p") && digits.size() == 1) {
            std::size_t idx = static_cast<std::size_t>(digits[0] - '0');
            if (idx >= var_dim_)
                throw Error(ErrorKind::parse, "variable " + name + " is out of range for dimension " +
                                                  std::to_string(var_dim_) + " at column " +
                                                  std::to_string(t.col));
            VarSpace space = head == "x" ? VarSpace::position : VarSpace::momentum;
            return Value{Poly::variable(var_dim_, space, idx)};
        }
        if ((head == "w" || head == "wb") && digits.size() == 1 &&
            (digits[0] == '1' || digits[0] == '2')) {
            SpinorKey key;
            if (head == "w")
                key.w[digits[0] - '1'] = 1;
            else
                key.wbar[digits[0] - '1'] = 1;
            return Value{SpinorPoly<Poly>::term(
                key, Poly::constant(4, VarSpace::position, Scalar(1)))};
        }
        throw Error(ErrorKind::parse,
                    "unknown symbol '" + name + "' at column " + std::to_string(t.col));
    }

    Value delta_literal() {
        expect(Token::Type::lbracket, "'['");
        std::vector<int> entries;
        entries.push_back(static_cast<int>(take_uint("a derivative order")));
        while (peek().type == Token::Type::comma) {
            ++pos_;
            entries.push_back(static_cast<int>(take_uint("a derivative order")));
        }
        expect(Token::Type::rbracket, "']'");
        MultiIndex kk(entries.size());
        for (std::size_t j = 0; j < entries.size(); ++j) kk[j] = entries[j];
        return Value{DeltaExpansion::term(entries.size(), kk)};
    }

    std::vector<Token> tokens_;
    std::size_t var_dim_;
    std::size_t pos_ = 0;
};

} // namespace

std::string Value::str() const {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Scalar>)
                return to_string(v);
            else
                return v.str();
        },
        data);
}

Value parse_expression(const std::string& text, std::size_t var_dim) {
    if (var_dim < 1 || var_dim > 10)
        throw Error(ErrorKind::parse, "the variable dimension must be between 1 and 10");
    return Parser(tokenize(text), var_dim).parse();
}

Poly parse_poly(const std::string& text, std::size_t var_dim, VarSpace constant_space) {
    Value v = parse_expression(text, var_dim);
    if (const auto* s = std::get_if<Scalar>(&v.data))
        return Poly::constant(var_dim, constant_space, *s);
    if (const auto* p = std::get_if<Poly>(&v.data)) return *p;
    throw Error(ErrorKind::parse, "expected a polynomial expression");
}

DeltaExpansion parse_delta(const std::string& text, std::size_t var_dim) {
    Value v = parse_expression(text, var_dim);
    if (const auto* s = std::get_if<Scalar>(&v.data))
        return DeltaExpansion::delta(var_dim) * *s;
    if (const auto* d = std::get_if<DeltaExpansion>(&v.data)) return *d;
    throw Error(ErrorKind::parse, "expected a functional expression");
}

SpinorPoly<DeltaExpansion> parse_spinor_delta(const std::string& text) {
    Value v = parse_expression(text, 4);
    if (const auto* s = std::get_if<Scalar>(&v.data))
        return SpinorPoly<DeltaExpansion>::scalar_term(DeltaExpansion::delta(4) * *s);
    if (const auto* d = std::get_if<DeltaExpansion>(&v.data)) {
        if (d->dim() != 4)
            throw Error(ErrorKind::parse, "expected a functional in 4 variables");
        return SpinorPoly<DeltaExpansion>::scalar_term(*d);
    }
    if (const auto* sd = std::get_if<SpinorPoly<DeltaExpansion>>(&v.data)) return *sd;
    throw Error(ErrorKind::parse, "expected a functional-valued spinor expression");
}

namespace {

Scalar random_scalar(Rng& rng) {
    while (true) {
        Scalar c{Rational(rng.range(-9, 9), rng.range(1, 4)),
                 Rational(rng.range(-9, 9), rng.range(1, 4))};
        if (!c.is_zero()) return c;
    }
}

Poly random_poly(Rng& rng, VarSpace space, bool force_variable) {
    while (true) {
        Poly f(4, space);
        long terms = rng.range(1, 3);
        for (long t = 0; t < terms; ++t) {
            MultiIndex k(4);
            long budget = rng.range(force_variable && t == 0 ? 1 : 0, 4);
            for (std::size_t j = 0; j < 4; ++j) {
                k[j] = static_cast<int>(rng.range(0, budget));
                budget -= k[j];
            }
            if (force_variable && t == 0 && k.order() == 0) k[0] = 1;
            f += Poly::monomial(4, space, k, random_scalar(rng));
        }
        if (!f.is_zero() && (!force_variable || !is_constant(f))) return f;
    }
}

DeltaExpansion random_delta(Rng& rng) {
    while (true) {
        DeltaExpansion v(4);
        long terms = rng.range(1, 3);
        for (long t = 0; t < terms; ++t) {
            MultiIndex k(4);
            long budget = rng.range(0, 5);
            for (std::size_t j = 0; j < 4; ++j) {
                k[j] = static_cast<int>(rng.range(0, budget));
                budget -= k[j];
            }
            v += DeltaExpansion::term(4, k, random_scalar(rng));
        }
        if (!v.is_zero()) return v;
    }
}

SpinorKey random_spinor_key(Rng& rng) {
    while (true) {
        SpinorKey k;
        for (int j = 0; j < 2; ++j) {
            k.wbar[j] = static_cast<int>(rng.range(0, 2));
            k.w[j] = static_cast<int>(rng.range(0, 2));
        }
        if (k.wbar.order() + k.w.order() > 0) return k;
    }
}

} // namespace

Value random_value(Rng& rng) {
    switch (rng.range(0, 4)) {
    case 0: return Value{random_scalar(rng)};
    case 1: {
        VarSpace space = rng.range(0, 1) ? VarSpace::momentum : VarSpace::position;
        return Value{random_poly(rng, space, true)};
    }
    case 2: return Value{random_delta(rng)};
    case 3: {
        VarSpace space = rng.range(0, 1) ? VarSpace::momentum : VarSpace::position;
        SpinorPoly<Poly> s;
        std::set<SpinorKey> keys;
        long slots = rng.range(1, 3);
        while (static_cast<long>(keys.size()) < slots) keys.insert(random_spinor_key(rng));
        bool first = true;
        for (const SpinorKey& k : keys) {
            s.add_term(k, random_poly(rng, space, first));
            first = false;
        }
        return Value{s};
    }
    default: {
        SpinorPoly<DeltaExpansion> s;
        std::set<SpinorKey> keys;
        long slots = rng.range(1, 3);
        while (static_cast<long>(keys.size()) < slots) keys.insert(random_spinor_key(rng));
        for (const SpinorKey& k : keys) s.add_term(k, random_delta(rng));
        return Value{s};
    }
    }
}

} // namespace dsym
