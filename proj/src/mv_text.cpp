#include "cliffrep/mv_text.hpp"

#include <cctype>

namespace cliffrep {

namespace {

class Parser {
public:
    Parser(std::string_view s, const Signature& sig) : s_(s), sig_(sig) {}

    Multivector parse() {
        skip();
        if (pos_ == s_.size()) fail("empty expression");
        Multivector acc(sig_);
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
            skip();
        }
        acc += term(sign);
        for (;;) {
            skip();
            if (pos_ == s_.size()) break;
            char c = peek();
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            ++pos_;
            skip();
            acc += term(c == '-' ? -1 : 1);
        }
        return acc;
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    Multivector term(int sign) {
        Rational coeff = sign;
        SignedBlade blade{1, 0};
        factor(coeff, blade);
        for (;;) {
            skip();
            if (peek() != '*') break;
            ++pos_;
            skip();
            factor(coeff, blade);
        }
        return Multivector::blade(sig_, blade.mask, blade.sign < 0 ? -coeff : coeff);
    }

    void factor(Rational& coeff, SignedBlade& blade) {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coeff *= number();
            return;
        }
        if (c == 'e') {
            bool negative = s_.substr(pos_, 3) == "eps";
            pos_ += negative ? 3 : 1;
            for (int idx : indices(negative ? sig_.q : sig_.p, negative)) {
                int g = negative ? sig_.p + idx : idx;
                SignedBlade prod = blade_product(sig_, blade.mask, BladeMask{1} << (g - 1));
                blade = {blade.sign * prod.sign, prod.mask};
            }
            return;
        }
        fail(c == '\0' ? "unexpected end of expression" : std::string("unexpected character '") + c + "'");
    }

    Rational number() {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        std::string text(s_.substr(start, pos_ - start));
        if (peek() == '/') {
            ++pos_;
            std::size_t ds = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (ds == pos_) fail("missing denominator");
            std::string den(s_.substr(ds, pos_ - ds));
            if (den.find_first_not_of('0') == std::string::npos) {
                pos_ = ds;
                fail("zero denominator");
            }
            text += "/" + den;
        }
        return Rational::parse(text);
    }

    std::vector<int> indices(int count, bool negative) {
        std::vector<int> out;
        std::size_t start = pos_;
        auto check = [&](int idx, std::size_t at) {
            if (idx < 1 || idx > count) {
                pos_ = at;
                fail(std::string(negative ? "eps" : "e") + std::to_string(idx) + " outside signature " +
                     sig_.to_string());
            }
            out.push_back(idx);
        };
        if (count <= 9) {
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                check(peek() - '0', pos_);
                ++pos_;
            }
        } else {
            for (;;) {
                std::size_t at = pos_;
                int v = 0;
                while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (s_[pos_++] - '0');
                if (at == pos_) break;
                check(v, at);
                if (peek() != '_') break;
                ++pos_;
            }
        }
        if (start == pos_) fail("blade name without indices");
        return out;
    }

    std::string_view s_;
    Signature sig_;
    std::size_t pos_ = 0;
};

}  // namespace

Multivector parse_multivector(std::string_view text, const Signature& sig) { return Parser(text, sig).parse(); }

std::string format_blade(const Signature& sig, BladeMask mask) {
    if (mask == 0) return "1";
    auto part = [&](const char* prefix, int from, int to, int offset, int count) {
        std::string s;
        for (int g = from; g <= to; ++g) {
            if (!(mask & (BladeMask{1} << (g - 1)))) continue;
            if (s.empty()) s = prefix;
            else if (count > 9) s += "_";
            s += std::to_string(g - offset);
        }
        return s;
    };
    std::string pos = part("e", 1, sig.p, 0, sig.p);
    std::string neg = part("eps", sig.p + 1, sig.n(), sig.p, sig.q);
    if (pos.empty()) return neg;
    if (neg.empty()) return pos;
    return pos + "*" + neg;
}

std::string format_multivector(const Multivector& a) {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : a.terms()) {
        bool neg = t.coeff.sign() < 0;
        if (first) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        out += t.coeff.abs().to_string();
        if (t.mask != 0) out += "*" + format_blade(a.signature(), t.mask);
        first = false;
    }
    return out;
}

}  // namespace cliffrep
