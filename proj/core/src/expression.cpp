#include "qmf/expression.hpp"

#include <cctype>

namespace qmf {

Polynomial::Polynomial(const Rational& c)
{
    add_term({}, c);
}

Polynomial Polynomial::symbol(const std::string& name)
{
    Polynomial p;
    p.add_term({{name, 1}}, Rational(1));
    return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

bool Polynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Polynomial::constant_value() const
{
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    for (const auto& [m, c] : other.terms_) {
        add_term(m, c);
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    for (const auto& [m, c] : other.terms_) {
        add_term(m, -c);
    }
    return *this;
}

Polynomial Polynomial::operator-() const
{
    return Rational(-1) * *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma;
            for (const auto& [sym, e] : mb) {
                m[sym] += e;
            }
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

Polynomial operator*(const Rational& c, const Polynomial& a)
{
    Polynomial out;
    for (const auto& [m, x] : a.terms_) {
        out.add_term(m, c * x);
    }
    return out;
}

Polynomial Polynomial::pow(unsigned e) const
{
    Polynomial out(Rational(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1U) {
            out = out * base;
        }
        e >>= 1U;
        if (e > 0) {
            base = base * base;
        }
    }
    return out;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Polynomial parse()
    {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) {
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw DomainError("expression error at column " + std::to_string(pos_ + 1) + ": " + what + " in \""
                          + std::string(text_) + "\"");
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr()
    {
        Polynomial acc = term();
        for (;;) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Polynomial term()
    {
        Polynomial acc = factor();
        for (;;) {
            if (accept('*')) {
                acc = acc * factor();
            } else if (accept('/')) {
                const Polynomial d = factor();
                if (!d.is_constant() || d.constant_value() == 0) {
                    fail("division only by a nonzero constant");
                }
                acc = (Rational(1) / d.constant_value()) * acc;
            } else {
                return acc;
            }
        }
    }

    Polynomial factor()
    {
        if (accept('-')) {
            return -factor();
        }
        if (accept('+')) {
            return factor();
        }
        Polynomial base = atom();
        if (accept('^')) {
            skip_ws();
            const std::string digits = read_digits();
            if (digits.empty()) {
                fail("expected a nonnegative integer exponent");
            }
            base = base.pow(static_cast<unsigned>(std::stoul(digits)));
        }
        return base;
    }

    std::string read_digits()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    Polynomial atom()
    {
        skip_ws();
        if (pos_ >= text_.size()) {
            fail("unexpected end of input");
        }
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (!accept(')')) {
                fail("expected ')'");
            }
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return Polynomial(Rational(Integer(read_digits())));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            const std::string name(text_.substr(start, pos_ - start));
            try {
                symbol_weight(name);
            } catch (const DomainError&) {
                pos_ = start;
                fail("unknown symbol '" + name + "'");
            }
            return Polynomial::symbol(name);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

int parse_suffix(const std::string& name, std::size_t prefix_len)
{
    const std::string digits = name.substr(prefix_len);
    if (digits.empty() || digits.size() > 3) {
        return -1;
    }
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return -1;
        }
    }
    return std::stoi(digits);
}

} // namespace

Polynomial parse_polynomial(std::string_view text)
{
    return Parser(text).parse();
}

int symbol_weight(const std::string& name)
{
    int k = -1;
    if (name.rfind("Delta", 0) == 0) {
        k = parse_suffix(name, 5);
    } else if (name.rfind('E', 0) == 0) {
        k = parse_suffix(name, 1);
    }
    if (k < 2 || k % 2 != 0) {
        throw DomainError("unknown form symbol '" + name + "'");
    }
    return k;
}

int monomial_weight(const Monomial& m)
{
    int w = 0;
    for (const auto& [sym, e] : m) {
        w += symbol_weight(sym) * static_cast<int>(e);
    }
    return w;
}

unsigned e2_degree(const Monomial& m)
{
    auto it = m.find("E2");
    return it == m.end() ? 0U : it->second;
}

std::string to_string(const Monomial& m)
{
    if (m.empty()) {
        return "1";
    }
    std::string out;
    for (const auto& [sym, e] : m) {
        if (!out.empty()) {
            out += "*";
        }
        out += sym;
        if (e != 1) {
            out += "^" + std::to_string(e);
        }
    }
    return out;
}

std::string to_string(const Polynomial& p)
{
    if (p.terms().empty()) {
        return "0";
    }
    std::string out;
    for (const auto& [m, c] : p.terms()) {
        if (!out.empty()) {
            out += " + ";
        }
        if (m.empty()) {
            out += "(" + c.get_str() + ")";
        } else if (c == 1) {
            out += to_string(m);
        } else {
            out += "(" + c.get_str() + ")*" + to_string(m);
        }
    }
    return out;
}

} // namespace qmf
