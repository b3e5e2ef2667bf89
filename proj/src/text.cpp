#include "tamedeg/text.hpp"

#include <cctype>
#include <stdexcept>

namespace tamedeg {

std::string rational_to_string(const Rational& q)
{
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    const mpz_class n{std::string(num)}, d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

std::string to_string(const Polynomial& f)
{
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;

        std::string vars;
        for (std::size_t i = 0; i < m.nvars(); ++i) {
            if (m[i] == 0) continue;
            if (!vars.empty()) vars += '*';
            vars += 'x' + std::to_string(i + 1);
            if (m[i] > 1) vars += '^' + std::to_string(m[i]);
        }
        if (vars.empty())
            out += rational_to_string(mag);
        else if (mag == 1)
            out += vars;
        else
            out += rational_to_string(mag) + '*' + vars;
    }
    return out;
}

namespace {

class TermParser {
public:
    TermParser(std::string_view text, std::size_t nvars) : text_(text), nvars_(nvars) {}

    Polynomial parse()
    {
        Polynomial result(nvars_);
        skip_ws();
        if (at_end()) fail("empty polynomial");
        bool first = true;
        while (!at_end()) {
            Rational sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [mono, coeff] = term();
            result.add_term(mono, sign * coeff);
            skip_ws();
        }
        return result;
    }

private:
    std::pair<Monomial, Rational> term()
    {
        Rational coeff = 1;
        std::vector<std::uint32_t> exps(nvars_, 0);
        bool need_factor = true;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_rational(number_token(true));
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
            } else {
                need_factor = false;
            }
        }
        while (need_factor) {
            if (peek() != 'x') fail("expected variable");
            ++pos_;
            const auto index = std::stoul(std::string(number_token(false)));
            if (index == 0 || index > nvars_) fail("variable x" + std::to_string(index) + " out of range");
            std::uint32_t e = 1;
            skip_ws();
            if (peek() == '^') {
                ++pos_;
                skip_ws();
                e = static_cast<std::uint32_t>(std::stoul(std::string(number_token(false))));
                skip_ws();
            }
            exps[index - 1] += e;
            if (peek() != '*') break;
            ++pos_;
            skip_ws();
        }
        return {Monomial(std::move(exps)), coeff};
    }

    std::string_view number_token(bool allow_fraction)
    {
        const auto start = pos_;
        while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || (allow_fraction && peek() == '/'))) ++pos_;
        if (start == pos_) fail("expected number");
        return text_.substr(start, pos_ - start);
    }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    std::size_t nvars_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t nvars)
{
    return TermParser(text, nvars).parse();
}

}  // namespace tamedeg
