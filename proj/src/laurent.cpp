#include "rht/laurent.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace rht {

Laurent::Laurent(const Rational& constant) {
    if (!constant.is_zero()) terms_.emplace(LaurentExponent{0, 0}, constant);
}

Laurent Laurent::monomial(const Rational& coeff, int t_power, int s_power) {
    Laurent l;
    l.add_term({t_power, s_power}, coeff);
    return l;
}

void Laurent::add_term(const LaurentExponent& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

bool Laurent::involves_s() const {
    for (const auto& [e, c] : terms_)
        if (e.second != 0) return true;
    return false;
}

std::optional<Rational> Laurent::as_constant() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_.begin()->first == LaurentExponent{0, 0}) return terms_.begin()->second;
    return std::nullopt;
}

std::optional<std::pair<Rational, int>> Laurent::as_t_monomial() const {
    if (terms_.size() != 1 || terms_.begin()->first.second != 0) return std::nullopt;
    return std::make_pair(terms_.begin()->second, terms_.begin()->first.first);
}

Rational Laurent::coefficient(int t_power, int s_power) const {
    const auto it = terms_.find({t_power, s_power});
    return it == terms_.end() ? Rational(0) : it->second;
}

Laurent Laurent::at_t(const Rational& value) const {
    Laurent out;
    for (const auto& [e, c] : terms_) {
        if (value.is_zero() && e.first < 0)
            throw std::domain_error("negative power of t evaluated at t = 0");
        const Rational factor = e.first == 0 ? Rational(1) : value.pow(e.first);
        out.add_term({0, e.second}, c * factor);
    }
    return out;
}

Laurent Laurent::rename_t_to_s() const {
    Laurent out;
    for (const auto& [e, c] : terms_) {
        if (e.second != 0) throw std::invalid_argument("rename_t_to_s on a polynomial already involving s");
        out.add_term({0, e.first}, c);
    }
    return out;
}

Laurent Laurent::substitute_t_by_st() const {
    Laurent out;
    for (const auto& [e, c] : terms_) out.add_term({e.first, e.first + e.second}, c);
    return out;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Laurent& Laurent::operator*=(const Laurent& o) {
    Laurent out;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    terms_ = std::move(out.terms_);
    return *this;
}

Laurent operator-(const Laurent& a) {
    Laurent out;
    for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
    return out;
}

Laurent operator/(const Laurent& a, const Laurent& b) {
    const auto c = b.as_constant();
    if (!c || c->is_zero()) throw std::domain_error("Laurent division by a non-constant or zero");
    Laurent out;
    for (const auto& [e, x] : a.terms_) out.terms_.emplace(e, x / *c);
    return out;
}

namespace {

std::string variable_part(const LaurentExponent& e) {
    std::string out;
    auto append = [&out](char var, int power) {
        if (power == 0) return;
        if (!out.empty()) out += '*';
        out += var;
        if (power != 1) out += "^" + std::to_string(power);
    };
    append('t', e.first);
    append('s', e.second);
    return out;
}

class LaurentParser {
public:
    explicit LaurentParser(std::string_view text) : text_(text) {}

    Laurent parse() {
        skip_space();
        if (at_end()) fail("empty Laurent expression");
        Laurent result;
        bool first = true;
        while (true) {
            skip_space();
            if (at_end()) break;
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            result += parse_term() * Laurent(Rational(sign));
            first = false;
        }
        return result;
    }

private:
    Laurent parse_term() {
        Laurent term(Rational(1));
        bool need_factor = true;
        while (need_factor) {
            skip_space();
            term *= parse_factor();
            skip_space();
            need_factor = !at_end() && peek() == '*';
            if (need_factor) ++pos_;
        }
        return term;
    }

    Laurent parse_factor() {
        if (at_end()) fail("expected a factor");
        const char c = peek();
        if (c == 't' || c == 's') {
            ++pos_;
            int power = 1;
            skip_space();
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_space();
                power = parse_int();
            }
            return c == 't' ? Laurent::t(power) : Laurent::s(power);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (!at_end() && peek() == '/') {
                ++pos_;
                while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            }
            try {
                return Laurent(Rational::parse(text_.substr(start, pos_ - start)));
            } catch (const std::invalid_argument&) {
                fail("malformed coefficient");
            }
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    int parse_int() {
        bool negative = false;
        if (!at_end() && peek() == '-') {
            negative = true;
            ++pos_;
        }
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected an integer exponent");
        const int value = std::stoi(std::string(text_.substr(start, pos_ - start)));
        return negative ? -value : value;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("Laurent parse error at offset " + std::to_string(pos_) + " in '" +
                                    std::string(text_) + "': " + what);
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
    [[nodiscard]] char peek() const { return text_[pos_]; }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Laurent Laurent::parse(std::string_view text) { return LaurentParser(text).parse(); }

std::string Laurent::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool negative = c.sign() < 0;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational magnitude = c.abs();
        const std::string vars = variable_part(e);
        if (vars.empty()) {
            out += magnitude.to_string();
        } else if (magnitude == Rational(1)) {
            out += vars;
        } else {
            out += magnitude.to_string() + "*" + vars;
        }
        first = false;
    }
    return out;
}

}  // namespace rht
