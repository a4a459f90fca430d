#include "wreathdiam/element_grammar.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>

namespace wreathdiam {

namespace {

class Parser {
public:
    Parser(std::string_view text, const GroupParams& params) : text_(text), params_(params) {}

    WreathElement parse() {
        WreathElement e = element();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("cannot parse element '" + std::string(text_) + "' at offset " + std::to_string(pos_) +
                         ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    std::int64_t integer() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::int64_t value = 0;
        const char* first = text_.data() + start;
        if (start < text_.size() && text_[start] == '+') ++first;
        const auto [ptr, ec] = std::from_chars(first, text_.data() + pos_, value);
        if (ec != std::errc() || ptr != text_.data() + pos_) {
            pos_ = start;
            fail("expected an integer");
        }
        return value;
    }

    WreathElement element() {
        WreathElement acc = factor();
        while (accept('*')) acc = acc * factor();
        return acc;
    }

    WreathElement factor() {
        WreathElement base = atom();
        if (accept('^')) return base.pow(integer());
        return base;
    }

    // "(a,b,...)@i" when the parenthesis holds only integers and is followed by '@'.
    std::optional<WreathElement> vector_literal() {
        const std::size_t save = pos_;
        std::vector<Residue> vec;
        bool ok = true;
        while (true) {
            skip_ws();
            if (pos_ >= text_.size() || !(std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-')) {
                ok = false;
                break;
            }
            const std::int64_t v = integer();
            const auto q = static_cast<std::int64_t>(params_.q);
            vec.push_back(static_cast<Residue>(((v % q) + q) % q));
            if (accept(',')) continue;
            if (accept(')')) break;
            ok = false;
            break;
        }
        if (!ok || !accept('@')) {
            pos_ = save;
            return std::nullopt;
        }
        if (vec.size() != params_.p) fail("vector literal must have exactly p entries");
        const auto p = static_cast<std::int64_t>(params_.p);
        const std::int64_t shift = ((integer() % p) + p) % p;
        return WreathElement(params_, std::move(vec), static_cast<std::uint32_t>(shift));
    }

    WreathElement atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char ch = text_[pos_];
        if (ch == '(') {
            ++pos_;
            if (auto v = vector_literal()) return *v;
            WreathElement inner = element();
            expect(')');
            return inner;
        }
        if (ch == 'c') {
            ++pos_;
            return WreathElement::shift_generator(params_);
        }
        if (ch == 'z') {
            ++pos_;
            return WreathElement::central(params_);
        }
        if (ch == '1') {
            ++pos_;
            return WreathElement::identity(params_);
        }
        if (ch == 'e') {
            ++pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                fail("expected a basis index after 'e'");
            }
            const std::int64_t j = integer();
            if (j < 0 || j >= static_cast<std::int64_t>(params_.p)) fail("basis index out of range");
            return WreathElement::basis(params_, static_cast<std::uint32_t>(j));
        }
        fail(std::string("unexpected character '") + ch + "'");
    }

    std::string_view text_;
    const GroupParams& params_;
    std::size_t pos_ = 0;
};

}  // namespace

WreathElement parse_element(std::string_view text, const GroupParams& params) {
    return Parser(text, params).parse();
}

std::vector<WreathElement> parse_element_list(std::string_view text, const GroupParams& params) {
    std::vector<WreathElement> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find(';', start), text.size());
        const std::string_view piece = text.substr(start, end - start);
        if (piece.find_first_not_of(" \t") != std::string_view::npos) out.push_back(parse_element(piece, params));
        start = end + 1;
    }
    if (out.empty()) throw ParseError("empty element list");
    return out;
}

}  // namespace wreathdiam
