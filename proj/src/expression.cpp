#include "tcbound/cohomology.hpp"

#include "tcbound/error.hpp"

#include <cctype>

namespace tcb::cohomology {

namespace {

class Parser {
public:
    Parser(const ProductAlgebra& square, std::string_view text) : sq_(square), s_(text) {}

    AlgebraElement parse()
    {
        auto e = expr();
        skip_ws();
        if (pos_ != s_.size())
            fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ValidationError("cannot parse '" + std::string(s_) + "' at offset " +
                              std::to_string(pos_) + ": " + msg);
    }

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::int64_t integer()
    {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected an integer");
        if (pos_ - start > 12)
            fail("integer literal too large");
        return std::stoll(std::string(s_.substr(start, pos_ - start)));
    }

    AlgebraElement expr()
    {
        const bool negate = accept('-');
        auto e = term();
        if (negate)
            e = e.scaled(-1);
        for (;;) {
            if (accept('+'))
                e = e + term();
            else if (accept('-'))
                e = e - term();
            else
                return e;
        }
    }

    AlgebraElement term()
    {
        auto e = power_();
        while (accept('*'))
            e = e * power_();
        return e;
    }

    AlgebraElement power_()
    {
        auto e = primary();
        if (accept('^')) {
            const auto k = integer();
            if (k > 4096)
                fail("exponent too large");
            e = power(e, static_cast<unsigned>(k));
        }
        return e;
    }

    AlgebraElement basis_of_factor(const std::string& label)
    {
        const auto idx = sq_.left->index_of(label);
        if (!idx)
            fail("unknown basis label '" + label + "'");
        return AlgebraElement::basis(sq_.left, *idx);
    }

    std::string label_argument()
    {
        if (!accept('('))
            fail("expected '('");
        const std::size_t start = pos_;
        const std::size_t close = s_.find(')', pos_);
        if (close == std::string_view::npos)
            fail("missing ')'");
        pos_ = close + 1;
        std::string label(s_.substr(start, close - start));
        const auto first = label.find_first_not_of(" \t");
        const auto last = label.find_last_not_of(" \t");
        return first == std::string::npos ? std::string() : label.substr(first, last - first + 1);
    }

    AlgebraElement primary()
    {
        skip_ws();
        if (accept('(')) {
            auto e = expr();
            if (!accept(')'))
                fail("expected ')'");
            return e;
        }
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            return AlgebraElement::basis(sq_.product, 0, integer());
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        const std::string_view word = s_.substr(start, pos_ - start);
        if (word == "bar")
            return bar(sq_, basis_of_factor(label_argument()));
        if (word == "left")
            return sq_.left_embed(basis_of_factor(label_argument()));
        if (word == "right")
            return sq_.right_embed(basis_of_factor(label_argument()));
        pos_ = start;
        fail("expected bar(...), left(...), right(...), an integer or '('");
    }

    const ProductAlgebra& sq_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

AlgebraElement parse_element(const ProductAlgebra& square, std::string_view text)
{
    if (!square.is_square())
        throw ValidationError("expressions are evaluated in a Künneth square A (x) A");
    return Parser(square, text).parse();
}

} // namespace tcb::cohomology
