#include "lcsq/parser.hpp"

#include <cctype>

namespace lcsq {

namespace {

class Scanner {
public:
    Scanner(const std::string& text, int n) : s_(text), n_(n) {}

    NcPoly parse() {
        skip_ws();
        if (eof()) throw ParseError(pos_, "empty input");
        NcPoly p;
        bool negate = accept('-');
        p += parse_term(negate);
        skip_ws();
        while (!eof()) {
            char c = s_[pos_];
            if (c == '+' || c == '-') {
                ++pos_;
                p += parse_term(c == '-');
                skip_ws();
            } else {
                throw ParseError(pos_, std::string("unexpected character '") + c + "'");
            }
        }
        return p;
    }

private:
    bool eof() const { return pos_ >= s_.size(); }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (!eof() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return eof() ? '\0' : s_[pos_];
    }

    Int parse_integer() {
        skip_ws();
        size_t start = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError(pos_, "expected integer");
        return Int(s_.substr(start, pos_ - start));
    }

    int32_t parse_var() {
        skip_ws();
        size_t start = pos_;
        char c = s_[pos_];
        ++pos_;
        if (c == 'x' && !eof() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            size_t dstart = pos_;
            while (!eof() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string digits = s_.substr(dstart, pos_ - dstart);
            if (n_ <= 4)
                throw ParseError(start, "unknown variable 'x" + digits + "' (generators are " +
                                            allowed_vars() + ")");
            long idx = std::stol(digits);
            if (idx < 1 || idx > n_)
                throw ParseError(start, "unknown variable 'x" + digits + "' (generators are " +
                                            allowed_vars() + ")");
            return static_cast<int32_t>(idx - 1);
        }
        int32_t idx;
        switch (c) {
            case 'x': idx = 0; break;
            case 'y': idx = 1; break;
            case 'z': idx = 2; break;
            case 'w': idx = 3; break;
            default:
                throw ParseError(start, std::string("expected variable, got '") + c + "'");
        }
        if (n_ > 4)
            throw ParseError(start, std::string("unknown variable '") + c + "' (generators are " +
                                        allowed_vars() + ")");
        if (idx >= n_)
            throw ParseError(start, std::string("unknown variable '") + c + "' (generators are " +
                                        allowed_vars() + ")");
        return idx;
    }

    // factor := var ['^' posint]
    Word parse_factor() {
        int32_t v = parse_var();
        long e = 1;
        if (accept('^')) {
            size_t epos = pos_;
            Int exp = parse_integer();
            if (exp < 1) throw ParseError(epos, "exponent must be at least 1");
            e = to_long(exp);
        }
        return Word{std::vector<int32_t>(static_cast<size_t>(e), v)};
    }

    NcPoly parse_term(bool negate) {
        skip_ws();
        if (eof()) throw ParseError(pos_, "expected term");
        Int coeff = 1;
        Word w = Word::unit();
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coeff = parse_integer();
            while (accept('*')) w = w * parse_factor();
        } else {
            w = parse_factor();
            while (accept('*')) w = w * parse_factor();
        }
        if (negate) coeff = -coeff;
        return NcPoly::monomial(w, coeff);
    }

    std::string allowed_vars() const {
        if (n_ <= 4) {
            static const char* sets[] = {"x", "x,y", "x,y,z", "x,y,z,w"};
            return sets[n_ - 1];
        }
        return "x1..x" + std::to_string(n_);
    }

    const std::string& s_;
    int n_;
    size_t pos_ = 0;
};

}  // namespace

NcPoly parse_poly(const std::string& text, int n) {
    if (n < 1) throw std::invalid_argument("generator count must be at least 1");
    return Scanner(text, n).parse();
}

}  // namespace lcsq
