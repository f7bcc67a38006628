#include "sepsem/parser.hpp"

#include "sepsem/errors.hpp"

#include <cctype>
#include <sstream>

namespace sepsem {

namespace {

enum class Tok {
    end,
    ident,
    number, // integer literal, possibly negative
    kw_true,
    points_to, // |->
    tilde,
    star,
    and_op, // /\ .
    or_op,  // \/
    slash,
    lparen,
    rparen,
    lbrace,
    rbrace,
    colon,
    comma,
};

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            int line = line_, col = col_;
            if (pos_ >= text_.size()) {
                out.push_back({Tok::end, "", line, col});
                return out;
            }
            char c = text_[pos_];
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string word;
                while (pos_ < text_.size() &&
                       (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                        text_[pos_] == '_'))
                    word += take();
                out.push_back({word == "true" ? Tok::kw_true : Tok::ident, word, line, col});
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c)) ||
                (c == '-' && pos_ + 1 < text_.size() &&
                 std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
                std::string num;
                num += take();
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    num += take();
                out.push_back({Tok::number, num, line, col});
                continue;
            }
            switch (c) {
            case '|':
                expect_seq("|->", line, col);
                out.push_back({Tok::points_to, "|->", line, col});
                continue;
            case '~': take(); out.push_back({Tok::tilde, "~", line, col}); continue;
            case '*': take(); out.push_back({Tok::star, "*", line, col}); continue;
            case '/':
                take();
                if (pos_ < text_.size() && text_[pos_] == '\\') {
                    take();
                    out.push_back({Tok::and_op, "/\\", line, col});
                } else {
                    out.push_back({Tok::slash, "/", line, col});
                }
                continue;
            case '\\':
                expect_seq("\\/", line, col);
                out.push_back({Tok::or_op, "\\/", line, col});
                continue;
            case '(': take(); out.push_back({Tok::lparen, "(", line, col}); continue;
            case ')': take(); out.push_back({Tok::rparen, ")", line, col}); continue;
            case '{': take(); out.push_back({Tok::lbrace, "{", line, col}); continue;
            case '}': take(); out.push_back({Tok::rbrace, "}", line, col}); continue;
            case ':': take(); out.push_back({Tok::colon, ":", line, col}); continue;
            case ',': take(); out.push_back({Tok::comma, ",", line, col}); continue;
            default:
                throw parse_error(line, col, std::string("unexpected character '") + c + "'");
            }
        }
    }

private:
    char take() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            take();
    }

    void expect_seq(std::string_view seq, int line, int col) {
        for (char c : seq) {
            if (pos_ >= text_.size() || text_[pos_] != c)
                throw parse_error(line, col,
                                  "expected '" + std::string(seq) + "'");
            take();
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(Lexer(text).run()) {}

    template <typename P, typename MkAtom>
    P parse(const MkAtom& mk_atom) {
        P result = parse_or<P>(mk_atom);
        if (peek().kind != Tok::end)
            fail("unexpected trailing input");
        return result;
    }

private:
    template <typename P, typename MkAtom>
    P parse_or(const MkAtom& mk_atom) {
        P left = parse_and<P>(mk_atom);
        while (peek().kind == Tok::or_op) {
            next();
            left = P::disj(left, parse_and<P>(mk_atom));
        }
        return left;
    }

    template <typename P, typename MkAtom>
    P parse_and(const MkAtom& mk_atom) {
        P left = parse_star<P>(mk_atom);
        while (peek().kind == Tok::and_op) {
            next();
            left = P::conj(left, parse_star<P>(mk_atom));
        }
        return left;
    }

    template <typename P, typename MkAtom>
    P parse_star(const MkAtom& mk_atom) {
        P left = parse_atom<P>(mk_atom);
        while (peek().kind == Tok::star) {
            next();
            left = P::star(left, parse_atom<P>(mk_atom));
        }
        return left;
    }

    template <typename P, typename MkAtom>
    P parse_atom(const MkAtom& mk_atom) {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::kw_true: next(); return P::top();
        case Tok::lparen: {
            next();
            P inner = parse_or<P>(mk_atom);
            expect(Tok::rparen, "expected ')'");
            return inner;
        }
        case Tok::ident: {
            std::string var = next().text;
            return mk_atom(*this, std::move(var));
        }
        default: fail("expected an atom"); std::abort();
        }
    }

public:
    StoreAtom finish_store_atom(std::string var) {
        const Token& t = peek();
        if (t.kind == Tok::tilde)
            fail("'~' is not allowed in store propositions");
        expect(Tok::points_to, "expected '|->'");
        return {std::move(var), parse_int()};
    }

    ProbAtom finish_prob_atom(std::string var) {
        const Token& t = peek();
        if (t.kind == Tok::points_to)
            fail("'|->' is not allowed in probabilistic propositions");
        expect(Tok::tilde, "expected '~'");
        return {std::move(var), parse_pmf()};
    }

private:
    Pmf parse_pmf() {
        const Token& t = peek();
        if (t.kind == Tok::ident && t.text == "ber") {
            next();
            expect(Tok::lparen, "expected '(' after ber");
            Rat p = parse_rat();
            expect(Tok::rparen, "expected ')'");
            try {
                return Pmf::bernoulli(p);
            } catch (const input_error& e) {
                fail(e.what());
            }
        }
        if (t.kind == Tok::lbrace) {
            next();
            std::map<std::int64_t, Rat> entries;
            while (true) {
                std::int64_t value = parse_int();
                expect(Tok::colon, "expected ':'");
                Rat mass = parse_rat();
                if (!entries.emplace(value, mass).second)
                    fail("duplicate outcome in probability mass function");
                if (peek().kind == Tok::comma) {
                    next();
                    continue;
                }
                break;
            }
            expect(Tok::rbrace, "expected '}'");
            try {
                return Pmf(std::move(entries));
            } catch (const input_error& e) {
                fail(e.what());
            }
        }
        fail("expected a probability mass function");
        std::abort();
    }

    std::int64_t parse_int() {
        Token t = expect(Tok::number, "expected an integer");
        try {
            return std::stoll(t.text);
        } catch (const std::exception&) {
            throw parse_error(t.line, t.col, "integer out of range");
        }
    }

    Rat parse_rat() {
        std::int64_t num = parse_int();
        if (peek().kind == Tok::slash) {
            next();
            std::int64_t den = parse_int();
            if (den <= 0)
                fail("denominator must be positive");
            return Rat(num, den);
        }
        return Rat(num);
    }

    const Token& peek() const { return tokens_[pos_]; }
    Token next() { return tokens_[pos_++]; }

    Token expect(Tok kind, const std::string& message) {
        if (peek().kind != kind)
            fail(message);
        return next();
    }

    [[noreturn]] void fail(const std::string& message) const {
        const Token& t = peek();
        throw parse_error(t.line, t.col, message);
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

template <typename P>
struct Printer {
    // precedence: \/ = 1, /\ = 2, * = 3
    static void print(std::ostream& os, const P& p, int min_prec) {
        using Kind = typename P::Kind;
        switch (p.kind()) {
        case Kind::top: os << "true"; return;
        case Kind::atom: print_atom(os, p.get_atom()); return;
        case Kind::disj: print_binary(os, p, " \\/ ", 1, min_prec); return;
        case Kind::conj: print_binary(os, p, " /\\ ", 2, min_prec); return;
        case Kind::star: print_binary(os, p, " * ", 3, min_prec); return;
        }
    }

    static void print_binary(std::ostream& os, const P& p, const char* op, int prec,
                             int min_prec) {
        const bool parens = prec < min_prec;
        if (parens)
            os << "(";
        print(os, p.lhs(), prec);
        os << op;
        print(os, p.rhs(), prec + 1); // left-associative
        if (parens)
            os << ")";
    }

    static void print_atom(std::ostream& os, const StoreAtom& a) {
        os << a.var << " |-> " << a.value;
    }

    static void print_atom(std::ostream& os, const ProbAtom& a) {
        os << a.var << " ~ {";
        bool first = true;
        for (const auto& [value, mass] : a.dist.entries()) {
            if (!first)
                os << ", ";
            first = false;
            os << value << ": " << rat_to_string(mass);
        }
        os << "}";
    }
};

} // namespace

StoreProp parse_store_prop(std::string_view text) {
    Parser p(text);
    return p.parse<StoreProp>([](Parser& self, std::string var) {
        return StoreProp::atom(self.finish_store_atom(std::move(var)));
    });
}

ProbProp parse_prob_prop(std::string_view text) {
    Parser p(text);
    return p.parse<ProbProp>([](Parser& self, std::string var) {
        return ProbProp::atom(self.finish_prob_atom(std::move(var)));
    });
}

std::string print_prop(const StoreProp& prop) {
    std::ostringstream os;
    Printer<StoreProp>::print(os, prop, 1);
    return os.str();
}

std::string print_prop(const ProbProp& prop) {
    std::ostringstream os;
    Printer<ProbProp>::print(os, prop, 1);
    return os.str();
}

} // namespace sepsem
