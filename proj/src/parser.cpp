#include "hopfrep/parser.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

#include "hopfrep/errors.hpp"

namespace hopfrep {

namespace {

enum class TokKind { Ident, Number, Plus, Minus, Star, Slash, Caret, Less, Arrow, LParen, RParen,
                     Tensor, End };

struct Token {
    TokKind kind;
    std::string text;
    int column;
};

class Lexer {
public:
    Lexer(const std::string& line, int line_no) : line_(line), line_no_(line_no) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

    Token expect(TokKind kind, const std::string& what) {
        if (current_.kind != kind) {
            throw ParseError(ParseError::Kind::Syntax, line_no_, current_.column,
                             "expected " + what);
        }
        return take();
    }

    int line_no() const { return line_no_; }

private:
    void advance() {
        while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
        int col = static_cast<int>(pos_) + 1;
        if (pos_ >= line_.size() || line_[pos_] == '#') {
            current_ = Token{TokKind::End, "", col};
            return;
        }
        char c = line_[pos_];
        if (c == '(') {
            // "(x)" is the tensor operator; "( expr )" is grouping.
            std::size_t look = pos_ + 1;
            while (look < line_.size() && std::isspace(static_cast<unsigned char>(line_[look])))
                ++look;
            if (look < line_.size() && line_[look] == 'x') {
                std::size_t after = look + 1;
                while (after < line_.size() &&
                       std::isspace(static_cast<unsigned char>(line_[after])))
                    ++after;
                if (after < line_.size() && line_[after] == ')') {
                    pos_ = after + 1;
                    current_ = Token{TokKind::Tensor, "(x)", col};
                    return;
                }
            }
            ++pos_;
            current_ = Token{TokKind::LParen, "(", col};
            return;
        }
        if (c == ')') { ++pos_; current_ = Token{TokKind::RParen, ")", col}; return; }
        if (c == '+') { ++pos_; current_ = Token{TokKind::Plus, "+", col}; return; }
        if (c == '*') { ++pos_; current_ = Token{TokKind::Star, "*", col}; return; }
        if (c == '/') { ++pos_; current_ = Token{TokKind::Slash, "/", col}; return; }
        if (c == '^') { ++pos_; current_ = Token{TokKind::Caret, "^", col}; return; }
        if (c == '<') { ++pos_; current_ = Token{TokKind::Less, "<", col}; return; }
        if (c == '-') {
            if (pos_ + 1 < line_.size() && line_[pos_ + 1] == '>') {
                pos_ += 2;
                current_ = Token{TokKind::Arrow, "->", col};
            } else {
                ++pos_;
                current_ = Token{TokKind::Minus, "-", col};
            }
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_])))
                ++pos_;
            current_ = Token{TokKind::Number, line_.substr(start, pos_ - start), col};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < line_.size() &&
                   (std::isalnum(static_cast<unsigned char>(line_[pos_])) || line_[pos_] == '_'))
                ++pos_;
            current_ = Token{TokKind::Ident, line_.substr(start, pos_ - start), col};
            return;
        }
        throw ParseError(ParseError::Kind::Syntax, line_no_, col,
                         std::string("unexpected character '") + c + "'");
    }

    const std::string& line_;
    int line_no_;
    std::size_t pos_ = 0;
    Token current_{TokKind::End, "", 1};
};

/// Raw expression evaluator over a generator-name table; produces linear
/// combinations of words without normalization.
class ExprParser {
public:
    ExprParser(Lexer& lex, const std::map<std::string, int>& gen_index)
        : lex_(lex), gen_index_(gen_index) {}

    LinComb parse_sum() {
        LinComb acc;
        bool negative = consume_sign();
        add_scaled(acc, parse_product(), LaurentScalar(negative ? -1 : 1));
        while (lex_.peek().kind == TokKind::Plus || lex_.peek().kind == TokKind::Minus) {
            bool neg = lex_.take().kind == TokKind::Minus;
            add_scaled(acc, parse_product(), LaurentScalar(neg ? -1 : 1));
        }
        return acc;
    }

    /// Sum of tensor pairs "u (x) v".
    std::vector<std::pair<LinComb, LinComb>> parse_tensor_sum() {
        std::vector<std::pair<LinComb, LinComb>> pairs;
        bool negative = consume_sign();
        pairs.push_back(parse_tensor_term(negative));
        while (lex_.peek().kind == TokKind::Plus || lex_.peek().kind == TokKind::Minus) {
            bool neg = lex_.take().kind == TokKind::Minus;
            pairs.push_back(parse_tensor_term(neg));
        }
        return pairs;
    }

    LinComb parse_product() {
        LinComb acc = parse_factor();
        while (lex_.peek().kind == TokKind::Star) {
            lex_.take();
            acc = concat(acc, parse_factor());
        }
        return acc;
    }

private:
    bool consume_sign() {
        if (lex_.peek().kind == TokKind::Minus) {
            lex_.take();
            return true;
        }
        return false;
    }

    std::pair<LinComb, LinComb> parse_tensor_term(bool negative) {
        LinComb left = parse_product();
        lex_.expect(TokKind::Tensor, "'(x)'");
        LinComb right = parse_product();
        if (negative) {
            LinComb scaled;
            add_scaled(scaled, left, LaurentScalar(-1));
            left = std::move(scaled);
        }
        return {std::move(left), std::move(right)};
    }

    LinComb parse_factor() {
        const Token& t = lex_.peek();
        if (t.kind == TokKind::Number) {
            return scalar_comb(parse_rational());
        }
        if (t.kind == TokKind::Ident) {
            if (t.text == "q") {
                lex_.take();
                long exponent = 1;
                if (lex_.peek().kind == TokKind::Caret) {
                    lex_.take();
                    bool neg = consume_sign();
                    Token num = lex_.expect(TokKind::Number, "an exponent");
                    exponent = std::stol(num.text);
                    if (neg) exponent = -exponent;
                }
                return scalar_comb(LaurentScalar::q_power(exponent));
            }
            Token name = lex_.take();
            auto it = gen_index_.find(name.text);
            if (it == gen_index_.end()) {
                throw ParseError(ParseError::Kind::UnknownGenerator, lex_.line_no(), name.column,
                                 "unknown generator '" + name.text + "'");
            }
            LinComb out;
            out.emplace(Word{it->second}, LaurentScalar(1));
            return out;
        }
        if (t.kind == TokKind::LParen) {
            lex_.take();
            LinComb inner = parse_sum();
            lex_.expect(TokKind::RParen, "')'");
            return inner;
        }
        throw ParseError(ParseError::Kind::Syntax, lex_.line_no(), t.column,
                         "expected a number, generator, q-power, or '('");
    }

    LaurentScalar parse_rational() {
        Token num = lex_.expect(TokKind::Number, "a number");
        Rational value(num.text);
        if (lex_.peek().kind == TokKind::Slash) {
            lex_.take();
            Token den = lex_.expect(TokKind::Number, "a denominator");
            value /= Rational(den.text);
        }
        value.canonicalize();
        return LaurentScalar(value);
    }

    static LinComb scalar_comb(const LaurentScalar& s) {
        LinComb out;
        if (!s.is_zero()) out.emplace(Word{}, s);
        return out;
    }

    Lexer& lex_;
    const std::map<std::string, int>& gen_index_;
};

struct RawRule {
    int line_no;
    LinComb lhs;
    LinComb rhs;
};

struct RawStanza {
    int line_no;
    std::string generator;
    std::string body;  // text after '->'
};

Word single_word(const LinComb& comb, int line_no, ParseError::Kind kind) {
    if (comb.size() != 1 || !comb.begin()->second.is_one()) {
        throw ParseError(kind, line_no, 1, "expected a plain word");
    }
    return comb.begin()->first;
}

}  // namespace

ParsedPresentation parse_presentation(const std::string& text, bool require_confluent,
                                      int overlap_degree) {
    std::vector<std::string> gen_names;
    std::optional<std::vector<std::string>> order_names;
    std::vector<std::pair<int, std::string>> rule_lines;
    std::vector<RawStanza> coproduct_lines, counit_lines, antipode_lines;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool saw_content = false;
    while (std::getline(in, line)) {
        ++line_no;
        Lexer lex(line, line_no);
        if (lex.peek().kind == TokKind::End) continue;
        Token head = lex.expect(TokKind::Ident, "a stanza keyword");
        saw_content = true;
        if (head.text == "gen") {
            while (lex.peek().kind == TokKind::Ident) gen_names.push_back(lex.take().text);
            if (lex.peek().kind != TokKind::End) {
                throw ParseError(ParseError::Kind::Syntax, line_no, lex.peek().column,
                                 "generator names must be identifiers");
            }
        } else if (head.text == "order") {
            std::vector<std::string> names;
            names.push_back(lex.expect(TokKind::Ident, "a generator name").text);
            while (lex.peek().kind == TokKind::Less) {
                lex.take();
                names.push_back(lex.expect(TokKind::Ident, "a generator name").text);
            }
            order_names = std::move(names);
        } else if (head.text == "rule" || head.text == "coproduct" || head.text == "counit" ||
                   head.text == "antipode") {
            // Re-split the raw line at '->' so stanza bodies can be parsed
            // once the generator table is fixed.
            std::size_t arrow = line.find("->");
            if (arrow == std::string::npos) {
                throw ParseError(ParseError::Kind::Syntax, line_no, 1, "missing '->'");
            }
            std::string before = line.substr(0, arrow);
            std::string after = line.substr(arrow + 2);
            if (head.text == "rule") {
                rule_lines.emplace_back(line_no, line);
            } else {
                Lexer head_lex(before, line_no);
                head_lex.take();  // stanza keyword
                Token gen = head_lex.expect(TokKind::Ident, "a generator name");
                RawStanza stanza{line_no, gen.text, after};
                if (head.text == "coproduct") coproduct_lines.push_back(stanza);
                if (head.text == "counit") counit_lines.push_back(stanza);
                if (head.text == "antipode") antipode_lines.push_back(stanza);
            }
        } else {
            throw ParseError(ParseError::Kind::Syntax, line_no, head.column,
                             "unknown stanza '" + head.text + "'");
        }
    }
    if (!saw_content || gen_names.empty()) {
        throw ParseError(ParseError::Kind::Syntax, line_no, 1,
                         "presentation needs at least a 'gen' line");
    }

    // Normal-form order: the order line when present, declaration order
    // otherwise.
    std::vector<std::string> ordered = order_names.value_or(gen_names);
    if (ordered.size() != gen_names.size()) {
        throw ParseError(ParseError::Kind::Syntax, 1, 1,
                         "order line must mention every generator exactly once");
    }
    std::map<std::string, int> gen_index;
    std::vector<Generator> gens;
    for (std::size_t i = 0; i < ordered.size(); ++i) {
        if (gen_index.count(ordered[i])) {
            throw ParseError(ParseError::Kind::Syntax, 1, 1,
                             "duplicate generator '" + ordered[i] + "'");
        }
        bool declared = false;
        for (const auto& n : gen_names) declared |= (n == ordered[i]);
        if (!declared) {
            throw ParseError(ParseError::Kind::UnknownGenerator, 1, 1,
                             "order line names unknown generator '" + ordered[i] + "'");
        }
        gen_index[ordered[i]] = static_cast<int>(i);
        gens.push_back(Generator{ordered[i], static_cast<int>(i)});
    }

    std::vector<RewriteRule> rules;
    for (const auto& [rline_no, raw] : rule_lines) {
        Lexer lex(raw, rline_no);
        lex.take();  // "rule"
        ExprParser expr(lex, gen_index);
        LinComb lhs_comb = expr.parse_product();
        Word lhs = single_word(lhs_comb, rline_no, ParseError::Kind::Syntax);
        if (lhs.empty()) {
            throw ParseError(ParseError::Kind::Syntax, rline_no, 1,
                             "rule left-hand side must be a nonempty word");
        }
        lex.expect(TokKind::Arrow, "'->'");
        LinComb rhs = expr.parse_sum();
        if (lex.peek().kind != TokKind::End) {
            throw ParseError(ParseError::Kind::Syntax, rline_no, lex.peek().column,
                             "trailing input after rule");
        }
        for (const auto& [w, c] : rhs) {
            if (!word_less(w, lhs)) {
                throw ParseError(ParseError::Kind::NonDecreasingRule, rline_no, 1,
                                 "rule does not decrease in the word order");
            }
        }
        rules.push_back(RewriteRule{std::move(lhs), std::move(rhs)});
    }

    auto pres = std::make_shared<Presentation>(std::move(gens), std::move(rules), overlap_degree);
    if (require_confluent && !pres->confluent()) {
        const auto& issue = pres->confluence().unresolved.front();
        throw ParseError(ParseError::Kind::NotLocallyConfluent, 0, 0,
                         "unresolved critical pair at " + pres->render_word(issue.superposition));
    }

    ParsedPresentation out;
    out.presentation = pres;
    if (coproduct_lines.empty() && counit_lines.empty() && antipode_lines.empty()) {
        return out;
    }

    std::map<int, TensorElement> coprod;
    for (const auto& stanza : coproduct_lines) {
        auto git = gen_index.find(stanza.generator);
        if (git == gen_index.end()) {
            throw ParseError(ParseError::Kind::UnknownGenerator, stanza.line_no, 1,
                             "unknown generator '" + stanza.generator + "'");
        }
        Lexer lex(stanza.body, stanza.line_no);
        ExprParser expr(lex, gen_index);
        std::vector<std::pair<LinComb, LinComb>> pairs = expr.parse_tensor_sum();
        if (lex.peek().kind != TokKind::End) {
            throw ParseError(ParseError::Kind::Syntax, stanza.line_no, lex.peek().column,
                             "trailing input after coproduct");
        }
        TensorElement value(algebra_space(pres, 2));
        for (const auto& [left, right] : pairs) {
            for (const auto& [lw, lc] : pres->normal_form(left)) {
                for (const auto& [rw, rc] : pres->normal_form(right)) {
                    value.add_term(BasisTuple{lw, rw}, lc * rc);
                }
            }
        }
        coprod.emplace(git->second, std::move(value));
    }

    std::map<int, LaurentScalar> counit;
    for (const auto& stanza : counit_lines) {
        auto git = gen_index.find(stanza.generator);
        if (git == gen_index.end()) {
            throw ParseError(ParseError::Kind::UnknownGenerator, stanza.line_no, 1,
                             "unknown generator '" + stanza.generator + "'");
        }
        Lexer lex(stanza.body, stanza.line_no);
        ExprParser expr(lex, gen_index);
        LinComb value = expr.parse_sum();
        LaurentScalar scalar;
        for (const auto& [w, c] : value) {
            if (!w.empty()) {
                throw ParseError(ParseError::Kind::Syntax, stanza.line_no, 1,
                                 "counit value must be a scalar");
            }
            scalar = c;
        }
        counit.emplace(git->second, scalar);
    }

    std::optional<std::map<int, AlgebraElement>> antipode;
    if (!antipode_lines.empty()) {
        antipode.emplace();
        for (const auto& stanza : antipode_lines) {
            auto git = gen_index.find(stanza.generator);
            if (git == gen_index.end()) {
                throw ParseError(ParseError::Kind::UnknownGenerator, stanza.line_no, 1,
                                 "unknown generator '" + stanza.generator + "'");
            }
            Lexer lex(stanza.body, stanza.line_no);
            ExprParser expr(lex, gen_index);
            antipode->emplace(git->second, AlgebraElement(pres, expr.parse_sum()));
        }
    }

    try {
        out.hopf = std::make_shared<HopfData>(pres, std::move(coprod), std::move(counit),
                                              std::move(antipode), "");
    } catch (const Error& e) {
        throw ParseError(ParseError::Kind::Syntax, 0, 0, e.what());
    }
    return out;
}

std::map<int, AlgebraElement> parse_projection(const std::string& text, const HopfPtr& H,
                                               const HopfPtr& B) {
    std::map<std::string, int> h_index, b_index;
    for (std::size_t i = 0; i < H->pres()->generators().size(); ++i) {
        h_index[H->pres()->generators()[i].name] = static_cast<int>(i);
    }
    for (std::size_t i = 0; i < B->pres()->generators().size(); ++i) {
        b_index[B->pres()->generators()[i].name] = static_cast<int>(i);
    }

    std::map<int, AlgebraElement> out;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        Lexer lex(line, line_no);
        if (lex.peek().kind == TokKind::End) continue;
        Token head = lex.expect(TokKind::Ident, "'pi'");
        if (head.text != "pi") {
            throw ParseError(ParseError::Kind::Syntax, line_no, head.column,
                             "expected a 'pi' stanza");
        }
        Token gen = lex.expect(TokKind::Ident, "a generator name");
        auto git = h_index.find(gen.text);
        if (git == h_index.end()) {
            throw ParseError(ParseError::Kind::UnknownGenerator, line_no, gen.column,
                             "unknown generator '" + gen.text + "'");
        }
        lex.expect(TokKind::Arrow, "'->'");
        ExprParser expr(lex, b_index);
        out.emplace(git->second, AlgebraElement(B->pres(), expr.parse_sum()));
        if (lex.peek().kind != TokKind::End) {
            throw ParseError(ParseError::Kind::Syntax, line_no, lex.peek().column,
                             "trailing input after projection");
        }
    }
    return out;
}

AlgebraElement parse_element(const std::string& text, const PresentationPtr& p) {
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < p->generators().size(); ++i) {
        index[p->generators()[i].name] = static_cast<int>(i);
    }
    Lexer lex(text, 1);
    ExprParser expr(lex, index);
    LinComb comb = expr.parse_sum();
    if (lex.peek().kind != TokKind::End) {
        throw ParseError(ParseError::Kind::Syntax, 1, lex.peek().column, "trailing input");
    }
    return AlgebraElement(p, std::move(comb));
}

}  // namespace hopfrep
