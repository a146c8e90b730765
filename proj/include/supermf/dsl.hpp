#pragma once

// Textual representation-diagram language: parser with span-based error
// reporting and a canonical printer.
//
//   diagram "example"
//   group G1 = SL(4)
//   group G2 = SL(2)
//   group G3 = SO(7)
//   even U1 = G1:std * G2:std
//   odd  W1 = G2:std * G3:std
//
// Group kinds: SL(n), SO(m), Sp(2n), Spin(m) [Spin(2n)- for minus
// chirality], G2, E6, E7. Weight terms: std, triv, [a1,...,ar],
// part(p1,...). A trailing "^*" marks the submodule as dualized.
// Comments run from '#' to end of line.

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "supermf/diagram.hpp"
#include "supermf/partition.hpp"
#include "supermf/root_data.hpp"

namespace supermf {

struct SourceSpan {
    int line = 1, column = 1;
    std::size_t byte_start = 0, byte_end = 0;
};

class DslError : public std::runtime_error {
public:
    DslError(SourceSpan span, const std::string& message)
        : std::runtime_error(std::to_string(span.line) + ":" + std::to_string(span.column) +
                             ": " + message),
          span_(span),
          message_(message) {}

    const SourceSpan& span() const { return span_; }
    const std::string& message() const { return message_; }

private:
    SourceSpan span_;
    std::string message_;
};

namespace dsl_detail {

enum class Tok { Ident, Int, String, LParen, RParen, LBracket, RBracket, Comma, Star, Colon, Equals, DualMark, Minus, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    long long value = 0;
    SourceSpan span;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_trivia();
        tok_line_ = line_;
        tok_col_ = col_;
        Token t;
        t.span = span_from(pos_);
        if (pos_ >= src_.size()) {
            t.kind = Tok::End;
            return t;
        }
        char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                advance();
            t.kind = Tok::Ident;
            t.text = std::string(src_.substr(start, pos_ - start));
            t.span = span_from(start);
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
            t.kind = Tok::Int;
            t.text = std::string(src_.substr(start, pos_ - start));
            t.value = std::stoll(t.text);
            t.span = span_from(start);
            return t;
        }
        if (c == '"') {
            std::size_t start = pos_;
            advance();
            std::string out;
            while (pos_ < src_.size() && src_[pos_] != '"') {
                if (src_[pos_] == '\\' && pos_ + 1 < src_.size()) advance();
                if (src_[pos_] == '\n') throw DslError(span_from(start), "unterminated string");
                out += src_[pos_];
                advance();
            }
            if (pos_ >= src_.size()) throw DslError(span_from(start), "unterminated string");
            advance();
            t.kind = Tok::String;
            t.text = std::move(out);
            t.span = span_from(start);
            return t;
        }
        std::size_t start = pos_;
        advance();
        switch (c) {
            case '(': t.kind = Tok::LParen; break;
            case ')': t.kind = Tok::RParen; break;
            case '[': t.kind = Tok::LBracket; break;
            case ']': t.kind = Tok::RBracket; break;
            case ',': t.kind = Tok::Comma; break;
            case '*': t.kind = Tok::Star; break;
            case ':': t.kind = Tok::Colon; break;
            case '=': t.kind = Tok::Equals; break;
            case '-': t.kind = Tok::Minus; break;
            case '^':
                if (pos_ < src_.size() && src_[pos_] == '*') {
                    advance();
                    t.kind = Tok::DualMark;
                    break;
                }
                throw DslError(span_from(start), "expected '*' after '^'");
            default:
                throw DslError(span_from(start), std::string("unexpected character '") + c + "'");
        }
        t.span = span_from(start);
        return t;
    }

private:
    void advance() {
        if (pos_ < src_.size()) {
            if (src_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
    }

    void skip_trivia() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else {
                break;
            }
        }
    }

    SourceSpan span_from(std::size_t start) const {
        return SourceSpan{tok_line_, tok_col_, start, pos_};
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    int tok_line_ = 1, tok_col_ = 1;
};

}  // namespace dsl_detail

// "std" means the defining representation: the partition-(1) label for the
// classical families (so [2] for SO(3), not the spinor) and the first
// fundamental weight for the exceptional ones.
inline WeightVec vector_std_weight(const GroupType& g) {
    switch (g.family) {
        case Family::A: return partition_to_weight(g, Partition{1}, LabelFlavor::Gl);
        case Family::B:
        case Family::D: return partition_to_weight(g, Partition{1}, LabelFlavor::So);
        case Family::C: return partition_to_weight(g, Partition{1}, LabelFlavor::Sp);
        default: {
            WeightVec w(static_cast<std::size_t>(g.rank), 0);
            w[0] = 1;
            return w;
        }
    }
}

namespace dsl_detail {

enum class StdKind { Vector, SpinPlus, SpinMinus };

struct FactorDecl {
    std::string name;
    GroupType type{Family::A, 1};
    StdKind std_kind = StdKind::Vector;
    SourceSpan span;
};

class Parser {
public:
    explicit Parser(std::string_view src) : lexer_(src) { shift(); }

    RepDiagram parse() {
        expect_ident("diagram");
        if (cur_.kind != Tok::String) fail("expected diagram name string");
        RepDiagram d;
        d.name = cur_.text;
        shift();

        std::vector<FactorDecl> decls;
        while (cur_.kind == Tok::Ident && cur_.text == "group") {
            shift();
            FactorDecl decl = parse_factor(decls);
            decls.push_back(decl);
            d.factors.push_back(decl.type);
            d.factor_names.push_back(decl.name);
        }
        if (decls.empty()) fail("at least one group factor required");

        while (cur_.kind == Tok::Ident && (cur_.text == "even" || cur_.text == "odd")) {
            d.submodules.push_back(parse_submodule(decls));
        }
        if (d.submodules.empty()) fail("at least one submodule required");
        if (cur_.kind != Tok::End) fail("unexpected trailing input");

        for (std::size_t i = 0; i < d.submodules.size(); ++i) {
            bool nontrivial = false;
            for (int f = 0; f < d.factor_count(); ++f)
                if (!d.submodules[i].trivial_on(f)) nontrivial = true;
            if (!nontrivial)
                throw DslError(submodule_spans_[i],
                               "submodule '" + d.submodules[i].name + "' acts trivially on every factor");
        }
        return d;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw DslError(cur_.span, message); }

    void shift() { cur_ = lexer_.next(); }

    void expect(Tok kind, const char* what) {
        if (cur_.kind != kind) fail(std::string("expected ") + what);
        shift();
    }

    void expect_ident(const std::string& word) {
        if (cur_.kind != Tok::Ident || cur_.text != word) fail("expected '" + word + "'");
        shift();
    }

    int expect_int() {
        if (cur_.kind != Tok::Int) fail("expected integer");
        long long v = cur_.value;
        shift();
        return static_cast<int>(v);
    }

    FactorDecl parse_factor(const std::vector<FactorDecl>& decls) {
        FactorDecl decl;
        if (cur_.kind != Tok::Ident) fail("expected factor name");
        decl.name = cur_.text;
        decl.span = cur_.span;
        for (const auto& prev : decls)
            if (prev.name == decl.name) fail("duplicate factor name '" + decl.name + "'");
        shift();
        expect(Tok::Equals, "'='");
        if (cur_.kind != Tok::Ident) fail("expected group kind");
        std::string kind = cur_.text;
        SourceSpan kind_span = cur_.span;
        shift();
        if (kind == "G2") {
            decl.type = make_group(Family::G2, 2);
            return decl;
        }
        if (kind == "E6") {
            decl.type = make_group(Family::E6, 6);
            return decl;
        }
        if (kind == "E7") {
            decl.type = make_group(Family::E7, 7);
            return decl;
        }
        expect(Tok::LParen, "'('");
        int m = expect_int();
        expect(Tok::RParen, "')'");
        if (kind == "SL") {
            if (m < 2) throw DslError(kind_span, "SL(n) requires n >= 2");
            decl.type = make_group(Family::A, m - 1);
        } else if (kind == "Sp") {
            if (m < 2 || m % 2 != 0) throw DslError(kind_span, "Sp(2n) requires even argument >= 2");
            decl.type = make_group(Family::C, m / 2);
        } else if (kind == "SO" || kind == "Spin") {
            if (m % 2 == 1) {
                if (m < 3) throw DslError(kind_span, "SO(m) requires m >= 3");
                decl.type = make_group(Family::B, (m - 1) / 2);
            } else {
                if (m < 6) throw DslError(kind_span, "SO(2n) requires n >= 3");
                decl.type = make_group(Family::D, m / 2);
            }
            if (kind == "Spin") {
                decl.std_kind = StdKind::SpinPlus;
                if (cur_.kind == Tok::Minus) {
                    if (decl.type.family != Family::D)
                        throw DslError(cur_.span, "chirality sign applies to Spin(2n) only");
                    decl.std_kind = StdKind::SpinMinus;
                    shift();
                }
            }
        } else {
            throw DslError(kind_span, "unknown group kind '" + kind + "'");
        }
        return decl;
    }

    Submodule parse_submodule(const std::vector<FactorDecl>& decls) {
        Submodule sub;
        sub.odd = cur_.text == "odd";
        SourceSpan decl_span = cur_.span;
        shift();
        if (cur_.kind != Tok::Ident) fail("expected submodule name");
        sub.name = cur_.text;
        shift();
        expect(Tok::Equals, "'='");
        sub.weights.assign(decls.size(), WeightVec());
        for (std::size_t f = 0; f < decls.size(); ++f)
            sub.weights[f].assign(static_cast<std::size_t>(decls[f].type.rank), 0);
        parse_term(decls, sub);
        while (cur_.kind == Tok::Star) {
            shift();
            parse_term(decls, sub);
        }
        if (cur_.kind == Tok::DualMark) {
            sub.dual = true;
            shift();
        }
        submodule_spans_.push_back(decl_span);
        return sub;
    }

    void parse_term(const std::vector<FactorDecl>& decls, Submodule& sub) {
        if (cur_.kind != Tok::Ident) fail("expected factor name in term");
        std::string fname = cur_.text;
        SourceSpan fspan = cur_.span;
        int fi = -1;
        for (std::size_t i = 0; i < decls.size(); ++i)
            if (decls[i].name == fname) fi = static_cast<int>(i);
        if (fi < 0) throw DslError(fspan, "unknown factor name '" + fname + "'");
        const FactorDecl& decl = decls[static_cast<std::size_t>(fi)];
        shift();
        expect(Tok::Colon, "':'");
        WeightVec w(static_cast<std::size_t>(decl.type.rank), 0);
        if (cur_.kind == Tok::Ident && cur_.text == "std") {
            shift();
            switch (decl.std_kind) {
                case StdKind::Vector: w = vector_std_weight(decl.type); break;
                case StdKind::SpinPlus:
                    w = decl.type.family == Family::B ? spin_label(decl.type, Chirality::Full)
                                                      : spin_label(decl.type, Chirality::Plus);
                    break;
                case StdKind::SpinMinus: w = spin_label(decl.type, Chirality::Minus); break;
            }
        } else if (cur_.kind == Tok::Ident && cur_.text == "triv") {
            shift();
        } else if (cur_.kind == Tok::LBracket) {
            SourceSpan open = cur_.span;
            shift();
            std::vector<int> coords;
            coords.push_back(expect_int());
            while (cur_.kind == Tok::Comma) {
                shift();
                coords.push_back(expect_int());
            }
            expect(Tok::RBracket, "']'");
            if (static_cast<int>(coords.size()) != decl.type.rank)
                throw DslError(open, "weight length " + std::to_string(coords.size()) + " != rank " +
                                         std::to_string(decl.type.rank));
            w.assign(coords.begin(), coords.end());
        } else if (cur_.kind == Tok::Ident && cur_.text == "part") {
            SourceSpan open = cur_.span;
            shift();
            expect(Tok::LParen, "'('");
            std::vector<int> parts;
            parts.push_back(expect_int());
            while (cur_.kind == Tok::Comma) {
                shift();
                parts.push_back(expect_int());
            }
            expect(Tok::RParen, "')'");
            LabelFlavor flavor = LabelFlavor::Gl;
            switch (decl.type.family) {
                case Family::A: flavor = LabelFlavor::Gl; break;
                case Family::B:
                case Family::D: flavor = LabelFlavor::So; break;
                case Family::C: flavor = LabelFlavor::Sp; break;
                default: throw DslError(open, "partition labels apply to classical factors only");
            }
            try {
                w = partition_to_weight(decl.type, Partition(std::move(parts)), flavor);
            } catch (const std::invalid_argument& e) {
                throw DslError(open, e.what());
            }
        } else {
            fail("expected weight: std, triv, [..] or part(..)");
        }
        sub.weights[static_cast<std::size_t>(fi)] = std::move(w);
    }

    Lexer lexer_;
    Token cur_;
    std::vector<SourceSpan> submodule_spans_;
};

}  // namespace dsl_detail

inline RepDiagram parse_diagram(std::string_view text) {
    dsl_detail::Parser p(text);
    RepDiagram d = p.parse();
    d.validate();
    return d;
}

inline std::string classical_group_name(const GroupType& g) {
    switch (g.family) {
        case Family::A: return "SL(" + std::to_string(g.rank + 1) + ")";
        case Family::B: return "SO(" + std::to_string(2 * g.rank + 1) + ")";
        case Family::C: return "Sp(" + std::to_string(2 * g.rank) + ")";
        case Family::D: return "SO(" + std::to_string(2 * g.rank) + ")";
        case Family::G2: return "G2";
        case Family::E6: return "E6";
        case Family::E7: return "E7";
    }
    return "?";
}

// Canonical text: factors then submodules in declaration order, normalized
// whitespace; parse(render(d)) == d.
inline std::string render_diagram(const RepDiagram& d) {
    std::string out = "diagram \"";
    for (char c : d.name) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += "\"\n";
    auto fname = [&](int f) {
        if (!d.factor_names.empty()) return d.factor_names[static_cast<std::size_t>(f)];
        return "G" + std::to_string(f + 1);
    };
    for (int f = 0; f < d.factor_count(); ++f)
        out += "group " + fname(f) + " = " + classical_group_name(d.factors[static_cast<std::size_t>(f)]) + "\n";
    int anon = 0;
    for (const auto& s : d.submodules) {
        out += s.odd ? "odd " : "even ";
        out += s.name.empty() ? (s.odd ? "W" : "U") + std::to_string(++anon) : s.name;
        out += " =";
        bool first = true;
        for (int f = 0; f < d.factor_count(); ++f) {
            if (s.trivial_on(f)) continue;
            out += first ? " " : " * ";
            first = false;
            out += fname(f) + ":";
            const WeightVec& w = s.weights[static_cast<std::size_t>(f)];
            if (w == vector_std_weight(d.factors[static_cast<std::size_t>(f)])) {
                out += "std";
            } else {
                out += "[";
                for (std::size_t i = 0; i < w.size(); ++i) {
                    if (i) out += ",";
                    out += std::to_string(w[i]);
                }
                out += "]";
            }
        }
        if (s.dual) out += "^*";
        out += "\n";
    }
    return out;
}

}  // namespace supermf
