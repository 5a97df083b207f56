#include "walkgen/parser.hpp"

#include <cctype>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>

namespace walkgen {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                         std::to_string(column) + ": " + message),
      line(line),
      column(column) {}

VariableDomain VariableDomain::make_int32(std::string name) {
    VariableDomain d;
    d.name = std::move(name);
    d.kind = ValueKind::int32;
    d.min_scaled = INT64_C(-2147483648);
    d.max_scaled = INT64_C(2147483647);
    d.decimals = 0;
    return d;
}

VariableDomain VariableDomain::make_real(std::string name, std::int64_t min_scaled,
                                         std::int64_t max_scaled, int decimals) {
    VariableDomain d;
    d.name = std::move(name);
    d.kind = ValueKind::fixed_real;
    d.min_scaled = min_scaled;
    d.max_scaled = max_scaled;
    d.decimals = decimals;
    return d;
}

const char* rel_op_text(RelOp op) {
    switch (op) {
        case RelOp::eq: return "==";
        case RelOp::ne: return "!=";
        case RelOp::lt: return "<";
        case RelOp::le: return "<=";
        case RelOp::gt: return ">";
        case RelOp::ge: return ">=";
    }
    return "?";
}

RelOp negate_rel(RelOp op) {
    switch (op) {
        case RelOp::eq: return RelOp::ne;
        case RelOp::ne: return RelOp::eq;
        case RelOp::lt: return RelOp::ge;
        case RelOp::le: return RelOp::gt;
        case RelOp::gt: return RelOp::le;
        case RelOp::ge: return RelOp::lt;
    }
    return op;
}

namespace {

std::int64_t pow10_i64(int n) {
    std::int64_t v = 1;
    for (int i = 0; i < n; ++i) v *= 10;
    return v;
}

enum class Tok {
    end, ident, number, kw_var, kw_if, kw_else, kw_while, kw_target,
    kw_int32, kw_real, kw_true, kw_false,
    lparen, rparen, lbrace, rbrace, comma, semi, colon,
    assign, plus, minus, star, slash, percent,
    eq, ne, lt, le, gt, ge, and_and, or_or, bang,
};

struct Token {
    Tok kind = Tok::end;
    std::string text;       // ident
    std::string digits;     // number: integer digits without the point
    int frac_digits = 0;    // number: digits after the point
    bool has_point = false;
    int line = 0, column = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    void advance() {
        skip_ws();
        cur_ = Token{};
        cur_.line = line_;
        cur_.column = col_;
        if (pos_ >= src_.size()) {
            cur_.kind = Tok::end;
            return;
        }
        char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                id += src_[pos_];
                bump();
            }
            cur_.text = id;
            if (id == "var") cur_.kind = Tok::kw_var;
            else if (id == "if") cur_.kind = Tok::kw_if;
            else if (id == "else") cur_.kind = Tok::kw_else;
            else if (id == "while") cur_.kind = Tok::kw_while;
            else if (id == "target") cur_.kind = Tok::kw_target;
            else if (id == "int32") cur_.kind = Tok::kw_int32;
            else if (id == "real") cur_.kind = Tok::kw_real;
            else if (id == "true") cur_.kind = Tok::kw_true;
            else if (id == "false") cur_.kind = Tok::kw_false;
            else cur_.kind = Tok::ident;
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            lex_number();
            return;
        }
        bump();
        switch (c) {
            case '(': cur_.kind = Tok::lparen; return;
            case ')': cur_.kind = Tok::rparen; return;
            case '{': cur_.kind = Tok::lbrace; return;
            case '}': cur_.kind = Tok::rbrace; return;
            case ',': cur_.kind = Tok::comma; return;
            case ';': cur_.kind = Tok::semi; return;
            case ':': cur_.kind = Tok::colon; return;
            case '+': cur_.kind = Tok::plus; return;
            case '-': cur_.kind = Tok::minus; return;
            case '*': cur_.kind = Tok::star; return;
            case '/': cur_.kind = Tok::slash; return;
            case '%': cur_.kind = Tok::percent; return;
            case '=':
                if (match('=')) cur_.kind = Tok::eq;
                else cur_.kind = Tok::assign;
                return;
            case '!':
                if (match('=')) cur_.kind = Tok::ne;
                else cur_.kind = Tok::bang;
                return;
            case '<':
                if (match('=')) cur_.kind = Tok::le;
                else cur_.kind = Tok::lt;
                return;
            case '>':
                if (match('=')) cur_.kind = Tok::ge;
                else cur_.kind = Tok::gt;
                return;
            case '&':
                if (match('&')) { cur_.kind = Tok::and_and; return; }
                break;
            case '|':
                if (match('|')) { cur_.kind = Tok::or_or; return; }
                break;
            default: break;
        }
        throw ParseError(cur_.line, cur_.column, std::string("unexpected character '") + c + "'");
    }

    void lex_number() {
        cur_.kind = Tok::number;
        std::string digits;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            digits += src_[pos_];
            bump();
        }
        if (pos_ < src_.size() && src_[pos_] == '.') {
            bump();
            cur_.has_point = true;
            if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                throw ParseError(line_, col_, "digits expected after decimal point");
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                digits += src_[pos_];
                ++cur_.frac_digits;
                bump();
            }
        }
        cur_.digits = digits;
    }

    void skip_ws() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') bump();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                bump();
            } else {
                break;
            }
        }
    }

    bool match(char c) {
        if (pos_ < src_.size() && src_[pos_] == c) {
            bump();
            return true;
        }
        return false;
    }

    void bump() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token cur_;
};

// Untyped parse tree; lowering assigns int/real types and scales constants.
struct UExpr {
    enum class Kind { number, ident, neg, logic_not, binary, bool_const };
    Kind kind = Kind::number;
    std::string digits;
    int frac_digits = 0;
    bool has_point = false;
    std::string name;
    bool bool_value = false;
    Tok op = Tok::end;
    std::unique_ptr<UExpr> lhs, rhs;
    SourcePos pos;
};

using UPtr = std::unique_ptr<UExpr>;

enum class ExprType { any, integer, real };

class Parser {
public:
    explicit Parser(const std::string& src) : lex_(src) {}

    ProgramModel parse() {
        ProgramModel m;
        while (lex_.peek().kind == Tok::kw_var) parse_var_decl(m);
        if (m.variables.empty()) {
            const Token& t = lex_.peek();
            throw ParseError(t.line, t.column, "no input variables");
        }
        for (const auto& v : m.variables)
            if (v.kind == ValueKind::fixed_real && v.decimals > model_scale_)
                model_scale_ = v.decimals;
        m.real_scale_decimals = model_scale_;
        for (std::size_t i = 0; i < m.variables.size(); ++i) {
            Symbol s;
            s.name = m.variables[i].name;
            s.is_real = m.variables[i].kind == ValueKind::fixed_real;
            s.is_input = true;
            s.input_index = static_cast<int>(i);
            symbol_index_[s.name] = static_cast<int>(symbols_.size());
            symbols_.push_back(s);
        }

        auto body = std::make_unique<Stmt>();
        body->kind = Stmt::Kind::block;
        if (lex_.peek().kind == Tok::end) {
            const Token& t = lex_.peek();
            throw ParseError(t.line, t.column, "program body expected");
        }
        while (lex_.peek().kind != Tok::end) body->stmts.push_back(parse_stmt());
        m.body = std::move(body);
        m.symbols = std::move(symbols_);
        m.decisions = std::move(decisions_);
        return m;
    }

private:
    void parse_var_decl(ProgramModel& m) {
        expect(Tok::kw_var, "'var'");
        Token name = expect(Tok::ident, "variable name");
        for (const auto& v : m.variables)
            if (v.name == name.text)
                throw ParseError(name.line, name.column, "duplicate variable '" + name.text + "'");
        expect(Tok::colon, "':'");
        const Token& t = lex_.peek();
        if (t.kind == Tok::kw_int32) {
            lex_.take();
            m.variables.push_back(VariableDomain::make_int32(name.text));
        } else if (t.kind == Tok::kw_real) {
            lex_.take();
            expect(Tok::lparen, "'('");
            auto [min_digits, min_neg, min_frac] = parse_signed_number();
            expect(Tok::comma, "','");
            auto [max_digits, max_neg, max_frac] = parse_signed_number();
            expect(Tok::comma, "','");
            Token dec = expect(Tok::number, "decimal count");
            if (dec.has_point) throw ParseError(dec.line, dec.column, "decimal count must be an integer");
            expect(Tok::rparen, "')'");
            int decimals = static_cast<int>(std::strtol(dec.digits.c_str(), nullptr, 10));
            if (decimals < 0 || decimals > 9)
                throw ParseError(dec.line, dec.column, "decimals must be between 0 and 9");
            std::int64_t lo = scale_literal(min_digits, min_frac, decimals, name);
            if (min_neg) lo = -lo;
            std::int64_t hi = scale_literal(max_digits, max_frac, decimals, name);
            if (max_neg) hi = -hi;
            if (lo >= hi)
                throw ParseError(name.line, name.column, "real domain requires min < max");
            m.variables.push_back(VariableDomain::make_real(name.text, lo, hi, decimals));
        } else {
            throw ParseError(t.line, t.column, "type 'int32' or 'real(...)' expected");
        }
        expect(Tok::semi, "';'");
    }

    std::tuple<std::string, bool, int> parse_signed_number() {
        bool neg = false;
        if (lex_.peek().kind == Tok::minus) {
            lex_.take();
            neg = true;
        }
        Token n = expect(Tok::number, "number");
        return {n.digits, neg, n.frac_digits};
    }

    std::int64_t scale_literal(const std::string& digits, int frac, int decimals,
                               const Token& where) {
        if (frac > decimals)
            throw ParseError(where.line, where.column,
                             "literal has more decimal digits than the declared precision");
        errno = 0;
        long long v = std::strtoll(digits.c_str(), nullptr, 10);
        std::int64_t scale = pow10_i64(decimals - frac);
        if (errno != 0 || v > INT64_MAX / scale)
            throw ParseError(where.line, where.column, "numeric literal out of range");
        return v * scale;
    }

    std::unique_ptr<Stmt> parse_stmt() {
        const Token& t = lex_.peek();
        switch (t.kind) {
            case Tok::kw_if: return parse_if();
            case Tok::kw_while: return parse_while();
            case Tok::kw_target: return parse_target();
            case Tok::ident: return parse_assign();
            case Tok::lbrace: return parse_block();
            default:
                throw ParseError(t.line, t.column, "statement expected");
        }
    }

    std::unique_ptr<Stmt> parse_block() {
        auto s = std::make_unique<Stmt>();
        s->kind = Stmt::Kind::block;
        s->pos = {lex_.peek().line, lex_.peek().column};
        if (lex_.peek().kind == Tok::lbrace) {
            lex_.take();
            while (lex_.peek().kind != Tok::rbrace) {
                if (lex_.peek().kind == Tok::end)
                    throw ParseError(lex_.peek().line, lex_.peek().column, "'}' expected");
                s->stmts.push_back(parse_stmt());
            }
            lex_.take();
        } else {
            s->stmts.push_back(parse_stmt());
        }
        return s;
    }

    std::unique_ptr<Stmt> parse_if() {
        Token kw = lex_.take();
        expect(Tok::lparen, "'('");
        UPtr cond = parse_expr();
        expect(Tok::rparen, "')'");
        auto s = std::make_unique<Stmt>();
        s->kind = Stmt::Kind::if_stmt;
        s->pos = {kw.line, kw.column};
        s->decision = lower_decision(*cond, s->pos);
        s->then_branch = parse_block();
        if (lex_.peek().kind == Tok::kw_else) {
            lex_.take();
            s->else_branch = parse_block();
        }
        return s;
    }

    std::unique_ptr<Stmt> parse_while() {
        Token kw = lex_.take();
        expect(Tok::lparen, "'('");
        UPtr cond = parse_expr();
        expect(Tok::rparen, "')'");
        auto s = std::make_unique<Stmt>();
        s->kind = Stmt::Kind::while_stmt;
        s->pos = {kw.line, kw.column};
        s->decision = lower_decision(*cond, s->pos);
        s->loop_body = parse_block();
        return s;
    }

    std::unique_ptr<Stmt> parse_target() {
        Token kw = lex_.take();
        auto s = std::make_unique<Stmt>();
        s->kind = Stmt::Kind::target;
        s->pos = {kw.line, kw.column};
        const Token& t = lex_.peek();
        if (t.kind == Tok::ident || t.kind == Tok::number) {
            Token lbl = lex_.take();
            s->label = lbl.kind == Tok::ident ? lbl.text : lbl.digits;
        } else {
            throw ParseError(t.line, t.column, "target label expected");
        }
        expect(Tok::semi, "';'");
        return s;
    }

    std::unique_ptr<Stmt> parse_assign() {
        Token name = lex_.take();
        expect(Tok::assign, "'='");
        UPtr rhs = parse_expr();
        expect(Tok::semi, "';'");

        auto s = std::make_unique<Stmt>();
        s->kind = Stmt::Kind::assign;
        s->pos = {name.line, name.column};

        ExprType rhs_type = type_of(*rhs);
        auto it = symbol_index_.find(name.text);
        if (it == symbol_index_.end()) {
            // First assignment introduces a local; literal-only initialisers
            // make an integer local.
            Symbol sym;
            sym.name = name.text;
            sym.is_real = rhs_type == ExprType::real;
            symbol_index_[name.text] = static_cast<int>(symbols_.size());
            symbols_.push_back(sym);
            it = symbol_index_.find(name.text);
        }
        const Symbol& sym = symbols_[static_cast<std::size_t>(it->second)];
        ExprType target = sym.is_real ? ExprType::real : ExprType::integer;
        if (rhs_type != ExprType::any && rhs_type != target)
            throw ParseError(name.line, name.column,
                             "type mismatch assigning to '" + name.text + "'");
        s->symbol = it->second;
        s->expr = lower_arith(*rhs, target == ExprType::real);
        return s;
    }

    // --- expression parsing (unified grammar, types resolved in lowering) ---

    UPtr parse_expr() { return parse_or(); }

    UPtr parse_or() {
        UPtr e = parse_and();
        while (lex_.peek().kind == Tok::or_or) {
            Token op = lex_.take();
            e = make_binary(op, std::move(e), parse_and());
        }
        return e;
    }

    UPtr parse_and() {
        UPtr e = parse_rel();
        while (lex_.peek().kind == Tok::and_and) {
            Token op = lex_.take();
            e = make_binary(op, std::move(e), parse_rel());
        }
        return e;
    }

    UPtr parse_rel() {
        UPtr e = parse_add();
        Tok k = lex_.peek().kind;
        if (k == Tok::eq || k == Tok::ne || k == Tok::lt || k == Tok::le ||
            k == Tok::gt || k == Tok::ge) {
            Token op = lex_.take();
            e = make_binary(op, std::move(e), parse_add());
        }
        return e;
    }

    UPtr parse_add() {
        UPtr e = parse_mul();
        while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
            Token op = lex_.take();
            e = make_binary(op, std::move(e), parse_mul());
        }
        return e;
    }

    UPtr parse_mul() {
        UPtr e = parse_unary();
        while (lex_.peek().kind == Tok::star || lex_.peek().kind == Tok::slash ||
               lex_.peek().kind == Tok::percent) {
            Token op = lex_.take();
            e = make_binary(op, std::move(e), parse_unary());
        }
        return e;
    }

    UPtr parse_unary() {
        const Token& t = lex_.peek();
        if (t.kind == Tok::minus) {
            Token op = lex_.take();
            auto e = std::make_unique<UExpr>();
            e->kind = UExpr::Kind::neg;
            e->pos = {op.line, op.column};
            e->lhs = parse_unary();
            return e;
        }
        if (t.kind == Tok::bang) {
            Token op = lex_.take();
            auto e = std::make_unique<UExpr>();
            e->kind = UExpr::Kind::logic_not;
            e->pos = {op.line, op.column};
            e->lhs = parse_unary();
            return e;
        }
        return parse_primary();
    }

    UPtr parse_primary() {
        Token t = lex_.take();
        auto e = std::make_unique<UExpr>();
        e->pos = {t.line, t.column};
        switch (t.kind) {
            case Tok::number:
                e->kind = UExpr::Kind::number;
                e->digits = t.digits;
                e->frac_digits = t.frac_digits;
                e->has_point = t.has_point;
                return e;
            case Tok::ident:
                e->kind = UExpr::Kind::ident;
                e->name = t.text;
                return e;
            case Tok::kw_true:
            case Tok::kw_false:
                e->kind = UExpr::Kind::bool_const;
                e->bool_value = t.kind == Tok::kw_true;
                return e;
            case Tok::lparen: {
                UPtr inner = parse_expr();
                expect(Tok::rparen, "')'");
                return inner;
            }
            default:
                throw ParseError(t.line, t.column, "expression expected");
        }
    }

    UPtr make_binary(const Token& op, UPtr lhs, UPtr rhs) {
        auto e = std::make_unique<UExpr>();
        e->kind = UExpr::Kind::binary;
        e->op = op.kind;
        e->pos = {op.line, op.column};
        e->lhs = std::move(lhs);
        e->rhs = std::move(rhs);
        return e;
    }

    // --- lowering ---

    static bool is_rel(Tok k) {
        return k == Tok::eq || k == Tok::ne || k == Tok::lt || k == Tok::le ||
               k == Tok::gt || k == Tok::ge;
    }
    static bool is_logic(Tok k) { return k == Tok::and_and || k == Tok::or_or; }

    ExprType type_of(const UExpr& e) {
        switch (e.kind) {
            case UExpr::Kind::number:
                return e.has_point ? ExprType::real : ExprType::any;
            case UExpr::Kind::ident: {
                auto it = symbol_index_.find(e.name);
                if (it == symbol_index_.end())
                    throw ParseError(e.pos.line, e.pos.column,
                                     "undeclared variable '" + e.name + "'");
                return symbols_[static_cast<std::size_t>(it->second)].is_real
                           ? ExprType::real
                           : ExprType::integer;
            }
            case UExpr::Kind::neg:
                return type_of(*e.lhs);
            case UExpr::Kind::binary: {
                if (is_rel(e.op) || is_logic(e.op))
                    throw ParseError(e.pos.line, e.pos.column,
                                     "boolean expression where arithmetic value expected");
                ExprType l = type_of(*e.lhs);
                ExprType r = type_of(*e.rhs);
                ExprType joined = join(l, r, e.pos);
                if (e.op == Tok::percent && joined == ExprType::real)
                    throw ParseError(e.pos.line, e.pos.column, "'%' requires integer operands");
                return joined;
            }
            case UExpr::Kind::logic_not:
            case UExpr::Kind::bool_const:
                throw ParseError(e.pos.line, e.pos.column,
                                 "boolean expression where arithmetic value expected");
        }
        return ExprType::any;
    }

    static ExprType join_raw(ExprType a, ExprType b) {
        if (a == ExprType::any) return b;
        if (b == ExprType::any) return a;
        if (a == b) return a;
        return ExprType::any;  // caller rejects
    }

    ExprType join(ExprType a, ExprType b, SourcePos pos) {
        if (a != ExprType::any && b != ExprType::any && a != b)
            throw ParseError(pos.line, pos.column, "type mismatch: int and real mixed");
        return join_raw(a, b);
    }

    std::unique_ptr<ArithExpr> lower_arith(const UExpr& e, bool as_real) {
        auto out = std::make_unique<ArithExpr>();
        switch (e.kind) {
            case UExpr::Kind::number: {
                if (!as_real && e.has_point)
                    throw ParseError(e.pos.line, e.pos.column,
                                     "real literal in integer expression");
                int scale = as_real ? model_scale_ : 0;
                if (e.frac_digits > scale)
                    throw ParseError(e.pos.line, e.pos.column,
                                     "literal has more decimal digits than any declared variable");
                errno = 0;
                long long raw = std::strtoll(e.digits.c_str(), nullptr, 10);
                std::int64_t factor = pow10_i64(scale - e.frac_digits);
                if (errno != 0 || raw > INT64_MAX / factor)
                    throw ParseError(e.pos.line, e.pos.column, "numeric literal out of range");
                out->kind = ArithExpr::Kind::constant;
                out->value = raw * factor;
                return out;
            }
            case UExpr::Kind::ident: {
                int idx = symbol_index_.at(e.name);
                out->kind = ArithExpr::Kind::variable;
                out->symbol = idx;
                return out;
            }
            case UExpr::Kind::neg:
                out->kind = ArithExpr::Kind::negate;
                out->lhs = lower_arith(*e.lhs, as_real);
                return out;
            case UExpr::Kind::binary: {
                out->kind = ArithExpr::Kind::binary;
                out->real_scaled = as_real;
                switch (e.op) {
                    case Tok::plus: out->op = ArithOp::add; break;
                    case Tok::minus: out->op = ArithOp::sub; break;
                    case Tok::star: out->op = ArithOp::mul; break;
                    case Tok::slash: out->op = ArithOp::div; break;
                    case Tok::percent: out->op = ArithOp::mod; break;
                    default:
                        throw ParseError(e.pos.line, e.pos.column,
                                         "boolean operator in arithmetic expression");
                }
                out->lhs = lower_arith(*e.lhs, as_real);
                out->rhs = lower_arith(*e.rhs, as_real);
                return out;
            }
            default:
                throw ParseError(e.pos.line, e.pos.column,
                                 "boolean expression where arithmetic value expected");
        }
    }

    std::string render(const UExpr& e) {
        switch (e.kind) {
            case UExpr::Kind::number: {
                if (!e.has_point) return e.digits;
                std::string whole = e.digits.substr(0, e.digits.size() - e.frac_digits);
                if (whole.empty()) whole = "0";
                return whole + "." + e.digits.substr(e.digits.size() - e.frac_digits);
            }
            case UExpr::Kind::ident: return e.name;
            case UExpr::Kind::neg: return "-" + render(*e.lhs);
            case UExpr::Kind::bool_const: return e.bool_value ? "true" : "false";
            case UExpr::Kind::logic_not: return "!" + render(*e.lhs);
            case UExpr::Kind::binary: {
                const char* op = "?";
                switch (e.op) {
                    case Tok::plus: op = "+"; break;
                    case Tok::minus: op = "-"; break;
                    case Tok::star: op = "*"; break;
                    case Tok::slash: op = "/"; break;
                    case Tok::percent: op = "%"; break;
                    case Tok::eq: op = "=="; break;
                    case Tok::ne: op = "!="; break;
                    case Tok::lt: op = "<"; break;
                    case Tok::le: op = "<="; break;
                    case Tok::gt: op = ">"; break;
                    case Tok::ge: op = ">="; break;
                    case Tok::and_and: op = "&&"; break;
                    case Tok::or_or: op = "||"; break;
                    default: break;
                }
                std::string l = render(*e.lhs);
                std::string r = render(*e.rhs);
                if (e.lhs->kind == UExpr::Kind::binary) l = "(" + l + ")";
                if (e.rhs->kind == UExpr::Kind::binary) r = "(" + r + ")";
                return l + " " + std::string(op) + " " + r;
            }
        }
        return "?";
    }

    std::unique_ptr<DecisionNode> lower_decision(const UExpr& cond, SourcePos pos) {
        auto node = std::make_unique<DecisionNode>();
        node->id = static_cast<int>(decisions_.size());
        node->pos = pos;
        node->condition = lower_cond(cond, *node);
        decisions_.push_back(node.get());
        return node;
    }

    std::unique_ptr<CondExpr> lower_cond(const UExpr& e, DecisionNode& node) {
        auto out = std::make_unique<CondExpr>();
        switch (e.kind) {
            case UExpr::Kind::binary: {
                if (is_logic(e.op)) {
                    out->kind = e.op == Tok::and_and ? CondExpr::Kind::logic_and
                                                     : CondExpr::Kind::logic_or;
                    out->kids.push_back(lower_cond(*e.lhs, node));
                    out->kids.push_back(lower_cond(*e.rhs, node));
                    return out;
                }
                if (is_rel(e.op)) {
                    ExprType l = type_of(*e.lhs);
                    ExprType r = type_of(*e.rhs);
                    ExprType joined = join(l, r, e.pos);
                    bool as_real = joined == ExprType::real;
                    out->kind = CondExpr::Kind::relation;
                    switch (e.op) {
                        case Tok::eq: out->rel = RelOp::eq; break;
                        case Tok::ne: out->rel = RelOp::ne; break;
                        case Tok::lt: out->rel = RelOp::lt; break;
                        case Tok::le: out->rel = RelOp::le; break;
                        case Tok::gt: out->rel = RelOp::gt; break;
                        case Tok::ge: out->rel = RelOp::ge; break;
                        default: break;
                    }
                    out->lhs = lower_arith(*e.lhs, as_real);
                    out->rhs = lower_arith(*e.rhs, as_real);
                    out->atom_index = static_cast<int>(node.atoms.size());
                    AtomInfo info;
                    info.is_bool = false;
                    info.op = out->rel;
                    info.scale_decimals = as_real ? model_scale_ : 0;
                    info.lhs_text = render(*e.lhs);
                    info.rhs_text = render(*e.rhs);
                    node.atoms.push_back(std::move(info));
                    return out;
                }
                throw ParseError(e.pos.line, e.pos.column,
                                 "condition must be a boolean expression");
            }
            case UExpr::Kind::logic_not:
                out->kind = CondExpr::Kind::logic_not;
                out->kids.push_back(lower_cond(*e.lhs, node));
                return out;
            case UExpr::Kind::bool_const: {
                out->kind = CondExpr::Kind::bool_const;
                out->bool_value = e.bool_value;
                out->atom_index = static_cast<int>(node.atoms.size());
                AtomInfo info;
                info.is_bool = true;
                info.bool_value = e.bool_value;
                node.atoms.push_back(std::move(info));
                return out;
            }
            default:
                throw ParseError(e.pos.line, e.pos.column,
                                 "condition must be a boolean expression");
        }
    }

    Token expect(Tok kind, const char* what) {
        const Token& t = lex_.peek();
        if (t.kind != kind)
            throw ParseError(t.line, t.column, std::string(what) + " expected");
        return lex_.take();
    }

    Lexer lex_;
    std::vector<Symbol> symbols_;
    std::map<std::string, int> symbol_index_;
    std::vector<const DecisionNode*> decisions_;
    int model_scale_ = 0;
};

}  // namespace

ProgramModel parse_program(const std::string& source) {
    Parser p(source);
    return p.parse();
}

}  // namespace walkgen
