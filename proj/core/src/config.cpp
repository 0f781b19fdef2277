#include <orbcc/config.hpp>

#include <orbcc/chern.hpp>
#include <orbcc/errors.hpp>

#include <cctype>
#include <vector>

namespace orbcc {

namespace {

struct Token {
    enum class Kind { Ident, Scalar, LBrace, RBrace, LBracket, RBracket, Comma, Equals, End };
    Kind kind = Kind::End;
    std::string text;
    int line = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_space();
        Token tok;
        tok.line = line_;
        if (pos_ >= text_.size()) {
            tok.kind = Token::Kind::End;
            return tok;
        }
        char ch = text_[pos_];
        switch (ch) {
            case '{': ++pos_; tok.kind = Token::Kind::LBrace; return tok;
            case '}': ++pos_; tok.kind = Token::Kind::RBrace; return tok;
            case '[': ++pos_; tok.kind = Token::Kind::LBracket; return tok;
            case ']': ++pos_; tok.kind = Token::Kind::RBracket; return tok;
            case ',': ++pos_; tok.kind = Token::Kind::Comma; return tok;
            case '=': ++pos_; tok.kind = Token::Kind::Equals; return tok;
            default: break;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_')) {
                ++pos_;
            }
            tok.kind = Token::Kind::Ident;
            tok.text = std::string(text_.substr(start, pos_ - start));
            return tok;
        }
        if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+') {
            std::size_t start = pos_;
            ++pos_;
            while (pos_ < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '/')) {
                ++pos_;
            }
            tok.kind = Token::Kind::Scalar;
            tok.text = std::string(text_.substr(start, pos_ - start));
            return tok;
        }
        throw ParseError("line " + std::to_string(line_) +
                         ": unexpected character '" + std::string(1, ch) + "'");
    }

private:
    void skip_space() {
        while (pos_ < text_.size()) {
            char ch = text_[pos_];
            if (ch == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (ch == '\n') {
                ++line_;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(ch))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
};

struct Value {
    std::string scalar;  // empty when this is a list
    bool is_list = false;
    std::vector<Value> items;
    int line = 0;
};

struct Entry {
    std::string key;
    Value value;
    int line = 0;
};

struct Block {
    std::string name;
    std::vector<Entry> entries;
    int line = 0;

    const Entry* find(std::string_view key) const {
        for (const Entry& e : entries) {
            if (e.key == key) return &e;
        }
        return nullptr;
    }
};

[[noreturn]] void fail(int line, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ": " + msg);
}

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) { advance(); }

    std::vector<Block> parse_file() {
        std::vector<Block> blocks;
        while (current_.kind != Token::Kind::End) {
            blocks.push_back(parse_block());
        }
        return blocks;
    }

private:
    void advance() { current_ = lexer_.next(); }

    Block parse_block() {
        if (current_.kind != Token::Kind::Ident) {
            fail(current_.line, "expected a block name");
        }
        Block block;
        block.name = current_.text;
        block.line = current_.line;
        advance();
        if (current_.kind != Token::Kind::LBrace) {
            fail(current_.line, "expected '{' after \"" + block.name + "\"");
        }
        advance();
        while (current_.kind != Token::Kind::RBrace) {
            if (current_.kind == Token::Kind::End) {
                fail(current_.line, "unterminated block \"" + block.name + "\"");
            }
            block.entries.push_back(parse_entry());
        }
        advance();
        return block;
    }

    Entry parse_entry() {
        if (current_.kind != Token::Kind::Ident) {
            fail(current_.line, "expected a field name");
        }
        Entry entry;
        entry.key = current_.text;
        entry.line = current_.line;
        advance();
        if (current_.kind != Token::Kind::Equals) {
            fail(current_.line, "expected '=' after \"" + entry.key + "\"");
        }
        advance();
        entry.value = parse_value();
        return entry;
    }

    Value parse_value() {
        Value value;
        value.line = current_.line;
        if (current_.kind == Token::Kind::LBracket) {
            value.is_list = true;
            advance();
            while (current_.kind != Token::Kind::RBracket) {
                value.items.push_back(parse_value());
                if (current_.kind == Token::Kind::Comma) {
                    advance();
                } else if (current_.kind != Token::Kind::RBracket) {
                    fail(current_.line, "expected ',' or ']' in list");
                }
            }
            advance();
            return value;
        }
        if (current_.kind == Token::Kind::Scalar ||
            current_.kind == Token::Kind::Ident) {
            value.scalar = current_.text;
            advance();
            return value;
        }
        fail(current_.line, "expected a value");
    }

    Lexer lexer_;
    Token current_;
};

long long scalar_int(const Value& v, const std::string& field) {
    if (v.is_list) fail(v.line, "field \"" + field + "\" expects an integer");
    try {
        std::size_t pos = 0;
        long long r = std::stoll(v.scalar, &pos);
        if (pos != v.scalar.size()) throw std::invalid_argument(v.scalar);
        return r;
    } catch (const std::exception&) {
        fail(v.line, "field \"" + field + "\" is not an integer: \"" + v.scalar + "\"");
    }
}

Rational scalar_rational(const Value& v, const std::string& field) {
    if (v.is_list) fail(v.line, "field \"" + field + "\" expects a rational");
    try {
        return parse_rational(v.scalar);
    } catch (const ParseError&) {
        fail(v.line, "field \"" + field + "\" is not a rational: \"" + v.scalar + "\"");
    }
}

Multiplicity scalar_multiplicity(const Value& v, const std::string& field) {
    if (v.is_list) fail(v.line, "field \"" + field + "\" expects a multiplicity");
    try {
        return parse_multiplicity(v.scalar);
    } catch (const ParseError&) {
        fail(v.line, "field \"" + field + "\" is not a multiplicity: \"" + v.scalar + "\"");
    }
}

long long require_int(const Block& block, const std::string& field) {
    const Entry* e = block.find(field);
    if (!e) fail(block.line, "block \"" + block.name + "\" is missing field \"" + field + "\"");
    return scalar_int(e->value, field);
}

IntersectionMatrix matrix_value(const Value& v, int line) {
    if (!v.is_list) fail(line, "field \"matrix\" expects a list of rows");
    std::vector<std::vector<long long>> rows;
    for (const Value& row : v.items) {
        if (!row.is_list) fail(row.line, "matrix rows must be lists");
        std::vector<long long> r;
        for (const Value& cell : row.items) {
            r.push_back(scalar_int(cell, "matrix"));
        }
        rows.push_back(std::move(r));
    }
    return IntersectionMatrix(std::move(rows));
}

}  // namespace

ParsedConfig parse_config(std::string_view text) {
    Parser parser(text);
    std::vector<Block> blocks = parser.parse_file();

    ParsedConfig cfg;
    const Block* surface_block = nullptr;
    std::vector<CurveComponent> components;
    std::optional<IntersectionMatrix> intersections;
    int first_component_line = 0;

    for (const Block& block : blocks) {
        if (block.name == "surface") {
            if (surface_block) fail(block.line, "duplicate \"surface\" block");
            surface_block = &block;
        } else if (block.name == "component") {
            CurveComponent comp;
            comp.label = "C" + std::to_string(components.size() + 1);
            if (const Entry* e = block.find("label")) {
                if (e->value.is_list) fail(e->line, "field \"label\" expects an identifier");
                comp.label = e->value.scalar;
            }
            comp.genus = require_int(block, "genus");
            const Entry* m = block.find("multiplicity");
            if (!m) fail(block.line, "component is missing field \"multiplicity\"");
            comp.multiplicity = scalar_multiplicity(m->value, "multiplicity");
            if (components.empty()) first_component_line = block.line;
            components.push_back(std::move(comp));
        } else if (block.name == "intersections") {
            const Entry* e = block.find("matrix");
            if (!e) fail(block.line, "intersections block is missing field \"matrix\"");
            intersections = matrix_value(e->value, e->line);
        } else if (block.name == "plane_pair") {
            PlanePairConfig pp;
            pp.d1 = require_int(block, "d1");
            pp.d2 = require_int(block, "d2");
            const Entry* m1 = block.find("m1");
            const Entry* m2 = block.find("m2");
            if (!m1 || !m2) fail(block.line, "plane_pair needs fields \"m1\" and \"m2\"");
            pp.m1 = scalar_multiplicity(m1->value, "m1");
            pp.m2 = scalar_multiplicity(m2->value, "m2");
            cfg.plane_pair = pp;
        } else if (block.name == "nodes_cusps") {
            cfg.nodes_cusps = NodesCuspsParams{require_int(block, "d"),
                                               require_int(block, "n"),
                                               require_int(block, "c")};
        } else if (block.name == "nodal_surface") {
            cfg.nodal_surface = NodalSurface{require_int(block, "d"),
                                             require_int(block, "l")};
        } else if (block.name == "nevanlinna") {
            const Entry* e = block.find("multiplicities");
            if (!e || !e->value.is_list) {
                fail(block.line, "nevanlinna needs field \"multiplicities\" as a list");
            }
            NevanlinnaConfig nev;
            for (const Value& item : e->value.items) {
                nev.multiplicities.push_back(
                    scalar_multiplicity(item, "multiplicities"));
            }
            cfg.nevanlinna = std::move(nev);
        } else {
            fail(block.line, "unknown block \"" + block.name + "\"");
        }
    }

    if (!components.empty() && !intersections) {
        fail(first_component_line,
             "components given but the \"intersections\" block (field \"matrix\") is missing");
    }
    if (!surface_block && (!components.empty() || intersections)) {
        fail(first_component_line, "components given without a \"surface\" block");
    }

    if (surface_block) {
        const Block& sb = *surface_block;
        IntersectionMatrix m = intersections.value_or(IntersectionMatrix{});
        bool has_log = sb.find("log_c1_sq") || sb.find("log_c2");
        bool has_ambient = sb.find("ambient_c1_sq") || sb.find("ambient_c2");
        if (has_log == has_ambient) {
            fail(sb.line,
                 "surface block needs either log_c1_sq/log_c2 or "
                 "ambient_c1_sq/ambient_c2");
        }
        if (has_log) {
            const Entry* c1 = sb.find("log_c1_sq");
            const Entry* c2 = sb.find("log_c2");
            if (!c1 || !c2) fail(sb.line, "surface block needs both log_c1_sq and log_c2");
            SmoothOrbifoldSurface s{scalar_rational(c1->value, "log_c1_sq"),
                                    scalar_rational(c2->value, "log_c2"),
                                    components, m};
            validate_surface(s);
            cfg.surface = std::move(s);
        } else {
            const Entry* c1 = sb.find("ambient_c1_sq");
            const Entry* c2 = sb.find("ambient_c2");
            if (!c1 || !c2) {
                fail(sb.line, "surface block needs both ambient_c1_sq and ambient_c2");
            }
            AmbientSurfaceData amb{scalar_rational(c1->value, "ambient_c1_sq"),
                                   scalar_rational(c2->value, "ambient_c2"),
                                   components, m};
            validate_ambient(amb);
            cfg.surface = surface_from_ambient(amb);
            cfg.ambient = std::move(amb);
        }
    }
    return cfg;
}

}  // namespace orbcc
