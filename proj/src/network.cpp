#include "crn/network.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace crn {

void Complex::add(int species, int coeff) {
    if (coeff <= 0) throw Error("complex coefficients must be positive");
    auto it = std::lower_bound(terms_.begin(), terms_.end(), species,
                               [](const auto& t, int s) { return t.first < s; });
    if (it != terms_.end() && it->first == species)
        it->second += coeff;
    else
        terms_.insert(it, {species, coeff});
}

int Complex::coeff(int species) const {
    for (const auto& [s, c] : terms_)
        if (s == species) return c;
    return 0;
}

bool Network::has_outflow(int species) const {
    for (const auto& r : reactions_)
        if (r.product.is_zero() && r.reactant.is_single(species)) return true;
    return false;
}

std::vector<int> Network::missing_outflows() const {
    std::vector<int> out;
    for (int i = 0; i < species_count(); ++i)
        if (!has_outflow(i)) out.push_back(i);
    return out;
}

ParseError::ParseError(const std::string& msg, int line, int column)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line(line),
      column(column) {}

namespace {

// ---------------------------------------------------------------------------
// Parser for the line-oriented reaction grammar.
//
//   line      ::= comment | reaction | blank
//   comment   ::= '#' any-text
//   reaction  ::= complex arrow complex [';' label]
//   arrow     ::= '->' | '<->'
//   complex   ::= '0' | term ('+' term)*
//   term      ::= [coeff ('*' | whitespace)] ident
//
// Whitespace is insignificant except that a coefficient and an identifier
// must be separated by '*' or whitespace.
// ---------------------------------------------------------------------------

struct Token {
    enum Kind { Ident, Number, Plus, Arrow, RevArrow, Semi, Star, End } kind;
    std::string text;
    long long value = 0;
    int column;
    bool space_before = false;
};

class LineLexer {
  public:
    LineLexer(std::string_view line, int line_no) : line_(line), line_no_(line_no) {}

    Token next() {
        bool space = false;
        while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) {
            ++pos_;
            space = true;
        }
        const int col = static_cast<int>(pos_) + 1;
        if (pos_ >= line_.size()) return {Token::End, "", 0, col, space};
        const char c = line_[pos_];
        if (c == '+') return make(Token::Plus, 1, col, space);
        if (c == ';') return make(Token::Semi, 1, col, space);
        if (c == '*') return make(Token::Star, 1, col, space);
        if (c == '-') {
            if (pos_ + 1 < line_.size() && line_[pos_ + 1] == '>') return make(Token::Arrow, 2, col, space);
            throw ParseError("expected '->'", line_no_, col);
        }
        if (c == '<') {
            if (pos_ + 2 < line_.size() && line_[pos_ + 1] == '-' && line_[pos_ + 2] == '>')
                return make(Token::RevArrow, 3, col, space);
            throw ParseError("expected '<->'", line_no_, col);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t end = pos_;
            while (end < line_.size() && std::isdigit(static_cast<unsigned char>(line_[end]))) ++end;
            Token t{Token::Number, std::string(line_.substr(pos_, end - pos_)), 0, col, space};
            try {
                t.value = std::stoll(t.text);
            } catch (const std::out_of_range&) {
                throw ParseError("coefficient out of range", line_no_, col);
            }
            pos_ = end;
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t end = pos_;
            while (end < line_.size() &&
                   (std::isalnum(static_cast<unsigned char>(line_[end])) || line_[end] == '_'))
                ++end;
            Token t{Token::Ident, std::string(line_.substr(pos_, end - pos_)), 0, col, space};
            pos_ = end;
            return t;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line_no_, col);
    }

  private:
    Token make(Token::Kind k, size_t len, int col, bool space) {
        Token t{k, std::string(line_.substr(pos_, len)), 0, col, space};
        pos_ += len;
        return t;
    }

    std::string_view line_;
    int line_no_;
    size_t pos_ = 0;
};

struct RawComplex {
    // (name, coeff) in appearance order; empty means the zero complex.
    std::vector<std::pair<std::string, int>> terms;
};

struct RawReaction {
    RawComplex lhs, rhs;
    bool reversible = false;
    std::string label;  // empty = auto
    int line, column;
};

class LineParser {
  public:
    LineParser(std::string_view line, int line_no) : lex_(line, line_no), line_no_(line_no) {
        cur_ = lex_.next();
    }

    RawReaction parse_reaction() {
        RawReaction r;
        r.line = line_no_;
        r.column = cur_.column;
        r.lhs = parse_complex();
        if (cur_.kind == Token::Arrow)
            r.reversible = false;
        else if (cur_.kind == Token::RevArrow)
            r.reversible = true;
        else
            throw ParseError("expected '->' or '<->'", line_no_, cur_.column);
        advance();
        r.rhs = parse_complex();
        if (cur_.kind == Token::Semi) {
            advance();
            if (cur_.kind != Token::Ident) throw ParseError("expected rate label after ';'", line_no_, cur_.column);
            r.label = cur_.text;
            advance();
        }
        if (cur_.kind != Token::End) throw ParseError("trailing input after reaction", line_no_, cur_.column);
        return r;
    }

  private:
    void advance() { cur_ = lex_.next(); }

    RawComplex parse_complex() {
        RawComplex c;
        if (cur_.kind == Token::Number && cur_.value == 0) {
            const int col = cur_.column;
            advance();
            if (cur_.kind == Token::Plus || cur_.kind == Token::Ident || cur_.kind == Token::Star ||
                cur_.kind == Token::Number)
                throw ParseError("the zero complex cannot be combined with terms", line_no_, col);
            return c;
        }
        c.terms.push_back(parse_term());
        while (cur_.kind == Token::Plus) {
            advance();
            c.terms.push_back(parse_term());
        }
        return c;
    }

    std::pair<std::string, int> parse_term() {
        long long coeff = 1;
        if (cur_.kind == Token::Number) {
            coeff = cur_.value;
            const int col = cur_.column;
            if (coeff <= 0) throw ParseError("stoichiometric coefficient must be positive", line_no_, col);
            advance();
            if (cur_.kind == Token::Star)
                advance();
            else if (!cur_.space_before)
                throw ParseError("coefficient and species must be separated by '*' or whitespace", line_no_,
                                 cur_.column);
        }
        if (cur_.kind != Token::Ident) throw ParseError("expected species name", line_no_, cur_.column);
        std::pair<std::string, int> term{cur_.text, static_cast<int>(coeff)};
        advance();
        return term;
    }

    LineLexer lex_;
    int line_no_;
    Token cur_;
};

}  // namespace

Network parse_network(std::string_view text) {
    std::vector<RawReaction> raw;
    {
        size_t start = 0;
        int line_no = 1;
        while (start <= text.size()) {
            size_t end = text.find('\n', start);
            if (end == std::string_view::npos) end = text.size();
            std::string_view line = text.substr(start, end - start);
            size_t first = line.find_first_not_of(" \t\r");
            if (first != std::string_view::npos && line[first] != '#') {
                LineParser p(line, line_no);
                raw.push_back(p.parse_reaction());
            }
            start = end + 1;
            ++line_no;
        }
    }
    if (raw.empty()) throw ParseError("no reactions in input", 1, 1);

    // Species in first-appearance order (reactant before product, in-line order).
    std::vector<Species> species;
    std::map<std::string, int> index_of;
    auto intern = [&](const std::string& name) {
        auto [it, inserted] = index_of.try_emplace(name, static_cast<int>(species.size()));
        if (inserted) species.push_back({it->second, name});
        return it->second;
    };

    struct Pending {
        Complex reactant, product;
        std::string label;  // empty = auto
        int line, column;
    };
    std::vector<Pending> pending;
    for (const auto& r : raw) {
        auto build = [&](const RawComplex& rc) {
            Complex c;
            for (const auto& [name, coeff] : rc.terms) c.add(intern(name), coeff);
            return c;
        };
        Complex lhs = build(r.lhs);
        Complex rhs = build(r.rhs);
        if (lhs == rhs) throw ParseError("self-loop reaction: reactant equals product", r.line, r.column);
        pending.push_back({lhs, rhs, r.reversible && !r.label.empty() ? r.label + "_f" : r.label, r.line, r.column});
        if (r.reversible)
            pending.push_back({rhs, lhs, r.label.empty() ? "" : r.label + "_r", r.line, r.column});
    }

    // Assign auto labels k1..km by final reaction position, then check
    // uniqueness of the full label set.
    std::vector<Reaction> reactions;
    std::set<std::pair<Complex, Complex>> seen_pairs;
    std::map<std::string, int> label_line;
    for (size_t j = 0; j < pending.size(); ++j) {
        auto& p = pending[j];
        if (!seen_pairs.insert({p.reactant, p.product}).second)
            throw ParseError("duplicate reaction (same reactant and product)", p.line, p.column);
        std::string label = p.label.empty() ? "k" + std::to_string(j + 1) : p.label;
        auto [it, inserted] = label_line.try_emplace(label, p.line);
        if (!inserted)
            throw ParseError("duplicate rate label '" + label + "' (first used on line " +
                                 std::to_string(it->second) + ")",
                             p.line, p.column);
        reactions.push_back({std::move(p.reactant), std::move(p.product), std::move(label),
                             ReactionOrigin::Declared});
    }
    return Network(std::move(species), std::move(reactions));
}

Network parse_network_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open network file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_network(buf.str());
}

QMat stoichiometric_matrix(const Network& net) {
    QMat m(net.species_count(), net.reaction_count());
    for (int j = 0; j < net.reaction_count(); ++j) {
        const Reaction& r = net.reaction_at(j);
        for (const auto& [i, c] : r.product.terms()) m(i, j) += c;
        for (const auto& [i, c] : r.reactant.terms()) m(i, j) -= c;
    }
    return m;
}

QMat reactant_matrix(const Network& net) {
    QMat m(net.species_count(), net.reaction_count());
    for (int j = 0; j < net.reaction_count(); ++j)
        for (const auto& [i, c] : net.reaction_at(j).reactant.terms()) m(i, j) = c;
    return m;
}

QMat reactant_matrix_for(const Network& net, std::span<const int> reactions) {
    QMat m(net.species_count(), static_cast<int>(reactions.size()));
    for (size_t j = 0; j < reactions.size(); ++j)
        for (const auto& [i, c] : net.reaction_at(reactions[j]).reactant.terms())
            m(i, static_cast<int>(j)) = c;
    return m;
}

QMat reaction_matrix_for(const Network& net, std::span<const int> reactions) {
    QMat m(net.species_count(), static_cast<int>(reactions.size()));
    for (size_t j = 0; j < reactions.size(); ++j) {
        const Reaction& r = net.reaction_at(reactions[j]);
        for (const auto& [i, c] : r.reactant.terms()) m(i, static_cast<int>(j)) += c;
        for (const auto& [i, c] : r.product.terms()) m(i, static_cast<int>(j)) -= c;
    }
    return m;
}

Network fully_open_closure(const Network& net) {
    std::vector<Reaction> reactions = net.reactions();
    for (int i : net.missing_outflows()) {
        Complex reactant;
        reactant.add(i, 1);
        reactions.push_back({std::move(reactant), Complex{}, "out:" + net.species_at(i).name,
                             ReactionOrigin::AddedOutflow});
    }
    return Network(net.species(), std::move(reactions));
}

Network project_network(const Network& net, std::span<const int> removed_species) {
    std::vector<bool> removed(net.species_count(), false);
    for (int i : removed_species) {
        if (i < 0 || i >= net.species_count()) throw Error("project_network: species index out of range");
        removed[i] = true;
    }
    std::vector<Species> species;
    std::vector<int> new_index(net.species_count(), -1);
    for (int i = 0; i < net.species_count(); ++i) {
        if (removed[i]) continue;
        new_index[i] = static_cast<int>(species.size());
        species.push_back({new_index[i], net.species_at(i).name});
    }
    auto restrict_complex = [&](const Complex& c) {
        Complex out;
        for (const auto& [i, coeff] : c.terms())
            if (!removed[i]) out.add(new_index[i], coeff);
        return out;
    };
    std::vector<Reaction> reactions;
    std::set<std::pair<Complex, Complex>> seen;
    for (const Reaction& r : net.reactions()) {
        Complex lhs = restrict_complex(r.reactant);
        Complex rhs = restrict_complex(r.product);
        if (lhs == rhs) continue;  // covers 0 -> 0
        if (!seen.insert({lhs, rhs}).second) continue;
        reactions.push_back({std::move(lhs), std::move(rhs), r.rate_label, r.origin});
    }
    return Network(std::move(species), std::move(reactions));
}

Openness classify_openness(const Network& net) {
    const int n = net.species_count();
    const int s = rank(stoichiometric_matrix(net));
    Openness o{OpennessClass::Closed, s, n - s};
    if (net.missing_outflows().empty())
        o.cls = OpennessClass::FullyOpen;
    else if (s == n)
        o.cls = OpennessClass::Open;
    return o;
}

const char* openness_name(OpennessClass c) {
    switch (c) {
        case OpennessClass::FullyOpen: return "fully open";
        case OpennessClass::Open: return "open";
        case OpennessClass::Closed: return "closed";
    }
    return "?";
}

std::string render_complex(const Network& net, const Complex& c) {
    if (c.is_zero()) return "0";
    std::string out;
    for (const auto& [i, coeff] : c.terms()) {
        if (!out.empty()) out += " + ";
        if (coeff != 1) out += std::to_string(coeff) + " ";
        out += net.species_at(i).name;
    }
    return out;
}

}  // namespace crn
