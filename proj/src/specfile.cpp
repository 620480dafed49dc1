#include "lcsk/specfile.hpp"

#include "lcsk/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace lcsk {

namespace {

bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool valid_ident(const std::string& s) {
    if (s.empty() || !ident_start(s[0])) return false;
    for (char c : s)
        if (!ident_char(c)) return false;
    return true;
}

// Value of a sub-expression: a scalar polynomial in (d, x), or a combination
// of generators / basis elements (one polynomial per slot).
struct Value {
    bool vec = false;
    SPoly s;
    std::vector<SPoly> v;
};

SPoly spoly_pow(const SPoly& base, unsigned e) {
    SPoly r = SPoly::constant(base.table(), Rat(1));
    for (unsigned i = 0; i < e; ++i) r = r * base;
    return r;
}

// Recursive-descent parser over one quoted expression. Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := '-'* factor (['*'] factor)*
//   factor := primary ('^' integer)?
//   primary:= rational | identifier | '(' expr ')'
class ExprParser {
public:
    using Resolver = std::function<std::optional<Value>(const std::string&)>;

    ExprParser(std::string_view text, int line, int col0, VarTablePtr tab, Resolver resolve)
        : s_(text), line_(line), col0_(col0), tab_(std::move(tab)),
          resolve_(std::move(resolve)) {}

    Value run() {
        Value v = expr();
        ws();
        if (pos_ != s_.size()) fail("unexpected character");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }
    [[noreturn]] void fail_at(const std::string& msg, size_t pos) const {
        throw ParseError(msg, line_, col0_ + static_cast<int>(pos));
    }

    void ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    bool at_primary() const {
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || ident_start(c) || c == '(';
    }

    Value expr() {
        Value acc = term();
        for (;;) {
            ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            size_t oppos = pos_;
            ++pos_;
            Value t = term();
            acc = add(std::move(acc), std::move(t), c == '-', oppos);
        }
        return acc;
    }

    Value term() {
        ws();
        bool neg = false;
        while (peek() == '-') {
            neg = !neg;
            ++pos_;
            ws();
        }
        Value acc = factor();
        for (;;) {
            ws();
            size_t fpos;
            if (peek() == '*') {
                ++pos_;
                ws();
                fpos = pos_;
            } else if (at_primary()) {
                fpos = pos_;
            } else {
                break;
            }
            Value f = factor();
            acc = mul(std::move(acc), std::move(f), fpos);
        }
        if (neg) negate(acc);
        return acc;
    }

    Value factor() {
        Value p = primary();
        ws();
        if (peek() == '^') {
            size_t cpos = pos_;
            if (p.vec) fail_at("cannot raise a generator term to a power", cpos);
            ++pos_;
            ws();
            p.s = spoly_pow(p.s, uint_token());
        }
        return p;
    }

    Value primary() {
        ws();
        char c = peek();
        if (c == '\0') fail("expected a value");
        if (c == '(') {
            size_t opos = pos_;
            ++pos_;
            Value v = expr();
            ws();
            if (peek() != ')') fail_at("missing ')'", opos);
            ++pos_;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Value v;
            v.s = SPoly::constant(tab_, rat_token());
            return v;
        }
        if (ident_start(c)) {
            size_t ipos = pos_;
            std::string id;
            while (pos_ < s_.size() && ident_char(s_[pos_])) id += s_[pos_++];
            std::optional<Value> v = resolve_(id);
            if (!v) fail_at("unknown name '" + id + "'", ipos);
            return std::move(*v);
        }
        fail("unexpected character");
    }

    Rat rat_token() {
        size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        std::string num(s_.substr(start, pos_ - start));
        if (peek() == '/') {
            size_t slash = pos_;
            ++pos_;
            size_t dstart = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (pos_ == dstart) fail_at("expected digits after '/'", slash);
            std::string den(s_.substr(dstart, pos_ - dstart));
            if (std::all_of(den.begin(), den.end(), [](char d) { return d == '0'; }))
                fail_at("zero denominator", dstart);
            Rat r(num + "/" + den);
            r.canonicalize();
            return r;
        }
        return Rat(num);
    }

    unsigned uint_token() {
        size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) fail("expected an integer exponent");
        std::string digits(s_.substr(start, pos_ - start));
        if (digits.size() > 4) fail_at("exponent too large", start);
        return static_cast<unsigned>(std::stoul(digits));
    }

    Value mul(Value a, Value b, size_t bpos) {
        if (a.vec) {
            if (b.vec) fail_at("product of two generator terms", bpos);
            fail_at("a generator term must be the last factor", bpos);
        }
        if (b.vec) {
            for (SPoly& p : b.v) p = a.s * p;
            return b;
        }
        a.s = a.s * b.s;
        return a;
    }

    Value add(Value a, Value b, bool subtract, size_t oppos) {
        if (a.vec != b.vec)
            fail_at("cannot add a scalar and a generator term", oppos);
        if (a.vec) {
            for (size_t i = 0; i < a.v.size(); ++i) {
                if (subtract)
                    a.v[i] -= b.v[i];
                else
                    a.v[i] += b.v[i];
            }
            return a;
        }
        if (subtract)
            a.s -= b.s;
        else
            a.s += b.s;
        return a;
    }

    static void negate(Value& v) {
        if (v.vec)
            for (SPoly& p : v.v) p = -p;
        else
            v.s = -v.s;
    }

    std::string_view s_;
    int line_;
    int col0_;
    size_t pos_ = 0;
    VarTablePtr tab_;
    Resolver resolve_;
};

// Scanning of one comment-stripped line; columns stay 1-based against the
// original text (comments are removed by truncation only).
class LineParser {
public:
    LineParser(std::string text, int lineno) : s_(std::move(text)), line_(lineno) {}

    void ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r'))
            ++pos_;
    }
    bool done() {
        ws();
        return pos_ >= s_.size();
    }
    char peek() {
        ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    int col() {
        ws();
        return static_cast<int>(pos_) + 1;
    }
    int line() const { return line_; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line_, static_cast<int>(pos_) + 1);
    }

    std::string token() {
        ws();
        if (pos_ >= s_.size()) fail("unexpected end of line");
        size_t start = pos_;
        while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        return s_.substr(start, pos_ - start);
    }

    // content of a double-quoted string plus the 1-based column of its first
    // character; no escape sequences
    std::pair<std::string, int> quoted() {
        ws();
        if (peek() != '"') fail("expected '\"'");
        size_t open = pos_;
        ++pos_;
        size_t start = pos_;
        while (pos_ < s_.size() && s_[pos_] != '"') ++pos_;
        if (pos_ >= s_.size())
            throw ParseError("unterminated string", line_, static_cast<int>(open) + 1);
        std::string content = s_.substr(start, pos_ - start);
        ++pos_;
        return {std::move(content), static_cast<int>(start) + 1};
    }

    void expect_char(char c, const std::string& what) {
        ws();
        if (peek() != c) fail("expected " + what);
        ++pos_;
    }

    void expect_end(const std::string& what) {
        if (!done()) fail("unexpected text after " + what);
    }

    int expect_uint(const std::string& what, long min_value) {
        ws();
        size_t tokcol = pos_;
        std::string t = token();
        if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) {
                return std::isdigit(static_cast<unsigned char>(c));
            }))
            throw ParseError("expected a nonnegative integer for " + what, line_,
                             static_cast<int>(tokcol) + 1);
        if (t.size() > 6)
            throw ParseError(what + " out of range", line_, static_cast<int>(tokcol) + 1);
        long v = std::stol(t);
        if (v < min_value)
            throw ParseError(what + " must be at least " + std::to_string(min_value), line_,
                             static_cast<int>(tokcol) + 1);
        return static_cast<int>(v);
    }

private:
    std::string s_;
    int line_;
    size_t pos_ = 0;
};

std::string strip_comment(const std::string& raw) {
    bool in_quote = false;
    for (size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] == '"') in_quote = !in_quote;
        else if (raw[i] == '#' && !in_quote) return raw.substr(0, i);
    }
    return raw;
}

// "A,B" -> the two trimmed halves
std::pair<std::string, std::string> split_pair_key(const std::string& key, int line, int col) {
    size_t comma = key.find(',');
    if (comma == std::string::npos || key.find(',', comma + 1) != std::string::npos)
        throw ParseError("key must name exactly two elements separated by ','", line, col);
    auto trim = [](std::string s) {
        size_t a = s.find_first_not_of(" \t");
        size_t b = s.find_last_not_of(" \t");
        if (a == std::string::npos) return std::string();
        return s.substr(a, b - a + 1);
    };
    return {trim(key.substr(0, comma)), trim(key.substr(comma + 1))};
}

std::vector<SPoly> value_to_element(Value v, int slots, const VarTablePtr& tab, int line,
                                    int col) {
    if (!v.vec) {
        if (v.s.is_zero())
            return std::vector<SPoly>(static_cast<size_t>(slots), SPoly::zero(tab));
        throw ParseError("value must combine generators (or be 0)", line, col);
    }
    return std::move(v.v);
}

std::vector<Rat> value_to_constants(Value v, int slots, const VarTablePtr& tab, int line,
                                    int col) {
    std::vector<SPoly> el = value_to_element(std::move(v), slots, tab, line, col);
    std::vector<Rat> out;
    out.reserve(el.size());
    for (const SPoly& p : el) {
        if (p.is_zero()) {
            out.emplace_back(0);
            continue;
        }
        if (p.terms().size() != 1 ||
            !std::all_of(p.terms().begin()->first.begin(), p.terms().begin()->first.end(),
                         [](unsigned e) { return e == 0; }))
            throw ParseError("entries must be rational combinations of basis elements", line,
                             col);
        out.push_back(p.terms().begin()->second);
    }
    return out;
}

bool all_zero(const std::vector<SPoly>& v) {
    return std::all_of(v.begin(), v.end(), [](const SPoly& p) { return p.is_zero(); });
}
bool all_zero(const std::vector<Rat>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& r) { return rat_is_zero(r); });
}

// rendering helpers shared with canonical_print

std::string combo_str(const std::vector<Rat>& coeffs, const std::vector<std::string>& names) {
    std::string out;
    bool first = true;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (rat_is_zero(coeffs[i])) continue;
        std::string piece;
        if (coeffs[i] == 1)
            piece = names[i];
        else if (coeffs[i] == -1)
            piece = "-" + names[i];
        else
            piece = rat_str(coeffs[i]) + " " + names[i];
        if (!first) out += " + ";
        out += piece;
        first = false;
    }
    return first ? "0" : out;
}

std::string element_str(const std::vector<SPoly>& coeffs,
                        const std::vector<GeneratorSpec>& gens) {
    std::string out;
    bool first = true;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        const SPoly& p = coeffs[i];
        if (p.is_zero()) continue;
        std::string ps = p.str();
        std::string piece;
        if (p.terms().size() > 1)
            piece = "(" + ps + ") " + gens[i].name;
        else if (ps == "1")
            piece = gens[i].name;
        else if (ps == "-1")
            piece = "-" + gens[i].name;
        else
            piece = ps + " " + gens[i].name;
        if (!first) out += " + ";
        out += piece;
        first = false;
    }
    return first ? "0" : out;
}

} // namespace

AlgebraSpecFile parse_spec(const std::string& text) {
    AlgebraSpecFile spec;
    const VarTablePtr& tab = VarTable::standard();
    const VarId var_d = tab->partial();
    const VarId var_x = tab->spectral("x");

    enum Section { Header = 0, Generators, Brackets, Coeff, Bounds };
    Section sec = Header;
    bool saw_name = false, saw_generators = false, saw_unit = false;
    int coeff_header_line = 0;
    std::map<std::string, int> gen_index;
    std::map<std::string, int> basis_index;

    auto gen_resolver = [&](const std::string& id) -> std::optional<Value> {
        Value v;
        if (id == "d") {
            v.s = SPoly::variable(tab, var_d);
            return v;
        }
        if (id == "x") {
            v.s = SPoly::variable(tab, var_x);
            return v;
        }
        auto it = gen_index.find(id);
        if (it == gen_index.end()) return std::nullopt;
        v.vec = true;
        v.v.assign(spec.generators.size(), SPoly::zero(tab));
        v.v[static_cast<size_t>(it->second)] = SPoly::constant(tab, Rat(1));
        return v;
    };
    auto basis_resolver = [&](const std::string& id) -> std::optional<Value> {
        auto it = basis_index.find(id);
        if (it == basis_index.end()) return std::nullopt;
        Value v;
        v.vec = true;
        v.v.assign(spec.coeff.basis.size(), SPoly::zero(tab));
        v.v[static_cast<size_t>(it->second)] = SPoly::constant(tab, Rat(1));
        return v;
    };

    int lineno = 0;
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        ++lineno;
        LineParser lp(strip_comment(raw), lineno);
        if (lp.done()) continue;

        if (lp.peek() == '[') {
            int hcol = lp.col();
            std::string t = lp.token();
            lp.expect_end("section header");
            if (t.size() < 2 || t.back() != ']')
                throw ParseError("malformed section header", lineno, hcol);
            std::string name = t.substr(1, t.size() - 2);
            Section next;
            if (name == "generators") next = Generators;
            else if (name == "brackets") next = Brackets;
            else if (name == "coefficient-algebra") next = Coeff;
            else if (name == "bounds") next = Bounds;
            else throw ParseError("unknown section [" + name + "]", lineno, hcol);
            if (next <= sec)
                throw ParseError("section [" + name + "] is out of order", lineno, hcol);
            if (next != Generators && !saw_generators)
                throw ParseError("[generators] must come first", lineno, hcol);
            if (next == Generators) saw_generators = true;
            if (next == Coeff) coeff_header_line = lineno;
            sec = next;
            continue;
        }

        switch (sec) {
        case Header: {
            int tcol = lp.col();
            std::string t = lp.token();
            if (t != "name")
                throw ParseError("expected 'name <identifier>' or a section header", lineno,
                                 tcol);
            if (saw_name) throw ParseError("duplicate 'name' line", lineno, tcol);
            spec.name = lp.token();
            lp.expect_end("the name");
            saw_name = true;
            break;
        }
        case Generators: {
            int ncol = lp.col();
            std::string gname = lp.token();
            if (!valid_ident(gname))
                throw ParseError("invalid generator name '" + gname + "'", lineno, ncol);
            if (gname == "d" || gname == "x")
                throw ParseError("'" + gname + "' is reserved for the bracket variables",
                                 lineno, ncol);
            if (gen_index.count(gname))
                throw ParseError("duplicate generator '" + gname + "'", lineno, ncol);
            int pcol = lp.col();
            std::string par = lp.token();
            Parity parity;
            if (par == "even") parity = Parity::Even;
            else if (par == "odd") parity = Parity::Odd;
            else throw ParseError("expected 'even' or 'odd'", lineno, pcol);
            lp.expect_end("the generator declaration");
            gen_index.emplace(gname, static_cast<int>(spec.generators.size()));
            spec.generators.push_back({gname, parity});
            break;
        }
        case Brackets: {
            auto [key, kcol] = lp.quoted();
            auto [aname, bname] = split_pair_key(key, lineno, kcol);
            auto ai = gen_index.find(aname);
            auto bi = gen_index.find(bname);
            if (ai == gen_index.end())
                throw ParseError("unknown generator '" + aname + "'", lineno, kcol);
            if (bi == gen_index.end())
                throw ParseError("unknown generator '" + bname + "'", lineno, kcol);
            std::pair<int, int> ij{ai->second, bi->second};
            if (spec.brackets.count(ij))
                throw ParseError("duplicate bracket (" + aname + "," + bname + ")", lineno,
                                 kcol);
            lp.expect_char('=', "'='");
            auto [vtext, vcol] = lp.quoted();
            lp.expect_end("the bracket value");
            Value val = ExprParser(vtext, lineno, vcol, tab, gen_resolver).run();
            std::vector<SPoly> coeffs = value_to_element(
                std::move(val), static_cast<int>(spec.generators.size()), tab, lineno, vcol);
            Parity want = parity_add(spec.generators[static_cast<size_t>(ij.first)].parity,
                                     spec.generators[static_cast<size_t>(ij.second)].parity);
            for (size_t k = 0; k < coeffs.size(); ++k)
                if (!coeffs[k].is_zero() && spec.generators[k].parity != want)
                    throw ParseError("parity mismatch: bracket (" + aname + "," + bname +
                                         ") cannot produce '" + spec.generators[k].name + "'",
                                     lineno, vcol);
            if (!all_zero(coeffs)) spec.brackets.emplace(ij, std::move(coeffs));
            break;
        }
        case Coeff: {
            if (lp.peek() == '"') {
                if (spec.coeff.quotient)
                    throw ParseError("the quotient form takes no product lines", lineno,
                                     lp.col());
                if (spec.coeff.basis.empty())
                    throw ParseError("declare 'basis' before products", lineno, lp.col());
                auto [key, kcol] = lp.quoted();
                auto [aname, bname] = split_pair_key(key, lineno, kcol);
                auto ai = basis_index.find(aname);
                auto bi = basis_index.find(bname);
                if (ai == basis_index.end())
                    throw ParseError("unknown basis element '" + aname + "'", lineno, kcol);
                if (bi == basis_index.end())
                    throw ParseError("unknown basis element '" + bname + "'", lineno, kcol);
                std::pair<int, int> st{std::min(ai->second, bi->second),
                                       std::max(ai->second, bi->second)};
                if (spec.coeff.products.count(st))
                    throw ParseError("duplicate product (" + aname + "," + bname + ")",
                                     lineno, kcol);
                lp.expect_char('=', "'='");
                auto [vtext, vcol] = lp.quoted();
                lp.expect_end("the product value");
                Value val = ExprParser(vtext, lineno, vcol, tab, basis_resolver).run();
                std::vector<Rat> coeffs = value_to_constants(
                    std::move(val), static_cast<int>(spec.coeff.basis.size()), tab, lineno,
                    vcol);
                if (!all_zero(coeffs)) spec.coeff.products.emplace(st, std::move(coeffs));
                break;
            }
            int tcol = lp.col();
            std::string t = lp.token();
            if (t == "quotient") {
                if (!spec.coeff.basis.empty())
                    throw ParseError("'quotient' and 'basis' forms cannot be mixed", lineno,
                                     tcol);
                if (spec.coeff.quotient)
                    throw ParseError("duplicate 'quotient' line", lineno, tcol);
                spec.coeff.quotient = lp.expect_uint("the quotient exponent", 1);
                lp.expect_end("the quotient exponent");
            } else if (t == "basis") {
                if (spec.coeff.quotient)
                    throw ParseError("'quotient' and 'basis' forms cannot be mixed", lineno,
                                     tcol);
                if (!spec.coeff.basis.empty())
                    throw ParseError("duplicate 'basis' line", lineno, tcol);
                while (!lp.done()) {
                    int ncol = lp.col();
                    std::string bname = lp.token();
                    if (!valid_ident(bname))
                        throw ParseError("invalid basis name '" + bname + "'", lineno, ncol);
                    if (basis_index.count(bname))
                        throw ParseError("duplicate basis name '" + bname + "'", lineno,
                                         ncol);
                    basis_index.emplace(bname, static_cast<int>(spec.coeff.basis.size()));
                    spec.coeff.basis.push_back(bname);
                }
                if (spec.coeff.basis.empty())
                    throw ParseError("'basis' needs at least one name", lineno, tcol);
            } else if (t == "unit") {
                if (spec.coeff.quotient)
                    throw ParseError("the quotient form takes no 'unit' line", lineno, tcol);
                if (spec.coeff.basis.empty())
                    throw ParseError("declare 'basis' before 'unit'", lineno, tcol);
                if (saw_unit) throw ParseError("duplicate 'unit' line", lineno, tcol);
                lp.expect_char('=', "'='");
                auto [vtext, vcol] = lp.quoted();
                lp.expect_end("the unit value");
                Value val = ExprParser(vtext, lineno, vcol, tab, basis_resolver).run();
                spec.coeff.unit = value_to_constants(
                    std::move(val), static_cast<int>(spec.coeff.basis.size()), tab, lineno,
                    vcol);
                saw_unit = true;
            } else {
                throw ParseError("expected 'quotient', 'basis', 'unit' or a product line",
                                 lineno, tcol);
            }
            break;
        }
        case Bounds: {
            int tcol = lp.col();
            std::string t = lp.token();
            if (t == "deg-d") {
                if (spec.deg_d) throw ParseError("duplicate 'deg-d' line", lineno, tcol);
                spec.deg_d = lp.expect_uint("deg-d", 0);
            } else if (t == "deg-l") {
                if (spec.deg_l) throw ParseError("duplicate 'deg-l' line", lineno, tcol);
                spec.deg_l = lp.expect_uint("deg-l", 0);
            } else {
                throw ParseError("expected 'deg-d' or 'deg-l'", lineno, tcol);
            }
            lp.expect_end("the bound");
            break;
        }
        }
    }

    if (!saw_name) throw ParseError("missing 'name' line", std::max(lineno, 1), 1);
    if (!saw_generators)
        throw ParseError("missing [generators] section", std::max(lineno, 1), 1);
    if (spec.generators.empty())
        throw ParseError("no generators declared", std::max(lineno, 1), 1);
    if (!spec.coeff.basis.empty() && !saw_unit)
        throw ParseError("missing 'unit' line in [coefficient-algebra]", coeff_header_line,
                         1);
    if (coeff_header_line && !spec.coeff.present())
        throw ParseError("empty [coefficient-algebra] section", coeff_header_line, 1);
    return spec;
}

std::string canonical_print(const AlgebraSpecFile& spec) {
    std::ostringstream o;
    o << "name " << spec.name << "\n\n[generators]\n";
    for (const GeneratorSpec& g : spec.generators)
        o << g.name << (g.parity == Parity::Even ? " even" : " odd") << "\n";
    if (!spec.brackets.empty()) {
        o << "\n[brackets]\n";
        for (const auto& [ij, coeffs] : spec.brackets)
            o << "\"" << spec.generators[static_cast<size_t>(ij.first)].name << ","
              << spec.generators[static_cast<size_t>(ij.second)].name << "\" = \""
              << element_str(coeffs, spec.generators) << "\"\n";
    }
    if (spec.coeff.present()) {
        o << "\n[coefficient-algebra]\n";
        if (spec.coeff.quotient) {
            o << "quotient " << *spec.coeff.quotient << "\n";
        } else {
            o << "basis";
            for (const std::string& n : spec.coeff.basis) o << " " << n;
            o << "\nunit = \"" << combo_str(spec.coeff.unit, spec.coeff.basis) << "\"\n";
            for (const auto& [st, coeffs] : spec.coeff.products)
                o << "\"" << spec.coeff.basis[static_cast<size_t>(st.first)] << ","
                  << spec.coeff.basis[static_cast<size_t>(st.second)] << "\" = \""
                  << combo_str(coeffs, spec.coeff.basis) << "\"\n";
        }
    }
    if (spec.deg_d || spec.deg_l) {
        o << "\n[bounds]\n";
        if (spec.deg_d) o << "deg-d " << *spec.deg_d << "\n";
        if (spec.deg_l) o << "deg-l " << *spec.deg_l << "\n";
    }
    return o.str();
}

AlgebraPtr build_algebra(const AlgebraSpecFile& spec) {
    const VarTablePtr& tab = VarTable::standard();
    const int r = static_cast<int>(spec.generators.size());
    StructureTable st(static_cast<size_t>(r),
                      std::vector<std::vector<SPoly>>(
                          static_cast<size_t>(r),
                          std::vector<SPoly>(static_cast<size_t>(r), SPoly::zero(tab))));
    for (const auto& [ij, coeffs] : spec.brackets)
        for (int k = 0; k < r; ++k)
            st[static_cast<size_t>(ij.first)][static_cast<size_t>(ij.second)]
              [static_cast<size_t>(k)] = coeffs[static_cast<size_t>(k)];
    std::vector<std::string> names;
    std::vector<Parity> parities;
    for (const GeneratorSpec& g : spec.generators) {
        names.push_back(g.name);
        parities.push_back(g.parity);
    }
    return LCSAlgebra::make(spec.name, std::move(names), std::move(parities), std::move(st));
}

std::optional<CommutativeAlgebra> build_coeff_algebra(const AlgebraSpecFile& spec) {
    if (!spec.coeff.present()) return std::nullopt;
    if (spec.coeff.quotient) return CommutativeAlgebra::quotient_poly(*spec.coeff.quotient);
    const int n = static_cast<int>(spec.coeff.basis.size());
    std::vector<std::vector<std::vector<Rat>>> mult(
        static_cast<size_t>(n),
        std::vector<std::vector<Rat>>(static_cast<size_t>(n),
                                      std::vector<Rat>(static_cast<size_t>(n), Rat(0))));
    for (const auto& [st, coeffs] : spec.coeff.products) {
        mult[static_cast<size_t>(st.first)][static_cast<size_t>(st.second)] = coeffs;
        mult[static_cast<size_t>(st.second)][static_cast<size_t>(st.first)] = coeffs;
    }
    return CommutativeAlgebra::make(spec.coeff.basis, std::move(mult), spec.coeff.unit);
}

} // namespace lcsk
