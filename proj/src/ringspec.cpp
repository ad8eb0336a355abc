#include "cubezero/ringspec.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "cubezero/matrix.hpp"

namespace cubezero {

ParseError::ParseError(const std::string& message, std::size_t line_no, std::size_t column_no)
    : std::runtime_error("line " + std::to_string(line_no) + ", column " +
                         std::to_string(column_no) + ": " + message),
      line(line_no),
      column(column_no) {}

const Field& RingSpecFile::field() const {
    if (is_triple()) return triple().field();
    if (is_struct()) return algebra().field();
    return sequence().field;
}

namespace {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        unsigned char c = static_cast<unsigned char>(line[i]);
        if (c == '#') break;
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
               line[i] != '#') {
            ++i;
        }
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

std::vector<Token> split_commas(const Token& t) {
    std::vector<Token> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= t.text.size(); ++i) {
        if (i == t.text.size() || t.text[i] == ',') {
            out.push_back({t.text.substr(start, i - start), t.column + start});
            start = i + 1;
        }
    }
    return out;
}

std::size_t parse_index(const Token& t, std::size_t line) {
    if (t.text.empty()) throw ParseError("expected a nonnegative integer", line, t.column);
    for (char c : t.text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw ParseError("expected a nonnegative integer, got '" + t.text + "'", line,
                             t.column);
        }
    }
    try {
        return std::stoul(t.text);
    } catch (const std::out_of_range&) {
        throw ParseError("integer out of range: '" + t.text + "'", line, t.column);
    }
}

Scalar parse_scalar(const Field& f, const Token& t, std::size_t line) {
    try {
        return Scalar::parse(f, t.text);
    } catch (const std::exception&) {
        throw ParseError("bad scalar '" + t.text + "'", line, t.column);
    }
}

std::string join_coords(const Vec& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += v[i].to_string();
    }
    return out;
}

std::string field_text(const Field& f) {
    return f.is_rational() ? "Q" : "GF " + std::to_string(f.modulus());
}

using EntryMap = std::map<std::pair<std::size_t, std::size_t>, std::pair<Vec, std::size_t>>;

struct Parser {
    std::optional<std::string> kind;
    std::optional<Field> field;
    std::optional<std::size_t> dim_v, dim_w, dim;
    bool saw_maxideal = false;
    std::optional<HankelSeq> seq;
    EntryMap beta_entries;  // key has i <= j; value remembers the source line
    EntryMap mul_entries;
    std::size_t line = 0;
    std::size_t last_line = 1;

    [[noreturn]] void fail(const std::string& msg, std::size_t col) const {
        throw ParseError(msg, line, col);
    }

    void need_kind(const std::string& expected, const Token& directive) const {
        if (!kind) fail("'" + directive.text + "' before the ring directive", directive.column);
        if (*kind != expected) {
            fail("'" + directive.text + "' only applies to ring " + expected, directive.column);
        }
    }

    const Field& need_field(const Token& directive) const {
        if (!field) fail("'" + directive.text + "' requires a field directive first",
                         directive.column);
        return *field;
    }

    Token expect(const std::vector<Token>& toks, std::size_t pos, const std::string& what) const {
        if (pos >= toks.size()) {
            std::size_t col = toks.empty() ? 1 : toks.back().column + toks.back().text.size();
            fail("expected " + what, col);
        }
        return toks[pos];
    }

    void no_extra(const std::vector<Token>& toks, std::size_t first_unused) const {
        if (toks.size() > first_unused) {
            fail("unexpected token '" + toks[first_unused].text + "'",
                 toks[first_unused].column);
        }
    }

    // Shared by beta and mul: "<dir> i j : coords", returning (i, j, coords).
    void store_entry(const std::vector<Token>& toks, std::size_t max_index, bool forbid_zero,
                     std::size_t width, EntryMap& entries) {
        Token ti = expect(toks, 1, "a row index");
        Token tj = expect(toks, 2, "a column index");
        std::size_t i = parse_index(ti, line);
        std::size_t j = parse_index(tj, line);
        if (forbid_zero && (i == 0 || j == 0)) {
            fail("index 0 is the unit; its products are fixed", (i == 0 ? ti : tj).column);
        }
        if (i >= max_index) fail("index " + std::to_string(i) + " out of range", ti.column);
        if (j >= max_index) fail("index " + std::to_string(j) + " out of range", tj.column);
        Token colon = expect(toks, 3, "':'");
        if (colon.text != ":") fail("expected ':'", colon.column);

        std::vector<Token> pieces;
        for (std::size_t p = 4; p < toks.size(); ++p) {
            for (Token piece : split_commas(toks[p])) {
                if (piece.text.empty()) fail("empty coordinate", piece.column);
                pieces.push_back(std::move(piece));
            }
        }
        if (pieces.size() != width) {
            fail("expected " + std::to_string(width) + " coordinates, got " +
                     std::to_string(pieces.size()),
                 colon.column);
        }
        Vec coords;
        for (const Token& piece : pieces) coords.push_back(parse_scalar(*field, piece, line));

        auto key = std::minmax(i, j);
        auto it = entries.find({key.first, key.second});
        if (it != entries.end() && it->second.first != coords) {
            fail("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                     ") conflicts with line " + std::to_string(it->second.second) +
                     " (the table is symmetric)",
                 toks[0].column);
        }
        entries[{key.first, key.second}] = {std::move(coords), line};
    }

    void parse_seq(const std::vector<Token>& toks) {
        need_kind("hankel", toks[0]);
        const Field& f = need_field(toks[0]);
        if (seq) fail("duplicate seq directive", toks[0].column);
        Token kind_tok = expect(toks, 1, "a sequence kind");

        if (kind_tok.text == "hilbert") {
            no_extra(toks, 2);
            try {
                seq = HankelSeq::hilbert(f);
            } catch (const std::exception&) {
                fail("the Hilbert sequence needs field Q", kind_tok.column);
            }
            return;
        }
        if (kind_tok.text == "finite") {
            std::map<std::size_t, Scalar> terms;
            std::size_t top = 0;
            for (std::size_t p = 2; p < toks.size(); ++p) {
                for (const Token& piece : split_commas(toks[p])) {
                    if (piece.text.empty()) fail("empty term", piece.column);
                    std::size_t sep = piece.text.find(':');
                    if (sep == std::string::npos || sep == 0 || sep + 1 == piece.text.size()) {
                        fail("expected index:value, got '" + piece.text + "'", piece.column);
                    }
                    Token idx{piece.text.substr(0, sep), piece.column};
                    Token val{piece.text.substr(sep + 1), piece.column + sep + 1};
                    std::size_t n = parse_index(idx, line);
                    if (terms.count(n)) {
                        fail("duplicate term for index " + std::to_string(n), piece.column);
                    }
                    terms.emplace(n, parse_scalar(f, val, line));
                    top = std::max(top, n + 1);
                }
            }
            Vec prefix(top, Scalar::zero(f));
            for (const auto& [n, value] : terms) prefix[n] = value;
            seq = HankelSeq::explicit_prefix(f, std::move(prefix));
            return;
        }
        if (kind_tok.text == "recurrence") {
            Token init_tok = expect(toks, 2, "'init'");
            if (init_tok.text != "init") fail("expected 'init'", init_tok.column);
            Vec initial, coeffs;
            std::size_t p = 3;
            while (p < toks.size() && toks[p].text != "coeffs") {
                initial.push_back(parse_scalar(f, toks[p], line));
                ++p;
            }
            Token coeffs_tok = expect(toks, p, "'coeffs'");
            for (++p; p < toks.size(); ++p) coeffs.push_back(parse_scalar(f, toks[p], line));
            if (initial.empty()) fail("recurrence needs initial terms", init_tok.column);
            if (coeffs.size() != initial.size()) {
                fail("recurrence needs as many coefficients as initial terms",
                     coeffs_tok.column);
            }
            seq = HankelSeq::recurrence(f, std::move(initial), std::move(coeffs));
            return;
        }
        fail("unknown sequence kind '" + kind_tok.text + "'", kind_tok.column);
    }

    void parse_line(const std::vector<Token>& toks) {
        const Token& dir = toks[0];
        if (dir.text == "ring") {
            if (kind) fail("duplicate ring directive", dir.column);
            Token k = expect(toks, 1, "triple, struct or hankel");
            if (k.text != "triple" && k.text != "struct" && k.text != "hankel") {
                fail("unknown ring kind '" + k.text + "'", k.column);
            }
            no_extra(toks, 2);
            kind = k.text;
            return;
        }
        if (!kind) fail("the ring directive must come first", dir.column);

        if (dir.text == "field") {
            if (field) fail("duplicate field directive", dir.column);
            Token f = expect(toks, 1, "Q or GF <p>");
            if (f.text == "Q") {
                no_extra(toks, 2);
                field = Field::rationals();
            } else if (f.text == "GF") {
                Token p = expect(toks, 2, "a prime");
                no_extra(toks, 3);
                std::size_t v = parse_index(p, line);
                try {
                    field = Field::prime(static_cast<std::uint32_t>(v));
                } catch (const std::exception&) {
                    fail("'" + p.text + "' is not a usable prime", p.column);
                }
            } else {
                fail("unknown field '" + f.text + "'", f.column);
            }
            return;
        }
        if (dir.text == "dimV" || dir.text == "dimW") {
            need_kind("triple", dir);
            auto& slot = dir.text == "dimV" ? dim_v : dim_w;
            if (slot) fail("duplicate " + dir.text + " directive", dir.column);
            slot = parse_index(expect(toks, 1, "a dimension"), line);
            no_extra(toks, 2);
            return;
        }
        if (dir.text == "dim") {
            need_kind("struct", dir);
            if (dim) fail("duplicate dim directive", dir.column);
            Token t = expect(toks, 1, "a dimension");
            std::size_t v = parse_index(t, line);
            if (v == 0) fail("dim must be at least 1 (the unit)", t.column);
            dim = v;
            no_extra(toks, 2);
            return;
        }
        if (dir.text == "beta") {
            need_kind("triple", dir);
            need_field(dir);
            if (!dim_v || !dim_w) fail("beta requires dimV and dimW first", dir.column);
            store_entry(toks, *dim_v, false, *dim_w, beta_entries);
            return;
        }
        if (dir.text == "mul") {
            need_kind("struct", dir);
            need_field(dir);
            if (!dim) fail("mul requires dim first", dir.column);
            store_entry(toks, *dim, true, *dim, mul_entries);
            return;
        }
        if (dir.text == "maxideal") {
            need_kind("struct", dir);
            if (!dim) fail("maxideal requires dim first", dir.column);
            if (saw_maxideal) fail("duplicate maxideal directive", dir.column);
            saw_maxideal = true;
            std::set<std::size_t> indices;
            for (std::size_t p = 1; p < toks.size(); ++p) {
                indices.insert(parse_index(toks[p], line));
            }
            std::set<std::size_t> expected;
            for (std::size_t i = 1; i < *dim; ++i) expected.insert(i);
            if (indices != expected) {
                fail("maxideal must list exactly the non-unit indices 1.." +
                         std::to_string(*dim - 1),
                     dir.column);
            }
            return;
        }
        if (dir.text == "seq") {
            parse_seq(toks);
            return;
        }
        fail("unknown directive '" + dir.text + "'", dir.column);
    }

    [[noreturn]] void missing(const std::string& what) const {
        throw ParseError("missing " + what, last_line, 1);
    }

    RingSpecFile finish() {
        if (!kind) missing("ring directive");
        if (!field) missing("field directive");
        if (*kind == "triple") {
            if (!dim_v) missing("dimV directive");
            if (!dim_w) missing("dimW directive");
            TripleRing s(*field, *dim_v, *dim_w);
            for (const auto& [key, entry] : beta_entries) {
                s.set_beta(key.first, key.second, entry.first);
            }
            return RingSpecFile{std::move(s)};
        }
        if (*kind == "struct") {
            if (!dim) missing("dim directive");
            PresentedAlgebra a(*field, *dim);
            for (const auto& [key, entry] : mul_entries) {
                a.set_product(key.first, key.second, entry.first);
            }
            return RingSpecFile{std::move(a)};
        }
        if (!seq) missing("seq directive");
        return RingSpecFile{make_sequence_triple(*field, SeqSpec::hankel(*seq))};
    }
};

}  // namespace

RingSpecFile parse_ring(const std::string& text) {
    Parser parser;
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        ++parser.line;
        parser.last_line = parser.line;
        std::vector<Token> toks = tokenize(raw);
        if (toks.empty()) continue;
        parser.parse_line(toks);
    }
    if (parser.line == 0) parser.last_line = 1;
    return parser.finish();
}

std::string serialize_triple(const TripleRing& s) {
    std::string out = "ring triple\n";
    out += "field " + field_text(s.field()) + "\n";
    out += "dimV " + std::to_string(s.dim_v()) + "\n";
    out += "dimW " + std::to_string(s.dim_w()) + "\n";
    for (std::size_t i = 0; i < s.dim_v(); ++i) {
        for (std::size_t j = i; j < s.dim_v(); ++j) {
            Vec w = s.beta_vec(i, j);
            if (is_zero_vec(w)) continue;
            out += "beta " + std::to_string(i) + " " + std::to_string(j) + " : " +
                   join_coords(w) + "\n";
        }
    }
    return out;
}

namespace {

std::string serialize_struct(const PresentedAlgebra& a) {
    std::string out = "ring struct\n";
    out += "field " + field_text(a.field()) + "\n";
    out += "dim " + std::to_string(a.dim()) + "\n";
    if (a.dim() > 1) {
        out += "maxideal";
        for (std::size_t i = 1; i < a.dim(); ++i) out += " " + std::to_string(i);
        out += "\n";
    }
    for (std::size_t i = 1; i < a.dim(); ++i) {
        for (std::size_t j = i; j < a.dim(); ++j) {
            Vec prod = a.basis_product(i, j);
            if (is_zero_vec(prod)) continue;
            out += "mul " + std::to_string(i) + " " + std::to_string(j) + " : " +
                   join_coords(prod) + "\n";
        }
    }
    return out;
}

std::string serialize_hankel(const SequenceTriple& t) {
    std::string out = "ring hankel\n";
    out += "field " + field_text(t.field) + "\n";
    if (t.form.kind() != SeqSpec::Kind::Hankel) {
        throw std::logic_error("serialize_ring: finite-support tables have no file syntax");
    }
    const HankelSeq& s = t.form.seq();
    switch (s.kind()) {
        case HankelSeq::Kind::Hilbert:
            out += "seq hilbert\n";
            break;
        case HankelSeq::Kind::Explicit: {
            out += "seq finite";
            std::string entries;
            const Vec& prefix = s.prefix();
            for (std::size_t n = 0; n < prefix.size(); ++n) {
                if (prefix[n].is_zero()) continue;
                if (!entries.empty()) entries += ",";
                entries += std::to_string(n) + ":" + prefix[n].to_string();
            }
            if (!entries.empty()) out += " " + entries;
            out += "\n";
            break;
        }
        case HankelSeq::Kind::Recurrence: {
            out += "seq recurrence init " + join_coords(s.initial()) + " coeffs " +
                   join_coords(s.coeffs()) + "\n";
            break;
        }
    }
    return out;
}

}  // namespace

std::string serialize_ring(const RingSpecFile& spec) {
    if (spec.is_triple()) return serialize_triple(spec.triple());
    if (spec.is_struct()) return serialize_struct(spec.algebra());
    return serialize_hankel(spec.sequence());
}

}  // namespace cubezero
