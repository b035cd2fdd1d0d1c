#pragma once

// Text formats.
//
//   .biq   header "biq <n>", then 2n rows of 2n integers laid out as
//          [[M1|M2],[M3|M4]]. Entry 0 is allowed only when read as a pattern.
//   .pv    header "pv <n>", then n tokens <opletter><operator>, e.g.
//          "pv 4 / l3 l4 u1 u2"; entry i carries generator i to i mod n + 1.
//   .pres  header "pres <g> <r>", then r lines "rel <input> <opletter><oper>
//          <output>".
//
// '#' starts a comment to end of line; parsing is whitespace-insensitive.
// Writers emit the canonical form (single spaces, trailing newline), and
// parse(write(x)) == x as well as write(parse(canonical text)) == text.

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "biq/core.hpp"
#include "biq/hom.hpp"
#include "biq/presentation.hpp"

namespace biq {

namespace detail_io {

inline std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> tokens;
    std::string cur;
    bool in_comment = false;
    for (char ch : text) {
        if (ch == '\n') in_comment = false;
        if (ch == '#') in_comment = true;
        if (in_comment || std::isspace(static_cast<unsigned char>(ch))) {
            if (!cur.empty()) {
                tokens.push_back(cur);
                cur.clear();
            }
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) tokens.push_back(cur);
    return tokens;
}

inline int parse_int(const std::string& tok, const char* what) {
    size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        throw input_error(std::string("expected ") + what + ", got '" + tok + "'");
    }
    if (pos != tok.size())
        throw input_error(std::string("expected ") + what + ", got '" + tok + "'");
    return v;
}

inline detail::Tables parse_tables(const std::vector<std::string>& tokens, bool allow_blank) {
    if (tokens.empty() || tokens[0] != "biq")
        throw input_error("expected 'biq <n>' header");
    if (tokens.size() < 2) throw input_error("missing order after 'biq'");
    int n = parse_int(tokens[1], "order");
    detail::check_order(n);
    const size_t need = static_cast<size_t>(4) * n * n;
    if (tokens.size() != 2 + need)
        throw input_error("expected " + std::to_string(need) + " entries for order " +
                          std::to_string(n) + ", got " + std::to_string(tokens.size() - 2));
    detail::Tables t(n);
    for (size_t p = 0; p < need; ++p) {
        int v = parse_int(tokens[2 + p], "matrix entry");
        int lo = allow_blank ? 0 : 1;
        if (v < lo || v > n)
            throw input_error("entry " + std::to_string(v) + " outside " + std::to_string(lo) +
                              ".." + std::to_string(n));
        size_t row = p / (2 * static_cast<size_t>(n));
        size_t col = p % (2 * static_cast<size_t>(n));
        int blk = static_cast<int>(row / n) * 2 + static_cast<int>(col / n);
        t.block[blk][(row % n) * n + (col % n)] = v;
    }
    return t;
}

inline std::string format_tables(const detail::Tables& t) {
    std::ostringstream out;
    out << "biq " << t.n << "\n";
    for (int half = 0; half < 2; ++half)
        for (int r = 1; r <= t.n; ++r) {
            for (int blk = 0; blk < 2; ++blk)
                for (int c = 1; c <= t.n; ++c) {
                    if (blk > 0 || c > 1) out << ' ';
                    out << t.block[2 * half + blk][static_cast<size_t>(r - 1) * t.n + (c - 1)];
                }
            out << "\n";
        }
    return out.str();
}

inline std::pair<Op, int> parse_op_token(const std::string& tok, int n) {
    if (tok.size() < 2) throw input_error("malformed operation token '" + tok + "'");
    Op op = op_from_letter(tok[0]);
    int oper = parse_int(tok.substr(1), "operator index");
    if (oper < 1 || oper > n)
        throw input_error("operator " + std::to_string(oper) + " outside 1.." + std::to_string(n));
    return {op, oper};
}

} // namespace detail_io

inline BiqMatrix parse_biq_matrix(const std::string& text) {
    auto t = detail_io::parse_tables(detail_io::tokenize(text), false);
    BiqMatrix m(t.n);
    m.block = t.block;
    return m;
}

inline BiqPattern parse_biq_pattern(const std::string& text) {
    auto t = detail_io::parse_tables(detail_io::tokenize(text), true);
    BiqPattern p(t.n);
    p.block = t.block;
    return p;
}

inline std::string format_biq(const BiqMatrix& m) { return detail_io::format_tables(m); }
inline std::string format_biq(const BiqPattern& p) { return detail_io::format_tables(p); }

inline PresentationVector parse_presentation_vector(const std::string& text) {
    auto tokens = detail_io::tokenize(text);
    if (tokens.empty() || tokens[0] != "pv") throw input_error("expected 'pv <n>' header");
    if (tokens.size() < 2) throw input_error("missing length after 'pv'");
    PresentationVector pv;
    pv.n = detail_io::parse_int(tokens[1], "vector length");
    detail::check_order(pv.n);
    std::vector<std::string> ops;
    for (size_t i = 2; i < tokens.size(); ++i)
        if (tokens[i] != "/") ops.push_back(tokens[i]);
    if (static_cast<int>(ops.size()) != pv.n)
        throw input_error("expected " + std::to_string(pv.n) + " operation tokens, got " +
                          std::to_string(ops.size()));
    for (const auto& tok : ops) pv.entries.push_back(detail_io::parse_op_token(tok, pv.n));
    return pv;
}

inline std::string format_presentation_vector(const PresentationVector& pv) {
    std::ostringstream out;
    out << "pv " << pv.n << " /";
    for (const auto& [op, oper] : pv.entries) out << ' ' << op_letter(op) << oper;
    out << "\n";
    return out.str();
}

inline Presentation parse_presentation(const std::string& text) {
    auto tokens = detail_io::tokenize(text);
    if (tokens.empty() || tokens[0] != "pres") throw input_error("expected 'pres <g> <r>' header");
    if (tokens.size() < 3) throw input_error("missing counts after 'pres'");
    Presentation p;
    p.generators = detail_io::parse_int(tokens[1], "generator count");
    detail::check_order(p.generators);
    int nrel = detail_io::parse_int(tokens[2], "relation count");
    if (nrel < 0) throw input_error("negative relation count");
    size_t pos = 3;
    for (int i = 0; i < nrel; ++i) {
        if (pos + 3 > tokens.size() || tokens[pos] != "rel")
            throw input_error("expected 'rel <input> <op> <output>' line " + std::to_string(i + 1));
        Relation r;
        r.input = detail_io::parse_int(tokens[pos + 1], "input index");
        auto [op, oper] = detail_io::parse_op_token(tokens[pos + 2], p.generators);
        r.op = op;
        r.oper = oper;
        r.output = detail_io::parse_int(tokens[pos + 3], "output index");
        p.relations.push_back(r);
        pos += 4;
    }
    if (pos != tokens.size()) throw input_error("trailing tokens after last relation");
    p.validate();
    return p;
}

inline std::string format_presentation(const Presentation& p) {
    std::ostringstream out;
    out << "pres " << p.generators << ' ' << p.relations.size() << "\n";
    for (const auto& r : p.relations)
        out << "rel " << r.input << ' ' << op_letter(r.op) << r.oper << ' ' << r.output << "\n";
    return out.str();
}

inline std::string format_hom_map(const HomMap& h) {
    std::ostringstream out;
    for (size_t i = 0; i < h.image.size(); ++i) {
        if (i) out << ' ';
        out << h.image[i];
    }
    out << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// File helpers
// ---------------------------------------------------------------------------

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write file: " + path);
    out << text;
}

enum class FileKind { biq, pv, pres };

// First token decides the format.
inline FileKind sniff_format(const std::string& text) {
    auto tokens = detail_io::tokenize(text);
    if (!tokens.empty()) {
        if (tokens[0] == "biq") return FileKind::biq;
        if (tokens[0] == "pv") return FileKind::pv;
        if (tokens[0] == "pres") return FileKind::pres;
    }
    throw input_error("unrecognized file header (expected biq, pv, or pres)");
}

// Loads any of the three formats as a presentation: a .biq file is read as a
// pattern whose non-zero cells are the relations.
inline Presentation load_presentation(const std::string& path) {
    std::string text = read_file(path);
    switch (sniff_format(text)) {
    case FileKind::pv: return parse_presentation_vector(text).to_presentation();
    case FileKind::pres: return parse_presentation(text);
    case FileKind::biq: return presentation_from_pattern(parse_biq_pattern(text));
    }
    throw input_error("unreachable");
}

inline BiqMatrix load_biq_matrix(const std::string& path) {
    return parse_biq_matrix(read_file(path));
}

inline BiqPattern load_biq_pattern(const std::string& path) {
    return parse_biq_pattern(read_file(path));
}

} // namespace biq
