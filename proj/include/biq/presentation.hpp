#pragma once

// Finitely presented biquandles given by short relations, presentation
// vectors for knot diagrams, and presentation matrices.
//
// A short relation  input op operator = output  stores four fields; the op
// letters used in text formats are U (a^b), u (a^b-bar), L (a_b), l (a_b-bar):
// uppercase = right (unbarred), lowercase = left (barred), U/u upper, L/l
// lower.

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "biq/core.hpp"

namespace biq {

struct Relation {
    int input = 0;
    Op op = Op::upper_right;
    int oper = 0; // the operator generator
    int output = 0;

    friend bool operator==(const Relation&, const Relation&) = default;
};

struct Presentation {
    int generators = 0;
    std::vector<Relation> relations;

    void validate() const {
        detail::check_order(generators);
        for (const auto& r : relations)
            if (r.input < 1 || r.input > generators || r.oper < 1 || r.oper > generators ||
                r.output < 1 || r.output > generators)
                throw input_error("relation index outside 1.." + std::to_string(generators));
    }
};

// Entry i names the operation carrying generator i to generator (i mod n)+1.
struct PresentationVector {
    int n = 0;
    std::vector<std::pair<Op, int>> entries; // (op, operator), length n

    Presentation to_presentation() const {
        Presentation p;
        p.generators = n;
        for (int i = 1; i <= n; ++i)
            p.relations.push_back({i, entries[i - 1].first, entries[i - 1].second, i % n + 1});
        return p;
    }
};

inline char op_letter(Op k) {
    switch (k) {
    case Op::upper_right: return 'U';
    case Op::upper_left: return 'u';
    case Op::lower_right: return 'L';
    case Op::lower_left: return 'l';
    }
    return '?';
}

inline Op op_from_letter(char ch) {
    switch (ch) {
    case 'U': return Op::upper_right;
    case 'u': return Op::upper_left;
    case 'L': return Op::lower_right;
    case 'l': return Op::lower_left;
    default: throw input_error(std::string("unknown operation letter '") + ch + "'");
    }
}

// The presentation matrix: a pattern of order g with one non-zero entry per
// relation, block[op][input][operator] = output.
inline BiqPattern build_presentation_matrix(const Presentation& P) {
    P.validate();
    BiqPattern M(P.generators);
    for (const auto& r : P.relations) {
        int cur = M.at(r.op, r.input, r.oper);
        if (cur != 0 && cur != r.output)
            throw input_error("relations disagree at block " + std::string(op_name(r.op)) +
                              " position (" + std::to_string(r.input) + "," +
                              std::to_string(r.oper) + ")");
        M.set(r.op, r.input, r.oper, r.output);
    }
    return M;
}

// Reads the non-zero cells of a pattern back as short relations. A complete
// matrix read this way presents the biquandle it tabulates.
inline Presentation presentation_from_pattern(const BiqPattern& P) {
    P.validate();
    Presentation out;
    out.generators = P.n;
    for (auto k : all_ops)
        for (int a = 1; a <= P.n; ++a)
            for (int b = 1; b <= P.n; ++b) {
                int v = P.at(k, a, b);
                if (v != 0) out.relations.push_back({a, k, b, v});
            }
    return out;
}

inline Presentation presentation_of_matrix(const BiqMatrix& B) {
    return presentation_from_pattern(to_pattern(B));
}

// Knotlike: every generator appears exactly once each as input, operator and
// output, and the relations pair into switch pairs (a^b=c, b_a=d) or
// (a^b-bar=c, b_a-bar=d).
inline bool knotlike_check(const Presentation& P) {
    P.validate();
    const int g = P.generators;
    if (static_cast<int>(P.relations.size()) != g) return false;
    std::vector<int> as_input(static_cast<size_t>(g) + 1, 0);
    std::vector<int> as_oper(static_cast<size_t>(g) + 1, 0);
    std::vector<int> as_output(static_cast<size_t>(g) + 1, 0);
    for (const auto& r : P.relations) {
        ++as_input[r.input];
        ++as_oper[r.oper];
        ++as_output[r.output];
    }
    for (int i = 1; i <= g; ++i)
        if (as_input[i] != 1 || as_oper[i] != 1 || as_output[i] != 1) return false;

    // Switch pairing: relation (a, op, b, _) requires (b, flip(op), a, _).
    std::map<std::tuple<int, int, int>, bool> have;
    for (const auto& r : P.relations) have[{r.input, block_index(r.op), r.oper}] = true;
    for (const auto& r : P.relations)
        if (!have.count({r.oper, block_index(flip(r.op)), r.input})) return false;
    return true;
}

// The presentation of the obverse (mirror) knot: toggle every bar.
inline Presentation obverse(const Presentation& P) {
    Presentation out = P;
    for (auto& r : out.relations) r.op = obverse(r.op);
    return out;
}

// The presentation of the flipped knot: swap upper and lower operations.
inline Presentation flip(const Presentation& P) {
    Presentation out = P;
    for (auto& r : out.relations) r.op = flip(r.op);
    return out;
}

} // namespace biq
