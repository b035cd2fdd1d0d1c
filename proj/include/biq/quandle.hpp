#pragma once

// Quandles, the quandle->biquandle construction, and switch-matrix
// reconstruction.

#include <string>
#include <utility>
#include <vector>

#include "biq/core.hpp"

namespace biq {

// A finite quandle of order n as a single table Q with Q[a][b] = a^b.
struct QuandleMatrix {
    int n = 0;
    std::vector<int> table; // row-major, 1-based accessors

    QuandleMatrix() = default;
    explicit QuandleMatrix(int order) : n(order) {
        detail::check_order(order);
        table.assign(static_cast<size_t>(n) * n, 0);
    }
    int at(int a, int b) const { return table[static_cast<size_t>(a - 1) * n + (b - 1)]; }
    void set(int a, int b, int v) { table[static_cast<size_t>(a - 1) * n + (b - 1)] = v; }
};

// Quandle axioms: idempotence, columns are permutations, self-distributivity.
inline bool is_quandle(const QuandleMatrix& Q) {
    const int n = Q.n;
    for (int v : Q.table)
        if (v < 1 || v > n) return false;
    for (int a = 1; a <= n; ++a)
        if (Q.at(a, a) != a) return false;
    for (int b = 1; b <= n; ++b) {
        std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
        for (int a = 1; a <= n; ++a) {
            int v = Q.at(a, b);
            if (seen[v]) return false;
            seen[v] = 1;
        }
    }
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int c = 1; c <= n; ++c)
                if (Q.at(Q.at(a, b), c) != Q.at(Q.at(a, c), Q.at(b, c))) return false;
    return true;
}

// Dual quandle: columnwise inverse permutations, D[a][b] = the unique c with
// Q[c][b] = a.
inline QuandleMatrix quandle_dual(const QuandleMatrix& Q) {
    QuandleMatrix D(Q.n);
    for (int b = 1; b <= Q.n; ++b)
        for (int c = 1; c <= Q.n; ++c)
            D.set(Q.at(c, b), b, c);
    return D;
}

// True iff both lower blocks are the trivial table.
inline bool is_qbiq(const BiqMatrix& B) {
    for (int a = 1; a <= B.n; ++a)
        for (int b = 1; b <= B.n; ++b)
            if (B.at(Op::lower_left, a, b) != a || B.at(Op::lower_right, a, b) != a)
                return false;
    return true;
}

// The biquandle with upper blocks (dual of Q, Q) and trivial lower blocks.
inline BiqMatrix qbiq_from_quandle(const QuandleMatrix& Q) {
    if (!is_quandle(Q)) throw input_error("table is not a quandle");
    BiqMatrix B(Q.n);
    QuandleMatrix D = quandle_dual(Q);
    for (int a = 1; a <= Q.n; ++a)
        for (int b = 1; b <= Q.n; ++b) {
            B.set(Op::upper_left, a, b, D.at(a, b));
            B.set(Op::upper_right, a, b, Q.at(a, b));
            B.set(Op::lower_left, a, b, a);
            B.set(Op::lower_right, a, b, a);
        }
    return B;
}

// Reconstructs the full matrix from the two right-operation tables. The pair
// map S(a,b) = (S4[b][a], S2[a][b]) must be a bijection on pairs; its inverse
// S^-1(a,b) = (b^a-bar, a_b-bar) yields the left blocks.
inline BiqMatrix from_switch(const std::vector<std::vector<int>>& S2,
                             const std::vector<std::vector<int>>& S4) {
    const int n = static_cast<int>(S2.size());
    detail::check_order(n);
    if (S4.size() != S2.size()) throw input_error("switch tables differ in order");
    for (const auto* tab : {&S2, &S4})
        for (const auto& row : *tab) {
            if (static_cast<int>(row.size()) != n) throw input_error("switch table is not square");
            for (int v : row)
                if (v < 1 || v > n)
                    throw input_error("switch entry outside 1.." + std::to_string(n));
        }

    BiqMatrix B(n);
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            B.set(Op::upper_right, a, b, S2[a - 1][b - 1]);
            B.set(Op::lower_right, a, b, S4[a - 1][b - 1]);
        }

    // Invert the pair map; preimage of (a,b) is (c,d) with d_c = a, c^d = b,
    // and then M1[b][a] = c, M3[a][b] = d.
    std::vector<char> hit(static_cast<size_t>(n) * n, 0);
    for (int c = 1; c <= n; ++c)
        for (int d = 1; d <= n; ++d) {
            int a = B.at(Op::lower_right, d, c);
            int b = B.at(Op::upper_right, c, d);
            size_t slot = static_cast<size_t>(a - 1) * n + (b - 1);
            if (hit[slot]) throw input_error("switch pair map is not a bijection");
            hit[slot] = 1;
            B.set(Op::upper_left, b, a, c);
            B.set(Op::lower_left, a, b, d);
        }
    return B;
}

} // namespace biq
