#pragma once

// The 20-axiom verifier for candidate biquandle matrices, and the table of
// equational consequences used by the completion search for propagation.
//
// Axiom groups, with a op b written via the four table lookups
// UL(a,b)=a^b-bar, UR(a,b)=a^b, LL(a,b)=a_b-bar, LR(a,b)=a_b:
//
//   1 (direct type II), for all a,b:
//     (i)   UL(UR(a,b), LR(b,a)) = a
//     (ii)  LL(LR(b,a), UR(a,b)) = b
//     (iii) UR(UL(a,b), LL(b,a)) = a
//     (iv)  LR(LL(b,a), UL(a,b)) = b
//   2 (reverse type II), for all a,b there exist x and y with:
//     (i-iii)  UR(a, LL(b,x)) = x,  UL(x,b) = a,  LR(LL(b,x), a) = b
//     (iv-vi)  UL(a, LR(b,y)) = y,  UR(y,b) = a,  LL(LR(b,y), a) = b
//   3 (type III, all-positive and all-negative), for all a,b,c:
//     (i)   UR(UR(a,b), c) = UR(UR(a, LR(c,b)), UR(b,c))
//     (ii)  LR(LR(c,b), a) = LR(LR(c, UR(a,b)), LR(b,a))
//     (iii) UR(LR(b,a), LR(c, UR(a,b))) = LR(UR(b,c), UR(a, LR(c,b)))
//     (iv)  UL(UL(a,b), c) = UL(UL(a, LL(c,b)), UL(b,c))
//     (v)   LL(LL(c,b), a) = LL(LL(c, UL(a,b)), LL(b,a))
//     (vi)  UL(LL(b,a), LL(c, UL(a,b))) = LL(UL(b,c), UL(a, LL(c,b)))
//   4 (type I), for all a there exist x and y with:
//     (i-ii)   LR(a,x) = x,  UR(x,a) = a
//     (iii-iv) UL(a,y) = y,  LL(y,a) = a

#include <deque>
#include <string>
#include <vector>

#include "biq/core.hpp"

namespace biq {

struct AxiomReport {
    bool ok = true;
    std::string failed_axiom; // e.g. "1(iii)", "2(i-iii)", "4(i-ii)"; empty when ok
};

inline AxiomReport biqtest_report(const BiqMatrix& B) {
    B.validate();
    const int n = B.n;
    auto UL = [&](int a, int b) { return B.at(Op::upper_left, a, b); };
    auto UR = [&](int a, int b) { return B.at(Op::upper_right, a, b); };
    auto LL = [&](int a, int b) { return B.at(Op::lower_left, a, b); };
    auto LR = [&](int a, int b) { return B.at(Op::lower_right, a, b); };

    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            if (UL(UR(a, b), LR(b, a)) != a) return {false, "1(i)"};
            if (LL(LR(b, a), UR(a, b)) != b) return {false, "1(ii)"};
            if (UR(UL(a, b), LL(b, a)) != a) return {false, "1(iii)"};
            if (LR(LL(b, a), UL(a, b)) != b) return {false, "1(iv)"};
        }

    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            bool found_x = false;
            for (int x = 1; x <= n && !found_x; ++x)
                found_x = UR(a, LL(b, x)) == x && UL(x, b) == a && LR(LL(b, x), a) == b;
            if (!found_x) return {false, "2(i-iii)"};
            bool found_y = false;
            for (int y = 1; y <= n && !found_y; ++y)
                found_y = UL(a, LR(b, y)) == y && UR(y, b) == a && LL(LR(b, y), a) == b;
            if (!found_y) return {false, "2(iv-vi)"};
        }

    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int c = 1; c <= n; ++c) {
                if (UR(UR(a, b), c) != UR(UR(a, LR(c, b)), UR(b, c))) return {false, "3(i)"};
                if (LR(LR(c, b), a) != LR(LR(c, UR(a, b)), LR(b, a))) return {false, "3(ii)"};
                if (UR(LR(b, a), LR(c, UR(a, b))) != LR(UR(b, c), UR(a, LR(c, b))))
                    return {false, "3(iii)"};
                if (UL(UL(a, b), c) != UL(UL(a, LL(c, b)), UL(b, c))) return {false, "3(iv)"};
                if (LL(LL(c, b), a) != LL(LL(c, UL(a, b)), LL(b, a))) return {false, "3(v)"};
                if (UL(LL(b, a), LL(c, UL(a, b))) != LL(UL(b, c), UL(a, LL(c, b))))
                    return {false, "3(vi)"};
            }

    for (int a = 1; a <= n; ++a) {
        bool found_x = false;
        for (int x = 1; x <= n && !found_x; ++x)
            found_x = LR(a, x) == x && UR(x, a) == a;
        if (!found_x) return {false, "4(i-ii)"};
        bool found_y = false;
        for (int y = 1; y <= n && !found_y; ++y)
            found_y = UL(a, y) == y && LL(y, a) == a;
        if (!found_y) return {false, "4(iii-iv)"};
    }

    return {};
}

inline bool biqtest(const BiqMatrix& B) { return biqtest_report(B).ok; }

// ---------------------------------------------------------------------------
// Equational consequences for constraint propagation.
//
// Each equation relates two words in variables a,b,c; the completion search
// compares the two table cells named by an instance once their positions are
// determined. The set below consists of the axiom-1 equalities, axiom 3 in
// switch form, and the twelve further equalities coming from the remaining
// oriented type III moves (mixed crossing signs), which are consequences of
// axioms 1-3 but sharpen propagation. With S(a,b) = (LR(b,a), UR(a,b)) and
// S'(a,b) = (UL(b,a), LL(a,b)) its inverse, they are the componentwise forms
// of S1;S2;S1 = S2;S1;S2, its inverse, and the four conjugated variants
// mixing S and S'.
// ---------------------------------------------------------------------------

namespace relations {

struct Expr {
    int var = -1; // leaf when >= 0 (0=a, 1=b, 2=c)
    Op op = Op::upper_left;
    const Expr* l = nullptr;
    const Expr* r = nullptr;
};

struct Equation {
    const Expr* lhs;
    const Expr* rhs;
    int nvars; // 2 or 3
};

class EquationTable {
public:
    static const EquationTable& instance() {
        static const EquationTable table;
        return table;
    }
    const std::vector<Equation>& equations() const { return eqs_; }

private:
    std::deque<Expr> arena_;
    std::vector<Equation> eqs_;

    const Expr* v(int i) { return &arena_.emplace_back(Expr{i, Op::upper_left, nullptr, nullptr}); }
    const Expr* mk(Op k, const Expr* a, const Expr* b) {
        return &arena_.emplace_back(Expr{-1, k, a, b});
    }
    void eq2(const Expr* l, const Expr* r) { eqs_.push_back({l, r, 2}); }
    void eq3(const Expr* l, const Expr* r) { eqs_.push_back({l, r, 3}); }

    EquationTable() {
        const Expr* a = v(0);
        const Expr* b = v(1);
        const Expr* c = v(2);
        const Op UL = Op::upper_left, UR = Op::upper_right;
        const Op LL = Op::lower_left, LR = Op::lower_right;
        auto w = [&](Op k, const Expr* x, const Expr* y) { return mk(k, x, y); };

        // axiom 1
        eq2(w(UL, w(UR, a, b), w(LR, b, a)), a);
        eq2(w(LL, w(LR, b, a), w(UR, a, b)), b);
        eq2(w(UR, w(UL, a, b), w(LL, b, a)), a);
        eq2(w(LR, w(LL, b, a), w(UL, a, b)), b);

        // axiom 3, all-positive: S1;S2;S1 = S2;S1;S2
        eq3(w(LR, w(LR, c, w(UR, a, b)), w(LR, b, a)), w(LR, w(LR, c, b), a));
        eq3(w(UR, w(LR, b, a), w(LR, c, w(UR, a, b))), w(LR, w(UR, b, c), w(UR, a, w(LR, c, b))));
        eq3(w(UR, w(UR, a, b), c), w(UR, w(UR, a, w(LR, c, b)), w(UR, b, c)));

        // axiom 3, all-negative: S1';S2';S1' = S2';S1';S2'
        eq3(w(UL, w(UL, c, w(LL, a, b)), w(UL, b, a)), w(UL, w(UL, c, b), a));
        eq3(w(LL, w(UL, b, a), w(UL, c, w(LL, a, b)))
            , w(UL, w(LL, b, c), w(LL, a, w(UL, c, b))));
        eq3(w(LL, w(LL, a, b), c), w(LL, w(LL, a, w(UL, c, b)), w(LL, b, c)));

        // mixed: S1';S2;S1 = S2;S1;S2'
        eq3(w(LR, w(LR, c, w(LL, a, b)), w(UL, b, a)), w(LR, w(LR, c, b), a));
        eq3(w(UR, w(UL, b, a), w(LR, c, w(LL, a, b))), w(UL, w(UR, b, c), w(UR, a, w(LR, c, b))));
        eq3(w(UR, w(LL, a, b), c), w(LL, w(UR, a, w(LR, c, b)), w(UR, b, c)));

        // mixed: S1;S2;S1' = S2';S1;S2
        eq3(w(UL, w(LR, c, w(UR, a, b)), w(LR, b, a)), w(LR, w(UL, c, b), a));
        eq3(w(LL, w(LR, b, a), w(LR, c, w(UR, a, b))), w(LR, w(LL, b, c), w(UR, a, w(UL, c, b))));
        eq3(w(UR, w(UR, a, b), c), w(UR, w(UR, a, w(UL, c, b)), w(LL, b, c)));

        // mixed: S1;S2';S1' = S2';S1';S2
        eq3(w(UL, w(UL, c, w(UR, a, b)), w(LR, b, a)), w(UL, w(UL, c, b), a));
        eq3(w(LL, w(LR, b, a), w(UL, c, w(UR, a, b))), w(LR, w(LL, b, c), w(LL, a, w(UL, c, b))));
        eq3(w(LL, w(UR, a, b), c), w(UR, w(LL, a, w(UL, c, b)), w(LL, b, c)));

        // mixed: S1';S2';S1 = S2;S1';S2'
        eq3(w(LR, w(UL, c, w(LL, a, b)), w(UL, b, a)), w(UL, w(LR, c, b), a));
        eq3(w(UR, w(UL, b, a), w(UL, c, w(LL, a, b))), w(UL, w(UR, b, c), w(LL, a, w(LR, c, b))));
        eq3(w(LL, w(LL, a, b), c), w(LL, w(LL, a, w(LR, c, b)), w(UR, b, c)));
    }
};

inline const std::vector<Equation>& all_equations() {
    return EquationTable::instance().equations();
}

// Evaluation of a word against a pattern. value > 0: fully determined;
// value == 0 with has_cell: the cell's position is known but blank;
// value < 0: position not yet determined.
struct EvalResult {
    int value = -1;
    bool has_cell = false;
    Op k = Op::upper_left;
    int row = 0, col = 0;
};

inline EvalResult eval_word(const BiqPattern& P, const Expr* e, const int vals[3]) {
    if (e->var >= 0) {
        EvalResult r;
        r.value = vals[e->var];
        return r;
    }
    EvalResult l = eval_word(P, e->l, vals);
    if (l.value <= 0) return {};
    EvalResult r = eval_word(P, e->r, vals);
    if (r.value <= 0) return {};
    EvalResult out;
    out.has_cell = true;
    out.k = e->op;
    out.row = l.value;
    out.col = r.value;
    out.value = P.at(e->op, out.row, out.col);
    return out;
}

// Walks a word, reporting every cell whose position is determined by the
// current pattern. Used by the branching heuristic.
template <typename Fn>
inline int visit_cells(const BiqPattern& P, const Expr* e, const int vals[3], Fn&& fn) {
    if (e->var >= 0) return vals[e->var];
    int lv = visit_cells(P, e->l, vals, fn);
    if (lv <= 0) return -1;
    int rv = visit_cells(P, e->r, vals, fn);
    if (rv <= 0) return -1;
    int value = P.at(e->op, lv, rv);
    fn(e->op, lv, rv, value);
    return value == 0 ? 0 : value;
}

} // namespace relations

} // namespace biq
