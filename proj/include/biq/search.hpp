#pragma once

// Completion of partial biquandle matrices and exhaustive enumeration.
//
// biqfill propagates forced entries to a fixpoint: equalities from axioms 1
// and 3 (plus the derived mixed type III equations), the inverse assertions
// of axiom 2, the row pairing of axiom 4, and completion of columns with a
// single blank. A contradiction is a normal outcome, reported as nullopt.
//
// biqlist branches on the blank most likely to complete a row, column, or
// equation word, tries each available value in ascending order, and filters
// finished tables through biqtest. Output is in canonical ascending order
// (lexicographic on the row-major 2n x 2n flattening).

#include <algorithm>
#include <atomic>
#include <optional>
#include <thread>
#include <tuple>
#include <vector>

#include "biq/axioms.hpp"
#include "biq/core.hpp"

namespace biq {

// Values placeable at a blank position without violating the column
// permutation property or the one-fixed-column-entry-per-row property.
// Ascending; empty signals a dead branch.
inline std::vector<int> avail(const BiqPattern& P, Op k, int row, int col) {
    if (!P.in_range(row) || !P.in_range(col))
        throw input_error("position out of range for order " + std::to_string(P.n));
    if (P.at(k, row, col) != 0) throw input_error("position is not blank");

    const int n = P.n;
    std::vector<char> used(static_cast<size_t>(n) + 1, 0);
    for (int r = 1; r <= n; ++r) {
        int v = P.at(k, r, col);
        if (v != 0) used[v] = 1;
    }
    bool row_has_fixed = false;
    int row_blanks = 0;
    for (int c = 1; c <= n; ++c) {
        int v = P.at(k, row, c);
        if (v == 0)
            ++row_blanks;
        else if (v == c && c != col)
            row_has_fixed = true;
    }

    std::vector<int> out;
    for (int v = 1; v <= n; ++v) {
        if (used[v]) continue;
        if (v == col && row_has_fixed) continue;
        // The sole remaining blank of a row without a fixed-column entry must
        // supply one.
        if (v != col && !row_has_fixed && row_blanks == 1) continue;
        out.push_back(v);
    }
    return out;
}

namespace detail_search {

// Writes v at (k,row,col) unless it conflicts with the present value, the
// column permutation property, or a second fixed-column entry in the row.
inline bool assign(BiqPattern& P, Op k, int row, int col, int v, bool& changed) {
    int cur = P.at(k, row, col);
    if (cur != 0) return cur == v;
    for (int r = 1; r <= P.n; ++r)
        if (P.at(k, r, col) == v) return false;
    if (v == col)
        for (int c = 1; c <= P.n; ++c)
            if (c != col && P.at(k, row, c) == c) return false;
    P.set(k, row, col, v);
    changed = true;
    return true;
}

// Column duplicates, rows with two fixed-column entries, and full rows with
// none are all contradictions.
inline bool structurally_consistent(const BiqPattern& P) {
    const int n = P.n;
    for (auto k : all_ops) {
        for (int c = 1; c <= n; ++c) {
            std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
            for (int r = 1; r <= n; ++r) {
                int v = P.at(k, r, c);
                if (v == 0) continue;
                if (seen[v]) return false;
                seen[v] = 1;
            }
        }
        for (int r = 1; r <= n; ++r) {
            int fixed = 0, blanks = 0;
            for (int c = 1; c <= n; ++c) {
                int v = P.at(k, r, c);
                if (v == 0)
                    ++blanks;
                else if (v == c)
                    ++fixed;
            }
            if (fixed > 1) return false;
            if (blanks == 0 && fixed == 0) return false;
        }
    }
    return true;
}

// Axiom 4 links the fixed-column entries of paired blocks: a_x = x forces
// x^a = a and conversely; a^y-bar = y forces y_a-bar = a and conversely.
inline bool propagate_axiom4(BiqPattern& P, bool& changed) {
    const int n = P.n;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            if (P.at(Op::lower_right, a, b) == b &&
                !assign(P, Op::upper_right, b, a, a, changed))
                return false;
            if (P.at(Op::upper_right, a, b) == b &&
                !assign(P, Op::lower_right, b, a, a, changed))
                return false;
            if (P.at(Op::upper_left, a, b) == b &&
                !assign(P, Op::lower_left, b, a, a, changed))
                return false;
            if (P.at(Op::lower_left, a, b) == b &&
                !assign(P, Op::upper_left, b, a, a, changed))
                return false;
        }
    return true;
}

// Axiom 2 witnesses are forced by the column permutation property: x^b-bar=a
// with c = b_x-bar known forces a^c = x and c_a = b; y^b = a with d = b_y
// known forces a^d-bar = y and d_a-bar = b.
inline bool propagate_axiom2(BiqPattern& P, bool& changed) {
    const int n = P.n;
    for (int x = 1; x <= n; ++x)
        for (int b = 1; b <= n; ++b) {
            int a = P.at(Op::upper_left, x, b);
            if (a != 0) {
                int c = P.at(Op::lower_left, b, x);
                if (c != 0) {
                    if (!assign(P, Op::upper_right, a, c, x, changed)) return false;
                    if (!assign(P, Op::lower_right, c, a, b, changed)) return false;
                }
            }
            int a2 = P.at(Op::upper_right, x, b);
            if (a2 != 0) {
                int d = P.at(Op::lower_right, b, x);
                if (d != 0) {
                    if (!assign(P, Op::upper_left, a2, d, x, changed)) return false;
                    if (!assign(P, Op::lower_left, d, a2, b, changed)) return false;
                }
            }
        }
    return true;
}

inline bool propagate_equations(BiqPattern& P, bool& changed) {
    const int n = P.n;
    int vals[3];
    for (const auto& eq : relations::all_equations()) {
        const int cmax = eq.nvars == 3 ? n : 1;
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
                for (int c = 1; c <= cmax; ++c) {
                    vals[0] = a;
                    vals[1] = b;
                    vals[2] = c;
                    auto L = relations::eval_word(P, eq.lhs, vals);
                    if (L.value < 0) continue;
                    auto R = relations::eval_word(P, eq.rhs, vals);
                    if (R.value < 0) continue;
                    if (L.value > 0 && R.value > 0) {
                        if (L.value != R.value) return false;
                    } else if (L.value > 0 && R.has_cell) {
                        if (!assign(P, R.k, R.row, R.col, L.value, changed)) return false;
                    } else if (R.value > 0 && L.has_cell) {
                        if (!assign(P, L.k, L.row, L.col, R.value, changed)) return false;
                    }
                }
    }
    return true;
}

inline bool complete_columns(BiqPattern& P, bool& changed) {
    const int n = P.n;
    for (auto k : all_ops)
        for (int c = 1; c <= n; ++c) {
            int blank_row = 0, blanks = 0;
            for (int r = 1; r <= n; ++r)
                if (P.at(k, r, c) == 0) {
                    ++blanks;
                    blank_row = r;
                }
            if (blanks != 1) continue;
            auto options = avail(P, k, blank_row, c);
            if (options.empty()) return false;
            if (!assign(P, k, blank_row, c, options.front(), changed)) return false;
        }
    return true;
}

} // namespace detail_search

// Propagation to fixpoint. nullopt reports a contradiction.
inline std::optional<BiqPattern> biqfill(BiqPattern P) {
    P.validate();
    bool changed = true;
    while (changed) {
        changed = false;
        if (!detail_search::structurally_consistent(P)) return std::nullopt;
        if (!detail_search::propagate_axiom4(P, changed)) return std::nullopt;
        if (!detail_search::propagate_axiom2(P, changed)) return std::nullopt;
        if (!detail_search::propagate_equations(P, changed)) return std::nullopt;
        if (!detail_search::complete_columns(P, changed)) return std::nullopt;
    }
    return P;
}

namespace detail_search {

struct Blank {
    Op k = Op::upper_left;
    int row = 0, col = 0;
};

// Picks the blank most likely to complete a row, column, or equation word:
// maximises determined cells in its column and row plus, for every equation
// instance whose word reaches the cell, the instance's determined-cell count.
// Ties break on smallest (block, row, column).
inline Blank ratezero(const BiqPattern& P) {
    const int n = P.n;
    std::array<std::vector<long>, 4> score;
    for (auto& s : score) s.assign(static_cast<size_t>(n) * n, 0);
    auto idx = [n](int r, int c) { return static_cast<size_t>(r - 1) * n + (c - 1); };

    for (auto k : all_ops) {
        std::vector<int> col_filled(static_cast<size_t>(n) + 1, 0);
        std::vector<int> row_filled(static_cast<size_t>(n) + 1, 0);
        for (int r = 1; r <= n; ++r)
            for (int c = 1; c <= n; ++c)
                if (P.at(k, r, c) != 0) {
                    ++col_filled[c];
                    ++row_filled[r];
                }
        for (int r = 1; r <= n; ++r)
            for (int c = 1; c <= n; ++c)
                if (P.at(k, r, c) == 0)
                    score[block_index(k)][idx(r, c)] = col_filled[c] + row_filled[r];
    }

    int vals[3];
    std::vector<Blank> touched;
    for (const auto& eq : relations::all_equations()) {
        const int cmax = eq.nvars == 3 ? n : 1;
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
                for (int c = 1; c <= cmax; ++c) {
                    vals[0] = a;
                    vals[1] = b;
                    vals[2] = c;
                    touched.clear();
                    int determined = 0;
                    auto collect = [&](Op k, int r, int cc, int value) {
                        if (value == 0)
                            touched.push_back({k, r, cc});
                        else
                            ++determined;
                    };
                    relations::visit_cells(P, eq.lhs, vals, collect);
                    relations::visit_cells(P, eq.rhs, vals, collect);
                    if (determined == 0) continue;
                    for (const auto& t : touched)
                        score[block_index(t.k)][idx(t.row, t.col)] += determined;
                }
    }

    Blank best;
    long best_score = -1;
    for (auto k : all_ops)
        for (int r = 1; r <= n; ++r)
            for (int c = 1; c <= n; ++c) {
                if (P.at(k, r, c) != 0) continue;
                long s = score[block_index(k)][idx(r, c)];
                if (s > best_score) {
                    best_score = s;
                    best = {k, r, c};
                }
            }
    return best;
}

struct DfsState {
    std::vector<BiqMatrix> out;
    long long limit = -1;
    bool stopped = false;
};

inline void biqlist_dfs(const BiqPattern& P, DfsState& st) {
    if (st.stopped) return;
    if (P.is_complete()) {
        BiqMatrix M = P.to_matrix();
        if (biqtest(M)) {
            st.out.push_back(std::move(M));
            if (st.limit >= 0 && static_cast<long long>(st.out.size()) >= st.limit)
                st.stopped = true;
        }
        return;
    }
    Blank pick = ratezero(P);
    for (int v : avail(P, pick.k, pick.row, pick.col)) {
        if (st.stopped) return;
        BiqPattern child = P;
        child.set(pick.k, pick.row, pick.col, v);
        if (auto filled = biqfill(std::move(child))) biqlist_dfs(*filled, st);
    }
}

inline void sort_canonical(std::vector<BiqMatrix>& list) {
    std::sort(list.begin(), list.end(),
              [](const BiqMatrix& a, const BiqMatrix& b) { return flat_less(a, b); });
    list.erase(std::unique(list.begin(), list.end()), list.end());
}

} // namespace detail_search

struct BiqlistOptions {
    long long limit = -1; // -1: unbounded; otherwise stop after this many
    int jobs = 1;         // subtree workers; output is canonical either way
};

// All completions of P that pass biqtest, canonically ordered. With a limit,
// search stops after that many completions and the collected prefix is
// ordered among itself.
inline std::vector<BiqMatrix> biqlist(const BiqPattern& P, BiqlistOptions opt = {}) {
    P.validate();
    auto root = biqfill(P);
    if (!root) return {};

    if (opt.jobs <= 1 || opt.limit >= 0) {
        detail_search::DfsState st;
        st.limit = opt.limit;
        detail_search::biqlist_dfs(*root, st);
        detail_search::sort_canonical(st.out);
        return st.out;
    }

    // Parallel mode: widen the frontier breadth-first, then run subtrees on
    // worker threads. The final canonical sort makes output independent of
    // scheduling.
    std::vector<BiqPattern> frontier = {*root};
    std::vector<BiqMatrix> done;
    const size_t want = static_cast<size_t>(opt.jobs) * 8;
    while (frontier.size() < want) {
        auto it = std::find_if(frontier.begin(), frontier.end(),
                               [](const BiqPattern& p) { return !p.is_complete(); });
        if (it == frontier.end()) break;
        BiqPattern p = std::move(*it);
        frontier.erase(it);
        auto pick = detail_search::ratezero(p);
        for (int v : avail(p, pick.k, pick.row, pick.col)) {
            BiqPattern child = p;
            child.set(pick.k, pick.row, pick.col, v);
            if (auto filled = biqfill(std::move(child))) frontier.push_back(std::move(*filled));
        }
    }
    for (auto& p : frontier)
        if (p.is_complete()) {
            BiqMatrix M = p.to_matrix();
            if (biqtest(M)) done.push_back(std::move(M));
        }
    frontier.erase(std::remove_if(frontier.begin(), frontier.end(),
                                  [](const BiqPattern& p) { return p.is_complete(); }),
                   frontier.end());

    std::vector<detail_search::DfsState> states(frontier.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < frontier.size(); i = next.fetch_add(1))
            detail_search::biqlist_dfs(frontier[i], states[i]);
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < opt.jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    for (auto& st : states)
        done.insert(done.end(), std::make_move_iterator(st.out.begin()),
                    std::make_move_iterator(st.out.end()));
    detail_search::sort_canonical(done);
    return done;
}

// Every biquandle of the given order.
inline std::vector<BiqMatrix> enumerate_biquandles(int order, BiqlistOptions opt = {}) {
    return biqlist(BiqPattern::blank(order), opt);
}

} // namespace biq
