#pragma once

// Core value types for finite biquandles: the four-operation block tables,
// partial tables (patterns) with 0 as blank, and the basic involutions.
//
// Elements are 1..n throughout; 0 is reserved for blanks in patterns.
// A biquandle of order n is stored as four n x n tables:
//   block 0 (M1): a ^ b-bar   (upper-left operation)
//   block 1 (M2): a ^ b       (upper-right operation)
//   block 2 (M3): a _ b-bar   (lower-left operation)
//   block 3 (M4): a _ b       (lower-right operation)
// The canonical 2n x 2n layout is [[M1|M2],[M3|M4]], row-major.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace biq {

// Thrown for malformed input (bad dimensions, out-of-range entries, parse
// failures). Distinct from negative query results such as biqtest() == false
// or a contradiction during completion.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

enum class Op : std::uint8_t {
    upper_left = 0,   // a ^ b-bar
    upper_right = 1,  // a ^ b
    lower_left = 2,   // a _ b-bar
    lower_right = 3,  // a _ b
};

inline constexpr std::array<Op, 4> all_ops = {Op::upper_left, Op::upper_right,
                                              Op::lower_left, Op::lower_right};

constexpr int block_index(Op k) { return static_cast<int>(k); }

constexpr bool is_upper(Op k) { return block_index(k) < 2; }
constexpr bool is_barred(Op k) { return (block_index(k) & 1) == 0; }

// Obverse interchanges left and right operations (M1<->M2, M3<->M4).
constexpr Op obverse(Op k) { return static_cast<Op>(block_index(k) ^ 1); }

// Flip interchanges upper and lower operations (M1<->M3, M2<->M4).
constexpr Op flip(Op k) { return static_cast<Op>(block_index(k) ^ 2); }

inline const char* op_name(Op k) {
    switch (k) {
    case Op::upper_left: return "upper-left";
    case Op::upper_right: return "upper-right";
    case Op::lower_left: return "lower-left";
    case Op::lower_right: return "lower-right";
    }
    return "?";
}

namespace detail {

inline void check_order(int n) {
    if (n < 1) throw input_error("order must be positive, got " + std::to_string(n));
}

// Shared storage for the four blocks. Rows and columns are addressed 1..n.
struct Tables {
    int n = 0;
    std::array<std::vector<int>, 4> block;

    Tables() = default;
    explicit Tables(int order) : n(order) {
        check_order(order);
        for (auto& b : block) b.assign(static_cast<size_t>(n) * n, 0);
    }

    int at(Op k, int a, int b) const {
        return block[block_index(k)][static_cast<size_t>(a - 1) * n + (b - 1)];
    }
    void set(Op k, int a, int b, int v) {
        block[block_index(k)][static_cast<size_t>(a - 1) * n + (b - 1)] = v;
    }
    bool in_range(int a) const { return a >= 1 && a <= n; }

    // Row-major flattening of the 2n x 2n layout; defines the canonical order.
    std::vector<int> flatten() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(4) * n * n);
        for (int half = 0; half < 2; ++half)
            for (int r = 1; r <= n; ++r)
                for (int blk = 0; blk < 2; ++blk)
                    for (int c = 1; c <= n; ++c)
                        out.push_back(block[2 * half + blk][static_cast<size_t>(r - 1) * n + (c - 1)]);
        return out;
    }

    friend bool operator==(const Tables&, const Tables&) = default;
};

} // namespace detail

// A complete candidate matrix: four n x n tables with entries in 1..n.
// Construction validates shape and entry range only; whether the tables
// actually satisfy the biquandle axioms is decided by biqtest().
struct BiqMatrix : detail::Tables {
    BiqMatrix() = default;
    explicit BiqMatrix(int order) : Tables(order) {}

    void validate() const {
        for (const auto& b : block) {
            if (b.size() != static_cast<size_t>(n) * n)
                throw input_error("block size does not match order " + std::to_string(n));
            for (int v : b)
                if (v < 1 || v > n)
                    throw input_error("matrix entry " + std::to_string(v) +
                                      " outside 1.." + std::to_string(n));
        }
    }
};

// A partial matrix: entries in 0..n, 0 meaning blank. The working state of
// the completion search.
struct BiqPattern : detail::Tables {
    BiqPattern() = default;
    explicit BiqPattern(int order) : Tables(order) {}

    static BiqPattern blank(int order) { return BiqPattern(order); }

    void validate() const {
        for (const auto& b : block) {
            if (b.size() != static_cast<size_t>(n) * n)
                throw input_error("block size does not match order " + std::to_string(n));
            for (int v : b)
                if (v < 0 || v > n)
                    throw input_error("pattern entry " + std::to_string(v) +
                                      " outside 0.." + std::to_string(n));
        }
    }

    bool is_complete() const {
        for (const auto& b : block)
            for (int v : b)
                if (v == 0) return false;
        return true;
    }

    int blank_count() const {
        int k = 0;
        for (const auto& b : block)
            for (int v : b)
                if (v == 0) ++k;
        return k;
    }

    BiqMatrix to_matrix() const {
        if (!is_complete()) throw input_error("pattern is not complete");
        BiqMatrix m(n);
        m.block = block;
        return m;
    }
};

inline BiqPattern to_pattern(const BiqMatrix& m) {
    BiqPattern p(m.n);
    p.block = m.block;
    return p;
}

inline bool flat_less(const detail::Tables& a, const detail::Tables& b) {
    if (a.n != b.n) return a.n < b.n;
    return a.flatten() < b.flatten();
}

// Table lookup a op b; bounds-checked since this backs the public eval API.
inline int eval_op(const BiqMatrix& B, Op k, int a, int b) {
    if (!B.in_range(a) || !B.in_range(b))
        throw input_error("element out of range for order " + std::to_string(B.n));
    return B.at(k, a, b);
}

// The trivial biquandle BT_n: every operation returns its first argument.
inline BiqMatrix trivial_biquandle(int n) {
    BiqMatrix m(n);
    for (auto k : all_ops)
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
                m.set(k, a, b, a);
    return m;
}

inline BiqMatrix obverse(const BiqMatrix& B) {
    BiqMatrix r(B.n);
    for (auto k : all_ops) r.block[block_index(k)] = B.block[block_index(obverse(k))];
    return r;
}

inline BiqMatrix flip(const BiqMatrix& B) {
    BiqMatrix r(B.n);
    for (auto k : all_ops) r.block[block_index(k)] = B.block[block_index(flip(k))];
    return r;
}

// Count of elements idempotent in all four operations.
inline int idempotent_count(const BiqMatrix& B) {
    int count = 0;
    for (int a = 1; a <= B.n; ++a) {
        bool all = true;
        for (auto k : all_ops)
            if (B.at(k, a, a) != a) { all = false; break; }
        if (all) ++count;
    }
    return count;
}

// Connectedness: some element's closure under all four right-translations
// x -> x op y (any op, any y) reaches every element.
inline bool is_connected(const BiqMatrix& B) {
    const int n = B.n;
    for (int start = 1; start <= n; ++start) {
        std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
        std::vector<int> queue = {start};
        seen[start] = 1;
        int reached = 1;
        while (!queue.empty()) {
            int x = queue.back();
            queue.pop_back();
            for (auto k : all_ops)
                for (int y = 1; y <= n; ++y) {
                    int z = B.at(k, x, y);
                    if (!seen[z]) {
                        seen[z] = 1;
                        ++reached;
                        queue.push_back(z);
                    }
                }
        }
        if (reached == n) return true;
    }
    return false;
}

} // namespace biq
