#pragma once

// Homomorphism enumeration and counting into finite target biquandles,
// isomorphism testing, automorphism groups with small-group identification,
// and reduction of matrix lists modulo isomorphism / flip / obverse.

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <vector>

#include "biq/axioms.hpp"
#include "biq/core.hpp"
#include "biq/presentation.hpp"

namespace biq {

// A total or partial map from source generators to target elements;
// image[i-1] is the image of generator i, 0 meaning unassigned.
struct HomMap {
    int source = 0;
    int target = 0;
    std::vector<int> image;

    friend bool operator==(const HomMap&, const HomMap&) = default;
};

namespace detail_hom {

// inv[k][(v-1)*n + (b-1)] = the unique u with T.at(k, u, b) == v. Well
// defined because columns of a biquandle block are permutations.
struct ColumnInverse {
    int n = 0;
    std::array<std::vector<int>, 4> inv;

    static ColumnInverse build(const BiqMatrix& T) {
        ColumnInverse ci;
        ci.n = T.n;
        for (auto k : all_ops) {
            auto& tab = ci.inv[block_index(k)];
            tab.assign(static_cast<size_t>(T.n) * T.n, 0);
            for (int u = 1; u <= T.n; ++u)
                for (int b = 1; b <= T.n; ++b)
                    tab[static_cast<size_t>(T.at(k, u, b) - 1) * T.n + (b - 1)] = u;
        }
        return ci;
    }
    int at(Op k, int v, int b) const {
        return inv[block_index(k)][static_cast<size_t>(v - 1) * n + (b - 1)];
    }
};

// Propagates homomorphism constraints over the relation list: outputs forced
// forward from input+operator, inputs recovered backward from output+operator
// through the column inverses. Returns false on conflict.
inline bool bhomfill(const Presentation& P, const BiqMatrix& T, const ColumnInverse& ci,
                     std::vector<int>& img) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : P.relations) {
            int vi = img[r.input - 1];
            int vj = img[r.oper - 1];
            int vk = img[r.output - 1];
            if (vi != 0 && vj != 0) {
                int forced = T.at(r.op, vi, vj);
                if (vk == 0) {
                    img[r.output - 1] = forced;
                    changed = true;
                } else if (vk != forced) {
                    return false;
                }
            } else if (vk != 0 && vj != 0) {
                int forced = ci.at(r.op, vk, vj);
                if (vi == 0) {
                    img[r.input - 1] = forced;
                    changed = true;
                } else if (vi != forced) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline bool injective_so_far(const std::vector<int>& img, int m) {
    std::vector<char> used(static_cast<size_t>(m) + 1, 0);
    for (int v : img) {
        if (v == 0) continue;
        if (used[v]) return false;
        used[v] = 1;
    }
    return true;
}

// Depth-first enumeration of total maps; sink returns false to stop early.
template <typename Sink>
inline bool hom_dfs(const Presentation& P, const BiqMatrix& T, const ColumnInverse& ci,
                    std::vector<int> img, bool bijective, Sink&& sink) {
    if (!bhomfill(P, T, ci, img)) return true;
    if (bijective && !injective_so_far(img, T.n)) return true;
    auto slot = std::find(img.begin(), img.end(), 0);
    if (slot == img.end()) return sink(img);
    size_t index = static_cast<size_t>(slot - img.begin());
    for (int v = 1; v <= T.n; ++v) {
        std::vector<int> next = img;
        next[index] = v;
        if (!hom_dfs(P, T, ci, std::move(next), bijective, sink)) return false;
    }
    return true;
}

inline void require_target(const BiqMatrix& T) {
    if (!biqtest(T)) throw input_error("target matrix is not a biquandle");
}

template <typename Sink>
inline void run_hom_search(const Presentation& P, const BiqMatrix& T, bool bijective,
                           Sink&& sink) {
    P.validate();
    ColumnInverse ci = ColumnInverse::build(T);
    std::vector<int> img(static_cast<size_t>(P.generators), 0);
    hom_dfs(P, T, ci, std::move(img), bijective, sink);
}

inline long long count_homs(const Presentation& P, const BiqMatrix& T) {
    long long count = 0;
    run_hom_search(P, T, false, [&](const std::vector<int>&) {
        ++count;
        return true;
    });
    return count;
}

inline std::vector<HomMap> list_homs(const Presentation& P, const BiqMatrix& T,
                                     bool bijective) {
    std::vector<HomMap> out;
    run_hom_search(P, T, bijective, [&](const std::vector<int>& img) {
        out.push_back({P.generators, T.n, img});
        return true;
    });
    std::sort(out.begin(), out.end(),
              [](const HomMap& a, const HomMap& b) { return a.image < b.image; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace detail_hom

// All homomorphisms from the presented biquandle into T, in ascending
// lexicographic order of the assignment vector.
inline std::vector<HomMap> bhomlist(const Presentation& P, const BiqMatrix& T) {
    detail_hom::require_target(T);
    return detail_hom::list_homs(P, T, false);
}

// The counting invariant |Hom(P, T)|.
inline long long bhomcount(const Presentation& P, const BiqMatrix& T) {
    detail_hom::require_target(T);
    return detail_hom::count_homs(P, T);
}

// All isomorphisms from A to B; empty when none exist (in particular when the
// orders differ).
inline std::vector<HomMap> bisolist(const BiqMatrix& A, const BiqMatrix& B) {
    detail_hom::require_target(A);
    detail_hom::require_target(B);
    if (A.n != B.n) return {};
    return detail_hom::list_homs(presentation_of_matrix(A), B, true);
}

namespace detail_hom {

// Cheap isomorphism invariant: for each block, the sorted multiset of column
// permutation cycle types, plus the per-element idempotence profile.
struct Fingerprint {
    std::array<std::vector<std::vector<int>>, 4> column_cycles;
    std::vector<int> idem_profile;

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

inline Fingerprint fingerprint(const BiqMatrix& B) {
    Fingerprint fp;
    const int n = B.n;
    for (auto k : all_ops) {
        auto& list = fp.column_cycles[block_index(k)];
        for (int b = 1; b <= n; ++b) {
            std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
            std::vector<int> cycles;
            for (int s = 1; s <= n; ++s) {
                if (seen[s]) continue;
                int len = 0, x = s;
                while (!seen[x]) {
                    seen[x] = 1;
                    ++len;
                    x = B.at(k, x, b);
                }
                cycles.push_back(len);
            }
            std::sort(cycles.begin(), cycles.end());
            list.push_back(std::move(cycles));
        }
        std::sort(list.begin(), list.end());
    }
    for (int a = 1; a <= n; ++a) {
        int mask = 0;
        for (auto k : all_ops)
            if (B.at(k, a, a) == a) mask |= 1 << block_index(k);
        fp.idem_profile.push_back(mask);
    }
    std::sort(fp.idem_profile.begin(), fp.idem_profile.end());
    return fp;
}

// Existence-only isomorphism test with early exit; assumes both are valid
// biquandles of equal order.
inline bool isomorphic_unchecked(const BiqMatrix& A, const BiqMatrix& B) {
    if (fingerprint(A) != fingerprint(B)) return false;
    bool found = false;
    run_hom_search(presentation_of_matrix(A), B, true, [&](const std::vector<int>&) {
        found = true;
        return false;
    });
    return found;
}

} // namespace detail_hom

inline bool isomorphic(const BiqMatrix& A, const BiqMatrix& B) {
    detail_hom::require_target(A);
    detail_hom::require_target(B);
    if (A.n != B.n) return false;
    return detail_hom::isomorphic_unchecked(A, B);
}

inline bool self_flip(const BiqMatrix& B) { return isomorphic(B, flip(B)); }
inline bool self_obverse(const BiqMatrix& B) { return isomorphic(B, obverse(B)); }

// ---------------------------------------------------------------------------
// Small-group identification
// ---------------------------------------------------------------------------

// A finite permutation group described by its order, abelian flag and element
// order multiset; this triple pins down every group of order <= 8, for which
// a canonical name is attached.
struct GroupLabel {
    long long order = 0;
    bool abelian = true;
    std::vector<int> element_orders;
    std::string name; // empty when no name is assigned

    std::string display() const {
        if (!name.empty()) return name;
        return "order " + std::to_string(order) + (abelian ? " abelian" : " non-abelian");
    }
    friend bool operator==(const GroupLabel&, const GroupLabel&) = default;
};

namespace detail_hom {

inline std::vector<int> compose(const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = p[q[i] - 1];
    return r;
}

inline int element_order(const std::vector<int>& p) {
    std::vector<int> id(p.size());
    std::iota(id.begin(), id.end(), 1);
    std::vector<int> cur = p;
    int k = 1;
    while (cur != id) {
        cur = compose(cur, p);
        ++k;
    }
    return k;
}

} // namespace detail_hom

// Names a permutation group given as an explicit element list. Throws
// input_error when the list is not a group under composition.
inline GroupLabel identify_group(const std::vector<std::vector<int>>& perms) {
    if (perms.empty()) throw input_error("empty permutation list");
    const size_t deg = perms[0].size();
    std::vector<int> id(deg);
    std::iota(id.begin(), id.end(), 1);
    for (const auto& p : perms) {
        if (p.size() != deg) throw input_error("permutations act on different sets");
        std::vector<char> seen(deg + 1, 0);
        for (int v : p) {
            if (v < 1 || v > static_cast<int>(deg) || seen[v])
                throw input_error("list contains a non-permutation");
            seen[v] = 1;
        }
    }
    auto sorted = perms;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw input_error("duplicate permutations in list");
    auto contains = [&](const std::vector<int>& p) {
        return std::binary_search(sorted.begin(), sorted.end(), p);
    };
    if (!contains(id)) throw input_error("list lacks the identity");
    for (const auto& p : perms) {
        std::vector<int> inv(deg);
        for (size_t i = 0; i < deg; ++i) inv[p[i] - 1] = static_cast<int>(i) + 1;
        if (!contains(inv)) throw input_error("list is not closed under inverses");
        for (const auto& q : perms)
            if (!contains(detail_hom::compose(p, q)))
                throw input_error("list is not closed under composition");
    }

    GroupLabel label;
    label.order = static_cast<long long>(perms.size());
    for (const auto& p : perms) {
        label.element_orders.push_back(detail_hom::element_order(p));
        for (const auto& q : perms)
            if (detail_hom::compose(p, q) != detail_hom::compose(q, p)) label.abelian = false;
    }
    std::sort(label.element_orders.begin(), label.element_orders.end());

    const auto& orders = label.element_orders;
    int max_order = orders.back();
    switch (label.order) {
    case 1: label.name = "Z1"; break;
    case 2: label.name = "Z2"; break;
    case 3: label.name = "Z3"; break;
    case 4: label.name = max_order == 4 ? "Z4" : "Z2+Z2"; break;
    case 5: label.name = "Z5"; break;
    case 6: label.name = label.abelian ? "Z6" : "S3"; break;
    case 7: label.name = "Z7"; break;
    case 8:
        if (label.abelian)
            label.name = max_order == 8 ? "Z8" : (max_order == 4 ? "Z4+Z2" : "Z2+Z2+Z2");
        else
            label.name = std::count(orders.begin(), orders.end(), 2) == 1 ? "Q8" : "D4";
        break;
    default: break; // larger groups keep an empty name
    }
    return label;
}

// The automorphism group of B: all self-isomorphisms plus identification.
struct AutResult {
    std::vector<HomMap> automorphisms;
    GroupLabel label;
};

inline AutResult baut(const BiqMatrix& B) {
    AutResult r;
    r.automorphisms = bisolist(B, B);
    std::vector<std::vector<int>> perms;
    perms.reserve(r.automorphisms.size());
    for (const auto& h : r.automorphisms) perms.push_back(h.image);
    r.label = identify_group(perms);
    return r;
}

// ---------------------------------------------------------------------------
// List reduction
// ---------------------------------------------------------------------------

enum class ReduceMode {
    iso,              // keep one representative per isomorphism class
    iso_flip_obverse, // additionally identify flips, obverses, obverse flips
};

// Stable left-to-right scan: an entry is kept unless equivalent to a kept
// predecessor under the mode.
inline std::vector<BiqMatrix> breducelist(const std::vector<BiqMatrix>& list, ReduceMode mode) {
    struct Kept {
        std::vector<BiqMatrix> variants;
        std::vector<detail_hom::Fingerprint> prints;
    };
    std::vector<BiqMatrix> out;
    std::vector<Kept> kept;
    for (const auto& B : list) {
        detail_hom::require_target(B);
        auto fp = detail_hom::fingerprint(B);
        bool duplicate = false;
        for (const auto& k : kept) {
            for (size_t i = 0; i < k.variants.size() && !duplicate; ++i) {
                if (B.n != k.variants[i].n || fp != k.prints[i]) continue;
                duplicate = detail_hom::isomorphic_unchecked(B, k.variants[i]);
            }
            if (duplicate) break;
        }
        if (duplicate) continue;
        Kept entry;
        entry.variants.push_back(B);
        if (mode == ReduceMode::iso_flip_obverse) {
            entry.variants.push_back(flip(B));
            entry.variants.push_back(obverse(B));
            entry.variants.push_back(obverse(flip(B)));
        }
        for (const auto& v : entry.variants) entry.prints.push_back(detail_hom::fingerprint(v));
        kept.push_back(std::move(entry));
        out.push_back(B);
    }
    return out;
}

} // namespace biq
