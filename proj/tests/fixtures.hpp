#pragma once

// Shared fixture loaders for the test suites. The bundled targets and knot
// vectors live in the repository's data/ directory.

#include <string>

#include "biq/biq.hpp"

#ifndef BIQ_DATA_DIR
#define BIQ_DATA_DIR "data"
#endif

namespace fixtures {

inline std::string data_path(const std::string& name) {
    return std::string(BIQ_DATA_DIR) + "/" + name;
}

inline biq::BiqMatrix target_t() { return biq::load_biq_matrix(data_path("t.biq")); }
inline biq::BiqMatrix target_t2() { return biq::load_biq_matrix(data_path("t2.biq")); }
inline biq::BiqMatrix target_t4() { return biq::load_biq_matrix(data_path("t4.biq")); }
inline biq::BiqMatrix target_t5() { return biq::load_biq_matrix(data_path("t5.biq")); }

inline biq::Presentation unknot() {
    return biq::parse_presentation_vector(biq::read_file(data_path("un.pv"))).to_presentation();
}
inline biq::Presentation virtual_trefoil() {
    return biq::parse_presentation_vector(biq::read_file(data_path("vt.pv"))).to_presentation();
}
inline biq::Presentation kishino_a() {
    return biq::parse_presentation_vector(biq::read_file(data_path("kishino_a.pv")))
        .to_presentation();
}

// All labeled quandle tables of the given order, by brute force over the
// column permutations fixing their own index.
inline std::vector<biq::QuandleMatrix> enumerate_quandles(int n) {
    std::vector<biq::QuandleMatrix> out;
    biq::QuandleMatrix q(n);
    for (int a = 1; a <= n; ++a) q.set(a, a, a);
    std::vector<std::pair<int, int>> cells;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            if (a != b) cells.push_back({a, b});
    std::vector<int> vals(cells.size(), 1);
    while (true) {
        for (size_t i = 0; i < cells.size(); ++i)
            q.set(cells[i].first, cells[i].second, vals[i]);
        if (biq::is_quandle(q)) out.push_back(q);
        size_t i = 0;
        while (i < vals.size() && vals[i] == n) vals[i++] = 1;
        if (i == vals.size()) break;
        ++vals[i];
    }
    return out;
}

// Brute-force homomorphism count: every assignment of target elements to the
// g generators, filtered by the relations. Independent of the search path in
// bhomlist/bhomcount.
inline long long brute_force_hom_count(const biq::Presentation& P, const biq::BiqMatrix& T) {
    const int g = P.generators;
    const int m = T.n;
    std::vector<int> img(static_cast<size_t>(g), 1);
    long long count = 0;
    while (true) {
        bool ok = true;
        for (const auto& r : P.relations)
            if (T.at(r.op, img[r.input - 1], img[r.oper - 1]) != img[r.output - 1]) {
                ok = false;
                break;
            }
        if (ok) ++count;
        int i = 0;
        while (i < g && img[i] == m) img[i++] = 1;
        if (i == g) break;
        ++img[i];
    }
    return count;
}

} // namespace fixtures
