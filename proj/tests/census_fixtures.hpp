#pragma once

// Classification fixtures: the published order-2, order-3 and order-4
// representative matrices, transcribed verbatim together with their
// printed self-flip flags and automorphism group labels. Print anomalies
// are adjudicated computationally by the acceptance suite.

#include <vector>

namespace census {

struct PublishedEntry {
    int table;              // source table number, 1..8
    int index;              // position within the table, 1-based
    const char* matrix;     // .biq text, verbatim transcription
    bool self_flip;         // printed flag
    const char* aut_label;  // printed label, normalized to Zn/+/S3 form
};

inline const std::vector<PublishedEntry>& order2_published() {
    static const std::vector<PublishedEntry> entries = {
        {1, 1,
         "biq 2\n"
         "1 1 1 1\n"
         "2 2 2 2\n"
         "1 1 1 1\n"
         "2 2 2 2\n",
         true, "Z2"},
        {1, 2,
         "biq 2\n"
         "2 2 2 2\n"
         "1 1 1 1\n"
         "2 2 2 2\n"
         "1 1 1 1\n",
         true, "Z2"},
    };
    return entries;
}

inline const std::vector<PublishedEntry>& order3_published() {
    static const std::vector<PublishedEntry> entries = {
        {2, 1,
         "biq 3\n"
         "1 1 1 1 1 1\n"
         "3 3 3 3 3 3\n"
         "2 2 2 2 2 2\n"
         "1 3 2 1 3 2\n"
         "2 1 3 2 1 3\n"
         "3 2 1 3 2 1\n",
         false, "Z2"},
        {2, 2,
         "biq 3\n"
         "1 3 2 1 3 2\n"
         "3 2 1 3 2 1\n"
         "2 1 3 2 1 3\n"
         "1 1 1 1 1 1\n"
         "2 2 2 2 2 2\n"
         "3 3 3 3 3 3\n",
         false, "S3"},
        {2, 3,
         "biq 3\n"
         "2 1 3 3 2 1\n"
         "1 3 2 2 1 3\n"
         "3 2 1 1 3 2\n"
         "2 2 2 3 3 3\n"
         "3 3 3 1 1 1\n"
         "1 1 1 2 2 2\n",
         false, "Z3"},
        {2, 4,
         "biq 3\n"
         "2 2 2 3 3 3\n"
         "3 3 3 1 1 1\n"
         "1 1 1 2 2 2\n"
         "3 3 3 2 2 2\n"
         "1 1 1 3 3 3\n"
         "2 2 2 1 1 1\n",
         true, "Z3"},
        {2, 5,
         "biq 3\n"
         "1 1 1 1 1 1\n"
         "2 2 2 2 2 2\n"
         "3 3 3 3 3 3\n"
         "1 1 2 1 1 2\n"
         "2 2 1 2 2 1\n"
         "3 3 3 3 3 3\n",
         false, "Z2"},
        {2, 6,
         "biq 3\n"
         "1 1 1 1 1 1\n"
         "2 3 3 2 3 3\n"
         "3 2 2 3 2 2\n"
         "1 1 1 1 1 1\n"
         "2 3 3 2 3 3\n"
         "3 2 2 3 2 2\n",
         true, "Z2"},
        {2, 7,
         "biq 3\n"
         "1 1 1 1 1 1\n"
         "2 3 3 2 3 3\n"
         "3 2 2 3 2 2\n"
         "1 1 1 1 1 1\n"
         "3 3 3 3 3 3\n"
         "2 2 2 2 2 2\n",
         false, "Z2"},
        {2, 8,
         "biq 3\n"
         "1 1 1 1 1 1\n"
         "3 2 2 3 2 2\n"
         "2 3 3 2 3 3\n"
         "1 1 1 1 1 1\n"
         "3 2 2 3 2 2\n"
         "2 3 3 2 3 3\n",
         true, "Z2"},
        {2, 9,
         "biq 3\n"
         "1 1 1 1 1 1\n"
         "3 3 3 3 3 3\n"
         "2 2 2 2 2 2\n"
         "1 1 1 1 1 1\n"
         "3 3 3 3 3 3\n"
         "2 2 2 2 2 2\n",
         true, "Z2"},
        {2, 10,
         "biq 3\n"
         "1 1 1 1 1 1\n"
         "2 2 2 2 2 2\n"
         "3 3 3 3 3 3\n"
         "1 1 1 1 1 1\n"
         "2 2 2 2 2 2\n"
         "3 3 3 3 3 3\n",
         true, "S3"},
    };
    return entries;
}

inline const std::vector<PublishedEntry>& order4_nonqbiq_published() {
    static const std::vector<PublishedEntry> entries = {
        {3, 1,
         "biq 4\n"
         "2 2 2 2 2 2 2 2\n"
         "1 1 1 1 1 1 1 1\n"
         "4 4 4 4 4 4 4 4\n"
         "3 3 3 3 3 3 3 3\n"
         "3 2 2 3 3 2 2 3\n"
         "1 4 4 1 1 4 4 1\n"
         "4 1 1 4 4 1 1 4\n"
         "2 3 3 2 2 3 3 2\n",
         false, "Z2+Z2"},
        {3, 2,
         "biq 4\n"
         "2 4 3 1 4 1 3 2\n"
         "3 1 2 4 2 3 1 4\n"
         "1 3 4 2 1 4 2 3\n"
         "4 2 1 3 3 2 4 1\n"
         "3 3 3 3 3 3 3 3\n"
         "4 4 4 4 4 4 4 4\n"
         "1 1 1 1 1 1 1 1\n"
         "2 2 2 2 2 2 2 2\n",
         false, "Z2+Z2"},
        {3, 3,
         "biq 4\n"
         "1 4 2 3 1 3 4 2\n"
         "2 3 1 4 3 1 2 4\n"
         "4 1 3 2 2 4 3 1\n"
         "3 2 4 1 4 2 1 3\n"
         "1 3 4 2 1 4 2 3\n"
         "3 1 2 4 2 3 1 4\n"
         "2 4 3 1 4 1 3 2\n"
         "4 2 1 3 3 2 4 1\n",
         true, "Z2"},
        {3, 4,
         "biq 4\n"
         "1 4 2 3 1 3 4 2\n"
         "2 3 1 4 3 1 2 4\n"
         "4 1 3 2 2 4 3 1\n"
         "3 2 4 1 4 2 1 3\n"
         "1 1 1 1 1 1 1 1\n"
         "3 3 3 3 4 4 4 4\n"
         "4 4 4 4 2 2 2 2\n"
         "2 2 2 2 3 3 3 3\n",
         false, "Z3"},
        {3, 5,
         "biq 4\n"
         "1 3 4 2 1 4 2 3\n"
         "3 1 2 4 4 1 3 2\n"
         "4 2 1 3 2 3 1 4\n"
         "2 4 3 1 3 2 4 1\n"
         "1 1 1 1 1 1 1 1\n"
         "3 3 3 3 4 4 4 4\n"
         "4 4 4 4 2 2 2 2\n"
         "2 2 2 2 3 3 3 3\n",
         false, "Z3"},
        {3, 6,
         "biq 4\n"
         "3 2 1 2 3 2 1 2\n"
         "1 3 2 1 1 3 2 1\n"
         "2 1 3 3 2 1 3 3\n"
         "4 4 4 4 4 4 4 4\n"
         "2 2 2 2 2 2 2 2\n"
         "1 1 1 1 1 1 1 1\n"
         "3 3 3 3 3 3 3 3\n"
         "4 4 4 4 4 4 4 4\n",
         false, "Z2"},
        {3, 7,
         "biq 4\n"
         "3 2 1 1 3 2 1 1\n"
         "1 3 2 2 1 3 2 2\n"
         "2 1 3 3 2 1 3 3\n"
         "4 4 4 4 4 4 4 4\n"
         "2 2 2 1 2 2 2 1\n"
         "1 1 1 2 1 1 1 2\n"
         "3 3 3 3 3 3 3 3\n"
         "4 4 4 4 4 4 4 4\n",
         false, "Z3"},
        {3, 8,
         "biq 4\n"
         "3 2 4 1 3 2 1 4\n"
         "4 1 3 2 1 3 4 2\n"
         "2 3 1 4 4 2 1 3\n"
         "1 4 2 3 2 4 3 1\n"
         "3 1 2 4 3 2 4 1\n"
         "1 3 4 2 4 1 3 2\n"
         "4 2 1 3 2 3 1 4\n"
         "2 4 3 1 1 4 2 3\n",
         true, "Z2"},
        {3, 9,
         "biq 4\n"
         "1 1 1 2 1 1 1 3\n"
         "2 2 2 3 2 2 2 1\n"
         "3 3 3 1 3 3 3 2\n"
         "4 4 4 4 4 4 4 4\n"
         "1 3 2 3 1 3 2 2\n"
         "3 2 1 1 3 2 1 3\n"
         "2 1 3 2 2 1 3 1\n"
         "4 4 4 4 4 4 4 4\n",
         false, "Z3"},
        {3, 10,
         "biq 4\n"
         "1 1 1 2 1 1 1 2\n"
         "2 2 2 3 2 2 2 1\n"
         "3 3 3 1 3 3 3 3\n"
         "4 4 4 4 4 4 4 4\n"
         "1 3 2 2 1 3 2 2\n"
         "3 2 1 1 3 2 1 1\n"
         "2 1 3 3 2 1 3 3\n"
         "4 4 4 4 4 4 4 4\n",
         false, "Z2"},
        {4, 1,
         "biq 4\n"
         "2 2 2 3 3 3 3 2\n"
         "3 3 3 1 1 1 3 2\n"
         "1 1 1 2 2 2 2 1\n"
         "4 4 4 4 4 4 4 4\n"
         "3 3 3 3 2 2 2 2\n"
         "1 1 1 1 3 3 3 3\n"
         "2 2 2 2 1 1 1 1\n"
         "4 4 4 4 4 4 4 4\n",
         false, "Z3"},
        {4, 2,
         "biq 4\n"
         "2 2 2 3 3 3 3 2\n"
         "3 3 3 1 1 1 1 3\n"
         "1 1 1 2 2 2 2 1\n"
         "4 4 4 4 4 4 4 4\n"
         "3 3 3 1 2 2 2 1\n"
         "1 1 1 2 3 3 3 2\n"
         "2 2 2 3 1 1 1 3\n"
         "4 4 4 4 4 4 4 4\n",
         false, "Z3"},
        {4, 3,
         "biq 4\n"
         "2 2 2 3 3 3 3 2\n"
         "3 3 3 1 1 1 1 3\n"
         "1 1 1 2 2 2 2 1\n"
         "4 4 4 4 4 4 4 4\n"
         "3 3 3 2 2 2 2 3\n"
         "1 1 1 3 3 3 3 1\n"
         "2 2 2 1 1 1 1 2\n"
         "4 4 4 4 4 4 4 4\n",
         true, "Z3"},
        {4, 4,
         "biq 4\n"
         "2 2 2 1 3 3 3 1\n"
         "3 3 3 2 1 1 1 2\n"
         "1 1 1 3 2 2 2 3\n"
         "4 4 4 4 4 4 4 4\n"
         "3 3 3 3 2 2 2 2\n"
         "1 1 1 1 3 3 3 3\n"
         "2 2 2 2 1 1 1 1\n"
         "4 4 4 4 4 4 4 4\n",
         false, "Z3"},
        {4, 5,
         "biq 4\n"
         "2 2 2 1 3 3 3 1\n"
         "3 3 3 2 1 1 1 2\n"
         "1 1 1 3 2 2 2 3\n"
         "4 4 4 4 4 4 4 4\n"
         "3 3 3 1 2 2 2 1\n"
         "1 1 1 2 3 3 3 2\n"
         "2 2 2 3 1 1 1 3\n"
         "4 4 4 4 4 4 4 4\n",
         true, "Z3"},
        {4, 6,
         "biq 4\n"
         "2 2 2 2 3 3 3 3\n"
         "3 3 3 3 1 1 1 1\n"
         "1 1 1 1 2 2 2 2\n"
         "4 4 4 4 4 4 4 4\n"
         "3 3 3 3 2 2 2 2\n"
         "1 1 1 1 3 3 3 3\n"
         "2 2 2 2 1 1 1 1\n"
         "4 4 4 4 4 4 4 4\n",
         true, "Z3"},
        {4, 7,
         "biq 4\n"
         "3 2 2 3 3 2 2 3\n"
         "1 4 4 1 1 4 4 1\n"
         "4 1 1 4 4 1 1 4\n"
         "2 3 3 2 2 3 3 2\n"
         "3 2 2 3 3 2 2 3\n"
         "1 4 4 1 1 4 4 1\n"
         "4 1 1 4 4 1 1 4\n"
         "2 3 3 2 2 3 3 2\n",
         true, "Z2+Z2"},
        {4, 8,
         "biq 4\n"
         "3 2 1 3 2 1 3 2\n"
         "2 1 3 1 1 3 2 3\n"
         "1 3 2 2 3 2 1 1\n"
         "4 4 4 4 4 4 4 4\n"
         "3 3 3 2 2 2 2 3\n"
         "1 1 1 3 3 3 3 1\n"
         "2 2 2 1 1 1 1 2\n"
         "4 4 4 4 4 4 4 4\n",
         false, "Z3"},
        {4, 9,
         "biq 4\n"
         "3 2 1 1 2 1 2 1\n"
         "2 1 3 2 1 3 2 2\n"
         "1 3 2 3 3 2 1 3\n"
         "4 4 4 4 4 4 4 4\n"
         "3 3 3 1 2 2 2 1\n"
         "1 1 1 2 3 3 3 2\n"
         "2 2 2 3 1 1 1 3\n"
         "4 4 4 4 4 4 4 4\n",
         false, "Z3"},
        {4, 10,
         "biq 4\n"
         "3 2 1 2 2 1 3 3\n"
         "2 1 3 3 1 3 2 1\n"
         "1 3 2 1 3 2 1 3\n"
         "4 4 4 4 4 4 4 4\n"
         "3 3 3 3 2 2 2 2\n"
         "1 1 1 1 3 3 3 3\n"
         "2 2 2 2 1 1 1 1\n"
         "4 4 4 4 4 4 4 4\n",
         false, "Z3"},
        {5, 1,
         "biq 4\n"
         "2 3 3 2 3 2 2 3\n"
         "1 4 4 1 4 1 1 4\n"
         "4 1 1 4 1 4 4 1\n"
         "3 2 2 3 2 3 3 2\n"
         "2 2 2 2 3 3 3 3\n"
         "4 4 4 4 1 1 1 1\n"
         "1 1 1 1 4 4 4 4\n"
         "3 3 3 3 2 2 2 2\n",
         false, "Z4"},
        {5, 2,
         "biq 4\n"
         "4 4 3 3 3 3 4 4\n"
         "3 3 4 4 4 4 3 3\n"
         "2 2 1 1 1 1 2 2\n"
         "1 1 2 2 2 2 1 1\n"
         "3 3 4 4 4 4 3 3\n"
         "4 4 3 3 3 3 4 4\n"
         "1 1 2 2 2 2 1 1\n"
         "2 2 1 1 1 1 2 2\n",
         true, "Z4"},
        {5, 3,
         "biq 4\n"
         "4 4 4 4 3 3 3 3\n"
         "3 3 3 3 4 4 4 4\n"
         "1 1 1 1 2 2 2 2\n"
         "2 2 2 2 1 1 1 1\n"
         "3 3 3 3 4 4 4 4\n"
         "4 4 4 4 3 3 3 3\n"
         "2 2 2 2 1 1 1 1\n"
         "1 1 1 1 2 2 2 2\n",
         true, "Z4"},
        {5, 4,
         "biq 4\n"
         "1 1 1 2 1 1 1 3\n"
         "2 2 2 3 2 2 2 1\n"
         "3 3 3 1 3 3 3 2\n"
         "4 4 4 4 4 4 4 4\n"
         "1 1 1 3 1 1 1 2\n"
         "2 2 2 1 2 2 2 3\n"
         "3 3 3 2 3 3 3 1\n"
         "4 4 4 4 4 4 4 4\n",
         true, "Z3"},
        {5, 5,
         "biq 4\n"
         "2 2 1 1 2 2 1 1\n"
         "1 1 2 2 1 1 2 2\n"
         "4 3 3 3 4 3 3 3\n"
         "3 4 4 4 3 4 4 4\n"
         "2 2 1 1 2 2 1 1\n"
         "1 1 2 2 1 1 2 2\n"
         "3 4 3 3 3 4 3 3\n"
         "4 3 4 4 4 3 4 4\n",
         true, "Z2"},
        {5, 6,
         "biq 4\n"
         "2 2 1 1 2 2 1 1\n"
         "1 1 2 2 1 1 2 2\n"
         "4 3 4 4 4 3 4 4\n"
         "3 4 3 3 3 4 3 3\n"
         "2 2 1 1 2 2 1 1\n"
         "1 1 2 2 1 1 2 2\n"
         "3 4 4 4 3 4 4 4\n"
         "4 3 3 3 4 3 3 3\n",
         true, "Z2"},
        {5, 7,
         "biq 4\n"
         "2 2 1 1 2 2 1 1\n"
         "1 1 2 2 1 1 2 2\n"
         "3 4 3 3 3 4 3 3\n"
         "4 3 4 4 4 3 4 4\n"
         "2 2 1 1 2 2 1 1\n"
         "1 1 2 2 1 1 2 2\n"
         "3 4 3 3 3 4 3 3\n"
         "4 3 4 4 4 3 4 4\n",
         true, "Z2"},
        {5, 8,
         "biq 4\n"
         "2 2 1 1 2 2 1 1\n"
         "1 1 2 2 1 1 2 1\n"
         "3 4 4 4 3 4 4 4\n"
         "4 3 3 3 4 3 3 3\n"
         "2 2 1 1 2 2 1 1\n"
         "1 1 2 2 1 1 2 2\n"
         "3 4 4 4 3 4 4 4\n"
         "4 3 3 3 4 3 3 3\n",
         true, "Z2"},
        {5, 9,
         "biq 4\n"
         "1 1 1 1 1 1 1 1\n"
         "3 2 2 3 3 2 2 3\n"
         "2 3 3 2 2 3 3 2\n"
         "4 4 4 4 4 4 4 4\n"
         "1 1 1 1 1 1 1 1\n"
         "2 2 2 3 2 2 2 3\n"
         "3 3 3 2 3 3 3 2\n"
         "4 4 4 4 4 4 4 4\n",
         false, "Z2"},
        {5, 10,
         "biq 4\n"
         "1 1 1 1 1 1 1 1\n"
         "3 2 2 2 4 2 2 2\n"
         "4 3 3 3 2 3 3 3\n"
         "2 4 4 4 3 4 4 4\n"
         "1 1 1 1 1 1 1 1\n"
         "3 2 2 2 4 2 2 2\n"
         "4 3 3 3 2 3 3 3\n"
         "2 4 4 4 3 4 4 4\n",
         true, "Z3"},
        {6, 1,
         "biq 4\n"
         "1 1 1 1 1 1 1 1\n"
         "3 2 2 2 3 2 2 2\n"
         "2 3 3 3 2 3 3 3\n"
         "4 4 4 4 4 4 4 4\n"
         "1 1 1 1 1 1 1 1\n"
         "2 2 2 3 2 2 2 3\n"
         "3 3 3 2 3 3 3 2\n"
         "4 4 4 4 4 4 4 4\n",
         true, "Z2"},
        {6, 2,
         "biq 4\n"
         "1 1 1 1 1 1 1 1\n"
         "3 3 3 3 3 3 3 3\n"
         "2 2 2 2 2 2 2 2\n"
         "4 4 4 4 4 4 4 4\n"
         "1 1 1 1 1 1 1 1\n"
         "2 3 3 3 2 3 3 3\n"
         "3 2 2 2 3 2 2 2\n"
         "4 4 4 4 4 4 4 4\n",
         false, "Z2"},
        {6, 3,
         "biq 4\n"
         "1 1 1 1 1 1 1 1\n"
         "3 3 3 3 3 3 3 3\n"
         "2 2 2 2 2 2 2 2\n"
         "4 4 4 4 4 4 4 4\n"
         "1 1 1 1 1 1 1 1\n"
         "2 3 3 2 2 3 3 2\n"
         "3 2 2 3 3 2 2 3\n"
         "4 4 4 4 4 4 4 4\n",
         false, "Z2+Z2"},
        {6, 4,
         "biq 4\n"
         "1 1 1 1 1 1 1 1\n"
         "3 3 3 2 3 3 3 2\n"
         "2 2 2 3 2 2 2 3\n"
         "4 4 4 4 4 4 4 4\n"
         "1 1 1 1 1 1 1 1\n"
         "2 3 3 3 2 3 3 3\n"
         "3 2 2 2 3 2 2 2\n"
         "4 4 4 4 4 4 4 4\n",
         true, "Z2"},
        {6, 5,
         "biq 4\n"
         "1 1 1 1 1 1 1 1\n"
         "3 3 3 2 3 3 3 2\n"
         "2 2 2 3 2 2 2 3\n"
         "4 4 4 4 4 4 4 4\n"
         "1 1 1 1 1 1 1 1\n"
         "2 3 3 2 2 3 3 2\n"
         "3 2 2 3 3 2 2 3\n"
         "4 4 4 4 4 4 4 4\n",
         false, "Z2"},
        {6, 6,
         "biq 4\n"
         "1 1 1 1 1 1 1 1\n"
         "3 3 3 3 3 3 3 3\n"
         "2 2 2 2 2 2 2 2\n"
         "4 4 4 4 4 4 4 4\n"
         "1 4 4 1 1 4 4 1\n"
         "2 3 3 2 2 3 3 2\n"
         "3 2 2 3 3 2 2 3\n"
         "4 1 1 4 4 1 1 4\n",
         false, "Z2+Z2"},
        {6, 7,
         "biq 4\n"
         "2 2 1 1 2 2 1 1\n"
         "1 1 2 2 1 1 2 2\n"
         "4 4 4 4 4 4 4 4\n"
         "3 3 3 3 3 3 3 3\n"
         "2 2 1 1 2 2 1 1\n"
         "1 1 2 2 1 1 2 2\n"
         "3 3 4 4 3 3 4 4\n"
         "4 4 3 3 4 4 3 3\n",
         false, "Z2+Z2"},
        {6, 8,
         "biq 4\n"
         "2 2 1 1 2 2 1 1\n"
         "1 1 2 2 1 1 2 2\n"
         "4 4 4 4 4 4 4 4\n"
         "3 3 3 3 3 3 3 3\n"
         "2 2 2 2 2 2 2 2\n"
         "1 1 1 1 1 1 1 1\n"
         "3 3 4 4 3 3 4 4\n"
         "4 4 3 3 4 4 3 3\n",
         true, "Z2+Z2"},
        {6, 9,
         "biq 4\n"
         "2 2 2 2 2 2 2 2\n"
         "1 1 1 1 1 1 1 1\n"
         "4 4 4 4 4 4 4 4\n"
         "3 3 3 3 3 3 3 3\n"
         "2 2 1 1 2 2 1 1\n"
         "1 1 2 2 1 1 2 2\n"
         "3 3 4 4 3 3 4 4\n"
         "4 4 3 3 4 4 3 3\n",
         false, "Z4+Z2"},
        {6, 10,
         "biq 4\n"
         "2 2 2 2 2 2 2 2\n"
         "1 1 1 1 1 1 1 1\n"
         "4 4 4 4 4 4 4 4\n"
         "3 3 3 3 3 3 3 3\n"
         "2 2 2 2 2 2 2 2\n"
         "1 1 1 1 1 1 1 1\n"
         "3 3 4 4 3 3 4 4\n"
         "4 4 3 3 4 4 3 3\n",
         false, "Z2+Z2"},
        {7, 1,
         "biq 4\n"
         "1 1 1 1 1 1 1 1\n"
         "3 2 2 3 3 2 2 3\n"
         "2 3 3 2 2 3 3 2\n"
         "4 4 4 4 4 4 4 4\n"
         "1 4 4 1 1 4 4 1\n"
         "2 2 2 2 2 2 2 2\n"
         "3 3 3 3 3 3 3 3\n"
         "4 1 1 4 4 1 1 4\n",
         true, "Z2+Z2"},
        {7, 2,
         "biq 4\n"
         "1 1 2 2 1 1 2 2\n"
         "2 2 1 1 2 2 1 1\n"
         "4 4 4 4 4 4 4 4\n"
         "3 3 3 3 3 3 3 3\n"
         "1 1 1 1 1 1 1 1\n"
         "2 2 2 2 2 2 2 2\n"
         "3 3 4 4 3 3 4 4\n"
         "4 4 3 3 4 4 3 3\n",
         false, "Z2+Z2"},
        {7, 3,
         "biq 4\n"
         "1 1 2 2 1 1 2 2\n"
         "2 2 1 1 2 2 1 1\n"
         "4 4 4 4 4 4 4 4\n"
         "3 3 3 3 3 3 3 3\n"
         "1 1 2 2 1 1 2 2\n"
         "2 2 1 1 2 2 1 1\n"
         "3 3 4 4 3 3 4 4\n"
         "4 4 3 3 4 4 3 3\n",
         false, "Z2+Z2"},
        {7, 4,
         "biq 4\n"
         "2 2 1 1 2 2 1 1\n"
         "1 1 2 2 1 1 2 2\n"
         "3 3 4 4 3 3 4 4\n"
         "4 4 3 3 4 4 3 3\n"
         "2 2 1 1 2 2 1 1\n"
         "1 1 2 2 1 1 2 2\n"
         "3 3 4 4 3 3 4 4\n"
         "4 4 3 3 4 4 3 3\n",
         true, "Z4+Z2"},
        {7, 5,
         "biq 4\n"
         "2 2 1 1 2 2 1 1\n"
         "1 1 2 2 1 1 2 2\n"
         "4 4 3 3 4 4 3 3\n"
         "3 3 4 4 3 3 4 4\n"
         "2 2 1 1 2 2 1 1\n"
         "1 1 2 2 1 1 2 2\n"
         "3 3 3 3 3 3 3 3\n"
         "4 4 4 4 4 4 4 4\n",
         false, "Z4+Z2"},
        {7, 6,
         "biq 4\n"
         "2 2 2 2 2 2 2 2\n"
         "1 1 1 1 1 1 1 1\n"
         "3 3 4 4 3 3 4 4\n"
         "4 4 3 3 4 4 3 3\n"
         "2 2 2 2 2 2 2 2\n"
         "1 1 1 1 1 1 1 1\n"
         "3 3 4 4 3 3 4 4\n"
         "4 4 3 3 4 4 3 3\n",
         true, "Z2+Z2"},
        {7, 7,
         "biq 4\n"
         "2 2 2 2 2 2 2 2\n"
         "1 1 1 1 1 1 1 1\n"
         "4 4 3 3 4 4 3 3\n"
         "3 3 4 4 3 3 4 4\n"
         "2 2 2 2 2 2 2 2\n"
         "1 1 1 1 1 1 1 1\n"
         "3 3 3 3 3 3 3 3\n"
         "4 4 4 4 4 4 4 4\n",
         false, "Z2+Z2"},
        {7, 8,
         "biq 4\n"
         "2 2 2 2 2 2 2 2\n"
         "1 1 1 1 1 1 1 1\n"
         "4 4 3 3 4 4 3 3\n"
         "3 3 4 4 3 3 4 4\n"
         "2 2 2 2 2 2 2 2\n"
         "1 1 1 1 1 1 1 1\n"
         "4 4 3 3 4 4 3 3\n"
         "3 3 4 4 3 3 4 4\n",
         true, "Z2+Z2"},
        {7, 9,
         "biq 4\n"
         "1 1 2 2 1 1 2 2\n"
         "2 2 1 1 2 2 1 1\n"
         "4 4 3 3 4 4 3 3\n"
         "3 3 4 4 3 3 4 4\n"
         "1 1 2 2 1 1 2 2\n"
         "2 2 1 1 2 2 1 1\n"
         "3 3 3 3 3 3 3 3\n"
         "4 4 4 4 4 4 4 4\n",
         false, "Z2+Z2"},
        {7, 10,
         "biq 4\n"
         "1 1 1 1 1 1 1 1\n"
         "2 2 2 2 2 2 2 2\n"
         "4 3 3 3 4 3 3 3\n"
         "3 4 4 4 3 4 4 4\n"
         "1 1 1 1 1 1 1 1\n"
         "2 2 2 2 2 2 2 2\n"
         "4 3 3 3 4 3 3 3\n"
         "3 4 4 4 3 4 4 4\n",
         true, "Z2"},
        {8, 1,
         "biq 4\n"
         "1 1 1 1 1 1 1 1\n"
         "2 2 2 2 2 2 2 2\n"
         "4 4 3 3 4 4 3 3\n"
         "3 3 4 4 3 3 4 4\n"
         "1 1 1 1 1 1 1 1\n"
         "2 2 2 2 2 2 2 2\n"
         "4 4 3 3 4 4 3 3\n"
         "3 3 4 4 3 3 4 4\n",
         true, "Z2+Z2"},
        {8, 2,
         "biq 4\n"
         "1 1 1 1 1 1 1 1\n"
         "2 2 2 2 2 2 2 2\n"
         "4 3 4 4 4 3 4 4\n"
         "3 4 3 3 3 4 3 3\n"
         "1 1 1 1 1 1 1 1\n"
         "2 2 2 2 2 2 2 2\n"
         "4 3 4 4 4 3 4 4\n"
         "3 4 3 3 3 4 3 3\n",
         true, "Z2"},
        {8, 3,
         "biq 4\n"
         "1 1 1 1 1 1 1 1\n"
         "2 2 2 2 2 2 2 2\n"
         "4 4 4 4 4 4 4 4\n"
         "3 3 3 3 3 3 3 3\n"
         "1 1 1 1 1 1 1 1\n"
         "2 2 2 2 2 2 2 2\n"
         "4 4 4 4 4 4 4 4\n"
         "3 3 3 3 3 3 3 3\n",
         true, "Z2+Z2"},
        {8, 4,
         "biq 4\n"
         "2 2 1 1 2 2 1 1\n"
         "1 1 2 2 1 1 2 2\n"
         "3 3 3 3 3 3 3 3\n"
         "4 4 4 4 4 4 4 4\n"
         "2 2 1 1 2 2 1 1\n"
         "1 1 2 2 1 1 2 2\n"
         "3 3 3 3 3 3 3 3\n"
         "4 4 4 4 4 4 4 4\n",
         false, "Z2+Z2"},
        {8, 5,
         "biq 4\n"
         "2 2 1 1 2 2 1 1\n"
         "1 1 2 2 1 1 2 2\n"
         "4 4 3 3 4 4 3 3\n"
         "3 3 4 4 3 3 4 4\n"
         "2 2 1 1 2 2 1 1\n"
         "1 1 2 2 1 1 2 2\n"
         "4 4 3 3 4 4 3 3\n"
         "3 3 4 4 3 3 4 4\n",
         true, "Z+Z2"},
        {8, 6,
         "biq 4\n"
         "2 2 2 2 2 2 2 2\n"
         "1 1 1 1 1 1 1 1\n"
         "4 4 4 4 4 4 4 4\n"
         "3 3 3 3 3 3 3 3\n"
         "2 2 2 2 2 2 2 2\n"
         "1 1 1 1 1 1 1 1\n"
         "4 4 4 4 4 4 4 4\n"
         "3 3 3 3 3 3 3 3\n",
         true, "Z4+Z2"},
        {8, 7,
         "biq 4\n"
         "1 1 2 2 1 1 2 2\n"
         "2 2 1 1 2 2 1 1\n"
         "4 4 3 3 4 4 3 3\n"
         "3 3 4 4 3 3 4 4\n"
         "1 1 2 2 1 1 2 2\n"
         "2 2 1 1 2 2 1 1\n"
         "4 4 3 3 4 4 3 3\n"
         "3 3 4 4 3 3 4 4\n",
         true, "Z2+Z4"},
    };
    return entries;
}

} // namespace census
