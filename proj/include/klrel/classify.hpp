#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "klrel/group.hpp"

namespace klrel {

// Hamming distance between K-coset labels (indices 0..31). Writing a label
// as p_{4q+r} or n_{4s+t}, distances depend only on family agreement and the
// Kronecker deltas of (q,s) and (r,t).
int hamming_distance(int k1, int k2);

// Two cosets are opposite when one meets the other reflected through the
// central involution.
bool is_opposite(const GroupTables& t, const CosetId& a, const CosetId& b);

// Metric on the 44 labels: 0 on equal labels, Hamming distance between two
// K labels, and 2 (non-opposite) or 4 (opposite) for any pair involving an L.
int label_distance(const GroupTables& t, const CosetId& a, const CosetId& b);

// Sorted pairwise distances of a triple of distinct labels, as the 3-digit
// integer abc with a <= b <= c.
int triple_type(const GroupTables& t, const std::array<CosetId, 3>& triple);

// An unordered triple of distinct L labels is coherent when no two of its
// members are opposite (no label together with its bar partner).
bool is_coherent_l_triple(const CosetId& a, const CosetId& b, const CosetId& c);

enum class TupleFamily { K3, L3, KL2, LK2, T3 };
std::string family_name(TupleFamily f);
TupleFamily family_from_name(const std::string& s);

struct TupleOrbit {
    std::vector<CosetId> representative; // distinguished label first for KL2/LK2
    long size = 0;
};

struct FamilyClassification {
    TupleFamily family{};
    long total = 0;
    std::vector<TupleOrbit> orbits; // ordered by lexicographically minimal member
    std::unordered_map<std::uint32_t, int> orbit_index;

    // Position of the orbit containing the tuple (distinguished-first for the
    // mixed families), or -1 if the tuple does not belong to the family.
    int orbit_of(const std::vector<CosetId>& tuple) const;
};

// Partitions the family into orbits of the elementwise right multiplication
// action, using the six Coxeter generators for the breadth-first sweep.
FamilyClassification classify_family(const GroupTables& t, TupleFamily f);

} // namespace klrel
