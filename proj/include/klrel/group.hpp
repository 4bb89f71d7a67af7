#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "klrel/core.hpp"

namespace klrel {

// Exact hashable key for a 7x7 integer matrix (entries fit in int8 by the
// closure invariant).
using MatKey = std::array<std::int8_t, 49>;

struct MatKeyHash {
    std::size_t operator()(const MatKey& k) const {
        std::uint64_t h = 1469598103934665603ull; // FNV-1a
        for (std::int8_t b : k) {
            h ^= static_cast<std::uint8_t>(b);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

MatKey mat_key(const Mat7i& m);

// Defining generator matrices of the symmetry group: the transpositions
// exchange two parameters, and the mixing matrix sends (a,...,g) to
// (a, b, g-c, g-d, e+g-c-d, f+g-c-d, g).
Mat7i transposition(int i, int j); // one-based parameter positions
Mat7i four_three_cycle();          // (abcd)(efg) parameter rotation
Mat7i mixing_matrix();

// Overflow-checked product; throws LabelingMismatch if an entry leaves the
// int8 range (cannot happen for genuine group elements).
Mat7i checked_mul(const Mat7i& a, const Mat7i& b);

// Everything derived from the finite matrix group W(D6) of order 23040: the
// element list, the two stabilizer subgroups, the labeled right-coset systems
// (32 K-labels, 12 L-labels), and label action tables for the six Coxeter
// generators.
struct GroupTables {
    std::vector<Mat7i> elements; // breadth-first order; elements[0] = identity
    std::unordered_map<MatKey, int, MatKeyHash> index;

    std::array<int, 6> defining_gens{}; // (12),(23),(34),(56),(67),mixing
    std::array<int, 6> coxeter_gens{};  // s1',s1,s2,s3,s4,s5
    int identity = 0;
    int w0 = -1; // central involution

    std::vector<int> gk_elements; // stabilizer of the K family (order 720)
    std::vector<int> gl_elements; // stabilizer of the L family (order 1920)

    std::vector<std::int8_t> k_label; // per element: right-coset label 0..31
    std::vector<std::int8_t> l_label; // per element: right-coset label 0..11
    std::array<int, 32> k_rep{};      // element id of each display representative
    std::array<int, 12> l_rep{};
    std::array<std::array<bool, 12>, 32> kl_meet{}; // K-coset meets L-coset

    std::array<std::array<std::int8_t, 32>, 6> k_act{}; // Coxeter gens on K labels
    std::array<std::array<std::int8_t, 12>, 6> l_act{}; // Coxeter gens on L labels

    int order() const { return static_cast<int>(elements.size()); }
    int find(const Mat7i& m) const;
    int mul(int i, int j) const;
    int inverse(int i) const;

    // Right multiplication on coset labels: coset(rep) * g = coset(rep * g).
    int k_label_after(int label, int elem) const;
    int l_label_after(int label, int elem) const;
    CosetId coset_after(const CosetId& id, int elem) const;
    const Mat7i& rep_matrix(const CosetId& id) const;
};

// Builds the tables from scratch (about 0.2s); throws ClosureBudgetExceeded
// or LabelingMismatch if the generators do not produce the expected
// structure.
GroupTables build_group_tables();

// Shared, lazily built instance.
const GroupTables& group_tables();

// Affine display maps whose hyperplane linearizations are the canonical coset
// representatives. K index 0..31 = p0..p15,n0..n15; L index 0..11 = L1..L6,
// L1bar..L6bar.
PointMap k_coset_display(int idx);
PointMap l_coset_display(int idx);

// The central involution as an affine display: x -> (1-a,...,1-d,2-e,2-f,2-g).
PointMap negation_display();

// Image of an element under the faithful permutation representation on the
// twelve signed L-labels (right multiplication on cosets).
std::array<std::int8_t, 12> phi_image(const GroupTables& t, int elem);

} // namespace klrel
