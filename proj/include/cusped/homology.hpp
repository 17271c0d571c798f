#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "cusped/skeleton.hpp"
#include "cusped/triangulation.hpp"

namespace cusped {

using Int = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<Int>>;  // row-major

struct HomologyGroup {
    int rank = 0;
    std::vector<Int> torsion_divisors;  // each >= 2, each dividing the next

    bool operator==(const HomologyGroup&) const = default;

    bool is_trivial() const { return rank == 0 && torsion_divisors.empty(); }
    bool is_free_of_rank(int r) const { return rank == r && torsion_divisors.empty(); }
    std::string str() const;
};

// Diagonal entries of the Smith normal form (nonzero ones, each dividing the next).
std::vector<Int> smith_invariants(IntMatrix m);

long long integer_rank(const IntMatrix& m);

// Is z in the column span of m over the integers?
bool in_integer_column_span(const IntMatrix& m, const std::vector<Int>& z);

// First homology of the identified complex.
HomologyGroup homology_h1(const Triangulation& t);
HomologyGroup homology_h1(const Triangulation& t, const Skeleton& sk);

// Cellular boundary matrices of the identified complex:
//   d1: vertex_count x edge_count, d2: edge_count x face_count.
void boundary_maps(const Triangulation& t, const Skeleton& sk, IntMatrix& d1, IntMatrix& d2);

// Order of the class of cycle z (a vector over edge classes) in H1: 0 means infinite order,
// 1 means trivial. Requires d1 * z = 0.
Int cycle_order_in_h1(const IntMatrix& d2, const std::vector<Int>& z);

}  // namespace cusped
