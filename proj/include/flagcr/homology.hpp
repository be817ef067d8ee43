#pragma once

#include <cstdint>
#include <vector>

#include "flagcr/complex.hpp"

namespace flagcr {

// Dense integer matrix for boundary maps.
struct IntMat {
    size_t rows = 0, cols = 0;
    std::vector<long long> a;

    IntMat() = default;
    IntMat(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}
    long long& at(size_t i, size_t j) { return a[i * cols + j]; }
    long long at(size_t i, size_t j) const { return a[i * cols + j]; }
};

// Augmented (reduced) ordered chain complex of a flag complex over Z.
// dims[d] counts the d-simplices (flags with d+1 members); boundary[0] is
// the 1 x dims[0] augmentation map, boundary[d] the usual signed incidence
// matrix dims[d-1] x dims[d].  Simplices are indexed in canonical flag
// order within each degree.
struct ChainComplexZ {
    std::vector<size_t> dims;
    std::vector<IntMat> boundary;
};

ChainComplexZ order_chain_complex(const SubComplex& y);

// Invariant factors of an integer matrix: rank and the nonzero divisors
// d_1 | d_2 | ... | d_rank, all positive.
struct SnfResult {
    size_t rank = 0;
    std::vector<long long> divisors;
};

// Smith normal form by pivoting on minimal-magnitude entries.  Runs in
// checked 64-bit arithmetic and transparently retries in arbitrary
// precision if an intermediate value overflows.
SnfResult smith_normal_form(const IntMat& m);

// Reduced integer homology of a nonempty complex.
struct HomologyReport {
    std::vector<size_t> reduced_betti;              // degrees 0..dim
    std::vector<std::vector<long long>> torsion;    // invariant factors > 1
    long long euler_characteristic = 0;             // unreduced: sum (-1)^d dims[d]
    bool acyclic() const;
};

HomologyReport reduced_homology(const SubComplex& y);

}  // namespace flagcr
