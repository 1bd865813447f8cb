#pragma once

#include <optional>
#include <vector>

#include "bmres/betti.hpp"
#include "bmres/morse.hpp"

namespace bmres {

// Coefficient field for rank computations: a prime p, or exact rationals
// (characteristic zero) when p = 0.
struct FieldSpec {
    long long p = 32003;

    static FieldSpec rationals() { return FieldSpec{0}; }
    static FieldSpec prime(long long p);
    bool is_rational() const { return p == 0; }
};

struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::int64_t> a;  // row-major

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0) {}
    std::int64_t& at(int r, int c) { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }
    std::int64_t at(int r, int c) const { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }
};

// Rank over F_p (modular Gaussian elimination) or over Q (fraction-free
// Bareiss elimination with arbitrary-precision integers).
int rank(const IntMatrix& M, const FieldSpec& field);

// Join-closure of the generator lcms, as lcm-table ids (includes the empty
// join). Capacity-guarded.
std::vector<std::uint32_t> lcm_lattice_ids(const LcmTable& T);

// Graded Betti numbers of R/I via the multigraded strands of the Taylor
// complex; independent of any matching or generator order.
GradedBettiTable tor_betti(const MonomialIdeal& I, const FieldSpec& field, const LcmTable* table = nullptr);

struct StrandReport {
    bool pass = true;
    std::optional<std::vector<Exponent>> witness_multidegree;
    int witness_position = -1;
    long long witness_defect = 0;  // dim H_i at the witness
};

// Certifies that a candidate complex is a resolution of R/I: every
// multidegree strand is exact in positive positions and has the homology of
// R/I in position zero.
StrandReport strand_exactness(const MorseDifferential& D, const MonomialIdeal& I, const FieldSpec& field,
                              const LcmTable* table = nullptr);

}  // namespace bmres
