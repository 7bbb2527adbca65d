#ifndef DLP_GENSTRUCT_HPP
#define DLP_GENSTRUCT_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "dlp/dlpencil.hpp"
#include "dlp/eigenstructure.hpp"
#include "dlp/polymat.hpp"

namespace dlp {

/// splitmix64: tiny, portable, splittable 64-bit PRNG.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
    /// Uniform value in [0, bound).
    std::uint64_t below(std::uint64_t bound);
    /// Uniform integer in [lo, hi] inclusive.
    long range(long lo, long hi);
};

/// Prescribed Kronecker data for a generated matrix polynomial.
struct KroneckerSpec {
    int m = 0, n = 0, k = 0, rank = 0;
    std::map<Rat, std::vector<int>> finite_eigs;  // ascending multiplicities
    std::vector<int> inf_mults;                   // ascending
    std::vector<int> right_indices;               // ascending
    std::vector<int> left_indices;                // ascending
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument when the counts or the index sum identity
    /// fail; returns the expected eigenstructure otherwise.
    Eigenstructure as_eigenstructure() const;
    void validate() const;
};

/// Deterministically build a PolyMat whose complete eigenstructure equals the
/// spec; throws std::invalid_argument when the spec is unrealizable for the
/// block scheme used. The result is verified with full_eigenstructure before
/// being returned.
PolyMat generate(const KroneckerSpec& spec);

/// Seeded ansatz of grade k-1. want_violation = false: rational roots all
/// outside the spectrum of P (admissible). want_violation = true: at least
/// one root (possibly infinity) shared with the spectrum.
Ansatz admissible_ansatz(const PolyMat& P, int k, bool want_violation, std::uint64_t seed);

}  // namespace dlp

#endif
