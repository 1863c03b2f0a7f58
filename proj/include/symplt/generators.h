#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "symplt/matrix.h"
#include "symplt/rng.h"

namespace symplt {

/// 4x4 symplectic matrix built from cosh t and sinh t.
Matrix s_of_t(double t);

/// H(i,j) = 1 / (i + j + 1), 0-based.
Matrix hilbert(Index m);

/// B(i,j) = 1 / beta(i,j) = (i+j-1)! / ((i-1)! (j-1)!), 1-based, by the
/// recurrence B(i,j) = B(i,j-1) (i+j-1) / (j-1). Exact integers for m <= 20.
inline constexpr Index kBetaMatrixMaxOrder = 60;
Matrix beta_matrix(Index m);

/// n values 10^s, ..., 10^0 with equally spaced exponents; {10^s} for n = 1.
std::vector<double> descending_logspace(Index n, double s);

/// [C S; -S C] where C + iS is the unitary QR factor of a complex Gaussian
/// n x n matrix (real parts drawn first, then imaginary parts).
Matrix orth_symp(Index n, RngStream& rng);

/// U diag(d, 1/d) U^T with d = descending_logspace(n, s), symmetrized;
/// kappa_2 = 10^{2s}.
Matrix gener_symp2(Index n, double s, RngStream& rng);

/// [I 0; C I] diag(G, G^{-1}) [I C; 0 I], symmetrized. G must be SPD and C
/// symmetric.
Matrix lemma4_construct(const Matrix& g, const Matrix& c);

/// U diag(d, 1/d) U^T with d uniform on (0, 1), symmetrized.
Matrix random_spectrum_symplectic(Index n, RngStream& rng);

/// gener_symp2(n, s) + t * hilbert(2n).
Matrix perturbed_symplectic(Index n, double s, double t, RngStream& rng);

enum class Family { SOfT, GenerSymp2, Lemma4, Spectrum, Perturbed };

std::string_view to_string(Family f) noexcept;
Family parse_family(std::string_view name);

/// Replayable description of one generated matrix. For Lemma4, G is
/// beta_matrix(n) and C is hilbert(n) unless swap_roles is set.
struct GeneratorSpec {
    Family family = Family::SOfT;
    Index n = 5;
    double s = 3.0;
    double t = 0.0;
    std::uint64_t seed = 0;
    bool swap_roles = false;

    friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

/// {"family": ..., "n": ..., "s": ..., "t": ..., "seed": ...}
std::string to_json(const GeneratorSpec& spec);
/// Missing keys keep their defaults; "family" may be omitted when `fallback`
/// supplies it.
GeneratorSpec parse_generator_spec(std::string_view json, const GeneratorSpec& fallback = {});

Matrix generate(const GeneratorSpec& spec);

}  // namespace symplt
