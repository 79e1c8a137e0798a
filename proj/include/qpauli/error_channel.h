// Copyright 2026 The QuditPauli Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// System-environment error model for a single qudit.
//
// A table gamma[a][b] defines an isometry C^d -> C^d (x) C^{d^2}:
//
//     |i>  ->  sum_l gamma[-i+l][-i] |i+l> (x) |e_{-i+l, -i}>
//
// with all indices mod d. Re-summing over Fourier phases rewrites the same
// state as sum_{l,k} (X_l Z_k |psi>) (x) v_{l,k}, where
//
//     v_{l,k} = (1/d) sum_z omega^{z k} gamma[z+l][z] |e_{z+l, z}>.
//
// The squared norms of v_{l,k} are the induced Pauli error weights. The
// v_{l,k} are mutually orthogonal (so reading them as a syndrome is exact)
// iff |gamma[z+l][z]| is constant in z along every cyclic diagonal l.

#ifndef QPAULI_ERROR_CHANNEL_H
#define QPAULI_ERROR_CHANNEL_H

#include <optional>
#include <string>
#include <vector>

#include "qpauli/linalg.h"
#include "qpauli/rng.h"
#include "qpauli/weyl.h"

namespace qpauli {

/// Tolerance on the per-column normalization of a GammaTable.
inline constexpr double kGammaTol = 1e-10;

/// Coupling coefficients gamma[a][b], a = row, b = column, both in Z_d.
///
/// Construction does not validate normalization; see validate_gamma.
class GammaTable {
   public:
    /// All-zero table.
    explicit GammaTable(int d);
    /// Row-major entries, d*d of them.
    GammaTable(int d, std::vector<Complex> row_major);

    /// gamma[a][b] = delta_{a,b}.
    static GammaTable identity(int d);
    /// Random complex entries with each column scaled to unit norm.
    static GammaTable random(int d, Rng &rng);

    int d() const {
        return d_;
    }
    Complex &at(int a, int b);
    const Complex &at(int a, int b) const;

   private:
    int d_;
    std::vector<Complex> entries_;
};

struct GammaViolation {
    int column;
    double column_norm_squared;

    std::string describe() const;
};

/// First column b with |sum_a |gamma[a][b]|^2 - 1| > kGammaTol, if any.
std::optional<GammaViolation> validate_gamma(const GammaTable &g);

/// Induced probability p[l][k] of error X_l Z_k.
class ErrorWeights {
   public:
    /// Checks non-negativity and that the weights sum to 1 within kProtocolTol.
    ErrorWeights(int d, std::vector<double> row_major);

    int d() const {
        return d_;
    }
    double at(int l, int k) const;
    /// Flat view in (l, k) -> l * d + k order.
    std::span<const double> flat() const {
        return p_;
    }
    double sum() const;

   private:
    int d_;
    std::vector<double> p_;
};

/// Output of evolve_joint: amplitudes over (system s) x (environment a*d + b),
/// flat index s * d^2 + a * d + b.
class JointState {
   public:
    JointState(int d, StateVector amps);

    int d() const {
        return d_;
    }
    const StateVector &state() const {
        return amps_;
    }
    Complex amplitude(int s, int a, int b) const;

   private:
    int d_;
    StateVector amps_;
};

/// Applies the coupling isometry to |psi>. Throws std::invalid_argument when
/// gamma fails validation or dim(psi) != d.
JointState evolve_joint(const StateVector &psi, const GammaTable &g);

/// v_{l,k} for every (l, k), as vectors in C^{d^2} indexed a * d + b. Stored
/// at l * d + k.
std::vector<ComplexVector> environment_vectors(const GammaTable &g);

/// sum_{l,k} (E_{l,k} psi) (x) v_{l,k}: the re-summed form of evolve_joint.
ComplexVector resummed_joint(const StateVector &psi, const GammaTable &g);

/// p[l][k] = |v_{l,k}|^2. Throws std::invalid_argument on an invalid table.
ErrorWeights induced_weights(const GammaTable &g);

/// Largest |<v_{l,k}|v_{l',k'}>| over distinct pairs.
double max_syndrome_overlap(const GammaTable &g);
/// True iff |gamma[z+l][z]| is constant in z for every l, within tol.
bool has_constant_diagonal_magnitudes(const GammaTable &g, double tol = kProtocolTol);

struct EnvironmentOutcome {
    int a;
    int b;
    double probability;
    StateVector system;
};

/// Exact probability of each environment outcome, indexed a * d + b.
std::vector<double> environment_probabilities(const JointState &js);

/// Projective measurement of the environment in the |e_{a,b}> basis.
EnvironmentOutcome measure_environment_raw(const JointState &js, Rng &rng);

/// Draws (l, k) with probability p[l][k].
PauliIndex sample_error(const ErrorWeights &w, Rng &rng);

struct CorrectionTrace {
    StateVector corrupted;
    StateVector corrected;
};

/// Applies E_{l,k} to psi, then the inverse Z_{-k} X_{-l}.
CorrectionTrace apply_and_correct(const StateVector &psi, const PauliIndex &idx);

}  // namespace qpauli

#endif
