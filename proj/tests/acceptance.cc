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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails or exceeds its time budget.

#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qpauli/cli.h"
#include "qpauli/error_channel.h"
#include "qpauli/teleport.h"
#include "qpauli/weyl.h"
#include "test_util.h"

using namespace qpauli;
using namespace qpauli::testing;

namespace {

/// Collects the worst observed error and the first failure message.
struct Check {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string &what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
    void within(double err, double tol, const std::string &what) {
        std::ostringstream s;
        s << what << " error " << err << " exceeds " << tol;
        expect(err < tol, s.str());
    }
};

std::string golden(const std::string &name) {
    return std::string(QPAULI_GOLDEN_DIR) + "/" + name;
}

std::string slurp(const std::string &path) {
    std::ifstream f(path);
    std::stringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

ComplexMatrix random_square(int d, Rng &rng) {
    return random_matrix(d, d, rng);
}

Check basis_properties() {
    Check c;
    Rng rng(1001);
    for (int d = 2; d <= 8; d++) {
        std::vector<ComplexMatrix> ops;
        for (int i = 0; i < d; i++) {
            for (int j = 0; j < d; j++) {
                ops.push_back(pauli_op(PauliIndex::make(d, i, j)));
                c.expect(is_unitary(ops.back(), kAlgebraTol), "E(" + std::to_string(i) + "," + std::to_string(j) +
                                                                  ") not unitary at d=" + std::to_string(d));
            }
        }
        size_t n = ops.size();
        for (size_t x = 0; x < n; x++) {
            for (size_t y = 0; y < n; y++) {
                Complex t = trace(dagger(ops[x]) * ops[y]);
                c.within(std::abs(t - Complex(x == y ? d : 0)), kAlgebraTol, "trace orthogonality d=" + std::to_string(d));
            }
        }

        Eigen::MatrixXcd columns(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        for (size_t col = 0; col < n; col++) {
            for (size_t r = 0; r < n; r++) {
                columns(r, col) = ops[col].entries()[r];
            }
        }
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(columns);
        svd.setThreshold(1e-8);
        c.expect(static_cast<size_t>(svd.rank()) == n, "basis rank below d^2 at d=" + std::to_string(d));

        for (int trial = 0; trial < 50; trial++) {
            ComplexMatrix a = random_square(d, rng);
            c.within(max_abs_diff(reconstruct(decompose(a, d)), a), 1e-10, "round trip d=" + std::to_string(d));
        }
    }
    return c;
}

Check closed_form_coefficients() {
    Check c;
    for (int d : {2, 3, 5}) {
        for (int a = 0; a < d; a++) {
            for (int b = 0; b < d; b++) {
                PauliCoefficients xi = decompose(ket_bra(d, a, b), d);
                for (int i = 0; i < d; i++) {
                    for (int j = 0; j < d; j++) {
                        Complex expected = wrap(b + i, d) == a ? naive_omega_pow(d, -1LL * b * j) / double(d) : 0.0;
                        c.within(std::abs(xi.at(i, j) - expected), kAlgebraTol, "coefficient d=" + std::to_string(d));
                    }
                }
            }
        }
    }
    return c;
}

/// Sum over (l,k) of (X_l Z_k psi) tensor v_{l,k}, with v built from its
/// defining sum and the Pauli from its ket action.
ComplexVector oracle_resum(const StateVector &psi, const GammaTable &g) {
    int d = g.d();
    ComplexVector out(static_cast<size_t>(d) * d * d);
    for (int l = 0; l < d; l++) {
        for (int k = 0; k < d; k++) {
            ComplexVector v(static_cast<size_t>(d) * d);
            for (int z = 0; z < d; z++) {
                int a = wrap(z + l, d);
                v[static_cast<size_t>(a) * d + z] += naive_omega_pow(d, 1LL * z * k) * g.at(a, z) / double(d);
            }
            out = out + tensor(apply(oracle_pauli(d, l, k), psi.vector()), v);
        }
    }
    return out;
}

Check error_model_consistency() {
    Check c;
    for (int d = 2; d <= 6; d++) {
        Rng rng(2000 + d);
        for (int trial = 0; trial < 100; trial++) {
            GammaTable g = GammaTable::random(d, rng);
            StateVector psi = random_state(d, rng);
            JointState js = evolve_joint(psi, g);
            c.within(max_abs_diff(js.state().vector(), oracle_resum(psi, g)), kProtocolTol,
                     "joint resum d=" + std::to_string(d));
            c.within(std::abs(induced_weights(g).sum() - 1.0), kAlgebraTol, "weight sum d=" + std::to_string(d));
            for (int l = 0; l < d; l++) {
                for (int k = 0; k < d; k++) {
                    CorrectionTrace t = apply_and_correct(psi, PauliIndex::make(d, l, k));
                    c.within(max_abs_diff(t.corrected, psi), kProtocolTol, "correction d=" + std::to_string(d));
                }
            }
        }
    }
    return c;
}

Check correction_formula() {
    Check c;
    for (int d = 2; d <= 8; d++) {
        ComplexMatrix id = ComplexMatrix::identity(d);
        for (int m = 0; m < d; m++) {
            for (int n = 0; n < d; n++) {
                PauliCorrection inv = pauli_inverse(PauliIndex::make(d, m, n));
                c.expect(inv.zk == wrap(-n, d) && inv.xl == wrap(-m, d), "inverse indices d=" + std::to_string(d));
                ComplexMatrix prod = phase_op(d, wrap(-n, d)) * shift_op(d, wrap(-m, d)) * shift_op(d, m) * phase_op(d, n);
                c.within(max_abs_diff(prod, id), kAlgebraTol, "Z X X Z product d=" + std::to_string(d));
                c.within(max_abs_diff(correction_op(d, inv) * oracle_pauli(d, m, n), id), kAlgebraTol,
                         "correction_op d=" + std::to_string(d));
            }
        }
    }
    return c;
}

Check teleport_exhaustive() {
    Check c;
    for (int d : {2, 3}) {
        Rng rng(3000 + d);
        for (int A = 0; A < d; A++) {
            for (int B = 0; B < d; B++) {
                BellLabel lbl = BellLabel::make(d, A, B);
                for (int s = 0; s < 5; s++) {
                    StateVector psi = random_state(d, rng);
                    StateVector full = protocol_state_circuit(psi, lbl);
                    std::vector<double> probs = outcome_probabilities(full, d);
                    for (double p : probs) {
                        c.within(std::abs(p - 1.0 / (d * d)), kAlgebraTol, "marginal d=" + std::to_string(d));
                    }
                    for (int M1 = 0; M1 < d; M1++) {
                        for (int M2 = 0; M2 < d; M2++) {
                            StateVector branch = branch_state(psi, lbl, M1, M2);
                            c.within(max_abs_diff(correct(branch, lbl, M1, M2), psi), kProtocolTol,
                                     "corrected branch d=" + std::to_string(d));
                            StateVector projected = project_outcome(full, d, M1, M2);
                            c.within(max_abs_diff_up_to_phase(branch, projected), kProtocolTol,
                                     "branch vs projection d=" + std::to_string(d));
                            TeleportTranscript t = teleport(psi, lbl, M1, M2);
                            c.within(std::abs(t.fidelity_to_input - 1.0), kProtocolTol,
                                     "teleport fidelity d=" + std::to_string(d));
                        }
                    }
                }
            }
        }
    }
    return c;
}

/// (1/sqrt d) sum_x w^{Ax} |x>|B+x>.
ComplexVector oracle_bell(int d, int A, int B) {
    ComplexVector out(static_cast<size_t>(d) * d);
    for (int x = 0; x < d; x++) {
        out = out + (naive_omega_pow(d, 1LL * A * x) / std::sqrt(double(d))) *
                        tensor(basis_ket(d, x).vector(), basis_ket(d, wrap(B + x, d)).vector());
    }
    return out;
}

/// (1/d) sum_{y,z} w^{Az} |y>|z> sum_a alpha_a w^{a(y+A)} |B+z+a>.
ComplexVector oracle_protocol(const StateVector &psi, int A, int B) {
    int d = static_cast<int>(psi.dim());
    ComplexVector out(static_cast<size_t>(d) * d * d);
    for (int y = 0; y < d; y++) {
        for (int z = 0; z < d; z++) {
            for (int a = 0; a < d; a++) {
                Complex amp = psi[a] * naive_omega_pow(d, 1LL * A * z + 1LL * a * (y + A)) / double(d);
                size_t idx = (static_cast<size_t>(y) * d + z) * d + wrap(B + z + a, d);
                out[idx] += amp;
            }
        }
    }
    return out;
}

Check circuit_duality() {
    Check c;
    for (int d = 2; d <= 6; d++) {
        for (int A = 0; A < d; A++) {
            for (int B = 0; B < d; B++) {
                BellLabel lbl = BellLabel::make(d, A, B);
                ComplexVector expected = oracle_bell(d, A, B);
                c.within(max_abs_diff(bell_state_circuit(lbl).vector(), expected), kAlgebraTol,
                         "bell circuit d=" + std::to_string(d));
                c.within(max_abs_diff(bell_state(lbl).vector(), expected), kAlgebraTol,
                         "bell closed form d=" + std::to_string(d));
            }
        }
    }
    for (int d : {2, 3, 5}) {
        Rng rng(4000 + d);
        for (int trial = 0; trial < 20; trial++) {
            StateVector psi = random_state(d, rng);
            int A = static_cast<int>(rng.next_u64() % d);
            int B = static_cast<int>(rng.next_u64() % d);
            BellLabel lbl = BellLabel::make(d, A, B);
            ComplexVector expected = oracle_protocol(psi, A, B);
            c.within(max_abs_diff(protocol_state_circuit(psi, lbl).vector(), expected), kProtocolTol,
                     "protocol circuit d=" + std::to_string(d));
            c.within(max_abs_diff(protocol_state(psi, lbl).vector(), expected), kProtocolTol,
                     "protocol closed form d=" + std::to_string(d));
        }
    }
    return c;
}

Check cli_golden_files() {
    Check c;
    struct Case {
        std::vector<std::string> args;
        std::string golden_name;
    };
    std::vector<Case> cases{
        {{"decompose", "--input", golden("identity3.json")}, "decompose_identity3.out.json"},
        {{"decompose", "--input", golden("ketbra01_d2.json")}, "decompose_ketbra01_d2.out.json"},
        {{"channel", "--input", golden("identity_gamma3.json")}, "channel_identity_gamma3.out.json"},
        {{"teleport", "--d", "3", "--A", "1", "--B", "2", "--M1", "1", "--M2", "1", "--input", golden("ket2_d3.json")},
         "teleport_forced_d3.out.json"},
    };
    for (auto &cs : cases) {
        cs.args.insert(cs.args.begin(), "qpauli");
        std::string first;
        for (int run = 0; run < 2; run++) {
            std::istringstream in;
            std::ostringstream out, err;
            int code = run_cli(cs.args, {in, out, err});
            c.expect(code == kExitOk, cs.golden_name + " exited with " + std::to_string(code));
            c.expect(out.str() == slurp(golden(cs.golden_name)), cs.golden_name + " differs from golden output");
            if (run == 0) {
                first = out.str();
            } else {
                c.expect(out.str() == first, cs.golden_name + " is not deterministic");
            }
        }
    }
    return c;
}

void check_binomial(Check &c, const std::vector<int> &counts, int draws, const std::string &what) {
    double p = 1.0 / counts.size();
    double sigma = std::sqrt(draws * p * (1 - p));
    for (size_t x = 0; x < counts.size(); x++) {
        double dev = std::abs(counts[x] - draws * p);
        c.expect(dev <= 3 * sigma, what + " cell " + std::to_string(x) + " count " + std::to_string(counts[x]) +
                                       " outside 3 sigma");
    }
}

Check sampling_sanity() {
    Check c;
    ErrorWeights w(2, {0.25, 0.25, 0.25, 0.25});
    Rng rng(5000);
    const int draws = 100000;
    std::vector<int> counts(4);
    for (int t = 0; t < draws; t++) {
        PauliIndex idx = sample_error(w, rng);
        counts[idx.l * 2 + idx.k]++;
    }
    check_binomial(c, counts, draws, "error sampling");

    const int trials = 10000;
    const uint64_t seed = 6000;
    std::vector<int> outcomes(4);
    BellLabel lbl = BellLabel::make(2, 1, 0);
    for (int t = 0; t < trials; t++) {
        Rng trial_rng(seed + t);
        StateVector psi = random_state(2, trial_rng);
        TeleportTranscript tr = teleport(psi, lbl, trial_rng);
        outcomes[tr.M1 * 2 + tr.M2]++;
    }
    check_binomial(c, outcomes, trials, "teleport outcomes");
    return c;
}

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;
    std::function<Check()> run;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "weyl basis unitary, orthogonal, full rank, round trip", 5, basis_properties},
        {2, "closed-form coefficients of |a><b|", 1, closed_form_coefficients},
        {3, "error model joint state, weights, correction", 10, error_model_consistency},
        {4, "correction formula Z(-n) X(-m) X(m) Z(n) = I", 2, correction_formula},
        {5, "teleportation over every label and outcome", 10, teleport_exhaustive},
        {6, "gate circuits match closed forms", 5, circuit_duality},
        {7, "cli output matches golden files", 2, cli_golden_files},
        {8, "sampling frequencies within 3 sigma", 10, sampling_sanity},
    };

    int failures = 0;
    for (const auto &cr : criteria) {
        auto start = std::chrono::steady_clock::now();
        Check c;
        try {
            c = cr.run();
        } catch (const std::exception &e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream budget;
        budget << "took " << secs << " s, budget " << cr.budget_seconds << " s";
        c.expect(secs < cr.budget_seconds, budget.str());
        std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << cr.id << ": " << cr.name << " (" << secs << " s)";
        if (!c.ok) {
            std::cout << " -- " << c.detail;
            failures++;
        }
        std::cout << "\n";
    }
    return failures == 0 ? 0 : 1;
}
