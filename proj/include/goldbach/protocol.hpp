#pragma once

#include <string>
#include <utility>
#include <vector>

#include "goldbach/qdyn.hpp"

namespace goldbach::protocol {

struct Snapshot {
    double target_pop = 0;
    double rest_computational_pop = 0;
    double auxiliary_pop = 0;
};

/// One Grover run: population snapshots per iteration (snapshot 0 is the
/// initial state), the closed-form theory curve, and the readout verdict.
struct GroverRunRecord {
    int iterations = 0;
    std::vector<Snapshot> snapshots;  // iterations + 1 entries
    std::vector<double> theory;
    std::vector<std::size_t> argmax_per_iteration;  // readout verdict per snapshot
    std::size_t detected_index = 0;
    bool success = false;  // detected_index == match_g_index
};

/// Grover reflections on the computational space:
/// U_omega = diag(+1,...,-1 at the match,...,+1), U_s = 1 - 2|s><s|.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> ideal_unitaries(const GoldbachInstance& inst);

/// sin^2((2r+1) * arcsin(1/sqrt(n))): exact target population of the ideal
/// protocol after r iterations.
double theory_success(int r, std::size_t n);

/// The r maximizing theory_success: round(pi/(4*arcsin(1/sqrt(n))) - 1/2).
int optimal_iterations(std::size_t n);

/// Exact unitary iteration psi <- U_s U_omega psi from |s> (omega first).
GroverRunRecord run_ideal(std::size_t size, std::size_t match_index, int r);
GroverRunRecord run_ideal(const GoldbachInstance& inst, int r);

/// Replaces the omega pulse in run_physical; used by wiring tests to inject
/// a perfect gate in place of the physical pulse.
using OmegaGateFn = std::function<qdyn::StateVector(qdyn::StateVector)>;

/// The full pulse-sequence protocol: r cycles of {omega pulse, s gate} from
/// the uniform state, snapshotting populations after every cycle.
GroverRunRecord run_physical(const GoldbachInstance& inst,
                             const qdyn::PulseConfig& pulse, int r,
                             const qdyn::EvolveObserver* observer = nullptr,
                             const OmegaGateFn& omega_override = nullptr);

struct SweepRow {
    int M = 0;
    double v_s = 0;
    int r_opt = 0;
    double target_pop = 0;
};

/// run_physical at the optimal iteration count for every (M, v_s) cell,
/// ranked by final target population (ties: smaller M, then larger v_s).
std::vector<SweepRow> sweep_pulse_params(const GoldbachInstance& inst,
                                         const std::vector<int>& m_candidates,
                                         const std::vector<double>& v_s_candidates,
                                         double dt,
                                         qdyn::SGateMode mode = qdyn::SGateMode::physical);

/// CSV with header iteration,target_pop,rest_pop,aux_pop,theory.
std::string snapshots_csv(const GroverRunRecord& record);

/// CSV with header M,v_s,r_opt,target_pop.
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace goldbach::protocol
