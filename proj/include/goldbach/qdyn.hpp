#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <stdexcept>

#include "goldbach/instance.hpp"

namespace goldbach::qdyn {

struct IntegratorError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Amplitudes over the computational (|n> (x) ||g>) and auxiliary
/// (|m_II> (x) ||e>) bases. Units: hbar = U_0 = 1 throughout.
struct StateVector {
    Eigen::VectorXcd g_amps;
    Eigen::VectorXcd e_amps;

    double norm() const { return std::sqrt(g_amps.squaredNorm() + e_amps.squaredNorm()); }
    Eigen::VectorXcd full() const;
    static StateVector from_full(const Eigen::VectorXcd& v, Eigen::Index n_g);
};

enum class SGateMode { ideal, physical };
enum class OmegaMode { lab, rwa };

/// Pulse parameters. v_omega is locked to 1/(2M) (commensurability) and the
/// durations to the 2pi-pulse / projector-quench conditions, so construct via
/// make() rather than filling fields by hand.
struct PulseConfig {
    int M = 3;                // commensurability integer
    double v_omega = 0;       // V_0^(omega) = 1/(2M)
    double v_s = 100.0;       // V_0^(s)
    double tau_omega = 0;     // pi/v_omega = 2*pi*M
    double tau_s = 0;         // pi/(N*v_s)
    double dt = 2.5e-4;
    SGateMode s_gate_mode = SGateMode::physical;
    OmegaMode omega_mode = OmegaMode::lab;

    static PulseConfig make(int M, double v_s, std::size_t n_computational,
                            double dt = 2.5e-4,
                            SGateMode mode = SGateMode::physical,
                            OmegaMode omega = OmegaMode::lab);
};

/// Observer invoked every `stride` integrator steps (and at pulse start/end)
/// with the elapsed local pulse time.
struct EvolveObserver {
    int stride = 50;
    std::function<void(double t, const StateVector& psi)> fn;
};

struct Populations {
    Eigen::VectorXd g_probs;
    Eigen::VectorXd e_probs;
    double target = 0;
    double rest_computational = 0;
    double aux_total = 0;
    std::size_t detected_index = 0;  // argmax over g
};

/// |s>: uniform positive amplitudes on the computational space.
StateVector init_uniform(const GoldbachInstance& inst);

/// Full lab-frame Hamiltonian at time t (real symmetric, units of U_0):
/// diagonal = shifted g-levels then e-levels; every g-e entry equals
/// 2*v_omega*cos(p_drive*t); no g-g or e-e coupling from this field.
Eigen::MatrixXd hamiltonian_at(const GoldbachInstance& inst,
                               const PulseConfig& pulse, double t);

using HamiltonianFn = std::function<Eigen::MatrixXd(double)>;

/// Midpoint-exponential integrator: each step applies the exact unitary of
/// the Hamiltonian sampled at the interval midpoint. Throws on non-Hermitian
/// input, on steps coarser than 1 rad of the fastest phase, and on norm drift.
void evolve(StateVector& psi, const HamiltonianFn& hamiltonian, double duration,
            double dt, double max_angular_rate,
            const EvolveObserver* observer = nullptr);

/// The omega-gate: drive pulse for tau_omega with the cosine clock restarted
/// at t=0. Flips the sign of the matching amplitude; the commensurability
/// condition returns all other amplitudes to their initial values.
StateVector omega_pulse(StateVector psi, const GoldbachInstance& inst,
                        const PulseConfig& pulse,
                        const EvolveObserver* observer = nullptr);

/// The s-gate. Ideal mode: exact reflection 1 - 2|s><s| on the computational
/// block. Physical mode: exact exponential of H_0 + N*v_s*|s><s| for tau_s
/// (that Hamiltonian is time-independent).
StateVector s_gate(StateVector psi, const GoldbachInstance& inst,
                   const PulseConfig& pulse,
                   const EvolveObserver* observer = nullptr);

Populations measure_populations(const StateVector& psi, const GoldbachInstance& inst);

}  // namespace goldbach::qdyn
