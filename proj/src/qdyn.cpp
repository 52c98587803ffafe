#include "goldbach/qdyn.hpp"

#include <cmath>
#include <numbers>

namespace goldbach::qdyn {

using std::numbers::pi;
using Complex = std::complex<double>;

Eigen::VectorXcd StateVector::full() const {
    Eigen::VectorXcd v(g_amps.size() + e_amps.size());
    v << g_amps, e_amps;
    return v;
}

StateVector StateVector::from_full(const Eigen::VectorXcd& v, Eigen::Index n_g) {
    StateVector psi;
    psi.g_amps = v.head(n_g);
    psi.e_amps = v.tail(v.size() - n_g);
    return psi;
}

PulseConfig PulseConfig::make(int M, double v_s, std::size_t n_computational,
                              double dt, SGateMode mode, OmegaMode omega) {
    if (M < 1) throw std::invalid_argument("PulseConfig: M must be a positive integer");
    if (v_s <= 0 || dt <= 0) throw std::invalid_argument("PulseConfig: v_s and dt must be positive");
    if (n_computational < 2) throw std::invalid_argument("PulseConfig: need at least 2 computational states");
    PulseConfig p;
    p.M = M;
    p.v_omega = 1.0 / (2.0 * M);
    p.v_s = v_s;
    p.tau_omega = 2.0 * pi * M;  // pi / v_omega
    p.tau_s = pi / (static_cast<double>(n_computational) * v_s);
    p.dt = dt;
    p.s_gate_mode = mode;
    p.omega_mode = omega;
    return p;
}

StateVector init_uniform(const GoldbachInstance& inst) {
    StateVector psi;
    const auto n = static_cast<Eigen::Index>(inst.size());
    psi.g_amps = Eigen::VectorXcd::Constant(n, Complex(1.0 / std::sqrt(double(n)), 0.0));
    psi.e_amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(inst.aux_size()));
    return psi;
}

namespace {

Eigen::MatrixXd diagonal_part(const GoldbachInstance& inst) {
    const auto n = static_cast<Eigen::Index>(inst.size());
    const auto m = static_cast<Eigen::Index>(inst.aux_size());
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n + m, n + m);
    for (Eigen::Index i = 0; i < n; ++i) h(i, i) = double(inst.g_levels[i]);
    for (Eigen::Index j = 0; j < m; ++j) h(n + j, n + j) = double(inst.e_levels[j]);
    return h;
}

// Apply exp(-i*H*t) exactly via eigendecomposition of the real symmetric H.
void apply_exponential(const Eigen::MatrixXd& h, double t, Eigen::VectorXcd& psi) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    if (es.info() != Eigen::Success)
        throw IntegratorError("eigendecomposition failed");
    const Eigen::VectorXd& lam = es.eigenvalues();
    const Eigen::MatrixXd& v = es.eigenvectors();
    // Real and imaginary parts handled separately: v is real orthogonal.
    const Eigen::VectorXd yr = v.transpose() * psi.real().matrix();
    const Eigen::VectorXd yi = v.transpose() * psi.imag().matrix();
    Eigen::VectorXd zr(lam.size()), zi(lam.size());
    for (Eigen::Index k = 0; k < lam.size(); ++k) {
        const double c = std::cos(lam(k) * t), s = std::sin(lam(k) * t);
        // (yr + i*yi) * (c - i*s)
        zr(k) = yr(k) * c + yi(k) * s;
        zi(k) = yi(k) * c - yr(k) * s;
    }
    const Eigen::VectorXd outr = v * zr;
    const Eigen::VectorXd outi = v * zi;
    psi.real() = outr;
    psi.imag() = outi;
}

}  // namespace

Eigen::MatrixXd hamiltonian_at(const GoldbachInstance& inst,
                               const PulseConfig& pulse, double t) {
    const auto n = static_cast<Eigen::Index>(inst.size());
    const auto m = static_cast<Eigen::Index>(inst.aux_size());
    Eigen::MatrixXd h = diagonal_part(inst);
    const double c = 2.0 * pulse.v_omega * std::cos(double(inst.p_drive) * t);
    h.block(0, n, n, m).setConstant(c);
    h.block(n, 0, m, n).setConstant(c);
    return h;
}

void evolve(StateVector& psi, const HamiltonianFn& hamiltonian, double duration,
            double dt, double max_angular_rate, const EvolveObserver* observer) {
    if (duration < 0) throw std::invalid_argument("evolve: negative duration");
    const Eigen::Index n_g = psi.g_amps.size();
    Eigen::VectorXcd v = psi.full();
    const double norm_in = v.norm();

    const int steps = std::max(1, static_cast<int>(std::ceil(duration / dt - 1e-12)));
    const double h = duration / steps;
    if (h * max_angular_rate > 1.0)
        throw IntegratorError("evolve: step too large for the fastest phase (" +
                              std::to_string(h * max_angular_rate) + " rad/step)");

    if (observer && observer->fn) observer->fn(0.0, psi);
    for (int k = 0; k < steps; ++k) {
        const double t_mid = (k + 0.5) * h;
        Eigen::MatrixXd ham = hamiltonian(t_mid);
        if ((ham - ham.transpose()).cwiseAbs().maxCoeff() > 1e-12)
            throw IntegratorError("evolve: non-Hermitian Hamiltonian");
        apply_exponential(ham, h, v);
        if (observer && observer->fn && ((k + 1) % observer->stride == 0 || k + 1 == steps))
            observer->fn((k + 1) * h, StateVector::from_full(v, n_g));
    }

    if (std::abs(v.norm() - norm_in) > 1e-9)
        throw IntegratorError("evolve: norm drift beyond tolerance");
    psi = StateVector::from_full(v, n_g);
}

StateVector omega_pulse(StateVector psi, const GoldbachInstance& inst,
                        const PulseConfig& pulse, const EvolveObserver* observer) {
    double max_level = 0;
    for (auto lv : inst.g_levels) max_level = std::max(max_level, std::abs(double(lv)));
    for (auto lv : inst.e_levels) max_level = std::max(max_level, std::abs(double(lv)));
    const double dim = double(inst.size() + inst.aux_size());

    if (pulse.omega_mode == OmegaMode::rwa) {
        // Rotating frame of the drive: static detuned levels, coupling v_omega.
        // p_drive * tau_omega is a multiple of 2*pi, so the frame coincides
        // with the lab frame at the end of the pulse.
        const auto n = static_cast<Eigen::Index>(inst.size());
        const auto m = static_cast<Eigen::Index>(inst.aux_size());
        Eigen::MatrixXd ham = diagonal_part(inst);
        for (Eigen::Index j = 0; j < m; ++j) ham(n + j, n + j) += double(inst.p_drive);
        ham.block(0, n, n, m).setConstant(pulse.v_omega);
        ham.block(n, 0, m, n).setConstant(pulse.v_omega);
        Eigen::VectorXcd v = psi.full();
        apply_exponential(ham, pulse.tau_omega, v);
        return StateVector::from_full(v, n);
    }

    const double max_rate = max_level + double(inst.p_drive) + 2.0 * pulse.v_omega * dim;
    const HamiltonianFn ham = [&](double t) { return hamiltonian_at(inst, pulse, t); };
    evolve(psi, ham, pulse.tau_omega, pulse.dt, max_rate, observer);
    return psi;
}

StateVector s_gate(StateVector psi, const GoldbachInstance& inst,
                   const PulseConfig& pulse, const EvolveObserver* observer) {
    const auto n = static_cast<Eigen::Index>(inst.size());
    if (pulse.s_gate_mode == SGateMode::ideal) {
        // 1 - 2|s><s| on the computational block.
        const Complex overlap = psi.g_amps.sum() / double(n);  // <s|psi> / sqrt(N)
        psi.g_amps.array() -= 2.0 * overlap;
        return psi;
    }

    // Physical quench: H_0 + N*v_s*|s><s| is time-independent, so a single
    // exact exponential covers the whole tau_s interval.
    const auto m = static_cast<Eigen::Index>(inst.aux_size());
    Eigen::MatrixXd ham = diagonal_part(inst);
    ham.block(0, 0, n, n).array() += pulse.v_s;
    if (observer && observer->fn) observer->fn(0.0, psi);
    Eigen::VectorXcd v = psi.full();
    apply_exponential(ham, pulse.tau_s, v);
    psi = StateVector::from_full(v, n);
    if (observer && observer->fn) observer->fn(pulse.tau_s, psi);
    (void)m;
    return psi;
}

Populations measure_populations(const StateVector& psi, const GoldbachInstance& inst) {
    Populations pop;
    pop.g_probs = psi.g_amps.cwiseAbs2();
    pop.e_probs = psi.e_amps.cwiseAbs2();
    pop.target = pop.g_probs(static_cast<Eigen::Index>(inst.match_g_index));
    pop.rest_computational = pop.g_probs.sum() - pop.target;
    pop.aux_total = pop.e_probs.sum();
    Eigen::Index arg = 0;
    pop.g_probs.maxCoeff(&arg);
    pop.detected_index = static_cast<std::size_t>(arg);
    return pop;
}

}  // namespace goldbach::qdyn
