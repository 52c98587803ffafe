#include "goldbach/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace goldbach::protocol {

using std::numbers::pi;

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> ideal_unitaries(const GoldbachInstance& inst) {
    const auto n = static_cast<Eigen::Index>(inst.size());
    Eigen::MatrixXd u_omega = Eigen::MatrixXd::Identity(n, n);
    u_omega(static_cast<Eigen::Index>(inst.match_g_index),
            static_cast<Eigen::Index>(inst.match_g_index)) = -1.0;
    Eigen::MatrixXd u_s = Eigen::MatrixXd::Identity(n, n) -
                          (2.0 / double(n)) * Eigen::MatrixXd::Ones(n, n);
    return {u_omega, u_s};
}

double theory_success(int r, std::size_t n) {
    const double theta = std::asin(1.0 / std::sqrt(double(n)));
    const double s = std::sin((2.0 * r + 1.0) * theta);
    return s * s;
}

int optimal_iterations(std::size_t n) {
    const double theta = std::asin(1.0 / std::sqrt(double(n)));
    return static_cast<int>(std::lround(pi / (4.0 * theta) - 0.5));
}

namespace {

Snapshot snapshot_of(const qdyn::StateVector& psi, const GoldbachInstance& inst) {
    const auto pop = qdyn::measure_populations(psi, inst);
    return {pop.target, pop.rest_computational, pop.aux_total};
}

void attach_theory(GroverRunRecord& rec, std::size_t n) {
    for (int i = 0; i <= rec.iterations; ++i) rec.theory.push_back(theory_success(i, n));
}

}  // namespace

GroverRunRecord run_ideal(std::size_t size, std::size_t match_index, int r) {
    if (r < 0) throw std::invalid_argument("run_ideal: negative iteration count");
    const auto n = static_cast<Eigen::Index>(size);
    const auto w = static_cast<Eigen::Index>(match_index);
    Eigen::VectorXd psi = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(double(n)));

    GroverRunRecord rec;
    rec.iterations = r;
    auto snap = [&] {
        const double target = psi(w) * psi(w);
        rec.snapshots.push_back({target, psi.squaredNorm() - target, 0.0});
        Eigen::Index arg = 0;
        psi.cwiseAbs2().maxCoeff(&arg);
        rec.argmax_per_iteration.push_back(static_cast<std::size_t>(arg));
    };
    snap();
    for (int i = 0; i < r; ++i) {
        psi(w) = -psi(w);                               // U_omega
        psi.array() -= 2.0 * psi.mean();                // U_s = 1 - 2|s><s|
        snap();
    }
    attach_theory(rec, size);
    Eigen::Index arg = 0;
    psi.cwiseAbs2().maxCoeff(&arg);
    rec.detected_index = static_cast<std::size_t>(arg);
    rec.success = rec.detected_index == match_index;
    return rec;
}

GroverRunRecord run_ideal(const GoldbachInstance& inst, int r) {
    return run_ideal(inst.size(), inst.match_g_index, r);
}

GroverRunRecord run_physical(const GoldbachInstance& inst,
                             const qdyn::PulseConfig& pulse, int r,
                             const qdyn::EvolveObserver* observer,
                             const OmegaGateFn& omega_override) {
    if (r < 0) throw std::invalid_argument("run_physical: negative iteration count");
    qdyn::StateVector psi = qdyn::init_uniform(inst);

    GroverRunRecord rec;
    rec.iterations = r;
    auto snap = [&] {
        rec.snapshots.push_back(snapshot_of(psi, inst));
        rec.argmax_per_iteration.push_back(qdyn::measure_populations(psi, inst).detected_index);
    };
    snap();

    // Observers see protocol-global time: local pulse clocks are offset by
    // the accumulated duration of the preceding pulses.
    double t_offset = 0.0;
    qdyn::EvolveObserver shifted;
    const qdyn::EvolveObserver* obs = nullptr;
    if (observer && observer->fn) {
        shifted.stride = observer->stride;
        obs = &shifted;
    }
    for (int i = 0; i < r; ++i) {
        if (obs)
            shifted.fn = [&, t_offset](double t, const qdyn::StateVector& s) {
                observer->fn(t_offset + t, s);
            };
        psi = omega_override ? omega_override(std::move(psi))
                             : qdyn::omega_pulse(std::move(psi), inst, pulse, obs);
        t_offset += pulse.tau_omega;
        if (obs)
            shifted.fn = [&, t_offset](double t, const qdyn::StateVector& s) {
                observer->fn(t_offset + t, s);
            };
        psi = qdyn::s_gate(std::move(psi), inst, pulse, obs);
        if (pulse.s_gate_mode == qdyn::SGateMode::physical) t_offset += pulse.tau_s;
        snap();
    }
    attach_theory(rec, inst.size());
    const auto pop = qdyn::measure_populations(psi, inst);
    rec.detected_index = pop.detected_index;
    rec.success = rec.detected_index == inst.match_g_index;
    return rec;
}

std::vector<SweepRow> sweep_pulse_params(const GoldbachInstance& inst,
                                         const std::vector<int>& m_candidates,
                                         const std::vector<double>& v_s_candidates,
                                         double dt, qdyn::SGateMode mode) {
    if (m_candidates.empty() || v_s_candidates.empty())
        throw std::invalid_argument("sweep_pulse_params: empty candidate list");
    const int r_opt = optimal_iterations(inst.size());
    std::vector<SweepRow> rows;
    for (int m : m_candidates) {
        for (double v_s : v_s_candidates) {
            const auto pulse = qdyn::PulseConfig::make(m, v_s, inst.size(), dt, mode);
            const auto rec = run_physical(inst, pulse, r_opt);
            rows.push_back({m, v_s, r_opt, rec.snapshots.back().target_pop});
        }
    }
    std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
        if (a.target_pop != b.target_pop) return a.target_pop > b.target_pop;
        if (a.M != b.M) return a.M < b.M;
        return a.v_s > b.v_s;
    });
    return rows;
}

std::string snapshots_csv(const GroverRunRecord& record) {
    std::ostringstream out;
    out.precision(12);
    out << "iteration,target_pop,rest_pop,aux_pop,theory\n";
    for (std::size_t i = 0; i < record.snapshots.size(); ++i) {
        const auto& s = record.snapshots[i];
        out << i << ',' << s.target_pop << ',' << s.rest_computational_pop << ','
            << s.auxiliary_pop << ',' << record.theory[i] << '\n';
    }
    return out.str();
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out.precision(12);
    out << "M,v_s,r_opt,target_pop\n";
    for (const auto& row : rows)
        out << row.M << ',' << row.v_s << ',' << row.r_opt << ',' << row.target_pop << '\n';
    return out.str();
}

}  // namespace goldbach::protocol
