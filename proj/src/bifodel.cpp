#include "tbdc/bifodel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tbdc {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;

void check_address(int address, int n_stages) {
    if (n_stages < 1 || n_stages > 30)
        throw std::invalid_argument("bifodel: n_stages must be in [1, 30]");
    if (address < 0 || address >= (1 << n_stages))
        throw std::out_of_range("bifodel: address " + std::to_string(address) +
                                " not in [0, 2^" + std::to_string(n_stages) + ")");
}

struct Accumulated {
    double phase_rad = 0.0;
    double differential_delay_s = 0.0;
    double polarization_delay_s = 0.0;
};

// Sums the long-route imperfections of the traversed stages, in stage order.
Accumulated accumulate(const BifodelConfig& cfg, int address) {
    Accumulated acc;
    for (int k = 0; k < cfg.n_stages(); ++k) {
        if (address & (1 << k)) {
            acc.phase_rad += cfg.stages[k].phase_error_rad;
            acc.differential_delay_s += cfg.stages[k].differential_delay_s;
            acc.polarization_delay_s += cfg.stages[k].polarization_delay_s;
        }
    }
    return acc;
}

} // namespace

double fold_phase(double phi) noexcept {
    double folded = std::remainder(phi, kTwoPi); // lands in [-pi, pi]
    if (folded <= -kPi) folded += kTwoPi;
    return folded;
}

double BifodelConfig::step_delay_s(int stage) const {
    if (stage < 0 || stage >= n_stages())
        throw std::out_of_range("bifodel: stage index out of range");
    return std::ldexp(bin_period_s, stage);
}

double BifodelConfig::effective_window_s() const noexcept {
    return coincidence_window_s > 0.0 ? coincidence_window_s : bin_period_s;
}

void BifodelConfig::validate() const {
    if (stages.empty() || n_stages() > 30)
        throw std::invalid_argument("bifodel: need between 1 and 30 stages");
    if (!(bin_period_s > 0.0))
        throw std::invalid_argument("bifodel: bin_period_s must be > 0");
    for (int k = 0; k < n_stages(); ++k) {
        const auto& st = stages[k];
        if (st.differential_delay_s < 0.0 || st.polarization_delay_s < 0.0 || st.phase_error_rad < 0.0)
            throw std::invalid_argument("bifodel: stage " + std::to_string(k) +
                                        " imperfection magnitudes must be >= 0");
    }
    if (coincidence_window_s < 0.0)
        throw std::invalid_argument("bifodel: coincidence_window_s must be >= 0");
    if (phase_tolerance_rad < 0.0)
        throw std::invalid_argument("bifodel: phase_tolerance_rad must be >= 0");
    if (coherence_time_s < 0.0)
        throw std::invalid_argument("bifodel: coherence_time_s must be >= 0");
}

std::vector<bool> switch_settings(int address, int n_stages) {
    check_address(address, n_stages);
    std::vector<bool> bits(static_cast<size_t>(n_stages));
    for (int k = 0; k < n_stages; ++k) bits[static_cast<size_t>(k)] = (address >> k) & 1;
    return bits;
}

double total_delay(const BifodelConfig& cfg, int address) {
    cfg.validate();
    check_address(address, cfg.n_stages());
    // sum of 2^k * T_b over set bits == address * T_b; the single multiply
    // of the exact integer keeps the result exact
    long steps = 0;
    for (int k = 0; k < cfg.n_stages(); ++k)
        if (address & (1 << k)) steps += 1L << k;
    return static_cast<double>(steps) * cfg.bin_period_s;
}

CoherenceReport validate_coherence(const BifodelConfig& cfg, int address,
                                   double coincidence_window_s, double phase_tolerance_rad) {
    cfg.validate();
    check_address(address, cfg.n_stages());
    if (!(coincidence_window_s > 0.0))
        throw std::invalid_argument("validate_coherence: coincidence window must be > 0");
    if (phase_tolerance_rad < 0.0)
        throw std::invalid_argument("validate_coherence: phase tolerance must be >= 0");

    const Accumulated acc = accumulate(cfg, address);
    CoherenceReport report;
    report.accumulated_phase_rad = acc.phase_rad;
    report.folded_phase_rad = fold_phase(acc.phase_rad);
    report.accumulated_differential_delay_s = acc.differential_delay_s;
    report.accumulated_polarization_delay_s = acc.polarization_delay_s;

    report.polarization_independent = acc.polarization_delay_s < coincidence_window_s;
    report.no_extra_correlations = cfg.single_spatial_mode;
    report.differential_delay_ok = acc.differential_delay_s < coincidence_window_s;
    report.relative_phase_ok = std::abs(report.folded_phase_rad) <= phase_tolerance_rad;
    report.distinct_spatial_modes = cfg.distinct_output_modes;
    return report;
}

std::pair<TwoQubitState, CoherenceReport> apply_delay(const TwoQubitState& s,
                                                      const BifodelConfig& cfg, int address) {
    CoherenceReport report =
        validate_coherence(cfg, address, cfg.effective_window_s(), cfg.phase_tolerance_rad);
    TwoQubitState out = dephase(s, report.accumulated_phase_rad);
    out = attach_time_bin(out, address, cfg.n_addresses());
    return {out, report};
}

} // namespace tbdc
