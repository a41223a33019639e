#pragma once

#include <utility>
#include <vector>

#include "tbdc/bell_core.hpp"

namespace tbdc {

// Imperfections of one stage's long route, relative to its short route.
struct DelayStage {
    double differential_delay_s = 0.0;  // photon-1 vs photon-2 mismatch
    double phase_error_rad = 0.0;       // relative-phase kick
    double polarization_delay_s = 0.0;  // H vs V delay mismatch
};

// Binary switched delay line: stage k's long route adds 2^k bin periods.
// n stages address 2^n delays, 0 .. (2^n - 1) * bin_period_s.
struct BifodelConfig {
    double bin_period_s = 0.0;         // T_b
    std::vector<DelayStage> stages;    // index = stage number

    // single-mode propagation assumptions, reported by the validator as-is
    bool single_spatial_mode = true;   // no correlations built with other degrees of freedom
    bool distinct_output_modes = true; // pair exits in two distinguishable spatial modes

    double coherence_time_s = 0.0;     // t_c; bins are resolvable only when T_b exceeds it

    // thresholds used when apply_delay builds its report;
    // coincidence_window_s == 0 means "use the bin period"
    double coincidence_window_s = 0.0;
    double phase_tolerance_rad = 1.5707963267948966; // pi/2: beyond this the state is nearer the flipped one

    int n_stages() const noexcept { return static_cast<int>(stages.size()); }
    int n_addresses() const noexcept { return 1 << stages.size(); }
    double step_delay_s(int stage) const; // 2^stage * T_b, exact
    double effective_window_s() const noexcept;

    bool bin_period_exceeds_coherence_time() const noexcept { return bin_period_s > coherence_time_s; }

    void validate() const; // throws std::invalid_argument
};

// Per-address pass/fail of the five coherence requirements, with the
// accumulated long-route quantities behind each verdict.
struct CoherenceReport {
    double accumulated_phase_rad = 0.0;
    double folded_phase_rad = 0.0; // accumulated phase folded to (-pi, pi]
    double accumulated_differential_delay_s = 0.0;
    double accumulated_polarization_delay_s = 0.0;

    bool polarization_independent = true;
    bool no_extra_correlations = true;
    bool differential_delay_ok = true;
    bool relative_phase_ok = true;
    bool distinct_spatial_modes = true;

    bool pass() const noexcept {
        return polarization_independent && no_extra_correlations && differential_delay_ok &&
               relative_phase_ok && distinct_spatial_modes;
    }
};

// Folds an angle to (-pi, pi].
double fold_phase(double phi) noexcept;

// Bit k set = stage k routed long. Round-trips with the address.
// Throws std::out_of_range when the address does not fit n_stages bits.
std::vector<bool> switch_settings(int address, int n_stages);

// address * T_b, computed from the integer step count so it is exact.
double total_delay(const BifodelConfig& cfg, int address);

// Checks the accumulated long-route imperfections for one address against
// the given coincidence window and relative-phase tolerance.
CoherenceReport validate_coherence(const BifodelConfig& cfg, int address,
                                   double coincidence_window_s, double phase_tolerance_rad);

// Routes the state through the line: time-bin becomes the address and the
// traversed stages' phase errors dephase the polarization state. The report
// uses the thresholds stored in the config.
std::pair<TwoQubitState, CoherenceReport> apply_delay(const TwoQubitState& s,
                                                      const BifodelConfig& cfg, int address);

} // namespace tbdc
