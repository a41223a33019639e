#pragma once

#include <array>
#include <complex>

namespace tbdc {

using Complex = std::complex<double>;

inline constexpr double kNormTol = 1e-12;

// The four maximally entangled two-photon polarization states.
enum class Bell { PsiPlus, PsiMinus, PhiPlus, PhiMinus };

// Single-photon Pauli operations, applied to photon 1 only.
// XZ means Z first, then X.
enum class Pauli { I, X, Z, XZ };

inline constexpr std::array<Bell, 4> kBellBasis = {
    Bell::PsiPlus, Bell::PsiMinus, Bell::PhiPlus, Bell::PhiMinus};

const char* to_string(Bell b) noexcept;
const char* to_string(Pauli p) noexcept;

// Pure polarization state of a photon pair plus its classical arrival
// time-bin. Amplitude order is HH, HV, VH, VV. Operations keep states
// normalized and global-phase canonical (first nonzero amplitude real
// and positive) so equal states compare component-wise.
struct TwoQubitState {
    std::array<Complex, 4> amps{};
    int time_bin = 0;

    double norm_sq() const noexcept;
    bool is_normalized(double tol = kNormTol) const noexcept;
};

// Rotates the global phase so the first nonzero amplitude is real-positive.
TwoQubitState canonicalize_phase(TwoQubitState s) noexcept;

std::complex<double> inner_product(const TwoQubitState& a, const TwoQubitState& b) noexcept;

// Canonical amplitude vector of a Bell state, at time-bin 0.
// PsiPlus/PsiMinus = (0, 1, +-1, 0)/sqrt2, PhiPlus/PhiMinus = (1, 0, 0, +-1)/sqrt2.
TwoQubitState canonical_state(Bell b) noexcept;

// Applies the operation to photon 1. Preserves the time-bin and norm.
TwoQubitState apply_pauli(Pauli op, const TwoQubitState& s) noexcept;

// |<a|b>|^2, clamped to [0, 1]. Symmetric in its arguments.
double fidelity(const TwoQubitState& a, const TwoQubitState& b) noexcept;

// Multiplies the VH amplitude by e^{i phi}: the relative phase between
// the two terms of a Psi-type state. Norm preserved.
TwoQubitState dephase(const TwoQubitState& s, double phi) noexcept;

// Returns s relocated to the given time-bin; amplitudes untouched.
// Throws std::out_of_range unless 0 <= bin < bin_count.
TwoQubitState attach_time_bin(const TwoQubitState& s, int bin, int bin_count);

} // namespace tbdc
