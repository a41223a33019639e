#include "tbdc/bell_core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tbdc {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kPivotEps = 1e-15; // amplitudes below this are treated as zero when picking the phase pivot
} // namespace

const char* to_string(Bell b) noexcept {
    switch (b) {
        case Bell::PsiPlus:  return "PsiPlus";
        case Bell::PsiMinus: return "PsiMinus";
        case Bell::PhiPlus:  return "PhiPlus";
        case Bell::PhiMinus: return "PhiMinus";
    }
    return "?";
}

const char* to_string(Pauli p) noexcept {
    switch (p) {
        case Pauli::I:  return "I";
        case Pauli::X:  return "X";
        case Pauli::Z:  return "Z";
        case Pauli::XZ: return "XZ";
    }
    return "?";
}

double TwoQubitState::norm_sq() const noexcept {
    double n = 0.0;
    for (const auto& a : amps) n += std::norm(a);
    return n;
}

bool TwoQubitState::is_normalized(double tol) const noexcept {
    return std::abs(norm_sq() - 1.0) <= tol;
}

TwoQubitState canonicalize_phase(TwoQubitState s) noexcept {
    for (const auto& a : s.amps) {
        const double mag = std::abs(a);
        if (mag > kPivotEps) {
            const Complex rot = std::conj(a) / mag;
            for (auto& amp : s.amps) amp *= rot;
            break;
        }
    }
    return s;
}

std::complex<double> inner_product(const TwoQubitState& a, const TwoQubitState& b) noexcept {
    Complex acc{0.0, 0.0};
    for (int k = 0; k < 4; ++k) acc += std::conj(a.amps[k]) * b.amps[k];
    return acc;
}

TwoQubitState canonical_state(Bell b) noexcept {
    TwoQubitState s;
    switch (b) {
        case Bell::PsiPlus:  s.amps = {Complex{0}, Complex{kInvSqrt2}, Complex{kInvSqrt2}, Complex{0}}; break;
        case Bell::PsiMinus: s.amps = {Complex{0}, Complex{kInvSqrt2}, Complex{-kInvSqrt2}, Complex{0}}; break;
        case Bell::PhiPlus:  s.amps = {Complex{kInvSqrt2}, Complex{0}, Complex{0}, Complex{kInvSqrt2}}; break;
        case Bell::PhiMinus: s.amps = {Complex{kInvSqrt2}, Complex{0}, Complex{0}, Complex{-kInvSqrt2}}; break;
    }
    return s;
}

TwoQubitState apply_pauli(Pauli op, const TwoQubitState& s) noexcept {
    // Photon 1 is the first tensor factor: X swaps HH<->VH and HV<->VV,
    // Z negates VH and VV.
    const auto& a = s.amps;
    TwoQubitState out = s;
    switch (op) {
        case Pauli::I:
            break;
        case Pauli::X:
            out.amps = {a[2], a[3], a[0], a[1]};
            break;
        case Pauli::Z:
            out.amps = {a[0], a[1], -a[2], -a[3]};
            break;
        case Pauli::XZ:
            out.amps = {-a[2], -a[3], a[0], a[1]};
            break;
    }
    return canonicalize_phase(out);
}

double fidelity(const TwoQubitState& a, const TwoQubitState& b) noexcept {
    const double f = std::norm(inner_product(a, b));
    if (f < 0.0) return 0.0;
    if (f > 1.0) return 1.0;
    return f;
}

TwoQubitState dephase(const TwoQubitState& s, double phi) noexcept {
    TwoQubitState out = s;
    out.amps[2] *= std::polar(1.0, phi);
    return canonicalize_phase(out);
}

TwoQubitState attach_time_bin(const TwoQubitState& s, int bin, int bin_count) {
    if (bin_count < 1)
        throw std::out_of_range("attach_time_bin: bin_count must be >= 1");
    if (bin < 0 || bin >= bin_count)
        throw std::out_of_range("attach_time_bin: bin " + std::to_string(bin) +
                                " not in [0, " + std::to_string(bin_count) + ")");
    TwoQubitState out = s;
    out.time_bin = bin;
    return out;
}

} // namespace tbdc
