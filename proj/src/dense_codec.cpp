#include "tbdc/dense_codec.hpp"

#include <cmath>
#include <stdexcept>

namespace tbdc {

const double kSevenClassHyperCapacityBits = std::log2(7.0);

const char* to_string(BsaMode m) noexcept {
    switch (m) {
        case BsaMode::Ideal:         return "ideal";
        case BsaMode::LinearOptics:  return "linear-optics";
        case BsaMode::HyperAssisted: return "hyper-assisted";
    }
    return "?";
}

const char* to_string(BsaOutcome o) noexcept {
    switch (o) {
        case BsaOutcome::PsiPlus:      return "PsiPlus";
        case BsaOutcome::PsiMinus:     return "PsiMinus";
        case BsaOutcome::PhiPlus:      return "PhiPlus";
        case BsaOutcome::PhiMinus:     return "PhiMinus";
        case BsaOutcome::PhiAmbiguous: return "PhiAmbiguous";
    }
    return "?";
}

DenseCode encode(unsigned word) {
    switch (word) {
        case 0b00: return {Pauli::I, Bell::PsiPlus};
        case 0b01: return {Pauli::X, Bell::PhiPlus};
        case 0b10: return {Pauli::Z, Bell::PsiMinus};
        case 0b11: return {Pauli::XZ, Bell::PhiMinus};
        default:   throw std::out_of_range("encode: word must be a 2-bit value");
    }
}

std::optional<unsigned> decode(BsaOutcome outcome) noexcept {
    switch (outcome) {
        case BsaOutcome::PsiPlus:      return 0b00u;
        case BsaOutcome::PhiPlus:      return 0b01u;
        case BsaOutcome::PsiMinus:     return 0b10u;
        case BsaOutcome::PhiMinus:     return 0b11u;
        case BsaOutcome::PhiAmbiguous: return std::nullopt;
    }
    return std::nullopt;
}

BsaOutcome conflate(Bell b, BsaMode mode) noexcept {
    if (mode == BsaMode::LinearOptics && (b == Bell::PhiPlus || b == Bell::PhiMinus))
        return BsaOutcome::PhiAmbiguous;
    switch (b) {
        case Bell::PsiPlus:  return BsaOutcome::PsiPlus;
        case Bell::PsiMinus: return BsaOutcome::PsiMinus;
        case Bell::PhiPlus:  return BsaOutcome::PhiPlus;
        case Bell::PhiMinus: return BsaOutcome::PhiMinus;
    }
    return BsaOutcome::PsiPlus;
}

BsaOutcome bsa_measure(const TwoQubitState& s, BsaMode mode, RandomStream& rng) {
    const double u = rng.uniform();
    double cum = 0.0;
    for (Bell b : kBellBasis) {
        cum += fidelity(s, canonical_state(b));
        if (u < cum) return conflate(b, mode);
    }
    // u landed in the <=1e-12 completeness slack; attribute it to the last state
    return conflate(kBellBasis.back(), mode);
}

double capacity_bits_per_biphoton(int m_bits, BsaMode mode) {
    if (m_bits < 0) throw std::invalid_argument("capacity: m_bits must be >= 0");
    switch (mode) {
        case BsaMode::Ideal:
        case BsaMode::HyperAssisted:
            return static_cast<double>(m_bits) + 2.0;
        case BsaMode::LinearOptics:
            return static_cast<double>(m_bits) + std::log2(3.0);
    }
    throw std::invalid_argument("capacity: unknown mode");
}

} // namespace tbdc
