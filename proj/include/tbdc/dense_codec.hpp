#pragma once

#include <optional>

#include "tbdc/bell_core.hpp"
#include "tbdc/rng.hpp"

namespace tbdc {

// Bell-state analyzer capability.
//   Ideal         - all four Bell states resolved
//   LinearOptics  - PhiPlus/PhiMinus conflated into one ambiguous class
//   HyperAssisted - full four-state discrimination via an auxiliary
//                   entangled degree of freedom; outcome-equivalent to Ideal
enum class BsaMode { Ideal, LinearOptics, HyperAssisted };

enum class BsaOutcome { PsiPlus, PsiMinus, PhiPlus, PhiMinus, PhiAmbiguous };

const char* to_string(BsaMode m) noexcept;
const char* to_string(BsaOutcome o) noexcept;

struct DenseCode {
    Pauli op;
    Bell state;
};

// Fixed word->Pauli->Bell bijection:
//   00 -> I  -> PsiPlus     01 -> X  -> PhiPlus
//   10 -> Z  -> PsiMinus    11 -> XZ -> PhiMinus
// Throws std::out_of_range for word > 3.
DenseCode encode(unsigned word);

// Inverse of encode's bijection; nullopt for the ambiguous class.
std::optional<unsigned> decode(BsaOutcome outcome) noexcept;

// Collapses a definite Bell result to what the analyzer can report.
BsaOutcome conflate(Bell b, BsaMode mode) noexcept;

// Projective Bell-basis measurement: outcome k drawn with probability
// fidelity(s, bell_k), then conflated per mode. Consumes one draw.
BsaOutcome bsa_measure(const TwoQubitState& s, BsaMode mode, RandomStream& rng);

// Bits per biphoton when M time-bin bits ride along:
// M + 2 for full discrimination, M + log2(3) for plain linear optics.
double capacity_bits_per_biphoton(int m_bits, BsaMode mode);

// Capacity of the 7-class hyperentangled analyzer, for reporting only.
extern const double kSevenClassHyperCapacityBits; // log2(7)

} // namespace tbdc
