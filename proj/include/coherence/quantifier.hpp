#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace coherence {

/// The eight coherence quantifiers with measurable bounds.
enum class QuantifierKind {
  RelEntropy,      // C_re, relative entropy of coherence
  L1,              // C_l1
  L2,              // C_l2
  TraceNorm,       // C̃_tr, trace distance to the dephased state
  RoofInfidelity,  // C'_if, convex roof of infidelity
  Skew,            // C_s, Wigner-Yanase skew information
  RoofSkew,        // C'_s, convex roof of skew information
  Robustness,      // C_Ro
};

inline constexpr std::array<QuantifierKind, 8> kAllKinds = {
    QuantifierKind::RelEntropy, QuantifierKind::L1,
    QuantifierKind::L2,         QuantifierKind::TraceNorm,
    QuantifierKind::RoofInfidelity, QuantifierKind::Skew,
    QuantifierKind::RoofSkew,   QuantifierKind::Robustness,
};

std::string_view to_string(QuantifierKind kind);

// Accepts the enumerator names ("RelEntropy") and the short symbols
// ("C_re", "re", "l1", "tr", "if", "s", "s'", "rob"), case-insensitively.
std::optional<QuantifierKind> parse_kind(std::string_view text);

}  // namespace coherence
