#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace orbitgraph {

// The five classical symmetric-pair families with more than one K-orbit
// per nilpotent G-orbit.
enum class PairType { AIII, BDI, CI, CII, DIII };

inline const char* to_string(PairType t) {
  switch (t) {
    case PairType::AIII: return "AIII";
    case PairType::BDI: return "BDI";
    case PairType::CI: return "CI";
    case PairType::CII: return "CII";
    case PairType::DIII: return "DIII";
  }
  return "?";
}

inline std::optional<PairType> parse_pair_type(std::string_view s) {
  if (s == "AIII") return PairType::AIII;
  if (s == "BDI") return PairType::BDI;
  if (s == "CI") return PairType::CI;
  if (s == "CII") return PairType::CII;
  if (s == "DIII") return PairType::DIII;
  return std::nullopt;
}

// Signature constraints: CI and DIII force p = q, CII forces p and q even.
inline bool signature_ok(PairType t, long long p, long long q,
                         std::string* why = nullptr) {
  if (p < 0 || q < 0) {
    if (why) *why = "signature entries must be nonnegative";
    return false;
  }
  switch (t) {
    case PairType::CI:
    case PairType::DIII:
      if (p != q) {
        if (why)
          *why = std::string(to_string(t)) + " requires p = q";
        return false;
      }
      break;
    case PairType::CII:
      if (p % 2 != 0 || q % 2 != 0) {
        if (why) *why = "CII requires p and q even";
        return false;
      }
      break;
    default:
      break;
  }
  return true;
}

inline void check_signature(PairType t, long long p, long long q) {
  std::string why;
  if (!signature_ok(t, p, q, &why))
    throw std::invalid_argument("invalid signature (" + std::to_string(p) +
                                "," + std::to_string(q) + ") for " +
                                to_string(t) + ": " + why);
}

inline constexpr PairType kAllTypes[] = {PairType::AIII, PairType::BDI,
                                         PairType::CI, PairType::CII,
                                         PairType::DIII};

}  // namespace orbitgraph
