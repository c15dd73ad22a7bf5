#pragma once

// Worked numbers A..E in canonical rendering, with A + B = C, A - B = D,
// A * B = E and E / A = B.

namespace grossone::reference {

inline constexpr const char* kA = "74.9*G1^42.3 + 5.1 + 13.8*G1^-25.6";
inline constexpr const char* kB = "5.7*G1^16.8 - 7.4*G1^-14.9";
inline constexpr const char* kC = "74.9*G1^42.3 + 5.7*G1^16.8 + 5.1 - 7.4*G1^-14.9 + 13.8*G1^-25.6";
inline constexpr const char* kD = "74.9*G1^42.3 - 5.7*G1^16.8 + 5.1 + 7.4*G1^-14.9 + 13.8*G1^-25.6";
inline constexpr const char* kE =
    "426.93*G1^59.1 - 554.26*G1^27.4 + 29.07*G1^16.8 + 78.66*G1^-8.8 - 37.74*G1^-14.9 - 102.12*G1^-40.5";

// sum_{k=1}^{G1} k*(2*G1+1)^k.
inline constexpr const char* kKQKSum = "(2*G1+1)*((2*G1+1)^G1*(2*G1^2-1)+1)/(4*G1^2)";

}  // namespace grossone::reference
