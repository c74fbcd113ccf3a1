#ifndef INTORD_TOLERANCES_HPP
#define INTORD_TOLERANCES_HPP

// Convergence thresholds used by the verification reports. None of these
// come with a proven error bound; they are desk-scale targets at n <= 200.

#include <array>
#include <cstddef>

namespace intord::tolerance
{

// extrapolated leading constant vs closed form, relative
inline constexpr double leading_constant_rel = 1e-3;
// predicted vs fitted second coefficient of the rigid expansion, relative
inline constexpr double d1_rel_gap = 0.05;
// |r_n / i_n - e^{-pi^2/6}| at the largest sample point
inline constexpr double rigid_proportion_abs = 0.01;
// defect(n) <= factor * defect(n/2)
inline constexpr double defect_halving_factor = 0.75;
// first-order Stirling correction must shrink the error at least this much
inline constexpr double hsu_improvement_factor = 10.0;
// matchings_lower(n, j) / S(n, n-j) within this of 1
inline constexpr double matchings_rel = 0.05;

inline constexpr std::array<std::size_t, 3> fit_points{100, 150, 200};
inline constexpr std::array<std::size_t, 3> trend_points{50, 100, 200};

} // namespace intord::tolerance

#endif
