#ifndef TWISTK_ZMOD_HPP
#define TWISTK_ZMOD_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace twistk::detail {

// Solves A x = b over Z_m (m not necessarily prime) by integer Gaussian
// elimination with gcd pivoting. Returns one solution, or nullopt when
// the system is inconsistent.
std::optional<std::vector<std::int64_t>> solve_mod(
    std::vector<std::vector<std::int64_t>> A, std::vector<std::int64_t> b,
    std::int64_t m);

}  // namespace twistk::detail

#endif
