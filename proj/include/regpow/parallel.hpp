#pragma once

#include <cstddef>

namespace regpow {

/// Budgets for enumerations whose size is data dependent. Exceeding one
/// raises CapExceeded.
struct Limits {
  /// Maximum number of exponent vectors visited by a box enumeration
  /// (symbolic powers, integral closures, closed-form power generators).
  std::size_t enumeration_cap = 20'000'000;
  /// Maximum size of the lcm closure searched for Betti numbers.
  std::size_t lcm_closure_cap = 100'000;
};

/// Number of OpenMP workers used by the parallel kernels.
int worker_count();
/// Sets the OpenMP worker count; values < 1 restore the runtime default.
void set_worker_count(int workers);

}  // namespace regpow
