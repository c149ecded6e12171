#pragma once

// Inner loops of both simulation models. Each kernel has a scalar reference
// implementation and, where the CPU supports it, an AVX2+FMA variant chosen at
// runtime. Variants agree to rounding; the selection is process-wide so all
// results within one process come from the same backend.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace slitfactor::kernels {

enum class Backend { scalar, avx2 };

std::string_view to_string(Backend backend);
std::optional<Backend> parse_backend(std::string_view name);

bool available(Backend backend);

/// Backend used by the dispatching entry points below.
Backend active_backend();

/// Pins a backend (nullopt restores automatic selection). Throws InvalidInput
/// if the backend is not available on this CPU.
void select_backend(std::optional<Backend> backend);

/// sum_{j<count} exp[i pi (chi - (first + j))^2 / n_eff]
std::complex<double> chirp_sum(double chi, std::int64_t first, std::size_t count, double n_eff);

/// sum_{j<count} of the chirp integral over the slit [q - fill/2, q + fill/2],
/// q = first + j, observed at chi.
std::complex<double> slit_sum(double chi, std::int64_t first, std::size_t count, double n_eff,
                              double fill);

namespace scalar {
std::complex<double> chirp_sum(double chi, std::int64_t first, std::size_t count, double n_eff);
std::complex<double> slit_sum(double chi, std::int64_t first, std::size_t count, double n_eff,
                              double fill);
}  // namespace scalar

#if defined(SLITFACTOR_HAVE_AVX2)
namespace avx2 {
std::complex<double> chirp_sum(double chi, std::int64_t first, std::size_t count, double n_eff);
std::complex<double> slit_sum(double chi, std::int64_t first, std::size_t count, double n_eff,
                              double fill);
}  // namespace avx2
#endif

}  // namespace slitfactor::kernels
