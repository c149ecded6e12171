#include <atomic>
#include <string>

#include "slitfactor/error.hpp"
#include "slitfactor/kernels.hpp"

namespace slitfactor::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(SLITFACTOR_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool has = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return has;
#else
  return false;
#endif
}

Backend detect() { return cpu_has_avx2() ? Backend::avx2 : Backend::scalar; }

std::atomic<Backend>& current() {
  static std::atomic<Backend> backend{detect()};
  return backend;
}

}  // namespace

std::string_view to_string(Backend backend) {
  switch (backend) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
  }
  return "unknown";
}

std::optional<Backend> parse_backend(std::string_view name) {
  if (name == "scalar") return Backend::scalar;
  if (name == "avx2") return Backend::avx2;
  return std::nullopt;
}

bool available(Backend backend) {
  return backend == Backend::scalar || cpu_has_avx2();
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void select_backend(std::optional<Backend> backend) {
  const Backend chosen = backend.value_or(detect());
  if (!available(chosen)) {
    throw InvalidInput("kernel backend '" + std::string(to_string(chosen)) +
                       "' is not supported on this CPU");
  }
  current().store(chosen, std::memory_order_relaxed);
}

std::complex<double> chirp_sum(double chi, std::int64_t first, std::size_t count, double n_eff) {
#if defined(SLITFACTOR_HAVE_AVX2)
  if (active_backend() == Backend::avx2) return avx2::chirp_sum(chi, first, count, n_eff);
#endif
  return scalar::chirp_sum(chi, first, count, n_eff);
}

std::complex<double> slit_sum(double chi, std::int64_t first, std::size_t count, double n_eff,
                              double fill) {
#if defined(SLITFACTOR_HAVE_AVX2)
  if (active_backend() == Backend::avx2) return avx2::slit_sum(chi, first, count, n_eff, fill);
#endif
  return scalar::slit_sum(chi, first, count, n_eff, fill);
}

}  // namespace slitfactor::kernels
