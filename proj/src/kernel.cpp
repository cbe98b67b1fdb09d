#include "mixcon/kernel.hpp"

#include <atomic>

namespace mixcon {

MaskGraph MaskGraph::of(const Graph& g) {
  if (g.vertex_count() > 64) {
    throw std::invalid_argument("mask kernels support at most 64 vertices");
  }
  MaskGraph m;
  m.n = g.vertex_count();
  m.all = (m.n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << m.n) - 1);
  for (const Edge& e : g.edges()) {
    m.adj[e.u] |= std::uint64_t{1} << e.v;
    m.adj[e.v] |= std::uint64_t{1} << e.u;
  }
  return m;
}

namespace {

struct Selection {
  ConnectedBatchFn fn;
  const char* name;
};

Selection probe() {
#if MIXCON_HAVE_AVX2_TU
  if (cpu_supports_avx2()) return {&connected_batch_avx2, "avx2"};
#endif
#if MIXCON_HAVE_NEON_TU
  return {&connected_batch_neon, "neon"};
#endif
  return {&connected_batch_scalar, "scalar"};
}

std::atomic<const char*> g_name{nullptr};
std::atomic<ConnectedBatchFn> g_fn{nullptr};

void ensure_selected() {
  if (g_fn.load(std::memory_order_acquire) == nullptr) {
    const Selection s = probe();
    g_name.store(s.name, std::memory_order_relaxed);
    g_fn.store(s.fn, std::memory_order_release);
  }
}

}  // namespace

void select_kernel(KernelKind kind) {
  switch (kind) {
    case KernelKind::Auto: {
      const Selection s = probe();
      g_name.store(s.name, std::memory_order_relaxed);
      g_fn.store(s.fn, std::memory_order_release);
      return;
    }
    case KernelKind::Scalar:
      g_name.store("scalar", std::memory_order_relaxed);
      g_fn.store(&connected_batch_scalar, std::memory_order_release);
      return;
    case KernelKind::Avx2:
#if MIXCON_HAVE_AVX2_TU
      if (cpu_supports_avx2()) {
        g_name.store("avx2", std::memory_order_relaxed);
        g_fn.store(&connected_batch_avx2, std::memory_order_release);
        return;
      }
#endif
      throw std::invalid_argument("avx2 kernel not available on this machine");
    case KernelKind::Neon:
#if MIXCON_HAVE_NEON_TU
      g_name.store("neon", std::memory_order_relaxed);
      g_fn.store(&connected_batch_neon, std::memory_order_release);
      return;
#else
      throw std::invalid_argument("neon kernel not available on this machine");
#endif
  }
  throw std::invalid_argument("unknown kernel kind");
}

const char* kernel_name() {
  ensure_selected();
  return g_name.load(std::memory_order_relaxed);
}

void connected_batch(const MaskGraph& g, const std::uint64_t* alive,
                     std::size_t count, std::uint8_t* out) {
  ensure_selected();
  g_fn.load(std::memory_order_acquire)(g, alive, count, out);
}

}  // namespace mixcon
