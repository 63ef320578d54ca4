// SPDX-License-Identifier: Apache-2.0

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "trinom/kernels.hpp"

namespace trinom::kernels {
namespace {

const KernelTable* widest_available() noexcept {
  if (const auto* t = avx2_table()) return t;
  if (const auto* t = neon_table()) return t;
  return &scalar_table();
}

const KernelTable* initial_table() noexcept {
  const char* env = std::getenv("TRINOM_KERNELS");
  if (env == nullptr) return widest_available();
  const std::string_view requested{env};
  if (requested == "scalar") return &scalar_table();
  if (requested == "avx2" && avx2_table() != nullptr) return avx2_table();
  if (requested == "neon" && neon_table() != nullptr) return neon_table();
  return widest_available();
}

std::atomic<const KernelTable*>& slot() noexcept {
  static std::atomic<const KernelTable*> current{initial_table()};
  return current;
}

}  // namespace

const KernelTable* table_for(Backend backend) noexcept {
  switch (backend) {
    case Backend::scalar:
      return &scalar_table();
    case Backend::avx2:
      return avx2_table();
    case Backend::neon:
      return neon_table();
  }
  return nullptr;
}

std::vector<Backend> available_backends() {
  std::vector<Backend> out{Backend::scalar};
  if (avx2_table() != nullptr) out.push_back(Backend::avx2);
  if (neon_table() != nullptr) out.push_back(Backend::neon);
  return out;
}

const KernelTable& active() noexcept { return *slot().load(std::memory_order_acquire); }

void select(Backend backend) {
  const KernelTable* t = table_for(backend);
  if (t == nullptr) {
    throw std::invalid_argument("kernel backend '" + std::string(backend_name(backend)) +
                                "' is not available on this machine");
  }
  detail::set_active(t);
}

void select_auto() noexcept { detail::set_active(widest_available()); }

Backend parse_backend(std::string_view name) {
  if (name == "scalar") return Backend::scalar;
  if (name == "avx2") return Backend::avx2;
  if (name == "neon") return Backend::neon;
  throw std::invalid_argument("unknown kernel backend '" + std::string(name) + "'");
}

std::string_view backend_name(Backend backend) noexcept {
  switch (backend) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
    case Backend::neon:
      return "neon";
  }
  return "?";
}

ScopedBackend::ScopedBackend(Backend backend) : previous_(&active()) { select(backend); }

ScopedBackend::~ScopedBackend() { detail::set_active(previous_); }

namespace detail {
void set_active(const KernelTable* table) noexcept {
  slot().store(table, std::memory_order_release);
}
}  // namespace detail

}  // namespace trinom::kernels
