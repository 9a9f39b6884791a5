// Runtime selection of the kernel variant. All variants are bit-identical,
// so selection never affects results, only throughput.

#include "akr/kernels.hpp"

#include <cstdlib>
#include <string>

#include "akr/errors.hpp"

namespace akr::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

}  // namespace

std::vector<const KernelTable*> available_tables() {
  std::vector<const KernelTable*> tables{&scalar_table()};
  if (const KernelTable* t = avx2_table(); t != nullptr && cpu_has_avx2()) tables.push_back(t);
  if (const KernelTable* t = neon_table()) tables.push_back(t);
  return tables;
}

const KernelTable* table_by_name(std::string_view name) {
  for (const KernelTable* t : available_tables()) {
    if (name == t->name) return t;
  }
  return nullptr;
}

const KernelTable& active_table() {
  static const KernelTable* chosen = [] {
    if (const char* env = std::getenv("AKRWALK_KERNEL")) {
      const KernelTable* t = table_by_name(env);
      if (t == nullptr) {
        std::string names;
        for (const KernelTable* a : available_tables()) {
          if (!names.empty()) names += ", ";
          names += a->name;
        }
        throw ConfigError("AKRWALK_KERNEL=" + std::string(env) +
                          " is not usable here; available: " + names);
      }
      return t;
    }
    return available_tables().back();
  }();
  return *chosen;
}

}  // namespace akr::kernels
