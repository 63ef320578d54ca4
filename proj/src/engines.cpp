// SPDX-License-Identifier: Apache-2.0

#include "trinom/engines.hpp"

#include <stdexcept>
#include <string>

#include "trinom/closed_forms.hpp"
#include "trinom/counters.hpp"
#include "trinom/errors.hpp"
#include "trinom/genfun.hpp"
#include "trinom/recurrences.hpp"

namespace trinom {
namespace {

std::vector<BigInt> slice(std::vector<BigInt> values, std::uint64_t first) {
  values.erase(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(first));
  return values;
}

void check_range(EngineId engine, ClassLabel label, std::uint64_t first, std::uint64_t last) {
  if (first > last) throw DomainError("empty index range");
  check_engine_domain(engine, label, first);
  check_engine_domain(engine, label, last);
}

}  // namespace

std::string_view engine_name(EngineId engine) noexcept {
  switch (engine) {
    case EngineId::brute:
      return "brute";
    case EngineId::compsum:
      return "compsum";
    case EngineId::coupled:
      return "coupled";
    case EngineId::decoupled:
      return "decoupled";
    case EngineId::quartic_c:
      return "quartic-c";
    case EngineId::closed:
      return "closed";
    case EngineId::rootbasis:
      return "rootbasis";
    case EngineId::mod4:
      return "mod4";
    case EngineId::genfun:
      return "genfun";
  }
  return "?";
}

EngineId parse_engine(std::string_view name) {
  for (auto e : kAllEngines) {
    if (engine_name(e) == name) return e;
  }
  throw std::invalid_argument("unknown engine '" + std::string(name) + "'");
}

std::uint64_t engine_min_n(EngineId engine) noexcept {
  switch (engine) {
    case EngineId::closed:
    case EngineId::rootbasis:
    case EngineId::mod4:
      return 1;
    default:
      return 0;
  }
}

std::optional<std::uint64_t> engine_max_n(EngineId engine) noexcept {
  if (engine == EngineId::brute) return kBruteForceMaxN;
  return std::nullopt;
}

bool engine_produces(EngineId engine, ClassLabel label) noexcept {
  return engine != EngineId::quartic_c || label == ClassLabel::C;
}

void check_engine_domain(EngineId engine, ClassLabel label, std::uint64_t n) {
  const std::string name(engine_name(engine));
  if (!engine_produces(engine, label)) {
    throw DomainError("engine " + name + " only produces class C");
  }
  if (n < engine_min_n(engine)) {
    throw DomainError("engine " + name + " requires n >= " + std::to_string(engine_min_n(engine)));
  }
  if (const auto max = engine_max_n(engine); max && n > *max) {
    throw DomainError("engine " + name + " requires n <= " + std::to_string(*max));
  }
}

BigInt compute(EngineId engine, ClassLabel label, std::uint64_t n) {
  check_engine_domain(engine, label, n);
  switch (engine) {
    case EngineId::brute:
      return brute_force_words(n)[label];
    case EngineId::compsum:
      return composition_sum(n)[label];
    case EngineId::coupled:
      return coupled_at(n)[label];
    case EngineId::decoupled:
      return label == ClassLabel::D ? decoupled_D(n) : decoupled_third_order(label, n);
    case EngineId::quartic_c:
      return quartic_C(n);
    case EngineId::closed:
      return closed_form(label, n);
    case EngineId::rootbasis:
      return root_basis(label, n);
    case EngineId::mod4:
      return case_mod4(label, n);
    case EngineId::genfun:
      return gf_coefficients(gf_for_class(label), n).back();
  }
  throw DomainError("unknown engine");
}

ClassVector compute_all(EngineId engine, std::uint64_t n) {
  for (auto label : kAllClasses) check_engine_domain(engine, label, n);
  switch (engine) {
    case EngineId::brute:
      return brute_force_words(n);
    case EngineId::compsum:
      return composition_sum(n);
    case EngineId::coupled:
      return coupled_at(n);
    default:
      break;
  }
  ClassVector v;
  v.n = n;
  for (auto label : kAllClasses) v[label] = compute(engine, label, n);
  return v;
}

std::vector<BigInt> compute_class_range(EngineId engine, ClassLabel label, std::uint64_t first,
                                        std::uint64_t last) {
  check_range(engine, label, first, last);
  switch (engine) {
    case EngineId::decoupled:
      return slice(label == ClassLabel::D ? decoupled_D_sequence(last)
                                          : decoupled_third_order_sequence(label, last),
                   first);
    case EngineId::quartic_c:
      return slice(quartic_C_sequence(last), first);
    case EngineId::genfun:
      return slice(gf_coefficients(gf_for_class(label), last), first);
    case EngineId::coupled: {
      std::vector<BigInt> out;
      out.reserve(last - first + 1);
      ClassVector v = coupled_at(first);
      for (std::uint64_t n = first;; ++n) {
        out.push_back(v[label]);
        if (n == last) break;
        v = coupled_step(v);
      }
      return out;
    }
    default:
      break;
  }
  std::vector<BigInt> out;
  out.reserve(last - first + 1);
  for (std::uint64_t n = first; n <= last; ++n) out.push_back(compute(engine, label, n));
  return out;
}

std::vector<ClassVector> compute_range(EngineId engine, std::uint64_t first, std::uint64_t last) {
  for (auto label : kAllClasses) check_range(engine, label, first, last);
  std::vector<ClassVector> out;
  out.reserve(last - first + 1);
  switch (engine) {
    case EngineId::brute:
    case EngineId::compsum:
      for (std::uint64_t n = first; n <= last; ++n) out.push_back(compute_all(engine, n));
      return out;
    case EngineId::coupled: {
      ClassVector v = coupled_at(first);
      for (std::uint64_t n = first;; ++n) {
        out.push_back(v);
        if (n == last) break;
        v = coupled_step(v);
      }
      return out;
    }
    default:
      break;
  }
  for (std::uint64_t n = first; n <= last; ++n) {
    ClassVector v;
    v.n = n;
    out.push_back(std::move(v));
  }
  for (auto label : kAllClasses) {
    auto column = compute_class_range(engine, label, first, last);
    for (std::size_t k = 0; k < column.size(); ++k) out[k][label] = std::move(column[k]);
  }
  return out;
}

}  // namespace trinom
