#pragma once

#include <cstdint>

namespace chiwb::budget {

// Process-wide reduction-step budget. Every polynomial reduction step charges
// one unit; exceeding the limit raises Error::Kind::BudgetExhausted so runaway
// Groebner computations fail cleanly instead of spinning.

constexpr std::uint64_t kDefaultLimit = 10'000'000;

void set_limit(std::uint64_t limit);
std::uint64_t limit();
std::uint64_t used();
void reset();
void charge(std::uint64_t steps = 1);

// RAII: set a limit (and reset the counter) for one computation.
class Scope {
 public:
  explicit Scope(std::uint64_t limit);
  ~Scope();
  Scope(const Scope&) = delete;
  Scope& operator=(const Scope&) = delete;

 private:
  std::uint64_t saved_limit_;
  std::uint64_t saved_used_;
};

}  // namespace chiwb::budget
