#include "chiwb/budget.hpp"

#include <atomic>

#include "chiwb/errors.hpp"

namespace chiwb::budget {

namespace {
std::atomic<std::uint64_t> g_limit{kDefaultLimit};
std::atomic<std::uint64_t> g_used{0};
}  // namespace

void set_limit(std::uint64_t limit) { g_limit.store(limit); }
std::uint64_t limit() { return g_limit.load(); }
std::uint64_t used() { return g_used.load(); }
void reset() { g_used.store(0); }

void charge(std::uint64_t steps) {
  const std::uint64_t total = g_used.fetch_add(steps) + steps;
  if (total > g_limit.load())
    throw Error(Error::Kind::BudgetExhausted,
                "reduction step budget exhausted (" + std::to_string(g_limit.load()) +
                    " steps); raise with --budget");
}

Scope::Scope(std::uint64_t limit) : saved_limit_(chiwb::budget::limit()), saved_used_(used()) {
  set_limit(limit);
  reset();
}

Scope::~Scope() {
  set_limit(saved_limit_);
  g_used.store(saved_used_);
}

}  // namespace chiwb::budget
