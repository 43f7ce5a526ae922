#include "chiwb/ring.hpp"

#include <set>

#include "chiwb/errors.hpp"

namespace chiwb {

RingPtr RingContext::make(Field field, std::vector<std::string> vars, MonomialOrder order,
                          std::size_t base_count) {
  if (vars.empty()) fail(Error::Kind::Domain, "a ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty()) fail(Error::Kind::Domain, "empty variable name");
    if (!seen.insert(v).second)
      fail(Error::Kind::Domain, "duplicate variable name '" + v + "'");
  }
  if (base_count > 2)
    fail(Error::Kind::Domain, "base has dimension at most two");
  if (base_count > vars.size())
    fail(Error::Kind::Domain, "base variables must be a prefix of the variable list");
  return RingPtr(
      new RingContext(std::move(field), std::move(vars), std::move(order), base_count));
}

std::optional<std::size_t> RingContext::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

bool RingContext::same_as(const RingContext& o) const {
  return field_ == o.field_ && vars_ == o.vars_ && order_ == o.order_ &&
         base_count_ == o.base_count_;
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a.get() == b.get()) return;
  if (!a || !b || !a->same_as(*b))
    fail(Error::Kind::Domain, "operands live in different rings");
}

}  // namespace chiwb
