#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "chiwb/field.hpp"
#include "chiwb/order.hpp"

namespace chiwb {

class RingContext;
using RingPtr = std::shared_ptr<const RingContext>;

// Immutable polynomial-ring context: coefficient field, named variables, the
// monomial order, and how many leading variables form the base ring R.
class RingContext {
 public:
  static RingPtr make(Field field, std::vector<std::string> vars,
                      MonomialOrder order = MonomialOrder::grevlex(),
                      std::size_t base_count = 0);

  const Field& field() const { return field_; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const MonomialOrder& order() const { return order_; }
  std::size_t base_count() const { return base_count_; }

  std::optional<std::size_t> var_index(const std::string& name) const;
  const std::string& var_name(std::size_t i) const { return vars_[i]; }

  bool same_as(const RingContext& o) const;

 private:
  RingContext(Field field, std::vector<std::string> vars, MonomialOrder order,
              std::size_t base_count)
      : field_(std::move(field)),
        vars_(std::move(vars)),
        order_(std::move(order)),
        base_count_(base_count) {}

  Field field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
  std::size_t base_count_;
};

// Raises on mismatch; every binary operation funnels through this.
void require_same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace chiwb
