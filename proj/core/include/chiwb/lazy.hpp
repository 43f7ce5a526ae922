#pragma once

#include <functional>
#include <memory>
#include <mutex>

namespace chiwb {

// Compute-once cache published under a mutex; copies share the slot.
template <typename T>
class Lazy {
 public:
  const T& get(const std::function<T()>& make) const {
    std::call_once(flag_, [&] { value_ = std::make_unique<T>(make()); });
    return *value_;
  }
  bool ready() const { return static_cast<bool>(value_); }

 private:
  mutable std::once_flag flag_;
  mutable std::unique_ptr<T> value_;
};

template <typename T>
using SharedLazy = std::shared_ptr<Lazy<T>>;

}  // namespace chiwb
