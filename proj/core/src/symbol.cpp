#include "mananet/symbol.hpp"

#include <mutex>
#include <unordered_set>

namespace mananet {
namespace {

// Node-based set: element addresses stay valid across rehashes.
class InternPool {
 public:
  const std::string* intern(std::string_view name) {
    std::lock_guard lock(mutex_);
    auto it = names_.find(std::string(name));
    if (it == names_.end()) it = names_.emplace(name).first;
    return &*it;
  }

 private:
  std::mutex mutex_;
  std::unordered_set<std::string> names_;
};

InternPool& pool() {
  static InternPool instance;
  return instance;
}

}  // namespace

Symbol::Symbol() : name_(pool().intern("")) {}

Symbol::Symbol(std::string_view name) : name_(pool().intern(name)) {}

}  // namespace mananet
