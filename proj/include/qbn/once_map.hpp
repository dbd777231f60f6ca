#pragma once

#include <functional>
#include <future>
#include <map>
#include <mutex>

namespace qbn {

/// Compute-once concurrent memo table: the first caller for a key computes,
/// everyone else waits on the shared future; readers never block once a
/// value is published. Nested gets for different keys from the computing
/// thread are fine (the map lock is not held during computation).
template <class K, class V>
class OnceMap {
  public:
    template <class F>
    V get(const K& key, F&& compute) const {
        std::promise<V> pr;
        std::shared_future<V> fut;
        bool owner = false;
        {
            std::lock_guard<std::mutex> g(mu_);
            auto it = m_.find(key);
            if (it == m_.end()) {
                fut = pr.get_future().share();
                m_.emplace(key, fut);
                owner = true;
            } else {
                fut = it->second;
            }
        }
        if (owner) {
            try {
                pr.set_value(compute());
            } catch (...) {
                pr.set_exception(std::current_exception());
            }
        }
        return fut.get();
    }

    void clear() {
        std::lock_guard<std::mutex> g(mu_);
        m_.clear();
    }

  private:
    mutable std::mutex mu_;
    mutable std::map<K, std::shared_future<V>> m_;
};

}  // namespace qbn
