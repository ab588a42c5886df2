#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace selrec {

template <class T>
using Path = std::vector<T>;

// Thunk evaluated at most once. Forcing is reentrancy-free by construction:
// no value's thunk reads the value itself.
template <class V>
class Lazy {
 public:
  explicit Lazy(std::function<V()> thunk) : thunk_(std::move(thunk)) {}

  const V& force() {
    std::lock_guard<std::mutex> lock(m_);
    if (!value_) {
      value_.emplace(thunk_());
      thunk_ = nullptr;
    }
    return *value_;
  }

 private:
  std::function<V()> thunk_;
  std::mutex m_;
  std::optional<V> value_;
};

// Infinite sequence backed by a generator and a memo table. Copies share
// both. Cache entries never change once written, so repeated reads at an
// index always agree and concurrent readers are safe.
template <class T>
class Seq {
  struct Impl {
    std::function<T(long)> gen;
    std::mutex m;
    std::unordered_map<long, T> cache;
  };

  std::shared_ptr<Impl> impl_;

  explicit Seq(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}

 public:
  static Seq from_fn(std::function<T(long)> gen) {
    auto impl = std::make_shared<Impl>();
    impl->gen = std::move(gen);
    return Seq(std::move(impl));
  }

  static Seq constant(T v) {
    return from_fn([v](long) { return v; });
  }

  // Generator that may read strictly earlier entries of the sequence being
  // defined. The self handle aliases this sequence's own memo table.
  static Seq self_ref(std::function<T(long, const Seq&)> step) {
    auto impl = std::make_shared<Impl>();
    std::weak_ptr<Impl> weak = impl;
    impl->gen = [weak, step = std::move(step)](long i) {
      Seq self(weak.lock());
      return step(i, self);
    };
    return Seq(std::move(impl));
  }

  // Sequence whose identity is computed on first demand. The thunk runs at
  // most once; recursion schemes use this so that one unfolding is paid per
  // node regardless of how many positions are later read.
  static Seq defer(std::function<Seq()> thunk) {
    auto cell = std::make_shared<Lazy<Seq>>(std::move(thunk));
    return from_fn([cell](long i) { return cell->force().at(i); });
  }

  T at(long i) const {
    Impl& s = *impl_;
    {
      std::lock_guard<std::mutex> lock(s.m);
      auto it = s.cache.find(i);
      if (it != s.cache.end()) return it->second;
    }
    T v = s.gen(i);  // unlocked: generators may read this or other sequences
    std::lock_guard<std::mutex> lock(s.m);
    auto [it, inserted] = s.cache.emplace(i, std::move(v));
    return it->second;
  }
};

template <class T>
Seq<T> cons(T head, Seq<T> tail) {
  return Seq<T>::from_fn(
      [head, tail](long i) { return i == 0 ? head : tail.at(i - 1); });
}

// s followed by alpha, with alpha re-based to start where s ends.
template <class T>
Seq<T> prepend(Path<T> s, Seq<T> alpha) {
  return Seq<T>::from_fn([s, alpha](long i) {
    return i < static_cast<long>(s.size()) ? s[static_cast<size_t>(i)]
                                           : alpha.at(i - static_cast<long>(s.size()));
  });
}

// Overwriting of s on alpha: s_i below |s|, alpha unchanged from |s| on.
template <class T>
Seq<T> overwrite(Path<T> s, Seq<T> alpha) {
  return Seq<T>::from_fn([s, alpha](long i) {
    return i < static_cast<long>(s.size()) ? s[static_cast<size_t>(i)] : alpha.at(i);
  });
}

template <class T>
Seq<T> shift(Seq<T> alpha, long n) {
  return Seq<T>::from_fn([alpha, n](long i) { return alpha.at(i + n); });
}

template <class T>
Path<T> init_seg(const Seq<T>& alpha, long n) {
  Path<T> out;
  out.reserve(static_cast<size_t>(n > 0 ? n : 0));
  for (long i = 0; i < n; ++i) out.push_back(alpha.at(i));
  return out;
}

// Entries k..n inclusive.
template <class T>
Path<T> segment(const Seq<T>& alpha, long k, long n) {
  Path<T> out;
  for (long i = k; i <= n; ++i) out.push_back(alpha.at(i));
  return out;
}

template <class T>
Seq<T> init_seg_zero(const Seq<T>& alpha, long n, T zero) {
  return overwrite(init_seg(alpha, n), Seq<T>::constant(std::move(zero)));
}

template <class T, class F>
auto map_seq(Seq<T> alpha, F f) -> Seq<decltype(f(std::declval<T>()))> {
  using U = decltype(f(std::declval<T>()));
  return Seq<U>::from_fn([alpha, f](long i) { return f(alpha.at(i)); });
}

template <class T>
Path<T> extend(Path<T> s, T x) {
  s.push_back(std::move(x));
  return s;
}

template <class T>
Path<T> concat(Path<T> s, const Path<T>& t) {
  s.insert(s.end(), t.begin(), t.end());
  return s;
}

template <class T, class Eq = std::equal_to<T>>
bool seq_eq(const Seq<T>& a, const Seq<T>& b, long depth, Eq eq = Eq{}) {
  for (long i = 0; i < depth; ++i) {
    if (!eq(a.at(i), b.at(i))) return false;
  }
  return true;
}

// Pass-through sequence recording the largest index read from it.
template <class T>
Seq<T> probed(Seq<T> inner, std::shared_ptr<long> max_read) {
  return Seq<T>::from_fn([inner, max_read](long i) {
    if (i > *max_read) *max_read = i;
    return inner.at(i);
  });
}

}  // namespace selrec
