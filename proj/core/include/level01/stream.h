// Copyright 2026 The Level01 Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LEVEL01_STREAM_H_
#define LEVEL01_STREAM_H_

#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace level01 {

// A memoizing suspension. Copies share state: forcing one copy forces all.
// If the thunk throws, the cell stays delayed and a later Force retries.
template <typename T>
class Cell {
 public:
  using Thunk = std::function<T()>;

  static Cell Delay(Thunk thunk) {
    Cell c;
    c.state_->thunk = std::move(thunk);
    return c;
  }
  static Cell Ready(T value) {
    Cell c;
    c.state_->value.emplace(std::move(value));
    return c;
  }

  const T& Force() const {
    State& s = *state_;
    if (!s.value) {
      // The thunk is moved out while it runs (it may own the only
      // reference to data it needs) and put back if it throws.
      Thunk thunk = std::move(s.thunk);
      s.thunk = nullptr;
      try {
        s.value.emplace(thunk());
      } catch (...) {
        s.thunk = std::move(thunk);
        throw;
      }
    }
    return *s.value;
  }

  bool forced() const { return state_->value.has_value(); }

 private:
  struct State {
    Thunk thunk;
    std::optional<T> value;
  };
  Cell() : state_(std::make_shared<State>()) {}

  std::shared_ptr<State> state_;
};

// Lazy, memoized list. A stream is either empty or a head with a delayed
// tail; re-traversal reuses forced cells and so yields the same elements.
template <typename T>
class Stream {
 public:
  Stream() = default;
  Stream(T head, Cell<Stream> tail)
      : node_(std::make_shared<Node>(Node{std::move(head), std::move(tail)})) {}

  bool empty() const { return node_ == nullptr; }
  const T& head() const { return node_->head; }
  const Cell<Stream>& tail_cell() const { return node_->tail; }
  const Stream& tail() const { return node_->tail.Force(); }

 private:
  struct Node {
    T head;
    Cell<Stream> tail;
  };
  std::shared_ptr<const Node> node_;
};

// A stream not yet started.
template <typename T>
using LazyStream = Cell<Stream<T>>;

namespace streams {

template <typename T>
Stream<T> Empty() {
  return Stream<T>();
}

template <typename T>
Stream<T> Single(T value) {
  return Stream<T>(std::move(value), Cell<Stream<T>>::Ready(Stream<T>()));
}

template <typename T>
LazyStream<T> Delay(std::function<Stream<T>()> thunk) {
  return LazyStream<T>::Delay(std::move(thunk));
}

template <typename T>
LazyStream<T> Ready(Stream<T> s) {
  return LazyStream<T>::Ready(std::move(s));
}

// The elements of a followed by those of b; b is not forced until a is
// exhausted.
template <typename T>
LazyStream<T> ConcatLazy(LazyStream<T> a, LazyStream<T> b) {
  return LazyStream<T>::Delay([a = std::move(a), b = std::move(b)]() {
    Stream<T> s = a.Force();
    if (s.empty()) return b.Force();
    return Stream<T>(s.head(), ConcatLazy(s.tail_cell(), b));
  });
}

// Concatenation of f(x) for each x in s, in order. Empty inner streams are
// skipped iteratively so long runs of failures do not grow the C++ stack.
template <typename T, typename U, typename F>
LazyStream<U> FlatMap(LazyStream<T> s, F f) {
  return LazyStream<U>::Delay([s = std::move(s), f = std::move(f)]() mutable {
    while (true) {
      // Advance the captured position itself, so consumed cells can be
      // freed and a retry after an exception resumes where this stopped.
      Stream<T> node = s.Force();
      if (node.empty()) return Stream<U>();
      LazyStream<T> rest = node.tail_cell();
      LazyStream<U> inner = f(node.head());
      Stream<U> first = inner.Force();
      if (!first.empty()) {
        return Stream<U>(first.head(),
                         ConcatLazy(first.tail_cell(),
                                    FlatMap<T, U, F>(std::move(rest), f)));
      }
      s = std::move(rest);
    }
  });
}

template <typename T, typename U, typename F>
LazyStream<U> Map(LazyStream<T> s, F f) {
  return FlatMap<T, U>(std::move(s), [f = std::move(f)](const T& x) {
    return Ready(Single<U>(f(x)));
  });
}

template <typename T, typename P>
LazyStream<T> Filter(LazyStream<T> s, P pred) {
  return FlatMap<T, T>(std::move(s), [pred = std::move(pred)](const T& x) {
    return Ready(pred(x) ? Single<T>(x) : Empty<T>());
  });
}

// Calls f on each element until f returns false or the stream ends.
template <typename T, typename F>
void ForEach(LazyStream<T> s, F f) {
  while (true) {
    Stream<T> node = s.Force();
    if (node.empty()) return;
    if (!f(node.head())) return;
    s = node.tail_cell();
  }
}

// The first n elements (fewer if the stream is shorter).
template <typename T>
std::vector<T> Take(LazyStream<T> s, std::size_t n) {
  std::vector<T> out;
  if (n == 0) return out;
  ForEach(std::move(s), [&](const T& x) {
    out.push_back(x);
    return out.size() < n;
  });
  return out;
}

}  // namespace streams
}  // namespace level01

#endif  // LEVEL01_STREAM_H_
