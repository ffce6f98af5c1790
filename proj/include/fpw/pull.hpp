#ifndef FPW_PULL_HPP
#define FPW_PULL_HPP

#include <optional>
#include <utility>

namespace fpw {

/// Outcome of pulling from a possibly-infinite source.
///  - Item: a value is available.
///  - Pending: nothing more within the source's internal budget; pulling
///    again later may succeed.
///  - Exhausted: the source is finite and has ended for good.
enum class PullState { Item, Pending, Exhausted };

template <class T>
struct Pull {
  PullState state = PullState::Exhausted;
  std::optional<T> value;

  static Pull item(T v) { return {PullState::Item, std::move(v)}; }
  static Pull pending() { return {PullState::Pending, std::nullopt}; }
  static Pull exhausted() { return {PullState::Exhausted, std::nullopt}; }
  bool has_value() const { return state == PullState::Item; }
};

}  // namespace fpw

#endif  // FPW_PULL_HPP
