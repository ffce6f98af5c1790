// Certificate-checked Tietze moves on finite presentations.

#ifndef FPW_TIETZE_HPP
#define FPW_TIETZE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fpw/presentation.hpp"

namespace fpw {

/// Append `word`; `certificate` must evaluate to it over the current relators.
struct AddRelator {
  Word word;
  std::optional<TrivialityCertificate> certificate;
};

/// Delete relator `index`; `certificate` must evaluate to it over the
/// relators that remain (indices after the deletion).
struct RemoveRelator {
  std::size_t index = 0;
  std::optional<TrivialityCertificate> certificate;
};

/// Append generator `name` and the relator name * definition^-1.
struct AddGenerator {
  std::string name;
  Word definition;
};

/// Drop generator `name` using relator `relator`, which must reduce to
/// name * w^-1 (or its inverse w * name^-1) with w free of `name`. Every other
/// relator has `name` replaced by w.
struct RemoveGenerator {
  std::string name;
  std::size_t relator = 0;
};

using TietzeMove = std::variant<AddRelator, RemoveRelator, AddGenerator, RemoveGenerator>;

/// Throws InvalidCertificate, GeneratorNameClash, DefiningRelatorNotFound,
/// IndexOutOfRange (or UnknownGenerator for an unknown name).
FinitePresentation apply_move(const FinitePresentation& p, const TietzeMove& move);

/// 64-bit FNV-1a of FinitePresentation::canonical_string(), as 16 hex digits.
std::string presentation_hash(const FinitePresentation& p);

struct MoveLogEntry {
  TietzeMove move;
  std::string before;
  std::string after;
};

using MoveLog = std::vector<MoveLogEntry>;

struct SequenceResult {
  FinitePresentation presentation;
  MoveLog log;
};

/// Left fold of apply_move. A failing move rethrows its error with the step
/// index prefixed to the message (SequenceError::step()).
SequenceResult apply_sequence(const FinitePresentation& p, const std::vector<TietzeMove>& moves);

class SequenceError : public Error {
 public:
  SequenceError(const Error& cause, std::size_t step)
      : Error(cause.code(), "step " + std::to_string(step) + ": " + cause.what()), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

struct MoveValid {
  /// Set when the move had no certificate and one was found by search.
  std::optional<TrivialityCertificate> found_certificate;
};
struct MoveInvalid {
  ErrorCode code;
  std::string reason;
};
struct MoveUnverifiable {
  std::uint64_t budget = 0;
};

using MoveCheck = std::variant<MoveValid, MoveInvalid, MoveUnverifiable>;

/// Total validity check. Relator moves without a certificate are searched
/// for one with semidecide_trivial within `budget`.
MoveCheck check_move(const FinitePresentation& p, const TietzeMove& move, std::uint64_t budget);

}  // namespace fpw

#endif  // FPW_TIETZE_HPP
