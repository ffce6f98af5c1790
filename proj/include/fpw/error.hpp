#ifndef FPW_ERROR_HPP
#define FPW_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace fpw {

enum class ErrorCode {
  Parse,
  DuplicateGenerator,
  UnknownGenerator,
  AlphabetMismatch,
  ForeignGenerator,
  EmptyAlphabet,
  IndexOutOfRange,
  InvalidCertificate,
  GeneratorNameClash,
  DefiningRelatorNotFound,
  ArityMismatch,
  InvalidArgument,
  Overflow,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(what), code_(code), position_(position) {}

  ErrorCode code() const { return code_; }
  /// Byte offset into the parsed text, for parse errors.
  std::optional<std::size_t> position() const { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

}  // namespace fpw

#endif  // FPW_ERROR_HPP
