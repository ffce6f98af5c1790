// Pairing functions, streams of naturals, and the quotient tower over BS(2,3)
// whose word problem encodes the size of a finite set.
//
// Recursively enumerable sets are modelled by element streams (NatStream) and
// explicit finite sets; nothing here simulates machines.

#ifndef FPW_HARNESS_HPP
#define FPW_HARNESS_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "fpw/oracle.hpp"
#include "fpw/presentation.hpp"
#include "fpw/pull.hpp"

namespace fpw {

/// (x + y)(x + y + 1) / 2 + y. Throws Overflow past 2^64 - 1.
std::uint64_t cantor_pair(std::uint64_t x, std::uint64_t y);
std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t z);

/// <x1, ..., xn> = <<x1, ..., x(n-1)>, xn>; the 1-tuple is x1 itself.
std::uint64_t cantor_pair_n(std::span<const std::uint64_t> xs);
std::vector<std::uint64_t> cantor_unpair_n(std::uint64_t z, std::size_t n);

class NatStream {
 public:
  virtual ~NatStream() = default;
  virtual Pull<std::uint64_t> pull() = 0;
};

/// The given values in order, then exhaustion.
class ListNatStream : public NatStream {
 public:
  explicit ListNatStream(std::vector<std::uint64_t> values) : values_(std::move(values)) {}
  Pull<std::uint64_t> pull() override;

 private:
  std::vector<std::uint64_t> values_;
  std::size_t next_ = 0;
};

/// 0, 1, 2, ... forever.
class NaturalsStream : public NatStream {
 public:
  Pull<std::uint64_t> pull() override { return Pull<std::uint64_t>::item(next_++); }

 private:
  std::uint64_t next_ = 0;
};

/// Emits 0, 1, 2, ... one per distinct input value. Repeats of an input
/// value are skipped; Pending passes through, as does exhaustion.
class CompressStream : public NatStream {
 public:
  explicit CompressStream(std::unique_ptr<NatStream> input) : input_(std::move(input)) {}
  Pull<std::uint64_t> pull() override;

 private:
  std::unique_ptr<NatStream> input_;
  std::vector<std::uint64_t> seen_;  // sorted
  std::uint64_t next_ = 0;
};

std::unique_ptr<NatStream> compress_stream(std::unique_ptr<NatStream> input);

/// A finite set of naturals, sorted and deduplicated.
class ExplicitFiniteSet {
 public:
  ExplicitFiniteSet() = default;
  explicit ExplicitFiniteSet(std::vector<std::uint64_t> values);

  /// Comma-separated naturals, e.g. `4,7`; the empty string is the empty set.
  static ExplicitFiniteSet parse(std::string_view text);

  const std::vector<std::uint64_t>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<std::uint64_t> values_;
};

/// Decides the word problem of BS(2,3) / ker(f^k): w -> f^k(w) == 1 in BS(2,3).
WordOracle tower_oracle(std::uint64_t k);

/// < s, t | s^-1 t^2 s t^-3, ker(f^(i+1)) for i in compress(W) >, with
/// relators streamed as the BS relator followed by a round-robin over the
/// kernel streams of f^0 (the trivial words) and of f^(i+1).
RecursivePresentation quotient_tower_presentation(const ExplicitFiniteSet& w);

/// Largest j in [0, k_max + 1] with oracle(w_j) true.
std::uint64_t recover_cardinality(const WordOracle& oracle, std::uint64_t k_max);

}  // namespace fpw

#endif  // FPW_HARNESS_HPP
