#include "fpw/tietze.hpp"

#include <cstdio>

#include "fpw/trivial_stream.hpp"

namespace fpw {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_certificate(const AlphabetPtr& gens, std::span<const Word> relators,
                         const std::optional<TrivialityCertificate>& cert, const Word& expected) {
  if (!cert) throw Error(ErrorCode::InvalidCertificate, "move needs a certificate");
  Word value(gens);
  try {
    value = certificate_word(gens, relators, *cert);
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidCertificate, std::string("certificate does not evaluate: ") + e.what());
  }
  if (!(value == expected))
    throw Error(ErrorCode::InvalidCertificate,
                "certificate evaluates to '" + value.to_string() + "', expected '" + expected.to_string() + "'");
}

std::vector<Word> without(const std::vector<Word>& relators, std::size_t index) {
  std::vector<Word> out;
  for (std::size_t i = 0; i < relators.size(); ++i)
    if (i != index) out.push_back(relators[i]);
  return out;
}

Word rebase(const Word& w, const AlphabetPtr& alphabet) {
  return Word(alphabet, w.letters());
}

bool mentions(std::span<const Letter> letters, std::uint32_t gen) {
  for (const Letter& l : letters)
    if (l.gen == gen) return true;
  return false;
}

FinitePresentation add_relator(const FinitePresentation& p, const AddRelator& mv) {
  if (!same_alphabet(mv.word.alphabet(), p.generators()))
    throw Error(ErrorCode::AlphabetMismatch, "relator is not over the presentation's generators");
  require_certificate(p.generators(), p.relators(), mv.certificate, mv.word);
  auto relators = p.relators();
  relators.push_back(mv.word);
  return FinitePresentation(p.generators(), std::move(relators));
}

FinitePresentation remove_relator(const FinitePresentation& p, const RemoveRelator& mv) {
  if (mv.index >= p.relators().size())
    throw Error(ErrorCode::IndexOutOfRange, "no relator " + std::to_string(mv.index));
  auto rest = without(p.relators(), mv.index);
  require_certificate(p.generators(), rest, mv.certificate, p.relators()[mv.index]);
  return FinitePresentation(p.generators(), std::move(rest));
}

FinitePresentation add_generator(const FinitePresentation& p, const AddGenerator& mv) {
  if (p.generators()->find(mv.name))
    throw Error(ErrorCode::GeneratorNameClash, "generator '" + mv.name + "' already exists");
  if (!valid_generator_name(mv.name))
    throw Error(ErrorCode::InvalidArgument, "invalid generator name '" + mv.name + "'");
  if (!same_alphabet(mv.definition.alphabet(), p.generators()))
    throw Error(ErrorCode::AlphabetMismatch, "definition is not over the existing generators");
  auto names = p.generators()->names();
  names.push_back(mv.name);
  AlphabetPtr gens = make_alphabet(std::move(names));
  std::vector<Word> relators;
  for (const Word& r : p.relators()) relators.push_back(rebase(r, gens));
  Word g = Word::generator(gens, gens->size() - 1);
  relators.push_back(concat(g, invert(rebase(mv.definition, gens))));
  return FinitePresentation(std::move(gens), std::move(relators));
}

FinitePresentation remove_generator(const FinitePresentation& p, const RemoveGenerator& mv) {
  auto found = p.generators()->find(mv.name);
  if (!found) throw Error(ErrorCode::UnknownGenerator, "no generator '" + mv.name + "'");
  if (mv.relator >= p.relators().size())
    throw Error(ErrorCode::IndexOutOfRange, "no relator " + std::to_string(mv.relator));
  if (p.generators()->size() == 1)
    throw Error(ErrorCode::EmptyAlphabet, "cannot remove the only generator");
  auto g = static_cast<std::uint32_t>(*found);
  auto letters = p.relators()[mv.relator].letters();

  // relator = g w^-1, or its inverse w g^-1
  std::optional<Word> definition;
  if (!letters.empty() && letters.front() == Letter{g, 1} && !mentions(letters.subspan(1), g)) {
    definition = invert(Word(p.generators(), letters.subspan(1)));
  } else if (!letters.empty() && letters.back() == Letter{g, -1} &&
             !mentions(letters.first(letters.size() - 1), g)) {
    definition = Word(p.generators(), letters.first(letters.size() - 1));
  }
  if (!definition)
    throw Error(ErrorCode::DefiningRelatorNotFound,
                "relator " + std::to_string(mv.relator) + " is not of the form " + mv.name + " w^-1");

  std::vector<std::string> names;
  for (std::size_t i = 0; i < p.generators()->size(); ++i)
    if (i != g) names.push_back(p.generators()->name(i));
  AlphabetPtr gens = make_alphabet(std::move(names));

  std::vector<Word> images;
  for (std::size_t i = 0; i < p.generators()->size(); ++i) {
    if (i == g)
      images.emplace_back(gens);
    else
      images.push_back(Word::generator(gens, i < g ? i : i - 1));
  }
  GeneratorMap drop(p.generators(), gens, images);
  images[g] = substitute(*definition, drop);
  GeneratorMap eliminate(p.generators(), gens, std::move(images));

  std::vector<Word> relators;
  for (std::size_t i = 0; i < p.relators().size(); ++i)
    if (i != mv.relator) relators.push_back(substitute(p.relators()[i], eliminate));
  return FinitePresentation(std::move(gens), std::move(relators));
}

}  // namespace

FinitePresentation apply_move(const FinitePresentation& p, const TietzeMove& move) {
  return std::visit(Overloaded{
                        [&](const AddRelator& mv) { return add_relator(p, mv); },
                        [&](const RemoveRelator& mv) { return remove_relator(p, mv); },
                        [&](const AddGenerator& mv) { return add_generator(p, mv); },
                        [&](const RemoveGenerator& mv) { return remove_generator(p, mv); },
                    },
                    move);
}

std::string presentation_hash(const FinitePresentation& p) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : p.canonical_string()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

SequenceResult apply_sequence(const FinitePresentation& p, const std::vector<TietzeMove>& moves) {
  SequenceResult out{p, {}};
  for (std::size_t i = 0; i < moves.size(); ++i) {
    std::string before = presentation_hash(out.presentation);
    try {
      out.presentation = apply_move(out.presentation, moves[i]);
    } catch (const Error& e) {
      throw SequenceError(e, i);
    }
    out.log.push_back({moves[i], std::move(before), presentation_hash(out.presentation)});
  }
  return out;
}

MoveCheck check_move(const FinitePresentation& p, const TietzeMove& move, std::uint64_t budget) {
  // Certificate-free relator moves: look for a certificate.
  std::optional<std::pair<FinitePresentation, Word>> search;
  if (const auto* add = std::get_if<AddRelator>(&move); add && !add->certificate) {
    if (!same_alphabet(add->word.alphabet(), p.generators()))
      return MoveInvalid{ErrorCode::AlphabetMismatch, "relator is not over the presentation's generators"};
    search.emplace(p, add->word);
  } else if (const auto* rem = std::get_if<RemoveRelator>(&move); rem && !rem->certificate) {
    if (rem->index >= p.relators().size())
      return MoveInvalid{ErrorCode::IndexOutOfRange, "no relator " + std::to_string(rem->index)};
    search.emplace(FinitePresentation(p.generators(), without(p.relators(), rem->index)),
                   p.relators()[rem->index]);
  }
  if (search) {
    auto verdict = semidecide_trivial(search->first, search->second, budget);
    if (auto* proved = std::get_if<ProvedTrivial>(&verdict))
      return MoveValid{std::move(proved->certificate)};
    return MoveUnverifiable{budget};
  }
  try {
    apply_move(p, move);
    return MoveValid{};
  } catch (const Error& e) {
    return MoveInvalid{e.code(), e.what()};
  }
}

}  // namespace fpw
