// extern "C" wrappers: translate exceptions into status codes and values
// into owned C strings.

#include "fpw/fpw.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "fpw/fpw.hpp"
#include "fpw/serialize.hpp"

struct fpw_presentation {
  fpw::FinitePresentation value;
};

struct fpw_stream {
  std::optional<fpw::TrivialWordStream> trivial;
  std::optional<fpw::KernelStream> kernel;
};

struct fpw_oracle {
  fpw::WordOracle value;
};

namespace {

thread_local std::string last_error;

fpw_status status_of(fpw::ErrorCode code) {
  using fpw::ErrorCode;
  switch (code) {
    case ErrorCode::Parse: return FPW_ERR_PARSE;
    case ErrorCode::DuplicateGenerator: return FPW_ERR_DUPLICATE_GENERATOR;
    case ErrorCode::UnknownGenerator: return FPW_ERR_UNKNOWN_GENERATOR;
    case ErrorCode::AlphabetMismatch: return FPW_ERR_ALPHABET_MISMATCH;
    case ErrorCode::ForeignGenerator: return FPW_ERR_FOREIGN_GENERATOR;
    case ErrorCode::EmptyAlphabet: return FPW_ERR_EMPTY_ALPHABET;
    case ErrorCode::IndexOutOfRange: return FPW_ERR_INDEX_OUT_OF_RANGE;
    case ErrorCode::InvalidCertificate: return FPW_ERR_INVALID_CERTIFICATE;
    case ErrorCode::GeneratorNameClash: return FPW_ERR_GENERATOR_NAME_CLASH;
    case ErrorCode::DefiningRelatorNotFound: return FPW_ERR_DEFINING_RELATOR_NOT_FOUND;
    case ErrorCode::ArityMismatch: return FPW_ERR_ARITY_MISMATCH;
    case ErrorCode::InvalidArgument: return FPW_ERR_INVALID_ARGUMENT;
    case ErrorCode::Overflow: return FPW_ERR_OVERFLOW;
  }
  return FPW_ERR_INTERNAL;
}

fpw_status fail(fpw_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs body, mapping library errors to statuses.
template <class F>
fpw_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const fpw::Error& e) {
    std::string msg = e.what();
    if (e.position()) msg += " (at offset " + std::to_string(*e.position()) + ")";
    return fail(status_of(e.code()), msg);
  } catch (const nlohmann::json::exception& e) {
    return fail(FPW_ERR_PARSE, std::string("bad JSON: ") + e.what());
  } catch (const std::bad_alloc&) {
    return fail(FPW_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(FPW_ERR_INTERNAL, e.what());
  }
}

#define FPW_REQUIRE(ptr) \
  if (!(ptr)) return fail(FPW_ERR_NULL_ARGUMENT, "null argument: " #ptr)

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

fpw::BigInt parse_bigint(const char* text, const char* what) {
  std::string s = text;
  std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
    throw fpw::Error(fpw::ErrorCode::InvalidArgument, std::string(what) + " must be an integer, got '" + s + "'");
  return fpw::BigInt(s);
}

fpw::BSParams bs_params(const char* m, const char* n) {
  return fpw::BSParams(parse_bigint(m, "m"), parse_bigint(n, "n"));
}

std::string render(const fpw::Word& w, int compact) {
  return compact ? w.to_compact_string() : w.to_string();
}

// Generators named in `word`, in order of first appearance.
fpw::AlphabetPtr infer_alphabet(const std::string& word) {
  std::vector<std::string> names;
  std::istringstream in(word);
  std::string token;
  while (in >> token) {
    std::string name = token.substr(0, token.find('^'));
    if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
  }
  if (names.empty()) names.push_back("x");
  return fpw::make_alphabet(std::move(names));
}

std::vector<fpw::Word> split_words(const fpw::AlphabetPtr& a, const std::string& text) {
  std::vector<fpw::Word> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = text.find(',', start);
    out.push_back(fpw::Word::parse(a, text.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

extern "C" {

const char* fpw_last_error(void) { return last_error.c_str(); }

const char* fpw_status_name(fpw_status status) {
  switch (status) {
    case FPW_OK: return "ok";
    case FPW_EXHAUSTED: return "exhausted";
    case FPW_ERR_NULL_ARGUMENT: return "null argument";
    case FPW_ERR_INTERNAL: return "internal error";
    default:
      if (status >= FPW_ERR_PARSE && status <= FPW_ERR_OVERFLOW)
        return fpw::to_string(static_cast<fpw::ErrorCode>(status - FPW_ERR_PARSE));
      return "unknown status";
  }
}

void fpw_string_free(char* s) { std::free(s); }

fpw_status fpw_presentation_parse(const char* text, fpw_presentation** out) {
  FPW_REQUIRE(text);
  FPW_REQUIRE(out);
  return guarded([&] {
    *out = new fpw_presentation{fpw::FinitePresentation::parse(text)};
    return FPW_OK;
  });
}

fpw_status fpw_presentation_bs(const char* m, const char* n, fpw_presentation** out) {
  FPW_REQUIRE(m);
  FPW_REQUIRE(n);
  FPW_REQUIRE(out);
  return guarded([&] {
    *out = new fpw_presentation{fpw::bs_presentation(bs_params(m, n))};
    return FPW_OK;
  });
}

void fpw_presentation_free(fpw_presentation* p) { delete p; }

fpw_status fpw_presentation_to_string(const fpw_presentation* p, char** out) {
  FPW_REQUIRE(p);
  FPW_REQUIRE(out);
  return guarded([&] {
    *out = dup(p->value.to_string());
    return FPW_OK;
  });
}

fpw_status fpw_presentation_hash(const fpw_presentation* p, char** out) {
  FPW_REQUIRE(p);
  FPW_REQUIRE(out);
  return guarded([&] {
    *out = dup(fpw::presentation_hash(p->value));
    return FPW_OK;
  });
}

fpw_status fpw_reduce(const fpw_presentation* p, const char* word, int compact, char** out) {
  FPW_REQUIRE(word);
  FPW_REQUIRE(out);
  return guarded([&] {
    fpw::AlphabetPtr a = p ? p->value.generators() : infer_alphabet(word);
    *out = dup(render(fpw::Word::parse(a, word), compact));
    return FPW_OK;
  });
}

fpw_status fpw_bs_is_trivial(const char* m, const char* n, const char* word, int* out) {
  FPW_REQUIRE(m);
  FPW_REQUIRE(n);
  FPW_REQUIRE(word);
  FPW_REQUIRE(out);
  return guarded([&] {
    *out = fpw::bs_is_trivial(bs_params(m, n), fpw::Word::parse(fpw::bs_alphabet(), word));
    return FPW_OK;
  });
}

fpw_status fpw_bs_equal(const char* m, const char* n, const char* u, const char* v, int* out) {
  FPW_REQUIRE(m);
  FPW_REQUIRE(n);
  FPW_REQUIRE(u);
  FPW_REQUIRE(v);
  FPW_REQUIRE(out);
  return guarded([&] {
    const auto& a = fpw::bs_alphabet();
    *out = fpw::bs_equal(bs_params(m, n), fpw::Word::parse(a, u), fpw::Word::parse(a, v));
    return FPW_OK;
  });
}

fpw_status fpw_bs_reduce(const char* m, const char* n, const char* word, char** out) {
  FPW_REQUIRE(m);
  FPW_REQUIRE(n);
  FPW_REQUIRE(word);
  FPW_REQUIRE(out);
  return guarded([&] {
    *out = dup(fpw::britton_reduce(bs_params(m, n), fpw::Word::parse(fpw::bs_alphabet(), word)).to_string());
    return FPW_OK;
  });
}

fpw_status fpw_apply_f(const char* word, uint64_t iterate, int compact, char** out) {
  FPW_REQUIRE(word);
  FPW_REQUIRE(out);
  return guarded([&] {
    fpw::Word w = fpw::Word::parse(fpw::bs_alphabet(), word);
    *out = dup(compact ? fpw::apply_f(fpw::to_syllables(w), iterate).to_string()
                       : fpw::apply_f(w, iterate).to_string());
    return FPW_OK;
  });
}

fpw_status fpw_w_family(uint64_t index, int compact, char** out) {
  FPW_REQUIRE(out);
  return guarded([&] {
    *out = dup(render(fpw::w_family(index), compact));
    return FPW_OK;
  });
}

fpw_status fpw_kernel_stream_new(uint64_t iterate, fpw_stream** out) {
  FPW_REQUIRE(out);
  return guarded([&] {
    auto* s = new fpw_stream;
    s->kernel.emplace(iterate);
    *out = s;
    return FPW_OK;
  });
}

fpw_status fpw_trivial_stream_new(const fpw_presentation* p, fpw_stream** out) {
  FPW_REQUIRE(p);
  FPW_REQUIRE(out);
  return guarded([&] {
    auto* s = new fpw_stream;
    s->trivial.emplace(p->value);
    *out = s;
    return FPW_OK;
  });
}

fpw_status fpw_stream_next(fpw_stream* s, int compact, char** word, char** certificate) {
  FPW_REQUIRE(s);
  FPW_REQUIRE(word);
  return guarded([&] {
    if (s->kernel) {
      *word = dup(render(s->kernel->next(), compact));
      if (certificate) *certificate = nullptr;
      return FPW_OK;
    }
    fpw::TrivialWord tw = s->trivial->next();
    std::string w = render(tw.word, compact);
    std::string c = fpw::certificate_to_json(tw.certificate).dump();
    *word = dup(w);
    if (certificate) *certificate = dup(c);
    return FPW_OK;
  });
}

void fpw_stream_free(fpw_stream* s) { delete s; }

fpw_status fpw_certificate_word(const fpw_presentation* p, const char* certificate, char** word) {
  FPW_REQUIRE(p);
  FPW_REQUIRE(certificate);
  FPW_REQUIRE(word);
  return guarded([&] {
    auto cert = fpw::certificate_from_json(p->value.generators(), fpw::Json::parse(certificate));
    *word = dup(fpw::certificate_word(p->value, cert).to_string());
    return FPW_OK;
  });
}

fpw_status fpw_semidecide_trivial(const fpw_presentation* p, const char* word, uint64_t budget,
                                  char** certificate, uint64_t* steps) {
  FPW_REQUIRE(p);
  FPW_REQUIRE(word);
  return guarded([&] {
    auto verdict = fpw::semidecide_trivial(p->value, fpw::Word::parse(p->value.generators(), word), budget);
    if (auto* proved = std::get_if<fpw::ProvedTrivial>(&verdict)) {
      if (steps) *steps = proved->steps;
      if (certificate) *certificate = dup(fpw::certificate_to_json(proved->certificate).dump());
      return FPW_OK;
    }
    if (steps) *steps = std::get<fpw::Exhausted>(verdict).steps;
    if (certificate) *certificate = nullptr;
    return FPW_EXHAUSTED;
  });
}

fpw_status fpw_abelianization(const fpw_presentation* p, char** out) {
  FPW_REQUIRE(p);
  FPW_REQUIRE(out);
  return guarded([&] {
    auto inv = fpw::abelianization_invariants(p->value);
    fpw::Json torsion = fpw::Json::array();
    for (const auto& d : inv.torsion) torsion.push_back(d.str());
    *out = dup(fpw::Json{{"free_rank", inv.free_rank}, {"torsion", torsion}}.dump());
    return FPW_OK;
  });
}

fpw_status fpw_is_perfect(const fpw_presentation* p, int* out) {
  FPW_REQUIRE(p);
  FPW_REQUIRE(out);
  return guarded([&] {
    *out = fpw::is_perfect(p->value);
    return FPW_OK;
  });
}

fpw_status fpw_oracle_bs(const char* m, const char* n, fpw_oracle** out) {
  FPW_REQUIRE(m);
  FPW_REQUIRE(n);
  FPW_REQUIRE(out);
  return guarded([&] {
    *out = new fpw_oracle{fpw::bs_oracle(bs_params(m, n))};
    return FPW_OK;
  });
}

fpw_status fpw_oracle_cyclic(uint64_t order, fpw_oracle** out) {
  FPW_REQUIRE(out);
  return guarded([&] {
    *out = new fpw_oracle{fpw::cyclic_oracle(order)};
    return FPW_OK;
  });
}

fpw_status fpw_oracle_tower(uint64_t k, fpw_oracle** out) {
  FPW_REQUIRE(out);
  return guarded([&] {
    *out = new fpw_oracle{fpw::tower_oracle(k)};
    return FPW_OK;
  });
}

void fpw_oracle_free(fpw_oracle* o) { delete o; }

fpw_status fpw_oracle_query(const fpw_oracle* o, const fpw_presentation* p, const char* word, int* out) {
  FPW_REQUIRE(o);
  FPW_REQUIRE(p);
  FPW_REQUIRE(word);
  FPW_REQUIRE(out);
  return guarded([&] {
    *out = o->value(fpw::Word::parse(p->value.generators(), word));
    return FPW_OK;
  });
}

fpw_status fpw_hom_check(const fpw_presentation* p, const fpw_presentation* q, const char* map, uint64_t budget,
                         char** certificates, uint64_t* steps) {
  FPW_REQUIRE(p);
  FPW_REQUIRE(q);
  FPW_REQUIRE(map);
  return guarded([&] {
    auto phi = fpw::GeneratorMap::parse(p->value.generators(), q->value.generators(), map);
    auto verdict = fpw::semidecide_homomorphism(phi, p->value, q->value, budget);
    if (auto* proved = std::get_if<fpw::HomProved>(&verdict)) {
      if (steps) *steps = proved->steps;
      if (certificates) {
        fpw::Json all = fpw::Json::array();
        for (const auto& c : proved->certificates) all.push_back(fpw::certificate_to_json(c));
        *certificates = dup(all.dump());
      }
      return FPW_OK;
    }
    if (steps) *steps = std::get<fpw::Exhausted>(verdict).steps;
    if (certificates) *certificates = nullptr;
    return FPW_EXHAUSTED;
  });
}

fpw_status fpw_hom_decide(const fpw_presentation* p, const fpw_presentation* q, const char* map,
                          const fpw_oracle* oracle_q, int* out) {
  FPW_REQUIRE(p);
  FPW_REQUIRE(q);
  FPW_REQUIRE(map);
  FPW_REQUIRE(oracle_q);
  FPW_REQUIRE(out);
  return guarded([&] {
    auto phi = fpw::GeneratorMap::parse(p->value.generators(), q->value.generators(), map);
    *out = fpw::decide_homomorphism(phi, p->value, oracle_q->value);
    return FPW_OK;
  });
}

fpw_status fpw_iso_search(const fpw_presentation* p, const fpw_presentation* q, uint64_t max_candidates,
                          uint64_t max_steps, char** witness, uint64_t* steps) {
  FPW_REQUIRE(p);
  FPW_REQUIRE(q);
  return guarded([&] {
    auto verdict = fpw::iso_search(p->value, q->value, {max_candidates, max_steps});
    if (auto* found = std::get_if<fpw::IsoFound>(&verdict)) {
      if (steps) *steps = found->steps;
      if (witness) {
        fpw::Json j = fpw::witness_to_json(found->witness);
        j["candidate"] = found->candidate;
        j["steps"] = found->steps;
        *witness = dup(j.dump());
      }
      return FPW_OK;
    }
    if (steps) *steps = std::get<fpw::Exhausted>(verdict).steps;
    if (witness) *witness = nullptr;
    return FPW_EXHAUSTED;
  });
}

fpw_status fpw_subgroup_search(const fpw_presentation* p, const fpw_oracle* oracle_p, const char* gens,
                               const fpw_presentation* q, uint64_t max_candidates, uint64_t max_steps,
                               char** result, uint64_t* steps) {
  FPW_REQUIRE(p);
  FPW_REQUIRE(oracle_p);
  FPW_REQUIRE(gens);
  FPW_REQUIRE(q);
  return guarded([&] {
    auto words = split_words(p->value.generators(), gens);
    auto verdict =
        fpw::subgroup_presentation_search(p->value, oracle_p->value, words, q->value, {max_candidates, max_steps});
    if (auto* found = std::get_if<fpw::SubgroupFound>(&verdict)) {
      if (steps) *steps = found->steps;
      if (result) {
        auto lift = fpw::hopfian_lift(words, found->presentation, oracle_p->value);
        fpw::Json j{{"k", found->k},
                    {"presentation", found->presentation.to_string()},
                    {"witness", fpw::witness_to_json(found->witness)},
                    {"steps", found->steps},
                    {"lift",
                     {{"map", lift.map.to_string()},
                      {"homomorphism_verified", lift.homomorphism_verified},
                      {"injectivity_certified", lift.injectivity_certified}}}};
        *result = dup(j.dump());
      }
      return FPW_OK;
    }
    if (steps) *steps = std::get<fpw::Exhausted>(verdict).steps;
    if (result) *result = nullptr;
    return FPW_EXHAUSTED;
  });
}

fpw_status fpw_tietze_apply(const fpw_presentation* p, const char* moves, char** result) {
  FPW_REQUIRE(p);
  FPW_REQUIRE(moves);
  FPW_REQUIRE(result);
  return guarded([&] {
    auto out = fpw::apply_sequence_json(p->value, fpw::Json::parse(moves));
    *result = dup(fpw::Json{{"presentation", out.presentation.to_string()}, {"log", fpw::log_to_json(out.log)}}.dump());
    return FPW_OK;
  });
}

fpw_status fpw_tietze_check(const fpw_presentation* p, const char* move, uint64_t budget, char** result) {
  FPW_REQUIRE(p);
  FPW_REQUIRE(move);
  return guarded([&] {
    auto mv = fpw::move_from_json(p->value, fpw::Json::parse(move));
    auto check = fpw::check_move(p->value, mv, budget);
    if (auto* valid = std::get_if<fpw::MoveValid>(&check)) {
      if (result) {
        fpw::Json j{{"verdict", "valid"}};
        if (valid->found_certificate) j["certificate"] = fpw::certificate_to_json(*valid->found_certificate);
        *result = dup(j.dump());
      }
      return FPW_OK;
    }
    if (auto* invalid = std::get_if<fpw::MoveInvalid>(&check)) {
      if (result) *result = dup(fpw::Json{{"verdict", "invalid"}, {"reason", invalid->reason}}.dump());
      return fail(status_of(invalid->code), invalid->reason);
    }
    if (result) *result = dup(fpw::Json{{"verdict", "unverifiable"}, {"budget", budget}}.dump());
    return FPW_EXHAUSTED;
  });
}

fpw_status fpw_cantor_pair(uint64_t x, uint64_t y, uint64_t* out) {
  FPW_REQUIRE(out);
  return guarded([&] {
    *out = fpw::cantor_pair(x, y);
    return FPW_OK;
  });
}

fpw_status fpw_cantor_unpair(uint64_t z, uint64_t* x, uint64_t* y) {
  FPW_REQUIRE(x);
  FPW_REQUIRE(y);
  return guarded([&] {
    std::tie(*x, *y) = fpw::cantor_unpair(z);
    return FPW_OK;
  });
}

fpw_status fpw_compress(const uint64_t* values, size_t n, uint64_t* out, size_t* out_n) {
  if (n > 0) {
    FPW_REQUIRE(values);
    FPW_REQUIRE(out);
  }
  FPW_REQUIRE(out_n);
  return guarded([&] {
    auto s = fpw::compress_stream(std::make_unique<fpw::ListNatStream>(std::vector<uint64_t>(values, values + n)));
    *out_n = 0;
    for (auto p = s->pull(); p.state != fpw::PullState::Exhausted; p = s->pull())
      if (p.has_value()) out[(*out_n)++] = *p.value;
    return FPW_OK;
  });
}

fpw_status fpw_recover_cardinality(const char* set, uint64_t kmax, uint64_t* out) {
  FPW_REQUIRE(set);
  FPW_REQUIRE(out);
  return guarded([&] {
    auto w = fpw::ExplicitFiniteSet::parse(set);
    auto s = fpw::compress_stream(std::make_unique<fpw::ListNatStream>(w.values()));
    uint64_t size = 0;
    for (auto p = s->pull(); p.state != fpw::PullState::Exhausted; p = s->pull()) size += p.has_value();
    *out = fpw::recover_cardinality(fpw::tower_oracle(size), kmax);
    return FPW_OK;
  });
}

fpw_status fpw_demo_non_hopfian(char** report, int* all_pass) {
  FPW_REQUIRE(report);
  FPW_REQUIRE(all_pass);
  return guarded([&] {
    const fpw::BSParams bs23{};
    const auto bs = fpw::bs_presentation(bs23);
    const auto& a = fpw::bs_alphabet();
    const auto f = fpw::GeneratorMap::parse(a, a, "s=s,t=t^2");
    std::ostringstream out;
    out << "BS(2,3) = " << bs.to_string() << "\n";
    out << "f: " << f.to_string() << "\n\n";

    auto mark = [](bool ok) { return ok ? "[ok]  " : "[FAIL]"; };
    auto hom = fpw::semidecide_homomorphism(f, bs, bs, 100000);
    bool is_hom = std::holds_alternative<fpw::HomProved>(hom);
    out << mark(is_hom) << " f is a homomorphism: f(relator) = "
        << fpw::substitute(bs.relators()[0], f).to_compact_string();
    if (is_hom)
      out << " is a product of conjugates of the relator, certificate "
          << fpw::certificate_to_json(std::get<fpw::HomProved>(hom).certificates[0]).dump();
    out << "\n";

    auto pre = fpw::f_preimage_witnesses();
    bool onto = true;
    for (std::uint32_t g = 0; g < 2; ++g) {
      fpw::Word gen = fpw::Word::generator(a, g);
      bool ok = fpw::bs_equal(bs23, fpw::apply_f(pre.image(g), 1), gen);
      onto = onto && ok;
      out << mark(ok) << " f(" << pre.image(g).to_compact_string() << ") = "
          << fpw::apply_f(pre.image(g), 1).to_compact_string() << " equals " << gen.to_string() << "\n";
    }

    fpw::Word w1 = fpw::w_family(1);
    bool nontrivial = !fpw::bs_is_trivial(bs23, w1);
    out << mark(nontrivial) << " w1 = " << w1.to_string() << " is nontrivial; Britton form "
        << fpw::britton_reduce(bs23, w1).to_string() << "\n";

    fpw::Word fw1 = fpw::apply_f(w1, 1);
    bool killed = fpw::bs_is_trivial(bs23, fw1);
    out << mark(killed) << " f(w1) = " << fw1.to_compact_string() << " is trivial\n\n";

    *all_pass = is_hom && onto && nontrivial && killed;
    out << (*all_pass ? "f is a surjective endomorphism with nontrivial kernel: BS(2,3) is not Hopfian.\n"
                      : "Some check failed.\n");
    *report = dup(out.str());
    return FPW_OK;
  });
}

}  // extern "C"
