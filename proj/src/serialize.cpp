#include "fpw/serialize.hpp"

namespace fpw {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::Parse, "bad JSON: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) bad(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::int64_t int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) bad(std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

std::size_t index_field(const Json& j, const char* key) {
  auto v = int_field(j, key);
  if (v < 0) bad(std::string("field '") + key + "' must be non-negative");
  return static_cast<std::size_t>(v);
}

}  // namespace

Json certificate_to_json(const TrivialityCertificate& cert) {
  Json out = Json::array();
  for (const auto& f : cert.factors)
    out.push_back({{"conj", f.conjugator.to_string()}, {"rel", f.relator}, {"sign", f.sign}});
  return out;
}

TrivialityCertificate certificate_from_json(const AlphabetPtr& generators, const Json& j) {
  if (!j.is_array()) bad("certificate must be an array");
  TrivialityCertificate cert;
  for (const Json& f : j) {
    auto sign = int_field(f, "sign");
    if (sign != 1 && sign != -1) bad("sign must be 1 or -1");
    cert.factors.push_back({Word::parse(generators, string_field(f, "conj")), int_field(f, "rel"),
                            static_cast<int>(sign)});
  }
  return cert;
}

Json map_to_json(const GeneratorMap& m) {
  Json images = Json::array();
  for (const Word& w : m.images()) images.push_back(w.to_string());
  return {{"domain", m.domain()->names()}, {"codomain", m.codomain()->names()}, {"images", images}};
}

Json witness_to_json(const IsoWitness& w) {
  return {{"forward", map_to_json(w.forward)}, {"backward", map_to_json(w.backward)}};
}

Json move_to_json(const TietzeMove& mv) {
  return std::visit(
      Overloaded{
          [](const AddRelator& m) {
            Json j = {{"op", "add_rel"}, {"word", m.word.to_string()}};
            if (m.certificate) j["cert"] = certificate_to_json(*m.certificate);
            return j;
          },
          [](const RemoveRelator& m) {
            Json j = {{"op", "rem_rel"}, {"index", m.index}};
            if (m.certificate) j["cert"] = certificate_to_json(*m.certificate);
            return j;
          },
          [](const AddGenerator& m) {
            return Json{{"op", "add_gen"}, {"name", m.name}, {"def", m.definition.to_string()}};
          },
          [](const RemoveGenerator& m) {
            return Json{{"op", "rem_gen"}, {"name", m.name}, {"rel", m.relator}};
          },
      },
      mv);
}

TietzeMove move_from_json(const FinitePresentation& current, const Json& j) {
  const AlphabetPtr& gens = current.generators();
  std::string op = string_field(j, "op");
  auto cert = [&]() -> std::optional<TrivialityCertificate> {
    if (!j.contains("cert")) return std::nullopt;
    return certificate_from_json(gens, j.at("cert"));
  };
  if (op == "add_rel") return AddRelator{Word::parse(gens, string_field(j, "word")), cert()};
  if (op == "rem_rel") return RemoveRelator{index_field(j, "index"), cert()};
  if (op == "add_gen") return AddGenerator{string_field(j, "name"), Word::parse(gens, string_field(j, "def"))};
  if (op == "rem_gen") return RemoveGenerator{string_field(j, "name"), index_field(j, "rel")};
  bad("unknown op '" + op + "'");
}

Json log_to_json(const MoveLog& log) {
  Json out = Json::array();
  for (std::size_t i = 0; i < log.size(); ++i)
    out.push_back({{"step", i},
                   {"move", move_to_json(log[i].move)},
                   {"before", log[i].before},
                   {"after", log[i].after}});
  return out;
}

SequenceResult apply_sequence_json(const FinitePresentation& p, const Json& moves) {
  if (!moves.is_array()) bad("moves must be an array");
  SequenceResult out{p, {}};
  for (std::size_t i = 0; i < moves.size(); ++i) {
    try {
      TietzeMove mv = move_from_json(out.presentation, moves[i]);
      std::string before = presentation_hash(out.presentation);
      out.presentation = apply_move(out.presentation, mv);
      out.log.push_back({std::move(mv), std::move(before), presentation_hash(out.presentation)});
    } catch (const Error& e) {
      throw SequenceError(e, i);
    }
  }
  return out;
}

}  // namespace fpw
