// JSON forms of certificates, maps, isomorphism witnesses and Tietze moves.
//
//   certificate  [{"conj": "t", "rel": 0, "sign": 1}, ...]   (rel -1: identity)
//   map          {"domain": ["x"], "codomain": ["y"], "images": ["y"]}
//   witness      {"forward": map, "backward": map}
//   move         {"op": "add_rel", "word": w, "cert": certificate}
//                {"op": "rem_rel", "index": i, "cert": certificate}
//                {"op": "add_gen", "name": g, "def": w}
//                {"op": "rem_gen", "name": g, "rel": i}
//
// "cert" may be omitted for the relator moves (check_move then searches).

#ifndef FPW_SERIALIZE_HPP
#define FPW_SERIALIZE_HPP

#include "json.hpp"

#include "fpw/search.hpp"
#include "fpw/tietze.hpp"

namespace fpw {

using Json = nlohmann::json;

Json certificate_to_json(const TrivialityCertificate& cert);
TrivialityCertificate certificate_from_json(const AlphabetPtr& generators, const Json& j);

Json map_to_json(const GeneratorMap& m);
Json witness_to_json(const IsoWitness& w);

Json move_to_json(const TietzeMove& mv);
/// Words in the move are parsed over `current`'s generators.
TietzeMove move_from_json(const FinitePresentation& current, const Json& j);

Json log_to_json(const MoveLog& log);

/// Parse each move against the presentation it applies to, then fold.
SequenceResult apply_sequence_json(const FinitePresentation& p, const Json& moves);

}  // namespace fpw

#endif  // FPW_SERIALIZE_HPP
