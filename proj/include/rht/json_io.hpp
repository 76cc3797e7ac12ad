#pragma once

// JSON encodings shared by the file formats: elements as term lists
// [{"coeff": "...", "monomial": [[name, exponent], ...]}, ...].

#include "rht/gca.hpp"
#include "rht/sullivan.hpp"

#include <json.hpp>

#include <set>
#include <string>

namespace rht::json_io {

using Json = nlohmann::json;

Json parse_document(const std::string& text);
std::string dump(const Json& j);

Json monomial_to_json(const GeneratorSet& gens, const Monomial& m);
/// Parses a monomial list; the sign from reordering odd factors is returned.
SignedMonomial monomial_from_json(const GeneratorSet& gens, const Json& j, const std::string& path);

Json element_to_json(const QElement& e);
Json element_to_json(const LElement& e);
QElement qelement_from_json(const GeneratorSetPtr& gens, const Json& j, const std::string& path);
LElement lelement_from_json(const GeneratorSetPtr& gens, const Json& j, const std::string& path);

const Json& require(const Json& obj, const std::string& key, const std::string& path);
std::string require_string(const Json& j, const std::string& path);
int require_int(const Json& j, const std::string& path);
/// The object written by serialize.
Json presentation_to_json(const SullivanPresentation& p);
void reject_unknown_keys(const Json& obj, const std::set<std::string>& allowed, const std::string& path);

}  // namespace rht::json_io
