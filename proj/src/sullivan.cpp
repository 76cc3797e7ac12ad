#include "rht/sullivan.hpp"

#include "rht/json_io.hpp"

#include <set>

namespace rht {

SullivanPresentation::SullivanPresentation(std::string name, GeneratorSetPtr generators,
                                           std::vector<QElement> differential, int truncation_degree,
                                           std::optional<int> formal_dimension)
    : name_(std::move(name)),
      generators_(std::move(generators)),
      differential_(std::move(differential)),
      truncation_degree_(truncation_degree),
      formal_dimension_(formal_dimension) {
    if (differential_.size() > generators_->size())
        throw std::invalid_argument("more differential entries than generators");
    differential_.resize(generators_->size(), QElement(generators_));
    for (auto& e : differential_)
        if (!e.ambient()) e = QElement(generators_);
}

Derivation<Rational> SullivanPresentation::derivation() const { return Derivation<Rational>(generators_, differential_); }

Derivation<Laurent> SullivanPresentation::laurent_derivation() const {
    std::vector<LElement> images;
    for (const auto& e : differential_) images.push_back(to_laurent(e));
    return Derivation<Laurent>(generators_, std::move(images));
}

bool operator==(const SullivanPresentation& a, const SullivanPresentation& b) {
    return a.name_ == b.name_ && *a.generators_ == *b.generators_ && a.differential_ == b.differential_ &&
           a.truncation_degree_ == b.truncation_degree_ && a.formal_dimension_ == b.formal_dimension_;
}

std::string to_string(Violation::Kind kind) {
    switch (kind) {
        case Violation::Kind::Degree: return "degree";
        case Violation::Kind::Homogeneity: return "homogeneity";
        case Violation::Kind::Minimality: return "minimality";
        case Violation::Kind::SquareZero: return "square-zero";
        case Violation::Kind::Truncation: return "truncation";
        case Violation::Kind::Weight: return "weight";
        case Violation::Kind::ChainMap: return "chain-map";
        case Violation::Kind::Identity: return "identity";
        case Violation::Kind::GroupLaw: return "group-law";
    }
    return "unknown";
}

std::string to_string(const Violation& v) {
    std::string out = "[" + to_string(v.kind) + "]";
    if (!v.generator.empty()) out += " generator " + v.generator;
    if (v.degree != 0) out += " (degree " + std::to_string(v.degree) + ")";
    return out + ": " + v.message;
}

std::vector<Violation> validate(const SullivanPresentation& p) {
    std::vector<Violation> out;
    if (p.truncation_degree() < 2)
        out.push_back({Violation::Kind::Truncation, "", p.truncation_degree(), "truncation degree must be >= 2"});
    bool homogeneous = true;
    for (const auto& g : p.generators()->generators()) {
        if (g.degree < 2)
            out.push_back({Violation::Kind::Degree, g.name, g.degree, "generator degree must be >= 2"});
        const QElement& dx = p.d(g.id);
        if (!dx.is_homogeneous_of(g.degree + 1)) {
            homogeneous = false;
            out.push_back({Violation::Kind::Homogeneity, g.name, g.degree,
                           "d(" + g.name + ") = " + dx.to_string() + " is not homogeneous of degree " +
                               std::to_string(g.degree + 1)});
        }
        for (const auto& [m, c] : dx.terms()) {
            if (m.word_length() < 2)
                out.push_back({Violation::Kind::Minimality, g.name, g.degree,
                               "d(" + g.name + ") has indecomposable term " + p.generators()->format(m)});
        }
    }
    if (!homogeneous) return out;
    const auto d = p.derivation();
    for (const auto& g : p.generators()->generators()) {
        const QElement dd = d(p.d(g.id));
        if (!dd.is_zero())
            out.push_back({Violation::Kind::SquareZero, g.name, g.degree + 2,
                           "d(d(" + g.name + ")) = " + dd.to_string() + " is nonzero"});
    }
    return out;
}

using json_io::Json;

SullivanPresentation parse_presentation(const std::string& text) {
    const Json doc = json_io::parse_document(text);
    if (!doc.is_object()) throw ParseError("", "presentation must be a JSON object");
    json_io::reject_unknown_keys(doc, {"name", "truncation_degree", "formal_dimension", "generators", "differential"}, "");

    const std::string name = json_io::require_string(json_io::require(doc, "name", ""), "/name");
    const int truncation = json_io::require_int(json_io::require(doc, "truncation_degree", ""), "/truncation_degree");
    if (truncation < 2) throw ParseError("/truncation_degree", "truncation degree must be >= 2");
    std::optional<int> formal_dimension;
    if (doc.contains("formal_dimension")) {
        formal_dimension = json_io::require_int(doc["formal_dimension"], "/formal_dimension");
        if (*formal_dimension < 0) throw ParseError("/formal_dimension", "must be nonnegative");
    }

    const Json& gens_json = json_io::require(doc, "generators", "");
    if (!gens_json.is_array()) throw ParseError("/generators", "expected a list");
    std::vector<std::pair<std::string, int>> gens;
    std::set<std::string> seen;
    for (std::size_t k = 0; k < gens_json.size(); ++k) {
        const std::string path = "/generators/" + std::to_string(k);
        const Json& g = gens_json[k];
        if (!g.is_object()) throw ParseError(path, "expected an object");
        json_io::reject_unknown_keys(g, {"name", "degree"}, path);
        const std::string gname = json_io::require_string(json_io::require(g, "name", path), path + "/name");
        const int degree = json_io::require_int(json_io::require(g, "degree", path), path + "/degree");
        if (gname.empty()) throw ParseError(path + "/name", "generator name must be nonempty");
        if (degree < 2)
            throw ParseError(path + "/degree", "generator degree must be >= 2 (simply connected), got " +
                                                   std::to_string(degree));
        if (!seen.insert(gname).second) throw ParseError(path + "/name", "duplicate generator name '" + gname + "'");
        gens.emplace_back(gname, degree);
    }
    const auto generators = GeneratorSet::make(gens);

    std::vector<QElement> differential(generators->size(), QElement(generators));
    if (doc.contains("differential")) {
        const Json& dj = doc["differential"];
        if (!dj.is_object()) throw ParseError("/differential", "expected an object keyed by generator name");
        for (auto it = dj.begin(); it != dj.end(); ++it) {
            const std::string path = "/differential/" + it.key();
            const auto id = generators->find(it.key());
            if (!id) throw ParseError(path, "differential of unknown generator '" + it.key() + "'");
            differential[static_cast<std::size_t>(*id)] = json_io::qelement_from_json(generators, it.value(), path);
        }
    }
    return SullivanPresentation(name, generators, std::move(differential), truncation, formal_dimension);
}

Json json_io::presentation_to_json(const SullivanPresentation& p) {
    Json doc = Json::object();
    doc["name"] = p.name();
    doc["truncation_degree"] = p.truncation_degree();
    if (p.formal_dimension()) doc["formal_dimension"] = *p.formal_dimension();
    Json gens = Json::array();
    for (const auto& g : p.generators()->generators()) gens.push_back(Json{{"name", g.name}, {"degree", g.degree}});
    doc["generators"] = std::move(gens);
    Json diff = Json::object();
    for (const auto& g : p.generators()->generators())
        if (!p.d(g.id).is_zero()) diff[g.name] = json_io::element_to_json(p.d(g.id));
    doc["differential"] = std::move(diff);
    return doc;
}

std::string serialize(const SullivanPresentation& p) { return json_io::dump(json_io::presentation_to_json(p)); }

}  // namespace rht
