#include "rht/json_io.hpp"

namespace rht::json_io {

Json parse_document(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError("byte " + std::to_string(e.byte), std::string("malformed JSON: ") + e.what());
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

const Json& require(const Json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object()) throw ParseError(path, "expected an object");
    const auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(path + "/" + key, "missing required field");
    return *it;
}

std::string require_string(const Json& j, const std::string& path) {
    if (!j.is_string()) throw ParseError(path, "expected a string");
    return j.get<std::string>();
}

int require_int(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) throw ParseError(path, "expected an integer");
    return j.get<int>();
}

Json monomial_to_json(const GeneratorSet& gens, const Monomial& m) {
    Json out = Json::array();
    for (const auto& [id, e] : gens.factors(m)) out.push_back(Json::array({gens.generator(id).name, e}));
    return out;
}

SignedMonomial monomial_from_json(const GeneratorSet& gens, const Json& j, const std::string& path) {
    if (!j.is_array()) throw ParseError(path, "monomial must be a list of [generator, exponent] pairs");
    std::vector<std::pair<int, int>> factors;
    for (std::size_t k = 0; k < j.size(); ++k) {
        const std::string fpath = path + "/" + std::to_string(k);
        const Json& f = j[k];
        if (!f.is_array() || f.size() != 2) throw ParseError(fpath, "expected [generator, exponent]");
        const std::string name = require_string(f[0], fpath + "/0");
        const int e = require_int(f[1], fpath + "/1");
        if (e < 1) throw ParseError(fpath + "/1", "exponent must be >= 1");
        const auto id = gens.find(name);
        if (!id) throw ParseError(fpath + "/0", "unknown generator '" + name + "'");
        factors.emplace_back(*id, e);
    }
    auto m = gens.monomial_from_factors(factors);
    if (!m) throw ParseError(path, "monomial vanishes (repeated odd generator)");
    return *m;
}

namespace {

template <class S>
Json element_to_json_impl(const Element<S>& e) {
    Json out = Json::array();
    for (const auto& [m, c] : e.terms())
        out.push_back(Json{{"coeff", c.to_string()}, {"monomial", monomial_to_json(*e.ambient(), m)}});
    return out;
}

template <class S, class ParseCoeff>
Element<S> element_from_json_impl(const GeneratorSetPtr& gens, const Json& j, const std::string& path,
                                  ParseCoeff parse_coeff) {
    if (!j.is_array()) throw ParseError(path, "expected a list of terms");
    Element<S> out(gens);
    for (std::size_t k = 0; k < j.size(); ++k) {
        const std::string tpath = path + "/" + std::to_string(k);
        const Json& term = j[k];
        const std::string coeff_text = require_string(require(term, "coeff", tpath), tpath + "/coeff");
        S coeff;
        try {
            coeff = parse_coeff(coeff_text);
        } catch (const std::invalid_argument& e) {
            throw ParseError(tpath + "/coeff", e.what());
        }
        const auto m = monomial_from_json(*gens, require(term, "monomial", tpath), tpath + "/monomial");
        out.add(m.monomial, m.sign > 0 ? coeff : -coeff);
    }
    return out;
}

}  // namespace

Json element_to_json(const QElement& e) { return element_to_json_impl(e); }
Json element_to_json(const LElement& e) { return element_to_json_impl(e); }

QElement qelement_from_json(const GeneratorSetPtr& gens, const Json& j, const std::string& path) {
    return element_from_json_impl<Rational>(gens, j, path, [](const std::string& s) { return Rational::parse(s); });
}

LElement lelement_from_json(const GeneratorSetPtr& gens, const Json& j, const std::string& path) {
    return element_from_json_impl<Laurent>(gens, j, path, [](const std::string& s) { return Laurent::parse(s); });
}

void reject_unknown_keys(const Json& obj, const std::set<std::string>& allowed, const std::string& path) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.contains(it.key())) throw ParseError(path + "/" + it.key(), "unknown field");
}

}  // namespace rht::json_io
