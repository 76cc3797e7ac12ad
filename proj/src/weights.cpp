#include "rht/weights.hpp"

namespace rht {

std::int64_t WeightAssignment::weight(const GeneratorSet& gens, const Monomial& m) const {
    std::int64_t total = 0;
    for (const auto& [id, e] : gens.factors(m)) total += (*this)[id] * e;
    return total;
}

WeightAssignment WeightAssignment::scaled(std::int64_t k) const {
    WeightAssignment out = *this;
    for (auto& v : out.values) v *= k;
    return out;
}

WeightConstraintSystem extract_constraints(const SullivanPresentation& p) {
    const auto& gens = *p.generators();
    std::vector<std::vector<Rational>> rows;
    WeightConstraintSystem sys;
    for (const auto& g : gens.generators()) {
        for (const auto& [m, c] : p.d(g.id).terms()) {
            std::vector<Rational> row(gens.size(), Rational(0));
            for (const auto& [id, e] : gens.factors(m)) row[static_cast<std::size_t>(id)] += Rational(e);
            row[static_cast<std::size_t>(g.id)] -= Rational(1);
            rows.push_back(std::move(row));
            sys.labels.push_back(g.name + ": " + gens.format(m));
            sys.source.push_back(g.id);
        }
    }
    sys.matrix = QMatrix(static_cast<Index>(rows.size()), static_cast<Index>(gens.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j)
            sys.matrix(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j];
    return sys;
}

WeightSearchResult find_weights(const SullivanPresentation& p) {
    const auto sys = extract_constraints(p);
    const auto feas = positive_integer_kernel(sys.matrix);
    WeightSearchResult out;
    if (feas.solution) {
        out.weights = WeightAssignment{*feas.solution};
        return out;
    }
    out.witness_rows = feas.witness_rows;
    for (auto r : feas.witness_rows) out.witness_labels.push_back(sys.labels[r]);
    return out;
}

std::vector<Violation> check_weights(const SullivanPresentation& p, const WeightAssignment& w) {
    std::vector<Violation> out;
    const auto& gens = *p.generators();
    if (w.values.size() != gens.size()) {
        out.push_back({Violation::Kind::Weight, "", 0,
                       "weight assignment covers " + std::to_string(w.values.size()) + " of " +
                           std::to_string(gens.size()) + " generators"});
        return out;
    }
    for (const auto& g : gens.generators()) {
        if (w[g.id] < 1)
            out.push_back({Violation::Kind::Weight, g.name, g.degree,
                           "weight " + std::to_string(w[g.id]) + " is not positive"});
        for (const auto& [m, c] : p.d(g.id).terms()) {
            const auto wm = w.weight(gens, m);
            if (wm != w[g.id])
                out.push_back({Violation::Kind::Weight, g.name, g.degree,
                               "term " + gens.format(m) + " of d(" + g.name + ") has weight " + std::to_string(wm) +
                                   ", expected " + std::to_string(w[g.id])});
        }
    }
    return out;
}

std::string format_weights(const SullivanPresentation& p, const WeightAssignment& w) {
    std::string out;
    for (const auto& g : p.generators()->generators()) {
        if (!out.empty()) out += ' ';
        out += g.name + ":" + std::to_string(w[g.id]);
    }
    return out;
}

WeightAssignment parse_weights(const SullivanPresentation& p, const std::string& text) {
    const auto doc = json_io::parse_document(text);
    const json_io::Json* obj = &doc;
    std::string base;
    if (doc.is_object() && doc.contains("weights") && doc["weights"].is_object()) {
        obj = &doc["weights"];
        base = "/weights";
    }
    if (!obj->is_object()) throw ParseError(base, "weights must be an object mapping generator to integer");
    const auto& gens = *p.generators();
    WeightAssignment w{std::vector<std::int64_t>(gens.size(), 0)};
    std::vector<bool> seen(gens.size(), false);
    for (auto it = obj->begin(); it != obj->end(); ++it) {
        const std::string path = base + "/" + it.key();
        const auto id = gens.find(it.key());
        if (!id) throw ParseError(path, "unknown generator '" + it.key() + "'");
        if (!it.value().is_number_integer()) throw ParseError(path, "weight must be an integer");
        w.values[static_cast<std::size_t>(*id)] = it.value().get<std::int64_t>();
        seen[static_cast<std::size_t>(*id)] = true;
    }
    for (const auto& g : gens.generators())
        if (!seen[static_cast<std::size_t>(g.id)]) throw ParseError(base + "/" + g.name, "missing weight");
    return w;
}

json_io::Json weights_json(const SullivanPresentation& p, const WeightAssignment& w) {
    json_io::Json out = json_io::Json::object();
    for (const auto& g : p.generators()->generators()) out[g.name] = w[g.id];
    return out;
}

json_io::Json weight_report_json(const SullivanPresentation& p, const WeightSearchResult& r) {
    json_io::Json out = json_io::Json::object();
    out["feasible"] = r.feasible();
    out["weights"] = r.weights ? weights_json(p, *r.weights) : json_io::Json::object();
    out["witness_rows"] = r.witness_rows;
    out["witness_labels"] = r.witness_labels;
    return out;
}

}  // namespace rht
