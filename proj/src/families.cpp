#include "rht/families.hpp"

#include <set>

namespace rht {

namespace {

AlgebraMap<Laurent> to_laurent(const AlgebraMap<Rational>& phi) {
    std::vector<LElement> images;
    for (const auto& img : phi.images()) images.push_back(rht::to_laurent(img));
    return AlgebraMap<Laurent>(phi.source(), phi.target(), std::move(images));
}

bool same_base(const SullivanPresentation& a, const SullivanPresentation& b) { return &a == &b || a == b; }

std::vector<int> generators_of_degree(const GeneratorSet& gens, int degree) {
    std::vector<int> ids;
    for (std::size_t r = 0; r < gens.size(); ++r) {
        const int id = gens.id_of_rank(static_cast<int>(r));
        if (gens.generator(id).degree == degree) ids.push_back(id);
    }
    return ids;
}

std::set<int> distinct_degrees(const GeneratorSet& gens) {
    std::set<int> out;
    for (const auto& g : gens.generators()) out.insert(g.degree);
    return out;
}

}  // namespace

OneParameterFamily::OneParameterFamily(std::shared_ptr<const SullivanPresentation> base, std::vector<LElement> images)
    : base_(std::move(base)), map_(base_->generators(), std::move(images)) {}

ModelAutomorphism::ModelAutomorphism(std::shared_ptr<const SullivanPresentation> base, AlgebraMap<Rational> map,
                                     AlgebraMap<Rational> inverse)
    : base_(std::move(base)), map_(std::move(map)), inverse_(std::move(inverse)) {}

ModelAutomorphism::ModelAutomorphism(std::shared_ptr<const SullivanPresentation> base, std::vector<QElement> images)
    : base_(std::move(base)),
      map_(base_->generators(), std::move(images)),
      inverse_(AlgebraMap<Rational>::identity(base_->generators())) {
    const auto violations = check_chain_map(*base_, map_);
    if (!violations.empty()) throw std::invalid_argument("not a chain map: " + to_string(violations.front()));
    inverse_ = invert_algebra_map(map_);
}

ModelAutomorphism ModelAutomorphism::identity(std::shared_ptr<const SullivanPresentation> base) {
    auto id = AlgebraMap<Rational>::identity(base->generators());
    return ModelAutomorphism(std::move(base), id, id);
}

QMatrix linear_part(const AlgebraMap<Rational>& phi, int degree) {
    const auto& gens = *phi.source();
    const auto ids = generators_of_degree(gens, degree);
    const auto n = static_cast<Index>(ids.size());
    QMatrix m = QMatrix::Zero(n, n);
    for (Index j = 0; j < n; ++j)
        for (Index i = 0; i < n; ++i)
            m(j, i) = phi.image(ids[static_cast<std::size_t>(j)])
                          .coefficient(gens.generator_monomial(ids[static_cast<std::size_t>(i)]));
    return m;
}

AlgebraMap<Rational> invert_algebra_map(const AlgebraMap<Rational>& phi) {
    const auto& ambient = phi.source();
    if (!(*ambient == *phi.target())) throw std::invalid_argument("invert: source and target differ");
    const auto& gens = *ambient;
    // Images not yet constructed stay zero; lower-degree elements never touch them.
    std::vector<QElement> inv(gens.size(), QElement(ambient));
    for (int degree : distinct_degrees(gens)) {
        const AlgebraMap<Rational> partial(ambient, inv);
        const auto ids = generators_of_degree(gens, degree);
        QMatrix a;
        try {
            a = inverse(linear_part(phi, degree));
        } catch (const std::domain_error&) {
            throw std::domain_error("linear part is singular in degree " + std::to_string(degree));
        }
        std::vector<QElement> corrected;  // x_j - psi(D_j)
        for (int j : ids) {
            QElement decomposable = phi.image(j);
            for (int i : ids) {
                const Monomial gi = gens.generator_monomial(i);
                decomposable.add(gi, -decomposable.coefficient(gi));
            }
            corrected.push_back(QElement::generator(ambient, j) - partial(decomposable));
        }
        for (std::size_t i = 0; i < ids.size(); ++i) {
            QElement image(ambient);
            for (std::size_t j = 0; j < ids.size(); ++j)
                image += corrected[j] * a(static_cast<Index>(i), static_cast<Index>(j));
            inv[static_cast<std::size_t>(ids[i])] = std::move(image);
        }
    }
    return AlgebraMap<Rational>(ambient, std::move(inv));
}

std::vector<Violation> check_chain_map(const SullivanPresentation& p, const AlgebraMap<Rational>& phi) {
    std::vector<Violation> out;
    const auto d = p.derivation();
    for (const auto& g : p.generators()->generators()) {
        const QElement lhs = phi(p.d(g.id));
        const QElement rhs = d(phi.image(g.id));
        if (!(lhs == rhs))
            out.push_back({Violation::Kind::ChainMap, g.name, g.degree,
                           "phi(d " + g.name + ") = " + lhs.to_string() + " but d(phi " + g.name +
                               ") = " + rhs.to_string()});
    }
    return out;
}

OneParameterFamily diagonal_family(std::shared_ptr<const SullivanPresentation> p, const WeightAssignment& w) {
    const auto violations = check_weights(*p, w);
    if (!violations.empty()) throw std::invalid_argument("invalid weights: " + to_string(violations.front()));
    std::vector<LElement> images;
    for (const auto& g : p->generators()->generators())
        images.push_back(LElement::monomial(p->generators(), p->generators()->generator_monomial(g.id),
                                            Laurent::t(static_cast<int>(w[g.id]))));
    return OneParameterFamily(std::move(p), std::move(images));
}

ModelAutomorphism invert_automorphism(const ModelAutomorphism& phi) {
    return ModelAutomorphism(phi.base_, phi.inverse_, phi.map_);
}

OneParameterFamily conjugate(const OneParameterFamily& lambda, const ModelAutomorphism& phi) {
    if (!same_base(lambda.base(), phi.base()))
        throw std::invalid_argument("conjugate: family and automorphism live on different presentations");
    const auto forward = to_laurent(phi.map());
    const auto backward = to_laurent(phi.inverse_map());
    std::vector<LElement> images;
    for (const auto& g : lambda.base().generators()->generators())
        images.push_back(backward(lambda(forward.image(g.id))));
    return OneParameterFamily(lambda.base_ptr(), std::move(images));
}

OneParameterFamily compose(const OneParameterFamily& lambda, const OneParameterFamily& mu) {
    if (!same_base(lambda.base(), mu.base()))
        throw std::invalid_argument("compose: families live on different presentations");
    std::vector<LElement> images;
    for (const auto& g : mu.base().generators()->generators()) images.push_back(lambda(mu.image(g.id)));
    return OneParameterFamily(lambda.base_ptr(), std::move(images));
}

std::vector<Violation> verify_family(const OneParameterFamily& lambda) {
    std::vector<Violation> out;
    const auto& p = lambda.base();
    const auto& ambient = p.generators();
    for (const auto& g : ambient->generators()) {
        for (const auto& [m, c] : lambda.image(g.id).terms()) {
            if (c.involves_s()) {
                out.push_back({Violation::Kind::GroupLaw, g.name, g.degree,
                               "image of " + g.name + " uses the reserved parameter s"});
                return out;
            }
        }
    }

    const auto d = p.laurent_derivation();
    for (const auto& g : ambient->generators()) {
        const LElement lhs = lambda(to_laurent(p.d(g.id)));
        const LElement rhs = d(lambda.image(g.id));
        if (!(lhs == rhs))
            out.push_back({Violation::Kind::ChainMap, g.name, g.degree,
                           "lambda(d " + g.name + ") = " + lhs.to_string() + " but d(lambda " + g.name +
                               ") = " + rhs.to_string()});
    }

    for (const auto& g : ambient->generators()) {
        LElement at_one(ambient);
        for (const auto& [m, c] : lambda.image(g.id).terms()) at_one.add(m, c.at_t(Rational(1)));
        if (!(at_one == LElement::generator(ambient, g.id)))
            out.push_back({Violation::Kind::Identity, g.name, g.degree,
                           "at t = 1 the image of " + g.name + " is " + at_one.to_string()});
    }

    std::vector<LElement> s_images;
    for (const auto& g : ambient->generators())
        s_images.push_back(lambda.image(g.id).map_coefficients([](const Laurent& c) { return c.rename_t_to_s(); }));
    const AlgebraMap<Laurent> lambda_s(ambient, std::move(s_images));
    for (const auto& g : ambient->generators()) {
        const LElement lhs = lambda_s(lambda.image(g.id));
        const LElement rhs =
            lambda.image(g.id).map_coefficients([](const Laurent& c) { return c.substitute_t_by_st(); });
        if (!(lhs == rhs))
            out.push_back({Violation::Kind::GroupLaw, g.name, g.degree,
                           "lambda_s(lambda_t " + g.name + ") = " + lhs.to_string() + " but lambda_st " + g.name +
                               " = " + rhs.to_string()});
    }
    return out;
}

EvaluatedFamily evaluate(const OneParameterFamily& lambda, const Rational& t0) {
    const auto& ambient = lambda.base().generators();
    std::vector<QElement> images;
    for (const auto& g : ambient->generators()) {
        QElement img(ambient);
        for (const auto& [m, c] : lambda.image(g.id).terms()) {
            const auto value = c.at_t(t0).as_constant();
            if (!value) throw std::invalid_argument("evaluate: coefficient involves s");
            img.add(m, *value);
        }
        images.push_back(std::move(img));
    }
    return EvaluatedFamily{AlgebraMap<Rational>(ambient, std::move(images)), !t0.is_zero()};
}

SullivanPresentation transport(const SullivanPresentation& p, const AlgebraMap<Rational>& phi) {
    const auto psi = invert_algebra_map(phi);
    const auto d = p.derivation();
    std::vector<QElement> diff;
    for (const auto& g : p.generators()->generators()) diff.push_back(psi(d(phi.image(g.id))));
    return SullivanPresentation(p.name(), p.generators(), std::move(diff), p.truncation_degree(),
                                p.formal_dimension());
}

OneParameterFamily parse_family(std::shared_ptr<const SullivanPresentation> p, const std::string& text) {
    const auto doc = json_io::parse_document(text);
    if (!doc.is_object()) throw ParseError("", "family must be an object keyed by generator name");
    const auto& ambient = p->generators();
    std::vector<std::optional<LElement>> images(ambient->size());
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        const auto id = ambient->find(it.key());
        if (!id) throw ParseError("/" + it.key(), "unknown generator '" + it.key() + "'");
        images[static_cast<std::size_t>(*id)] = json_io::lelement_from_json(ambient, it.value(), "/" + it.key());
    }
    std::vector<LElement> out;
    for (const auto& g : ambient->generators()) {
        const auto& img = images[static_cast<std::size_t>(g.id)];
        if (!img) throw ParseError("/" + g.name, "missing image of generator '" + g.name + "'");
        if (!img->is_homogeneous_of(g.degree))
            throw ParseError("/" + g.name, "image is not homogeneous of degree " + std::to_string(g.degree));
        out.push_back(*img);
    }
    return OneParameterFamily(std::move(p), std::move(out));
}

json_io::Json family_json(const OneParameterFamily& lambda) {
    json_io::Json out = json_io::Json::object();
    for (const auto& g : lambda.base().generators()->generators())
        out[g.name] = json_io::element_to_json(lambda.image(g.id));
    return out;
}

AlgebraMap<Rational> parse_algebra_map(const GeneratorSetPtr& ambient, const std::string& text) {
    const auto doc = json_io::parse_document(text);
    if (!doc.is_object()) throw ParseError("", "automorphism must be an object keyed by generator name");
    std::vector<QElement> images;
    for (const auto& g : ambient->generators()) images.push_back(QElement::generator(ambient, g.id));
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        const auto id = ambient->find(it.key());
        if (!id) throw ParseError("/" + it.key(), "unknown generator '" + it.key() + "'");
        auto img = json_io::qelement_from_json(ambient, it.value(), "/" + it.key());
        const int degree = ambient->generator(*id).degree;
        if (!img.is_homogeneous_of(degree))
            throw ParseError("/" + it.key(), "image is not homogeneous of degree " + std::to_string(degree));
        images[static_cast<std::size_t>(*id)] = std::move(img);
    }
    return AlgebraMap<Rational>(ambient, ambient, std::move(images));
}

ModelAutomorphism parse_automorphism(std::shared_ptr<const SullivanPresentation> p, const std::string& text) {
    auto phi = parse_algebra_map(p->generators(), text);
    return ModelAutomorphism(std::move(p), phi.images());
}

json_io::Json map_json(const AlgebraMap<Rational>& phi) {
    json_io::Json out = json_io::Json::object();
    for (const auto& g : phi.source()->generators()) out[g.name] = json_io::element_to_json(phi.image(g.id));
    return out;
}

}  // namespace rht
