#include "rht/formal_model.hpp"

#include "rht/cohomology.hpp"
#include "rht/qlinalg.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace rht {

namespace {

using json_io::Json;

bool sign_odd(int a, int b) { return (a % 2 != 0) && (b % 2 != 0); }

}  // namespace

GradedAlgebraTable::GradedAlgebraTable(std::string name, std::vector<AlgebraBasisElement> basis, int unit,
                                       const std::vector<Product>& products, std::optional<int> formal_dimension)
    : name_(std::move(name)), basis_(std::move(basis)), unit_(unit), formal_dimension_(formal_dimension) {
    const int n = static_cast<int>(basis_.size());
    if (unit_ < 0 || unit_ >= n) throw std::invalid_argument("unit is not a basis element");
    for (int i = 0; i < n; ++i) {
        const int deg = basis_[static_cast<std::size_t>(i)].degree;
        if (deg < 0) throw std::invalid_argument("basis element " + basis_[static_cast<std::size_t>(i)].name + " has negative degree");
        if (deg == 1) throw std::invalid_argument("basis element " + basis_[static_cast<std::size_t>(i)].name + " has degree 1");
        if (deg == 0 && i != unit_)
            throw std::invalid_argument("degree 0 must be spanned by the unit, found " + basis_[static_cast<std::size_t>(i)].name);
    }
    if (basis_[static_cast<std::size_t>(unit_)].degree != 0) throw std::invalid_argument("unit must have degree 0");

    std::vector<std::vector<bool>> given(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    table_.assign(static_cast<std::size_t>(n), std::vector<QVector>(static_cast<std::size_t>(n), zero()));
    auto name_of = [&](int i) { return basis_[static_cast<std::size_t>(i)].name; };
    auto deg_of = [&](int i) { return basis_[static_cast<std::size_t>(i)].degree; };

    auto set_entry = [&](int i, int j, const QVector& v, const std::string& what) {
        auto& slot = table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (given[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] && !(slot == v))
            throw std::invalid_argument(what + ": inconsistent products " + name_of(i) + "*" + name_of(j));
        slot = v;
        given[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
    };

    for (const auto& p : products) {
        if (p.left < 0 || p.left >= n || p.right < 0 || p.right >= n)
            throw std::invalid_argument("product refers to an unknown basis element");
        if (p.result.size() != n) throw std::invalid_argument("product result has the wrong length");
        const int target = deg_of(p.left) + deg_of(p.right);
        for (int k = 0; k < n; ++k)
            if (!p.result(k).is_zero() && deg_of(k) != target)
                throw std::invalid_argument("product " + name_of(p.left) + "*" + name_of(p.right) + " has a term " +
                                            name_of(k) + " of degree " + std::to_string(deg_of(k)) + ", expected " +
                                            std::to_string(target));
        set_entry(p.left, p.right, p.result, "graded commutativity");
        const QVector swapped = sign_odd(deg_of(p.left), deg_of(p.right)) ? QVector(-p.result) : p.result;
        set_entry(p.right, p.left, swapped, "graded commutativity");
    }
    for (int i = 0; i < n; ++i) {
        set_entry(unit_, i, basis_vector(i), "unit");
        set_entry(i, unit_, basis_vector(i), "unit");
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const QVector left = multiply(product(i, j), basis_vector(k));
                const QVector right = multiply(basis_vector(i), product(j, k));
                if (!(left == right))
                    throw std::invalid_argument("associativity fails on (" + name_of(i) + ", " + name_of(j) + ", " +
                                                name_of(k) + ")");
            }
}

int GradedAlgebraTable::max_degree() const {
    int out = 0;
    for (const auto& b : basis_) out = std::max(out, b.degree);
    return out;
}

std::size_t GradedAlgebraTable::dimension(int n) const { return indices_of_degree(n).size(); }

std::vector<int> GradedAlgebraTable::indices_of_degree(int n) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].degree == n) out.push_back(static_cast<int>(i));
    return out;
}

QVector GradedAlgebraTable::zero() const { return QVector::Constant(static_cast<Index>(basis_.size()), Rational(0)); }

QVector GradedAlgebraTable::basis_vector(int i) const {
    QVector v = zero();
    v(i) = Rational(1);
    return v;
}

const QVector& GradedAlgebraTable::product(int i, int j) const {
    return table_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j));
}

QVector GradedAlgebraTable::multiply(const QVector& a, const QVector& b) const {
    QVector out = zero();
    for (Index i = 0; i < a.size(); ++i) {
        if (a(i).is_zero()) continue;
        for (Index j = 0; j < b.size(); ++j) {
            if (b(j).is_zero()) continue;
            out += (a(i) * b(j)) * product(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return out;
}

std::string GradedAlgebraTable::format(const QVector& v) const {
    std::string out;
    for (Index i = 0; i < v.size(); ++i) {
        if (v(i).is_zero()) continue;
        Rational c = v(i);
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        c = c.abs();
        if (!(c == Rational(1))) out += c.to_string() + "*";
        out += basis_[static_cast<std::size_t>(i)].name;
    }
    return out.empty() ? "0" : out;
}

GradedAlgebraTable parse_algebra_table(const std::string& text) {
    const Json doc = json_io::parse_document(text);
    if (!doc.is_object()) throw ParseError("", "algebra table must be a JSON object");
    json_io::reject_unknown_keys(doc, {"name", "basis", "unit", "products", "formal_dimension"}, "");
    const std::string name = json_io::require_string(json_io::require(doc, "name", ""), "/name");
    std::optional<int> formal_dimension;
    if (doc.contains("formal_dimension")) {
        formal_dimension = json_io::require_int(doc["formal_dimension"], "/formal_dimension");
        if (*formal_dimension < 0) throw ParseError("/formal_dimension", "must be nonnegative");
    }

    const Json& basis_json = json_io::require(doc, "basis", "");
    if (!basis_json.is_array()) throw ParseError("/basis", "expected a list");
    std::vector<AlgebraBasisElement> basis;
    std::map<std::string, int> index;
    for (std::size_t k = 0; k < basis_json.size(); ++k) {
        const std::string path = "/basis/" + std::to_string(k);
        const Json& b = basis_json[k];
        if (!b.is_object()) throw ParseError(path, "expected an object");
        json_io::reject_unknown_keys(b, {"name", "degree"}, path);
        AlgebraBasisElement e{json_io::require_string(json_io::require(b, "name", path), path + "/name"),
                              json_io::require_int(json_io::require(b, "degree", path), path + "/degree")};
        if (!index.emplace(e.name, static_cast<int>(k)).second)
            throw ParseError(path + "/name", "duplicate basis element '" + e.name + "'");
        basis.push_back(std::move(e));
    }
    auto lookup = [&](const Json& j, const std::string& path) {
        const std::string key = json_io::require_string(j, path);
        const auto it = index.find(key);
        if (it == index.end()) throw ParseError(path, "unknown basis element '" + key + "'");
        return it->second;
    };
    const int unit = lookup(json_io::require(doc, "unit", ""), "/unit");

    std::vector<GradedAlgebraTable::Product> products;
    if (doc.contains("products")) {
        const Json& pj = doc["products"];
        if (!pj.is_array()) throw ParseError("/products", "expected a list");
        for (std::size_t k = 0; k < pj.size(); ++k) {
            const std::string path = "/products/" + std::to_string(k);
            const Json& p = pj[k];
            if (!p.is_object()) throw ParseError(path, "expected an object");
            json_io::reject_unknown_keys(p, {"left", "right", "result"}, path);
            GradedAlgebraTable::Product prod;
            prod.left = lookup(json_io::require(p, "left", path), path + "/left");
            prod.right = lookup(json_io::require(p, "right", path), path + "/right");
            prod.result = QVector::Constant(static_cast<Index>(basis.size()), Rational(0));
            const Json& rj = json_io::require(p, "result", path);
            if (!rj.is_array()) throw ParseError(path + "/result", "expected a list of terms");
            for (std::size_t t = 0; t < rj.size(); ++t) {
                const std::string tpath = path + "/result/" + std::to_string(t);
                json_io::reject_unknown_keys(rj[t], {"coeff", "basis"}, tpath);
                const std::string coeff = json_io::require_string(json_io::require(rj[t], "coeff", tpath), tpath + "/coeff");
                Rational c;
                try {
                    c = Rational::parse(coeff);
                } catch (const std::invalid_argument& e) {
                    throw ParseError(tpath + "/coeff", e.what());
                }
                prod.result(lookup(json_io::require(rj[t], "basis", tpath), tpath + "/basis")) += c;
            }
            products.push_back(std::move(prod));
        }
    }
    try {
        return GradedAlgebraTable(name, std::move(basis), unit, products, formal_dimension);
    } catch (const std::invalid_argument& e) {
        throw ParseError("", e.what());
    }
}

namespace {

QElement rebase(const QElement& e, const GeneratorSetPtr& target) {
    QElement out(target);
    for (const auto& [m, c] : e.terms()) {
        const auto factors = e.ambient()->factors(m);
        const auto sm = target->monomial_from_factors(factors);
        out.add(sm->monomial, sm->sign > 0 ? c : -c);
    }
    return out;
}

struct Builder {
    const GradedAlgebraTable& h;
    std::vector<std::pair<std::string, int>> decl;
    std::vector<QElement> diff;
    std::vector<std::int64_t> weights;
    std::vector<int> stage;
    std::vector<QVector> images;
    GeneratorSetPtr gens = GeneratorSet::make({});

    SullivanPresentation current(int truncation) {
        gens = GeneratorSet::make(decl);
        std::vector<QElement> d;
        d.reserve(diff.size());
        for (const auto& e : diff) d.push_back(rebase(e, gens));
        diff = d;
        return SullivanPresentation(h.name(), gens, std::move(d), std::max(truncation, 2), h.formal_dimension());
    }

    QVector image_of(const Monomial& m) const {
        QVector out = h.basis_vector(h.unit());
        for (const auto& [id, e] : gens->factors(m))
            for (int k = 0; k < e; ++k) out = h.multiply(out, images[static_cast<std::size_t>(id)]);
        return out;
    }

    QVector image_of(const QElement& e) const {
        QVector out = h.zero();
        for (const auto& [m, c] : e.terms()) out += c * image_of(m);
        return out;
    }

    // Columns: table coordinates of the images of the given elements,
    // restricted to the basis elements of degree n.
    QMatrix image_matrix(const std::vector<QElement>& elems, const std::vector<int>& rows) const {
        QMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(elems.size()));
        for (std::size_t j = 0; j < elems.size(); ++j) {
            const QVector v = image_of(elems[j]);
            for (std::size_t i = 0; i < rows.size(); ++i) m(static_cast<Index>(i), static_cast<Index>(j)) = v(rows[i]);
        }
        return m;
    }

    void add(const std::string& name, int degree, QElement d, std::int64_t weight, QVector image) {
        decl.emplace_back(name, degree);
        diff.push_back(std::move(d));
        weights.push_back(weight);
        stage.push_back(static_cast<int>(weight) - degree);
        images.push_back(std::move(image));
    }

    void step(int k) {
        const std::size_t first = decl.size();
        const auto rows = h.indices_of_degree(k);
        std::size_t n_stage0 = 0;
        std::size_t n_kill = 0;

        // Surjectivity onto H^k: only weight-k classes have nonzero image.
        if (!rows.empty()) {
            const auto before = current(k + 1);
            const auto reps = weight_piece_representatives(before, k, WeightAssignment{weights}, k);
            const QMatrix im = image_matrix(reps, rows);
            QMatrix stacked(static_cast<Index>(rows.size()), im.cols() + static_cast<Index>(rows.size()));
            stacked.leftCols(im.cols()) = im;
            stacked.rightCols(static_cast<Index>(rows.size())) =
                QMatrix::Identity(static_cast<Index>(rows.size()), static_cast<Index>(rows.size()));
            for (Index col : independent_columns(stacked)) {
                if (col < im.cols()) continue;
                const int basis_index = rows[static_cast<std::size_t>(col - im.cols())];
                add("$x" + std::to_string(n_stage0++), k, QElement(gens), k, h.basis_vector(basis_index));
            }
        }

        // Injectivity on H^{k+1}: kill every class mapping to zero.
        const auto model = current(k + 2);
        const WeightAssignment w{weights};
        std::set<std::int64_t> occurring;
        for (const auto& m : gens->monomial_basis(k + 1)) occurring.insert(w.weight(*gens, m));
        const auto rows_above = h.indices_of_degree(k + 1);
        std::vector<std::pair<QElement, std::int64_t>> killers;
        for (std::int64_t wt : occurring) {
            const auto reps = weight_piece_representatives(model, k + 1, w, wt);
            if (reps.empty()) continue;
            if (wt != k + 1 || rows_above.empty()) {
                for (const auto& r : reps) killers.emplace_back(r, wt);
                continue;
            }
            for (const auto& v : kernel_basis(image_matrix(reps, rows_above))) {
                QElement c(gens);
                for (std::size_t j = 0; j < reps.size(); ++j) c += v(static_cast<Index>(j)) * reps[j];
                killers.emplace_back(std::move(c), wt);
            }
        }
        for (auto& [c, wt] : killers) add("$y" + std::to_string(n_kill++), k, std::move(c), wt, h.zero());

        // Final names: x<deg> / y<deg>, suffixed when a degree has several.
        std::size_t ix = 0;
        std::size_t iy = 0;
        for (std::size_t g = first; g < decl.size(); ++g) {
            const bool is_x = decl[g].first[1] == 'x';
            const std::size_t count = is_x ? n_stage0 : n_kill;
            const std::size_t idx = is_x ? ++ix : ++iy;
            decl[g].first = std::string(is_x ? "x" : "y") + std::to_string(k) +
                            (count > 1 ? "_" + std::to_string(idx) : std::string());
        }
    }
};

}  // namespace

FormalModelResult build_formal_model(const GradedAlgebraTable& h, int n) {
    if (n < 2) throw std::invalid_argument("truncation degree must be >= 2, got " + std::to_string(n));
    Builder b{h, {}, {}, {}, {}, {}};
    for (int k = 2; k <= n; ++k) b.step(k);
    FormalModelResult out{b.current(n), WeightAssignment{b.weights}, b.stage, b.images};
    return out;
}

QVector apply_quasi_iso(const GradedAlgebraTable& h, const FormalModelResult& r, const QElement& e) {
    const auto& gens = *r.model.generators();
    QVector out = h.zero();
    for (const auto& [m, c] : e.terms()) {
        QVector term = h.basis_vector(h.unit());
        for (const auto& [id, k] : gens.factors(m))
            for (int i = 0; i < k; ++i) term = h.multiply(term, r.quasi_iso[static_cast<std::size_t>(id)]);
        out += c * term;
    }
    return out;
}

json_io::Json formal_model_json(const GradedAlgebraTable& h, const FormalModelResult& r) {
    Json stage = Json::object();
    Json quasi = Json::object();
    for (const auto& g : r.model.generators()->generators()) {
        stage[g.name] = r.stage[static_cast<std::size_t>(g.id)];
        Json terms = Json::array();
        const auto& v = r.quasi_iso[static_cast<std::size_t>(g.id)];
        for (Index i = 0; i < v.size(); ++i)
            if (!v(i).is_zero())
                terms.push_back(Json{{"coeff", v(i).to_string()}, {"basis", h.basis()[static_cast<std::size_t>(i)].name}});
        quasi[g.name] = std::move(terms);
    }
    return Json{{"model", json_io::presentation_to_json(r.model)},
                {"weights", weights_json(r.model, r.weights)},
                {"stage", std::move(stage)},
                {"quasi_iso", std::move(quasi)}};
}

}  // namespace rht
