#include "rht/cli.hpp"

#include "rht/cohomology.hpp"
#include "rht/families.hpp"
#include "rht/formal_model.hpp"
#include "rht/growth.hpp"
#include "rht/json_io.hpp"
#include "rht/sullivan.hpp"
#include "rht/weights.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace rht {

namespace {

using json_io::Json;
using PresentationPtr = std::shared_ptr<const SullivanPresentation>;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Domain-level negative answer: reported, exit 1.
struct Negative : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string file;
    bool json = false;
    std::optional<int> max_degree;
    std::string weights;
    std::string family;
    std::string conjugate_by;
    std::string eval;
    std::string output;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <class F>
auto parsing(const std::string& path, F&& f) {
    try {
        return f();
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::string violation_lines(const std::vector<Violation>& vs) {
    std::string out;
    for (const auto& v : vs) out += "violation: " + to_string(v) + "\n";
    return out;
}

Json violation_json(const std::vector<Violation>& vs) {
    Json out = Json::array();
    for (const auto& v : vs) out.push_back(to_string(v));
    return out;
}

PresentationPtr load_unchecked(const std::string& path) {
    const auto text = read_file(path);
    return parsing(path, [&] { return std::make_shared<const SullivanPresentation>(parse_presentation(text)); });
}

PresentationPtr load(const std::string& path) {
    auto p = load_unchecked(path);
    const auto vs = validate(*p);
    if (!vs.empty()) throw InputError(path + ": invalid presentation: " + to_string(vs.front()));
    return p;
}

std::string witness_text(const WeightSearchResult& r) {
    std::string out;
    for (const auto& l : r.witness_labels) out += (out.empty() ? "" : ", ") + l;
    return out;
}

WeightAssignment resolve_weights(const SullivanPresentation& p, const std::string& source) {
    if (source.empty() || source == "auto") {
        const auto r = find_weights(p);
        if (!r.weights) throw Negative("no positive weights for this presentation (witness rows: " + witness_text(r) + ")");
        return *r.weights;
    }
    const auto text = read_file(source);
    const auto w = parsing(source, [&] { return parse_weights(p, text); });
    const auto vs = check_weights(p, w);
    if (!vs.empty()) throw Negative(source + ": invalid weights: " + to_string(vs.front()));
    return w;
}

OneParameterFamily resolve_family(const PresentationPtr& p, const Options& o) {
    std::optional<OneParameterFamily> lambda;
    if (!o.family.empty()) {
        const auto text = read_file(o.family);
        lambda = parsing(o.family, [&] { return parse_family(p, text); });
    } else {
        lambda = diagonal_family(p, resolve_weights(*p, o.weights));
    }
    if (o.conjugate_by.empty()) return *lambda;
    const auto text = read_file(o.conjugate_by);
    try {
        const auto phi = parsing(o.conjugate_by, [&] { return parse_automorphism(p, text); });
        return conjugate(*lambda, phi);
    } catch (const std::invalid_argument& e) {
        throw Negative(o.conjugate_by + ": " + e.what());
    } catch (const std::domain_error& e) {
        throw Negative(o.conjugate_by + ": " + e.what());
    }
}

int default_max_degree(const SullivanPresentation& p) {
    return p.formal_dimension() ? *p.formal_dimension() + 2 : p.truncation_degree();
}

int max_degree(const SullivanPresentation& p, const Options& o) {
    const int m = o.max_degree.value_or(default_max_degree(p));
    if (m < 0) throw InputError("--max-degree must be nonnegative");
    return m;
}

std::string unavailable_text(const SullivanPresentation& p) {
    return "unavailable (truncation " + std::to_string(p.truncation_degree()) + " certifies degrees <= " +
           std::to_string(p.truncation_degree() - 1) + ")";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

std::string matrix_text(const LMatrix& m) {
    std::vector<std::string> rows;
    for (Index i = 0; i < m.rows(); ++i) {
        std::vector<std::string> row;
        for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(join(row, ", "));
    }
    return "[" + join(rows, "; ") + "]";
}

std::string family_text(const OneParameterFamily& lambda) {
    std::string out;
    for (const auto& g : lambda.base().generators()->generators())
        out += g.name + " |-> " + lambda.image(g.id).to_string() + "\n";
    return out;
}

std::string map_text(const AlgebraMap<Rational>& phi) {
    std::string out;
    for (const auto& g : phi.source()->generators()) out += "  " + g.name + " |-> " + phi.image(g.id).to_string() + "\n";
    return out;
}

int cmd_check(const Options& o, std::ostream& report) {
    const auto p = load_unchecked(o.file);
    const auto vs = validate(*p);
    if (o.json) {
        report << json_io::dump(Json{{"name", p->name()},
                                     {"generators", p->size()},
                                     {"truncation_degree", p->truncation_degree()},
                                     {"valid", vs.empty()},
                                     {"violations", violation_json(vs)}});
    } else if (vs.empty()) {
        report << "ok: " << p->name() << " (" << p->size() << " generators, truncation " << p->truncation_degree()
               << ")\n";
    } else {
        report << violation_lines(vs);
    }
    return vs.empty() ? kExitOk : kExitNegative;
}

int cmd_weights(const Options& o, std::ostream& report) {
    auto p = load(o.file);
    if (!o.conjugate_by.empty()) {
        const auto text = read_file(o.conjugate_by);
        const auto phi = parsing(o.conjugate_by, [&] { return parse_algebra_map(p->generators(), text); });
        try {
            p = std::make_shared<const SullivanPresentation>(transport(*p, phi));
        } catch (const std::domain_error& e) {
            throw Negative(o.conjugate_by + ": " + e.what());
        }
    }
    if (!o.weights.empty() && o.weights != "auto") {
        const auto text = read_file(o.weights);
        const auto w = parsing(o.weights, [&] { return parse_weights(*p, text); });
        const auto vs = check_weights(*p, w);
        if (o.json) {
            report << json_io::dump(
                Json{{"valid", vs.empty()}, {"weights", weights_json(*p, w)}, {"violations", violation_json(vs)}});
        } else if (vs.empty()) {
            report << "valid: " << format_weights(*p, w) << "\n";
        } else {
            report << "invalid\n" << violation_lines(vs);
        }
        return vs.empty() ? kExitOk : kExitNegative;
    }
    const auto r = find_weights(*p);
    if (o.json) {
        report << json_io::dump(weight_report_json(*p, r));
    } else if (r.weights) {
        report << "feasible: " << format_weights(*p, *r.weights) << "\n";
    } else {
        report << "infeasible: no positive weights for this presentation\n";
        for (const auto& l : r.witness_labels) report << "witness: " << l << "\n";
    }
    return r.feasible() ? kExitOk : kExitNegative;
}

int cmd_cohomology(const Options& o, std::ostream& report) {
    const auto p = load(o.file);
    const int m = max_degree(*p, o);
    const int computed = std::min(m, p->truncation_degree() - 1);
    auto h = cohomology(*p, computed);
    if (!o.weights.empty()) h = weight_decomposition(*p, std::move(h), resolve_weights(*p, o.weights));

    Json betti = Json::object();
    Json weights = Json::object();
    Json basis = Json::object();
    std::ostringstream text;
    for (int n = 0; n <= m; ++n) {
        const std::string key = std::to_string(n);
        if (n > computed) {
            betti[key] = "unavailable";
            text << "H^" << n << ": " << unavailable_text(*p) << "\n";
            continue;
        }
        betti[key] = h.betti(n);
        std::vector<std::string> reps;
        for (const auto& r : h.basis(n)) reps.push_back(r.to_string());
        basis[key] = reps;
        text << "H^" << n << ": " << h.betti(n);
        if (h.weights) {
            Json wj = Json::object();
            std::vector<std::string> parts;
            for (const auto& piece : h.degrees[static_cast<std::size_t>(n)].weight_pieces) {
                wj[std::to_string(piece.weight)] = piece.representatives.size();
                parts.push_back("w" + std::to_string(piece.weight) + ":" +
                                std::to_string(piece.representatives.size()));
            }
            weights[key] = std::move(wj);
            if (!parts.empty()) text << "  weights " << join(parts, " ");
        }
        if (!reps.empty()) text << "  basis " << join(reps, ", ");
        text << "\n";
    }
    if (o.json) {
        Json doc{{"name", p->name()}, {"betti", std::move(betti)}, {"basis", std::move(basis)}};
        if (h.weights) doc["weights"] = std::move(weights);
        report << json_io::dump(doc);
    } else {
        report << text.str();
    }
    return kExitOk;
}

int cmd_family(const Options& o, std::ostream& report) {
    const auto p = load(o.file);
    const auto lambda = resolve_family(p, o);
    const auto vs = verify_family(lambda);
    std::optional<Rational> t0;
    if (!o.eval.empty()) {
        try {
            t0 = Rational::parse(o.eval);
        } catch (const std::invalid_argument& e) {
            throw InputError("--eval: " + std::string(e.what()));
        }
    }
    std::optional<EvaluatedFamily> ev;
    if (t0) {
        try {
            ev = evaluate(lambda, *t0);
        } catch (const std::domain_error& e) {
            throw Negative(std::string("--eval: ") + e.what());
        }
    }
    if (o.json) {
        Json doc{{"family", family_json(lambda)}, {"verified", vs.empty()}, {"violations", violation_json(vs)}};
        if (ev)
            doc["evaluation"] = Json{{"t", t0->to_string()}, {"map", map_json(ev->map)}, {"invertible", ev->invertible}};
        report << json_io::dump(doc);
    } else {
        report << family_text(lambda);
        report << (vs.empty() ? "verified: chain map, identity at t = 1, group law\n" : violation_lines(vs));
        if (ev) {
            report << "at t = " << t0->to_string() << (ev->invertible ? "" : " (not invertible)") << ":\n";
            report << map_text(ev->map);
        }
    }
    return vs.empty() ? kExitOk : kExitNegative;
}

int cmd_act(const Options& o, std::ostream& report) {
    const auto p = load(o.file);
    const auto lambda = resolve_family(p, o);
    const auto vs = verify_family(lambda);
    if (!vs.empty()) throw Negative("family fails verification: " + to_string(vs.front()));
    const int m = max_degree(*p, o);
    const int computed = std::min(m, p->truncation_degree() - 1);
    auto h = cohomology(*p, computed);
    if (o.family.empty() || !o.weights.empty()) h = weight_decomposition(*p, std::move(h), resolve_weights(*p, o.weights));

    Json action = Json::object();
    Json eigen = Json::object();
    Json unavailable = Json::array();
    std::ostringstream text;
    for (int n = 0; n <= m; ++n) {
        const std::string key = std::to_string(n);
        if (n > computed) {
            unavailable.push_back(n);
            text << "H^" << n << ": " << unavailable_text(*p) << "\n";
            continue;
        }
        const LMatrix a = induced_action_unchecked(h, lambda, n);
        action[key] = laurent_matrix_json(a);
        if (a.rows() == 0) {
            eigen[key] = Json::object();
            text << "H^" << n << ": 0\n";
            continue;
        }
        const auto dec = eigen_decompose(a);
        Json ej = Json::object();
        std::vector<std::string> parts;
        for (const auto& [w, mult] : dec.multiplicities) {
            ej[std::to_string(w)] = mult;
            parts.push_back("t^" + std::to_string(w) + " x" + std::to_string(mult));
        }
        eigen[key] = std::move(ej);
        text << "H^" << n << ": " << matrix_text(a) << "  eigenvalues " << join(parts, ", ") << "\n";
    }
    if (o.json) {
        report << json_io::dump(Json{{"name", p->name()},
                                     {"action", std::move(action)},
                                     {"eigenvalues", std::move(eigen)},
                                     {"unavailable", std::move(unavailable)}});
    } else {
        report << text.str();
    }
    return kExitOk;
}

int cmd_formal_model(const Options& o, std::ostream& report) {
    const auto text = read_file(o.file);
    const auto table = parsing(o.file, [&] { return parse_algebra_table(text); });
    const int n = o.max_degree.value_or(table.formal_dimension() ? *table.formal_dimension() + 2 : table.max_degree() + 2);
    if (n < 2) throw InputError("--max-degree must be >= 2 for a formal model");
    const auto r = build_formal_model(table, n);
    if (o.json) {
        report << json_io::dump(formal_model_json(table, r));
        return kExitOk;
    }
    const auto& gens = *r.model.generators();
    report << "model: " << r.model.name() << " (" << gens.size() << " generators, truncation " << n << ")\n";
    for (const auto& g : gens.generators()) {
        report << g.name << "  degree " << g.degree << "  weight " << r.weights[g.id] << "  stage "
               << r.stage[static_cast<std::size_t>(g.id)] << "  d = " << r.model.d(g.id).to_string() << "  -> "
               << table.format(r.quasi_iso[static_cast<std::size_t>(g.id)]) << "\n";
    }
    return kExitOk;
}

int cmd_growth(const Options& o, std::ostream& report) {
    const auto p = load(o.file);
    const auto w = resolve_weights(*p, o.weights);
    GrowthReport g;
    try {
        g = growth_report(*p, w);
    } catch (const std::invalid_argument& e) {
        throw InputError(o.file + ": " + e.what());
    } catch (const std::domain_error& e) {
        throw Negative(e.what());
    }
    if (o.json) {
        report << json_io::dump(growth_json(g));
        return kExitOk;
    }
    report << "r = " << g.growth_exponent.to_string() << "\n";
    report << "dil = " << g.dil_exponent.to_string() << "\n";
    for (const auto& gr : g.ratios)
        report << "  " << gr.name << ": degree " << gr.degree << ", weight " << gr.weight << ", degree/weight "
               << gr.degree_over_weight.to_string() << "\n";
    report << "note: " << g.note << "\n";
    return kExitOk;
}

int cmd_flex(const Options& o, std::ostream& report) {
    const auto p = load(o.file);
    const auto lambda = resolve_family(p, o);
    FlexibilityReport f;
    try {
        f = flexibility_report(*p, lambda);
    } catch (const std::out_of_range& e) {
        throw InputError(o.file + ": " + e.what());
    } catch (const std::domain_error& e) {
        throw Negative(e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(o.file + ": " + e.what());
    }
    if (o.json) {
        report << json_io::dump(flexibility_json(f));
        return kExitOk;
    }
    report << "H^" << f.formal_dimension << ": b = " << f.top_betti << ", action t^" << f.top_weight << "\n";
    report << "w_top = " << f.top_weight << "\n";
    report << f.conclusion << "\n";
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rational homotopy toolkit: Sullivan models, positive weights, families, cohomology", "rht"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub, const std::string& what) {
        sub->add_option("file", o.file, what)->required();
        sub->add_flag("--json", o.json, "Emit a machine-readable JSON report");
        sub->add_option("--output", o.output, "Write the report to FILE instead of stdout");
    };
    auto add_weights = [&](CLI::App* sub) {
        sub->add_option("--weights", o.weights, "Weight assignment: 'auto' or a weights file");
    };
    auto add_family = [&](CLI::App* sub) {
        add_weights(sub);
        sub->add_option("--family", o.family, "Family file (default: diagonal family of the weights)");
        sub->add_option("--conjugate-by", o.conjugate_by, "Automorphism file to conjugate the family by");
    };
    auto add_max_degree = [&](CLI::App* sub) {
        sub->add_option("--max-degree", o.max_degree, "Highest degree to report");
    };

    struct Command {
        CLI::App* app;
        int (*run)(const Options&, std::ostream&);
    };
    std::vector<Command> commands;

    auto* check = app.add_subcommand("check", "Validate a presentation");
    add_common(check, "Presentation file");
    commands.push_back({check, cmd_check});

    auto* weights = app.add_subcommand("weights", "Find or check positive weights");
    add_common(weights, "Presentation file");
    add_weights(weights);
    weights->add_option("--conjugate-by", o.conjugate_by, "Change of generators applied before the search");
    commands.push_back({weights, cmd_weights});

    auto* coh = app.add_subcommand("cohomology", "Betti numbers, bases and weight decomposition");
    add_common(coh, "Presentation file");
    add_max_degree(coh);
    add_weights(coh);
    commands.push_back({coh, cmd_cohomology});

    auto* family = app.add_subcommand("family", "Build, conjugate, verify and evaluate a one-parameter family");
    add_common(family, "Presentation file");
    add_family(family);
    family->add_option("--eval", o.eval, "Substitute t = T (a rational)");
    commands.push_back({family, cmd_family});

    auto* act = app.add_subcommand("act", "Induced action of a family on cohomology");
    add_common(act, "Presentation file");
    add_family(act);
    add_max_degree(act);
    commands.push_back({act, cmd_act});

    auto* formal = app.add_subcommand("formal-model", "Bigraded minimal model of a cohomology algebra");
    add_common(formal, "Graded algebra table file");
    formal->add_option("--max-degree", o.max_degree, "Truncation degree N of the model");
    commands.push_back({formal, cmd_formal_model});

    auto* growth = app.add_subcommand("growth", "Growth and Dil exponents");
    add_common(growth, "Presentation file");
    add_weights(growth);
    commands.push_back({growth, cmd_growth});

    auto* flex = app.add_subcommand("flex", "Rational flexibility report for the top class");
    add_common(flex, "Presentation file");
    add_family(flex);
    commands.push_back({flex, cmd_flex});

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitInputError;
    }

    for (const auto& c : commands) {
        if (!c.app->parsed()) continue;
        std::ostringstream report;
        int code = kExitOk;
        try {
            code = c.run(o, report);
        } catch (const InputError& e) {
            err << "rht: error: " << e.what() << "\n";
            return kExitInputError;
        } catch (const Negative& e) {
            err << "rht: " << e.what() << "\n";
            return kExitNegative;
        } catch (const std::exception& e) {
            err << "rht: error: " << e.what() << "\n";
            return kExitInputError;
        }
        if (o.output.empty()) {
            out << report.str();
        } else {
            std::ofstream f(o.output, std::ios::binary);
            if (!f) {
                err << "rht: error: cannot write '" << o.output << "'\n";
                return kExitInputError;
            }
            f << report.str();
        }
        return code;
    }
    return kExitInputError;
}

}  // namespace rht
