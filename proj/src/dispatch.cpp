#include "sl2kit/dispatch.hpp"

#include "sl2kit/json_io.hpp"
#include "sl2kit/proper_action.hpp"
#include "sl2kit/sl2_classify.hpp"
#include "sl2kit/trace_embed.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

namespace sl2kit {

using nlohmann::json;

ExitClass exit_class_of(ErrorCode code) {
    switch (code) {
        case ErrorCode::Usage: return ExitClass::UsageError;
        case ErrorCode::CheckFailed: return ExitClass::CheckFailed;
        default: return ExitClass::DomainError;
    }
}

json Response::to_json() const {
    json out = {{"status", ok ? "ok" : "error"}};
    if (ok) {
        out["result"] = result;
    } else {
        out["error"] = error;
    }
    out["diagnostics"] = diagnostics;
    return out;
}

namespace {

const char* class_name(ExitClass c) {
    switch (c) {
        case ExitClass::Ok: return "Ok";
        case ExitClass::UsageError: return "UsageError";
        case ExitClass::DomainError: return "DomainError";
        case ExitClass::CheckFailed: return "CheckFailed";
    }
    return "Unknown";
}

const json& require(const json& req, const char* key) {
    if (!req.contains(key)) throw Error(ErrorCode::Usage, std::string("missing field '") + key + "'");
    return req.at(key);
}

const json& optional(const json& req, const char* key) {
    static const json null_value;
    return req.contains(key) ? req.at(key) : null_value;
}

std::int64_t require_int(const json& req, const char* key) {
    const json& v = require(req, key);
    if (!v.is_number_integer()) throw Error(ErrorCode::Usage, std::string("field '") + key + "' must be an integer");
    return v.get<std::int64_t>();
}

double require_number(const json& req, const char* key) {
    const json& v = require(req, key);
    if (!v.is_number()) throw Error(ErrorCode::Usage, std::string("field '") + key + "' must be a number");
    return v.get<double>();
}

BruhatTitsTree tree_for(const json& req) {
    const auto p = require_int(req, "p");
    if (auto f = io::parse_field(optional(req, "minpoly"))) return BruhatTitsTree(ExtendedValuation::extend(p, *f));
    return BruhatTitsTree::over_rationals(p);
}

// Group from {"group": {...}} or from top-level "minpoly"/"generators".
MarkedGroup group_for(const json& req, const std::vector<Mat2>& extra = {}) {
    const json& g = req.contains("group") ? req.at("group") : req;
    const auto field = io::parse_field(optional(g, "minpoly"));
    const NumberField f = field.value_or(NumberField::rationals());
    std::vector<Mat2> gens;
    if (g.contains("generators")) {
        if (!g.at("generators").is_array()) throw Error(ErrorCode::Usage, "generators must be an array of matrices");
        for (const auto& m : g.at("generators")) gens.push_back(io::parse_mat2(m, f));
    }
    for (const auto& m : extra) gens.push_back(m);
    const int root_index = g.contains("root_index") ? g.at("root_index").get<int>() : 0;
    return MarkedGroup(std::move(gens), field, root_index);
}

json profile_json(const DisplacementProfile& prof, const MarkedGroup& group) {
    json trees = json::array();
    for (std::size_t k = 0; k < prof.tree_displacements.size(); ++k) {
        trees.push_back({{"p", group.ring().primes[k]}, {"distance", prof.tree_displacements[k]}});
    }
    return {{"trees", trees}, {"hyp", io::round12(prof.hyp_displacement)}};
}

json ring_json(const RingData& ring) {
    return {{"s", ring.s.get_str()}, {"primes", ring.primes}};
}

// --- commands -------------------------------------------------------------

json cmd_valuate(const json& req, Response&) {
    const auto p = require_int(req, "p");
    if (auto field = io::parse_field(optional(req, "minpoly"))) {
        const auto v = ExtendedValuation::extend(p, *field);
        const auto x = io::parse_element(require(req, "x"), *field).in_field(*field);
        const auto value = v(x);
        return {{"value", value.is_finite() ? json(value.value()) : json("inf")}};
    }
    const PAdicValuation v(p);
    const auto x = io::parse_element(require(req, "x"), NumberField::rationals());
    const auto value = v(x.rational_value());
    return {{"value", value.is_finite() ? json(value.value()) : json("inf")}};
}

json cmd_tree_dist(const json& req, Response&) {
    const auto tree = tree_for(req);
    const NumberField f = tree.field();
    TreeVertex u = tree.base_vertex(), v = tree.base_vertex();
    if (req.contains("u")) u = io::parse_vertex(req.at("u"), f);
    if (req.contains("v")) v = io::parse_vertex(req.at("v"), f);
    if (req.contains("h")) u = tree.act(io::parse_mat2(req.at("h"), f), u);
    if (req.contains("g")) v = tree.act(io::parse_mat2(req.at("g"), f), v);
    return {{"distance", tree.distance(u, v)}, {"u", io::to_json(u)}, {"v", io::to_json(v)}};
}

json cmd_tree_ball(const json& req, Response&) {
    const auto tree = tree_for(req);
    const auto radius = require_int(req, "radius");
    if (radius < 0) throw Error(ErrorCode::Usage, "radius must be nonnegative");
    const TreeVertex center = req.contains("center") ? io::parse_vertex(req.at("center"), tree.field()) : tree.base_vertex();
    const auto ball = tree.ball(center, radius);
    json vertices = json::array();
    for (const auto& v : ball) vertices.push_back(io::to_json(v));
    return {{"count", ball.size()},
            {"expected", ball_size(tree.residue_field_size(), radius)},
            {"vertices", vertices}};
}

json cmd_tree_act(const json& req, Response&) {
    const auto tree = tree_for(req);
    const TreeVertex v = req.contains("vertex") ? io::parse_vertex(req.at("vertex"), tree.field()) : tree.base_vertex();
    const Mat2 g = io::parse_mat2(require(req, "g"), tree.field());
    return {{"vertex", io::to_json(tree.act(g, v))}};
}

json cmd_hyp_dist(const json& req, Response&) {
    const HPoint p = io::parse_point(require(req, "p1"));
    HPoint q = io::parse_point(require(req, "p2"));
    if (req.contains("g")) q = mobius_act(io::parse_complex_mat2(req.at("g")), q);
    if (!(p.t > 0) || !(q.t > 0)) throw Error(ErrorCode::DegenerateInput, "point height must be positive");
    return {{"distance", io::round12(hyp_distance(p, q))}, {"p2", io::to_json(q)}};
}

json cmd_displacement(const json& req, Response&) {
    const json& g = req.contains("group") ? req.at("group") : req;
    const NumberField f = io::field_or_rationals(optional(g, "minpoly"));
    const Mat2 m = io::parse_mat2(require(req, "g"), f);
    if (!m.determinant().is_one()) throw Error(ErrorCode::DetNotOne, "g must have determinant 1");
    const auto group = group_for(req, req.contains("group") ? std::vector<Mat2>{} : std::vector<Mat2>{m});
    const auto prof = displacement(m, group);
    json out = profile_json(prof, group);
    out["ring"] = ring_json(group.ring());
    return out;
}

json cmd_enumerate(const json& req, Response&) {
    const auto group = group_for(req);
    const double bound = require_number(req, "C");
    const std::uint64_t budget =
        req.contains("budget") ? req.at("budget").get<std::uint64_t>() : default_enumeration_budget();
    const auto res = enumerate_bounded(group, bound, budget);
    json elements = json::array();
    for (const auto& g : res.elements) elements.push_back(io::to_json(g));
    return {{"count", res.elements.size()},
            {"complete", res.complete},
            {"C", bound},
            {"candidates", res.candidates_examined},
            {"ring", ring_json(group.ring())},
            {"elements", elements}};
}

json cmd_check_proper(const json& req, Response& resp) {
    const auto group = group_for(req);
    const double bound = require_number(req, "C");
    const auto max_len = require_int(req, "max_len");
    const std::uint64_t budget =
        req.contains("budget") ? req.at("budget").get<std::uint64_t>() : default_enumeration_budget();
    const auto report = properness_check(group, bound, static_cast<int>(max_len), budget);
    json violations = json::array();
    for (const auto& g : report.violations) violations.push_back(io::to_json(g));
    if (!report.contained) {
        resp.exit_class = ExitClass::CheckFailed;
        resp.diagnostics.push_back("word elements missing from the exhaustive enumeration");
    }
    return {{"contained", report.contained},
            {"word_count", report.word_count},
            {"enumerated_count", report.enumerated_count},
            {"certificate", report.certificate},
            {"violations", violations}};
}

json cmd_embed(const json& req, Response& resp) {
    const auto group = group_for(req);
    const int radius = req.contains("ball") ? req.at("ball").get<int>() : 3;
    const int samples = req.contains("samples") ? req.at("samples").get<int>() : 100;
    const std::uint64_t seed = req.contains("seed") ? req.at("seed").get<std::uint64_t>() : 1;

    const auto letters = group.symmetric_generators();
    const Rep4 rep(select_basis(word_ball(letters, radius)));

    std::vector<Mat2> sample_words;
    if (!letters.empty()) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> length(0, 2 * radius);
        std::uniform_int_distribution<std::size_t> letter(0, letters.size() - 1);
        for (int i = 0; i < samples; ++i) {
            Mat2 w = Mat2::identity(group.field());
            for (int k = length(rng); k > 0; --k) w = w * letters[letter(rng)];
            sample_words.push_back(std::move(w));
        }
    }
    const auto report = verify_embedding(rep, sample_words);

    json basis = json::array();
    for (const auto& b : rep.basis().elements) basis.push_back(io::to_json(b));
    json tables = json::array();
    for (const auto& g : group.generators()) {
        const Mat4 a = rep(g);
        const bool integral = std::all_of(a.entries().begin(), a.entries().end(),
                                          [](const FieldElement& x) { return is_algebraic_integer(x); });
        tables.push_back({{"g", io::to_json(g)}, {"alpha", io::to_json(a)}, {"integral", integral}});
    }
    if (!report.passed()) {
        resp.exit_class = ExitClass::CheckFailed;
        resp.diagnostics.push_back("embedding checks failed");
    }
    if (report.non_integral > 0) {
        resp.diagnostics.push_back(std::to_string(report.non_integral) +
                                   " sampled images have non-integral entries");
    }
    return {{"basis", basis},
            {"gram", io::to_json(rep.basis().gram)},
            {"alpha_tables", tables},
            {"checks",
             {{"samples", sample_words.size()},
              {"pairs_checked", report.pairs_checked},
              {"homomorphism_failures", report.homomorphism_failures},
              {"faithfulness_failures", report.faithfulness_failures},
              {"determinant_failures", report.determinant_failures},
              {"char_poly_failures", report.char_poly_failures},
              {"non_integral", report.non_integral},
              {"passed", report.passed()}}}};
}

json cmd_check_integral(const json& req, Response&) {
    const NumberField f = io::field_or_rationals(optional(req, "minpoly"));
    const Mat2 g = io::parse_mat2(require(req, "g"), f);
    const bool integral = integral_characteristic(g);
    return {{"integral", integral},
            {"trace", io::to_json(g.trace())},
            {"trace_minpoly", io::to_json(minimal_polynomial(g.trace()))}};
}

json relation_json(const CommutativeError& e) {
    if (!e.relation()) return nullptr;
    return {io::to_json((*e.relation())[0]), io::to_json((*e.relation())[1])};
}

json cmd_classify(const json& req, Response&) {
    const NumberField f = io::field_or_rationals(optional(req, "minpoly"));
    const json& basis = require(req, "basis");
    if (!basis.is_array() || basis.size() != 2) throw Error(ErrorCode::Usage, "basis must hold two matrices");
    const Subalgebra2 s{LieElement(io::parse_mat2(basis[0], f)), LieElement(io::parse_mat2(basis[1], f))};
    const auto out = classify_2dim(s);
    return {{"kind", out.kind},
            {"conjugator", io::to_json(out.conjugator)},
            {"x1", io::to_json(out.normalized.x1.matrix())},
            {"x2", io::to_json(out.normalized.x2.matrix())},
            {"conjugated_basis", {io::to_json(out.conjugated_basis[0]), io::to_json(out.conjugated_basis[1])}}};
}

json cmd_normalizer(const json& req, Response&) {
    const NumberField f = io::field_or_rationals(optional(req, "minpoly"));
    const Mat2 g = io::parse_mat2(require(req, "g"), f);
    if (!g.determinant().is_one()) throw Error(ErrorCode::DetNotOne, "g must have determinant 1");
    const json& which = require(req, "which");
    if (which == "torus") return {{"which", "torus"}, {"normalizes", normalizes_torus(g)}};
    if (which == "unipotent") return {{"which", "unipotent"}, {"normalizes", normalizes_unipotent(g)}};
    throw Error(ErrorCode::Usage, "which must be 'torus' or 'unipotent'");
}

json cmd_factor_maximal(const json& req, Response&) {
    const NumberField f = io::field_or_rationals(optional(req, "minpoly"));
    const Mat2 g = io::parse_mat2(require(req, "g"), f);
    const Mat2 target = io::parse_mat2(require(req, "target"), f);
    const auto word = maximality_factor(g, target);
    json factors = json::array();
    for (const auto& w : word) {
        const char* kind = w.kind == WordFactor::Kind::H ? "H" : (w.kind == WordFactor::Kind::G ? "g" : "g^-1");
        factors.push_back({{"kind", kind}, {"matrix", io::to_json(w.matrix)}});
    }
    return {{"word", factors}, {"verified", multiply_word(word) == target}};
}

using Handler = std::function<json(const json&, Response&)>;

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> table{
        {"valuate", cmd_valuate},
        {"tree-dist", cmd_tree_dist},
        {"tree-ball", cmd_tree_ball},
        {"tree-act", cmd_tree_act},
        {"hyp-dist", cmd_hyp_dist},
        {"displacement", cmd_displacement},
        {"enumerate", cmd_enumerate},
        {"check-proper", cmd_check_proper},
        {"embed", cmd_embed},
        {"check-integral", cmd_check_integral},
        {"classify", cmd_classify},
        {"normalizer", cmd_normalizer},
        {"factor-maximal", cmd_factor_maximal},
    };
    return table;
}

Response error_response(ErrorCode code, const std::string& message, json witness = nullptr) {
    Response r;
    r.ok = false;
    r.exit_class = exit_class_of(code);
    r.error = {{"code", std::string(error_code_name(code))},
               {"class", class_name(r.exit_class)},
               {"message", message}};
    if (!witness.is_null()) r.error["witness"] = std::move(witness);
    return r;
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, _] : handlers()) out.push_back(name);
        return out;
    }();
    return names;
}

Response dispatch(const json& request) {
    try {
        if (!request.is_object()) throw Error(ErrorCode::Usage, "request must be a JSON object");
        const json& command = require(request, "command");
        if (!command.is_string()) throw Error(ErrorCode::Usage, "command must be a string");
        const auto it = handlers().find(command.get<std::string>());
        if (it == handlers().end()) throw Error(ErrorCode::Usage, "unknown command '" + command.get<std::string>() + "'");
        Response resp;
        resp.result = it->second(request, resp);
        return resp;
    } catch (const NotAValuationError& e) {
        const PAdicValuation base(e.prime());
        auto value = [&](const FieldElement& z) {
            const auto v = min_rule(base, z);
            return v.is_finite() ? json(v.value()) : json("inf");
        };
        return error_response(e.code(), e.what(),
                              {{"x", io::to_json(e.x())},
                               {"y", io::to_json(e.y())},
                               {"nu_x", value(e.x())},
                               {"nu_y", value(e.y())},
                               {"nu_xy", value(e.x() * e.y())}});
    } catch (const ReducibleError& e) {
        return error_response(e.code(), e.what(), {{"factor", io::to_json(e.factor())}});
    } catch (const NotASubalgebraError& e) {
        return error_response(e.code(), e.what(), {{"bracket", io::to_json(e.bracket().matrix())}});
    } catch (const CommutativeError& e) {
        return error_response(e.code(), e.what(), {{"relation", relation_json(e)}});
    } catch (const Error& e) {
        return error_response(e.code(), e.what());
    } catch (const nlohmann::json::exception& e) {
        return error_response(ErrorCode::Usage, e.what());
    }
}

}  // namespace sl2kit
