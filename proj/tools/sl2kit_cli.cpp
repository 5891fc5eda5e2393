// sl2kit: command-line front end. Every subcommand builds a JSON request,
// hands it to sl2kit::dispatch, and prints the JSON response. Flag values
// are JSON; a value that does not parse as JSON is taken as a string, so
// `--x 9/2` and `--x '"9/2"'` mean the same thing.
//
// Exit codes: 0 ok, 1 usage error, 2 domain error, 3 check failed.

#include "sl2kit/dispatch.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <iterator>
#include <map>
#include <string>

namespace {

using nlohmann::json;

json flag_value(const std::string& text) {
    json parsed = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (parsed.is_discarded()) return text;
    return parsed;
}

struct Flag {
    const char* name;
    const char* help;
    bool required;
};

// Flags per subcommand; the flag --foo-bar fills the request key foo_bar.
const std::map<std::string, std::pair<const char*, std::vector<Flag>>>& schema() {
    static const std::map<std::string, std::pair<const char*, std::vector<Flag>>> s{
        {"valuate",
         {"p-adic valuation, optionally extended to Q(γ) -> {value: int | \"inf\"}",
          {{"p", "prime", true}, {"minpoly", "[c0, ..., 1]", false}, {"x", "element", true}}}},
        {"tree-dist",
         {"tree distance between h·u and g·v (defaults: v0, identity) -> {distance}",
          {{"p", "prime", true},
           {"minpoly", "[c0, ..., 1]", false},
           {"g", "matrix applied to v", false},
           {"h", "matrix applied to u", false},
           {"u", "vertex {n, b}", false},
           {"v", "vertex {n, b}", false}}}},
        {"tree-ball",
         {"all vertices within a radius -> {count, expected, vertices}",
          {{"p", "prime", true},
           {"minpoly", "[c0, ..., 1]", false},
           {"radius", "nonnegative integer", true},
           {"center", "vertex {n, b}", false}}}},
        {"tree-act",
         {"g·vertex -> {vertex}",
          {{"p", "prime", true},
           {"minpoly", "[c0, ..., 1]", false},
           {"g", "matrix", true},
           {"vertex", "vertex {n, b} (default v0)", false}}}},
        {"hyp-dist",
         {"hyperbolic distance d(p1, g·p2) -> {distance}",
          {{"p1", "point {z: [re, im], t}", true},
           {"p2", "point {z: [re, im], t}", true},
           {"g", "float matrix with [re, im] entries", false}}}},
        {"displacement",
         {"displacement profile of g on trees x H -> {trees, hyp, ring}",
          {{"group", "{minpoly?, generators, root_index?}", false},
           {"minpoly", "[c0, ..., 1] (when no group)", false},
           {"g", "matrix", true}}}},
        {"enumerate",
         {"all g in SL(2, Z[1/s]) with every displacement < C -> {count, elements}",
          {{"group", "{generators}", true}, {"C", "positive bound", true}, {"budget", "candidate cap", false}}}},
        {"check-proper",
         {"word BFS contained in the exhaustive enumeration -> {contained, certificate}",
          {{"group", "{generators}", true},
           {"C", "positive bound", true},
           {"max-len", "word length", true},
           {"budget", "candidate cap", false}}}},
        {"embed",
         {"trace-form representation into GL(4) -> {basis, gram, alpha_tables, checks}",
          {{"group", "{minpoly?, generators}", true},
           {"samples", "sampled words (default 100)", false},
           {"ball", "word-ball radius for the basis search (default 3)", false},
           {"seed", "sampling seed (default 1)", false}}}},
        {"check-integral",
         {"is tr(g) an algebraic integer -> {integral, trace, trace_minpoly}",
          {{"minpoly", "[c0, ..., 1]", false}, {"g", "matrix", true}}}},
        {"classify",
         {"conjugate a 2-dimensional subalgebra of sl(2) to upper triangular -> {conjugator, x1, x2}",
          {{"minpoly", "[c0, ..., 1]", false}, {"basis", "[matrix, matrix]", true}}}},
        {"normalizer",
         {"does g normalize the diagonal torus / upper unipotents -> {normalizes}",
          {{"minpoly", "[c0, ..., 1]", false}, {"which", "torus | unipotent", true}, {"g", "matrix", true}}}},
        {"factor-maximal",
         {"write target as H-elements and one g^-1 -> {word, verified}",
          {{"minpoly", "[c0, ..., 1]", false}, {"g", "matrix with g21 != 0", true}, {"target", "matrix", true}}}},
    };
    return s;
}

std::string request_key(const char* flag) {
    std::string key = flag;
    for (auto& c : key) {
        if (c == '-') c = '_';
    }
    return key;
}

int emit(const sl2kit::Response& resp) {
    std::cout << resp.to_json().dump(2) << "\n";
    return static_cast<int>(resp.exit_class);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sl2kit: exact lattice, tree, hyperbolic and sl(2) computations"};
    app.require_subcommand(1);
    app.footer("Set SL2KIT_ENUM_BUDGET to change the enumeration candidate cap (default 10000000).");

    std::map<std::string, std::map<std::string, std::string>> values;
    std::map<std::string, CLI::App*> subs;
    for (const auto& [name, entry] : schema()) {
        CLI::App* sub = app.add_subcommand(name, entry.first);
        sub->set_help_flag("--help", "print this help message and exit");  // --h is a matrix flag
        auto& slots = values[name];
        for (const auto& flag : entry.second) {
            auto* opt = sub->add_option(std::string("--") + flag.name, slots[flag.name], flag.help);
            if (flag.required) opt->required();
        }
        subs[name] = sub;
    }

    std::string request_text;
    CLI::App* run = app.add_subcommand("run", "dispatch a raw request {\"command\": ..., ...} (stdin if omitted)");
    run->add_option("--request", request_text, "request JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        sl2kit::Response r;
        r.ok = false;
        r.exit_class = sl2kit::ExitClass::UsageError;
        r.error = {{"code", "UsageError"}, {"class", "UsageError"}, {"message", e.what()}};
        std::cerr << app.help() << "\n";
        return emit(r);
    }

    json request;
    if (run->parsed()) {
        if (request_text.empty()) {
            request_text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
        }
        request = json::parse(request_text, nullptr, false);
        if (request.is_discarded()) {
            sl2kit::Response r;
            r.ok = false;
            r.exit_class = sl2kit::ExitClass::UsageError;
            r.error = {{"code", "UsageError"}, {"class", "UsageError"}, {"message", "request is not valid JSON"}};
            return emit(r);
        }
        return emit(sl2kit::dispatch(request));
    }

    for (const auto& [name, sub] : subs) {
        if (!sub->parsed()) continue;
        request["command"] = name;
        for (const auto& flag : schema().at(name).second) {
            if (sub->count(std::string("--") + flag.name) == 0) continue;
            request[request_key(flag.name)] = flag_value(values[name][flag.name]);
        }
        // `which` is a bare word
        if (request.contains("which") && !request["which"].is_string()) request["which"] = request["which"].dump();
    }
    return emit(sl2kit::dispatch(request));
}
