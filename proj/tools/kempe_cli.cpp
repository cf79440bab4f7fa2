#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "kempe/colouring.hpp"
#include "kempe/error.hpp"
#include "kempe/families.hpp"
#include "kempe/frozen.hpp"
#include "kempe/hereditary.hpp"
#include "kempe/io.hpp"
#include "kempe/kempe.hpp"
#include "kempe/verify.hpp"

namespace {

using kempe::io::json;

// Exit codes: verdict true / false, bad usage or input, cap reached.
constexpr int exit_holds = 0;
constexpr int exit_fails = 1;
constexpr int exit_input = 2;
constexpr int exit_resource = 3;

std::string slurp(const std::string& path)
{
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path);
    if (!in) {
        throw kempe::InputError("cannot read " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

kempe::io::GraphFile load_graph(const std::string& path)
{
    return kempe::io::graph_file_from_json(kempe::io::parse(slurp(path)));
}

// "@name" refers to a colouring stored in the graph file; anything else is a
// path to a {"k", "colours"} file.
kempe::Colouring load_colouring(const kempe::io::GraphFile& file, const std::string& ref)
{
    if (!ref.empty() && ref.front() == '@') {
        const auto it = file.colourings.find(ref.substr(1));
        if (it == file.colourings.end()) {
            throw kempe::InputError("graph file has no colouring named " + ref.substr(1));
        }
        return it->second;
    }
    kempe::Colouring c = kempe::io::colouring_from_json(kempe::io::parse(slurp(ref)));
    if (c.size() != static_cast<std::size_t>(file.graph.order())) {
        throw kempe::InputError("colouring " + ref + " does not match the graph order");
    }
    return c;
}

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out) {
        throw kempe::InputError("cannot write " + path);
    }
    out << text;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int verdict(bool holds) { return holds ? exit_holds : exit_fails; }

struct Args {
    std::string family;
    std::optional<int> param;
    std::string output;
    std::string dot;
    std::string colourings_dir;

    std::string property;
    std::string graph;
    std::string colouring;
    std::string colouring2;
    int k = 0;
    std::uint64_t cap = kempe::default_colouring_cap;
    bool with_chi = false;
    std::string forbidden;
    std::optional<int> x;
    std::optional<int> y;
    bool search = false;
    int census_n = 5;
    bool fast = false;
    std::uint64_t seed = kempe::verify::Options{}.seed;
    std::optional<int> k_from;
    std::optional<int> k_to;
};

int run_gen(const Args& a)
{
    const kempe::FamilyInstance family = kempe::make_family(a.family, a.param);
    const json doc = kempe::io::graph_file_to_json(kempe::io::family_to_graph_file(family));
    if (a.output.empty()) {
        emit(doc);
    } else {
        write_text(a.output, doc.dump(2) + "\n");
    }
    if (!a.dot.empty()) {
        std::ostringstream out;
        const kempe::Colouring* first = family.colourings.empty() ? nullptr : &family.colourings.front().second;
        kempe::io::write_dot(out, family.graph, first, family.name);
        write_text(a.dot, out.str());
    }
    if (!a.colourings_dir.empty()) {
        std::filesystem::create_directories(a.colourings_dir);
        for (const auto& [name, c] : family.colourings) {
            write_text((std::filesystem::path(a.colourings_dir) / (name + ".json")).string(),
                       kempe::io::colouring_to_json(c).dump(2) + "\n");
        }
    }
    return exit_holds;
}

int run_check(const Args& a)
{
    const kempe::io::GraphFile file = load_graph(a.graph);
    const kempe::Colouring c = load_colouring(file, a.colouring);
    bool holds = false;
    if (a.property == "proper") {
        holds = kempe::is_proper(file.graph, c);
    } else if (a.property == "frozen") {
        holds = kempe::is_frozen(file.graph, c);
    } else {
        holds = kempe::is_kempe_frozen(file.graph, c);
    }
    emit({{"property", a.property}, {"holds", holds}});
    return verdict(holds);
}

int run_classes(const Args& a)
{
    const kempe::io::GraphFile file = load_graph(a.graph);
    const kempe::KempeClassReport report = kempe::kempe_classes(file.graph, a.k, a.cap);
    emit(kempe::io::report_to_json(report));
    return report.cap_hit ? exit_resource : exit_holds;
}

int run_equiv(const Args& a)
{
    const kempe::io::GraphFile file = load_graph(a.graph);
    kempe::Colouring c1 = load_colouring(file, a.colouring);
    kempe::Colouring c2 = load_colouring(file, a.colouring2);
    if (a.k > 0) {
        c1 = c1.padded(a.k);
        c2 = c2.padded(a.k);
    }
    const bool equivalent = kempe::are_kempe_equivalent(file.graph, c1, c2, a.cap);
    emit({{"k", c1.k()}, {"equivalent", equivalent}});
    return verdict(equivalent);
}

int run_connected(const Args& a)
{
    const kempe::io::GraphFile file = load_graph(a.graph);
    const int chi = kempe::chromatic_number(file.graph);
    const int from = a.k_from.value_or(chi);
    const int to = a.k_to.value_or(from + 2);
    if (from < chi || to < from) {
        throw kempe::InputError("k range must satisfy chi <= from <= to (chi = " + std::to_string(chi) + ")");
    }
    json per_k = json::array();
    bool all = true;
    bool unknown = false;
    for (int k = from; k <= to; ++k) {
        const kempe::KempeClassReport report = kempe::kempe_classes(file.graph, k, a.cap);
        unknown = unknown || report.cap_hit;
        all = all && report.classes.size() == 1;
        per_k.push_back({{"k", k},
                         {"total_colourings", report.total_colourings},
                         {"class_count", report.classes.size()},
                         {"cap_hit", report.cap_hit}});
    }
    emit({{"chromatic_number", chi}, {"range", {from, to}}, {"single_class_throughout", all}, {"per_k", per_k}});
    if (unknown) {
        return exit_resource;
    }
    return verdict(all);
}

int run_certificate(const Args& a)
{
    const kempe::io::GraphFile file = load_graph(a.graph);
    const kempe::Colouring frozen = load_colouring(file, a.colouring);
    const kempe::Colouring witness = load_colouring(file, a.colouring2);
    const kempe::CertificateChecks checks = kempe::check_certificate(file.graph, frozen, witness);
    json doc = {{"k", frozen.k()},
                {"frozen", kempe::io::colouring_to_json(frozen)},
                {"witness", kempe::io::colouring_to_json(witness)},
                {"checks", kempe::io::checks_to_json(checks)}};
    if (a.with_chi) {
        const int chi = kempe::chromatic_number(file.graph);
        doc["checks"]["chromatic_number"] = chi;
        doc["checks"]["chi_below_k"] = chi < frozen.k();
    }
    doc["valid"] = checks.all();
    emit(doc);
    return verdict(checks.all());
}

int run_hfree(const Args& a)
{
    const kempe::io::GraphFile file = load_graph(a.graph);
    const bool free = kempe::is_h_free(file.graph, kempe::named_graph(a.forbidden));
    emit({{"forbidden", a.forbidden}, {"h_free", free}});
    return verdict(free);
}

int run_op2k2(const Args& a)
{
    const kempe::io::GraphFile file = load_graph(a.graph);
    const kempe::Colouring beta = load_colouring(file, a.colouring);
    const kempe::Colouring gamma = load_colouring(file, a.colouring2);
    if (a.search || !a.x || !a.y) {
        if (!a.search) {
            throw kempe::InputError("op2k2 needs --x and --y, or --search");
        }
        json out = json::array();
        for (const kempe::Op2K2Candidate& cand : kempe::find_op2k2_candidates(file.graph, beta, gamma)) {
            out.push_back(kempe::io::candidate_to_json(cand));
        }
        emit({{"candidates", out}});
        return verdict(!out.empty());
    }
    const kempe::Op2K2Result result = kempe::apply_op_2k2({file.graph, beta, gamma, *a.x, *a.y});
    const json doc = kempe::io::op2k2_result_to_json(result);
    if (a.output.empty()) {
        emit(doc);
    } else {
        write_text(a.output, doc.dump(2) + "\n");
    }
    return exit_holds;
}

int run_census(const Args& a)
{
    emit(kempe::io::census_to_json(kempe::small_graph_census(a.census_n)));
    return exit_holds;
}

int run_verify(const Args& a)
{
    kempe::verify::Options options;
    options.fast = a.fast;
    options.seed = a.seed;
    bool all = true;
    std::cout << std::left << std::setw(4) << "#" << std::setw(6) << "ok" << std::setw(10) << "seconds"
              << "criterion\n";
    for (const kempe::verify::Criterion& criterion : kempe::verify::criteria()) {
        const kempe::verify::CriterionResult r = criterion.run(options);
        all = all && r.passed();
        std::ostringstream secs;
        secs << std::fixed << std::setprecision(2) << r.seconds;
        std::cout << std::left << std::setw(4) << r.id << std::setw(6) << (r.passed() ? "PASS" : "FAIL")
                  << std::setw(10) << secs.str() << r.title << '\n';
        for (const std::string& note : r.notes) {
            std::cout << "              " << note << '\n';
        }
        for (const std::string& failure : r.failures) {
            std::cout << "              failed: " << failure << '\n';
        }
        if (!r.within_budget()) {
            std::cout << "              failed: exceeded the " << r.budget_seconds << " s budget\n";
        }
        std::cout.flush();
    }
    return verdict(all);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Kempe chains, Kempe classes and frozen colourings"};
    app.require_subcommand(1);
    Args a;

    auto* gen = app.add_subcommand("gen", "Emit a named graph family with its colourings");
    gen->add_option("family", a.family, "prism, fig1, fig2, d_q, y_r or h_k")->required();
    gen->add_option("--param", a.param, "q, r or k");
    gen->add_option("-o,--output", a.output, "Write the graph file here instead of stdout");
    gen->add_option("--dot", a.dot, "Also write a DOT drawing");
    gen->add_option("--colourings-dir", a.colourings_dir, "Write each colouring to DIR/<name>.json");

    auto* check = app.add_subcommand("check", "Test a colouring property");
    check->add_option("property", a.property)->required()->check(CLI::IsMember({"proper", "frozen", "kempe-frozen"}));
    check->add_option("graph", a.graph)->required();
    check->add_option("colouring", a.colouring, "Colouring file or @name")->required();

    auto* classes = app.add_subcommand("classes", "Partition all k-colourings into Kempe classes");
    classes->add_option("graph", a.graph)->required();
    classes->add_option("-k", a.k)->required()->check(CLI::PositiveNumber);
    classes->add_option("--cap", a.cap);

    auto* equiv = app.add_subcommand("equiv", "Decide Kempe equivalence of two colourings");
    equiv->add_option("graph", a.graph)->required();
    equiv->add_option("first", a.colouring)->required();
    equiv->add_option("second", a.colouring2)->required();
    equiv->add_option("-k", a.k, "Pad both colourings to K colours");
    equiv->add_option("--cap", a.cap);

    auto* connected = app.add_subcommand("connected", "Check one Kempe class for each k in a range");
    connected->add_option("graph", a.graph)->required();
    connected->add_option("--from", a.k_from, "Default: chi");
    connected->add_option("--to", a.k_to, "Default: from + 2");
    connected->add_option("--cap", a.cap);

    auto* certificate = app.add_subcommand("certificate", "Validate a not-a-Kempe-class certificate");
    certificate->add_option("graph", a.graph)->required();
    certificate->add_option("frozen", a.colouring)->required();
    certificate->add_option("witness", a.colouring2)->required();
    certificate->add_flag("--with-chi", a.with_chi, "Also report whether chi < k");

    auto* hfree = app.add_subcommand("hfree", "Test H-freeness against a named graph");
    hfree->add_option("graph", a.graph)->required();
    hfree->add_option("--forbidden", a.forbidden)->required();

    auto* op2k2 = app.add_subcommand("op2k2", "Apply, or search for inputs of, the two-vertex extension");
    op2k2->add_option("graph", a.graph)->required();
    op2k2->add_option("beta", a.colouring)->required();
    op2k2->add_option("gamma", a.colouring2)->required();
    op2k2->add_option("--x", a.x);
    op2k2->add_option("--y", a.y);
    op2k2->add_flag("--search", a.search);
    op2k2->add_option("-o,--output", a.output);

    auto* census = app.add_subcommand("census", "Classify all graphs on n vertices");
    census->add_option("-n", a.census_n)->required();

    auto* verify = app.add_subcommand("verify-paper", "Run every acceptance check and print a table");
    verify->add_flag("--fast", a.fast);
    verify->add_option("--seed", a.seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input;
    }

    try {
        if (gen->parsed()) return run_gen(a);
        if (check->parsed()) return run_check(a);
        if (classes->parsed()) return run_classes(a);
        if (equiv->parsed()) return run_equiv(a);
        if (connected->parsed()) return run_connected(a);
        if (certificate->parsed()) return run_certificate(a);
        if (hfree->parsed()) return run_hfree(a);
        if (op2k2->parsed()) return run_op2k2(a);
        if (census->parsed()) return run_census(a);
        if (verify->parsed()) return run_verify(a);
    } catch (const kempe::ResourceError& e) {
        std::cerr << "resource cap reached: " << e.what() << '\n';
        return exit_resource;
    } catch (const kempe::InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return exit_input;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    }
    return exit_input;
}
