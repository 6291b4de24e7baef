// gocha: exact graded-algebra computations for pro-p group presentations
// built on graphs: clique/cohomology tables, gocha series, truncated
// noncommutative Groebner bases, Magnus expansions.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gocha/cohomology.hpp"
#include "gocha/errors.hpp"
#include "gocha/gradation.hpp"
#include "gocha/json_io.hpp"

using namespace gocha;

namespace {

enum class Format { table, json, csv };

Format parse_format(const std::string& s)
{
    if (s == "table")
        return Format::table;
    if (s == "json")
        return Format::json;
    if (s == "csv")
        return Format::csv;
    throw ParseError("--format must be table, json or csv");
}

uint64_t resource_budget_mb()
{
    if (const char* env = std::getenv("GOCHA_MAX_MEGABYTES")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0)
            return v;
        throw ParseError("GOCHA_MAX_MEGABYTES must be a positive integer");
    }
    return 4096;
}

std::string join_ll(const std::vector<long long>& v)
{
    std::string s;
    for (size_t i = 0; i < v.size(); ++i)
        s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

void print_series_line(std::ostream& os, const std::string& label, const IntSeries& s)
{
    os << label << ": " << s.to_string() << "\n";
}

// ------------------------------------------------------------------ graph

int cmd_graph(const std::string& path, Format fmt)
{
    Graph g = load_graph_file(path);
    CliqueTable ct = clique_table(g, g.d);
    IntSeries cp = clique_polynomial(g, ct.clique_number);
    ConditionSplit split = condition_decompose(g);
    CohomologyTable coh = cohomology_table(g);
    bool bip = two_color(g).has_value();

    if (fmt == Format::json) {
        nlohmann::json j;
        j["graph"] = nlohmann::json::parse(graph_to_json(g));
        j["bipartite"] = bip;
        j["clique_counts"] = ct.counts;
        j["clique_number"] = ct.clique_number;
        auto cpj = nlohmann::json::array();
        for (int k = 0; k <= cp.max_degree(); ++k)
            cpj.push_back(int64_t(cp[k]));
        j["clique_polynomial"] = cpj;
        j["split"] = {{"a_vertices", split.a_vertices},
                      {"b_vertices", split.b_vertices},
                      {"a_edges", split.a_edges},
                      {"b_edges", split.b_edges}};
        j["cohomology"] = nlohmann::json::parse(cohomology_table_json(coh));
        std::cout << j.dump() << "\n";
        return 0;
    }
    if (fmt == Format::csv) {
        std::cout << "n,clique_count,h\n";
        for (size_t n = 0; n < ct.counts.size(); ++n) {
            long long h = n < coh.h.size() ? coh.h[n] : 0;
            std::cout << n << "," << ct.counts[n] << "," << h << "\n";
        }
        return 0;
    }

    std::cout << "graph: d = " << g.d << ", " << g.edge_count() << " edges\n";
    std::cout << "bipartite: " << (bip ? "yes" : "no") << "\n";
    std::cout << "clique number: " << ct.clique_number << "\n";
    auto set_str = [](const std::vector<int>& v) {
        std::string s = "{";
        for (size_t i = 0; i < v.size(); ++i)
            s += (i ? " " : "") + std::to_string(v[i]);
        return s + "}";
    };
    std::cout << "bipartite/clique split: A = " << set_str(split.a_vertices) << " ("
              << split.a_edges.size() << " edges), B = " << set_str(split.b_vertices) << " ("
              << split.b_edges.size() << " edges)\n";
    std::cout << "clique counts: " << join_ll(ct.counts) << "\n";
    print_series_line(std::cout, "clique polynomial", cp);
    std::cout << "h: " << join_ll(coh.h) << "\n";
    if (coh.split_cd)
        std::cout << "split cd, max(2, B clique number): " << *coh.split_cd << "\n";
    if (!coh.note.empty())
        std::cout << "note: " << coh.note << "\n";
    std::cout << "cd = " << coh.cd << "\n";
    return 0;
}

// ----------------------------------------------------------------- magnus

int cmd_magnus(const std::string& word_text, uint32_t p, int N, const std::vector<int>& comequa,
               Format fmt)
{
    if (!comequa.empty()) {
        int u = comequa[0], v = comequa[1];
        if (u < 1 || v < 1 || u == v)
            throw ParseError("--check-comequa needs two distinct generator indices");
        Context ctx(p, uint32_t(std::max({u, v, 2})));
        GroupWord word = GroupWord::commutator(GroupWord::generator(u), GroupWord::generator(v));
        bool equal = magnus_expand(word, ctx, N) == commutator_closed_form(u, v, ctx, N);
        if (fmt == Format::json) {
            nlohmann::json j;
            j["u"] = u;
            j["v"] = v;
            j["through_degree"] = N;
            j["equal"] = equal;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "closed-form commutator expansion [x" << u << ",x" << v
                      << "]: " << (equal ? "EQUAL" : "DIFFERENT") << " through degree " << N
                      << "\n";
        }
        return equal ? 0 : 4; // inequality would be an internal defect
    }

    GroupWord word = parse_group_word(word_text, 64);
    Context ctx(p, uint32_t(std::max(word.max_generator(), 1)));
    TruncatedSeries s = magnus_expand(word, ctx, N);
    auto deg = s.valuation();

    if (fmt == Format::json) {
        nlohmann::json j;
        j["word"] = word_text;
        j["p"] = p;
        j["N"] = N;
        auto comps = nlohmann::json::array();
        for (int n = 0; n <= N; ++n)
            comps.push_back(render_polynomial(s.component(n)));
        j["components"] = comps;
        j["zassenhaus"] = format_zassenhaus(deg, N);
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::cout << "word: " << word_text << "  (p = " << p << ", cutoff N = " << N << ")\n";
    for (int n = 0; n <= N; ++n)
        if (!s.component(n).is_zero())
            std::cout << "deg " << n << ": " << render_polynomial(s.component(n)) << "\n";
    if (s.is_zero())
        std::cout << "expansion is 0 modulo degree > " << N << "\n";
    std::cout << "zassenhaus degree: " << format_zassenhaus(deg, N) << "\n";
    return 0;
}

// ------------------------------------------------------------------ gocha

int cmd_gocha(const std::string& path, const std::string& graph_path, Format fmt)
{
    Presentation pres = load_presentation_file(path);
    IdealImageOptions opts;
    opts.max_megabytes = resource_budget_mb();

    std::optional<Graph> graph;
    if (!graph_path.empty())
        graph = load_graph_file(graph_path);
    else
        graph = graph_from_tags(pres);

    GochaReport rep = compute_gocha(pres, graph, opts);

    std::optional<GradedMatchReport> match;
    std::optional<CohomologyTable> coh;
    if (graph && graph->d == int(pres.ctx.d)) {
        match = graded_algebra_match(*graph, pres, opts);
        coh = cohomology_table(*graph, pres);
    }

    if (fmt == Format::json) {
        nlohmann::json j = nlohmann::json::parse(gocha_report_json(rep));
        if (match) {
            j["graph_algebra_equal"] = match->equal;
            j["graph_algebra_first_discrepancy"] = match->first_discrepancy;
            j["condition_satisfied"] = match->condition_satisfied;
        }
        if (coh)
            j["cohomology"] = nlohmann::json::parse(cohomology_table_json(*coh));
        std::cout << j.dump() << "\n";
        return 0;
    }
    if (fmt == Format::csv) {
        std::cout << "n,dim\n";
        for (int n = 0; n <= rep.dims.max_degree(); ++n)
            std::cout << n << "," << rep.dims[n] << "\n";
        return 0;
    }

    std::cout << "presentation: p = " << pres.ctx.p << ", d = " << pres.ctx.d
              << ", N = " << pres.cutoff << ", " << pres.relations.size() << " relations\n";
    print_series_line(std::cout, "dims", rep.dims);
    std::cout << "exact through degree " << rep.exact_to_degree << "\n";
    for (const auto& w : rep.warnings)
        std::cout << "warning: " << w << "\n";
    std::cout << "mild: " << (rep.mild ? "yes" : "no") << "\n";
    std::cout << "matched model: " << (rep.matched_model.empty() ? "-" : rep.matched_model)
              << "\n";
    if (match) {
        std::cout << "edge-relation hypotheses: "
                  << (match->condition_satisfied ? "satisfied" : "NOT satisfied") << "\n";
        if (!match->condition_satisfied)
            for (const auto& pr : match->condition_problems)
                std::cout << "  - " << pr << "\n";
        std::cout << "graded algebra vs graph algebra: "
                  << (match->equal ? "EQUAL" : "DIFFERENT") << " through degree "
                  << match->through_degree;
        if (!match->equal)
            std::cout << " (first discrepancy at degree " << match->first_discrepancy << ")";
        if (!match->condition_satisfied)
            std::cout << " [informational: hypotheses not satisfied]";
        std::cout << "\n";
    }
    if (coh && coh->certified) {
        std::cout << "cohomology (certificate: " << coh->certificate
                  << "): h = " << join_ll(coh->h) << ", cd = " << coh->cd << "\n";
    } else if (coh) {
        std::cout << "cohomology: not certified (" << coh->note << ")\n";
    }
    return 0;
}

// ---------------------------------------------------------------- grobner

int cmd_grobner(const std::string& path, const std::string& ideal, int N, uint32_t p,
                const std::string& nf_text)
{
    Graph g = load_graph_file(path);
    Context ctx(p, uint32_t(g.d));
    auto gens = ideal == "dual" ? quadratic_dual_ideal(ctx, g) : raaa_ideal(ctx, g);
    GroebnerBasis gb = complete(ctx, gens, N);
    if (!nf_text.empty()) {
        Polynomial f = parse_polynomial(nf_text, ctx);
        std::cout << render_polynomial(normal_form(f, gb)) << "\n";
        return 0;
    }
    std::cout << render_basis(gb);
    return 0;
}

// ------------------------------------------------------------------- dual

int cmd_dual(const std::string& path, int N, Format fmt)
{
    Graph g = load_graph_file(path);
    DualDimsReport rep = dual_dims_crosscheck(g, N);
    if (fmt == Format::json) {
        nlohmann::json j;
        j["equal"] = rep.equal;
        j["first_mismatch"] = rep.first_mismatch;
        auto dims = nlohmann::json::array();
        for (int n = 0; n <= rep.dual_dims.max_degree(); ++n)
            dims.push_back(int64_t(rep.dual_dims[n]));
        j["dual_dims"] = dims;
        j["clique_counts"] = rep.clique_counts;
        std::cout << j.dump() << "\n";
        return 0;
    }
    if (fmt == Format::csv) {
        std::cout << "n,dual_dim,clique_count\n";
        for (int n = 0; n <= rep.dual_dims.max_degree(); ++n)
            std::cout << n << "," << rep.dual_dims[n] << "," << rep.clique_counts[size_t(n)]
                      << "\n";
        return 0;
    }
    print_series_line(std::cout, "dual dims", rep.dual_dims);
    std::cout << "clique counts: " << join_ll(rep.clique_counts) << "\n";
    std::cout << "dual dims = clique counts: " << (rep.equal ? "yes" : "NO") << "\n";
    return 0;
}

// -------------------------------------------------------------- corollary

int cmd_corollary(int n, Format fmt)
{
    PrescribedCdWitness w = prescribed_cd_witness(n);
    if (fmt == Format::json) {
        nlohmann::json j;
        j["n"] = n;
        j["graph"] = nlohmann::json::parse(graph_to_json(w.graph));
        j["cohomology"] = nlohmann::json::parse(cohomology_table_json(w.table));
        j["ok"] = w.ok;
        std::cout << j.dump() << "\n";
        return w.ok ? 0 : 4;
    }
    std::cout << "witness graph for cohomological dimension " << n << ": d = " << w.graph.d
              << ", edges:";
    for (auto [i, j] : w.graph.edges)
        std::cout << " {" << i << "," << j << "}";
    std::cout << "\n";
    std::cout << "h: " << join_ll(w.table.h) << "\n";
    std::cout << "cd = " << w.table.cd << (w.ok ? "" : "  [MISMATCH]") << "\n";
    return w.ok ? 0 : 4;
}

// --------------------------------------------------------------- selftest

int cmd_selftest(uint64_t seed)
{
    std::mt19937 rng{uint32_t(seed)};
    bool ok = true;
    auto report = [&](const std::string& name, bool pass) {
        std::cout << (pass ? "pass" : "FAIL") << "  " << name << "\n";
        ok = ok && pass;
    };

    {
        bool pass = true;
        for (int t = 0; t < 60; ++t) {
            Graph g = random_graph(rng, 3 + int(rng() % 5), 0.4);
            auto perm = bipartite_relabeling(g);
            if (perm.has_value() != two_color(g).has_value())
                pass = false;
            if (perm && !g.edges.empty()) {
                Graph h = apply_relabeling(g, *perm);
                std::vector<Word> arcs;
                for (auto [i, j] : h.edges)
                    arcs.push_back(Word::generator(i) * Word::generator(j));
                if (!combinatorially_free(arcs))
                    pass = false;
            }
        }
        report("bipartite relabeling yields combinatorially free arcs", pass);
    }
    {
        bool pass = true;
        for (int t = 0; t < 10; ++t) {
            int d = 2 + int(rng() % 4);
            Graph g = random_graph(rng, d, 0.5);
            Context ctx(2, uint32_t(d));
            GroebnerBasis gb = complete(ctx, raaa_ideal(ctx, g), 6);
            IntSeries dims = hilbert_dims(gb, 6);
            if (!dims.prefix_equal(invert_int_series(clique_polynomial(g, 6)), 6))
                pass = false;
        }
        report("graph algebra dims invert the clique polynomial", pass);
    }
    {
        bool pass = true;
        for (int t = 0; t < 6; ++t) {
            int d = 2 + int(rng() % 3);
            Graph g = random_graph(rng, d, 0.6);
            Context ctx(2, uint32_t(d));
            auto rep = verify_homogeneous_gradation(ctx, g, 5);
            if (!rep.equal)
                pass = false;
        }
        report("filtered span of commutators matches graded dims", pass);
    }
    std::cout << (ok ? "selftest: all checks passed" : "selftest: FAILURES") << "\n";
    return ok ? 0 : 4;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact graded algebras, Groebner bases and clique cohomology for "
                 "graph-based pro-p presentations"};
    app.require_subcommand(1);

    std::string format_str = "table";
    app.add_option("--format", format_str, "output format: table, json or csv")
        ->capture_default_str();
    uint64_t seed = 0;
    app.add_option("--seed", seed, "seed for randomized property runs (selftest)");

    uint32_t p = 2;
    int N = 6;

    auto* graph_cmd = app.add_subcommand("graph", "analyze a graph file");
    std::string graph_path;
    graph_cmd->add_option("path", graph_path, "graph file (JSON or edge list)")->required();

    auto* magnus_cmd = app.add_subcommand("magnus", "expand a free-group word");
    std::string word_text;
    magnus_cmd->add_option("word", word_text, "word, e.g. \"[x1,x2]*x3^-2\"");
    magnus_cmd->add_option("-p", p, "coefficient prime")->capture_default_str();
    magnus_cmd->add_option("-N", N, "series cutoff")
        ->check(CLI::Range(1, 12))
        ->capture_default_str();
    std::vector<int> comequa;
    magnus_cmd
        ->add_option("--check-comequa", comequa,
                     "verify the closed-form commutator expansion for generators u v")
        ->expected(2);

    auto* gocha_cmd = app.add_subcommand("gocha", "graded dims of a presentation");
    std::string pres_path, attach_graph;
    gocha_cmd->add_option("path", pres_path, "presentation file")->required();
    gocha_cmd->add_option("--graph", attach_graph, "graph file to compare against");

    auto* grobner_cmd = app.add_subcommand("grobner", "dump a completed basis / normal forms");
    std::string grobner_path, ideal_kind = "raaa", nf_text;
    grobner_cmd->add_option("path", grobner_path, "graph file")->required();
    grobner_cmd->add_option("--ideal", ideal_kind, "raaa (commutators) or dual")
        ->check(CLI::IsMember({"raaa", "dual"}))
        ->capture_default_str();
    grobner_cmd->add_option("-N", N, "completion degree")
        ->check(CLI::Range(1, 12))
        ->capture_default_str();
    grobner_cmd->add_option("-p", p, "coefficient prime")->capture_default_str();
    grobner_cmd->add_option("--normal-form", nf_text, "reduce this polynomial and print it");

    auto* dual_cmd = app.add_subcommand("dual", "quadratic dual dims vs clique counts");
    std::string dual_path;
    dual_cmd->add_option("path", dual_path, "graph file")->required();
    dual_cmd->add_option("-N", N, "maximum degree")
        ->check(CLI::Range(1, 12))
        ->capture_default_str();

    auto* cor_cmd = app.add_subcommand("corollary", "witness graph with prescribed cd");
    int cor_n = 1;
    cor_cmd->add_option("n", cor_n, "target cohomological dimension")
        ->required()
        ->check(CLI::Range(1, 10));

    auto* selftest_cmd = app.add_subcommand("selftest", "randomized property checks");
    for (auto* sub : app.get_subcommands({}))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
        Format fmt = parse_format(format_str);
        if (*graph_cmd)
            return cmd_graph(graph_path, fmt);
        if (*magnus_cmd) {
            if (word_text.empty() && comequa.empty())
                throw ParseError("magnus needs a word or --check-comequa u v");
            return cmd_magnus(word_text, p, N, comequa, fmt);
        }
        if (*gocha_cmd)
            return cmd_gocha(pres_path, attach_graph, fmt);
        if (*grobner_cmd)
            return cmd_grobner(grobner_path, ideal_kind, N, p, nf_text);
        if (*dual_cmd)
            return cmd_dual(dual_path, N, fmt);
        if (*cor_cmd)
            return cmd_corollary(cor_n, fmt);
        if (*selftest_cmd)
            return cmd_selftest(seed);
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
