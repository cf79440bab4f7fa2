#include "kempe/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "kempe/colouring.hpp"
#include "kempe/error.hpp"
#include "kempe/families.hpp"
#include "kempe/frozen.hpp"
#include "kempe/hereditary.hpp"
#include "kempe/kempe.hpp"
#include "kempe/random.hpp"

namespace kempe::verify {

namespace {

template <typename... Parts>
std::string str(const Parts&... parts)
{
    std::ostringstream out;
    (out << ... << parts);
    return out.str();
}

class Recorder {
public:
    Recorder(int id, std::string title, double budget) : start_(std::chrono::steady_clock::now())
    {
        result_.id = id;
        result_.title = std::move(title);
        result_.budget_seconds = budget;
    }

    bool expect(bool ok, const std::string& what)
    {
        if (!ok) {
            result_.failures.push_back(what);
        }
        return ok;
    }

    void note(const std::string& what) { result_.notes.push_back(what); }

    CriterionResult finish()
    {
        const auto elapsed = std::chrono::steady_clock::now() - start_;
        result_.seconds = std::chrono::duration<double>(elapsed).count();
        return std::move(result_);
    }

private:
    std::chrono::steady_clock::time_point start_;
    CriterionResult result_;
};

// Runs body, turning any escaped exception into a recorded failure.
template <typename Body>
CriterionResult guarded(Recorder rec, Body&& body)
{
    try {
        body(rec);
    } catch (const ResourceError& e) {
        rec.expect(false, str("resource cap reached: ", e.what()));
    } catch (const std::exception& e) {
        rec.expect(false, str("unexpected error: ", e.what()));
    }
    return rec.finish();
}

bool certificate_validates(Recorder& rec, const Graph& g, const Colouring& frozen, const Colouring& witness,
                           const std::string& label)
{
    try {
        build_not_kempe_class_certificate(g, frozen, witness);
        return true;
    } catch (const CertificateRejected& e) {
        rec.expect(false, str(label, ": ", e.what()));
        return false;
    }
}

const Graph& k3() { static const Graph g = complete_graph(3); return g; }
const Graph& c4() { static const Graph g = cycle_graph(4); return g; }
const Graph& two_k2() { static const Graph g = named_graph("2K2"); return g; }

} // namespace

CriterionResult prism_classes(const Options&)
{
    return guarded(Recorder(1, "prism: 12 colourings in 2 Kempe classes of 6", 1.0), [](Recorder& rec) {
        const ColouredPair prism = gen_prism();
        const std::uint64_t total = count_colourings(prism.graph, 3);
        rec.expect(total == 12, str("expected 12 proper 3-colourings, found ", total));
        const KempeClassReport report = kempe_classes(prism.graph, 3);
        rec.expect(!report.cap_hit, "enumeration hit the cap");
        rec.expect(report.classes.size() == 2, str("expected 2 classes, found ", report.classes.size()));
        for (const KempeClass& cls : report.classes) {
            rec.expect(cls.size == 6, str("class of size ", cls.size, " (expected 6)"));
        }
        const std::vector<Colouring> left_class = kempe_class_of(prism.graph, prism.left);
        rec.expect(!std::binary_search(left_class.begin(), left_class.end(), prism.right),
                   "left and right colourings share a Kempe class");
        rec.expect(!are_kempe_equivalent(prism.graph, prism.left, prism.right),
                   "left and right colourings reported Kempe equivalent");
    });
}

CriterionResult triangle_free_graph(const Options&)
{
    return guarded(Recorder(2, "triangle-free 14-vertex graph is not Kempe connected at k=3", 60.0),
                   [](Recorder& rec) {
                       const ColouredPair fig = gen_fig1();
                       const Graph& g = fig.graph;
                       rec.expect(g.order() == 14, str("order ", g.order(), " (expected 14)"));
                       rec.expect(!contains_induced(g, k3()), "graph contains a triangle");
                       rec.expect(chromatic_number(g) == 3, "chromatic number is not 3");
                       rec.expect(is_proper(g, fig.left), "left colouring is not proper");
                       rec.expect(is_proper(g, fig.right), "right colouring is not proper");
                       rec.expect(is_kempe_frozen(g, fig.left), "left colouring is not Kempe frozen");
                       rec.expect(partition_of(fig.left) != partition_of(fig.right), "partitions coincide");
                       const KempeClassReport report = kempe_classes(g, 3, 10'000'000);
                       rec.expect(!report.cap_hit, "enumeration hit the cap");
                       rec.expect(report.classes.size() >= 2,
                                  str("expected >= 2 classes, found ", report.classes.size()));
                       rec.note(str(report.total_colourings, " colourings in ", report.classes.size(), " classes"));
                   });
}

CriterionResult c4_free_graph(const Options&)
{
    return guarded(Recorder(3, "C4-free 15-vertex graph: Hamiltonian-path class pairs, certificate", 5.0),
                   [](Recorder& rec) {
                       const ColouredPair fig = gen_fig2();
                       const Graph& g = fig.graph;
                       rec.expect(g.order() == 15, str("order ", g.order(), " (expected 15)"));
                       rec.expect(!contains_induced(g, c4()), "graph contains an induced C4");
                       rec.expect(chromatic_number(g) == 3, "chromatic number is not 3");
                       const std::vector<VertexSet> classes = colour_classes(fig.left);
                       for (int a = 0; a < 3; ++a) {
                           for (int b = a + 1; b < 3; ++b) {
                               const Graph pair = induced_subgraph(g, classes[a] | classes[b]);
                               int max_degree = 0;
                               for (Vertex v = 0; v < pair.order(); ++v) {
                                   max_degree = std::max(max_degree, pair.degree(v));
                               }
                               const bool path = pair.order() == 10 && pair.edge_count() == 9 && max_degree == 2
                                                 && is_connected(pair);
                               rec.expect(path, str("classes ", a + 1, ",", b + 1, " do not induce a 10-vertex path"));
                           }
                       }
                       certificate_validates(rec, g, fig.left, fig.right, "left/right certificate");
                   });
}

CriterionResult dq_family(const Options& options)
{
    return guarded(Recorder(4, "D_q (q=2,3,4): 2K2-free, chi=omega, psi Kempe frozen", 60.0),
                   [&](Recorder& rec) {
                       const std::vector<std::pair<int, int>> cases = {{2, 4}, {3, 6}, {4, 7}};
                       for (auto [q, chi_expected] : cases) {
                           if (options.fast && q == 4) {
                               rec.note("q=4 skipped (fast)");
                               continue;
                           }
                           const ColouredGraph d = gen_dq(q);
                           const Graph& g = d.graph;
                           const std::string tag = str("D_", q);
                           rec.expect(g.order() == 4 * q + 2, tag + ": wrong order");
                           rec.expect(!contains_induced(g, two_k2()), tag + ": contains 2K2");
                           const Colouring minimum = minimum_colouring_of(g);
                           const int omega = clique_number(g);
                           rec.expect(minimum.k() == chi_expected,
                                      str(tag, ": chi = ", minimum.k(), " (expected ", chi_expected, ")"));
                           rec.expect(omega == chi_expected,
                                      str(tag, ": omega = ", omega, " (expected ", chi_expected, ")"));
                           rec.expect(d.colouring.k() == 2 * q + 1, tag + ": psi does not use 2q+1 colours");
                           rec.expect(is_proper(g, d.colouring), tag + ": psi is not proper");
                           if (is_proper(g, d.colouring)) {
                               rec.expect(is_frozen(g, d.colouring), tag + ": psi is not frozen");
                               rec.expect(is_kempe_frozen(g, d.colouring), tag + ": psi is not Kempe frozen");
                           }
                           certificate_validates(rec, g, d.colouring, minimum.padded(2 * q + 1),
                                                 tag + " psi/minimum certificate");
                           if (q == 2) {
                               const KempeClassReport report = kempe_classes(g, 5);
                               rec.expect(!report.cap_hit, "D_2: enumeration hit the cap");
                               rec.expect(report.classes.size() >= 2,
                                          str("D_2: expected >= 2 classes at k=5, found ", report.classes.size()));
                               rec.note(str("D_2 at k=5: ", report.total_colourings, " colourings in ",
                                            report.classes.size(), " classes"));
                           }
                       }
                   });
}

CriterionResult yr_family(const Options& options)
{
    return guarded(Recorder(5, "Y_r (r=2,3): 2K2-free, chi=omega=2r, zeta Kempe frozen", 30.0),
                   [&](Recorder& rec) {
                       rec.expect(are_isomorphic(yr_complement(1), gen_prism().graph),
                                  "complement of Y_1 is not the prism");
                       for (int r : {2, 3}) {
                           const ColouredGraph y = gen_yr(r);
                           const Graph& g = y.graph;
                           const std::string tag = str("Y_", r);
                           rec.expect(y.colouring.k() == 3 * r, tag + ": zeta does not use 3r colours");
                           rec.expect(is_proper(g, y.colouring), tag + ": zeta is not proper");
                           rec.expect(is_kempe_frozen(g, y.colouring), tag + ": zeta is not Kempe frozen");
                           if (options.fast && r == 3) {
                               rec.note("Y_3 checks beyond zeta skipped (fast)");
                               continue;
                           }
                           rec.expect(g.order() == 6 * r, tag + ": wrong order");
                           rec.expect(!contains_induced(g, two_k2()), tag + ": contains 2K2");
                           const int chi = chromatic_number(g);
                           const int omega = clique_number(g);
                           rec.expect(chi == 2 * r, str(tag, ": chi = ", chi, " (expected ", 2 * r, ")"));
                           rec.expect(omega == 2 * r, str(tag, ": omega = ", omega, " (expected ", 2 * r, ")"));
                           const Colouring triangles = yr_triangle_colouring(r);
                           rec.expect(is_proper(g, triangles), tag + ": triangle colouring is not proper");
                           certificate_validates(rec, g, y.colouring, triangles.padded(3 * r),
                                                 tag + " zeta/triangle certificate");
                       }
                   });
}

CriterionResult hk_join(const Options&)
{
    return guarded(Recorder(6, "H_k (k=4,5): C4-free, chi=k, certificate at k colours", 30.0), [](Recorder& rec) {
        for (int k : {4, 5}) {
            const ColouredPair h = gen_hk(k);
            const std::string tag = str("H_", k);
            rec.expect(!contains_induced(h.graph, c4()), tag + ": contains an induced C4");
            const int chi = chromatic_number(h.graph);
            rec.expect(chi == k, str(tag, ": chi = ", chi));
            certificate_validates(rec, h.graph, h.left, h.right, tag + " certificate");
        }
    });
}

CriterionResult two_vertex_extension(const Options&)
{
    return guarded(Recorder(7, "two-vertex extension of D_2 keeps a Kempe-frozen colouring", 60.0),
                   [](Recorder& rec) {
                       const ColouredGraph d = gen_dq(2);
                       const Colouring beta = minimum_colouring_of(d.graph);
                       const std::vector<Op2K2Candidate> candidates
                           = find_op2k2_candidates(d.graph, beta, d.colouring);
                       rec.expect(!candidates.empty(), "no candidate pair (x, y)");
                       bool exercised[3] = {false, false, false};
                       for (const Op2K2Candidate& cand : candidates) {
                           const Op2K2Result out = apply_op_2k2({d.graph, beta, d.colouring, cand.x, cand.y});
                           const std::string tag = str("(x,y)=(", cand.x, ",", cand.y, ")");
                           rec.expect(out.gamma_prime.k() == 6, tag + ": gamma' does not use 6 colours");
                           rec.expect(is_proper(out.graph, out.beta_prime), tag + ": beta' not proper");
                           rec.expect(is_proper(out.graph, out.gamma_prime) && is_kempe_frozen(out.graph, out.gamma_prime),
                                      tag + ": gamma' not Kempe frozen");
                           const int chi = chromatic_number(out.graph);
                           rec.expect(chi == 5, str(tag, ": chi(G') = ", chi, " (expected 5)"));
                           std::vector<Edge> subdivided;
                           for (auto [a, b] : complement(d.graph).edges()) {
                               if (!(a == std::min(cand.x, cand.y) && b == std::max(cand.x, cand.y))) {
                                   subdivided.emplace_back(a, b);
                               }
                           }
                           const Vertex u = d.graph.order();
                           const Vertex v = u + 1;
                           subdivided.insert(subdivided.end(), {{cand.x, u}, {u, v}, {v, cand.y}});
                           rec.expect(complement(out.graph) == Graph(u + 2, subdivided),
                                      tag + ": complement of G' is not the subdivided complement");
                           const int which = static_cast<int>(cand.which);
                           if (cand.preserves_2k2_free) {
                               rec.expect(!contains_induced(out.graph, two_k2()), tag + ": G' contains 2K2");
                               exercised[which] = true;
                           }
                       }
                       rec.expect(exercised[1] || exercised[2], "no candidate satisfies the 2K2 side condition");
                       const auto count = [&](Op2K2Case c) {
                           return std::count_if(candidates.begin(), candidates.end(),
                                                [&](const Op2K2Candidate& x) { return x.which == c; });
                       };
                       rec.note(str(candidates.size(), " candidates (case 1: ", count(Op2K2Case::one),
                                    ", case 2: ", count(Op2K2Case::two), "); side condition met in case 1: ",
                                    exercised[1] ? "yes" : "no", ", case 2: ", exercised[2] ? "yes" : "no"));
                   });
}

CriterionResult cograph_spot_check(const Options& options)
{
    return guarded(Recorder(8, "200 random P4-free graphs are Kempe connected for k in [chi, chi+2]", 300.0),
                   [&](Recorder& rec) {
                       Rng rng(options.seed);
                       const Graph p4 = path_graph(4);
                       std::uint64_t spaces = 0;
                       for (int i = 0; i < 200; ++i) {
                           const Graph g = random_cograph(rng, 1 + draw(rng, 8));
                           if (!rec.expect(!contains_induced(g, p4), str("instance ", i, " contains P4"))) {
                               continue;
                           }
                           const int chi = chromatic_number(g);
                           for (int k = chi; k <= chi + 2; ++k) {
                               const KempeClassReport report = kempe_classes(g, k);
                               ++spaces;
                               if (!rec.expect(!report.cap_hit, str("instance ", i, " k=", k, ": cap hit"))) {
                                   continue;
                               }
                               rec.expect(report.classes.size() == 1,
                                          str("instance ", i, " (n=", g.order(), ") k=", k, ": ",
                                              report.classes.size(), " classes"));
                           }
                       }
                       rec.note(str(spaces, " colouring spaces checked"));
                   });
}

CriterionResult five_vertex_census(const Options&)
{
    return guarded(Recorder(9, "5-vertex census: 34 graphs = 20 + 13 + 1 (C5)", 10.0), [](Recorder& rec) {
        const CensusReport report = small_graph_census(5);
        rec.expect(report.total_classes == 34, str("total ", report.total_classes));
        rec.expect(report.group1 == 20, str("group 1: ", report.group1));
        rec.expect(report.group2 == 13, str("group 2: ", report.group2));
        rec.expect(report.group3 == 1, str("group 3: ", report.group3));
        rec.expect(report.group3_members.size() == 1 && are_isomorphic(report.group3_members.front(), cycle_graph(5)),
                   "group 3 is not exactly C5");
    });
}

namespace {

struct PropertyTally {
    std::uint64_t cases = 0;
    std::uint64_t violations = 0;
};

void swap_properties(Rng& rng, Recorder& rec, PropertyTally& tally)
{
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 2 + draw(rng, 7);
        const Graph g = random_graph(rng, n, 20 + draw(rng, 50));
        const int k = chromatic_number(g) + draw(rng, 2);
        const std::optional<Colouring> start = random_proper_colouring(rng, g, k);
        if (!start) {
            continue;
        }
        const Colouring& c = *start;
        for (Vertex v = 0; v < n; ++v) {
            for (Colour b = 0; b < k; ++b) {
                if (b == c[v]) {
                    continue;
                }
                const Colouring once = kempe_swap(g, c, v, c[v], b);
                const Colouring twice = kempe_swap(g, once, v, c[v], b);
                tally.cases += 2;
                if (!rec.expect(is_proper(g, once), "swap produced an improper colouring")) {
                    ++tally.violations;
                }
                if (!rec.expect(twice == c, "swap is not an involution")) {
                    ++tally.violations;
                }
            }
        }
        // Chains of one colour pair partition the union of the two classes.
        const std::vector<VertexSet> classes = colour_classes(c);
        for (Colour a = 0; a < k; ++a) {
            for (Colour b = a + 1; b < k; ++b) {
                const VertexSet both = classes[a] | classes[b];
                VertexSet covered(n);
                bool ok = true;
                both.for_each([&](Vertex v) {
                    const VertexSet chain = kempe_chain(g, c, v, a, b);
                    ok = ok && chain.contains(v) && (chain - both).empty();
                    chain.for_each([&](Vertex w) { ok = ok && kempe_chain(g, c, w, a, b) == chain; });
                    covered |= chain;
                });
                ++tally.cases;
                if (!rec.expect(ok && covered == both, "chains do not partition a two-colour union")) {
                    ++tally.violations;
                }
            }
        }
    }
}

void frozen_properties(Rng& rng, Recorder& rec, PropertyTally& tally)
{
    std::vector<std::pair<Graph, int>> hosts;
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 3 + draw(rng, 5);
        Graph g = random_graph(rng, n, 40 + draw(rng, 50));
        const int k = chromatic_number(g) + draw(rng, 2);
        hosts.emplace_back(std::move(g), k);
    }
    hosts.emplace_back(gen_prism().graph, 3);
    hosts.emplace_back(complement(named_graph("P4")), 2);
    for (const auto& [g, k] : hosts) {
        const Graph co = complement(g);
        // Every host has n <= 7 and k <= chi + 1, far below the default cap.
        for (const Colouring& c : enumerate_colourings(g, k)) {
            const bool kf = is_kempe_frozen(g, c);
            ++tally.cases;
            if (!rec.expect(!kf || is_frozen(g, c), "Kempe frozen colouring that is not frozen")) {
                ++tally.violations;
            }
            if (colours_used(c) == k) {
                ++tally.cases;
                const bool dual = is_kempe_frozen_clique_partition(co, partition_of(c));
                if (!rec.expect(dual == kf, "complement clique-partition duality fails")) {
                    ++tally.violations;
                }
            }
        }
    }
    // Family colourings.
    std::vector<std::pair<Graph, Colouring>> family;
    const ColouredPair prism = gen_prism();
    const ColouredPair f1 = gen_fig1();
    const ColouredPair f2 = gen_fig2();
    for (const ColouredPair* p : {&prism, &f1, &f2}) {
        family.emplace_back(p->graph, p->left);
        family.emplace_back(p->graph, p->right);
    }
    for (int q : {2, 3}) {
        ColouredGraph d = gen_dq(q);
        family.emplace_back(d.graph, d.colouring);
    }
    for (int r : {2, 3}) {
        ColouredGraph y = gen_yr(r);
        family.emplace_back(y.graph, y.colouring);
    }
    for (const auto& [g, c] : family) {
        const bool kf = is_kempe_frozen(g, c);
        tally.cases += 2;
        if (!rec.expect(!kf || is_frozen(g, c), "family: Kempe frozen but not frozen")) {
            ++tally.violations;
        }
        if (colours_used(c) == c.k()
            && !rec.expect(is_kempe_frozen_clique_partition(complement(g), partition_of(c)) == kf,
                           "family: duality fails")) {
            ++tally.violations;
        }
    }
}

void frozen_start_invariance(Recorder& rec, PropertyTally& tally)
{
    const ColouredPair prism = gen_prism();
    const ColouredPair f1 = gen_fig1();
    const ColouredGraph d2 = gen_dq(2);
    const std::vector<std::pair<const Graph*, const Colouring*>> starts = {
        {&prism.graph, &prism.left}, {&f1.graph, &f1.left}, {&d2.graph, &d2.colouring}};
    for (const auto& [g, c] : starts) {
        const Partition expected = partition_of(*c);
        for (const Colouring& member : kempe_class_of(*g, *c)) {
            ++tally.cases;
            if (!rec.expect(partition_of(member) == expected, "Kempe class of a frozen start changes partition")) {
                ++tally.violations;
            }
        }
    }
}

} // namespace

CriterionResult property_suites(const Options& options)
{
    return guarded(Recorder(10, "property suites (>= 10^4 seeded cases, zero violations)", 120.0),
                   [&](Recorder& rec) {
                       Rng rng(options.seed ^ 0x9e3779b97f4a7c15ULL);
                       PropertyTally tally;
                       swap_properties(rng, rec, tally);
                       frozen_properties(rng, rec, tally);
                       frozen_start_invariance(rec, tally);
                       rec.expect(tally.cases >= 10'000, str("only ", tally.cases, " cases"));
                       rec.expect(tally.violations == 0, str(tally.violations, " violations"));
                       rec.note(str(tally.cases, " cases, ", tally.violations, " violations"));
                   });
}

std::vector<Criterion> criteria()
{
    return {{1, prism_classes},      {2, triangle_free_graph}, {3, c4_free_graph},
            {4, dq_family},          {5, yr_family},           {6, hk_join},
            {7, two_vertex_extension}, {8, cograph_spot_check}, {9, five_vertex_census},
            {10, property_suites}};
}

std::vector<CriterionResult> run_all(const Options& options)
{
    std::vector<CriterionResult> results;
    for (const Criterion& c : criteria()) {
        results.push_back(c.run(options));
    }
    return results;
}

} // namespace kempe::verify
