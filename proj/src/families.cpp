#include "kempe/families.hpp"

#include <array>
#include <string>

#include "kempe/error.hpp"
#include "kempe/frozen.hpp"

namespace kempe {

namespace {

// Drawings label colours 1..k.
Colouring from_labels(int k, std::vector<Colour> labels)
{
    for (Colour& c : labels) {
        --c;
    }
    return Colouring(k, std::move(labels));
}

constexpr std::array<Edge, 26> fig1_edges{{
    {2, 0},  {0, 1},  {1, 3},  {3, 2},   {0, 4},  {4, 5},   {5, 6},   {6, 7},  {7, 8},
    {8, 1},  {2, 9},  {9, 10}, {10, 11}, {11, 12}, {12, 13}, {13, 3},  {6, 11}, {0, 10},
    {5, 2},  {12, 9}, {10, 13}, {7, 4},  {5, 8},  {10, 8},  {1, 12},  {7, 13},
}};

constexpr std::array<Edge, 27> fig2_edges{{
    {4, 5},   {5, 3},   {3, 6},   {6, 2},  {2, 7},   {7, 1},   {1, 8},   {8, 0},  {0, 9},
    {9, 14},  {13, 9},  {13, 7},  {7, 12}, {12, 5},  {5, 11},  {11, 8},  {8, 10}, {10, 6},
    {0, 14},  {14, 2},  {2, 12},  {12, 4}, {4, 11},  {11, 1},  {1, 10},  {10, 3}, {3, 13},
}};

Graph cycle_with_chords(int n, const std::vector<Edge>& chords)
{
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) {
        edges.emplace_back(v, (v + 1) % n);
    }
    edges.insert(edges.end(), chords.begin(), chords.end());
    return Graph(n, edges);
}

} // namespace

ColouredPair gen_prism()
{
    Graph g(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
    return {std::move(g), from_labels(3, {1, 3, 2, 2, 1, 3}), from_labels(3, {3, 2, 1, 2, 1, 3})};
}

ColouredPair gen_fig1()
{
    return {Graph(14, fig1_edges), from_labels(3, {2, 1, 1, 3, 3, 2, 3, 1, 3, 2, 1, 2, 3, 2}),
            from_labels(3, {2, 1, 1, 3, 1, 3, 1, 3, 2, 2, 1, 2, 3, 2})};
}

ColouredPair gen_fig2()
{
    return {Graph(15, fig2_edges), from_labels(3, {1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3}),
            from_labels(3, {3, 1, 1, 1, 1, 2, 2, 2, 2, 1, 3, 3, 3, 3, 2})};
}

Vertex dq_u(int /*q*/, int i) { return i; }

Vertex dq_v(int q, int i, int j) { return q + 2 + 3 * (i - 1) + (j - 1); }

Graph dq_complement(int q)
{
    if (q < 2) {
        throw InputError("D_q needs q >= 2");
    }
    std::vector<Edge> chords;
    for (int i = 1; i <= q; ++i) {
        chords.emplace_back(dq_u(q, i), dq_v(q, i, 2));
        chords.emplace_back(dq_v(q, i, 1), dq_v(q, i, 3));
    }
    return cycle_with_chords(4 * q + 2, chords);
}

ColouredGraph gen_dq(int q)
{
    Graph g = complement(dq_complement(q));
    std::vector<Colour> psi(static_cast<std::size_t>(g.order()), -1);
    for (int i = 1; i <= q; ++i) {
        psi[dq_u(q, i)] = psi[dq_v(q, i, 2)] = i - 1;
    }
    psi[dq_u(q, q + 1)] = psi[dq_v(q, 1, 1)] = q;
    for (int i = 1; i < q; ++i) {
        psi[dq_v(q, i, 3)] = psi[dq_v(q, i + 1, 1)] = q + i;
    }
    psi[dq_v(q, q, 3)] = psi[dq_u(q, 0)] = 2 * q;
    return {std::move(g), Colouring(2 * q + 1, std::move(psi))};
}

Vertex yr_v(int i, int j) { return 3 * (i - 1) + (j - 1); }

Graph yr_complement(int r)
{
    if (r < 1) {
        throw InputError("Y_r needs r >= 1");
    }
    std::vector<Edge> chords;
    for (int i = 1; i <= 2 * r; ++i) {
        chords.emplace_back(yr_v(i, 1), yr_v(i, 3));
    }
    for (int i = 1; i <= r; ++i) {
        chords.emplace_back(yr_v(i, 2), yr_v(i + r, 2));
    }
    return cycle_with_chords(6 * r, chords);
}

ColouredGraph gen_yr(int r)
{
    Graph g = complement(yr_complement(r));
    std::vector<Colour> zeta(static_cast<std::size_t>(g.order()), -1);
    for (int i = 1; i <= r; ++i) {
        zeta[yr_v(i, 2)] = zeta[yr_v(i + r, 2)] = i - 1;
    }
    for (int i = 1; i <= 2 * r; ++i) {
        const int next = i == 2 * r ? 1 : i + 1;
        zeta[yr_v(i, 3)] = zeta[yr_v(next, 1)] = r + i - 1;
    }
    return {std::move(g), Colouring(3 * r, std::move(zeta))};
}

Colouring yr_triangle_colouring(int r)
{
    if (r < 1) {
        throw InputError("Y_r needs r >= 1");
    }
    std::vector<Colour> colours(static_cast<std::size_t>(6 * r));
    for (int i = 1; i <= 2 * r; ++i) {
        for (int j = 1; j <= 3; ++j) {
            colours[yr_v(i, j)] = i - 1;
        }
    }
    return Colouring(2 * r, std::move(colours));
}

ColouredPair gen_hk(int k)
{
    if (k < 3) {
        throw InputError("H_k needs k >= 3");
    }
    ColouredPair base = gen_fig2();
    const int extra = k - 3;
    auto extend = [&](const Colouring& c) {
        std::vector<Colour> colours = c.colours();
        for (int i = 0; i < extra; ++i) {
            colours.push_back(3 + i);
        }
        return Colouring(k, std::move(colours));
    };
    return {join(base.graph, complete_graph(extra)), extend(base.left), extend(base.right)};
}

std::optional<Op2K2Case> op2k2_case(const Colouring& gamma, Vertex x, Vertex y)
{
    if (gamma[x] != gamma[y]) {
        return Op2K2Case::one;
    }
    for (std::size_t v = 0; v < gamma.size(); ++v) {
        const auto w = static_cast<Vertex>(v);
        if (w != x && w != y && gamma[w] == gamma[x]) {
            return std::nullopt;
        }
    }
    return Op2K2Case::two;
}

Op2K2Result apply_op_2k2(const Op2K2Input& in)
{
    const Graph& g = in.g;
    g.check_vertex(in.x);
    g.check_vertex(in.y);
    if (in.x == in.y || g.adjacent(in.x, in.y)) {
        throw InputError("x and y must be distinct nonadjacent vertices");
    }
    require_proper(g, in.beta);
    require_proper(g, in.gamma);
    if (in.gamma.k() != in.beta.k() + 1) {
        throw InputError("gamma must use exactly one colour more than beta");
    }
    if (in.beta[in.x] == in.beta[in.y]) {
        throw InputError("beta(x) and beta(y) must differ");
    }
    if (!is_kempe_frozen(g, in.gamma)) {
        throw InputError("gamma is not Kempe frozen");
    }
    const std::optional<Op2K2Case> which = op2k2_case(in.gamma, in.x, in.y);
    if (!which) {
        throw InputError("gamma(x) = gamma(y) but {x, y} is not a colour class of gamma");
    }

    const int n = g.order();
    const Vertex u = n;
    const Vertex v = n + 1;
    std::vector<Edge> edges = g.edges();
    edges.emplace_back(v, in.x);
    edges.emplace_back(in.x, in.y);
    edges.emplace_back(in.y, u);
    for (Vertex w = 0; w < n; ++w) {
        if (w != in.x && w != in.y) {
            edges.emplace_back(u, w);
            edges.emplace_back(v, w);
        }
    }

    std::vector<Colour> beta = in.beta.colours();
    beta.push_back(in.beta.k());
    beta.push_back(in.beta.k());

    const Colour fresh = in.gamma.k();
    std::vector<Colour> gamma = in.gamma.colours();
    if (*which == Op2K2Case::one) {
        gamma.push_back(fresh);
        gamma.push_back(fresh);
    } else {
        gamma[in.x] = fresh;
        gamma.push_back(fresh);
        gamma.push_back(in.gamma[in.y]);
    }
    return {Graph(n + 2, edges), Colouring(in.beta.k() + 1, std::move(beta)),
            Colouring(in.gamma.k() + 1, std::move(gamma)), *which};
}

std::vector<Op2K2Candidate> find_op2k2_candidates(const Graph& g, const Colouring& beta, const Colouring& gamma)
{
    std::vector<Op2K2Candidate> out;
    const std::vector<Edge> edges = g.edges();
    for (Vertex x = 0; x < g.order(); ++x) {
        for (Vertex y = x + 1; y < g.order(); ++y) {
            if (g.adjacent(x, y) || beta[x] == beta[y]) {
                continue;
            }
            const std::optional<Op2K2Case> which = op2k2_case(gamma, x, y);
            if (!which) {
                continue;
            }
            VertexSet outside = VertexSet::full(g.order()) - g.neighbours(x) - g.neighbours(y);
            outside.erase(x);
            outside.erase(y);
            bool anticomplete_edge = false;
            for (auto [r, s] : edges) {
                anticomplete_edge = anticomplete_edge || (outside.contains(r) && outside.contains(s));
            }
            Op2K2Candidate cand{x, y, *which, !anticomplete_edge, false};
            cand.preserves_2k2_free = *which == Op2K2Case::two || cand.no_anticomplete_edge;
            out.push_back(cand);
        }
    }
    return out;
}

FamilyInstance make_family(const std::string& name, std::optional<int> parameter)
{
    auto need = [&](const char* what) {
        if (!parameter) {
            throw InputError("family " + name + " needs a parameter " + what);
        }
        return *parameter;
    };
    auto pair = [&](ColouredPair p, std::string label) {
        return FamilyInstance{std::move(label), std::move(p.graph), {{"left", p.left}, {"right", p.right}}};
    };
    if (name == "prism") {
        return pair(gen_prism(), "prism");
    }
    if (name == "fig1") {
        return pair(gen_fig1(), "fig1");
    }
    if (name == "fig2") {
        return pair(gen_fig2(), "fig2");
    }
    if (name == "d_q" || name == "dq") {
        const int q = need("q");
        ColouredGraph d = gen_dq(q);
        return {"d_" + std::to_string(q), std::move(d.graph), {{"psi", d.colouring}}};
    }
    if (name == "y_r" || name == "yr") {
        const int r = need("r");
        ColouredGraph y = gen_yr(r);
        return {"y_" + std::to_string(r), std::move(y.graph),
                {{"zeta", y.colouring}, {"triangles", yr_triangle_colouring(r)}}};
    }
    if (name == "h_k" || name == "hk") {
        const int k = need("k");
        return pair(gen_hk(k), "h_" + std::to_string(k));
    }
    throw InputError("unknown family '" + name + "' (expected prism, fig1, fig2, d_q, y_r, h_k)");
}

} // namespace kempe
