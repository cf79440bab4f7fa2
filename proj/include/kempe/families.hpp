#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kempe/colouring.hpp"
#include "kempe/graph.hpp"

namespace kempe {

/// A graph together with the two colourings drawn for it.
struct ColouredPair {
    Graph graph;
    Colouring left;
    Colouring right;
};

/// A graph with one distinguished colouring (psi for D_q, zeta for Y_r).
struct ColouredGraph {
    Graph graph;
    Colouring colouring;
};

/// Triangles a1a2a3 (0,1,2) and b1b2b3 (3,4,5) with the matching a_i b_i.
ColouredPair gen_prism();
/// Triangle-free 14-vertex graph whose left colouring is Kempe frozen.
ColouredPair gen_fig1();
/// C4-free 15-vertex graph whose left colour classes pairwise induce Hamiltonian paths.
ColouredPair gen_fig2();

/// Complement description of D_q: Hamiltonian cycle u_0..u_{q+1}, v_11..v_q3
/// with chords u_i v_i2 and v_i1 v_i3. Vertex ids follow the cycle order.
Graph dq_complement(int q);
/// D_q with the (2q+1)-colouring psi. Throws InputError for q < 2.
ColouredGraph gen_dq(int q);
/// Vertex ids of u_i and v_ij in D_q.
Vertex dq_u(int q, int i);
Vertex dq_v(int q, int i, int j);

/// Complement description of Y_r: Hamiltonian cycle v_11..v_{2r,3} with chords
/// v_i1 v_i3 and v_i2 v_{i+r,2}.
Graph yr_complement(int r);
/// Y_r with the 3r-colouring zeta. Throws InputError for r < 1.
ColouredGraph gen_yr(int r);
Vertex yr_v(int i, int j);
/// The 2r-colouring of Y_r giving triangle i of the complement colour i-1.
Colouring yr_triangle_colouring(int r);

/// join(C4-free 15-vertex graph, K_{k-3}) with both of its colourings extended by one
/// fresh colour per added clique vertex. Throws InputError for k < 3.
ColouredPair gen_hk(int k);

enum class Op2K2Case { one = 1, two = 2 };

struct Op2K2Input {
    Graph g;
    Colouring beta;   // k colours
    Colouring gamma;  // k + 1 colours, Kempe frozen
    Vertex x = 0;
    Vertex y = 0;
};

struct Op2K2Result {
    /// G plus u = n and v = n + 1.
    Graph graph;
    Colouring beta_prime;
    Colouring gamma_prime;
    Op2K2Case which = Op2K2Case::one;
};

/// Which hypothesis case (x, y) falls under, or nullopt when neither applies.
std::optional<Op2K2Case> op2k2_case(const Colouring& gamma, Vertex x, Vertex y);

/// Validates the hypotheses (throws InputError) and builds G', beta', gamma'.
Op2K2Result apply_op_2k2(const Op2K2Input& input);

struct Op2K2Candidate {
    Vertex x = 0;
    Vertex y = 0;
    Op2K2Case which = Op2K2Case::one;
    /// No edge of G has both ends outside N(x) and N(y) and distinct from x, y.
    bool no_anticomplete_edge = false;
    /// Case 2, or case 1 with no_anticomplete_edge: 2K2-freeness carries over.
    bool preserves_2k2_free = false;
};

/// All nonadjacent pairs x < y meeting the hypotheses.
std::vector<Op2K2Candidate> find_op2k2_candidates(const Graph& g, const Colouring& beta, const Colouring& gamma);

/// A named family member with its canonical colourings, as emitted by the CLI.
struct FamilyInstance {
    std::string name;
    Graph graph;
    std::vector<std::pair<std::string, Colouring>> colourings;
};

/// name in {prism, fig1, fig2, d_q, y_r, h_k}; parameter is q, r or k.
FamilyInstance make_family(const std::string& name, std::optional<int> parameter);

} // namespace kempe
