#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "ldal/certificate.hpp"
#include "ldal/graph.hpp"
#include "ldal/labeling.hpp"
#include "ldal/oracle.hpp"

namespace ldal {

// Every labeler below verifies its own output before returning: the labeling
// must be a bijection, locally distance antimagic, and meet its colour claim.
// A failed self-check throws SelfCheckError. Hypothesis failures throw
// HypothesisError, bad parameters ParameterError, and parameter regions with
// no construction NotCoveredError.

/// K_{p-1} + K̄_{n-p+1} with exactly p colours. 2 <= p <= n.
Certificate label_clique_plus_empty(int n, int p);

/// K_{x1..x_{p-1}, n - sum}; labeled by the oracle (or identity when p = n).
Certificate label_multipartite_solution2(int n, int p, std::span<const int> sizes, const SearchBudget& budget = {});

/// The join inequality exactly as stated, for |G| = n <= |H| = m.
/// Throws ParameterError when n > m.
bool check_join_condition(long long n, long long m, long long delta_h, long long delta_g);

/// Same shape as check_join_condition with 2nm replaced by nm, which is what
/// the weight bounds actually need. Throws ParameterError when n > m.
bool check_join_separation(long long n, long long m, long long delta_h, long long delta_g);

/// G + H with f on G (labels 1..n) and g + n on H. Requires |G| <= |H|,
/// valid ingredient labelings, the join inequality, and that the actual
/// weights separate the two sides.
Certificate label_join(const Graph& g, const Labeling& f, const Graph& h, const Labeling& gl);

/// Identity labeling of F_n (centre 1, u_i = 2i, v_i = 2i+1); 2n+1 colours.
Certificate label_friendship(int n);
/// B_{m,n} with centres labeled 1, 2; 4 colours.
Certificate label_bistar(int m, int n);
/// F_n + K̄_m with 2n+2 colours.
Certificate label_friendship_join_empty(int n, int m);
/// F_n + B_{n,n} with 2n+5 colours.
Certificate label_friendship_join_bistar(int n);

/// G[K̄n] via g(v_i^j) = i + (f(v_j) - 1) n.
Certificate label_lexi_lift(const Graph& g, const Labeling& f, int n);
/// Balanced r-regular bipartite G; 2 colours.
Certificate label_regular_bipartite_lexi(const Graph& g, int n);
/// Bipartite G whose sides have different uniform degrees; 2 colours.
Certificate label_biregular_bipartite_lexi(const Graph& g, int n);
/// P_m[K̄n].
Certificate label_path_lexi(int m, int n);
/// Colour count label_path_lexi promises.
int path_lexi_claim(int m, int n);
/// C_m[K̄n]. Odd m not divisible by 3 with n = 2 falls back to the oracle
/// (when the order fits `budget`) and otherwise throws NotCoveredError.
Certificate label_cycle_lexi(int m, int n, const SearchBudget& budget = {});
/// 2r-regular G with colour classes `classes` (values 0, 1, 2); 3 colours.
Certificate label_2r_regular_3chromatic_lexi(const Graph& g, std::span<const int> classes, int n);
/// A class assignment meeting the hypotheses above, or empty.
std::vector<int> find_split_3_coloring(const Graph& g, int n);
/// Km[H] via g(y_i^j) = f(y_i) + (j-1) n, H r-regular.
Certificate label_complete_lexi(int m, const Graph& h, const Labeling& f);
/// (G + K1)[K̄n] = G[K̄n] + K̄n, with K̄n on the low labels.
Certificate label_lexi_join_plus_one(const Graph& g, int n);
/// The inequality guarding label_lexi_join_plus_one (m = |G|).
bool check_lexi_join_condition(long long m, long long n, long long delta);
/// G[K̄n] by whichever construction applies to G.
Certificate label_lexi_auto(const Graph& g, int n);

struct ConstructionRequest {
  std::string theorem;
  std::map<std::string, std::string> params;
};

/// Dispatches by identifier (see construction_ids()). Graph parameters take
/// either a file path or a family expression; labeling parameters take a file
/// path. Missing ingredient labelings come from the oracle.
Certificate construct(const ConstructionRequest& request, const SearchBudget& budget = {});
std::vector<std::string> construction_ids();

}  // namespace ldal
