#include "ldal/closed_forms.hpp"

namespace ldal {

namespace {
Weight tri(Weight x) { return x * (x + 1) / 2; }
// Column sum of an n x k block on {1..nk}.
Weight col(Weight n, Weight k) { return n * (n * k + 1) / 2; }
}  // namespace

Weight clique_plus_empty_independent_weight(int p) { return tri(p - 1); }

Weight clique_plus_empty_clique_weight(int n, int p, Label f) {
  return tri(p - 1) - f + static_cast<Weight>(n - p + 1) * (n + p) / 2;
}

Weight join_low_weight(Weight w, int a, int b) { return w + tri(b) + static_cast<Weight>(a) * b; }

Weight join_high_weight(Weight w, int degree, int a) { return w + tri(a) + static_cast<Weight>(a) * degree; }

Weight lexi_lift_weight(int n, int degree, Weight wf) {
  const Weight N = n;
  return tri(N) * degree + (wf - degree) * N * N;
}

std::array<Weight, 2> regular_bipartite_weights(int n, int s, int r) {
  const Weight N = n, S = s, R = r;
  if (n % 2 == 0) return {R * (col(N, S) + N * N * S), R * col(N, S)};
  return {R * (S * N * N + 4 * S + N - 2), R * (S * N * N - 4 * S + 2)};
}

std::array<Weight, 2> complete_bipartite_weights(int a, int b, int n) {
  const Weight A = a, B = b, N = n;
  return {tri(B * N) + A * B * N * N, tri(A * N)};
}

Weight biregular_weight(int n, int m, int degree) { return degree * col(n, m); }

Weight complete_lexi_weight(int n, int m, int r, Weight wf, int j) {
  const Weight N = n, M = m;
  return N * (M - 1) * (N * M + N + 1) / 2 + wf - (j - 1) * N * (N - r);
}

std::array<Weight, 3> tripartite_weights(int n, int k, int s, int t, int r) {
  const Weight N = n;
  const Weight c1 = col(N, k);
  const Weight c2 = col(N, s) + N * N * k;
  const Weight c3 = col(N, t) + N * N * (k + s);
  return {r * (c2 + c3), r * (c1 + c3), r * (c1 + c2)};
}

}  // namespace ldal
