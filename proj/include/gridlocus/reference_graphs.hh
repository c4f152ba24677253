#pragma once

#include <gridlocus/graph.hh>

namespace gridlocus
{
    /// J(v, k): k-subsets of {0..v-1}, adjacent when they meet in k-1 points.
    /// Labels are the sorted members, e.g. "0 2 5".
    [[nodiscard]] auto johnson(int v, int k) -> Graph;

    /// K_m x K_n on cells (i, j), vertex i*n + j, labelled "i,j".
    [[nodiscard]] auto rook_grid(int m, int n) -> Graph;
    [[nodiscard]] auto rook_complement(int n) -> Graph;

    /// J(2k, k) with complementary k-sets identified; each class is labelled by
    /// the member containing 0.
    [[nodiscard]] auto halved_antipodal_johnson(int v, int k) -> Graph;

    [[nodiscard]] auto complete_graph(int n) -> Graph;
    [[nodiscard]] auto cycle_graph(int n) -> Graph;
    [[nodiscard]] auto path_graph(int n) -> Graph;
    [[nodiscard]] auto petersen_graph() -> Graph;
}
