#pragma once

#include <gridlocus/field.hh>
#include <gridlocus/graph.hh>

#include <compare>
#include <vector>

namespace gridlocus
{
    /// The vector a*e + b*f in GF(q)^2, relative to a symplectic basis {e, f}.
    struct SymVector
    {
        FieldElem a, b;

        auto operator<=>(const SymVector &) const = default;
        [[nodiscard]] auto is_zero() const -> bool { return a.is_zero() && b.is_zero(); }
    };

    /// A vertex Ru of the graph, held as the canonical member of the coset Ru: the
    /// first nonzero coordinate is omega^j with 0 <= j < r.
    struct VertexId
    {
        SymVector rep;

        auto operator<=>(const VertexId &) const = default;
    };

    [[nodiscard]] auto symplectic_form(const FieldContext & ctx, SymVector u, SymVector v) -> FieldElem;
    [[nodiscard]] auto canonical_vertex(const FieldContext & ctx, SymVector u) -> VertexId;
    [[nodiscard]] auto adjacent(const FieldContext & ctx, VertexId u, VertexId v) -> bool;

    [[nodiscard]] auto gamma_vertex_count(const FieldContext & ctx) -> long long;
    /// Position of a vertex in build_gamma's ordering; Re is vertex 0.
    [[nodiscard]] auto gamma_index(const FieldContext & ctx, VertexId v) -> int;
    [[nodiscard]] auto gamma_vertex(const FieldContext & ctx, int index) -> VertexId;

    [[nodiscard]] auto build_gamma(const FieldContext & ctx) -> Graph;
    [[nodiscard]] auto build_gamma(const FieldContext & ctx, int cap) -> Graph;

    /// { R'u : R' an R-coset }, sorted, size r.
    [[nodiscard]] auto antipodal_block_of(const FieldContext & ctx, VertexId u) -> std::vector<VertexId>;

    /// Predicted adjacency of R(alpha e + f) and R(alpha' e + f) inside the neighbourhood of Re.
    [[nodiscard]] auto neighbourhood_adjacency_oracle(const FieldContext & ctx, FieldElem alpha, FieldElem alpha_prime) -> bool;

    /// Predicted cycle structure of mu(Re, R beta^-1 f) for beta outside R and nonzero.
    [[nodiscard]] auto mu_cycle_oracle(const FieldContext & ctx, FieldElem beta) -> CycleProfile;

    struct DivisorWitness
    {
        VertexId x, y;
        FieldElem beta;
    };

    /// x = Re, y = R beta^-1 f with beta = 1 + omega^(-r d); d odd, d | n-1.
    [[nodiscard]] auto realize_divisor(const FieldContext & ctx, int d) -> DivisorWitness;

    struct LocalMuCheck
    {
        bool agrees = false;
        int mu_order = 0;
        CycleProfile observed;
        CycleProfile predicted;
    };

    /// Enumerates Gamma(Re) n Gamma(R beta^-1 f) straight from the adjacency rule, without
    /// building the graph, and compares its cycle structure with mu_cycle_oracle.
    [[nodiscard]] auto local_mu_crosscheck(const FieldContext & ctx, FieldElem beta) -> LocalMuCheck;

    /// Odd divisors of v in increasing order.
    [[nodiscard]] auto odd_divisors(long long v) -> std::vector<long long>;
}
