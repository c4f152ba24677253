#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace gridlocus
{
    /// An element of GF(q), stored as its power-basis coordinates packed base p
    /// (coefficient of x^i is digit i). Zero is code 0.
    struct FieldElem
    {
        std::uint32_t code = 0;

        auto operator<=>(const FieldElem &) const = default;
        [[nodiscard]] auto is_zero() const -> bool { return code == 0; }
    };

    struct EvenOddSplit
    {
        FieldElem ev;    // in F_n
        FieldElem odd;   // in F_n * omega^r
    };

    enum class ArithKind { add, sub, mul, neg, inv, pow };

    /// Largest q for which make_field_context builds tables, unless overridden.
    inline constexpr std::uint32_t default_field_cap = 1u << 16;

    /**
     * GF(q) with q = n^2, n = p^m, p an odd prime, together with the index-r
     * subgroup R = <omega^r> (r = (n+1)/2) and the decomposition of GF(q) over
     * F_n with basis {1, omega^r}.
     *
     * Immutable after construction; safe to share between threads.
     */
    class FieldContext
    {
        public:
            FieldContext(unsigned p, unsigned m, std::uint32_t cap = default_field_cap);

            [[nodiscard]] auto p() const -> unsigned { return _p; }
            [[nodiscard]] auto m() const -> unsigned { return _m; }
            [[nodiscard]] auto n() const -> std::uint32_t { return _n; }
            [[nodiscard]] auto q() const -> std::uint32_t { return _q; }
            [[nodiscard]] auto r() const -> std::uint32_t { return _r; }
            [[nodiscard]] auto degree() const -> unsigned { return 2 * _m; }

            /// Monic modulus, low-degree coefficient first, length degree()+1.
            [[nodiscard]] auto modulus() const -> const std::vector<unsigned> & { return _modulus; }
            [[nodiscard]] auto omega() const -> FieldElem { return _omega; }
            [[nodiscard]] auto zero() const -> FieldElem { return {0}; }
            [[nodiscard]] auto one() const -> FieldElem { return {1}; }

            [[nodiscard]] auto coeffs(FieldElem a) const -> std::vector<unsigned>;
            [[nodiscard]] auto from_coeffs(const std::vector<unsigned> & c) const -> FieldElem;
            /// Embeds an integer as an element of the prime subfield.
            [[nodiscard]] auto from_int(long long v) const -> FieldElem;

            [[nodiscard]] auto add(FieldElem a, FieldElem b) const -> FieldElem;
            [[nodiscard]] auto sub(FieldElem a, FieldElem b) const -> FieldElem;
            [[nodiscard]] auto neg(FieldElem a) const -> FieldElem;
            [[nodiscard]] auto mul(FieldElem a, FieldElem b) const -> FieldElem;
            [[nodiscard]] auto inv(FieldElem a) const -> FieldElem;
            /// a^e for any integer e; negative e requires a != 0. 0^0 = 1.
            [[nodiscard]] auto pow(FieldElem a, long long e) const -> FieldElem;
            /// omega^e, e taken mod q-1.
            [[nodiscard]] auto omega_pow(long long e) const -> FieldElem;

            /// Discrete log base omega, in [0, q-1). Throws DomainError on zero.
            [[nodiscard]] auto dlog(FieldElem a) const -> std::uint32_t;
            [[nodiscard]] auto mult_order(FieldElem a) const -> std::uint32_t;

            [[nodiscard]] auto in_R(FieldElem a) const -> bool
            {
                return a.code != 0 && _log[a.code] % _r == 0;
            }
            [[nodiscard]] auto in_subfield(FieldElem a) const -> bool
            {
                return a.code == 0 || _log[a.code] % (2 * _r) == 0;
            }
            /// Label of the R-coset of a, i.e. dlog(a) mod r.
            [[nodiscard]] auto coset_label(FieldElem a) const -> std::uint32_t;
            [[nodiscard]] auto even_odd_split(FieldElem a) const -> EvenOddSplit { return _split[a.code]; }

            [[nodiscard]] auto arith(ArithKind kind, FieldElem a, FieldElem b) const -> FieldElem;
            [[nodiscard]] auto arith(ArithKind kind, FieldElem a, long long e) const -> FieldElem;

            /// Sort key realising "coefficient vectors compared low-degree first".
            [[nodiscard]] auto lex_key(FieldElem a) const -> std::uint32_t;

        private:
            unsigned _p, _m;
            std::uint32_t _n, _q, _r;
            std::vector<unsigned> _modulus;
            FieldElem _omega;
            std::vector<std::uint32_t> _exp;     // omega^i, i in [0, q-1)
            std::vector<std::uint32_t> _log;     // indexed by code; _log[0] unused
            std::vector<std::uint32_t> _pow_p;   // p^i
            std::vector<EvenOddSplit> _split;
    };

    [[nodiscard]] auto make_field_context(unsigned p, unsigned m, std::uint32_t cap = default_field_cap) -> FieldContext;

    /// Exact primality by trial division.
    [[nodiscard]] auto is_prime(unsigned long long v) -> bool;

    /// Writes n = p^m with p prime, or returns false.
    [[nodiscard]] auto prime_power_decomposition(unsigned long long n, unsigned & p, unsigned & m) -> bool;
}
