#include <gridlocus/field.hh>
#include <gridlocus/errors.hh>

#include <algorithm>
#include <numeric>
#include <string>

using std::string;
using std::to_string;
using std::uint32_t;
using std::vector;

namespace gridlocus
{
    namespace
    {
        using Poly = vector<unsigned>;   // low-degree coefficient first

        auto trim(Poly & a) -> void
        {
            while (! a.empty() && a.back() == 0)
                a.pop_back();
        }

        // Remainder of a modulo monic-or-not b over F_p; b must be nonzero and trimmed.
        auto poly_mod(Poly a, const Poly & b, unsigned p) -> Poly
        {
            trim(a);
            unsigned lead_inv = 1;
            for (unsigned t = 1 ; t < p ; ++t)
                if ((t * b.back()) % p == 1)
                    lead_inv = t;

            while (a.size() >= b.size()) {
                unsigned factor = (a.back() * lead_inv) % p;
                std::size_t shift = a.size() - b.size();
                for (std::size_t i = 0 ; i < b.size() ; ++i)
                    a[shift + i] = (a[shift + i] + p * p - (factor * b[i]) % p) % p;
                trim(a);
            }
            return a;
        }

        auto is_irreducible(const Poly & f, unsigned p) -> bool
        {
            unsigned d = f.size() - 1;
            for (unsigned k = 1 ; k <= d / 2 ; ++k) {
                unsigned long long count = 1;
                for (unsigned i = 0 ; i < k ; ++i)
                    count *= p;
                for (unsigned long long t = 0 ; t < count ; ++t) {
                    Poly g(k + 1, 0);
                    g[k] = 1;
                    unsigned long long v = t;
                    for (unsigned i = 0 ; i < k ; ++i) {
                        g[i] = v % p;
                        v /= p;
                    }
                    if (poly_mod(f, g, p).empty())
                        return false;
                }
            }
            return true;
        }

        // Coefficient vector number `index` in lexicographic order with c_0 most significant.
        auto lex_vector(unsigned long long index, unsigned len, unsigned p) -> Poly
        {
            Poly c(len, 0);
            for (unsigned i = len ; i-- > 0 ; ) {
                c[i] = index % p;
                index /= p;
            }
            return c;
        }

        auto prime_factors(unsigned long long v) -> vector<unsigned long long>
        {
            vector<unsigned long long> result;
            for (unsigned long long f = 2 ; f * f <= v ; ++f)
                if (v % f == 0) {
                    result.push_back(f);
                    while (v % f == 0)
                        v /= f;
                }
            if (v > 1)
                result.push_back(v);
            return result;
        }

        struct PolyField
        {
            Poly modulus;
            unsigned p;

            auto mul(const Poly & a, const Poly & b) const -> Poly
            {
                Poly prod(a.size() + b.size(), 0);
                for (std::size_t i = 0 ; i < a.size() ; ++i)
                    for (std::size_t j = 0 ; j < b.size() ; ++j)
                        prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
                return poly_mod(prod, modulus, p);
            }

            auto pow(Poly a, unsigned long long e) const -> Poly
            {
                Poly result{ 1 };
                while (e > 0) {
                    if (e & 1)
                        result = mul(result, a);
                    a = mul(a, a);
                    e >>= 1;
                }
                return result;
            }
        };
    }

    auto is_prime(unsigned long long v) -> bool
    {
        if (v < 2)
            return false;
        for (unsigned long long f = 2 ; f * f <= v ; ++f)
            if (v % f == 0)
                return false;
        return true;
    }

    auto prime_power_decomposition(unsigned long long n, unsigned & p, unsigned & m) -> bool
    {
        if (n < 2)
            return false;
        unsigned long long f = 2;
        while (n % f != 0)
            ++f;
        unsigned k = 0;
        while (n % f == 0) {
            n /= f;
            ++k;
        }
        if (n != 1)
            return false;
        p = f;
        m = k;
        return true;
    }

    FieldContext::FieldContext(unsigned p, unsigned m, uint32_t cap) :
        _p(p),
        _m(m)
    {
        if (p == 2 || ! is_prime(p))
            throw InvalidParameter("p must be an odd prime, got " + to_string(p));
        if (m == 0)
            throw InvalidParameter("m must be positive");

        unsigned long long n = 1;
        for (unsigned i = 0 ; i < m ; ++i) {
            n *= p;
            if (n * n > cap)
                throw CapacityError("field of order " + to_string(p) + "^" + to_string(2 * m)
                        + " exceeds the table cap of " + to_string(cap));
        }
        _n = n;
        _q = n * n;
        _r = (_n + 1) / 2;

        unsigned d = 2 * m;
        _pow_p.resize(d + 1);
        _pow_p[0] = 1;
        for (unsigned i = 1 ; i <= d ; ++i)
            _pow_p[i] = _pow_p[i - 1] * p;

        // smallest monic irreducible of degree d, coefficients c_0..c_{d-1} compared low degree first
        for (unsigned long long index = 0 ; ; ++index) {
            Poly f = lex_vector(index, d, p);
            f.push_back(1);
            if (is_irreducible(f, p)) {
                _modulus = f;
                break;
            }
        }

        PolyField pf{ _modulus, p };
        auto factors = prime_factors(_q - 1);
        for (unsigned long long index = 1 ; index < _q ; ++index) {
            Poly a = lex_vector(index, d, p);
            bool primitive = true;
            for (auto f : factors) {
                Poly t = pf.pow(a, (_q - 1) / f);
                if (t.size() == 1 && t[0] == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) {
                _omega = from_coeffs(a);
                break;
            }
        }

        _exp.resize(_q - 1);
        _log.assign(_q, 0);
        Poly omega_poly = coeffs(_omega);
        Poly power{ 1 };
        for (uint32_t i = 0 ; i < _q - 1 ; ++i) {
            Poly padded = power;
            padded.resize(d, 0);
            uint32_t code = from_coeffs(padded).code;
            _exp[i] = code;
            _log[code] = i;
            power = pf.mul(power, omega_poly);
        }

        // a + b*omega^r for a, b in F_n
        _split.assign(_q, EvenOddSplit{});
        vector<FieldElem> subfield{ zero() };
        for (uint32_t k = 0 ; k < _n - 1 ; ++k)
            subfield.push_back(omega_pow(static_cast<long long>(2 * _r) * k));
        FieldElem omega_r = omega_pow(_r);
        vector<char> seen(_q, 0);
        for (auto a : subfield)
            for (auto b : subfield) {
                FieldElem odd = mul(b, omega_r);
                FieldElem sum = add(a, odd);
                if (seen[sum.code])
                    throw DomainError("{1, omega^r} is not a basis over F_n");
                seen[sum.code] = 1;
                _split[sum.code] = EvenOddSplit{ a, odd };
            }
    }

    auto make_field_context(unsigned p, unsigned m, uint32_t cap) -> FieldContext
    {
        return FieldContext(p, m, cap);
    }

    auto FieldContext::coeffs(FieldElem a) const -> vector<unsigned>
    {
        vector<unsigned> c(degree(), 0);
        uint32_t v = a.code;
        for (unsigned i = 0 ; i < degree() ; ++i) {
            c[i] = v % _p;
            v /= _p;
        }
        return c;
    }

    auto FieldContext::from_coeffs(const vector<unsigned> & c) const -> FieldElem
    {
        uint32_t code = 0;
        for (unsigned i = 0 ; i < degree() && i < c.size() ; ++i)
            code += (c[i] % _p) * _pow_p[i];
        return { code };
    }

    auto FieldContext::from_int(long long v) const -> FieldElem
    {
        long long r = v % static_cast<long long>(_p);
        if (r < 0)
            r += _p;
        return { static_cast<uint32_t>(r) };
    }

    auto FieldContext::add(FieldElem a, FieldElem b) const -> FieldElem
    {
        uint32_t x = a.code, y = b.code, out = 0;
        for (unsigned i = 0 ; i < degree() && (x | y) ; ++i) {
            uint32_t s = x % _p + y % _p;
            if (s >= _p)
                s -= _p;
            out += s * _pow_p[i];
            x /= _p;
            y /= _p;
        }
        return { out };
    }

    auto FieldContext::neg(FieldElem a) const -> FieldElem
    {
        uint32_t x = a.code, out = 0;
        for (unsigned i = 0 ; i < degree() && x ; ++i) {
            uint32_t c = x % _p;
            if (c != 0)
                out += (_p - c) * _pow_p[i];
            x /= _p;
        }
        return { out };
    }

    auto FieldContext::sub(FieldElem a, FieldElem b) const -> FieldElem
    {
        return add(a, neg(b));
    }

    auto FieldContext::mul(FieldElem a, FieldElem b) const -> FieldElem
    {
        if (a.code == 0 || b.code == 0)
            return zero();
        uint32_t e = _log[a.code] + _log[b.code];
        if (e >= _q - 1)
            e -= _q - 1;
        return { _exp[e] };
    }

    auto FieldContext::inv(FieldElem a) const -> FieldElem
    {
        if (a.code == 0)
            throw DomainError("inversion of zero");
        uint32_t e = _log[a.code];
        return { _exp[e == 0 ? 0 : _q - 1 - e] };
    }

    auto FieldContext::pow(FieldElem a, long long e) const -> FieldElem
    {
        if (a.code == 0) {
            if (e < 0)
                throw DomainError("negative power of zero");
            return e == 0 ? one() : zero();
        }
        long long order = _q - 1;
        long long t = (static_cast<long long>(_log[a.code]) * (e % order)) % order;
        if (t < 0)
            t += order;
        return { _exp[t] };
    }

    auto FieldContext::omega_pow(long long e) const -> FieldElem
    {
        long long order = _q - 1;
        long long t = e % order;
        if (t < 0)
            t += order;
        return { _exp[t] };
    }

    auto FieldContext::dlog(FieldElem a) const -> uint32_t
    {
        if (a.code == 0)
            throw DomainError("discrete log of zero");
        return _log[a.code];
    }

    auto FieldContext::mult_order(FieldElem a) const -> uint32_t
    {
        if (a.code == 0)
            throw DomainError("multiplicative order of zero");
        return (_q - 1) / std::gcd(_log[a.code], _q - 1);
    }

    auto FieldContext::coset_label(FieldElem a) const -> uint32_t
    {
        if (a.code == 0)
            throw DomainError("coset label of zero");
        return _log[a.code] % _r;
    }

    auto FieldContext::arith(ArithKind kind, FieldElem a, FieldElem b) const -> FieldElem
    {
        switch (kind) {
            case ArithKind::add: return add(a, b);
            case ArithKind::sub: return sub(a, b);
            case ArithKind::mul: return mul(a, b);
            case ArithKind::neg: return neg(a);
            case ArithKind::inv: return inv(a);
            case ArithKind::pow: break;
        }
        throw InvalidParameter("pow takes an integer exponent");
    }

    auto FieldContext::arith(ArithKind kind, FieldElem a, long long e) const -> FieldElem
    {
        if (kind != ArithKind::pow)
            throw InvalidParameter("integer operand is only valid for pow");
        return pow(a, e);
    }

    auto FieldContext::lex_key(FieldElem a) const -> uint32_t
    {
        uint32_t key = 0, v = a.code;
        for (unsigned i = 0 ; i < degree() ; ++i) {
            key = key * _p + v % _p;
            v /= _p;
        }
        return key;
    }
}
