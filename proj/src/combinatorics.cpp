#include "wz/combinatorics.hpp"

namespace wz::combinatorics {

BigInt factorial(unsigned long n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(unsigned long n, unsigned long k)
{
    if (k > n) {
        return 0;
    }
    BigInt q = factorial(n);
    const BigInt d = factorial(k) * factorial(n - k);
    mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), d.get_mpz_t());
    return q;
}

} // namespace wz::combinatorics
