/* io: inputs=3 outputs=5 */
#include <stdio.h>
int gcd(int a, int b)
{
    if (b == 0)
        return a;
    return gcd(b, a % b);
}
int is_prime(int value)
{
    int divisor;
    if (value < 2)
        return 0;
    for (divisor = 2; divisor * divisor <= value; divisor = divisor + 1)
    {
        if (value % divisor == 0)
            return 0;
    }
    return 1;
}
int main()
{
    int lo, hi, swap, i, primes, common;
    scanf("%d %d", &lo, &hi);
    if (lo > hi)
    {
        swap = lo;
        lo = hi;
        hi = swap;
    }
    primes = 0;
    for (i = lo; i <= hi; i = i + 1)
    {
        if (is_prime(i))
        {
            primes = primes + 1;
            if (primes % 10 == 0)
                printf("another ten primes\n");
        }
    }
    common = gcd(lo, hi);
    printf("range %d to %d\n", lo, hi);
    printf("primes %d\n", primes);
    printf("gcd %d\n", common);
    printf("ratio %d\n", primes * 100 / (hi - lo + 1));
    return 0;
}
