#include <stdio.h>
#include <stddef.h>

typedef unsigned long long big_t;
typedef int score;

big_t factorial(int n) {
    big_t r = 1;
    int i;
    for (i = 2; i <= n; i++) r *= (big_t)i;
    return r;
}

int main(void) {
    score s = 42;
    long long int w = -123456789012LL;
    size_t z = sizeof(big_t);
    short int h = 7;
    printf("%llu %d %lld %lu %d\n", factorial(15), s, w, (unsigned long)z, h);
    return 0;
}
