#include <stdio.h>

/* Recursive version with a wide integer type. */
long long euclid(long long x, long long y)
{
  return y == 0 ? x : euclid(y, x % y);
}

int main(int argc, char **argv)
{
  long long first = 252, second = 105;
  printf("%lld\n", euclid(first, second));
  return 0;
}
