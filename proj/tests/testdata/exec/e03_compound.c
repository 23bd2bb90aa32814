#include <stdio.h>

int main(void) {
    int x = 100, arr[4] = {1, 2, 3, 4}, i = 0;
    unsigned u = 0xF0u;
    x += 5; x -= 3; x *= 2; x /= 4; x %= 13;
    u <<= 2; u >>= 1; u &= 0x1FFu; u |= 3u; u ^= 0x55u;
    arr[i++] += 10;
    arr[i] *= x;
    printf("%d %u %d %d %d\n", x, u, arr[0], arr[1], i);
    return 0;
}
