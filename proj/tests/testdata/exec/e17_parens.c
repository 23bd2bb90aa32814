#include <stdio.h>

int main(void) {
    int a = 6, b = 3, c = 5;
    int r1 = (a + b) * c;
    int r2 = (a * b) + c;
    int r3 = ((a << 2)) | (b & c);
    int r4 = (a > b) ? (a - b) : (b - a);
    int r5 = -(a - b) - (c - (a - b));
    int r6 = (a = 2, a + 1);
    int r7 = !(a == b) && (c > 0 || (b < 0));
    printf("%d %d %d %d %d %d %d\n", r1, r2, r3, r4, r5, r6, (r7));
    return (0);
}
