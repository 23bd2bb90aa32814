#include <stdio.h>
#define A 252
#define B 105

int main(void) {
    int u = A, v = B, rem;
    do {
        rem = u % v;
        u = v, v = rem;
    } while (v);
    switch (u) {
    case 21:
        puts("21");
        break;
    default:
        printf("%d\n", u);
    }
    return 0;
}
