#include <stdio.h>

int main(void) {
    int a, b, c;
    a = 1, b = 2, c = 3;
    for (a = 0, b = 10; a < b; a++, b--)
        c += a * b;
    printf("%d %d %d\n", a, b, c);
    return 0;
}
