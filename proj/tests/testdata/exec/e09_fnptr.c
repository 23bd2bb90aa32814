#include <stdio.h>

int twice(int value) { return 2 * value; }

int square(int value) { return value * value; }

int apply(int (*f)(int), int v) { return f(v); }

int main(void) {
    void *raw = (void *)twice;
    int (*g)(int) = (int (*)(int value))raw;
    int (*table[2])(int) = {twice, square};
    int i, total = 0;
    for (i = 0; i < 2; i++) total += apply(table[i], 7);
    printf("%d %d\n", g(21), total);
    return 0;
}
