#include <stdio.h>

void swap(int *p, int *q) {
    int t = *p;
    *p = *q;
    *q = t;
}

int sum(const int *begin, const int *end) {
    int s = 0;
    while (begin != end) s += *begin++;
    return s;
}

int main(void) {
    int v[5] = {5, 4, 3, 2, 1};
    int *p = v, *q = v + 4;
    while (p < q) swap(p++, q--);
    printf("%d %d %d %d\n", v[0], v[4], sum(v, v + 5), (int)(q - v));
    return 0;
}
