#include <stdio.h>

static int calls = 0;

int probe(int v) {
    calls++;
    return v > 2;
}

int main(void) {
    int i, hits = 0, other = 0;
    for (i = 0; i < 6; i++) {
        if (i % 2 == 0) {
            if (i > 1)
                hits++;
        }
        if (i < 5) {
            if (i != 3)
                other += i;
            else
                other -= 100;
        }
        if (probe(i)) {
            if (i == 4)
                hits += 10;
        }
    }
    printf("%d %d %d\n", hits, other, calls);
    return 0;
}
