#include <stdio.h>

int sign(int v) {
    if (v < 0)
        return -1;
    if (v == 0) {
        return 0;
    }
    return 1;
}

int first_multiple(int step, int limit) {
    int i;
    for (i = 1; i < limit; i++) {
        if (i % step != 0)
            continue;
        if (i > 20)
            break;
        printf("%d ", i);
    }
    return i;
}

int main(void) {
    printf("%d %d %d\n", sign(-5), sign(0), sign(7));
    printf("%d\n", first_multiple(7, 40));
    return 0;
}
