#include <stdio.h>

int main(void) {
    int n = 27, steps = 0, odd = 0, i = 0;
    do {
        n = n % 2 ? 3 * n + 1 : n / 2;
        steps++;
    } while (n != 1);
    while (i < 20) {
        i++;
        if (i % 2 == 0) continue;
        odd += i;
    }
    printf("%d %d\n", steps, odd);
    return 0;
}
