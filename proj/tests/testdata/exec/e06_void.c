#include <stdio.h>

void report(int v) {
    if (v > 10) {
        printf("big %d\n", v);
        return;
    } else {
        printf("small %d\n", v);
        return;
    }
}

void count_down(int n) {
    while (n > 0) {
        printf("%d ", n);
        n--;
    }
    printf("\n");
}

int main() {
    report(3);
    report(30);
    count_down(4);
}
