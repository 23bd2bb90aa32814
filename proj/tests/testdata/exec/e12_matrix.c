#include <stdio.h>
#define N 3

int main(void) {
    int a[N][N] = {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
    int b[N][N], c[N][N];
    int i, j, k;
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            b[i][j] = (i == j) ? 2 : 1;
    for (i = 0; i < N; i++) {
        for (j = 0; j < N; j++) {
            c[i][j] = 0;
            for (k = 0; k < N; k++) c[i][j] += a[i][k] * b[k][j];
        }
    }
    for (i = 0; i < N; i++) printf("%d %d %d\n", c[i][0], c[i][1], c[i][2]);
    return 0;
}
