#include <stdio.h>

int fib(int n) { return n < 2 ? n : fib(n - 1) + fib(n - 2); }

void hanoi(int n, char from, char to, char via, int *moves) {
    if (n == 0) return;
    hanoi(n - 1, from, via, to, moves);
    (*moves)++;
    hanoi(n - 1, via, to, from, moves);
}

int main(void) {
    int moves = 0;
    hanoi(6, 'a', 'c', 'b', &moves);
    printf("%d %d\n", fib(16), moves);
    return 0;
}
