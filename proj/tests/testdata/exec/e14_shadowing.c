#include <stdio.h>

int x = 1;

int f(int x) {
    {
        int x = 30;
        x++;
    }
    return x * 2;
}

int main(void) {
    int total = x;
    {
        int x = 10;
        total += x;
        {
            int x = 100;
            total += x;
        }
        total += x;
    }
    for (int x = 0; x < 3; x++) total += x;
    printf("%d %d %d\n", total, f(5), x);
    return 0;
}
