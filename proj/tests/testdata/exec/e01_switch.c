#include <stdio.h>

int classify(int d) {
    int kind = 0;
    switch (d % 10) {
    case 0:
    case 2:
    case 4:
        kind = 1;
        break;
    case 7:
        kind = 3;
        break;
    case 9:
        return 9;
    default:
        kind = 2;
    }
    return kind;
}

int main(void) {
    int i;
    for (i = 0; i < 12; i++) printf("%d", classify(i));
    printf("\n");
    return 0;
}
