#include <stdio.h>

int main(int argc, char **argv) {
    int i, len = 0;
    for (i = 0; argv[0][i] != '\0'; i++) len++;
    printf("%d %d\n", argc, len > 0);
    return 0;
}
