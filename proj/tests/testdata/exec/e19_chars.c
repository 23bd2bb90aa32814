#include <stdio.h>

char rotate(char c, int k) {
    if (c >= 'a' && c <= 'z') return (char)('a' + (c - 'a' + k) % 26);
    if (c >= 'A' && c <= 'Z') return (char)('A' + (c - 'A' + k) % 26);
    return c;
}

int main(void) {
    const char *text = "Hello, World! \"quoted\"\t\\";
    int i;
    for (i = 0; text[i]; i++) putchar(rotate(text[i], 13));
    putchar('\n');
    printf("%d %d\n", '\n', '\'');
    return 0;
}
