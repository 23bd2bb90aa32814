#include <stdio.h>
#include <string.h>

static const char *greeting = "hello";

int count(const char *s, char c) {
    int n = 0;
    while (*s) {
        if (*s == c) n++;
        s++;
    }
    return n;
}

int main(void) {
    char name[] = "world";
    char buf[64];
    const char *msg = "a longer message with several words";
    strcpy(buf, greeting);
    strcat(buf, " ");
    strcat(buf, name);
    printf("%s (%d)\n", buf, (int)strlen(buf));
    printf("%d %d\n", (int)strlen("tab\tand\nnewline"), (int)sizeof("abc"));
    printf("%d %d\n", strcmp(greeting, "hello") == 0, count(msg, 'e'));
    printf("[%s]\n", "");
    puts("done");
    return 0;
}
