#include <stdio.h>

static int counter;
int limit = 3;

int next_id(void) {
    static int id = 100;
    return id++;
}

void bump(void) {
    counter++;
    if (counter > limit) counter = 0;
}

int main(void) {
    int i;
    for (i = 0; i < 5; i++) bump();
    printf("%d %d %d\n", counter, next_id(), next_id());
    return 0;
}
