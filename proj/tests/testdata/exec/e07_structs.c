#include <stdio.h>

struct point {
    int x;
    int y;
};

struct rect {
    struct point lo;
    struct point hi;
};

int area(const struct rect *r) {
    return (r->hi.x - r->lo.x) * (r->hi.y - r->lo.y);
}

void shift(struct point *p, int dx, int dy) {
    p->x += dx;
    p->y += dy;
}

int main(void) {
    struct rect r;
    r.lo.x = 1; r.lo.y = 2;
    r.hi.x = 6; r.hi.y = 9;
    shift(&r.hi, 2, -1);
    printf("%d %d %d\n", area(&r), r.hi.x, r.hi.y);
    return 0;
}
