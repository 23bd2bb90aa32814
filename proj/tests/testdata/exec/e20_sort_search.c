#include <stdio.h>

void insertion_sort(int *a, int n) {
    int i, j, key;
    for (i = 1; i < n; i++) {
        key = a[i];
        j = i - 1;
        while (j >= 0 && a[j] > key) {
            a[j + 1] = a[j];
            j--;
        }
        a[j + 1] = key;
    }
}

int find(const int *a, int n, int target) {
    int lo = 0, hi = n - 1, mid;
    while (lo <= hi) {
        mid = (lo + hi) / 2;
        if (a[mid] == target) return mid;
        else if (a[mid] < target) lo = mid + 1;
        else hi = mid - 1;
    }
    return -1;
}

int main(void) {
    int data[8] = {42, 7, 19, 3, 88, 23, 11, 56};
    int i;
    insertion_sort(data, 8);
    for (i = 0; i < 8; i++) printf("%d ", data[i]);
    printf("\n%d %d\n", find(data, 8, 23), find(data, 8, 5));
    return 0;
}
