#include <stdio.h>
#include <stdlib.h>

// Subtraction only, no modulo.
unsigned int common_divisor(unsigned int m, unsigned int n) {
	for (; m != n;)
		if (m > n)
			m -= n;
		else
			n -= m;
	return m;
}

int main() {
	unsigned int r = common_divisor(252u, 105u);
	printf("%u\n", r);
}
