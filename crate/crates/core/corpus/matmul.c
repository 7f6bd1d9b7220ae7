#include <stdio.h>
#include <stdlib.h>

#ifndef N
#define N 64
#endif

static double a[N][N], b[N][N], c[N][N];

int main(void)
{
    int i, j, k;
    double sum, check = 0.0;

    for (i = 0; i < N; i++) {
        for (j = 0; j < N; j++) {
            a[i][j] = (double)((i + 2 * j) % 10) / 10.0;
            b[i][j] = (double)((3 * i + j) % 7) / 7.0;
        }
    }

#pragma edpm init
#pragma edpm start for-iterated branch
    for (i = 0; i < N; i++) {
#pragma edpm start multiply-iterated memory, cache(l2-stores)
        for (j = 0; j < N; j++) {
            sum = 0.0;
            for (k = 0; k < N; k++)
                sum += a[i][k] * b[k][j];
            c[i][j] = sum;
        }
#pragma edpm stop multiply-iterated
    }
#pragma edpm stop for-iterated
#pragma edpm deinit

    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            check += c[i][j];
    printf("checksum %.6f\n", check);
    return EXIT_SUCCESS;
}
