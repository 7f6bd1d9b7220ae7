#include <stdio.h>
#ifndef N
#define N 64
#endif

static double a[N][N], b[N][N], bt[N][N], c[N][N];

static void init_matrices(void)
{
    int i, j;

    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            a[i][j] = (double)((i * 7 + j * 3) % 17) / 16.0;
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            b[i][j] = (double)((i * 5 + j * 11) % 13) / 12.0;
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            c[i][j] = 0.0;
    for (i = 0; i < N; i++)
        a[i][i] += 1.0;
}

static void multiply(void)
{
    int i, j, k;
    double sum;

    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            bt[j][i] = b[i][j];
    for (i = 0; i < N; i++) {
        for (j = 0; j < N; j++) {
            sum = 0.0;
            for (k = 0; k < N; k++)
                sum += a[i][k] * bt[j][k];
            c[i][j] = sum;
        }
    }
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            c[i][j] *= 0.5;
    for (i = 0; i < N; i++)
        c[i][i] += 1.0;
}

static double checksum(void)
{
    int i, j;
    double sum = 0.0, trace = 0.0, peak = 0.0, total;

    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            sum += c[i][j];
    for (i = 0; i < N; i++)
        trace += c[i][i];
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            if (c[i][j] > peak)
                peak = c[i][j];
    total = sum + trace / N + peak;
    return total;
}

int main(void)
{
    double result;

    #pragma edpm init
    #pragma edpm start init-matrices-call cpu(cycles), memory(stores)
    init_matrices();
    #pragma edpm stop init-matrices-call
    #pragma edpm start multiply-call memory, cache(l1-stores)
    multiply();
    #pragma edpm stop multiply-call
    #pragma edpm start checksum-call cpu(instructions), branch(conditional)
    result = checksum();
    #pragma edpm stop checksum-call
    #pragma edpm deinit
    printf("checksum %.6f\n", result);
    return 0;
}
