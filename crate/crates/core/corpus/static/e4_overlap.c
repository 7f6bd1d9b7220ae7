#include <stdio.h>
#ifndef N
#define N 64
#endif

static double a[N][N], b[N][N], bt[N][N], c[N][N];

static void init_matrices(void)
{
    int i, j;

    #pragma edpm init
    #pragma edpm start init-matrices-front cpu, memory
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            a[i][j] = (double)((i * 7 + j * 3) % 17) / 16.0;
    #pragma edpm start init-matrices-middle cpu, memory
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            b[i][j] = (double)((i * 5 + j * 11) % 13) / 12.0;
    #pragma edpm stop init-matrices-front
    #pragma edpm start init-matrices-back cpu, memory
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            c[i][j] = 0.0;
    #pragma edpm stop init-matrices-middle
    for (i = 0; i < N; i++)
        a[i][i] += 1.0;
    #pragma edpm stop init-matrices-back
}

static void multiply(void)
{
    int i, j, k;
    double sum;

    #pragma edpm start multiply-front cpu, memory
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            bt[j][i] = b[i][j];
    #pragma edpm start multiply-middle cpu, memory
    for (i = 0; i < N; i++) {
        for (j = 0; j < N; j++) {
            sum = 0.0;
            for (k = 0; k < N; k++)
                sum += a[i][k] * bt[j][k];
            c[i][j] = sum;
        }
    }
    #pragma edpm stop multiply-front
    #pragma edpm start multiply-back cpu, memory
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            c[i][j] *= 0.5;
    #pragma edpm stop multiply-middle
    for (i = 0; i < N; i++)
        c[i][i] += 1.0;
    #pragma edpm stop multiply-back
}

static double checksum(void)
{
    int i, j;
    double sum = 0.0, trace = 0.0, peak = 0.0, total;

    #pragma edpm start checksum-front cpu, memory
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            sum += c[i][j];
    #pragma edpm start checksum-middle cpu, memory
    for (i = 0; i < N; i++)
        trace += c[i][i];
    #pragma edpm stop checksum-front
    #pragma edpm start checksum-back cpu, memory
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            if (c[i][j] > peak)
                peak = c[i][j];
    #pragma edpm stop checksum-middle
    total = sum + trace / N + peak;
    #pragma edpm stop checksum-back
    #pragma edpm deinit
    return total;
}

int main(void)
{
    double result;

    init_matrices();
    multiply();
    result = checksum();
    printf("checksum %.6f\n", result);
    return 0;
}
