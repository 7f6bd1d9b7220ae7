#include <stdio.h>
#ifndef N
#define N 64
#endif

static double a[N][N], b[N][N], bt[N][N], c[N][N];

static void init_matrices(void)
{
    int i, j;

    #pragma edpm init
    #pragma edpm start init-matrices cpu, memory
    #pragma edpm start fill-a cpu, memory
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            a[i][j] = (double)((i * 7 + j * 3) % 17) / 16.0;
    #pragma edpm stop fill-a
    #pragma edpm start fill-b cpu, memory
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            b[i][j] = (double)((i * 5 + j * 11) % 13) / 12.0;
    #pragma edpm stop fill-b
    #pragma edpm start clear-c cpu, memory
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            c[i][j] = 0.0;
    #pragma edpm stop clear-c
    #pragma edpm start shift-diagonal cpu, memory
    for (i = 0; i < N; i++)
        a[i][i] += 1.0;
    #pragma edpm stop shift-diagonal
    #pragma edpm stop init-matrices
}

static void multiply(void)
{
    int i, j, k;
    double sum;

    #pragma edpm start multiply cpu, memory
    #pragma edpm start transpose cpu, memory
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            bt[j][i] = b[i][j];
    #pragma edpm stop transpose
    #pragma edpm start multiply-iterated cpu, memory
    for (i = 0; i < N; i++) {
        for (j = 0; j < N; j++) {
            sum = 0.0;
            for (k = 0; k < N; k++)
                sum += a[i][k] * bt[j][k];
            c[i][j] = sum;
        }
    }
    #pragma edpm stop multiply-iterated
    #pragma edpm start halve cpu, memory
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            c[i][j] *= 0.5;
    #pragma edpm stop halve
    #pragma edpm start bump-diagonal cpu, memory
    for (i = 0; i < N; i++)
        c[i][i] += 1.0;
    #pragma edpm stop bump-diagonal
    #pragma edpm stop multiply
}

static double checksum(void)
{
    int i, j;
    double sum = 0.0, trace = 0.0, peak = 0.0, total;

    #pragma edpm start checksum cpu, memory
    #pragma edpm start sum cpu, memory
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            sum += c[i][j];
    #pragma edpm stop sum
    #pragma edpm start trace cpu, memory
    for (i = 0; i < N; i++)
        trace += c[i][i];
    #pragma edpm stop trace
    #pragma edpm start peak cpu, memory
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            if (c[i][j] > peak)
                peak = c[i][j];
    #pragma edpm stop peak
    #pragma edpm start combine cpu, memory
    total = sum + trace / N + peak;
    #pragma edpm stop combine
    #pragma edpm stop checksum
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
