#include <stdio.h>
#include <stdlib.h>
#include <papi.h>

/* Counters come from PAPI_EVENTS=PAPI_TOT_CYC,PAPI_TOT_INS,PAPI_LD_INS,PAPI_SR_INS */
static void check(int rc, const char *what)
{
    if (rc != PAPI_OK) {
        fprintf(stderr, "%s failed\n", what);
        exit(1);
    }
}

#ifndef N
#define N 64
#endif

static double a[N][N], b[N][N], bt[N][N], c[N][N];

static void init_matrices(void)
{
    int i, j;

    check(PAPI_hl_region_begin("fill-a"), "fill-a");
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            a[i][j] = (double)((i * 7 + j * 3) % 17) / 16.0;
    check(PAPI_hl_region_end("fill-a"), "fill-a");
    check(PAPI_hl_region_begin("fill-b"), "fill-b");
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            b[i][j] = (double)((i * 5 + j * 11) % 13) / 12.0;
    check(PAPI_hl_region_end("fill-b"), "fill-b");
    check(PAPI_hl_region_begin("clear-c"), "clear-c");
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            c[i][j] = 0.0;
    check(PAPI_hl_region_end("clear-c"), "clear-c");
    check(PAPI_hl_region_begin("shift-diagonal"), "shift-diagonal");
    for (i = 0; i < N; i++)
        a[i][i] += 1.0;
    check(PAPI_hl_region_end("shift-diagonal"), "shift-diagonal");
}

static void multiply(void)
{
    int i, j, k;
    double sum;

    check(PAPI_hl_region_begin("transpose"), "transpose");
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            bt[j][i] = b[i][j];
    check(PAPI_hl_region_end("transpose"), "transpose");
    check(PAPI_hl_region_begin("multiply-iterated"), "multiply-iterated");
    for (i = 0; i < N; i++) {
        for (j = 0; j < N; j++) {
            sum = 0.0;
            for (k = 0; k < N; k++)
                sum += a[i][k] * bt[j][k];
            c[i][j] = sum;
        }
    }
    check(PAPI_hl_region_end("multiply-iterated"), "multiply-iterated");
    check(PAPI_hl_region_begin("halve"), "halve");
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            c[i][j] *= 0.5;
    check(PAPI_hl_region_end("halve"), "halve");
    check(PAPI_hl_region_begin("bump-diagonal"), "bump-diagonal");
    for (i = 0; i < N; i++)
        c[i][i] += 1.0;
    check(PAPI_hl_region_end("bump-diagonal"), "bump-diagonal");
}

static double checksum(void)
{
    int i, j;
    double sum = 0.0, trace = 0.0, peak = 0.0, total;

    check(PAPI_hl_region_begin("sum"), "sum");
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            sum += c[i][j];
    check(PAPI_hl_region_end("sum"), "sum");
    check(PAPI_hl_region_begin("trace"), "trace");
    for (i = 0; i < N; i++)
        trace += c[i][i];
    check(PAPI_hl_region_end("trace"), "trace");
    check(PAPI_hl_region_begin("peak"), "peak");
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            if (c[i][j] > peak)
                peak = c[i][j];
    check(PAPI_hl_region_end("peak"), "peak");
    check(PAPI_hl_region_begin("combine"), "combine");
    total = sum + trace / N + peak;
    check(PAPI_hl_region_end("combine"), "combine");
    check(PAPI_hl_stop(), "stop");
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
