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

    check(PAPI_hl_region_begin("init-matrices-front"), "init-matrices-front");
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            a[i][j] = (double)((i * 7 + j * 3) % 17) / 16.0;
    check(PAPI_hl_region_begin("init-matrices-middle"), "init-matrices-middle");
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            b[i][j] = (double)((i * 5 + j * 11) % 13) / 12.0;
    check(PAPI_hl_region_end("init-matrices-front"), "init-matrices-front");
    check(PAPI_hl_region_begin("init-matrices-back"), "init-matrices-back");
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            c[i][j] = 0.0;
    check(PAPI_hl_region_end("init-matrices-middle"), "init-matrices-middle");
    for (i = 0; i < N; i++)
        a[i][i] += 1.0;
    check(PAPI_hl_region_end("init-matrices-back"), "init-matrices-back");
}

static void multiply(void)
{
    int i, j, k;
    double sum;

    check(PAPI_hl_region_begin("multiply-front"), "multiply-front");
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            bt[j][i] = b[i][j];
    check(PAPI_hl_region_begin("multiply-middle"), "multiply-middle");
    for (i = 0; i < N; i++) {
        for (j = 0; j < N; j++) {
            sum = 0.0;
            for (k = 0; k < N; k++)
                sum += a[i][k] * bt[j][k];
            c[i][j] = sum;
        }
    }
    check(PAPI_hl_region_end("multiply-front"), "multiply-front");
    check(PAPI_hl_region_begin("multiply-back"), "multiply-back");
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            c[i][j] *= 0.5;
    check(PAPI_hl_region_end("multiply-middle"), "multiply-middle");
    for (i = 0; i < N; i++)
        c[i][i] += 1.0;
    check(PAPI_hl_region_end("multiply-back"), "multiply-back");
}

static double checksum(void)
{
    int i, j;
    double sum = 0.0, trace = 0.0, peak = 0.0, total;

    check(PAPI_hl_region_begin("checksum-front"), "checksum-front");
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            sum += c[i][j];
    check(PAPI_hl_region_begin("checksum-middle"), "checksum-middle");
    for (i = 0; i < N; i++)
        trace += c[i][i];
    check(PAPI_hl_region_end("checksum-front"), "checksum-front");
    check(PAPI_hl_region_begin("checksum-back"), "checksum-back");
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            if (c[i][j] > peak)
                peak = c[i][j];
    check(PAPI_hl_region_end("checksum-middle"), "checksum-middle");
    total = sum + trace / N + peak;
    check(PAPI_hl_region_end("checksum-back"), "checksum-back");
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
