#include <stdio.h>
#include <string.h>
#include <stdlib.h>
#include <papi.h>

static int set0 = PAPI_NULL;
static int events0[] = {PAPI_TOT_CYC, PAPI_SR_INS};
static long long now0[2];
static int set1 = PAPI_NULL;
static int events1[] = {PAPI_LD_INS, PAPI_SR_INS, PAPI_L1_STM};
static long long now1[3];
static int set2 = PAPI_NULL;
static int events2[] = {PAPI_TOT_INS, PAPI_BR_CN};
static long long now2[2];
static long long at_init_matrices_call[2];
static long long at_multiply_call[3];
static long long at_checksum_call[2];

static void check(int rc, const char *what)
{
    if (rc != PAPI_OK) {
        fprintf(stderr, "%s: %s\n", what, PAPI_strerror(rc));
        exit(1);
    }
}

static void report(const char *region, const char *const *names, const int *idx,
                   int n, const long long *now, const long long *at)
{
    int i;
    printf("%s:", region);
    for (i = 0; i < n; i++)
        printf(" %s=%lld", names[i], now[idx[i]] - at[idx[i]]);
    printf("\n");
}

static const char *const names_init_matrices_call[] = {"cpu.cycles", "memory.stores"};
static const int idx_init_matrices_call[] = {0, 1};
static const char *const names_multiply_call[] = {"memory.loads", "memory.stores", "cache.l1-stores"};
static const int idx_multiply_call[] = {0, 1, 2};
static const char *const names_checksum_call[] = {"cpu.instructions", "branch.conditional"};
static const int idx_checksum_call[] = {0, 1};
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

    if (PAPI_library_init(PAPI_VER_CURRENT) != PAPI_VER_CURRENT)
        exit(1);
    check(PAPI_create_eventset(&set0), "create");
    check(PAPI_add_events(set0, events0, 2), "add");
    check(PAPI_create_eventset(&set1), "create");
    check(PAPI_add_events(set1, events1, 3), "add");
    check(PAPI_create_eventset(&set2), "create");
    check(PAPI_add_events(set2, events2, 2), "add");
    check(PAPI_start(set0), "start");
    memset(at_init_matrices_call, 0, sizeof at_init_matrices_call);
    init_matrices();
    check(PAPI_stop(set0, now0), "stop");
    report("init-matrices-call", names_init_matrices_call, idx_init_matrices_call, 2, now0, at_init_matrices_call);
    check(PAPI_start(set1), "start");
    memset(at_multiply_call, 0, sizeof at_multiply_call);
    multiply();
    check(PAPI_stop(set1, now1), "stop");
    report("multiply-call", names_multiply_call, idx_multiply_call, 3, now1, at_multiply_call);
    check(PAPI_start(set2), "start");
    memset(at_checksum_call, 0, sizeof at_checksum_call);
    result = checksum();
    check(PAPI_stop(set2, now2), "stop");
    report("checksum-call", names_checksum_call, idx_checksum_call, 2, now2, at_checksum_call);
    check(PAPI_cleanup_eventset(set0), "cleanup");
    check(PAPI_destroy_eventset(&set0), "destroy");
    check(PAPI_cleanup_eventset(set1), "cleanup");
    check(PAPI_destroy_eventset(&set1), "destroy");
    check(PAPI_cleanup_eventset(set2), "cleanup");
    check(PAPI_destroy_eventset(&set2), "destroy");
    PAPI_shutdown();
    printf("checksum %.6f\n", result);
    return 0;
}
