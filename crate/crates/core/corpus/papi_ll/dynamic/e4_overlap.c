#include <stdio.h>
#include <string.h>
#include <stdlib.h>
#include <papi.h>

static int set0 = PAPI_NULL;
static int events0[] = {PAPI_TOT_CYC, PAPI_TOT_INS, PAPI_LD_INS, PAPI_SR_INS, PAPI_BR_CN, PAPI_L1_STM};
static long long now0[6];
static int set1 = PAPI_NULL;
static int events1[] = {PAPI_LD_INS, PAPI_FP_OPS, PAPI_FML_INS, PAPI_FAD_INS, PAPI_VEC_DP, PAPI_L1_DCM, PAPI_L2_DCM};
static long long now1[7];
static int set2 = PAPI_NULL;
static int events2[] = {PAPI_TOT_CYC, PAPI_TOT_INS, PAPI_LD_INS, PAPI_FAD_INS, PAPI_BR_TKN, PAPI_BR_MSP, PAPI_L2_STM};
static long long now2[7];
static long long at_init_matrices_front[6];
static long long at_init_matrices_middle[6];
static long long at_init_matrices_back[6];
static long long at_multiply_front[7];
static long long at_multiply_middle[7];
static long long at_multiply_back[7];
static long long at_checksum_front[7];
static long long at_checksum_middle[7];
static long long at_checksum_back[7];

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

static const char *const names_init_matrices_front[] = {"cpu.cycles", "memory.stores"};
static const int idx_init_matrices_front[] = {0, 3};
static const char *const names_init_matrices_middle[] = {"memory.loads", "memory.stores", "cache.l1-stores"};
static const int idx_init_matrices_middle[] = {2, 3, 5};
static const char *const names_init_matrices_back[] = {"cpu.instructions", "branch.conditional"};
static const int idx_init_matrices_back[] = {1, 4};
static const char *const names_multiply_front[] = {"memory.loads", "floating-point.multiply", "floating-point.add"};
static const int idx_multiply_front[] = {0, 2, 3};
static const char *const names_multiply_middle[] = {"cache.l1-data", "cache.l2-data"};
static const int idx_multiply_middle[] = {5, 6};
static const char *const names_multiply_back[] = {"floating-point.operations", "vector.double-precision"};
static const int idx_multiply_back[] = {1, 4};
static const char *const names_checksum_front[] = {"branch.taken", "branch.mispredicted"};
static const int idx_checksum_front[] = {4, 5};
static const char *const names_checksum_middle[] = {"cpu.cycles", "cpu.instructions", "cache.l2-stores"};
static const int idx_checksum_middle[] = {0, 1, 6};
static const char *const names_checksum_back[] = {"memory.loads", "floating-point.add"};
static const int idx_checksum_back[] = {2, 3};
#ifndef N
#define N 64
#endif

static double a[N][N], b[N][N], bt[N][N], c[N][N];

static void init_matrices(void)
{
    int i, j;

    if (PAPI_library_init(PAPI_VER_CURRENT) != PAPI_VER_CURRENT)
        exit(1);
    check(PAPI_create_eventset(&set0), "create");
    check(PAPI_add_events(set0, events0, 6), "add");
    check(PAPI_create_eventset(&set1), "create");
    check(PAPI_add_events(set1, events1, 7), "add");
    check(PAPI_create_eventset(&set2), "create");
    check(PAPI_add_events(set2, events2, 7), "add");
    check(PAPI_start(set0), "start");
    memset(at_init_matrices_front, 0, sizeof at_init_matrices_front);
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            a[i][j] = (double)((i * 7 + j * 3) % 17) / 16.0;
    check(PAPI_read(set0, at_init_matrices_middle), "read");
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            b[i][j] = (double)((i * 5 + j * 11) % 13) / 12.0;
    check(PAPI_read(set0, now0), "read");
    report("init-matrices-front", names_init_matrices_front, idx_init_matrices_front, 2, now0, at_init_matrices_front);
    check(PAPI_read(set0, at_init_matrices_back), "read");
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            c[i][j] = 0.0;
    check(PAPI_read(set0, now0), "read");
    report("init-matrices-middle", names_init_matrices_middle, idx_init_matrices_middle, 3, now0, at_init_matrices_middle);
    for (i = 0; i < N; i++)
        a[i][i] += 1.0;
    check(PAPI_stop(set0, now0), "stop");
    report("init-matrices-back", names_init_matrices_back, idx_init_matrices_back, 2, now0, at_init_matrices_back);
}

static void multiply(void)
{
    int i, j, k;
    double sum;

    check(PAPI_start(set1), "start");
    memset(at_multiply_front, 0, sizeof at_multiply_front);
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            bt[j][i] = b[i][j];
    check(PAPI_read(set1, at_multiply_middle), "read");
    for (i = 0; i < N; i++) {
        for (j = 0; j < N; j++) {
            sum = 0.0;
            for (k = 0; k < N; k++)
                sum += a[i][k] * bt[j][k];
            c[i][j] = sum;
        }
    }
    check(PAPI_read(set1, now1), "read");
    report("multiply-front", names_multiply_front, idx_multiply_front, 3, now1, at_multiply_front);
    check(PAPI_read(set1, at_multiply_back), "read");
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            c[i][j] *= 0.5;
    check(PAPI_read(set1, now1), "read");
    report("multiply-middle", names_multiply_middle, idx_multiply_middle, 2, now1, at_multiply_middle);
    for (i = 0; i < N; i++)
        c[i][i] += 1.0;
    check(PAPI_stop(set1, now1), "stop");
    report("multiply-back", names_multiply_back, idx_multiply_back, 2, now1, at_multiply_back);
}

static double checksum(void)
{
    int i, j;
    double sum = 0.0, trace = 0.0, peak = 0.0, total;

    check(PAPI_start(set2), "start");
    memset(at_checksum_front, 0, sizeof at_checksum_front);
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            sum += c[i][j];
    check(PAPI_read(set2, at_checksum_middle), "read");
    for (i = 0; i < N; i++)
        trace += c[i][i];
    check(PAPI_read(set2, now2), "read");
    report("checksum-front", names_checksum_front, idx_checksum_front, 2, now2, at_checksum_front);
    check(PAPI_read(set2, at_checksum_back), "read");
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            if (c[i][j] > peak)
                peak = c[i][j];
    check(PAPI_read(set2, now2), "read");
    report("checksum-middle", names_checksum_middle, idx_checksum_middle, 3, now2, at_checksum_middle);
    total = sum + trace / N + peak;
    check(PAPI_stop(set2, now2), "stop");
    report("checksum-back", names_checksum_back, idx_checksum_back, 2, now2, at_checksum_back);
    check(PAPI_cleanup_eventset(set0), "cleanup");
    check(PAPI_destroy_eventset(&set0), "destroy");
    check(PAPI_cleanup_eventset(set1), "cleanup");
    check(PAPI_destroy_eventset(&set1), "destroy");
    check(PAPI_cleanup_eventset(set2), "cleanup");
    check(PAPI_destroy_eventset(&set2), "destroy");
    PAPI_shutdown();
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
