#include <stdio.h>
#include <string.h>
#include <stdlib.h>
#include <papi.h>

static int set0 = PAPI_NULL;
static int events0[] = {PAPI_TOT_CYC, PAPI_TOT_INS, PAPI_LD_INS, PAPI_SR_INS, PAPI_FML_INS, PAPI_FAD_INS, PAPI_BR_CN, PAPI_L1_DCM, PAPI_L2_DCM, PAPI_L1_STM};
static long long now0[10];
static int set1 = PAPI_NULL;
static int events1[] = {PAPI_TOT_CYC, PAPI_TOT_INS, PAPI_LD_INS, PAPI_FP_OPS, PAPI_FAD_INS, PAPI_VEC_DP, PAPI_BR_UCN, PAPI_BR_CN, PAPI_BR_TKN, PAPI_BR_NTK, PAPI_BR_MSP, PAPI_BR_PRC, PAPI_L2_STM};
static long long now1[13];
static int set2 = PAPI_NULL;
static int events2[] = {PAPI_TOT_CYC, PAPI_TOT_INS, PAPI_LD_INS, PAPI_SR_INS, PAPI_FP_INS, PAPI_FP_OPS, PAPI_FML_INS, PAPI_FAD_INS, PAPI_FDV_INS, PAPI_FSQ_INS, PAPI_FNV_INS, PAPI_VEC_SP, PAPI_VEC_DP, PAPI_BR_CN, PAPI_L1_DCM, PAPI_L1_LDM, PAPI_L2_LDM};
static long long now2[17];
static long long at_init_matrices[10];
static long long at_fill_a[10];
static long long at_fill_b[10];
static long long at_clear_c[10];
static long long at_shift_diagonal[10];
static long long at_multiply[13];
static long long at_transpose[13];
static long long at_multiply_iterated[13];
static long long at_halve[13];
static long long at_bump_diagonal[13];
static long long at_checksum[17];
static long long at_sum[17];
static long long at_trace[17];
static long long at_peak[17];
static long long at_combine[17];

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

static const char *const names_init_matrices[] = {"cpu.cycles", "memory.stores"};
static const int idx_init_matrices[] = {0, 3};
static const char *const names_fill_a[] = {"memory.loads", "memory.stores", "cache.l1-stores"};
static const int idx_fill_a[] = {2, 3, 9};
static const char *const names_fill_b[] = {"cpu.instructions", "branch.conditional"};
static const int idx_fill_b[] = {1, 6};
static const char *const names_clear_c[] = {"memory.loads", "floating-point.multiply", "floating-point.add"};
static const int idx_clear_c[] = {2, 4, 5};
static const char *const names_shift_diagonal[] = {"cache.l1-data", "cache.l2-data"};
static const int idx_shift_diagonal[] = {7, 8};
static const char *const names_multiply[] = {"floating-point.operations", "vector.double-precision"};
static const int idx_multiply[] = {3, 5};
static const char *const names_transpose[] = {"branch.taken", "branch.mispredicted"};
static const int idx_transpose[] = {8, 10};
static const char *const names_multiply_iterated[] = {"cpu.cycles", "cpu.instructions", "cache.l2-stores"};
static const int idx_multiply_iterated[] = {0, 1, 12};
static const char *const names_halve[] = {"memory.loads", "floating-point.add"};
static const int idx_halve[] = {2, 4};
static const char *const names_bump_diagonal[] = {"cpu.cycles", "branch.unconditional", "branch.conditional", "branch.taken", "branch.not-taken", "branch.mispredicted", "branch.correctly-predicted"};
static const int idx_bump_diagonal[] = {0, 6, 7, 8, 9, 10, 11};
static const char *const names_checksum[] = {"memory.stores", "cache.l1-loads", "cache.l2-loads"};
static const int idx_checksum[] = {3, 15, 16};
static const char *const names_sum[] = {"cpu.instructions", "floating-point.instructions", "floating-point.operations", "floating-point.multiply", "floating-point.add", "floating-point.divide", "floating-point.sqrt", "floating-point.inverse"};
static const int idx_sum[] = {1, 4, 5, 6, 7, 8, 9, 10};
static const char *const names_trace[] = {"memory.loads", "vector.single-precision", "vector.double-precision"};
static const int idx_trace[] = {2, 11, 12};
static const char *const names_peak[] = {"cpu.cycles", "cache.l1-data"};
static const int idx_peak[] = {0, 14};
static const char *const names_combine[] = {"floating-point.divide", "branch.conditional"};
static const int idx_combine[] = {8, 13};
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
    check(PAPI_add_events(set0, events0, 10), "add");
    check(PAPI_create_eventset(&set1), "create");
    check(PAPI_add_events(set1, events1, 13), "add");
    check(PAPI_create_eventset(&set2), "create");
    check(PAPI_add_events(set2, events2, 17), "add");
    check(PAPI_start(set0), "start");
    memset(at_init_matrices, 0, sizeof at_init_matrices);
    check(PAPI_read(set0, at_fill_a), "read");
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            a[i][j] = (double)((i * 7 + j * 3) % 17) / 16.0;
    check(PAPI_read(set0, now0), "read");
    report("fill-a", names_fill_a, idx_fill_a, 3, now0, at_fill_a);
    check(PAPI_read(set0, at_fill_b), "read");
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            b[i][j] = (double)((i * 5 + j * 11) % 13) / 12.0;
    check(PAPI_read(set0, now0), "read");
    report("fill-b", names_fill_b, idx_fill_b, 2, now0, at_fill_b);
    check(PAPI_read(set0, at_clear_c), "read");
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            c[i][j] = 0.0;
    check(PAPI_read(set0, now0), "read");
    report("clear-c", names_clear_c, idx_clear_c, 3, now0, at_clear_c);
    check(PAPI_read(set0, at_shift_diagonal), "read");
    for (i = 0; i < N; i++)
        a[i][i] += 1.0;
    check(PAPI_read(set0, now0), "read");
    report("shift-diagonal", names_shift_diagonal, idx_shift_diagonal, 2, now0, at_shift_diagonal);
    check(PAPI_stop(set0, now0), "stop");
    report("init-matrices", names_init_matrices, idx_init_matrices, 2, now0, at_init_matrices);
}

static void multiply(void)
{
    int i, j, k;
    double sum;

    check(PAPI_start(set1), "start");
    memset(at_multiply, 0, sizeof at_multiply);
    check(PAPI_read(set1, at_transpose), "read");
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            bt[j][i] = b[i][j];
    check(PAPI_read(set1, now1), "read");
    report("transpose", names_transpose, idx_transpose, 2, now1, at_transpose);
    check(PAPI_read(set1, at_multiply_iterated), "read");
    for (i = 0; i < N; i++) {
        for (j = 0; j < N; j++) {
            sum = 0.0;
            for (k = 0; k < N; k++)
                sum += a[i][k] * bt[j][k];
            c[i][j] = sum;
        }
    }
    check(PAPI_read(set1, now1), "read");
    report("multiply-iterated", names_multiply_iterated, idx_multiply_iterated, 3, now1, at_multiply_iterated);
    check(PAPI_read(set1, at_halve), "read");
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            c[i][j] *= 0.5;
    check(PAPI_read(set1, now1), "read");
    report("halve", names_halve, idx_halve, 2, now1, at_halve);
    check(PAPI_read(set1, at_bump_diagonal), "read");
    for (i = 0; i < N; i++)
        c[i][i] += 1.0;
    check(PAPI_read(set1, now1), "read");
    report("bump-diagonal", names_bump_diagonal, idx_bump_diagonal, 7, now1, at_bump_diagonal);
    check(PAPI_stop(set1, now1), "stop");
    report("multiply", names_multiply, idx_multiply, 2, now1, at_multiply);
}

static double checksum(void)
{
    int i, j;
    double sum = 0.0, trace = 0.0, peak = 0.0, total;

    check(PAPI_start(set2), "start");
    memset(at_checksum, 0, sizeof at_checksum);
    check(PAPI_read(set2, at_sum), "read");
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            sum += c[i][j];
    check(PAPI_read(set2, now2), "read");
    report("sum", names_sum, idx_sum, 8, now2, at_sum);
    check(PAPI_read(set2, at_trace), "read");
    for (i = 0; i < N; i++)
        trace += c[i][i];
    check(PAPI_read(set2, now2), "read");
    report("trace", names_trace, idx_trace, 3, now2, at_trace);
    check(PAPI_read(set2, at_peak), "read");
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            if (c[i][j] > peak)
                peak = c[i][j];
    check(PAPI_read(set2, now2), "read");
    report("peak", names_peak, idx_peak, 2, now2, at_peak);
    check(PAPI_read(set2, at_combine), "read");
    total = sum + trace / N + peak;
    check(PAPI_read(set2, now2), "read");
    report("combine", names_combine, idx_combine, 2, now2, at_combine);
    check(PAPI_stop(set2, now2), "stop");
    report("checksum", names_checksum, idx_checksum, 3, now2, at_checksum);
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
