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
static int set3 = PAPI_NULL;
static int events3[] = {PAPI_LD_INS, PAPI_FML_INS, PAPI_FAD_INS};
static long long now3[3];
static int set4 = PAPI_NULL;
static int events4[] = {PAPI_L1_DCM, PAPI_L2_DCM};
static long long now4[2];
static int set5 = PAPI_NULL;
static int events5[] = {PAPI_FP_OPS, PAPI_VEC_DP};
static long long now5[2];
static int set6 = PAPI_NULL;
static int events6[] = {PAPI_BR_TKN, PAPI_BR_MSP};
static long long now6[2];
static int set7 = PAPI_NULL;
static int events7[] = {PAPI_TOT_CYC, PAPI_TOT_INS, PAPI_L2_STM};
static long long now7[3];
static int set8 = PAPI_NULL;
static int events8[] = {PAPI_LD_INS, PAPI_FAD_INS};
static long long now8[2];
static int set9 = PAPI_NULL;
static int events9[] = {PAPI_TOT_CYC, PAPI_BR_UCN, PAPI_BR_CN, PAPI_BR_TKN, PAPI_BR_NTK, PAPI_BR_MSP, PAPI_BR_PRC};
static long long now9[7];
static int set10 = PAPI_NULL;
static int events10[] = {PAPI_SR_INS, PAPI_L1_LDM, PAPI_L2_LDM};
static long long now10[3];
static int set11 = PAPI_NULL;
static int events11[] = {PAPI_TOT_INS, PAPI_FP_INS, PAPI_FP_OPS, PAPI_FML_INS, PAPI_FAD_INS, PAPI_FDV_INS, PAPI_FSQ_INS, PAPI_FNV_INS};
static long long now11[8];
static long long at_fill_a[2];
static long long at_fill_b[3];
static long long at_clear_c[2];
static long long at_shift_diagonal[3];
static long long at_transpose[2];
static long long at_multiply_iterated[2];
static long long at_halve[2];
static long long at_bump_diagonal[3];
static long long at_sum[2];
static long long at_trace[7];
static long long at_peak[3];
static long long at_combine[8];

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

static const char *const names_fill_a[] = {"cpu.cycles", "memory.stores"};
static const int idx_fill_a[] = {0, 1};
static const char *const names_fill_b[] = {"memory.loads", "memory.stores", "cache.l1-stores"};
static const int idx_fill_b[] = {0, 1, 2};
static const char *const names_clear_c[] = {"cpu.instructions", "branch.conditional"};
static const int idx_clear_c[] = {0, 1};
static const char *const names_shift_diagonal[] = {"memory.loads", "floating-point.multiply", "floating-point.add"};
static const int idx_shift_diagonal[] = {0, 1, 2};
static const char *const names_transpose[] = {"cache.l1-data", "cache.l2-data"};
static const int idx_transpose[] = {0, 1};
static const char *const names_multiply_iterated[] = {"floating-point.operations", "vector.double-precision"};
static const int idx_multiply_iterated[] = {0, 1};
static const char *const names_halve[] = {"branch.taken", "branch.mispredicted"};
static const int idx_halve[] = {0, 1};
static const char *const names_bump_diagonal[] = {"cpu.cycles", "cpu.instructions", "cache.l2-stores"};
static const int idx_bump_diagonal[] = {0, 1, 2};
static const char *const names_sum[] = {"memory.loads", "floating-point.add"};
static const int idx_sum[] = {0, 1};
static const char *const names_trace[] = {"cpu.cycles", "branch.unconditional", "branch.conditional", "branch.taken", "branch.not-taken", "branch.mispredicted", "branch.correctly-predicted"};
static const int idx_trace[] = {0, 1, 2, 3, 4, 5, 6};
static const char *const names_peak[] = {"memory.stores", "cache.l1-loads", "cache.l2-loads"};
static const int idx_peak[] = {0, 1, 2};
static const char *const names_combine[] = {"cpu.instructions", "floating-point.instructions", "floating-point.operations", "floating-point.multiply", "floating-point.add", "floating-point.divide", "floating-point.sqrt", "floating-point.inverse"};
static const int idx_combine[] = {0, 1, 2, 3, 4, 5, 6, 7};
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
    check(PAPI_add_events(set0, events0, 2), "add");
    check(PAPI_create_eventset(&set1), "create");
    check(PAPI_add_events(set1, events1, 3), "add");
    check(PAPI_create_eventset(&set2), "create");
    check(PAPI_add_events(set2, events2, 2), "add");
    check(PAPI_create_eventset(&set3), "create");
    check(PAPI_add_events(set3, events3, 3), "add");
    check(PAPI_create_eventset(&set4), "create");
    check(PAPI_add_events(set4, events4, 2), "add");
    check(PAPI_create_eventset(&set5), "create");
    check(PAPI_add_events(set5, events5, 2), "add");
    check(PAPI_create_eventset(&set6), "create");
    check(PAPI_add_events(set6, events6, 2), "add");
    check(PAPI_create_eventset(&set7), "create");
    check(PAPI_add_events(set7, events7, 3), "add");
    check(PAPI_create_eventset(&set8), "create");
    check(PAPI_add_events(set8, events8, 2), "add");
    check(PAPI_create_eventset(&set9), "create");
    check(PAPI_add_events(set9, events9, 7), "add");
    check(PAPI_create_eventset(&set10), "create");
    check(PAPI_add_events(set10, events10, 3), "add");
    check(PAPI_create_eventset(&set11), "create");
    check(PAPI_add_events(set11, events11, 8), "add");
    check(PAPI_start(set0), "start");
    memset(at_fill_a, 0, sizeof at_fill_a);
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            a[i][j] = (double)((i * 7 + j * 3) % 17) / 16.0;
    check(PAPI_stop(set0, now0), "stop");
    report("fill-a", names_fill_a, idx_fill_a, 2, now0, at_fill_a);
    check(PAPI_start(set1), "start");
    memset(at_fill_b, 0, sizeof at_fill_b);
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            b[i][j] = (double)((i * 5 + j * 11) % 13) / 12.0;
    check(PAPI_stop(set1, now1), "stop");
    report("fill-b", names_fill_b, idx_fill_b, 3, now1, at_fill_b);
    check(PAPI_start(set2), "start");
    memset(at_clear_c, 0, sizeof at_clear_c);
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            c[i][j] = 0.0;
    check(PAPI_stop(set2, now2), "stop");
    report("clear-c", names_clear_c, idx_clear_c, 2, now2, at_clear_c);
    check(PAPI_start(set3), "start");
    memset(at_shift_diagonal, 0, sizeof at_shift_diagonal);
    for (i = 0; i < N; i++)
        a[i][i] += 1.0;
    check(PAPI_stop(set3, now3), "stop");
    report("shift-diagonal", names_shift_diagonal, idx_shift_diagonal, 3, now3, at_shift_diagonal);
}

static void multiply(void)
{
    int i, j, k;
    double sum;

    check(PAPI_start(set4), "start");
    memset(at_transpose, 0, sizeof at_transpose);
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            bt[j][i] = b[i][j];
    check(PAPI_stop(set4, now4), "stop");
    report("transpose", names_transpose, idx_transpose, 2, now4, at_transpose);
    check(PAPI_start(set5), "start");
    memset(at_multiply_iterated, 0, sizeof at_multiply_iterated);
    for (i = 0; i < N; i++) {
        for (j = 0; j < N; j++) {
            sum = 0.0;
            for (k = 0; k < N; k++)
                sum += a[i][k] * bt[j][k];
            c[i][j] = sum;
        }
    }
    check(PAPI_stop(set5, now5), "stop");
    report("multiply-iterated", names_multiply_iterated, idx_multiply_iterated, 2, now5, at_multiply_iterated);
    check(PAPI_start(set6), "start");
    memset(at_halve, 0, sizeof at_halve);
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            c[i][j] *= 0.5;
    check(PAPI_stop(set6, now6), "stop");
    report("halve", names_halve, idx_halve, 2, now6, at_halve);
    check(PAPI_start(set7), "start");
    memset(at_bump_diagonal, 0, sizeof at_bump_diagonal);
    for (i = 0; i < N; i++)
        c[i][i] += 1.0;
    check(PAPI_stop(set7, now7), "stop");
    report("bump-diagonal", names_bump_diagonal, idx_bump_diagonal, 3, now7, at_bump_diagonal);
}

static double checksum(void)
{
    int i, j;
    double sum = 0.0, trace = 0.0, peak = 0.0, total;

    check(PAPI_start(set8), "start");
    memset(at_sum, 0, sizeof at_sum);
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            sum += c[i][j];
    check(PAPI_stop(set8, now8), "stop");
    report("sum", names_sum, idx_sum, 2, now8, at_sum);
    check(PAPI_start(set9), "start");
    memset(at_trace, 0, sizeof at_trace);
    for (i = 0; i < N; i++)
        trace += c[i][i];
    check(PAPI_stop(set9, now9), "stop");
    report("trace", names_trace, idx_trace, 7, now9, at_trace);
    check(PAPI_start(set10), "start");
    memset(at_peak, 0, sizeof at_peak);
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            if (c[i][j] > peak)
                peak = c[i][j];
    check(PAPI_stop(set10, now10), "stop");
    report("peak", names_peak, idx_peak, 3, now10, at_peak);
    check(PAPI_start(set11), "start");
    memset(at_combine, 0, sizeof at_combine);
    total = sum + trace / N + peak;
    check(PAPI_stop(set11, now11), "stop");
    report("combine", names_combine, idx_combine, 8, now11, at_combine);
    check(PAPI_cleanup_eventset(set0), "cleanup");
    check(PAPI_destroy_eventset(&set0), "destroy");
    check(PAPI_cleanup_eventset(set1), "cleanup");
    check(PAPI_destroy_eventset(&set1), "destroy");
    check(PAPI_cleanup_eventset(set2), "cleanup");
    check(PAPI_destroy_eventset(&set2), "destroy");
    check(PAPI_cleanup_eventset(set3), "cleanup");
    check(PAPI_destroy_eventset(&set3), "destroy");
    check(PAPI_cleanup_eventset(set4), "cleanup");
    check(PAPI_destroy_eventset(&set4), "destroy");
    check(PAPI_cleanup_eventset(set5), "cleanup");
    check(PAPI_destroy_eventset(&set5), "destroy");
    check(PAPI_cleanup_eventset(set6), "cleanup");
    check(PAPI_destroy_eventset(&set6), "destroy");
    check(PAPI_cleanup_eventset(set7), "cleanup");
    check(PAPI_destroy_eventset(&set7), "destroy");
    check(PAPI_cleanup_eventset(set8), "cleanup");
    check(PAPI_destroy_eventset(&set8), "destroy");
    check(PAPI_cleanup_eventset(set9), "cleanup");
    check(PAPI_destroy_eventset(&set9), "destroy");
    check(PAPI_cleanup_eventset(set10), "cleanup");
    check(PAPI_destroy_eventset(&set10), "destroy");
    check(PAPI_cleanup_eventset(set11), "cleanup");
    check(PAPI_destroy_eventset(&set11), "destroy");
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
