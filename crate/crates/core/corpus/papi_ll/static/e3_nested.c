#include <stdio.h>
#include <string.h>
#include <stdlib.h>
#include <papi.h>

static int set0 = PAPI_NULL;
static int events0[] = {PAPI_TOT_CYC, PAPI_TOT_INS, PAPI_LD_INS, PAPI_SR_INS};
static long long now0[4];
static int set1 = PAPI_NULL;
static int events1[] = {PAPI_TOT_CYC, PAPI_TOT_INS, PAPI_LD_INS, PAPI_SR_INS};
static long long now1[4];
static int set2 = PAPI_NULL;
static int events2[] = {PAPI_TOT_CYC, PAPI_TOT_INS, PAPI_LD_INS, PAPI_SR_INS};
static long long now2[4];
static long long at_init_matrices[4];
static long long at_fill_a[4];
static long long at_fill_b[4];
static long long at_clear_c[4];
static long long at_shift_diagonal[4];
static long long at_multiply[4];
static long long at_transpose[4];
static long long at_multiply_iterated[4];
static long long at_halve[4];
static long long at_bump_diagonal[4];
static long long at_checksum[4];
static long long at_sum[4];
static long long at_trace[4];
static long long at_peak[4];
static long long at_combine[4];

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

static const char *const names_init_matrices[] = {"cpu.cycles", "cpu.instructions", "memory.loads", "memory.stores"};
static const int idx_init_matrices[] = {0, 1, 2, 3};
static const char *const names_fill_a[] = {"cpu.cycles", "cpu.instructions", "memory.loads", "memory.stores"};
static const int idx_fill_a[] = {0, 1, 2, 3};
static const char *const names_fill_b[] = {"cpu.cycles", "cpu.instructions", "memory.loads", "memory.stores"};
static const int idx_fill_b[] = {0, 1, 2, 3};
static const char *const names_clear_c[] = {"cpu.cycles", "cpu.instructions", "memory.loads", "memory.stores"};
static const int idx_clear_c[] = {0, 1, 2, 3};
static const char *const names_shift_diagonal[] = {"cpu.cycles", "cpu.instructions", "memory.loads", "memory.stores"};
static const int idx_shift_diagonal[] = {0, 1, 2, 3};
static const char *const names_multiply[] = {"cpu.cycles", "cpu.instructions", "memory.loads", "memory.stores"};
static const int idx_multiply[] = {0, 1, 2, 3};
static const char *const names_transpose[] = {"cpu.cycles", "cpu.instructions", "memory.loads", "memory.stores"};
static const int idx_transpose[] = {0, 1, 2, 3};
static const char *const names_multiply_iterated[] = {"cpu.cycles", "cpu.instructions", "memory.loads", "memory.stores"};
static const int idx_multiply_iterated[] = {0, 1, 2, 3};
static const char *const names_halve[] = {"cpu.cycles", "cpu.instructions", "memory.loads", "memory.stores"};
static const int idx_halve[] = {0, 1, 2, 3};
static const char *const names_bump_diagonal[] = {"cpu.cycles", "cpu.instructions", "memory.loads", "memory.stores"};
static const int idx_bump_diagonal[] = {0, 1, 2, 3};
static const char *const names_checksum[] = {"cpu.cycles", "cpu.instructions", "memory.loads", "memory.stores"};
static const int idx_checksum[] = {0, 1, 2, 3};
static const char *const names_sum[] = {"cpu.cycles", "cpu.instructions", "memory.loads", "memory.stores"};
static const int idx_sum[] = {0, 1, 2, 3};
static const char *const names_trace[] = {"cpu.cycles", "cpu.instructions", "memory.loads", "memory.stores"};
static const int idx_trace[] = {0, 1, 2, 3};
static const char *const names_peak[] = {"cpu.cycles", "cpu.instructions", "memory.loads", "memory.stores"};
static const int idx_peak[] = {0, 1, 2, 3};
static const char *const names_combine[] = {"cpu.cycles", "cpu.instructions", "memory.loads", "memory.stores"};
static const int idx_combine[] = {0, 1, 2, 3};
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
    check(PAPI_add_events(set0, events0, 4), "add");
    check(PAPI_create_eventset(&set1), "create");
    check(PAPI_add_events(set1, events1, 4), "add");
    check(PAPI_create_eventset(&set2), "create");
    check(PAPI_add_events(set2, events2, 4), "add");
    check(PAPI_start(set0), "start");
    memset(at_init_matrices, 0, sizeof at_init_matrices);
    check(PAPI_read(set0, at_fill_a), "read");
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            a[i][j] = (double)((i * 7 + j * 3) % 17) / 16.0;
    check(PAPI_read(set0, now0), "read");
    report("fill-a", names_fill_a, idx_fill_a, 4, now0, at_fill_a);
    check(PAPI_read(set0, at_fill_b), "read");
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            b[i][j] = (double)((i * 5 + j * 11) % 13) / 12.0;
    check(PAPI_read(set0, now0), "read");
    report("fill-b", names_fill_b, idx_fill_b, 4, now0, at_fill_b);
    check(PAPI_read(set0, at_clear_c), "read");
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            c[i][j] = 0.0;
    check(PAPI_read(set0, now0), "read");
    report("clear-c", names_clear_c, idx_clear_c, 4, now0, at_clear_c);
    check(PAPI_read(set0, at_shift_diagonal), "read");
    for (i = 0; i < N; i++)
        a[i][i] += 1.0;
    check(PAPI_read(set0, now0), "read");
    report("shift-diagonal", names_shift_diagonal, idx_shift_diagonal, 4, now0, at_shift_diagonal);
    check(PAPI_stop(set0, now0), "stop");
    report("init-matrices", names_init_matrices, idx_init_matrices, 4, now0, at_init_matrices);
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
    report("transpose", names_transpose, idx_transpose, 4, now1, at_transpose);
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
    report("multiply-iterated", names_multiply_iterated, idx_multiply_iterated, 4, now1, at_multiply_iterated);
    check(PAPI_read(set1, at_halve), "read");
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            c[i][j] *= 0.5;
    check(PAPI_read(set1, now1), "read");
    report("halve", names_halve, idx_halve, 4, now1, at_halve);
    check(PAPI_read(set1, at_bump_diagonal), "read");
    for (i = 0; i < N; i++)
        c[i][i] += 1.0;
    check(PAPI_read(set1, now1), "read");
    report("bump-diagonal", names_bump_diagonal, idx_bump_diagonal, 4, now1, at_bump_diagonal);
    check(PAPI_stop(set1, now1), "stop");
    report("multiply", names_multiply, idx_multiply, 4, now1, at_multiply);
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
    report("sum", names_sum, idx_sum, 4, now2, at_sum);
    check(PAPI_read(set2, at_trace), "read");
    for (i = 0; i < N; i++)
        trace += c[i][i];
    check(PAPI_read(set2, now2), "read");
    report("trace", names_trace, idx_trace, 4, now2, at_trace);
    check(PAPI_read(set2, at_peak), "read");
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            if (c[i][j] > peak)
                peak = c[i][j];
    check(PAPI_read(set2, now2), "read");
    report("peak", names_peak, idx_peak, 4, now2, at_peak);
    check(PAPI_read(set2, at_combine), "read");
    total = sum + trace / N + peak;
    check(PAPI_read(set2, now2), "read");
    report("combine", names_combine, idx_combine, 4, now2, at_combine);
    check(PAPI_stop(set2, now2), "stop");
    report("checksum", names_checksum, idx_checksum, 4, now2, at_checksum);
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
