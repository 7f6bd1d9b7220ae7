#include "e3_nested.edpm.h"
#line 1 "e3_nested.c"
#include <stdio.h>
#ifndef N
#define N 64
#endif

static double a[N][N], b[N][N], bt[N][N], c[N][N];

static void init_matrices(void)
{
    int i, j;

    if (PAPI_library_init(PAPI_VER_CURRENT) != PAPI_VER_CURRENT)
        __edpm_check(-1, "PAPI_library_init");
    __edpm_json_open("edpm_output.json");
    __edpm_check(PAPI_create_eventset(&__edpm_es_0), "PAPI_create_eventset");
    __edpm_check(PAPI_add_event(__edpm_es_0, PAPI_TOT_CYC), "PAPI_add_event");
    __edpm_check(PAPI_add_event(__edpm_es_0, PAPI_TOT_INS), "PAPI_add_event");
    __edpm_check(PAPI_add_event(__edpm_es_0, PAPI_LD_INS), "PAPI_add_event");
    __edpm_check(PAPI_add_event(__edpm_es_0, PAPI_SR_INS), "PAPI_add_event");
    __edpm_check(PAPI_create_eventset(&__edpm_es_1), "PAPI_create_eventset");
    __edpm_check(PAPI_add_event(__edpm_es_1, PAPI_TOT_CYC), "PAPI_add_event");
    __edpm_check(PAPI_add_event(__edpm_es_1, PAPI_TOT_INS), "PAPI_add_event");
    __edpm_check(PAPI_add_event(__edpm_es_1, PAPI_LD_INS), "PAPI_add_event");
    __edpm_check(PAPI_add_event(__edpm_es_1, PAPI_SR_INS), "PAPI_add_event");
    __edpm_check(PAPI_create_eventset(&__edpm_es_2), "PAPI_create_eventset");
    __edpm_check(PAPI_add_event(__edpm_es_2, PAPI_TOT_CYC), "PAPI_add_event");
    __edpm_check(PAPI_add_event(__edpm_es_2, PAPI_TOT_INS), "PAPI_add_event");
    __edpm_check(PAPI_add_event(__edpm_es_2, PAPI_LD_INS), "PAPI_add_event");
    __edpm_check(PAPI_add_event(__edpm_es_2, PAPI_SR_INS), "PAPI_add_event");
#line 13
    memset(__edpm_bv_0, 0, sizeof __edpm_bv_0);
    __edpm_rv_init_matrices[0] = __edpm_bv_0[0];
    __edpm_rv_init_matrices[1] = __edpm_bv_0[1];
    __edpm_rv_init_matrices[2] = __edpm_bv_0[2];
    __edpm_rv_init_matrices[3] = __edpm_bv_0[3];
    __edpm_check(PAPI_start(__edpm_es_0), "PAPI_start");
#line 14
    __edpm_check(PAPI_accum(__edpm_es_0, __edpm_bv_0), "PAPI_accum");
    {
        long long __edpm_discard[4];
        __edpm_check(PAPI_stop(__edpm_es_0, __edpm_discard), "PAPI_stop");
    }
    __edpm_rv_fill_a[0] = __edpm_bv_0[0];
    __edpm_rv_fill_a[1] = __edpm_bv_0[1];
    __edpm_rv_fill_a[2] = __edpm_bv_0[2];
    __edpm_rv_fill_a[3] = __edpm_bv_0[3];
    __edpm_check(PAPI_start(__edpm_es_0), "PAPI_start");
#line 15
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            a[i][j] = (double)((i * 7 + j * 3) % 17) / 16.0;
    __edpm_check(PAPI_accum(__edpm_es_0, __edpm_bv_0), "PAPI_accum");
    {
        long long __edpm_discard[4];
        __edpm_check(PAPI_stop(__edpm_es_0, __edpm_discard), "PAPI_stop");
    }
    __edpm_rv_fill_a[0] = __edpm_bv_0[0] - __edpm_rv_fill_a[0];
    __edpm_rv_fill_a[1] = __edpm_bv_0[1] - __edpm_rv_fill_a[1];
    __edpm_rv_fill_a[2] = __edpm_bv_0[2] - __edpm_rv_fill_a[2];
    __edpm_rv_fill_a[3] = __edpm_bv_0[3] - __edpm_rv_fill_a[3];
    __edpm_json_emit("fill-a", __edpm_tid_fill_a, 4, (const char *const[]){"cpu.cycles", "cpu.instructions", "memory.loads", "memory.stores"}, __edpm_rv_fill_a);
    fflush(__edpm_out);
    __edpm_tid_fill_a++;
    __edpm_check(PAPI_start(__edpm_es_0), "PAPI_start");
#line 19
    __edpm_check(PAPI_accum(__edpm_es_0, __edpm_bv_0), "PAPI_accum");
    {
        long long __edpm_discard[4];
        __edpm_check(PAPI_stop(__edpm_es_0, __edpm_discard), "PAPI_stop");
    }
    __edpm_rv_fill_b[0] = __edpm_bv_0[0];
    __edpm_rv_fill_b[1] = __edpm_bv_0[1];
    __edpm_rv_fill_b[2] = __edpm_bv_0[2];
    __edpm_rv_fill_b[3] = __edpm_bv_0[3];
    __edpm_check(PAPI_start(__edpm_es_0), "PAPI_start");
#line 20
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            b[i][j] = (double)((i * 5 + j * 11) % 13) / 12.0;
    __edpm_check(PAPI_accum(__edpm_es_0, __edpm_bv_0), "PAPI_accum");
    {
        long long __edpm_discard[4];
        __edpm_check(PAPI_stop(__edpm_es_0, __edpm_discard), "PAPI_stop");
    }
    __edpm_rv_fill_b[0] = __edpm_bv_0[0] - __edpm_rv_fill_b[0];
    __edpm_rv_fill_b[1] = __edpm_bv_0[1] - __edpm_rv_fill_b[1];
    __edpm_rv_fill_b[2] = __edpm_bv_0[2] - __edpm_rv_fill_b[2];
    __edpm_rv_fill_b[3] = __edpm_bv_0[3] - __edpm_rv_fill_b[3];
    __edpm_json_emit("fill-b", __edpm_tid_fill_b, 4, (const char *const[]){"cpu.cycles", "cpu.instructions", "memory.loads", "memory.stores"}, __edpm_rv_fill_b);
    fflush(__edpm_out);
    __edpm_tid_fill_b++;
    __edpm_check(PAPI_start(__edpm_es_0), "PAPI_start");
#line 24
    __edpm_check(PAPI_accum(__edpm_es_0, __edpm_bv_0), "PAPI_accum");
    {
        long long __edpm_discard[4];
        __edpm_check(PAPI_stop(__edpm_es_0, __edpm_discard), "PAPI_stop");
    }
    __edpm_rv_clear_c[0] = __edpm_bv_0[0];
    __edpm_rv_clear_c[1] = __edpm_bv_0[1];
    __edpm_rv_clear_c[2] = __edpm_bv_0[2];
    __edpm_rv_clear_c[3] = __edpm_bv_0[3];
    __edpm_check(PAPI_start(__edpm_es_0), "PAPI_start");
#line 25
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            c[i][j] = 0.0;
    __edpm_check(PAPI_accum(__edpm_es_0, __edpm_bv_0), "PAPI_accum");
    {
        long long __edpm_discard[4];
        __edpm_check(PAPI_stop(__edpm_es_0, __edpm_discard), "PAPI_stop");
    }
    __edpm_rv_clear_c[0] = __edpm_bv_0[0] - __edpm_rv_clear_c[0];
    __edpm_rv_clear_c[1] = __edpm_bv_0[1] - __edpm_rv_clear_c[1];
    __edpm_rv_clear_c[2] = __edpm_bv_0[2] - __edpm_rv_clear_c[2];
    __edpm_rv_clear_c[3] = __edpm_bv_0[3] - __edpm_rv_clear_c[3];
    __edpm_json_emit("clear-c", __edpm_tid_clear_c, 4, (const char *const[]){"cpu.cycles", "cpu.instructions", "memory.loads", "memory.stores"}, __edpm_rv_clear_c);
    fflush(__edpm_out);
    __edpm_tid_clear_c++;
    __edpm_check(PAPI_start(__edpm_es_0), "PAPI_start");
#line 29
    __edpm_check(PAPI_accum(__edpm_es_0, __edpm_bv_0), "PAPI_accum");
    {
        long long __edpm_discard[4];
        __edpm_check(PAPI_stop(__edpm_es_0, __edpm_discard), "PAPI_stop");
    }
    __edpm_rv_shift_diagonal[0] = __edpm_bv_0[0];
    __edpm_rv_shift_diagonal[1] = __edpm_bv_0[1];
    __edpm_rv_shift_diagonal[2] = __edpm_bv_0[2];
    __edpm_rv_shift_diagonal[3] = __edpm_bv_0[3];
    __edpm_check(PAPI_start(__edpm_es_0), "PAPI_start");
#line 30
    for (i = 0; i < N; i++)
        a[i][i] += 1.0;
    __edpm_check(PAPI_accum(__edpm_es_0, __edpm_bv_0), "PAPI_accum");
    {
        long long __edpm_discard[4];
        __edpm_check(PAPI_stop(__edpm_es_0, __edpm_discard), "PAPI_stop");
    }
    __edpm_rv_shift_diagonal[0] = __edpm_bv_0[0] - __edpm_rv_shift_diagonal[0];
    __edpm_rv_shift_diagonal[1] = __edpm_bv_0[1] - __edpm_rv_shift_diagonal[1];
    __edpm_rv_shift_diagonal[2] = __edpm_bv_0[2] - __edpm_rv_shift_diagonal[2];
    __edpm_rv_shift_diagonal[3] = __edpm_bv_0[3] - __edpm_rv_shift_diagonal[3];
    __edpm_json_emit("shift-diagonal", __edpm_tid_shift_diagonal, 4, (const char *const[]){"cpu.cycles", "cpu.instructions", "memory.loads", "memory.stores"}, __edpm_rv_shift_diagonal);
    fflush(__edpm_out);
    __edpm_tid_shift_diagonal++;
    __edpm_check(PAPI_start(__edpm_es_0), "PAPI_start");
#line 33
    __edpm_check(PAPI_accum(__edpm_es_0, __edpm_bv_0), "PAPI_accum");
    {
        long long __edpm_discard[4];
        __edpm_check(PAPI_stop(__edpm_es_0, __edpm_discard), "PAPI_stop");
    }
    __edpm_rv_init_matrices[0] = __edpm_bv_0[0] - __edpm_rv_init_matrices[0];
    __edpm_rv_init_matrices[1] = __edpm_bv_0[1] - __edpm_rv_init_matrices[1];
    __edpm_rv_init_matrices[2] = __edpm_bv_0[2] - __edpm_rv_init_matrices[2];
    __edpm_rv_init_matrices[3] = __edpm_bv_0[3] - __edpm_rv_init_matrices[3];
    __edpm_json_emit("init-matrices", __edpm_tid_init_matrices, 4, (const char *const[]){"cpu.cycles", "cpu.instructions", "memory.loads", "memory.stores"}, __edpm_rv_init_matrices);
    fflush(__edpm_out);
    __edpm_tid_init_matrices++;
#line 34
}

static void multiply(void)
{
    int i, j, k;
    double sum;

    memset(__edpm_bv_1, 0, sizeof __edpm_bv_1);
    __edpm_rv_multiply[0] = __edpm_bv_1[0];
    __edpm_rv_multiply[1] = __edpm_bv_1[1];
    __edpm_rv_multiply[2] = __edpm_bv_1[2];
    __edpm_rv_multiply[3] = __edpm_bv_1[3];
    __edpm_check(PAPI_start(__edpm_es_1), "PAPI_start");
#line 42
    __edpm_check(PAPI_accum(__edpm_es_1, __edpm_bv_1), "PAPI_accum");
    {
        long long __edpm_discard[4];
        __edpm_check(PAPI_stop(__edpm_es_1, __edpm_discard), "PAPI_stop");
    }
    __edpm_rv_transpose[0] = __edpm_bv_1[0];
    __edpm_rv_transpose[1] = __edpm_bv_1[1];
    __edpm_rv_transpose[2] = __edpm_bv_1[2];
    __edpm_rv_transpose[3] = __edpm_bv_1[3];
    __edpm_check(PAPI_start(__edpm_es_1), "PAPI_start");
#line 43
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            bt[j][i] = b[i][j];
    __edpm_check(PAPI_accum(__edpm_es_1, __edpm_bv_1), "PAPI_accum");
    {
        long long __edpm_discard[4];
        __edpm_check(PAPI_stop(__edpm_es_1, __edpm_discard), "PAPI_stop");
    }
    __edpm_rv_transpose[0] = __edpm_bv_1[0] - __edpm_rv_transpose[0];
    __edpm_rv_transpose[1] = __edpm_bv_1[1] - __edpm_rv_transpose[1];
    __edpm_rv_transpose[2] = __edpm_bv_1[2] - __edpm_rv_transpose[2];
    __edpm_rv_transpose[3] = __edpm_bv_1[3] - __edpm_rv_transpose[3];
    __edpm_json_emit("transpose", __edpm_tid_transpose, 4, (const char *const[]){"cpu.cycles", "cpu.instructions", "memory.loads", "memory.stores"}, __edpm_rv_transpose);
    fflush(__edpm_out);
    __edpm_tid_transpose++;
    __edpm_check(PAPI_start(__edpm_es_1), "PAPI_start");
#line 47
    __edpm_check(PAPI_accum(__edpm_es_1, __edpm_bv_1), "PAPI_accum");
    {
        long long __edpm_discard[4];
        __edpm_check(PAPI_stop(__edpm_es_1, __edpm_discard), "PAPI_stop");
    }
    __edpm_rv_multiply_iterated[0] = __edpm_bv_1[0];
    __edpm_rv_multiply_iterated[1] = __edpm_bv_1[1];
    __edpm_rv_multiply_iterated[2] = __edpm_bv_1[2];
    __edpm_rv_multiply_iterated[3] = __edpm_bv_1[3];
    __edpm_check(PAPI_start(__edpm_es_1), "PAPI_start");
#line 48
    for (i = 0; i < N; i++) {
        for (j = 0; j < N; j++) {
            sum = 0.0;
            for (k = 0; k < N; k++)
                sum += a[i][k] * bt[j][k];
            c[i][j] = sum;
        }
    }
    __edpm_check(PAPI_accum(__edpm_es_1, __edpm_bv_1), "PAPI_accum");
    {
        long long __edpm_discard[4];
        __edpm_check(PAPI_stop(__edpm_es_1, __edpm_discard), "PAPI_stop");
    }
    __edpm_rv_multiply_iterated[0] = __edpm_bv_1[0] - __edpm_rv_multiply_iterated[0];
    __edpm_rv_multiply_iterated[1] = __edpm_bv_1[1] - __edpm_rv_multiply_iterated[1];
    __edpm_rv_multiply_iterated[2] = __edpm_bv_1[2] - __edpm_rv_multiply_iterated[2];
    __edpm_rv_multiply_iterated[3] = __edpm_bv_1[3] - __edpm_rv_multiply_iterated[3];
    __edpm_json_emit("multiply-iterated", __edpm_tid_multiply_iterated, 4, (const char *const[]){"cpu.cycles", "cpu.instructions", "memory.loads", "memory.stores"}, __edpm_rv_multiply_iterated);
    fflush(__edpm_out);
    __edpm_tid_multiply_iterated++;
    __edpm_check(PAPI_start(__edpm_es_1), "PAPI_start");
#line 57
    __edpm_check(PAPI_accum(__edpm_es_1, __edpm_bv_1), "PAPI_accum");
    {
        long long __edpm_discard[4];
        __edpm_check(PAPI_stop(__edpm_es_1, __edpm_discard), "PAPI_stop");
    }
    __edpm_rv_halve[0] = __edpm_bv_1[0];
    __edpm_rv_halve[1] = __edpm_bv_1[1];
    __edpm_rv_halve[2] = __edpm_bv_1[2];
    __edpm_rv_halve[3] = __edpm_bv_1[3];
    __edpm_check(PAPI_start(__edpm_es_1), "PAPI_start");
#line 58
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            c[i][j] *= 0.5;
    __edpm_check(PAPI_accum(__edpm_es_1, __edpm_bv_1), "PAPI_accum");
    {
        long long __edpm_discard[4];
        __edpm_check(PAPI_stop(__edpm_es_1, __edpm_discard), "PAPI_stop");
    }
    __edpm_rv_halve[0] = __edpm_bv_1[0] - __edpm_rv_halve[0];
    __edpm_rv_halve[1] = __edpm_bv_1[1] - __edpm_rv_halve[1];
    __edpm_rv_halve[2] = __edpm_bv_1[2] - __edpm_rv_halve[2];
    __edpm_rv_halve[3] = __edpm_bv_1[3] - __edpm_rv_halve[3];
    __edpm_json_emit("halve", __edpm_tid_halve, 4, (const char *const[]){"cpu.cycles", "cpu.instructions", "memory.loads", "memory.stores"}, __edpm_rv_halve);
    fflush(__edpm_out);
    __edpm_tid_halve++;
    __edpm_check(PAPI_start(__edpm_es_1), "PAPI_start");
#line 62
    __edpm_check(PAPI_accum(__edpm_es_1, __edpm_bv_1), "PAPI_accum");
    {
        long long __edpm_discard[4];
        __edpm_check(PAPI_stop(__edpm_es_1, __edpm_discard), "PAPI_stop");
    }
    __edpm_rv_bump_diagonal[0] = __edpm_bv_1[0];
    __edpm_rv_bump_diagonal[1] = __edpm_bv_1[1];
    __edpm_rv_bump_diagonal[2] = __edpm_bv_1[2];
    __edpm_rv_bump_diagonal[3] = __edpm_bv_1[3];
    __edpm_check(PAPI_start(__edpm_es_1), "PAPI_start");
#line 63
    for (i = 0; i < N; i++)
        c[i][i] += 1.0;
    __edpm_check(PAPI_accum(__edpm_es_1, __edpm_bv_1), "PAPI_accum");
    {
        long long __edpm_discard[4];
        __edpm_check(PAPI_stop(__edpm_es_1, __edpm_discard), "PAPI_stop");
    }
    __edpm_rv_bump_diagonal[0] = __edpm_bv_1[0] - __edpm_rv_bump_diagonal[0];
    __edpm_rv_bump_diagonal[1] = __edpm_bv_1[1] - __edpm_rv_bump_diagonal[1];
    __edpm_rv_bump_diagonal[2] = __edpm_bv_1[2] - __edpm_rv_bump_diagonal[2];
    __edpm_rv_bump_diagonal[3] = __edpm_bv_1[3] - __edpm_rv_bump_diagonal[3];
    __edpm_json_emit("bump-diagonal", __edpm_tid_bump_diagonal, 4, (const char *const[]){"cpu.cycles", "cpu.instructions", "memory.loads", "memory.stores"}, __edpm_rv_bump_diagonal);
    fflush(__edpm_out);
    __edpm_tid_bump_diagonal++;
    __edpm_check(PAPI_start(__edpm_es_1), "PAPI_start");
#line 66
    __edpm_check(PAPI_accum(__edpm_es_1, __edpm_bv_1), "PAPI_accum");
    {
        long long __edpm_discard[4];
        __edpm_check(PAPI_stop(__edpm_es_1, __edpm_discard), "PAPI_stop");
    }
    __edpm_rv_multiply[0] = __edpm_bv_1[0] - __edpm_rv_multiply[0];
    __edpm_rv_multiply[1] = __edpm_bv_1[1] - __edpm_rv_multiply[1];
    __edpm_rv_multiply[2] = __edpm_bv_1[2] - __edpm_rv_multiply[2];
    __edpm_rv_multiply[3] = __edpm_bv_1[3] - __edpm_rv_multiply[3];
    __edpm_json_emit("multiply", __edpm_tid_multiply, 4, (const char *const[]){"cpu.cycles", "cpu.instructions", "memory.loads", "memory.stores"}, __edpm_rv_multiply);
    fflush(__edpm_out);
    __edpm_tid_multiply++;
#line 67
}

static double checksum(void)
{
    int i, j;
    double sum = 0.0, trace = 0.0, peak = 0.0, total;

    memset(__edpm_bv_2, 0, sizeof __edpm_bv_2);
    __edpm_rv_checksum[0] = __edpm_bv_2[0];
    __edpm_rv_checksum[1] = __edpm_bv_2[1];
    __edpm_rv_checksum[2] = __edpm_bv_2[2];
    __edpm_rv_checksum[3] = __edpm_bv_2[3];
    __edpm_check(PAPI_start(__edpm_es_2), "PAPI_start");
#line 75
    __edpm_check(PAPI_accum(__edpm_es_2, __edpm_bv_2), "PAPI_accum");
    {
        long long __edpm_discard[4];
        __edpm_check(PAPI_stop(__edpm_es_2, __edpm_discard), "PAPI_stop");
    }
    __edpm_rv_sum[0] = __edpm_bv_2[0];
    __edpm_rv_sum[1] = __edpm_bv_2[1];
    __edpm_rv_sum[2] = __edpm_bv_2[2];
    __edpm_rv_sum[3] = __edpm_bv_2[3];
    __edpm_check(PAPI_start(__edpm_es_2), "PAPI_start");
#line 76
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            sum += c[i][j];
    __edpm_check(PAPI_accum(__edpm_es_2, __edpm_bv_2), "PAPI_accum");
    {
        long long __edpm_discard[4];
        __edpm_check(PAPI_stop(__edpm_es_2, __edpm_discard), "PAPI_stop");
    }
    __edpm_rv_sum[0] = __edpm_bv_2[0] - __edpm_rv_sum[0];
    __edpm_rv_sum[1] = __edpm_bv_2[1] - __edpm_rv_sum[1];
    __edpm_rv_sum[2] = __edpm_bv_2[2] - __edpm_rv_sum[2];
    __edpm_rv_sum[3] = __edpm_bv_2[3] - __edpm_rv_sum[3];
    __edpm_json_emit("sum", __edpm_tid_sum, 4, (const char *const[]){"cpu.cycles", "cpu.instructions", "memory.loads", "memory.stores"}, __edpm_rv_sum);
    fflush(__edpm_out);
    __edpm_tid_sum++;
    __edpm_check(PAPI_start(__edpm_es_2), "PAPI_start");
#line 80
    __edpm_check(PAPI_accum(__edpm_es_2, __edpm_bv_2), "PAPI_accum");
    {
        long long __edpm_discard[4];
        __edpm_check(PAPI_stop(__edpm_es_2, __edpm_discard), "PAPI_stop");
    }
    __edpm_rv_trace[0] = __edpm_bv_2[0];
    __edpm_rv_trace[1] = __edpm_bv_2[1];
    __edpm_rv_trace[2] = __edpm_bv_2[2];
    __edpm_rv_trace[3] = __edpm_bv_2[3];
    __edpm_check(PAPI_start(__edpm_es_2), "PAPI_start");
#line 81
    for (i = 0; i < N; i++)
        trace += c[i][i];
    __edpm_check(PAPI_accum(__edpm_es_2, __edpm_bv_2), "PAPI_accum");
    {
        long long __edpm_discard[4];
        __edpm_check(PAPI_stop(__edpm_es_2, __edpm_discard), "PAPI_stop");
    }
    __edpm_rv_trace[0] = __edpm_bv_2[0] - __edpm_rv_trace[0];
    __edpm_rv_trace[1] = __edpm_bv_2[1] - __edpm_rv_trace[1];
    __edpm_rv_trace[2] = __edpm_bv_2[2] - __edpm_rv_trace[2];
    __edpm_rv_trace[3] = __edpm_bv_2[3] - __edpm_rv_trace[3];
    __edpm_json_emit("trace", __edpm_tid_trace, 4, (const char *const[]){"cpu.cycles", "cpu.instructions", "memory.loads", "memory.stores"}, __edpm_rv_trace);
    fflush(__edpm_out);
    __edpm_tid_trace++;
    __edpm_check(PAPI_start(__edpm_es_2), "PAPI_start");
#line 84
    __edpm_check(PAPI_accum(__edpm_es_2, __edpm_bv_2), "PAPI_accum");
    {
        long long __edpm_discard[4];
        __edpm_check(PAPI_stop(__edpm_es_2, __edpm_discard), "PAPI_stop");
    }
    __edpm_rv_peak[0] = __edpm_bv_2[0];
    __edpm_rv_peak[1] = __edpm_bv_2[1];
    __edpm_rv_peak[2] = __edpm_bv_2[2];
    __edpm_rv_peak[3] = __edpm_bv_2[3];
    __edpm_check(PAPI_start(__edpm_es_2), "PAPI_start");
#line 85
    for (i = 0; i < N; i++)
        for (j = 0; j < N; j++)
            if (c[i][j] > peak)
                peak = c[i][j];
    __edpm_check(PAPI_accum(__edpm_es_2, __edpm_bv_2), "PAPI_accum");
    {
        long long __edpm_discard[4];
        __edpm_check(PAPI_stop(__edpm_es_2, __edpm_discard), "PAPI_stop");
    }
    __edpm_rv_peak[0] = __edpm_bv_2[0] - __edpm_rv_peak[0];
    __edpm_rv_peak[1] = __edpm_bv_2[1] - __edpm_rv_peak[1];
    __edpm_rv_peak[2] = __edpm_bv_2[2] - __edpm_rv_peak[2];
    __edpm_rv_peak[3] = __edpm_bv_2[3] - __edpm_rv_peak[3];
    __edpm_json_emit("peak", __edpm_tid_peak, 4, (const char *const[]){"cpu.cycles", "cpu.instructions", "memory.loads", "memory.stores"}, __edpm_rv_peak);
    fflush(__edpm_out);
    __edpm_tid_peak++;
    __edpm_check(PAPI_start(__edpm_es_2), "PAPI_start");
#line 90
    __edpm_check(PAPI_accum(__edpm_es_2, __edpm_bv_2), "PAPI_accum");
    {
        long long __edpm_discard[4];
        __edpm_check(PAPI_stop(__edpm_es_2, __edpm_discard), "PAPI_stop");
    }
    __edpm_rv_combine[0] = __edpm_bv_2[0];
    __edpm_rv_combine[1] = __edpm_bv_2[1];
    __edpm_rv_combine[2] = __edpm_bv_2[2];
    __edpm_rv_combine[3] = __edpm_bv_2[3];
    __edpm_check(PAPI_start(__edpm_es_2), "PAPI_start");
#line 91
    total = sum + trace / N + peak;
    __edpm_check(PAPI_accum(__edpm_es_2, __edpm_bv_2), "PAPI_accum");
    {
        long long __edpm_discard[4];
        __edpm_check(PAPI_stop(__edpm_es_2, __edpm_discard), "PAPI_stop");
    }
    __edpm_rv_combine[0] = __edpm_bv_2[0] - __edpm_rv_combine[0];
    __edpm_rv_combine[1] = __edpm_bv_2[1] - __edpm_rv_combine[1];
    __edpm_rv_combine[2] = __edpm_bv_2[2] - __edpm_rv_combine[2];
    __edpm_rv_combine[3] = __edpm_bv_2[3] - __edpm_rv_combine[3];
    __edpm_json_emit("combine", __edpm_tid_combine, 4, (const char *const[]){"cpu.cycles", "cpu.instructions", "memory.loads", "memory.stores"}, __edpm_rv_combine);
    fflush(__edpm_out);
    __edpm_tid_combine++;
    __edpm_check(PAPI_start(__edpm_es_2), "PAPI_start");
#line 93
    __edpm_check(PAPI_accum(__edpm_es_2, __edpm_bv_2), "PAPI_accum");
    {
        long long __edpm_discard[4];
        __edpm_check(PAPI_stop(__edpm_es_2, __edpm_discard), "PAPI_stop");
    }
    __edpm_rv_checksum[0] = __edpm_bv_2[0] - __edpm_rv_checksum[0];
    __edpm_rv_checksum[1] = __edpm_bv_2[1] - __edpm_rv_checksum[1];
    __edpm_rv_checksum[2] = __edpm_bv_2[2] - __edpm_rv_checksum[2];
    __edpm_rv_checksum[3] = __edpm_bv_2[3] - __edpm_rv_checksum[3];
    __edpm_json_emit("checksum", __edpm_tid_checksum, 4, (const char *const[]){"cpu.cycles", "cpu.instructions", "memory.loads", "memory.stores"}, __edpm_rv_checksum);
    fflush(__edpm_out);
    __edpm_tid_checksum++;
#line 94
    __edpm_check(PAPI_cleanup_eventset(__edpm_es_0), "PAPI_cleanup_eventset");
    __edpm_check(PAPI_destroy_eventset(&__edpm_es_0), "PAPI_destroy_eventset");
    __edpm_check(PAPI_cleanup_eventset(__edpm_es_1), "PAPI_cleanup_eventset");
    __edpm_check(PAPI_destroy_eventset(&__edpm_es_1), "PAPI_destroy_eventset");
    __edpm_check(PAPI_cleanup_eventset(__edpm_es_2), "PAPI_cleanup_eventset");
    __edpm_check(PAPI_destroy_eventset(&__edpm_es_2), "PAPI_destroy_eventset");
    __edpm_json_close();
    PAPI_shutdown();
#line 95
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
