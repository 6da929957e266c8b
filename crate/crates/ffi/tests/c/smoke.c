#include <math.h>
#include <stdio.h>
#include "tlj.h"

int main(void) {
    TljContext *ctx = NULL;
    TljBraid *b = NULL;
    TljScalar *s = NULL;
    int word[3] = {1, 1, 1};
    double re = 0, im = 0;

    if (tlj_context_root(16, 1, &ctx) != TLJ_STATUS_OK) return 1;
    if (tlj_braid_new(2, word, 3, &b) != TLJ_STATUS_OK) return 2;
    if (tlj_bracket(ctx, b, &s) != TLJ_STATUS_OK) return 3;
    if (tlj_scalar_approx(s, &re, &im) != TLJ_STATUS_OK) return 4;
    printf("%.12f %.12f\n", re, im);
    tlj_scalar_free(s);

    if (tlj_jw_trace(ctx, 4, &s) != TLJ_STATUS_CHEBYSHEV_ROOT) return 5;
    if (tlj_last_error_message() == NULL) return 6;

    tlj_braid_free(b);
    tlj_context_free(ctx);
    return 0;
}
