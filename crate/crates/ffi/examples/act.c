#include <stdio.h>
#include "screenq.h"

int main(void) {
    ScreenqContext *ctx = NULL;
    if (screenq_context_new("sl2", 4, "generic", 0, &ctx) != SCREENQ_STATUS_OK) {
        fprintf(stderr, "%s\n", screenq_last_error_message());
        return 2;
    }
    char *out = NULL;
    ScreenqStatus st = screenq_act(ctx, "E1 F1", "", &out);
    if (st == SCREENQ_STATUS_OK) {
        fputs(out, stdout);
        screenq_string_free(out);
    } else {
        fprintf(stderr, "%s\n", screenq_last_error_message());
    }
    screenq_context_free(ctx);
    return st == SCREENQ_STATUS_OK ? 0 : 1;
}
