#include <stdio.h>
#include <string.h>

#include "hopfcoh.h"

int main(void) {
    HopfcohWorkspace *ws = NULL;
    if (hopfcoh_workspace_fixture("dual_kc2_gf2", &ws) != HOPFCOH_STATUS_OK) {
        fprintf(stderr, "%s\n", hopfcoh_last_error());
        return 10;
    }
    size_t dims[5];
    size_t written = 0;
    if (hopfcoh_derived_coinvariants(ws, "k", 4, dims, 5, &written) != HOPFCOH_STATUS_OK || written != 5) {
        return 11;
    }
    for (size_t p = 0; p < written; p++) {
        if (dims[p] != 1) {
            return 12;
        }
    }
    if (hopfcoh_derived_coinvariants(ws, "nope", 4, dims, 5, &written) != HOPFCOH_STATUS_PARSE) {
        return 13;
    }
    if (strstr(hopfcoh_last_error(), "nope") == NULL) {
        return 14;
    }
    char *json = NULL;
    if (hopfcoh_compute(ws, "integrals", NULL, NULL, NULL, NULL, 3, &json) != HOPFCOH_STATUS_OK) {
        return 15;
    }
    int ok = strstr(json, "\"cosemisimple\": false") != NULL;
    hopfcoh_string_free(json);
    hopfcoh_workspace_free(ws);
    printf("smoke ok\n");
    return ok ? 0 : 16;
}
