#include <stdio.h>
#include "evoalg.h"

int main(void) {
    EvoAlgebra *a = NULL;
    const char *params[] = {"1", "1"};
    if (evo_catalog_build("N_{5,9}", params, 2, &a) != EVO_STATUS_OK) {
        fprintf(stderr, "%s\n", evo_last_error());
        return 1;
    }
    size_t d = 0, dp = 0, in = 0;
    evo_derivation_dim(a, &d);
    evo_derived_dim(a, &dp);
    evo_inner_derivation_dim(a, &in);
    printf("N_{5,9}(1,1): dim D = %zu, dim D' = %zu, dim In = %zu\n", d, dp, in);
    evo_algebra_free(a);
    return d == 7 && dp == 6 && in == 3 ? 0 : 1;
}
